// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace beamtrace {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- ingestion ---
struct MissingColumn : Error {
    explicit MissingColumn(const std::string& column)
        : Error("missing required column: " + column), column_name(column) {}
    std::string column_name;
};

struct MalformedRow : Error {
    MalformedRow(std::size_t row, const std::string& reason)
        : Error("malformed row " + std::to_string(row) + ": " + reason), row_index(row) {}
    std::size_t row_index;  // 1-based data row (header not counted)
};

struct EmptyTrace : Error {
    EmptyTrace() : Error("trace contains no valid samples") {}
    using Error::Error;
};

// --- band configuration ---
struct BandwidthOverflow : Error {
    using Error::Error;
};
struct UnsortedBeams : Error {
    using Error::Error;
};

// --- numerics ---
struct DomainError : Error {
    using Error::Error;
};
struct NonConvergence : Error {
    using Error::Error;
};
struct DegenerateSample : Error {
    using Error::Error;
};

// --- statistics ---
struct NoBeamData : Error {
    NoBeamData() : Error("no sample carries a beam id") {}
};
struct NoTransitions : Error {
    NoTransitions() : Error("no beam change observed; change probabilities undefined") {}
};
struct EmptySample : Error {
    EmptySample() : Error("sample set is empty") {}
};
struct EmptyInput : Error {
    EmptyInput() : Error("no samples and no lost packets") {}
};
struct NoRankData : Error {
    NoRankData() : Error("no sample carries a rank") {}
};
struct QuantileInLossRegion : Error {
    using Error::Error;
};
struct EmptyReport : Error {
    EmptyReport() : Error("every candidate distribution failed to fit") {}
};

// --- synthesis ---
struct InfeasibleAdjacency : Error {
    using Error::Error;
};

}  // namespace beamtrace
