// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>

#include "beamtrace/trace.hpp"

namespace beamtrace {

/// Maps the canonical trace fields to the column names of an input CSV.
/// Defaults are the canonical schema itself.
struct ColumnSchema {
    std::string timestamp = "timestamp";
    std::string lat = "lat";
    std::string lon = "lon";
    std::string rsrp = "rsrp_dbm";
    std::string snr = "snr_db";
    std::string beam_id = "beam_id";
    std::string rank = "rank";
    std::string throughput = "throughput_mbps";
};

/// Parses a UTF-8 CSV with a header row into a trace, stably sorted by
/// timestamp. Empty cells mean "absent"; a malformed numeric cell or an
/// invariant violation is an error, never silently skipped.
/// Throws MissingColumn, MalformedRow, EmptyTrace.
DriveTrace parse_trace(std::istream& in, const ColumnSchema& schema = {},
                       const std::string& source = "");

DriveTrace parse_trace_file(const std::filesystem::path& path,
                            const ColumnSchema& schema = {});

/// Writes the canonical schema
/// `timestamp,lat,lon,rsrp_dbm,snr_db,beam_id,rank,throughput_mbps` with
/// shortest round-trip float formatting and LF line endings. Validates the
/// trace first so emitted files always re-parse.
void serialize_trace(const DriveTrace& t, std::ostream& out);

std::string serialize_trace(const DriveTrace& t);

/// Atomic write: temp file in the target directory, then rename.
void write_trace_file(const DriveTrace& t, const std::filesystem::path& path);

/// Atomic write of arbitrary text (JSON reports, ECDF CSVs).
void write_text_file(const std::string& text, const std::filesystem::path& path);

/// Shortest round-trip decimal form of a double (std::to_chars).
std::string format_double(double v);

}  // namespace beamtrace
