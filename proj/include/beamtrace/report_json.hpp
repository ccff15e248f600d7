// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <string>

#include "beamtrace/candidates.hpp"
#include "beamtrace/ecdf.hpp"
#include "beamtrace/rank.hpp"
#include "beamtrace/transitions.hpp"

namespace beamtrace {

// Report outputs are written with an insertion-ordered writer and
// 17-significant-digit floats so identical inputs always produce identical
// bytes. (Inputs are parsed with a general JSON library; this writer is for
// outputs only.)
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& k);
    JsonWriter& value(double v);
    JsonWriter& value(std::uint64_t v);
    JsonWriter& value(int v);
    JsonWriter& value(const std::string& v);
    JsonWriter& value(const char* v);
    JsonWriter& value(bool v);
    JsonWriter& null_value();

    /// Finished document plus trailing newline.
    std::string str() const;

private:
    void separate();
    std::string out_;
    bool need_comma_ = false;
};

/// %.17g rendering used for every float in report output.
std::string json_double(double v);

std::string fit_report_to_json(const FitReport& report);
std::string transition_model_to_json(const TransitionModel& m);

void append_fit_report(JsonWriter& w, const FitReport& report);
void append_transition_model(JsonWriter& w, const TransitionModel& m);
void append_rank_table(JsonWriter& w, const RankTable& t);

/// Two-column plot-ready export: header `value,cum_prob`, one point per line.
std::string ecdf_to_csv(const EcdfCurve& c);

/// One-column export of SSR distances: header `ssr_distance_m`.
std::string distances_to_csv(std::span<const double> distances_m);

/// Reads back a `value,cum_prob` CSV written by ecdf_to_csv.
EcdfCurve ecdf_from_csv_text(const std::string& text, double loss_fraction);

}  // namespace beamtrace
