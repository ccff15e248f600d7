// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "beamtrace/report_json.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "beamtrace/errors.hpp"

namespace beamtrace {

std::string json_double(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void JsonWriter::separate() {
    if (need_comma_) out_ += ',';
    need_comma_ = false;
}

JsonWriter& JsonWriter::begin_object() {
    separate();
    out_ += '{';
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    out_ += '}';
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    separate();
    out_ += '[';
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    out_ += ']';
    need_comma_ = true;
    return *this;
}

namespace {
std::string escape(const std::string& s) {
    std::string r;
    r.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': r += "\\\""; break;
            case '\\': r += "\\\\"; break;
            case '\n': r += "\\n"; break;
            case '\r': r += "\\r"; break;
            case '\t': r += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    r += buf;
                } else {
                    r += c;
                }
        }
    }
    return r;
}
}  // namespace

JsonWriter& JsonWriter::key(const std::string& k) {
    separate();
    out_ += '"';
    out_ += escape(k);
    out_ += "\":";
    return *this;
}

JsonWriter& JsonWriter::value(double v) {
    separate();
    out_ += json_double(v);
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t v) {
    separate();
    out_ += std::to_string(v);
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(int v) {
    separate();
    out_ += std::to_string(v);
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
    separate();
    out_ += '"';
    out_ += escape(v);
    out_ += '"';
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(const char* v) { return value(std::string(v)); }

JsonWriter& JsonWriter::value(bool v) {
    separate();
    out_ += v ? "true" : "false";
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::null_value() {
    separate();
    out_ += "null";
    need_comma_ = true;
    return *this;
}

std::string JsonWriter::str() const { return out_ + "\n"; }

void append_fit_report(JsonWriter& w, const FitReport& report) {
    w.begin_object();
    w.key("winner").value(report.winner);
    w.key("candidates").begin_array();
    for (const CandidateFit& c : report.candidates) {
        w.begin_object();
        w.key("name").value(c.name);
        w.key("ok").value(c.ok);
        if (c.ok) {
            w.key("params").begin_object();
            for (const auto& [k, v] : c.params) w.key(k).value(v);
            w.end_object();
            w.key("ks_d").value(c.ks_d);
            w.key("n").value(static_cast<std::uint64_t>(c.n));
            w.key("ks_critical_05").value(c.ks_critical_05);
            w.key("within_critical").value(c.within_critical);
        } else {
            w.key("error").value(c.error);
        }
        w.end_object();
    }
    w.end_array();
    w.end_object();
}

std::string fit_report_to_json(const FitReport& report) {
    JsonWriter w;
    append_fit_report(w, report);
    return w.str();
}

void append_transition_model(JsonWriter& w, const TransitionModel& m) {
    w.begin_object();
    w.key("beam_angles_deg").begin_array();
    for (double a : m.beam_angles_deg) w.value(a);
    w.end_array();
    w.key("p_change_given_change").begin_object();
    for (const auto& [k, p] : m.p_change_given_change) w.key(std::to_string(k)).value(p);
    w.end_object();
    w.key("counts").begin_object();
    for (const auto& [k, c] : m.counts) w.key(std::to_string(k)).value(c);
    w.end_object();
    w.key("p_stay").value(m.p_stay);
    w.key("n_pairs").value(m.n_pairs);
    w.key("n_changes").value(m.n_changes);
    w.end_object();
}

std::string transition_model_to_json(const TransitionModel& m) {
    JsonWriter w;
    append_transition_model(w, m);
    return w.str();
}

void append_rank_table(JsonWriter& w, const RankTable& t) {
    w.begin_object();
    w.key("n").value(t.n);
    w.key("probabilities").begin_object();
    for (const auto& [rank, p] : t.probabilities) w.key(std::to_string(rank)).value(p);
    w.end_object();
    w.key("counts").begin_object();
    for (const auto& [rank, c] : t.counts) w.key(std::to_string(rank)).value(c);
    w.end_object();
    w.end_object();
}

std::string ecdf_to_csv(const EcdfCurve& c) {
    std::string out = "value,cum_prob\n";
    char buf[96];
    for (const auto& [v, p] : c.points) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", v, p);
        out += buf;
    }
    return out;
}

std::string distances_to_csv(std::span<const double> distances_m) {
    std::string out = "ssr_distance_m\n";
    char buf[48];
    for (double d : distances_m) {
        std::snprintf(buf, sizeof(buf), "%.17g\n", d);
        out += buf;
    }
    return out;
}

EcdfCurve ecdf_from_csv_text(const std::string& text, double loss_fraction) {
    EcdfCurve c;
    c.loss_fraction = loss_fraction;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("value,cum_prob", 0) != 0)
        throw Error("not an ECDF CSV (missing value,cum_prob header)");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos) throw Error("malformed ECDF CSV line: " + line);
        double v = 0.0, p = 0.0;
        const auto r1 = std::from_chars(line.data(), line.data() + comma, v);
        const auto r2 =
            std::from_chars(line.data() + comma + 1, line.data() + line.size(), p);
        if (r1.ec != std::errc() || r2.ec != std::errc())
            throw Error("malformed ECDF CSV line: " + line);
        c.points.emplace_back(v, p);
    }
    c.n_effective = c.points.size();
    return c;
}

}  // namespace beamtrace
