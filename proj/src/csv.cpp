// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "beamtrace/csv.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "beamtrace/errors.hpp"

namespace beamtrace {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    cells.push_back(cur);
    return cells;
}

void strip_cr(std::string& s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
}

double parse_double_cell(const std::string& cell, std::size_t row, const std::string& col) {
    double v = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw MalformedRow(row, "cell '" + cell + "' in column " + col + " is not a number");
    if (!std::isfinite(v))
        throw MalformedRow(row, "non-finite value in column " + col);
    return v;
}

int parse_int_cell(const std::string& cell, std::size_t row, const std::string& col) {
    int v = 0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw MalformedRow(row, "cell '" + cell + "' in column " + col + " is not an integer");
    return v;
}

// Column index of `name`, or -1 when the column is absent.
int find_column(const std::vector<std::string>& header, const std::string& name) {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return static_cast<int>(i);
    return -1;
}

}  // namespace

DriveTrace parse_trace(std::istream& in, const ColumnSchema& schema, const std::string& source) {
    std::string line;
    if (!std::getline(in, line)) throw EmptyTrace("input has no header row");
    strip_cr(line);
    const std::vector<std::string> header = split_csv_line(line);

    const int i_ts = find_column(header, schema.timestamp);
    const int i_lat = find_column(header, schema.lat);
    const int i_lon = find_column(header, schema.lon);
    if (i_ts < 0) throw MissingColumn(schema.timestamp);
    if (i_lat < 0) throw MissingColumn(schema.lat);
    if (i_lon < 0) throw MissingColumn(schema.lon);
    const int i_rsrp = find_column(header, schema.rsrp);
    const int i_snr = find_column(header, schema.snr);
    const int i_beam = find_column(header, schema.beam_id);
    const int i_rank = find_column(header, schema.rank);
    const int i_tp = find_column(header, schema.throughput);

    DriveTrace trace;
    trace.source = source;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        strip_cr(line);
        ++row;
        if (line.empty()) continue;
        const std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() != header.size())
            throw MalformedRow(row, "expected " + std::to_string(header.size()) + " cells, got " +
                                        std::to_string(cells.size()));
        auto cell = [&](int idx) -> const std::string& { return cells[static_cast<std::size_t>(idx)]; };
        auto has = [&](int idx) { return idx >= 0 && !cell(idx).empty(); };

        DriveSample s;
        if (!has(i_ts)) throw MalformedRow(row, "empty timestamp");
        if (!has(i_lat)) throw MalformedRow(row, "empty lat");
        if (!has(i_lon)) throw MalformedRow(row, "empty lon");
        s.timestamp = parse_double_cell(cell(i_ts), row, schema.timestamp);
        s.lat = parse_double_cell(cell(i_lat), row, schema.lat);
        s.lon = parse_double_cell(cell(i_lon), row, schema.lon);
        if (has(i_rsrp)) s.rsrp_dbm = parse_double_cell(cell(i_rsrp), row, schema.rsrp);
        if (has(i_snr)) s.snr_db = parse_double_cell(cell(i_snr), row, schema.snr);
        if (has(i_beam)) s.beam_id = parse_int_cell(cell(i_beam), row, schema.beam_id);
        if (has(i_rank)) s.rank = parse_int_cell(cell(i_rank), row, schema.rank);
        if (has(i_tp)) s.throughput_mbps = parse_double_cell(cell(i_tp), row, schema.throughput);

        try {
            validate_sample(s);
        } catch (const DomainError& e) {
            throw MalformedRow(row, e.what());
        }
        trace.samples.push_back(s);
    }
    if (trace.samples.empty()) throw EmptyTrace();

    // Simultaneous samples keep input order.
    std::stable_sort(trace.samples.begin(), trace.samples.end(),
                     [](const DriveSample& a, const DriveSample& b) {
                         return a.timestamp < b.timestamp;
                     });
    return trace;
}

DriveTrace parse_trace_file(const std::filesystem::path& path, const ColumnSchema& schema) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    return parse_trace(in, schema, path.string());
}

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

void serialize_trace(const DriveTrace& t, std::ostream& out) {
    validate_trace(t);
    out << "timestamp,lat,lon,rsrp_dbm,snr_db,beam_id,rank,throughput_mbps\n";
    for (const DriveSample& s : t.samples) {
        out << format_double(s.timestamp) << ',' << format_double(s.lat) << ','
            << format_double(s.lon) << ',';
        if (s.rsrp_dbm) out << format_double(*s.rsrp_dbm);
        out << ',';
        if (s.snr_db) out << format_double(*s.snr_db);
        out << ',';
        if (s.beam_id) out << *s.beam_id;
        out << ',';
        if (s.rank) out << *s.rank;
        out << ',';
        if (s.throughput_mbps) out << format_double(*s.throughput_mbps);
        out << '\n';
    }
}

std::string serialize_trace(const DriveTrace& t) {
    std::ostringstream os;
    serialize_trace(t, os);
    return os.str();
}

void write_text_file(const std::string& text, const std::filesystem::path& path) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp.string());
        out << text;
    }
    std::filesystem::rename(tmp, path);
}

void write_trace_file(const DriveTrace& t, const std::filesystem::path& path) {
    write_text_file(serialize_trace(t), path);
}

}  // namespace beamtrace
