// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

// beamtrace — drive-test beam-trace analytics and synthesis.
//
// Subcommands and exit codes:
//   ingest    raw CSVs -> canonical traces + summaries        (errors: 2)
//   fit       trace -> SSR fit report + distance CSV          (errors: 3)
//   simulate  spec + trajectory -> synthetic trace            (errors: 4)
//   analyze   trace -> per-band ECDFs / rank table            (errors: 5)
//   report    analyses -> consolidated comparison             (errors: 5)
//
// Every command is idempotent for identical inputs (and seed): outputs are
// written atomically and carry no clocks or machine identifiers.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "beamtrace/candidates.hpp"
#include "beamtrace/collapse.hpp"
#include "beamtrace/csv.hpp"
#include "beamtrace/ecdf.hpp"
#include "beamtrace/errors.hpp"
#include "beamtrace/geo.hpp"
#include "beamtrace/presets.hpp"
#include "beamtrace/rank.hpp"
#include "beamtrace/report_json.hpp"
#include "beamtrace/rng.hpp"
#include "beamtrace/ssr.hpp"
#include "beamtrace/synth.hpp"
#include "beamtrace/trace.hpp"
#include "beamtrace/transitions.hpp"

namespace fs = std::filesystem;
using namespace beamtrace;

namespace {

enum class Command { ingest, analyze, fit, simulate, report };

struct RunManifest {
    Command command = Command::ingest;
    std::vector<fs::path> inputs;
    fs::path config;
    fs::path output_dir;
    std::optional<std::uint64_t> seed;
};

// Inputs must exist up front and the output directory must be creatable;
// inputs are processed in lexicographic order so multi-file runs merge
// deterministically.
void validate_manifest(RunManifest& m) {
    std::sort(m.inputs.begin(), m.inputs.end());
    for (const fs::path& p : m.inputs)
        if (!fs::exists(p)) throw Error("input file does not exist: " + p.string());
    if (!m.config.empty() && !fs::exists(m.config))
        throw Error("config file does not exist: " + m.config.string());
    if (m.output_dir.empty()) throw Error("--out directory is required");
    fs::create_directories(m.output_dir);
}

ColumnSchema load_schema(const fs::path& path) {
    ColumnSchema schema;
    if (path.empty()) return schema;
    std::ifstream in(path);
    if (!in) throw Error("cannot open schema " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error("invalid schema JSON: " + std::string(e.what()));
    }
    auto get = [&](const char* key, std::string& field) {
        if (j.contains(key)) field = j.at(key).get<std::string>();
    };
    get("timestamp", schema.timestamp);
    get("lat", schema.lat);
    get("lon", schema.lon);
    get("rsrp_dbm", schema.rsrp);
    get("snr_db", schema.snr);
    get("beam_id", schema.beam_id);
    get("rank", schema.rank);
    get("throughput_mbps", schema.throughput);
    return schema;
}

std::size_t count_lost(const DriveTrace& t) {
    std::size_t lost = 0;
    for (const auto& s : t.samples)
        if (s.lost()) ++lost;
    return lost;
}

// ---- ingest ---------------------------------------------------------------

int cmd_ingest(RunManifest manifest, const fs::path& schema_path,
               const std::string& band_label) {
    try {
        validate_manifest(manifest);
        const ColumnSchema schema = load_schema(schema_path);
        for (const fs::path& input : manifest.inputs) {
            DriveTrace trace = parse_trace_file(input, schema);
            trace.band_label = band_label.empty() ? input.stem().string() : band_label;

            const fs::path trace_out =
                manifest.output_dir / (input.stem().string() + ".trace.csv");
            write_trace_file(trace, trace_out);

            const std::size_t lost = count_lost(trace);
            JsonWriter w;
            w.begin_object();
            w.key("input").value(input.string());
            w.key("band_label").value(trace.band_label);
            w.key("n_samples").value(static_cast<std::uint64_t>(trace.samples.size()));
            w.key("n_lost").value(static_cast<std::uint64_t>(lost));
            w.key("loss_fraction")
                .value(static_cast<double>(lost) /
                       static_cast<double>(trace.samples.size()));
            w.key("route_length_m").value(path_length_m(trace));
            w.key("duration_s")
                .value(trace.samples.back().timestamp - trace.samples.front().timestamp);
            w.key("output").value(trace_out.string());
            w.end_object();
            write_text_file(w.str(),
                            manifest.output_dir / (input.stem().string() + ".ingest.json"));
            std::cout << "ingested " << input.string() << ": " << trace.samples.size()
                      << " samples, " << lost << " lost\n";
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

// ---- fit --------------------------------------------------------------------

int cmd_fit(RunManifest manifest, const std::string& band_name, bool strict_beams,
            double collapse_radius) {
    try {
        validate_manifest(manifest);
        BandConfig band;
        if (!manifest.config.empty())
            band = load_band_config(manifest.config, band_name);
        else
            band = band_preset(band_name.empty() ? "mmwave_table2" : band_name);

        const DriveTrace raw = parse_trace_file(manifest.inputs.at(0));
        const DriveTrace trace = collapse_static_clusters(raw, collapse_radius);
        const BeamGapPolicy policy =
            strict_beams ? BeamGapPolicy::split : BeamGapPolicy::bridge;

        const SsrSampleSet ssr = extract_ssr_segments(trace, policy);
        const FitReport report = fit_candidates(ssr);

        JsonWriter w;
        w.begin_object();
        w.key("input").value(manifest.inputs.at(0).string());
        w.key("n_samples_raw").value(static_cast<std::uint64_t>(raw.samples.size()));
        w.key("n_samples_collapsed")
            .value(static_cast<std::uint64_t>(trace.samples.size()));
        w.key("collapse_radius_m").value(collapse_radius);
        w.key("beam_gap_policy").value(strict_beams ? "split" : "bridge");
        w.key("ssr").begin_object();
        w.key("n_distances").value(static_cast<std::uint64_t>(ssr.distances_m.size()));
        w.key("zero_length_runs").value(static_cast<std::uint64_t>(ssr.zero_length_runs));
        w.key("total_runs").value(static_cast<std::uint64_t>(ssr.total_runs));
        w.end_object();
        w.key("fit");
        append_fit_report(w, report);
        for (const CandidateFit& c : report.candidates) {
            if (c.name == "gamma" && c.ok) {
                w.key("gamma").begin_object();
                w.key("alpha").value(c.params.at(0).second);
                w.key("theta").value(c.params.at(1).second);
                w.end_object();
            }
        }
        w.key("transitions");
        try {
            const TransitionModel m =
                estimate_transition_model(trace, band.beam_angles_deg, policy);
            append_transition_model(w, m);
        } catch (const NoTransitions& e) {
            w.begin_object();
            w.key("error").value(e.what());
            w.key("n_changes").value(std::uint64_t{0});
            w.end_object();
        }
        w.end_object();

        write_text_file(w.str(), manifest.output_dir / "fit_report.json");
        write_text_file(distances_to_csv(ssr.distances_m),
                        manifest.output_dir / "ssr_distances.csv");
        std::cout << "fit winner: " << report.winner << " over "
                  << ssr.distances_m.size() << " SSR distances\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

// ---- simulate -----------------------------------------------------------------

int cmd_simulate(RunManifest manifest, bool seed_given, std::uint64_t seed) {
    try {
        validate_manifest(manifest);
        if (!seed_given)
            throw Error("simulate requires --seed; there is no silent default randomness");
        LoadedSynthesis loaded = load_synthesis_spec(manifest.config);
        loaded.spec.seed = seed;
        const Trajectory traj = load_trajectory(manifest.inputs.at(0));

        // beam-chain stats come from the same sub-seed the composed trace uses
        SynthesisSpec beams_only = loaded.spec;
        beams_only.seed = derive_seed(seed, 0);
        SimulationStats stats;
        simulate_beam_trace(traj, beams_only, &stats);
        const DriveTrace trace = synthesize_drive_trace(traj, loaded.spec, loaded.bs);

        const fs::path trace_out =
            manifest.output_dir / (loaded.spec.band_label + ".trace.csv");
        write_trace_file(trace, trace_out);

        JsonWriter w;
        w.begin_object();
        w.key("band_label").value(loaded.spec.band_label);
        w.key("seed").value(seed);
        w.key("n_samples").value(static_cast<std::uint64_t>(trace.samples.size()));
        w.key("segments_drawn").value(stats.segments_drawn);
        w.key("mean_segment_m").value(stats.mean_segment_m);
        w.key("output").value(trace_out.string());
        w.end_object();
        write_text_file(w.str(), manifest.output_dir / "simulate_summary.json");
        std::cout << "simulated " << trace.samples.size() << " samples, "
                  << stats.segments_drawn << " segments drawn, mean segment "
                  << format_double(stats.mean_segment_m) << " m\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}

// ---- analyze --------------------------------------------------------------

int cmd_analyze(RunManifest manifest, std::string band_label, double snr_cap) {
    try {
        validate_manifest(manifest);
        const fs::path& input = manifest.inputs.at(0);
        const DriveTrace trace = parse_trace_file(input);
        if (band_label.empty()) band_label = input.stem().string();

        const std::size_t n_lost = count_lost(trace);
        std::vector<double> throughput, snr;
        for (const auto& s : trace.samples) {
            if (s.throughput_mbps) throughput.push_back(*s.throughput_mbps);
            if (s.snr_db) snr.push_back(*s.snr_db);
        }

        JsonWriter w;
        w.begin_object();
        w.key("band_label").value(band_label);
        w.key("source").value(input.string());
        w.key("n_samples").value(static_cast<std::uint64_t>(trace.samples.size()));
        w.key("n_lost").value(static_cast<std::uint64_t>(n_lost));
        w.key("loss_fraction")
            .value(static_cast<double>(n_lost) /
                   static_cast<double>(trace.samples.size()));
        w.key("route_length_m").value(path_length_m(trace));

        auto emit_metric = [&](const char* key, const std::vector<double>& values,
                               const std::string& csv_name, bool capped) {
            w.key(key);
            if (values.empty()) {
                w.begin_object();
                w.key("error").value("no data");
                w.end_object();
                return;
            }
            const EcdfCurve curve = empirical_cdf_with_loss(values, n_lost);
            write_text_file(ecdf_to_csv(curve), manifest.output_dir / csv_name);
            w.begin_object();
            if (capped) w.key("cap_db").value(snr_cap);
            w.key("n").value(static_cast<std::uint64_t>(values.size()));
            w.key("n_lost").value(static_cast<std::uint64_t>(n_lost));
            w.key("loss_fraction").value(curve.loss_fraction);
            w.key("ecdf_csv").value(csv_name);
            w.end_object();
        };
        emit_metric("throughput_mbps", throughput, band_label + "_throughput_ecdf.csv",
                    false);
        emit_metric("snr_db", cap_values(snr, snr_cap), band_label + "_snr_ecdf.csv",
                    true);

        w.key("rank");
        try {
            const RankTable table = rank_occurrence(trace);
            w.begin_object();
            w.key("table");
            append_rank_table(w, table);
            w.key("prob_rank_above_2").value(prob_rank_above(table, 2));
            w.end_object();
        } catch (const NoRankData& e) {
            w.begin_object();
            w.key("error").value(e.what());
            w.end_object();
        }
        w.end_object();
        write_text_file(w.str(), manifest.output_dir / (band_label + "_analysis.json"));
        std::cout << "analyzed " << band_label << ": " << trace.samples.size()
                  << " samples\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    }
}

// ---- report -----------------------------------------------------------------

struct BandAnalysis {
    std::string label;
    fs::path dir;
    nlohmann::json j;
    std::optional<EcdfCurve> throughput, snr;
};

std::optional<EcdfCurve> load_curve(const BandAnalysis& a, const char* key) {
    if (!a.j.contains(key) || a.j.at(key).contains("error")) return std::nullopt;
    const auto& metric = a.j.at(key);
    std::ifstream in(a.dir / metric.at("ecdf_csv").get<std::string>());
    if (!in) throw Error("missing ECDF CSV for " + a.label);
    std::stringstream ss;
    ss << in.rdbuf();
    return ecdf_from_csv_text(ss.str(), metric.at("loss_fraction").get<double>());
}

int cmd_report(RunManifest manifest, const std::vector<double>& quantiles,
               double threshold_mbps) {
    try {
        validate_manifest(manifest);
        std::vector<BandAnalysis> bands;
        for (const fs::path& input : manifest.inputs) {
            BandAnalysis a;
            a.dir = input.parent_path();
            std::ifstream in(input);
            if (!in) throw Error("cannot open " + input.string());
            try {
                in >> a.j;
            } catch (const nlohmann::json::exception& e) {
                throw Error("invalid analysis JSON " + input.string() + ": " + e.what());
            }
            a.label = a.j.at("band_label").get<std::string>();
            for (const auto& other : bands)
                if (other.label == a.label)
                    throw Error("inconsistent band labels: '" + a.label +
                                "' appears in more than one analysis");
            a.throughput = load_curve(a, "throughput_mbps");
            a.snr = load_curve(a, "snr_db");
            bands.push_back(std::move(a));
        }

        // re-emit each consumed curve as a plot-ready artifact of this report
        for (const auto& a : bands) {
            if (a.throughput)
                write_text_file(ecdf_to_csv(*a.throughput),
                                manifest.output_dir / (a.label + "_throughput_ecdf.csv"));
            if (a.snr)
                write_text_file(ecdf_to_csv(*a.snr),
                                manifest.output_dir / (a.label + "_snr_ecdf.csv"));
        }

        JsonWriter w;
        w.begin_object();
        w.key("bands").begin_array();
        for (const auto& a : bands) {
            w.begin_object();
            w.key("band_label").value(a.label);
            w.key("n_samples").value(a.j.at("n_samples").get<std::uint64_t>());
            w.key("loss_fraction").value(a.j.at("loss_fraction").get<double>());
            w.key("route_length_m").value(a.j.at("route_length_m").get<double>());
            if (a.j.contains("rank") && !a.j.at("rank").contains("error")) {
                const auto& rank = a.j.at("rank");
                w.key("rank").begin_object();
                w.key("probabilities").begin_object();
                for (const auto& [key, val] :
                     rank.at("table").at("probabilities").items())
                    w.key(key).value(val.get<double>());
                w.end_object();
                w.key("prob_rank_above_2")
                    .value(rank.at("prob_rank_above_2").get<double>());
                w.end_object();
            }
            w.end_object();
        }
        w.end_array();

        auto emit_deltas = [&](const char* key, auto curve_of) {
            w.key(key).begin_array();
            for (std::size_t i = 0; i < bands.size(); ++i) {
                for (std::size_t jdx = i + 1; jdx < bands.size(); ++jdx) {
                    const std::optional<EcdfCurve>& ca = curve_of(bands[i]);
                    const std::optional<EcdfCurve>& cb = curve_of(bands[jdx]);
                    if (!ca || !cb) continue;
                    for (double q : quantiles) {
                        w.begin_object();
                        w.key("a").value(bands[i].label);
                        w.key("b").value(bands[jdx].label);
                        w.key("q").value(q);
                        try {
                            w.key("delta").value(percentile_delta(*ca, *cb, q));
                        } catch (const QuantileInLossRegion& e) {
                            w.key("error").value(e.what());
                        }
                        w.end_object();
                    }
                }
            }
            w.end_array();
        };
        if (bands.size() > 1) {
            emit_deltas("throughput_deltas_mbps",
                        [](const BandAnalysis& a) -> const std::optional<EcdfCurve>& {
                            return a.throughput;
                        });
            emit_deltas("snr_deltas_db",
                        [](const BandAnalysis& a) -> const std::optional<EcdfCurve>& {
                            return a.snr;
                        });
        }

        w.key("throughput_exceedance").begin_array();
        for (const auto& a : bands) {
            if (!a.throughput) continue;
            // 1 - ECDF just above the threshold; lost packets weigh the bottom
            double cum = a.throughput->loss_fraction;
            for (const auto& [v, p] : a.throughput->points)
                if (v <= threshold_mbps) cum = p;
            w.begin_object();
            w.key("band_label").value(a.label);
            w.key("threshold_mbps").value(threshold_mbps);
            w.key("fraction_above").value(1.0 - cum);
            w.end_object();
        }
        w.end_array();
        w.end_object();

        write_text_file(w.str(), manifest.output_dir / "report.json");
        std::cout << "report over " << bands.size() << " band(s) written\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"beamtrace — drive-test beam-trace analytics and synthesis"};
    app.require_subcommand(1);

    std::vector<std::string> inputs;
    std::string out_dir, config, schema, band_label;
    std::uint64_t seed = 0;
    bool strict_beams = false;
    double collapse_radius = 1.0;
    double snr_cap = 30.0;
    std::vector<double> quantiles = {0.5, 0.9};
    double threshold_mbps = 1000.0;

    auto* ingest = app.add_subcommand("ingest", "parse raw drive-test CSVs");
    ingest->add_option("inputs", inputs, "raw CSV files")->required();
    ingest->add_option("--schema", schema, "column-map JSON");
    ingest->add_option("--out", out_dir, "output directory")->required();
    ingest->add_option("--band-label", band_label, "label stored with each trace");

    auto* fit = app.add_subcommand("fit", "extract SSR distances and fit models");
    fit->add_option("input", inputs, "canonical trace CSV")->required();
    fit->add_option("--config", config, "band config JSON (object or preset map)");
    fit->add_option("--band-label", band_label,
                    "preset name inside --config, or built-in preset");
    fit->add_option("--out", out_dir, "output directory")->required();
    fit->add_flag("--strict-beams", strict_beams,
                  "samples without a beam id split stationarity runs");
    fit->add_option("--collapse-radius", collapse_radius,
                    "static-cluster radius in meters (default 1.0)");

    auto* simulate = app.add_subcommand("simulate", "generate a synthetic trace");
    simulate->add_option("trajectory", inputs, "trajectory JSON")->required();
    simulate->add_option("--config", config, "synthesis spec JSON")->required();
    auto* seed_opt = simulate->add_option("--seed", seed, "RNG seed (required)");
    simulate->add_option("--out", out_dir, "output directory")->required();

    auto* analyze = app.add_subcommand("analyze", "per-band ECDF / rank statistics");
    analyze->add_option("input", inputs, "canonical trace CSV")->required();
    analyze->add_option("--band-label", band_label, "band label (default: file stem)");
    analyze->add_option("--snr-cap", snr_cap, "SNR cap in dB (default 30)");
    analyze->add_option("--out", out_dir, "output directory")->required();

    auto* report = app.add_subcommand("report", "consolidate analyses across bands");
    report->add_option("inputs", inputs, "analysis JSON files")->required();
    report->add_option("--quantiles", quantiles, "delta quantiles (default 0.5 0.9)");
    report->add_option("--threshold-mbps", threshold_mbps,
                       "throughput exceedance threshold (default 1000)");
    report->add_option("--out", out_dir, "output directory")->required();

    CLI11_PARSE(app, argc, argv);

    RunManifest manifest;
    for (const std::string& s : inputs) manifest.inputs.emplace_back(s);
    manifest.config = config;
    manifest.output_dir = out_dir;

    if (ingest->parsed()) {
        manifest.command = Command::ingest;
        return cmd_ingest(std::move(manifest), schema, band_label);
    }
    if (fit->parsed()) {
        manifest.command = Command::fit;
        return cmd_fit(std::move(manifest), band_label, strict_beams, collapse_radius);
    }
    if (simulate->parsed()) {
        manifest.command = Command::simulate;
        manifest.seed = seed;
        return cmd_simulate(std::move(manifest), seed_opt->count() > 0, seed);
    }
    if (analyze->parsed()) {
        manifest.command = Command::analyze;
        return cmd_analyze(std::move(manifest), band_label, snr_cap);
    }
    manifest.command = Command::report;
    return cmd_report(std::move(manifest), quantiles, threshold_mbps);
}
