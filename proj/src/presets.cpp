// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "beamtrace/presets.hpp"

#include <fstream>
#include <map>

#include <json.hpp>

#include "beamtrace/errors.hpp"

namespace beamtrace {

using nlohmann::json;

BandConfig cband_table2() {
    BandConfig cfg;
    cfg.center_frequency_mhz = 3650.0;
    cfg.bandwidth_mhz = 100.0;
    cfg.eirp_dbm = 73.0;
    cfg.scs_khz = 60.0;
    cfg.max_resource_blocks = 136;
    cfg.subcarriers_per_rb = 12;
    cfg.h_beamwidth_deg = 13.0;
    cfg.v_beamwidth_deg = 6.0;
    cfg.beam_angles_deg = {-39.0, -26.0, -13.0, 0.0, 13.0, 26.0, 39.0};
    return cfg;
}

BandConfig mmwave_table2() {
    BandConfig cfg;
    cfg.center_frequency_mhz = 27050.0;
    cfg.bandwidth_mhz = 100.0;
    cfg.eirp_dbm = 62.0;
    cfg.scs_khz = 120.0;
    cfg.max_resource_blocks = 68;
    cfg.subcarriers_per_rb = 12;
    cfg.h_beamwidth_deg = 22.0;
    cfg.v_beamwidth_deg = 4.0;
    cfg.beam_angles_deg = {-48.0, -24.0, 0.0, 24.0};
    return cfg;
}

std::vector<std::string> band_preset_names() { return {"cband_table2", "mmwave_table2"}; }

BandConfig band_preset(const std::string& name) {
    if (name == "cband_table2") return cband_table2();
    if (name == "mmwave_table2") return mmwave_table2();
    throw DomainError("unknown band preset: " + name);
}

namespace {

json parse_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error("invalid JSON in " + path.string() + ": " + e.what());
    }
    return j;
}

BandConfig band_from_json(const json& j) {
    if (j.is_string()) return band_preset(j.get<std::string>());
    BandConfig cfg;
    try {
        cfg.center_frequency_mhz = j.at("center_frequency_mhz").get<double>();
        cfg.bandwidth_mhz = j.at("bandwidth_mhz").get<double>();
        cfg.eirp_dbm = j.at("eirp_dbm").get<double>();
        cfg.scs_khz = j.at("scs_khz").get<double>();
        cfg.max_resource_blocks = j.at("max_resource_blocks").get<int>();
        cfg.subcarriers_per_rb = j.value("subcarriers_per_rb", 12);
        cfg.h_beamwidth_deg = j.value("h_beamwidth_deg", 0.0);
        cfg.v_beamwidth_deg = j.value("v_beamwidth_deg", 0.0);
        cfg.beam_angles_deg = j.at("beam_angles_deg").get<std::vector<double>>();
    } catch (const json::exception& e) {
        throw Error(std::string("band config JSON: ") + e.what());
    }
    return validate_band_config(cfg);
}

}  // namespace

BandConfig band_config_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("invalid band JSON: ") + e.what());
    }
    return band_from_json(j);
}

BandConfig load_band_config(const std::filesystem::path& path, const std::string& name) {
    const json j = parse_json_file(path);
    if (j.contains("center_frequency_mhz")) return band_from_json(j);
    // map of named presets
    if (name.empty()) throw Error("band file " + path.string() + " holds named presets; pick one");
    if (!j.contains(name)) throw Error("band '" + name + "' not found in " + path.string());
    return band_from_json(j.at(name));
}

LoadedSynthesis load_synthesis_spec(const std::filesystem::path& path) {
    const json j = parse_json_file(path);
    LoadedSynthesis out;
    try {
        out.spec.gamma.shape = j.at("gamma").at("shape").get<double>();
        out.spec.gamma.scale_m = j.at("gamma").at("scale_m").get<double>();
        out.spec.band = band_from_json(j.at("band"));

        std::map<int, double> p;
        for (const auto& [key, val] : j.at("transitions").at("p_change_given_change").items())
            p[std::stoi(key)] = val.get<double>();
        out.spec.transitions =
            transition_model_from_probabilities(out.spec.band.beam_angles_deg, std::move(p));

        out.spec.shadowing_sigma_db = j.value("shadowing_sigma_db", 0.0);
        out.spec.reflect_at_edges = j.value("reflect_at_edges", true);
        out.spec.band_label = j.value("band_label", std::string("synthetic"));
        if (j.contains("seed")) {
            out.spec.seed = j.at("seed").get<std::uint64_t>();
            out.seed_present = true;
        }
        if (j.contains("bs")) {
            const auto& b = j.at("bs");
            out.bs.lat = b.at("lat").get<double>();
            out.bs.lon = b.at("lon").get<double>();
            out.bs.height_m = b.value("height_m", 12.0);
            out.bs.ue_height_m = b.value("ue_height_m", 1.5);
        }
    } catch (const json::exception& e) {
        throw Error(std::string("synthesis spec JSON: ") + e.what());
    }
    validate_synthesis_spec(out.spec);
    return out;
}

Trajectory load_trajectory(const std::filesystem::path& path) {
    const json j = parse_json_file(path);
    Trajectory t;
    try {
        t.step_m = j.value("step_m", 2.0);
        t.speed_mps = j.value("speed_mps", 10.0);
        for (const auto& wp : j.at("waypoints"))
            t.waypoints.emplace_back(wp.at(0).get<double>(), wp.at(1).get<double>());
    } catch (const json::exception& e) {
        throw Error(std::string("trajectory JSON: ") + e.what());
    }
    validate_trajectory(t);
    return t;
}

}  // namespace beamtrace
