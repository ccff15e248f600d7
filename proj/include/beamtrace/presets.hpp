// Copyright 2026 beamtrace contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "beamtrace/synth.hpp"
#include "beamtrace/trace.hpp"

namespace beamtrace {

/// C-band preset: 3.65 GHz center, 100 MHz, 73 dBm EIRP, 60 kHz SCS,
/// 136 resource blocks, 13 deg / 6 deg beamwidths. The system forms beams
/// adaptively at baseband, so simulation uses a synthetic fan of seven
/// beams at one-beamwidth spacing.
BandConfig cband_table2();

/// mmWave preset: 27.05 GHz center, 100 MHz, 62 dBm EIRP, 120 kHz SCS,
/// 68 resource blocks, 22 deg / 4 deg beamwidths, four azimuth beams with
/// the dual-lobed outer beam at one terminal index of the angle ordering.
BandConfig mmwave_table2();

/// Lookup by preset name ("cband_table2", "mmwave_table2").
/// Throws DomainError for unknown names.
BandConfig band_preset(const std::string& name);

std::vector<std::string> band_preset_names();

/// Parses a BandConfig from a JSON object (see configs/bands.json for the
/// key set) and validates it.
BandConfig band_config_from_json_text(const std::string& text);

/// Loads a band from a JSON file holding either a single config object or
/// a map of named presets (`name` selects; empty name allowed for a single
/// object).
BandConfig load_band_config(const std::filesystem::path& path, const std::string& name);

/// Loads a SynthesisSpec JSON: gamma, transitions, band (inline object or
/// preset name), shadowing, optional seed, reflection flag, bs site.
struct LoadedSynthesis {
    SynthesisSpec spec;
    BsSite bs;
    bool seed_present = false;
};
LoadedSynthesis load_synthesis_spec(const std::filesystem::path& path);

/// Loads a trajectory JSON: step_m, speed_mps, waypoints [[lat, lon], ...].
Trajectory load_trajectory(const std::filesystem::path& path);

}  // namespace beamtrace
