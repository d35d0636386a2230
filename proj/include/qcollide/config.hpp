#pragma once

// Flat key=value run configurations ('#' comments, INI-style, one config per
// run) and their mapping onto systems, schedules and schemes.

#include <optional>
#include <string>
#include <vector>

#include "qcollide/collision.hpp"
#include "qcollide/propagators.hpp"
#include "qcollide/rescale.hpp"

namespace qcollide {

struct RunConfig {
    std::string system = "na_he_3ch";  // builtin name or curve-file path
    std::optional<double> v0, b, t0, mu;
    double g_max_hz = 30e6;
    double lambda_floor = 1e-30;
    int samples = 4096;  // schedule grid M
    std::string scheme = "4,0,0";
    std::vector<std::string> schemes;  // sweep may list several
    std::optional<long> steps;         // N
    std::vector<long> steps_list;      // N_list
    std::optional<std::pair<double, double>> window;  // absent = auto
    double eps_window = 1e-6;
    double oracle_tol = 1e-10;
    std::optional<double> fidelity_threshold;
    std::string range_policy = "clamp";
    std::string out = ".";
    unsigned seed = 20240611;

    std::string raw_text;  // exact file contents, hashed into output headers
};

// Parses the text of a config file; diagnostics carry line numbers and field
// names.
RunConfig parse_config_text(const std::string& text, const std::string& origin = "config");
RunConfig load_config(const std::string& path);

// Builds the collision system named by cfg.system with trajectory overrides
// applied.
CollisionSystem system_from_config(const RunConfig& cfg);

RescaleParams rescale_params_from_config(const RunConfig& cfg);

// The configured window, or the auto-selected one.
std::pair<double, double> window_from_config(const RunConfig& cfg, const CollisionSystem& sys);

// FNV-1a 64-bit over the raw config text, as 16 hex digits.
std::string config_hash(const RunConfig& cfg);

}  // namespace qcollide
