#include "qcollide/config.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qcollide/builtin_systems.hpp"
#include "qcollide/errors.hpp"

namespace qcollide {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string& origin, int lineno, const std::string& key,
                    const std::string& value) {
    try {
        size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw user_error(origin + ":" + std::to_string(lineno) + ": field '" + key +
                         "' expects a number, got '" + value + "'");
    }
}

long parse_long(const std::string& origin, int lineno, const std::string& key,
                const std::string& value) {
    try {
        size_t pos = 0;
        const long v = std::stol(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw user_error(origin + ":" + std::to_string(lineno) + ": field '" + key +
                         "' expects an integer, got '" + value + "'");
    }
}

std::vector<std::string> split_list(const std::string& value, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : value) {
        if (ch == sep) {
            const std::string t = trim(cur);
            if (!t.empty()) parts.push_back(t);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    const std::string t = trim(cur);
    if (!t.empty()) parts.push_back(t);
    return parts;
}

}  // namespace

RunConfig parse_config_text(const std::string& text, const std::string& origin) {
    RunConfig cfg;
    cfg.raw_text = text;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw user_error(origin + ":" + std::to_string(lineno) +
                             ": expected 'key = value', got '" + stripped + "'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty())
            throw user_error(origin + ":" + std::to_string(lineno) +
                             ": empty key or value in '" + stripped + "'");

        if (key == "system") {
            cfg.system = value;
        } else if (key == "v0") {
            cfg.v0 = parse_double(origin, lineno, key, value);
        } else if (key == "b") {
            cfg.b = parse_double(origin, lineno, key, value);
        } else if (key == "t0") {
            cfg.t0 = parse_double(origin, lineno, key, value);
        } else if (key == "mu") {
            cfg.mu = parse_double(origin, lineno, key, value);
        } else if (key == "g_max_hz") {
            cfg.g_max_hz = parse_double(origin, lineno, key, value);
        } else if (key == "lambda_floor") {
            cfg.lambda_floor = parse_double(origin, lineno, key, value);
        } else if (key == "samples") {
            cfg.samples = static_cast<int>(parse_long(origin, lineno, key, value));
        } else if (key == "scheme") {
            cfg.scheme = value;
        } else if (key == "schemes") {
            cfg.schemes = split_list(value, ';');
            if (cfg.schemes.empty())
                throw user_error(origin + ":" + std::to_string(lineno) +
                                 ": field 'schemes' lists no schemes");
        } else if (key == "N") {
            cfg.steps = parse_long(origin, lineno, key, value);
        } else if (key == "N_list") {
            for (const auto& tok : split_list(value, ','))
                cfg.steps_list.push_back(parse_long(origin, lineno, key, tok));
            if (cfg.steps_list.empty())
                throw user_error(origin + ":" + std::to_string(lineno) +
                                 ": field 'N_list' lists no values");
        } else if (key == "window") {
            if (value == "auto") {
                cfg.window.reset();
            } else {
                const auto parts = split_list(value, ',');
                if (parts.size() != 2)
                    throw user_error(origin + ":" + std::to_string(lineno) +
                                     ": field 'window' expects 'auto' or 't_a,t_b'");
                cfg.window = {parse_double(origin, lineno, key, parts[0]),
                              parse_double(origin, lineno, key, parts[1])};
            }
        } else if (key == "eps_window") {
            cfg.eps_window = parse_double(origin, lineno, key, value);
        } else if (key == "oracle_tol") {
            cfg.oracle_tol = parse_double(origin, lineno, key, value);
        } else if (key == "fidelity_threshold") {
            cfg.fidelity_threshold = parse_double(origin, lineno, key, value);
        } else if (key == "range_policy") {
            if (value != "clamp" && value != "strict")
                throw user_error(origin + ":" + std::to_string(lineno) +
                                 ": field 'range_policy' must be clamp or strict");
            cfg.range_policy = value;
        } else if (key == "out") {
            cfg.out = value;
        } else if (key == "seed") {
            cfg.seed = static_cast<unsigned>(parse_long(origin, lineno, key, value));
        } else {
            throw user_error(origin + ":" + std::to_string(lineno) + ": unknown field '" +
                             key + "'");
        }
    }

    if (cfg.steps && !cfg.steps_list.empty())
        throw user_error(origin + ": give either N or N_list, not both");
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw user_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path);
}

CollisionSystem system_from_config(const RunConfig& cfg) {
    CollisionSystem sys;
    if (is_builtin_system(cfg.system)) {
        sys = make_builtin_system(cfg.system);
    } else {
        TabulatedPotential pot = load_curve_file(cfg.system);
        pot.policy = cfg.range_policy == "strict" ? TabulatedPotential::RangePolicy::strict
                                                  : TabulatedPotential::RangePolicy::clamp;
        if (!cfg.mu)
            throw user_error("curve-file system '" + cfg.system + "' needs 'mu' in the config");
        sys.channels = pot.channels_count();
        sys.potential = std::move(pot);
        sys.label = std::filesystem::path(cfg.system).stem().string();
        sys.trajectory.v0 = 2.0;
        sys.trajectory.b = 0.5;
        sys.trajectory.t0 = 0.0;
    }
    if (cfg.v0) sys.trajectory.v0 = *cfg.v0;
    if (cfg.b) sys.trajectory.b = *cfg.b;
    if (cfg.t0) sys.trajectory.t0 = *cfg.t0;
    if (cfg.mu) sys.trajectory.mu = *cfg.mu;
    sys.validate();
    return sys;
}

RescaleParams rescale_params_from_config(const RunConfig& cfg) {
    RescaleParams p;
    p.g_max = kTwoPi * cfg.g_max_hz;
    p.lambda_floor = cfg.lambda_floor;
    p.grid = cfg.samples;
    p.validate();
    return p;
}

std::pair<double, double> window_from_config(const RunConfig& cfg,
                                             const CollisionSystem& sys) {
    if (cfg.window) {
        if (!(cfg.window->second > cfg.window->first))
            throw user_error("window: t_b must exceed t_a");
        return *cfg.window;
    }
    const double half = auto_window_halfwidth(sys, cfg.eps_window);
    return {sys.trajectory.t0 - half, sys.trajectory.t0 + half};
}

std::string config_hash(const RunConfig& cfg) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : cfg.raw_text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace qcollide
