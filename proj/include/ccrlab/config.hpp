#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ccrlab/antisym_bounds.hpp"
#include "ccrlab/json_io.hpp"

namespace ccr {

/// One verification scenario. Every randomized count and grid is a field so
/// a stored config fully determines a run.
struct ScenarioConfig {
    RealAntisymMatrix theta = RealAntisymMatrix::zero(1);
    RealAntisymMatrix theta_prime = RealAntisymMatrix::zero(1);
    int cutoff = 12;
    int corner = 3;
    std::vector<double> t_grid{0.05, 0.1, 0.2, 0.3, 0.5};
    std::uint64_t seed = 42;
    std::map<std::string, double> tolerances;

    /// Block-estimate delta; defaults to the witnessed constant.
    std::optional<double> delta;
    int gram_trials = 100;
    int phase_trials = 20;
    int phase_modes = 2;
    int phase_cutoff = 20;
    int commutation_cutoff = 16;
    int group_trials = 100;
    int group_min_dim = 2;
    int group_max_dim = 16;
    std::vector<double> lipschitz_grid{-1.0, -0.5, -0.2, -0.1, -0.05, -0.02, -0.01,
                                       0.01, 0.02, 0.05, 0.1, 0.2, 0.5, 1.0};

    int dim() const { return theta.dim(); }
    /// Echo with defaults applied; parse_config(to_json()) reproduces the config.
    json to_json() const;
};

/// Throws ParseError on malformed JSON and ValidationError (with a field
/// path) on well-formed JSON that violates the schema or invariants.
ScenarioConfig parse_config(const std::string& text);
ScenarioConfig parse_config(const json& j);
ScenarioConfig load_config(const std::string& path);

/// Reads a matrix file (a JSON array of rows) for the `bounds` subcommand.
RealAntisymMatrix load_antisym(const std::string& path);

std::string read_text_file(const std::string& path);

} // namespace ccr
