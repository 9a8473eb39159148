#pragma once

#include <vector>

#include "ccrlab/config.hpp"
#include "ccrlab/report.hpp"

namespace ccr {

// Each suite turns module errors into failed reports (NaN residual plus an
// "error" param) instead of throwing.
std::vector<CheckReport> gram_suite(const ScenarioConfig& config);
std::vector<CheckReport> phase_suite(const ScenarioConfig& config);
std::vector<CheckReport> commutation_suite(const ScenarioConfig& config);
std::vector<CheckReport> compression_suite(const ScenarioConfig& config);
std::vector<CheckReport> block_suite(const ScenarioConfig& config);
std::vector<CheckReport> bounds_suite(const ScenarioConfig& config);
std::vector<CheckReport> group_suite(const ScenarioConfig& config);

/// All suites in order, sorted for emission. Deterministic given the config.
std::vector<CheckReport> run_verify(const ScenarioConfig& config);

bool all_passed(const std::vector<CheckReport>& reports);

/// Tolerance for suite.name: override by full name, then by suite, then fallback.
double resolve_tolerance(const ScenarioConfig& config, const std::string& suite, const std::string& name,
                         double fallback);

} // namespace ccr
