#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ccrlab/json_io.hpp"

namespace ccr {

struct CheckReport {
    std::string suite;
    std::string name;
    json params = json::object();
    std::optional<double> t;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::int64_t runtime_ms = 0;
};

/// passed is residual <= tolerance; a NaN residual fails.
CheckReport make_check(std::string suite, std::string name, json params, std::optional<double> t,
                       double residual, double tolerance);

/// Rank of a suite in run order (gram, phase, commutation, compression,
/// block, bounds, group); unknown suites sort last.
int suite_rank(const std::string& suite);

/// Sorts by (suite rank, name, t) so output is independent of scheduling.
void sort_reports(std::vector<CheckReport>& reports);

inline constexpr const char* report_version = "1.0";

struct EmitOptions {
    /// runtime_ms varies run to run, so it is omitted unless requested.
    bool include_timing = false;
};

json report_document(const std::vector<CheckReport>& reports, std::uint64_t seed, const json& config,
                     const EmitOptions& options = {});
std::string render_json(const std::vector<CheckReport>& reports, std::uint64_t seed, const json& config,
                        const EmitOptions& options = {});
/// Header plus one row per report: suite,name,t,residual,tolerance,passed.
std::string render_csv(const std::vector<CheckReport>& reports);

/// Parses a document produced by render_json.
std::vector<CheckReport> reports_from_document(const json& doc);

enum class ReportFormat { Json, Csv };

/// Writes to `destination` ("-" for stdout); throws IoError. Empty report
/// lists are rejected.
void emit(const std::vector<CheckReport>& reports, ReportFormat format, const std::string& destination,
          std::uint64_t seed, const json& config, const EmitOptions& options = {});

} // namespace ccr
