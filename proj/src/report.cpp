#include "ccrlab/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ccrlab/errors.hpp"

namespace ccr {

namespace {

constexpr std::array<const char*, 7> suite_order{"gram", "phase", "commutation", "compression",
                                                 "block", "bounds", "group"};

std::string csv_number(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

} // namespace

CheckReport make_check(std::string suite, std::string name, json params, std::optional<double> t,
                       double residual, double tolerance)
{
    CheckReport r;
    r.suite = std::move(suite);
    r.name = std::move(name);
    r.params = std::move(params);
    r.t = t;
    r.residual = residual;
    r.tolerance = tolerance;
    r.passed = residual <= tolerance;
    return r;
}

int suite_rank(const std::string& suite)
{
    const auto it = std::find(suite_order.begin(), suite_order.end(), suite);
    return static_cast<int>(it - suite_order.begin());
}

void sort_reports(std::vector<CheckReport>& reports)
{
    std::stable_sort(reports.begin(), reports.end(), [](const CheckReport& a, const CheckReport& b) {
        const int ra = suite_rank(a.suite), rb = suite_rank(b.suite);
        if (ra != rb) return ra < rb;
        if (a.suite != b.suite) return a.suite < b.suite;
        if (a.name != b.name) return a.name < b.name;
        return a.t.value_or(-INFINITY) < b.t.value_or(-INFINITY);
    });
}

json report_document(const std::vector<CheckReport>& reports, std::uint64_t seed, const json& config,
                     const EmitOptions& options)
{
    json list = json::array();
    for (const CheckReport& r : reports) {
        json e{{"suite", r.suite}, {"name", r.name},           {"params", r.params},
               {"residual", r.residual}, {"tolerance", r.tolerance}, {"passed", r.passed}};
        e["t"] = r.t ? json(*r.t) : json(nullptr);
        if (options.include_timing) e["runtime_ms"] = r.runtime_ms;
        list.push_back(std::move(e));
    }
    return json{{"version", report_version}, {"seed", seed}, {"config", config}, {"reports", std::move(list)}};
}

std::string render_json(const std::vector<CheckReport>& reports, std::uint64_t seed, const json& config,
                        const EmitOptions& options)
{
    return dump_stable(report_document(reports, seed, config, options)) + "\n";
}

std::string render_csv(const std::vector<CheckReport>& reports)
{
    std::ostringstream os;
    os << "suite,name,t,residual,tolerance,passed\n";
    for (const CheckReport& r : reports) {
        os << csv_field(r.suite) << ',' << csv_field(r.name) << ',' << (r.t ? csv_number(*r.t) : "") << ','
           << csv_number(r.residual) << ',' << csv_number(r.tolerance) << ',' << (r.passed ? "true" : "false")
           << '\n';
    }
    return os.str();
}

std::vector<CheckReport> reports_from_document(const json& doc)
{
    if (!doc.is_object() || !doc.contains("reports") || !doc.at("reports").is_array()) {
        throw Error(ErrorKind::ValidationError, "$.reports: expected a report document");
    }
    std::vector<CheckReport> out;
    const json& list = doc.at("reports");
    for (std::size_t i = 0; i < list.size(); ++i) {
        const json& e = list[i];
        const std::string path = "$.reports[" + std::to_string(i) + "]";
        try {
            CheckReport r;
            r.suite = e.at("suite").get<std::string>();
            r.name = e.at("name").get<std::string>();
            r.params = e.value("params", json::object());
            if (e.contains("t") && !e.at("t").is_null()) r.t = e.at("t").get<double>();
            r.residual = e.at("residual").is_null() ? NAN : e.at("residual").get<double>();
            r.tolerance = e.at("tolerance").get<double>();
            r.passed = e.at("passed").get<bool>();
            r.runtime_ms = e.value("runtime_ms", std::int64_t{0});
            out.push_back(std::move(r));
        } catch (const json::exception& ex) {
            throw Error(ErrorKind::ValidationError, path + ": " + ex.what());
        }
    }
    return out;
}

void emit(const std::vector<CheckReport>& reports, ReportFormat format, const std::string& destination,
          std::uint64_t seed, const json& config, const EmitOptions& options)
{
    if (reports.empty()) throw Error(ErrorKind::ValidationError, "no reports to emit");
    const std::string text =
        format == ReportFormat::Json ? render_json(reports, seed, config, options) : render_csv(reports);
    if (destination.empty() || destination == "-") {
        std::cout << text << std::flush;
        if (!std::cout) throw Error(ErrorKind::IoError, "write to stdout failed");
        return;
    }
    std::ofstream out(destination, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::IoError, "cannot open " + destination + " for writing");
    out << text;
    out.flush();
    if (!out) throw Error(ErrorKind::IoError, "write to " + destination + " failed");
}

} // namespace ccr
