// ccrlab: command-line front end for the Weyl-system verification suites.
//
// Exit codes: 0 all checks passed, 1 some check failed, 2 bad input, 3 I/O failure.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ccrlab/config.hpp"
#include "ccrlab/errors.hpp"
#include "ccrlab/report.hpp"
#include "ccrlab/suites.hpp"
#include "ccrlab/weyl_dilation.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_bad_input = 2;
constexpr int exit_io = 3;

ccr::ReportFormat parse_format(const std::string& s)
{
    return s == "csv" ? ccr::ReportFormat::Csv : ccr::ReportFormat::Json;
}

int input_failure(const ccr::Error& e)
{
    std::cerr << "ccrlab: " << e.what() << '\n';
    return e.kind() == ccr::ErrorKind::IoError ? exit_io : exit_bad_input;
}

int emit_or_fail(const std::vector<ccr::CheckReport>& reports, const std::string& format, const std::string& out,
                 std::uint64_t seed, const ccr::json& config, bool timings)
{
    try {
        ccr::emit(reports, parse_format(format), out, seed, config, ccr::EmitOptions{timings});
    } catch (const ccr::Error& e) {
        return input_failure(e);
    }
    return exit_ok;
}

int run_verify(const std::string& config_path, const std::string& out, const std::string& format, bool timings)
{
    ccr::ScenarioConfig config;
    try {
        config = ccr::load_config(config_path);
    } catch (const ccr::Error& e) {
        return input_failure(e);
    }
    const auto reports = ccr::run_verify(config);
    if (const int rc = emit_or_fail(reports, format, out, config.seed, config.to_json(), timings); rc != exit_ok) {
        return rc;
    }
    for (const auto& r : reports) {
        if (!r.passed) std::cerr << "FAILED " << r.suite << '.' << r.name << " residual " << r.residual << '\n';
    }
    return ccr::all_passed(reports) ? exit_ok : exit_failed;
}

int run_bounds(const std::string& theta_path, const std::string& theta_prime_path)
{
    try {
        const auto theta = ccr::load_antisym(theta_path);
        const auto theta_prime =
            theta_prime_path.empty() ? ccr::RealAntisymMatrix::zero(theta.dim()) : ccr::load_antisym(theta_prime_path);
        const ccr::BoundsReport b = ccr::bounds_report(theta, theta_prime);
        const ccr::json doc{{"d", theta.dim()},
                            {"gamma_norm", b.gamma_norm},
                            {"hs_norm", b.hs_norm},
                            {"max_entry", b.max_entry},
                            {"ours", b.ours},
                            {"gao_per_row", b.gao_per_row},
                            {"hs_chain", b.hs_chain},
                            {"three_sqrt_d", b.three_sqrt_d},
                            {"hr_constant", b.hr_constant},
                            {"hr_improved_constant", b.hr_improved_constant},
                            {"witness_c", ccr::witness_constant(theta, theta_prime).c}};
        std::cout << ccr::dump_stable(doc) << '\n';
    } catch (const ccr::Error& e) {
        return input_failure(e);
    }
    return exit_ok;
}

int run_report(const std::string& in, const std::string& out, const std::string& format)
{
    std::vector<ccr::CheckReport> reports;
    ccr::json doc;
    try {
        doc = ccr::json::parse(ccr::read_text_file(in));
        reports = ccr::reports_from_document(doc);
    } catch (const ccr::json::parse_error& e) {
        std::cerr << "ccrlab: ParseError: " << e.what() << '\n';
        return exit_bad_input;
    } catch (const ccr::Error& e) {
        return input_failure(e);
    }
    return emit_or_fail(reports, format, out, doc.value("seed", std::uint64_t{0}), doc.value("config", ccr::json::object()),
                        false);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Weyl-system verification laboratory"};
    app.require_subcommand(1);

    std::string config_path, out = "-", format = "json";
    bool timings = false;
    auto* verify = app.add_subcommand("verify", "run every check suite on a scenario config");
    verify->add_option("--config", config_path, "scenario JSON")->required();
    verify->add_option("--out", out, "destination file, '-' for stdout");
    verify->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    verify->add_flag("--timings", timings, "include runtime_ms in JSON output");

    std::string theta_path, theta_prime_path;
    auto* bounds = app.add_subcommand("bounds", "bound comparison for a pair of antisymmetric matrices");
    bounds->add_option("--theta", theta_path, "JSON matrix file")->required();
    bounds->add_option("--theta-prime", theta_prime_path, "JSON matrix file (default zero)");

    std::string report_in, report_out = "-", report_format = "csv";
    auto* report = app.add_subcommand("report", "re-render a stored JSON report");
    report->add_option("--in", report_in, "stored JSON report")->required();
    report->add_option("--out", report_out, "destination file, '-' for stdout");
    report->add_option("--format", report_format, "csv or json")->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_bad_input;
    }

    try {
        if (*verify) return run_verify(config_path, out, format, timings);
        if (*bounds) return run_bounds(theta_path, theta_prime_path);
        if (*report) return run_report(report_in, report_out, report_format);
    } catch (const ccr::Error& e) {
        std::cerr << "ccrlab: " << e.what() << '\n';
        return e.kind() == ccr::ErrorKind::IoError ? exit_io : exit_failed;
    }
    return exit_bad_input;
}
