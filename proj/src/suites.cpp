#include "ccrlab/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "ccrlab/errors.hpp"
#include "ccrlab/gram_vectors.hpp"
#include "ccrlab/group_perturbation.hpp"
#include "ccrlab/random.hpp"
#include "ccrlab/weyl_dilation.hpp"

namespace ccr {

namespace {

enum Stream : std::uint64_t { gram_stream = 1, phase_stream = 2, group_stream = 3 };

struct Outcome {
    double residual = 0.0;
    json params = json::object();
};

template <class Body>
CheckReport run_check(const ScenarioConfig& config, const std::string& suite, const std::string& name,
                      std::optional<double> t, double default_tol, Body&& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        outcome = body();
    } catch (const std::exception& e) {
        outcome.residual = NAN;
        outcome.params = json{{"error", e.what()}};
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;
    CheckReport r = make_check(suite, name, std::move(outcome.params), t, outcome.residual,
                               resolve_tolerance(config, suite, name, default_tol));
    r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    return r;
}

double min_singular_value(const CMatrix& m)
{
    Eigen::BDCSVD<CMatrix> svd(m);
    return svd.singularValues().minCoeff();
}

// The three displayed conditions of the extension, as one residual.
double extension_residual(const DilationVectorSystem& sys)
{
    const double half_gamma = sys.gamma_norm() / 2.0;
    double y_norms = 0.0;
    for (int k = 0; k < sys.dim(); ++k) {
        y_norms = std::max(y_norms, std::abs(sys.y.col(k).squaredNorm() - half_gamma));
    }
    return std::max({verify_gram(sys.z, sys.theta_prime), verify_gram(sys.base.x, sys.base.theta), y_norms});
}

DilationVectorSystem scenario_system(const ScenarioConfig& config)
{
    return extend_vectors(construct_theta_vectors(config.theta), config.theta_prime);
}

// Construction failures surface through every report of the suite.
struct MaybeSystem {
    std::optional<DilationVectorSystem> sys;
    std::string error;

    const DilationVectorSystem& get() const
    {
        if (!sys) throw std::runtime_error(error);
        return *sys;
    }
};

MaybeSystem try_scenario_system(const ScenarioConfig& config)
{
    try {
        return MaybeSystem{scenario_system(config), {}};
    } catch (const std::exception& e) {
        return MaybeSystem{std::nullopt, e.what()};
    }
}

} // namespace

double resolve_tolerance(const ScenarioConfig& config, const std::string& suite, const std::string& name,
                         double fallback)
{
    if (const auto it = config.tolerances.find(suite + "." + name); it != config.tolerances.end()) return it->second;
    if (const auto it = config.tolerances.find(suite); it != config.tolerances.end()) return it->second;
    return fallback;
}

std::vector<CheckReport> gram_suite(const ScenarioConfig& config)
{
    std::vector<CheckReport> out;
    out.push_back(run_check(config, "gram", "theta_vectors", std::nullopt, 1e-10, [&] {
        const VectorSystem sys = construct_theta_vectors(config.theta);
        return Outcome{verify_gram(sys.x, sys.theta),
                       json{{"shift_c", sys.shift_c}, {"min_singular_value", min_singular_value(sys.x)}}};
    }));
    out.push_back(run_check(config, "gram", "extension", std::nullopt, 1e-10, [&] {
        const DilationVectorSystem sys = scenario_system(config);
        return Outcome{extension_residual(sys), json{{"gamma_norm", sys.gamma_norm()}}};
    }));
    out.push_back(run_check(config, "gram", "projection", std::nullopt, 0.0, [&] {
        const DilationVectorSystem sys = scenario_system(config);
        const double r = (sys.z.topRows(sys.dim()) - sys.base.x).cwiseAbs().maxCoeff();
        return Outcome{r, json::object()};
    }));
    out.push_back(run_check(config, "gram", "linear_independence", std::nullopt, 0.0, [&] {
        const DilationVectorSystem sys = scenario_system(config);
        const double sx = min_singular_value(sys.base.x);
        const double sz = min_singular_value(sys.z);
        return Outcome{std::max(0.0, 1e-10 - std::min(sx, sz)),
                       json{{"min_singular_x", sx}, {"min_singular_z", sz}}};
    }));
    out.push_back(run_check(config, "gram", "random_trials", std::nullopt, 1e-10, [&] {
        double worst = 0.0;
        for (int trial = 0; trial < config.gram_trials; ++trial) {
            Rng rng = trial_rng(config.seed, gram_stream, static_cast<std::uint64_t>(trial));
            const int d = std::uniform_int_distribution<int>(1, 8)(rng);
            const RealAntisymMatrix theta = random_antisym(d, rng);
            const RealAntisymMatrix theta_prime = random_antisym(d, rng);
            worst = std::max(worst, extension_residual(extend_vectors(construct_theta_vectors(theta), theta_prime)));
        }
        return Outcome{worst, json{{"trials", config.gram_trials}}};
    }));
    return out;
}

std::vector<CheckReport> phase_suite(const ScenarioConfig& config)
{
    std::vector<CheckReport> out;
    const json common{{"cutoff", config.phase_cutoff}, {"corner", config.corner}, {"modes", config.phase_modes}};
    out.push_back(run_check(config, "phase", "random_pairs", std::nullopt, 1e-6, [&] {
        double worst = 0.0;
        for (int trial = 0; trial < config.phase_trials; ++trial) {
            Rng rng = trial_rng(config.seed, phase_stream, static_cast<std::uint64_t>(trial));
            const CVector y = random_cvector(config.phase_modes, rng, 0.7);
            const CVector z = random_cvector(config.phase_modes, rng, 0.7);
            worst = std::max(worst, phase_check(y, z, config.phase_cutoff, config.corner));
        }
        json p = common;
        p["trials"] = config.phase_trials;
        return Outcome{worst, p};
    }));
    out.push_back(run_check(config, "phase", "self", std::nullopt, 1e-10, [&] {
        Rng rng = trial_rng(config.seed, phase_stream, 1u << 20);
        const CVector y = random_cvector(config.phase_modes, rng, 0.7);
        return Outcome{phase_check(y, y, config.phase_cutoff, config.corner), common};
    }));
    return out;
}

std::vector<CheckReport> commutation_suite(const ScenarioConfig& config)
{
    std::vector<CheckReport> out;
    std::optional<WeylTuple> tuple;
    std::string build_error;
    try {
        tuple = build_tuple(config.theta, config.commutation_cutoff);
    } catch (const std::exception& e) {
        build_error = e.what();
    }
    for (double t : config.t_grid) {
        out.push_back(run_check(config, "commutation", "theta_phase", t, 1e-6, [&] {
            if (!tuple) throw std::runtime_error(build_error);
            double worst = 0.0;
            for (int k = 0; k < tuple->size(); ++k)
                for (int l = 0; l < tuple->size(); ++l)
                    worst = std::max(worst, commutation_residual(*tuple, k, l, t, t, config.corner));
            return Outcome{worst, json{{"cutoff", config.commutation_cutoff}, {"corner", config.corner}, {"s", t}}};
        }));
    }
    return out;
}

std::vector<CheckReport> compression_suite(const ScenarioConfig& config)
{
    std::vector<CheckReport> out;
    const MaybeSystem maybe = try_scenario_system(config);
    for (double t : config.t_grid) {
        out.push_back(run_check(config, "compression", "identity", t, 1e-9, [&] {
            const DilationVectorSystem& sys = maybe.get();
            double worst = 0.0;
            for (int k = 0; k < sys.dim(); ++k) {
                worst = std::max(worst, compression_residual(sys, k, t, config.cutoff, config.corner));
            }
            return Outcome{worst, json{{"cutoff", config.cutoff},
                                       {"corner", config.corner},
                                       {"damping", std::exp(-t * t * sys.gamma_norm() / 4.0)}}};
        }));
    }
    return out;
}

std::vector<CheckReport> block_suite(const ScenarioConfig& config)
{
    std::vector<CheckReport> out;
    const MaybeSystem maybe = try_scenario_system(config);
    const double delta = config.delta.value_or(witness_constant(config.theta, config.theta_prime).c);
    const double slack = 1e-3;
    for (double t : config.t_grid) {
        std::vector<BlockEstimates> per_k;
        std::string error;
        try {
            const DilationVectorSystem& sys = maybe.get();
            for (int k = 0; k < sys.dim(); ++k) {
                per_k.push_back(block_estimates(sys, k, t, config.cutoff, config.corner, delta, slack));
            }
        } catch (const std::exception& e) {
            error = e.what();
        }
        auto worst = [&](auto field) {
            double w = 0.0;
            for (const BlockEstimates& b : per_k) w = std::max(w, field(b));
            return w;
        };
        const json params{{"cutoff", config.cutoff}, {"corner", config.corner}, {"delta", delta}};
        auto check = [&](const std::string& name, auto field) {
            out.push_back(run_check(config, "block", name, t, slack, [&] {
                if (!error.empty()) throw std::runtime_error(error);
                return Outcome{worst(field), params};
            }));
        };
        check("y_norm", [](const BlockEstimates& b) { return std::max(0.0, b.y_norm - b.off_block_bound); });
        check("x_norm", [](const BlockEstimates& b) { return std::max(0.0, b.x_norm - b.off_block_bound); });
        check("e_bound", [](const BlockEstimates& b) { return std::max(0.0, b.e_candidate - b.e_bound); });
        check("defect", [](const BlockEstimates& b) { return std::max(b.defect_residual, b.defect_columnwise); });
    }
    return out;
}

std::vector<CheckReport> bounds_suite(const ScenarioConfig& config)
{
    std::vector<CheckReport> out;
    const RealAntisymMatrix gamma = config.theta - config.theta_prime;
    out.push_back(run_check(config, "bounds", "summary", std::nullopt, 1e-9, [&] {
        const BoundsReport b = bounds_report(config.theta, config.theta_prime);
        const SpectrumPairing pairing = spectrum_pairing(gamma);
        return Outcome{pairing.pairing_residual,
                       json{{"gamma_norm", b.gamma_norm},
                            {"hs_norm", b.hs_norm},
                            {"max_entry", b.max_entry},
                            {"ours", b.ours},
                            {"gao_per_row", b.gao_per_row},
                            {"hs_chain", b.hs_chain},
                            {"three_sqrt_d", b.three_sqrt_d},
                            {"hr_constant", b.hr_constant},
                            {"hr_improved_constant", b.hr_improved_constant},
                            {"witness_c", witness_constant(config.theta, config.theta_prime).c},
                            {"zero_multiplicity", pairing.zero_multiplicity}}};
    }));
    out.push_back(run_check(config, "bounds", "hs_chain", std::nullopt, 1e-10, [&] {
        const int d = gamma.dim();
        const double op2 = std::pow(operator_norm(gamma), 2);
        const double hs2 = std::pow(hs_norm(gamma), 2);
        const double max2 = std::pow(max_entry(gamma), 2);
        return Outcome{std::max({0.0, op2 - hs2 / 2.0, hs2 / 2.0 - d * (d - 1) / 2.0 * max2}), json::object()};
    }));
    out.push_back(run_check(config, "bounds", "ours_below_three_sqrt_d", std::nullopt, 0.0, [&] {
        const BoundsReport b = bounds_report(config.theta, config.theta_prime);
        return Outcome{std::max(0.0, b.ours - b.three_sqrt_d), json::object()};
    }));
    return out;
}

std::vector<CheckReport> group_suite(const ScenarioConfig& config)
{
    double forward = 0.0, reflection = 0.0, subadditive = 0.0, decay = 0.0, forgiveness = 0.0, recovered = 0.0;
    std::string error;
    std::vector<double> refining;
    // ||(U(t)-V(t))/t|| approaches ||A-B|| at second order, while cancellation
    // roundoff grows like eps/t; 1e-6 balances the two.
    for (double t = 1.0; t >= 1e-6 * 0.99; t /= 10.0) refining.push_back(t);
    std::vector<double> far_grid;
    for (double t = -50.0; t <= 50.0; t += 0.25) far_grid.push_back(t);
    const auto start = std::chrono::steady_clock::now();
    try {
        for (int trial = 0; trial < config.group_trials; ++trial) {
            Rng rng = trial_rng(config.seed, group_stream, static_cast<std::uint64_t>(trial));
            const int n = std::uniform_int_distribution<int>(config.group_min_dim, config.group_max_dim)(rng);
            const HermitianPair pair(random_hermitian(n, rng), random_hermitian(n, rng));
            const double gap = pair.generator_gap();
            for (double t : config.lipschitz_grid) {
                forward = std::max(forward, pair.distance(t) - gap * std::abs(t));
            }
            const auto [excess, mirror] = subadditivity_audit(pair, 0.3, 0.3);
            subadditive = std::max(subadditive, excess);
            reflection = std::max(reflection, mirror);
            const double ratio = difference_quotient(pair, 1e-2) / difference_quotient(pair, 1e-3);
            decay = std::max(decay, std::max(5.0 - ratio, ratio - 20.0));
            if (!second_order_forgiveness(pair, gap, 1.0, 0.5, far_grid)) forgiveness += 1.0;
            const double k = lipschitz_audit(pair, refining);
            recovered = std::max(recovered, recovered_generator_gap(pair, 1e-5) - k);
        }
    } catch (const std::exception& e) {
        error = e.what();
    }
    const json params{{"trials", config.group_trials},
                      {"min_dim", config.group_min_dim},
                      {"max_dim", config.group_max_dim}};
    std::vector<CheckReport> out;
    auto check = [&](const std::string& name, double residual, double tol) {
        out.push_back(run_check(config, "group", name, std::nullopt, tol, [&] {
            if (!error.empty()) throw std::runtime_error(error);
            return Outcome{std::max(0.0, residual), params};
        }));
    };
    check("forward_lipschitz", forward, 1e-9);
    check("reflection", reflection, 1e-10);
    check("subadditivity", subadditive, 1e-10);
    check("difference_quotient_decay", decay, 0.0);
    check("second_order_forgiveness", forgiveness, 0.0);
    check("recovered_gap", recovered, 1e-6);
    // All group checks share one pass over the trials.
    const auto total = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    for (CheckReport& r : out) r.runtime_ms = total.count();
    return out;
}

std::vector<CheckReport> run_verify(const ScenarioConfig& config)
{
    std::vector<CheckReport> all;
    for (auto suite : {gram_suite, phase_suite, commutation_suite, compression_suite, block_suite, bounds_suite,
                       group_suite}) {
        auto part = suite(config);
        all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    sort_reports(all);
    return all;
}

bool all_passed(const std::vector<CheckReport>& reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
}

} // namespace ccr
