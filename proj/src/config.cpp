#include "ccrlab/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "ccrlab/errors.hpp"

namespace ccr {

namespace {

[[noreturn]] void invalid(const std::string& path, const std::string& what)
{
    throw Error(ErrorKind::ValidationError, path + ": " + what);
}

int get_int(const json& j, const std::string& path, int lo)
{
    if (!j.is_number_integer()) invalid(path, "expected an integer");
    const auto v = j.get<long long>();
    if (v < lo || v > 1'000'000) invalid(path, "out of range");
    return static_cast<int>(v);
}

double get_double(const json& j, const std::string& path)
{
    if (!j.is_number()) invalid(path, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) invalid(path, "expected a finite number");
    return v;
}

std::vector<double> get_grid(const json& j, const std::string& path)
{
    if (!j.is_array() || j.empty()) invalid(path, "expected a nonempty array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_double(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

RealAntisymMatrix get_antisym(const json& j, const std::string& path)
{
    try {
        return RealAntisymMatrix::validate(real_matrix_from_json(j, path));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ValidationError) throw;
        invalid(path, e.what());
    }
}

void require_headroom_field(int corner, int cutoff, const std::string& path)
{
    if (corner + 4 > cutoff) {
        std::ostringstream os;
        os << "corner " << corner << " + 4 exceeds cutoff " << cutoff;
        invalid(path, os.str());
    }
}

const std::set<std::string> known_keys{
    "theta", "theta_prime", "cutoff", "corner", "t_grid", "seed", "tolerances", "delta",
    "gram_trials", "phase_trials", "phase_modes", "phase_cutoff", "commutation_cutoff",
    "group_trials", "group_min_dim", "group_max_dim", "lipschitz_grid"};

} // namespace

json ScenarioConfig::to_json() const
{
    json j{
        {"theta", ccr::to_json(theta)},
        {"theta_prime", ccr::to_json(theta_prime)},
        {"cutoff", cutoff},
        {"corner", corner},
        {"t_grid", t_grid},
        {"seed", seed},
        {"tolerances", json(tolerances)},
        {"gram_trials", gram_trials},
        {"phase_trials", phase_trials},
        {"phase_modes", phase_modes},
        {"phase_cutoff", phase_cutoff},
        {"commutation_cutoff", commutation_cutoff},
        {"group_trials", group_trials},
        {"group_min_dim", group_min_dim},
        {"group_max_dim", group_max_dim},
        {"lipschitz_grid", lipschitz_grid},
    };
    if (delta) j["delta"] = *delta;
    return j;
}

ScenarioConfig parse_config(const json& j)
{
    if (!j.is_object()) invalid("$", "expected an object");
    for (const auto& [key, value] : j.items()) {
        if (!known_keys.contains(key)) invalid("$." + key, "unknown field");
    }
    if (!j.contains("theta")) invalid("$.theta", "required field missing");

    ScenarioConfig c;
    c.theta = get_antisym(j.at("theta"), "$.theta");
    c.theta_prime = j.contains("theta_prime") ? get_antisym(j.at("theta_prime"), "$.theta_prime")
                                               : RealAntisymMatrix::zero(c.theta.dim());
    if (c.theta_prime.dim() != c.theta.dim()) invalid("$.theta_prime", "dimension differs from theta");

    if (j.contains("cutoff")) c.cutoff = get_int(j.at("cutoff"), "$.cutoff", 0);
    if (j.contains("corner")) c.corner = get_int(j.at("corner"), "$.corner", 0);
    require_headroom_field(c.corner, c.cutoff, "$.corner");
    if (j.contains("t_grid")) c.t_grid = get_grid(j.at("t_grid"), "$.t_grid");
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned()) invalid("$.seed", "expected a nonnegative integer");
        c.seed = j.at("seed").get<std::uint64_t>();
    }
    if (j.contains("tolerances")) {
        const json& t = j.at("tolerances");
        if (!t.is_object()) invalid("$.tolerances", "expected an object of name -> number");
        for (const auto& [name, value] : t.items()) {
            const double tol = get_double(value, "$.tolerances." + name);
            if (tol < 0) invalid("$.tolerances." + name, "tolerance must be nonnegative");
            c.tolerances[name] = tol;
        }
    }
    if (j.contains("delta")) {
        c.delta = get_double(j.at("delta"), "$.delta");
        if (*c.delta < 0) invalid("$.delta", "must be nonnegative");
    }
    if (j.contains("gram_trials")) c.gram_trials = get_int(j.at("gram_trials"), "$.gram_trials", 0);
    if (j.contains("phase_trials")) c.phase_trials = get_int(j.at("phase_trials"), "$.phase_trials", 0);
    if (j.contains("phase_modes")) c.phase_modes = get_int(j.at("phase_modes"), "$.phase_modes", 1);
    if (j.contains("phase_cutoff")) c.phase_cutoff = get_int(j.at("phase_cutoff"), "$.phase_cutoff", 0);
    if (j.contains("commutation_cutoff")) {
        c.commutation_cutoff = get_int(j.at("commutation_cutoff"), "$.commutation_cutoff", 0);
    }
    require_headroom_field(c.corner, c.phase_cutoff, "$.phase_cutoff");
    require_headroom_field(c.corner, c.commutation_cutoff, "$.commutation_cutoff");
    if (j.contains("group_trials")) c.group_trials = get_int(j.at("group_trials"), "$.group_trials", 0);
    if (j.contains("group_min_dim")) c.group_min_dim = get_int(j.at("group_min_dim"), "$.group_min_dim", 1);
    if (j.contains("group_max_dim")) c.group_max_dim = get_int(j.at("group_max_dim"), "$.group_max_dim", 1);
    if (c.group_max_dim < c.group_min_dim) invalid("$.group_max_dim", "smaller than group_min_dim");
    if (j.contains("lipschitz_grid")) c.lipschitz_grid = get_grid(j.at("lipschitz_grid"), "$.lipschitz_grid");
    return c;
}

ScenarioConfig parse_config(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    return parse_config(j);
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

ScenarioConfig load_config(const std::string& path)
{
    return parse_config(read_text_file(path));
}

RealAntisymMatrix load_antisym(const std::string& path)
{
    json j;
    try {
        j = json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, path + ": " + e.what());
    }
    return get_antisym(j, "$");
}

} // namespace ccr
