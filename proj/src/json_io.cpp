#include "ccrlab/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "ccrlab/errors.hpp"

namespace ccr {

namespace {

[[noreturn]] void invalid(const std::string& path, const std::string& what)
{
    throw Error(ErrorKind::ValidationError, path + ": " + what);
}

double finite_number(const json& j, const std::string& path)
{
    if (!j.is_number()) invalid(path, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) invalid(path, "expected a finite number");
    return v;
}

void dump_into(std::ostringstream& os, const json& j, int indent, int depth)
{
    const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
    const std::string close_pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
    const char* nl = indent > 0 ? "\n" : "";
    switch (j.type()) {
    case json::value_t::object: {
        if (j.empty()) { os << "{}"; return; }
        os << '{' << nl;
        bool first = true;
        for (const auto& [key, value] : j.items()) {  // std::map storage: keys already sorted
            if (!first) os << ',' << nl;
            first = false;
            os << pad << json(key).dump() << (indent > 0 ? ": " : ":");
            dump_into(os, value, indent, depth + 1);
        }
        os << nl << close_pad << '}';
        return;
    }
    case json::value_t::array: {
        if (j.empty()) { os << "[]"; return; }
        const bool scalars = std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
        if (scalars) {
            os << '[';
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) os << (indent > 0 ? ", " : ",");
                dump_into(os, j[i], indent, depth + 1);
            }
            os << ']';
            return;
        }
        os << '[' << nl;
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) os << ',' << nl;
            os << pad;
            dump_into(os, j[i], indent, depth + 1);
        }
        os << nl << close_pad << ']';
        return;
    }
    case json::value_t::number_float: {
        const double v = j.get<double>();
        if (!std::isfinite(v)) { os << "null"; return; }
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        std::string s(buf);
        if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
        os << s;
        return;
    }
    default:
        os << j.dump();
    }
}

} // namespace

RMatrix real_matrix_from_json(const json& j, const std::string& path)
{
    if (!j.is_array() || j.empty()) invalid(path, "expected a nonempty array of rows");
    const auto rows = j.size();
    if (!j[0].is_array()) invalid(path + "[0]", "expected an array");
    const auto cols = j[0].size();
    RMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string rp = path + "[" + std::to_string(r) + "]";
        if (!j[r].is_array()) invalid(rp, "expected an array");
        if (j[r].size() != cols) {
            throw Error(ErrorKind::NotSquare, rp + ": ragged row");
        }
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = finite_number(j[r][c], rp + "[" + std::to_string(c) + "]");
    }
    return m;
}

json to_json(const RMatrix& m)
{
    json out = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        out.push_back(std::move(row));
    }
    return out;
}

json to_json(const RealAntisymMatrix& m)
{
    return to_json(m.entries());
}

json to_json(const CMatrix& m)
{
    json out = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
        out.push_back(std::move(row));
    }
    return out;
}

CMatrix complex_matrix_from_json(const json& j, const std::string& path)
{
    if (!j.is_array()) invalid(path, "expected an array of rows");
    const auto rows = j.size();
    const auto cols = rows ? j[0].size() : 0;
    CMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string rp = path + "[" + std::to_string(r) + "]";
        if (!j[r].is_array() || j[r].size() != cols) invalid(rp, "ragged or malformed row");
        for (std::size_t c = 0; c < cols; ++c) {
            const json& e = j[r][c];
            const std::string ep = rp + "[" + std::to_string(c) + "]";
            if (!e.is_array() || e.size() != 2) invalid(ep, "expected [re, im]");
            m(r, c) = cplx(finite_number(e[0], ep + "[0]"), finite_number(e[1], ep + "[1]"));
        }
    }
    return m;
}

json to_json(const OperatorMatrix& m)
{
    return json{{"modes", m.trunc->modes()}, {"cutoff", m.trunc->cutoff()}, {"entries", to_json(m.entries)}};
}

OperatorMatrix operator_matrix_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("modes") || !j.contains("cutoff") || !j.contains("entries")) {
        invalid("$", "expected {modes, cutoff, entries}");
    }
    auto trunc = make_truncation(j.at("modes").get<int>(), j.at("cutoff").get<int>());
    CMatrix entries = complex_matrix_from_json(j.at("entries"), "$.entries");
    const auto n = static_cast<Eigen::Index>(trunc->size());
    if (entries.rows() != n || entries.cols() != n) {
        throw Error(ErrorKind::DimensionMismatch, "entries do not match the truncation size");
    }
    return OperatorMatrix{std::move(trunc), std::move(entries)};
}

std::string dump_stable(const json& j, int indent)
{
    std::ostringstream os;
    dump_into(os, j, indent, 0);
    return os.str();
}

} // namespace ccr
