#include "archcop/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string_view>

namespace archcop {

namespace {

nlohmann::json number(double x) {
    if (std::isfinite(x)) return x;
    return format_double(x);
}

double parse_field(std::string_view s, std::size_t line) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw DomainError("malformed number on line " + std::to_string(line));
    }
    return x;
}

}  // namespace

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

nlohmann::json to_json(const ConditionReport& r) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& c : r.checks) {
        j[c.name] = {{"passed", c.passed},
                     {"worst_z", number(c.worst_z)},
                     {"worst_value", number(c.worst_value)}};
    }
    return j;
}

nlohmann::json to_json(const ValidityReport& r) {
    nlohmann::json probes = nlohmann::json::array();
    for (const auto& p : r.singularity_probes) {
        probes.push_back({{"u", number(p.u)}, {"ratio", number(p.ratio)}});
    }
    nlohmann::json passed = nlohmann::json::object();
    for (const auto& [name, ok] : r.passed) passed[name] = ok;
    nlohmann::json tol = nlohmann::json::object();
    for (const auto& [name, t] : r.tolerances) tol[name] = number(t);
    return {
        {"family", std::string(family_tag(r.family))},
        {"alpha", number(r.alpha)},
        {"grid_n", r.grid_n},
        {"boundary_max_abs_err", number(r.boundary_max_abs_err)},
        {"margin_max_abs_err", number(r.margin_max_abs_err)},
        {"min_cell_volume", number(r.min_cell_volume)},
        {"singularity_probes", probes},
        {"generator_conditions", to_json(r.generator_conditions)},
        {"passed", passed},
        {"tolerances", tol},
    };
}

nlohmann::json to_json(const TauEstimate& e) {
    return {
        {"tau", number(e.tau)},
        {"method", std::string(tau_method_tag(e.method))},
        {"error_bound", number(e.error_bound)},
        {"n", e.n},
        {"note", e.note},
    };
}

std::string dump_line(const nlohmann::json& j) { return j.dump(); }

void write_pairs_csv(std::ostream& os, std::span<const UnitPair> pairs) {
    os << "u,v\n";
    for (const auto& p : pairs) os << format_double(p.u) << ',' << format_double(p.v) << '\n';
}

std::vector<UnitPair> read_pairs_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw DomainError("empty CSV input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "u,v") throw DomainError("expected CSV header 'u,v'");
    std::vector<UnitPair> out;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw DomainError("expected two fields on line " + std::to_string(lineno));
        }
        const std::string_view view(line);
        const double u = parse_field(view.substr(0, comma), lineno);
        const double v = parse_field(view.substr(comma + 1), lineno);
        if (!(u >= 0.0 && u <= 1.0 && v >= 0.0 && v <= 1.0)) {
            throw DomainError("pair outside the unit square on line " + std::to_string(lineno));
        }
        out.push_back({u, v});
    }
    return out;
}

void write_lattice_csv(std::ostream& os, std::span<const double> axis,
                       std::span<const double> values) {
    const std::size_t m = axis.size();
    os << "u,v,value\n";
    for (std::size_t i = 0; i < m; ++i) {
        const std::string u = format_double(axis[i]);
        for (std::size_t j = 0; j < m; ++j) {
            os << u << ',' << format_double(axis[j]) << ',' << format_double(values[i * m + j])
               << '\n';
        }
    }
}

void write_curve_csv(std::ostream& os, std::span<const double> z, std::span<const double> phi) {
    os << "z,phi\n";
    for (std::size_t i = 0; i < z.size(); ++i) {
        os << format_double(z[i]) << ',' << format_double(phi[i]) << '\n';
    }
}

}  // namespace archcop
