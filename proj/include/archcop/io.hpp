#pragma once

// CSV and JSON encodings shared by the CLI and the tests.
//
// Numbers are written as the shortest decimal that round-trips to the same
// double; non-finite values become "inf", "-inf" or "nan". JSON objects are
// emitted on one line with keys sorted.

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "archcop/diagnostics.hpp"

namespace archcop {

std::string format_double(double x);

nlohmann::json to_json(const ConditionReport& r);
nlohmann::json to_json(const ValidityReport& r);
nlohmann::json to_json(const TauEstimate& e);

std::string dump_line(const nlohmann::json& j);

/// Header `u,v`, one pair per row.
void write_pairs_csv(std::ostream& os, std::span<const UnitPair> pairs);

/// Reads the `u,v` format back. Throws DomainError on malformed input or
/// coordinates outside [0,1].
std::vector<UnitPair> read_pairs_csv(std::istream& is);

/// Header `u,v,value`; rows in row-major order over axis x axis.
void write_lattice_csv(std::ostream& os, std::span<const double> axis,
                       std::span<const double> values);

/// Header `z,phi`.
void write_curve_csv(std::ostream& os, std::span<const double> z, std::span<const double> phi);

}  // namespace archcop
