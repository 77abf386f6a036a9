#pragma once

#include "sbv/bd.hpp"
#include "sbv/rational.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sbv {

// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

// Reads one scalar literal per line; `#` starts a comment, blank lines are
// skipped. Decimal literals are exact rationals, so nothing is lost even when
// the caller later runs in floating point. Throws format_error with the
// offending path:line.
std::vector<Rational> read_scalar_file(const std::string& path);

// {order, parity, rows}: row-major scalars, JSON numbers in float mode and
// "p/q" strings in exact mode.
nlohmann::json bd_to_json(const BDFactorization<double>& bd);
nlohmann::json bd_to_json(const BDFactorization<Rational>& bd);

// Accepts either float or exact serializations (numbers are exact dyadic
// rationals, so the exact reader takes both).
BDFactorization<double> bd_from_json_double(const nlohmann::json& j);
BDFactorization<Rational> bd_from_json_rational(const nlohmann::json& j);

std::string bd_to_text(const BDFactorization<double>& bd);
std::string bd_to_text(const BDFactorization<Rational>& bd);

} // namespace sbv
