#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "dstir/bell.hpp"

namespace dstir::io {

using nlohmann::json;

// Rational <-> "p/q" with "/q" omitted when q = 1.
json rational_to_json(const Rational& v);
Rational rational_from_json(const json& j);

// Poly <-> JSON array of coefficient strings, ascending degree.
json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);

// "c0;c1;..." rational strings; the zero polynomial prints as "0".
std::string poly_to_string(const Poly& p);
Poly poly_from_string(const std::string& s);

// Human-readable form, e.g. "3 - 6*lambda + 3*lambda^2".
std::string poly_pretty(const Poly& p);

// Series <-> {"order": M, "coeffs": [Poly...]}.
json series_to_json(const Series& s);
Series series_from_json(const json& j);

// StirlingTable <-> {"kind", "r", "nmax", "entries": [{"n","k","value"}...]}.
// When lambda is given, each value is the single evaluated rational instead
// of a coefficient array.
json table_to_json(const StirlingTable& t,
                   const std::optional<Rational>& lambda = std::nullopt);
StirlingTable table_from_json(const json& j);

// CSV export with header "n,k,value"; value uses poly_to_string (or the
// evaluated rational when lambda is given).
std::string table_to_csv(const StirlingTable& t,
                         const std::optional<Rational>& lambda = std::nullopt);

// BellPoly <-> {"n", "r", "coeffs_in_x": [Poly...]}.
json bell_to_json(const BellPoly& b);
BellPoly bell_from_json(const json& j);

// "1 + x^1*(...) + x^2*(...)" rendering.
std::string bell_pretty(const BellPoly& b);

}  // namespace dstir::io
