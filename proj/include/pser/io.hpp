#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pser/errors.hpp"
#include "pser/reversion.hpp"
#include "pser/riordan.hpp"
#include "pser/series.hpp"

namespace pser {

// Malformed textual input (series literals, triangle documents).
class parse_error : public error {
public:
    using error::error;
};

// Series literal: a JSON array indexed by degree whose items are "p/q" or
// integer strings (bare JSON integers are accepted too), e.g. ["1","-1"]
// for 1 - x. The literal is a polynomial; it is stored at `precision`, or
// at its own length when precision is omitted.
Series parse_series_literal(std::string_view text);
Series parse_series_literal(std::string_view text, std::size_t precision);
std::vector<Rational> rationals_from_json(const nlohmann::json& array);

nlohmann::json to_json(const Series& s);
nlohmann::json to_json(const std::vector<Rational>& values);

// Ascending-degree polynomial text with explicit signs and ^ exponents,
// e.g. "1+2x+3x^2-4x^3+x^4" (compact) or "1 + 2x + 3x^2" (spaced).
// Zero terms are omitted; the zero polynomial is "0". Non-integer
// coefficients are parenthesised: "(1/2)x^3".
std::string render_polynomial(const Series& s, bool spaced = true);

// { "f": [...], "g": [...], "depth": n, "rows": [[d00],[d10,d11],...] }
nlohmann::json triangle_to_json(const RiordanMatrix& t);
// The entry block of a triangle document; validates the lower-triangular shape.
std::vector<std::vector<Rational>> triangle_rows_from_json(const nlohmann::json& doc);
// One row per line, entries separated by commas.
std::string triangle_to_csv(const RiordanMatrix& t);
// Right-aligned columns.
std::string triangle_to_pretty(const RiordanMatrix& t);

// { "max_n": n, "violations": [ {"n":..,"k":..,"lhs":"p/q","rhs":"p/q"} ] }
nlohmann::json lagrange_report_to_json(const LagrangeReport& report);

} // namespace pser
