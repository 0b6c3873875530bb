#include "pser/io.hpp"

#include <algorithm>
#include <sstream>

namespace pser {

using nlohmann::json;

std::vector<Rational> rationals_from_json(const json& array)
{
    if (!array.is_array()) {
        throw parse_error("series literal must be a JSON array");
    }
    if (array.empty()) {
        throw parse_error("series literal must not be empty");
    }
    std::vector<Rational> out;
    out.reserve(array.size());
    for (std::size_t i = 0; i < array.size(); ++i) {
        const json& item = array[i];
        try {
            if (item.is_string()) {
                out.push_back(Rational::parse(item.get<std::string>()));
            } else if (item.is_number_integer()) {
                out.push_back(Rational::parse(item.dump()));
            } else {
                throw parse_error("expected a rational string or integer, got " + item.dump());
            }
        } catch (const std::invalid_argument& e) {
            throw parse_error("coefficient " + std::to_string(i) + ": " + e.what());
        }
    }
    return out;
}

Series parse_series_literal(std::string_view text)
{
    const json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        throw parse_error("series literal is not valid JSON: " + std::string(text));
    }
    return Series(rationals_from_json(doc));
}

Series parse_series_literal(std::string_view text, std::size_t precision)
{
    const Series s = parse_series_literal(text);
    return Series::polynomial(s.coefficients(), precision);
}

json to_json(const std::vector<Rational>& values)
{
    json out = json::array();
    for (const Rational& v : values) {
        out.push_back(v.to_string());
    }
    return out;
}

json to_json(const Series& s)
{
    return to_json(std::vector<Rational>(s.coefficients().begin(), s.coefficients().end()));
}

std::string render_polynomial(const Series& s, bool spaced)
{
    std::string out;
    for (std::size_t i = 0; i <= s.precision(); ++i) {
        const Rational& c = s[i];
        if (c.is_zero()) {
            continue;
        }
        const bool negative = c.sign() < 0;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else if (spaced) {
            out += negative ? " - " : " + ";
        } else {
            out += negative ? "-" : "+";
        }
        const Rational mag = negative ? -c : c;
        if (i == 0) {
            out += mag.to_string();
            continue;
        }
        if (!mag.is_integer()) {
            out += "(" + mag.to_string() + ")";
        } else if (mag != Rational(1)) {
            out += mag.to_string();
        }
        out += "x";
        if (i > 1) {
            out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

json triangle_to_json(const RiordanMatrix& t)
{
    json rows = json::array();
    for (const auto& row : t.rows()) {
        rows.push_back(to_json(row));
    }
    return json{{"f", to_json(t.f())}, {"g", to_json(t.g())}, {"depth", t.depth()}, {"rows", rows}};
}

std::vector<std::vector<Rational>> triangle_rows_from_json(const json& doc)
{
    if (!doc.is_object() || !doc.contains("rows") || !doc.contains("depth")) {
        throw parse_error("triangle document needs \"depth\" and \"rows\"");
    }
    const auto& rows = doc.at("rows");
    if (!rows.is_array() || !doc.at("depth").is_number_unsigned() || rows.size() != doc.at("depth").get<std::size_t>()) {
        throw parse_error("triangle \"rows\" must be an array of length \"depth\"");
    }
    std::vector<std::vector<Rational>> out;
    for (std::size_t n = 0; n < rows.size(); ++n) {
        auto row = rationals_from_json(rows[n]);
        if (row.size() != n + 1) {
            throw parse_error("triangle row " + std::to_string(n) + " must have " + std::to_string(n + 1) +
                              " entries");
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::string triangle_to_csv(const RiordanMatrix& t)
{
    std::ostringstream os;
    for (const auto& row : t.rows()) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            os << (k ? "," : "") << row[k];
        }
        os << '\n';
    }
    return os.str();
}

std::string triangle_to_pretty(const RiordanMatrix& t)
{
    std::vector<std::size_t> width(t.depth(), 0);
    for (const auto& row : t.rows()) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            width[k] = std::max(width[k], row[k].to_string().size());
        }
    }
    std::ostringstream os;
    for (const auto& row : t.rows()) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            const std::string cell = row[k].to_string();
            os << (k ? "  " : "") << std::string(width[k] - cell.size(), ' ') << cell;
        }
        os << '\n';
    }
    return os.str();
}

json lagrange_report_to_json(const LagrangeReport& report)
{
    json violations = json::array();
    for (const auto& v : report.violations) {
        violations.push_back(
            json{{"n", v.n}, {"k", v.k}, {"lhs", v.lhs.to_string()}, {"rhs", v.rhs.to_string()}});
    }
    return json{{"max_n", report.max_n}, {"violations", violations}};
}

} // namespace pser
