#include "pser/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "pser/io.hpp"
#include "pser/picard.hpp"
#include "pser/reversion.hpp"
#include "pser/riordan.hpp"

namespace pser::cli {

using nlohmann::json;

namespace {

enum class Format { pretty, json, csv };

Series preset_series(Preset p, std::size_t precision)
{
    std::vector<Rational> c(precision + 1);
    switch (p) {
    case Preset::geometric:
        std::fill(c.begin(), c.end(), Rational(1));
        break;
    case Preset::pascal_g:
        c[0] = 1;
        if (precision >= 1) {
            c[1] = -1;
        }
        break;
    case Preset::one:
        c[0] = 1;
        break;
    case Preset::arithgeo:
    case Preset::curious_f:
        for (std::size_t i = 0; i <= precision; ++i) {
            c[i] = Rational(static_cast<long>(i + 1));
        }
        break;
    case Preset::curious_g:
        c[0] = -1;
        if (precision >= 1) {
            c[1] = 2;
        }
        break;
    }
    return Series(std::move(c));
}

// Resolves a series option, prefixing parse failures with the option name.
Series resolve_arg(const std::string& name, const std::string& text, std::size_t precision)
{
    try {
        return SeriesSpec::parse(text).resolve(precision);
    } catch (const parse_error& e) {
        throw parse_error(name + ": " + e.what());
    }
}

void print_triangle(std::ostream& out, const RiordanMatrix& t, Format format)
{
    switch (format) {
    case Format::json:
        out << triangle_to_json(t).dump() << '\n';
        break;
    case Format::csv:
        out << triangle_to_csv(t);
        break;
    case Format::pretty:
        out << triangle_to_pretty(t);
        break;
    }
}

void print_series(std::ostream& out, const Series& s, Format format)
{
    switch (format) {
    case Format::json:
        out << json{{"precision", s.precision()}, {"series", to_json(s)}}.dump() << '\n';
        break;
    case Format::csv: {
        for (std::size_t i = 0; i <= s.precision(); ++i) {
            out << (i ? "," : "") << s[i];
        }
        out << '\n';
        break;
    }
    case Format::pretty:
        out << render_polynomial(s, true) << '\n';
        break;
    }
}

// Pascal-triangle trace schemes; every iterate is an exact polynomial at
// the chosen precision.
IterationTrace pascal_trace(const std::string& scheme, std::size_t column, std::size_t steps)
{
    const Series one = Series::constant(Rational(1), steps);
    const Series pascal_g = Series::polynomial({1, -1}, steps);
    if (scheme == "geometric") {
        return iterate_fixed(AffineMap{Series::monomial(1, 1, steps), one}, Series::zero(steps), steps);
    }
    if (scheme == "curious") {
        const std::size_t p = 2 * steps;
        const AffineMap map{Series::polynomial({0, 2, -1}, p), Series::constant(1, p)};
        return iterate_fixed(map, Series::zero(p), steps);
    }
    if (scheme == "arithgeo") {
        column = 2;
    }
    if (column == 0) {
        throw parse_error("--n: columns are numbered from 1");
    }
    if (column == 1) {
        return iterate_crossed(reciprocal_scheme(one, pascal_g), Series::zero(steps), steps);
    }
    const auto columns = iterate_columns(one, pascal_g, column - 1, steps);
    return iterate_crossed(column_scheme(one, pascal_g, column, columns.back()), Series::zero(steps), steps);
}

} // namespace

SeriesSpec SeriesSpec::parse(std::string_view text)
{
    SeriesSpec spec;
    if (!text.empty() && text.front() == '[') {
        const Series literal = parse_series_literal(text);
        spec.value_ = std::vector<Rational>(literal.coefficients().begin(), literal.coefficients().end());
        return spec;
    }
    static const std::pair<std::string_view, Preset> presets[] = {
        {"geometric", Preset::geometric}, {"pascal_g", Preset::pascal_g},   {"one", Preset::one},
        {"arithgeo", Preset::arithgeo},   {"curious_f", Preset::curious_f}, {"curious_g", Preset::curious_g},
    };
    for (const auto& [name, preset] : presets) {
        if (name == text) {
            spec.value_ = preset;
            return spec;
        }
    }
    throw parse_error("unknown series '" + std::string(text) +
                      "' (expected a JSON literal or one of geometric, pascal_g, one, arithgeo, curious_f, curious_g)");
}

Series SeriesSpec::resolve(std::size_t precision) const
{
    if (const auto* literal = std::get_if<std::vector<Rational>>(&value_)) {
        return Series::polynomial(*literal, precision);
    }
    return preset_series(std::get<Preset>(value_), precision);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact power-series reciprocation, reversion and Riordan arrays", "pser"};
    app.require_subcommand(1);

    Format format = Format::pretty;
    const std::map<std::string, Format> formats{{"pretty", Format::pretty}, {"json", Format::json}, {"csv", Format::csv}};
    app.add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    std::function<void()> action;
    std::string f_text, g_text, f2_text, g2_text, omega_text, scheme;
    std::size_t depth = 10;
    std::size_t precision = 10;
    std::size_t steps = 10;
    std::size_t column = 3;
    std::size_t max_n = 10;

    auto* triangle = app.add_subcommand("triangle", "Build T(f|g) by its column recurrences")->fallthrough();
    triangle->add_option("--f", f_text, "Series f")->required();
    triangle->add_option("--g", g_text, "Series g")->required();
    triangle->add_option("--depth", depth, "Rows/columns")->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
    triangle->callback([&] {
        action = [&] {
            const std::size_t p = depth - 1;
            print_triangle(out, build_triangle(resolve_arg("--f", f_text, p), resolve_arg("--g", g_text, p), depth),
                           format);
        };
    });

    auto* inverse_cmd = app.add_subcommand("inverse", "Group inverse of T(f|g)")->fallthrough();
    inverse_cmd->add_option("--f", f_text, "Series f")->required();
    inverse_cmd->add_option("--g", g_text, "Series g")->required();
    inverse_cmd->add_option("--depth", depth, "Rows/columns")->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
    inverse_cmd->callback([&] {
        action = [&] {
            const std::size_t p = depth - 1;
            const auto t = build_triangle(resolve_arg("--f", f_text, p), resolve_arg("--g", g_text, p), depth);
            print_triangle(out, inverse(t), format);
        };
    });

    auto* product_cmd = app.add_subcommand("product", "Group product T(f1|g1)·T(f2|g2)")->fallthrough();
    product_cmd->add_option("--f1", f_text, "Series f1")->required();
    product_cmd->add_option("--g1", g_text, "Series g1")->required();
    product_cmd->add_option("--f2", f2_text, "Series f2")->required();
    product_cmd->add_option("--g2", g2_text, "Series g2")->required();
    product_cmd->add_option("--depth", depth, "Rows/columns")->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
    product_cmd->callback([&] {
        action = [&] {
            const std::size_t p = depth - 1;
            const auto lhs = build_triangle(resolve_arg("--f1", f_text, p), resolve_arg("--g1", g_text, p), depth);
            const auto rhs = build_triangle(resolve_arg("--f2", f2_text, p), resolve_arg("--g2", g2_text, p), depth);
            print_triangle(out, product(lhs, rhs), format);
        };
    });

    auto* recip = app.add_subcommand("recip", "f/g by crossed fixed-point iteration")->fallthrough();
    recip->add_option("--f", f_text, "Numerator")->required();
    recip->add_option("--g", g_text, "Denominator")->required();
    recip->add_option("--precision", precision, "Highest degree");
    recip->callback([&] {
        action = [&] {
            print_series(out,
                         reciprocal(resolve_arg("--f", f_text, precision), resolve_arg("--g", g_text, precision),
                                    precision),
                         format);
        };
    });

    auto* invert = app.add_subcommand("invert", "Compositional inverse of omega")->fallthrough();
    invert->add_option("--omega", omega_text, "Series of order 1")->required();
    invert->add_option("--precision", precision, "Highest degree");
    invert->callback([&] {
        action = [&] {
            print_series(out, invert_series(resolve_arg("--omega", omega_text, precision + 1), precision), format);
        };
    });

    auto* trace = app.add_subcommand("trace", "Fixed-point iterates of the named scheme")->fallthrough();
    trace->add_option("--scheme", scheme, "geometric, arithgeo, column or curious")
        ->required()
        ->check(CLI::IsMember({"geometric", "arithgeo", "column", "curious"}));
    trace->add_option("--n", column, "Pascal column for --scheme column (1-based)");
    trace->add_option("--steps", steps, "Number of iterations")->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
    trace->callback([&] {
        action = [&] {
            const IterationTrace tr = pascal_trace(scheme, column, steps);
            if (format == Format::json) {
                json iterates = json::array();
                for (const Series& s : tr.iterates()) {
                    iterates.push_back(to_json(s));
                }
                out << json{{"scheme", scheme}, {"steps", steps}, {"iterates", iterates}}.dump() << '\n';
                return;
            }
            for (const Series& s : tr.iterates()) {
                if (format == Format::csv) {
                    for (std::size_t i = 0; i <= s.precision(); ++i) {
                        out << (i ? "," : "") << s[i];
                    }
                    out << '\n';
                } else {
                    out << render_polynomial(s, false) << '\n';
                }
            }
        };
    });

    auto* azseq = app.add_subcommand("azseq", "A- and Z-sequences of T(f|g)")->fallthrough();
    azseq->add_option("--f", f_text, "Series f")->required();
    azseq->add_option("--g", g_text, "Series g")->required();
    azseq->add_option("--precision", precision, "Highest degree");
    azseq->callback([&] {
        action = [&] {
            // Z comes out one degree short of the triangle, so build one row deeper.
            const std::size_t d = precision + 2;
            const auto t = build_triangle(resolve_arg("--f", f_text, d - 1), resolve_arg("--g", g_text, d - 1), d);
            const auto seq = a_z_sequences(t);
            const Series a = truncate(seq.a_seq, precision);
            const Series& z = seq.z_seq;
            switch (format) {
            case Format::json:
                out << json{{"A", to_json(a)}, {"Z", to_json(z)}}.dump() << '\n';
                break;
            case Format::csv:
                for (const auto* s : {&a, &z}) {
                    for (std::size_t i = 0; i <= s->precision(); ++i) {
                        out << (i ? "," : "") << (*s)[i];
                    }
                    out << '\n';
                }
                break;
            case Format::pretty:
                out << "A = " << render_polynomial(a) << '\n' << "Z = " << render_polynomial(z) << '\n';
                break;
            }
        };
    });

    auto* lagrange = app.add_subcommand("lagrange", "Check the Lagrange inversion identities for omega")->fallthrough();
    lagrange->add_option("--omega", omega_text, "Series of order 1")->required();
    lagrange->add_option("--max-n", max_n, "Largest n checked");
    lagrange->callback([&] {
        action = [&] {
            const LagrangeReport report = verify_lagrange(resolve_arg("--omega", omega_text, max_n + 1), max_n);
            if (format == Format::json) {
                out << lagrange_report_to_json(report).dump() << '\n';
                return;
            }
            out << "checked 1 <= k <= n <= " << report.max_n << ": " << report.violations.size() << " violations\n";
            for (const auto& v : report.violations) {
                out << "n=" << v.n << " k=" << v.k << " lhs=" << v.lhs << " rhs=" << v.rhs << '\n';
            }
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_parse;
    }

    try {
        action();
        return exit_ok;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_parse;
    } catch (const precision_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_precision;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_internal;
    }
}

} // namespace pser::cli
