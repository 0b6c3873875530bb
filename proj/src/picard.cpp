#include "pser/picard.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pser {

namespace {

std::size_t common_precision(const AffineMap& map, const Series& start)
{
    return std::min({map.slope.precision(), map.offset.precision(), start.precision()});
}

// (g0 - g)/g0, the slope data shared by every column scheme.
Series contraction_slope(const Series& g)
{
    if (g[0].is_zero()) {
        throw division_domain_error("divisor has zero constant term");
    }
    const Rational inv_g0 = Rational(1) / g[0];
    return scale(subtract(Series::constant(g[0], g.precision()), g), inv_g0);
}

} // namespace

IterationTrace::IterationTrace(std::vector<Series> iterates) : iterates_(std::move(iterates))
{
    if (iterates_.empty()) {
        throw std::invalid_argument("an iteration trace holds at least the start point");
    }
}

std::vector<std::vector<Rational>> IterationTrace::remainder_rows(const Series& limit) const
{
    std::vector<std::vector<Rational>> rows;
    for (std::size_t m = 1; m < iterates_.size(); ++m) {
        const Series& it = iterates_[m];
        const std::size_t agree = std::min({m, it.precision() + 1, limit.precision() + 1});
        for (std::size_t i = 0; i < agree; ++i) {
            if (it[i] != limit[i]) {
                throw domain_error("iterate " + std::to_string(m) + " differs from the limit at degree " +
                                   std::to_string(i));
            }
        }
        std::vector<Rational> row;
        if (m <= it.precision()) {
            std::size_t last = it.precision();
            while (last >= m && it[last].is_zero()) {
                --last;
            }
            for (std::size_t i = m; i <= last; ++i) {
                row.push_back(it[i]);
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

IterationTrace iterate_fixed(const AffineMap& map, const Series& start, std::size_t steps)
{
    if (!map.is_contractive()) {
        throw not_contractive_error("slope has a nonzero constant term");
    }
    if (steps > 0 && common_precision(map, start) + 1 < steps) {
        throw precision_error(std::to_string(steps) + " steps need precision at least " +
                              std::to_string(steps - 1));
    }
    std::vector<Series> out{start};
    out.reserve(steps + 1);
    for (std::size_t m = 0; m < steps; ++m) {
        out.push_back(map(out.back()));
    }
    return IterationTrace(std::move(out));
}

IterationTrace iterate_crossed(const IterationScheme& scheme, const Series& start, std::size_t steps)
{
    std::vector<Series> out{start};
    out.reserve(steps + 1);
    for (std::size_t m = 0; m < steps; ++m) {
        const AffineMap map = scheme.maps(m);
        if (!map.is_contractive()) {
            throw not_contractive_error("map at step " + std::to_string(m) + " has a slope of order 0");
        }
        out.push_back(map(out.back()));
    }
    return IterationTrace(std::move(out));
}

IterationScheme reciprocal_scheme(const Series& f, const Series& g)
{
    const std::size_t p = std::min(f.precision(), g.precision());
    const Series slope = truncate(contraction_slope(g), p);
    const Series offset = scale(truncate(f, p), Rational(1) / g[0]);
    IterationScheme scheme;
    scheme.maps = [slope, offset, p](std::size_t m) {
        return AffineMap{taylor_polynomial(slope, m, p), taylor_polynomial(offset, m, p)};
    };
    scheme.limit_map = AffineMap{slope, offset};
    return scheme;
}

// f only enters through prev_column.
IterationScheme column_scheme([[maybe_unused]] const Series& f, const Series& g, std::size_t n,
                              const Series& prev_column)
{
    if (n < 2) {
        throw std::invalid_argument("column_scheme builds columns n >= 2; use reciprocal_scheme for n = 1");
    }
    const std::size_t p = std::min(g.precision(), prev_column.precision() + 1);
    const Series slope = truncate(contraction_slope(g), p);
    // prev/g0 at precision p-1, so that x·(prev/g0) sits at precision p.
    const Series feed = p == 0 ? Series::zero(0) : scale(truncate(prev_column, p - 1), Rational(1) / g[0]);
    IterationScheme scheme;
    scheme.maps = [slope, feed, p](std::size_t m) {
        Series offset = Series::zero(p);
        if (m >= 1 && p >= 1) {
            offset = multiply_by_x(taylor_polynomial(feed, m - 1, p - 1));
        }
        return AffineMap{taylor_polynomial(slope, m, p), std::move(offset)};
    };
    scheme.limit_map = AffineMap{slope, p == 0 ? Series::zero(0) : multiply_by_x(feed)};
    return scheme;
}

Series reciprocal(const Series& f, const Series& g, std::size_t precision)
{
    if (g[0].is_zero()) {
        throw division_domain_error("divisor has zero constant term");
    }
    if (f.precision() < precision || g.precision() < precision) {
        throw precision_error("reciprocal to precision " + std::to_string(precision) +
                              " needs operands of at least that precision");
    }
    const IterationScheme scheme = reciprocal_scheme(truncate(f, precision), truncate(g, precision));
    return iterate_crossed(scheme, Series::zero(precision), precision + 1).back();
}

std::vector<Series> iterate_columns(const Series& f, const Series& g, std::size_t count, std::size_t precision)
{
    std::vector<Series> columns;
    if (count == 0) {
        return columns;
    }
    columns.push_back(reciprocal(f, g, precision));
    const Series f_p = truncate(f, precision);
    const Series g_p = truncate(g, precision);
    for (std::size_t n = 2; n <= count; ++n) {
        const IterationScheme scheme = column_scheme(f_p, g_p, n, columns.back());
        columns.push_back(iterate_crossed(scheme, Series::zero(precision), precision + 1).back());
    }
    return columns;
}

} // namespace pser
