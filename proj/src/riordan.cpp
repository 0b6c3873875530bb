#include "pser/riordan.hpp"

#include <stdexcept>
#include <string>

#include "pser/picard.hpp"
#include "pser/reversion.hpp"

namespace pser {

namespace {

Series one(std::size_t precision)
{
    return Series::constant(Rational(1), precision);
}

Series inv(const Series& s, std::size_t precision)
{
    return reciprocal(one(precision), s, precision);
}

// x/g at precision p (g known through degree p-1 at least).
Series x_over(const Series& g, std::size_t p)
{
    if (p == 0) {
        return Series::zero(0);
    }
    return multiply_by_x(inv(g, p - 1));
}

void require_same_depth(const RiordanMatrix& a, const RiordanMatrix& b)
{
    if (a.depth() != b.depth()) {
        throw std::invalid_argument("Riordan matrices of depth " + std::to_string(a.depth()) + " and " +
                                    std::to_string(b.depth()) + " cannot be combined");
    }
}

} // namespace

Rational RiordanMatrix::entry(std::size_t n, std::size_t k) const
{
    if (n >= depth()) {
        throw precision_error("row " + std::to_string(n) + " is outside a depth-" + std::to_string(depth()) +
                              " triangle");
    }
    return k > n ? Rational(0) : rows_[n][k];
}

Series RiordanMatrix::column(std::size_t k) const
{
    std::vector<Rational> c(depth());
    for (std::size_t n = k; n < depth(); ++n) {
        c[n] = rows_[n][k];
    }
    return Series(std::move(c));
}

RiordanMatrix build_triangle(const Series& f, const Series& g, std::size_t depth)
{
    if (depth == 0) {
        throw precision_error("triangle depth must be at least 1");
    }
    if (f[0].is_zero()) {
        throw domain_error("f must have a nonzero constant term");
    }
    if (g[0].is_zero()) {
        throw domain_error("g must have a nonzero constant term");
    }
    if (f.precision() + 1 < depth || g.precision() + 1 < depth) {
        throw precision_error("depth " + std::to_string(depth) + " needs f and g through degree " +
                              std::to_string(depth - 1));
    }

    std::vector<std::vector<Rational>> d(depth);
    for (std::size_t n = 0; n < depth; ++n) {
        d[n].resize(n + 1);
    }
    const Rational g0 = g[0];
    for (std::size_t k = 0; k < depth; ++k) {
        for (std::size_t n = k; n < depth; ++n) {
            // Feed: f_n for the first column, the previous column's d_{n-1,k-1} otherwise.
            Rational acc = k == 0 ? f[n] : d[n - 1][k - 1];
            for (std::size_t j = 1; j <= n - k; ++j) {
                if (!g[j].is_zero()) {
                    acc -= g[j] * d[n - j][k];
                }
            }
            d[n][k] = acc / g0;
        }
    }
    return RiordanMatrix(f, g, std::move(d));
}

RiordanMatrix identity_triangle(std::size_t depth)
{
    const std::size_t p = depth == 0 ? 0 : depth - 1;
    return build_triangle(one(p), one(p), depth);
}

Series apply(const RiordanMatrix& t, const Series& h)
{
    const std::size_t p = t.depth() - 1;
    if (h.precision() < p) {
        throw precision_error("applying a depth-" + std::to_string(t.depth()) + " triangle needs h through degree " +
                              std::to_string(p));
    }
    const Series f_over_g = reciprocal(t.f(), t.g(), p);
    return cauchy_product(f_over_g, compose(truncate(h, p), x_over(t.g(), p)));
}

RiordanMatrix product(const RiordanMatrix& lhs, const RiordanMatrix& rhs)
{
    require_same_depth(lhs, rhs);
    const std::size_t p = lhs.depth() - 1;
    const Series w = x_over(lhs.g(), p);
    const Series f = cauchy_product(truncate(lhs.f(), p), compose(truncate(rhs.f(), p), w));
    const Series g = cauchy_product(truncate(lhs.g(), p), compose(truncate(rhs.g(), p), w));
    return build_triangle(f, g, lhs.depth());
}

RiordanMatrix power(const RiordanMatrix& t, std::size_t n)
{
    RiordanMatrix result = identity_triangle(t.depth());
    for (std::size_t i = 0; i < n; ++i) {
        result = product(result, t);
    }
    return result;
}

RiordanMatrix inverse(const RiordanMatrix& t)
{
    const std::size_t p = t.depth() - 1;
    const Series omega_inv = invert_series(x_over(t.g(), p + 1), p);
    const Series f_at = compose(truncate(t.f(), p), omega_inv);
    const Series g_at = compose(truncate(t.g(), p), omega_inv);
    return build_triangle(inv(f_at, p), inv(g_at, p), t.depth());
}

SequencePair a_z_sequences(const RiordanMatrix& t)
{
    if (t.depth() < 2) {
        throw precision_error("A- and Z-sequences need a triangle of depth at least 2");
    }
    const std::size_t p = t.depth() - 1;
    const Series omega_inv = invert_series(x_over(t.g(), p + 1), p);
    const Series a = inv(compose(truncate(t.g(), p), omega_inv), p);
    const Series inv_f_at = inv(compose(truncate(t.f(), p), omega_inv), p);
    const Series numerator = subtract(a, scale(inv_f_at, t.f()[0] / t.g()[0]));
    if (!numerator[0].is_zero()) {
        throw std::logic_error("Z-sequence numerator has nonzero constant term " + numerator[0].to_string());
    }
    return SequencePair{a, divide_by_x(numerator)};
}

RiordanMatrix inverse_via_sequences(const RiordanMatrix& t)
{
    const auto [a, z] = a_z_sequences(t);
    const Series f = scale(subtract(a, multiply_by_x(z)), t.g()[0] / t.f()[0]);
    return build_triangle(f, a, t.depth());
}

RiordanMatrix shift(const RiordanMatrix& t, long m)
{
    const long new_depth = static_cast<long>(t.depth()) + m;
    if (new_depth < 1) {
        throw precision_error("shift by " + std::to_string(m) + " leaves no rows of a depth-" +
                              std::to_string(t.depth()) + " triangle");
    }
    const std::size_t p = std::min(t.f().precision(), t.g().precision());
    const std::size_t need = static_cast<std::size_t>(new_depth) - 1;
    if (p < need) {
        throw precision_error("shift to depth " + std::to_string(new_depth) + " needs f and g through degree " +
                              std::to_string(need) + ", have " + std::to_string(p));
    }
    const Series g = truncate(t.g(), need);
    const Series base = m >= 0 ? g : inv(g, need);
    const Series f = cauchy_product(truncate(t.f(), need), power(base, static_cast<std::size_t>(m >= 0 ? m : -m)));
    return build_triangle(f, t.g(), static_cast<std::size_t>(new_depth));
}

RiordanMatrix from_classical(const Series& d, const Series& h, std::size_t depth)
{
    if (order(h) != SeriesOrder::finite(1)) {
        throw domain_error("classical h must have order exactly 1");
    }
    // g = x/h, f = x·d/h = d·g.
    const Series h_over_x = divide_by_x(h);
    const std::size_t p = std::min(d.precision(), h_over_x.precision());
    const Series g = inv(h_over_x, p);
    return build_triangle(cauchy_product(d, g), g, depth);
}

std::pair<Series, Series> to_classical(const RiordanMatrix& t)
{
    const std::size_t p = t.depth() - 1;
    return {reciprocal(t.f(), t.g(), p), x_over(t.g(), p)};
}

RiordanMatrix appell(const Series& d, std::size_t depth)
{
    return build_triangle(d, one(d.precision()), depth);
}

RiordanMatrix bell(const Series& d, std::size_t depth)
{
    return build_triangle(one(d.precision()), inv(d, d.precision()), depth);
}

RiordanMatrix associated(const Series& h, std::size_t depth)
{
    const Series g = inv(h, h.precision());
    return build_triangle(g, g, depth);
}

} // namespace pser
