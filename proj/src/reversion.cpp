#include "pser/reversion.hpp"

#include <stdexcept>
#include <string>

namespace pser {

ReversionProblem::ReversionProblem(Series omega) : omega_(std::move(omega)), g_(Series::zero(0))
{
    if (order(omega_) != SeriesOrder::finite(1)) {
        throw not_invertible_error("order must be 1");
    }
    // omega = x·h with h0 = omega1 ≠ 0, and g = 1/h.
    const Series h = divide_by_x(omega_);
    g_ = reciprocal(Series::constant(Rational(1), h.precision()), h, h.precision());
}

Series ReversionProblem::contraction(const Series& y) const
{
    return multiply_by_x(compose(g_, y));
}

IterationTrace reversion_stages(const Series& omega, std::size_t precision)
{
    const ReversionProblem problem(omega);
    if (omega.precision() < precision + 1) {
        throw precision_error("inverting to degree " + std::to_string(precision) + " needs omega at precision " +
                              std::to_string(precision + 1) + ", have " + std::to_string(omega.precision()));
    }
    std::vector<Series> stages{Series::zero(0)};
    for (std::size_t k = 1; k <= precision; ++k) {
        // Stage k only needs g through degree k-1: F(T_{k-1}) = x·g(T_{k-1}).
        // Stage k-1 is stored at precision k-1, so the product lands at precision k.
        stages.push_back(multiply_by_x(compose(truncate(problem.g(), k - 1), stages.back())));
    }
    return IterationTrace(std::move(stages));
}

Series invert_series(const Series& omega, std::size_t precision)
{
    return reversion_stages(omega, precision).back();
}

Rational lagrange_coefficient(const Series& g, std::size_t n, std::size_t k)
{
    if (n == 0 || k == 0) {
        throw std::invalid_argument("lagrange_coefficient needs n >= 1 and k >= 1");
    }
    if (g[0].is_zero()) {
        throw division_domain_error("g = x/omega must have a nonzero constant term");
    }
    if (k > n) {
        return Rational(0);
    }
    const std::size_t d = n - k;
    const Series gn = power(truncate(g, d), n);
    return Rational(static_cast<long>(k), static_cast<long>(n)) * gn[d];
}

LagrangeReport verify_lagrange(const Series& omega, std::size_t max_n)
{
    LagrangeReport report;
    report.max_n = max_n;
    if (max_n == 0) {
        return report;
    }
    const Series inv = invert_series(omega, max_n);
    const ReversionProblem problem(truncate(omega, max_n + 1));
    const Series& g = problem.g();

    // powers_of_inv[k] = (ω⁻¹)^k, built incrementally.
    std::vector<Series> powers_of_inv{Series::constant(Rational(1), max_n)};
    for (std::size_t k = 1; k <= max_n; ++k) {
        powers_of_inv.push_back(cauchy_product(powers_of_inv.back(), inv));
    }
    Series g_pow = Series::constant(Rational(1), g.precision());
    for (std::size_t n = 1; n <= max_n; ++n) {
        g_pow = cauchy_product(g_pow, g);
        for (std::size_t k = 1; k <= n; ++k) {
            const Rational lhs = Rational(static_cast<long>(n)) * powers_of_inv[k][n];
            const Rational rhs = Rational(static_cast<long>(k)) * g_pow[n - k];
            if (lhs != rhs) {
                report.violations.push_back({n, k, lhs, rhs});
            }
        }
    }
    return report;
}

} // namespace pser
