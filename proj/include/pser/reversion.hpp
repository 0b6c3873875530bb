#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pser/picard.hpp"
#include "pser/series.hpp"

namespace pser {

/// A series ω of order exactly one together with g = x/ω (so g0 ≠ 0 and
/// ω·g = x at precision). ω⁻¹ is the unique fixed point of the
/// 1/2-contraction F(y) = x·g(y) on series without constant term.
class ReversionProblem {
public:
    /// Throws not_invertible_error unless order(omega) = 1. g is obtained at
    /// precision P_omega - 1.
    explicit ReversionProblem(Series omega);

    [[nodiscard]] const Series& omega() const { return omega_; }
    [[nodiscard]] const Series& g() const { return g_; }

    /// F(y) = x·g(y) at precision min(P_g, P_y) + 1. y must have order >= 1.
    [[nodiscard]] Series contraction(const Series& y) const;

private:
    Series omega_;
    Series g_;
};

/// The nested-truncation stages T_0 = 0, T_1 = g0·x, T_k = T_k(F(T_{k-1}))
/// up to k = precision. Stage k is a polynomial of degree <= k stored at
/// precision k; it agrees with ω⁻¹ through degree k.
IterationTrace reversion_stages(const Series& omega, std::size_t precision);

/// ω⁻¹ through degree `precision`. Requires order(omega) = 1
/// (not_invertible_error) and precision(omega) >= precision + 1 (precision_error).
Series invert_series(const Series& omega, std::size_t precision);

/// [x^n](ω⁻¹)^k predicted by Lagrange inversion: (k/n)·[x^{n-k}] g^n.
/// Zero when k > n. Throws std::invalid_argument for n = 0 or k = 0,
/// division_domain_error for g0 = 0, precision_error if precision(g) < n - k.
Rational lagrange_coefficient(const Series& g, std::size_t n, std::size_t k);

struct LagrangeViolation {
    std::size_t n;
    std::size_t k;
    Rational lhs;  // n·[x^n](ω⁻¹)^k
    Rational rhs;  // k·[x^{n-k}] g^n
};

struct LagrangeReport {
    std::size_t max_n = 0;
    std::vector<LagrangeViolation> violations;

    [[nodiscard]] bool holds() const { return violations.empty(); }
};

/// Checks n·[x^n](ω⁻¹)^k = k·[x^{n-k}](x/ω)^n for 1 <= k <= n <= max_n,
/// with ω⁻¹ from invert_series. Needs precision(omega) >= max_n + 1.
LagrangeReport verify_lagrange(const Series& omega, std::size_t max_n);

} // namespace pser
