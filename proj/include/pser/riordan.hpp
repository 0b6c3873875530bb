#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pser/series.hpp"

namespace pser {

/// The Riordan matrix T(f|g) truncated to its top-left depth×depth block.
///
/// Column k is the series x^k·f/g^{k+1}; entry(n, k) = d_{n,k} with d_{0,0}
/// in the top-left corner. f and g are kept at the precision they were
/// given (at least depth-1); the entry block is the authoritative content
/// and equality compares depth and entries only.
class RiordanMatrix {
public:
    [[nodiscard]] const Series& f() const { return f_; }
    [[nodiscard]] const Series& g() const { return g_; }
    [[nodiscard]] std::size_t depth() const { return rows_.size(); }

    // d_{n,k}; zero above the diagonal. Throws precision_error if n >= depth.
    [[nodiscard]] Rational entry(std::size_t n, std::size_t k) const;
    [[nodiscard]] const std::vector<Rational>& row(std::size_t n) const { return rows_.at(n); }
    [[nodiscard]] const std::vector<std::vector<Rational>>& rows() const { return rows_; }
    // Column k as a series at precision depth-1.
    [[nodiscard]] Series column(std::size_t k) const;

    friend bool operator==(const RiordanMatrix& a, const RiordanMatrix& b) { return a.rows_ == b.rows_; }

private:
    friend RiordanMatrix build_triangle(const Series& f, const Series& g, std::size_t depth);

    RiordanMatrix(Series f, Series g, std::vector<std::vector<Rational>> rows)
        : f_(std::move(f)), g_(std::move(g)), rows_(std::move(rows)) {}

    Series f_;
    Series g_;
    std::vector<std::vector<Rational>> rows_;
};

struct SequencePair {
    Series a_seq;
    Series z_seq;
};

/// Column-by-column construction of T(f|g):
///   d_{n,0} = (f_n - Σ_{j=1..n} g_j·d_{n-j,0}) / g0
///   d_{n,k} = (d_{n-1,k-1} - Σ_{j=1..n-k} g_j·d_{n-j,k}) / g0   (k >= 1)
/// Throws domain_error for f0 = 0 or g0 = 0, precision_error if depth = 0
/// or either parameter is known to less than degree depth-1.
RiordanMatrix build_triangle(const Series& f, const Series& g, std::size_t depth);

RiordanMatrix identity_triangle(std::size_t depth);

/// T(f|g)(h) = (f/g)·h(x/g) through degree depth-1. Needs precision(h) >= depth-1.
Series apply(const RiordanMatrix& t, const Series& h);

/// T(f1|g1)·T(f2|g2) = T(f1·f2(x/g1) | g1·g2(x/g1)). Depths must agree
/// (std::invalid_argument otherwise).
RiordanMatrix product(const RiordanMatrix& lhs, const RiordanMatrix& rhs);

/// n-fold group product; the identity for n = 0.
RiordanMatrix power(const RiordanMatrix& t, std::size_t n);

/// T(1/f(ω⁻¹) | 1/g(ω⁻¹)) with ω = x/g, ω⁻¹ from series reversion.
RiordanMatrix inverse(const RiordanMatrix& t);

/// A = 1/g(ω⁻¹) at precision depth-1 and Z = (A - (f0/g0)/f(ω⁻¹))/x at
/// precision depth-2. Throws precision_error for depth < 2.
SequencePair a_z_sequences(const RiordanMatrix& t);

/// T((g0/f0)(A - xZ) | A), the inverse computed from the A- and Z-sequences.
RiordanMatrix inverse_via_sequences(const RiordanMatrix& t);

/// T(f·g^m | g) at depth depth+m. For m > 0 this prepends m columns and
/// rows, for m < 0 it deletes the first |m|. Throws precision_error when the
/// new depth would be < 1 or f, g are not known far enough.
RiordanMatrix shift(const RiordanMatrix& t, long m);

/// Classical pair (d(x), h(x)) with order(h) = 1 ↦ T(x·d/h | x/h).
RiordanMatrix from_classical(const Series& d, const Series& h, std::size_t depth);
/// T(f|g) ↦ (f/g, x/g), both at precision depth-1.
std::pair<Series, Series> to_classical(const RiordanMatrix& t);

// Subgroup elements.
RiordanMatrix appell(const Series& d, std::size_t depth);       // T(d|1)
RiordanMatrix bell(const Series& d, std::size_t depth);         // T(1|1/d)
RiordanMatrix associated(const Series& h, std::size_t depth);   // T(1/h|1/h)

} // namespace pser
