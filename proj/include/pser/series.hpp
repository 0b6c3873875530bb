#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "pser/errors.hpp"
#include "pser/rational.hpp"

namespace pser {

/// Truncated formal power series over the rationals.
///
/// A series of precision P stores exactly P+1 coefficients; index i holds
/// the coefficient of x^i and every stored coefficient is authoritative.
/// Nothing is known about degrees above P. Values are immutable once built.
class Series {
public:
    /// Builds from explicit coefficients; precision is size()-1.
    /// Throws std::invalid_argument if the list is empty.
    explicit Series(std::vector<Rational> coeffs);
    Series(std::initializer_list<Rational> coeffs);

    /// A polynomial (finitely many nonzero terms) known exactly, stored to
    /// precision P. Coefficients past P are dropped.
    static Series polynomial(std::span<const Rational> coeffs, std::size_t precision);
    static Series polynomial(std::initializer_list<Rational> coeffs, std::size_t precision);

    static Series zero(std::size_t precision);
    static Series constant(const Rational& c, std::size_t precision);
    /// c·x^k at the given precision (zero if k > precision).
    static Series monomial(const Rational& c, std::size_t k, std::size_t precision);

    [[nodiscard]] std::size_t precision() const { return coeffs_.size() - 1; }
    [[nodiscard]] std::span<const Rational> coefficients() const { return coeffs_; }

    // Unchecked; n must be <= precision().
    [[nodiscard]] const Rational& operator[](std::size_t n) const { return coeffs_[n]; }

    [[nodiscard]] bool is_zero() const;

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// ω(s): index of the first nonzero coefficient, or Infinite when every
/// stored coefficient vanishes (the order then exceeds the precision).
class SeriesOrder {
public:
    static SeriesOrder infinite() { return SeriesOrder{}; }
    static SeriesOrder finite(std::size_t n) { return SeriesOrder{n}; }

    [[nodiscard]] bool is_infinite() const { return !value_.has_value(); }
    // Requires !is_infinite().
    [[nodiscard]] std::size_t value() const { return *value_; }

    friend bool operator==(const SeriesOrder&, const SeriesOrder&) = default;
    friend std::strong_ordering operator<=>(const SeriesOrder& a, const SeriesOrder& b)
    {
        if (a.is_infinite() || b.is_infinite()) {
            return a.is_infinite() <=> b.is_infinite();
        }
        return *a.value_ <=> *b.value_;
    }

private:
    SeriesOrder() = default;
    explicit SeriesOrder(std::size_t n) : value_(n) {}

    std::optional<std::size_t> value_;
};

SeriesOrder order(const Series& s);

/// Ultrametric distance 1/2^ω(a-b), or 0 when a-b vanishes at the common
/// precision. Both inputs must share a precision (std::invalid_argument otherwise).
Rational distance(const Series& a, const Series& b);

/// Degree-m Taylor truncation. Throws precision_error if m > precision(s).
Series truncate(const Series& s, std::size_t m);

/// The degree-m Taylor polynomial of s kept at precision `precision`:
/// coefficients above m are zeroed instead of dropped.
Series taylor_polynomial(const Series& s, std::size_t m, std::size_t precision);

/// True iff the degree-m truncations coincide (m must not exceed either precision).
bool equal_through(const Series& a, const Series& b, std::size_t m);

Series add(const Series& a, const Series& b);
Series negate(const Series& s);
Series subtract(const Series& a, const Series& b);
Series scale(const Series& s, const Rational& c);
Series cauchy_product(const Series& a, const Series& b);
Series power(const Series& s, std::size_t k);

/// outer(inner) by Horner evaluation at precision min(P_outer, P_inner).
/// Throws composition_domain_error when inner has a nonzero constant term.
Series compose(const Series& outer, const Series& inner);

/// Termwise derivative; precision drops by one. Throws precision_error at precision 0.
Series derivative(const Series& s);

/// [x^n] s. Throws precision_error if n > precision(s).
Rational coefficient(const Series& s, std::size_t n);

/// x^k·s; precision grows by k.
Series multiply_by_x(const Series& s, std::size_t k = 1);

/// s/x^k; requires the first k coefficients to vanish (domain_error
/// otherwise) and precision >= k (precision_error otherwise).
Series divide_by_x(const Series& s, std::size_t k = 1);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return subtract(a, b); }
inline Series operator-(const Series& s) { return negate(s); }
inline Series operator*(const Series& a, const Series& b) { return cauchy_product(a, b); }

} // namespace pser
