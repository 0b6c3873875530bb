#include "pser/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pser {

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw std::invalid_argument("a series needs at least one coefficient");
    }
}

Series::Series(std::initializer_list<Rational> coeffs) : Series(std::vector<Rational>(coeffs)) {}

Series Series::polynomial(std::span<const Rational> coeffs, std::size_t precision)
{
    std::vector<Rational> out(precision + 1);
    const std::size_t n = std::min(coeffs.size(), precision + 1);
    std::copy_n(coeffs.begin(), n, out.begin());
    return Series(std::move(out));
}

Series Series::polynomial(std::initializer_list<Rational> coeffs, std::size_t precision)
{
    return polynomial(std::span<const Rational>(coeffs.begin(), coeffs.size()), precision);
}

Series Series::zero(std::size_t precision)
{
    return Series(std::vector<Rational>(precision + 1));
}

Series Series::constant(const Rational& c, std::size_t precision)
{
    return monomial(c, 0, precision);
}

Series Series::monomial(const Rational& c, std::size_t k, std::size_t precision)
{
    std::vector<Rational> out(precision + 1);
    if (k <= precision) {
        out[k] = c;
    }
    return Series(std::move(out));
}

bool Series::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

SeriesOrder order(const Series& s)
{
    for (std::size_t i = 0; i <= s.precision(); ++i) {
        if (!s[i].is_zero()) {
            return SeriesOrder::finite(i);
        }
    }
    return SeriesOrder::infinite();
}

Rational distance(const Series& a, const Series& b)
{
    if (a.precision() != b.precision()) {
        throw std::invalid_argument("distance needs a common precision (" + std::to_string(a.precision()) +
                                    " vs " + std::to_string(b.precision()) + ")");
    }
    for (std::size_t i = 0; i <= a.precision(); ++i) {
        if (a[i] != b[i]) {
            return inverse_power_of_two(i);
        }
    }
    return Rational(0);
}

Series truncate(const Series& s, std::size_t m)
{
    if (m > s.precision()) {
        throw precision_error("cannot truncate to degree " + std::to_string(m) + ": precision is " +
                              std::to_string(s.precision()));
    }
    auto c = s.coefficients();
    return Series(std::vector<Rational>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(m) + 1));
}

Series taylor_polynomial(const Series& s, std::size_t m, std::size_t precision)
{
    std::vector<Rational> out(precision + 1);
    const std::size_t top = std::min(m, precision);
    if (top > s.precision()) {
        throw precision_error("Taylor polynomial of degree " + std::to_string(m) + " needs precision " +
                              std::to_string(top) + ", have " + std::to_string(s.precision()));
    }
    for (std::size_t i = 0; i <= top; ++i) {
        out[i] = s[i];
    }
    return Series(std::move(out));
}

bool equal_through(const Series& a, const Series& b, std::size_t m)
{
    if (m > a.precision() || m > b.precision()) {
        throw precision_error("comparison through degree " + std::to_string(m) + " exceeds precision");
    }
    for (std::size_t i = 0; i <= m; ++i) {
        if (a[i] != b[i]) {
            return false;
        }
    }
    return true;
}

Series add(const Series& a, const Series& b)
{
    const std::size_t p = std::min(a.precision(), b.precision());
    std::vector<Rational> out(p + 1);
    for (std::size_t i = 0; i <= p; ++i) {
        out[i] = a[i] + b[i];
    }
    return Series(std::move(out));
}

Series negate(const Series& s)
{
    std::vector<Rational> out(s.precision() + 1);
    for (std::size_t i = 0; i <= s.precision(); ++i) {
        out[i] = -s[i];
    }
    return Series(std::move(out));
}

Series subtract(const Series& a, const Series& b)
{
    const std::size_t p = std::min(a.precision(), b.precision());
    std::vector<Rational> out(p + 1);
    for (std::size_t i = 0; i <= p; ++i) {
        out[i] = a[i] - b[i];
    }
    return Series(std::move(out));
}

Series scale(const Series& s, const Rational& c)
{
    std::vector<Rational> out(s.precision() + 1);
    for (std::size_t i = 0; i <= s.precision(); ++i) {
        out[i] = s[i] * c;
    }
    return Series(std::move(out));
}

Series cauchy_product(const Series& a, const Series& b)
{
    const std::size_t p = std::min(a.precision(), b.precision());
    std::vector<Rational> out(p + 1);
    for (std::size_t i = 0; i <= p; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j <= p; ++j) {
            if (!b[j].is_zero()) {
                out[i + j] += a[i] * b[j];
            }
        }
    }
    return Series(std::move(out));
}

Series power(const Series& s, std::size_t k)
{
    // Square-and-multiply; truncation commutes with the product so the
    // result is identical to k-fold multiplication.
    Series result = Series::constant(Rational(1), s.precision());
    Series base = s;
    while (k > 0) {
        if (k & 1U) {
            result = cauchy_product(result, base);
        }
        k >>= 1U;
        if (k > 0) {
            base = cauchy_product(base, base);
        }
    }
    return result;
}

Series compose(const Series& outer, const Series& inner)
{
    if (!inner[0].is_zero()) {
        throw composition_domain_error("inner series must have order >= 1, constant term is " +
                                       inner[0].to_string());
    }
    const std::size_t p = std::min(outer.precision(), inner.precision());
    const Series in = truncate(inner, p);
    Series acc = Series::constant(outer[p], p);
    for (std::size_t i = p; i-- > 0;) {
        acc = cauchy_product(acc, in);
        std::vector<Rational> c(acc.coefficients().begin(), acc.coefficients().end());
        c[0] += outer[i];
        acc = Series(std::move(c));
    }
    return acc;
}

Series derivative(const Series& s)
{
    if (s.precision() == 0) {
        throw precision_error("derivative of a precision-0 series has no known coefficients");
    }
    std::vector<Rational> out(s.precision());
    for (std::size_t i = 1; i <= s.precision(); ++i) {
        out[i - 1] = s[i] * Rational(static_cast<long>(i));
    }
    return Series(std::move(out));
}

Rational coefficient(const Series& s, std::size_t n)
{
    if (n > s.precision()) {
        throw precision_error("coefficient of x^" + std::to_string(n) + " requested, precision is " +
                              std::to_string(s.precision()));
    }
    return s[n];
}

Series multiply_by_x(const Series& s, std::size_t k)
{
    std::vector<Rational> out(s.precision() + k + 1);
    std::copy(s.coefficients().begin(), s.coefficients().end(), out.begin() + static_cast<std::ptrdiff_t>(k));
    return Series(std::move(out));
}

Series divide_by_x(const Series& s, std::size_t k)
{
    if (k > s.precision()) {
        throw precision_error("cannot divide a precision-" + std::to_string(s.precision()) + " series by x^" +
                              std::to_string(k));
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (!s[i].is_zero()) {
            throw domain_error("series is not divisible by x^" + std::to_string(k));
        }
    }
    auto c = s.coefficients();
    return Series(std::vector<Rational>(c.begin() + static_cast<std::ptrdiff_t>(k), c.end()));
}

} // namespace pser
