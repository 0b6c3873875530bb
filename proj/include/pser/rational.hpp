#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pser {

// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT: implicit from integers is intended
    Rational(long num, long den);
    explicit Rational(mpq_class value);

    // Accepts "p/q" or an integer string, with an optional leading sign on p.
    // Throws std::invalid_argument on malformed input or a zero denominator.
    static Rational parse(std::string_view text);

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] std::string numerator() const { return value_.get_num().get_str(); }
    [[nodiscard]] std::string denominator() const { return value_.get_den().get_str(); }

    // "p/q", or just "p" when the denominator is 1.
    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& v) { return Rational(mpq_class(-v.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

private:
    mpq_class value_{0};
};

// 1/2^e as an exact rational.
Rational inverse_power_of_two(std::size_t e);

// Binomial coefficient C(n, k); zero when k > n.
Rational binomial(std::size_t n, std::size_t k);

using Coefficient = Rational;

} // namespace pser
