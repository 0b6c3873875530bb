#include "pser/rational.hpp"

#include <stdexcept>

namespace pser {

Rational::Rational(long num, long den)
{
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value))
{
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto digits = [](std::string_view s) {
        if (s.empty()) {
            return false;
        }
        for (char c : s) {
            if (c < '0' || c > '9') {
                return false;
            }
        }
        return true;
    };

    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!digits(num) || !digits(den)) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }

    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    if (negative) {
        n = -n;
    }
    return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const
{
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational inverse_power_of_two(std::size_t e)
{
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, e);
    return Rational(mpq_class(mpz_class(1), den));
}

Rational binomial(std::size_t n, std::size_t k)
{
    if (k > n) {
        return Rational(0);
    }
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return Rational(mpq_class(out));
}

} // namespace pser
