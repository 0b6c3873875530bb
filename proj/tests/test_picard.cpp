#include <doctest.h>

#include "oracles.hpp"
#include "pser/picard.hpp"

using pser::AffineMap;
using pser::IterationScheme;
using pser::Rational;
using pser::Series;

namespace {

Series poly(std::initializer_list<Rational> c, std::size_t p)
{
    return Series::polynomial(c, p);
}

AffineMap geometric_map(std::size_t p)
{
    return AffineMap{Series::monomial(1, 1, p), Series::constant(1, p)};
}

AffineMap curious_map(std::size_t p)
{
    return AffineMap{poly({0, 2, -1}, p), Series::constant(1, p)};
}

} // namespace

TEST_CASE("plain iteration of t -> xt + 1")
{
    const auto trace = iterate_fixed(geometric_map(4), Series::zero(4), 4);
    REQUIRE(trace.size() == 5);
    CHECK(trace[0] == Series::zero(4));
    CHECK(trace[1] == poly({1}, 4));
    CHECK(trace[2] == poly({1, 1}, 4));
    CHECK(trace[3] == poly({1, 1, 1}, 4));
    CHECK(trace[4] == poly({1, 1, 1, 1}, 4));
}

TEST_CASE("plain iteration of the curious map")
{
    const auto trace = iterate_fixed(curious_map(8), Series::zero(8), 3);
    CHECK(trace.back() == poly({1, 2, 3, -4, 1}, 8));
}

TEST_CASE("starting at the fixed point stays there")
{
    const Series fixed(std::vector<Rational>(7, Rational(1)));
    const auto trace = iterate_fixed(geometric_map(6), fixed, 5);
    for (const auto& it : trace.iterates()) {
        CHECK(it == fixed);
    }
}

TEST_CASE("iterate_fixed errors")
{
    const AffineMap bad{Series{1, 1, 0}, Series::constant(1, 2)};
    CHECK_THROWS_AS(iterate_fixed(bad, Series::zero(2), 2), pser::not_contractive_error);
    CHECK_THROWS_AS(iterate_fixed(geometric_map(2), Series::zero(2), 5), pser::precision_error);
}

TEST_CASE("crossed iteration builds the arithmetic-geometric partial sums")
{
    const std::size_t p = 6;
    const Series one = Series::constant(1, p);
    const Series pascal_g = poly({1, -1}, p);
    const Series geometric(std::vector<Rational>(p + 1, Rational(1)));
    const auto scheme = column_scheme(one, pascal_g, 2, geometric);
    const auto trace = iterate_crossed(scheme, Series::zero(p), 4);
    CHECK(trace[0] == Series::zero(p));
    CHECK(trace[1] == Series::zero(p));
    CHECK(trace[2] == poly({0, 1}, p));
    CHECK(trace[3] == poly({0, 1, 2}, p));
    CHECK(trace[4] == poly({0, 1, 2, 3}, p));
}

TEST_CASE("crossed iteration builds the third Pascal column")
{
    const std::size_t p = 8;
    const Series one = Series::constant(1, p);
    const Series pascal_g = poly({1, -1}, p);
    std::vector<Rational> arith(p + 1);
    for (std::size_t k = 0; k <= p; ++k) {
        arith[k] = Rational(static_cast<long>(k));
    }
    const auto trace = iterate_crossed(column_scheme(one, pascal_g, 3, Series(arith)), Series::zero(p), 5);
    CHECK(trace.back() == poly({0, 0, 1, 3, 6}, p));
    // Partial sums Σ_{k<=m} C(k,2) x^k.
    for (std::size_t m = 1; m < trace.size(); ++m) {
        std::vector<Rational> expected(p + 1);
        for (long k = 0; k < static_cast<long>(m); ++k) {
            expected[k] = oracle::factorial_binomial(k, 2);
        }
        CHECK(trace[m] == Series(expected));
    }
    // The limit map's fixed point is x^2/(1-x)^3.
    const Series limit(oracle::divide({0, 0, 1}, oracle::pow({1, -1}, 3, p + 1), p + 1));
    const auto scheme = column_scheme(one, pascal_g, 3, Series(arith));
    REQUIRE(scheme.limit_map.has_value());
    CHECK((*scheme.limit_map)(limit) == limit);
}

TEST_CASE("a constant scheme reproduces plain iteration")
{
    const std::size_t p = 9;
    IterationScheme scheme{[p](std::size_t) { return curious_map(p); }, curious_map(p)};
    CHECK(iterate_crossed(scheme, Series::zero(p), 5).iterates() ==
          iterate_fixed(curious_map(p), Series::zero(p), 5).iterates());
}

TEST_CASE("crossed iteration names the offending step")
{
    const std::size_t p = 4;
    IterationScheme scheme{[p](std::size_t m) {
                               return m == 2 ? AffineMap{Series::constant(1, p), Series::zero(p)}
                                             : AffineMap{Series::monomial(1, 1, p), Series::zero(p)};
                           },
                           std::nullopt};
    try {
        iterate_crossed(scheme, Series::zero(p), 4);
        FAIL("expected not_contractive_error");
    } catch (const pser::not_contractive_error& e) {
        CHECK(std::string(e.what()).find("step 2") != std::string::npos);
    }
}

TEST_CASE("reciprocal")
{
    CHECK(reciprocal(Series::constant(1, 5), poly({1, -1}, 5), 5) == Series{1, 1, 1, 1, 1, 1});
    CHECK(reciprocal(Series::constant(1, 3), Series::constant(1, 3), 3) == Series::constant(1, 3));
    CHECK(reciprocal(poly({0, 1}, 4), poly({1, -2, 1}, 4), 4) == Series{0, 1, 2, 3, 4});
    CHECK_THROWS_AS(reciprocal(Series::constant(1, 3), poly({0, 1}, 3), 3), pser::division_domain_error);
    CHECK_THROWS_AS(reciprocal(Series::constant(1, 2), poly({1, 1}, 2), 3), pser::precision_error);
}

TEST_CASE("reciprocal times divisor recovers the numerator")
{
    oracle::Random rnd(21);
    for (int trial = 0; trial < 40; ++trial) {
        const Series f = rnd.series(8);
        const Series g = rnd.unit(8);
        const Series q = reciprocal(f, g, 8);
        CHECK(cauchy_product(q, g) == f);
        CHECK(q == Series(oracle::divide(oracle::coeffs(f), oracle::coeffs(g), 9)));
    }
}

TEST_CASE("column scheme with f = g collapses to x/g")
{
    oracle::Random rnd(22);
    const Series g = rnd.unit(7);
    const Series first = reciprocal(g, g, 7);
    CHECK(first == Series::constant(1, 7));
    const auto trace = iterate_crossed(column_scheme(g, g, 2, first), Series::zero(7), 8);
    const Series x_over_g = multiply_by_x(reciprocal(Series::constant(1, 6), truncate(g, 6), 6));
    CHECK(trace.back() == x_over_g);
}

TEST_CASE("column_scheme rejects n < 2 and g0 = 0")
{
    const Series one = Series::constant(1, 3);
    CHECK_THROWS_AS(column_scheme(one, poly({1, -1}, 3), 1, one), std::invalid_argument);
    CHECK_THROWS_AS(column_scheme(one, poly({0, 1}, 3), 2, one), pser::division_domain_error);
}

TEST_CASE("every scheme map is a 1/2-contraction")
{
    oracle::Random rnd(23);
    for (int trial = 0; trial < 10; ++trial) {
        const Series f = rnd.unit(6);
        const Series g = rnd.unit(6);
        const auto recip = pser::reciprocal_scheme(f, g);
        const auto col = column_scheme(f, g, 3, rnd.series(6));
        for (std::size_t m = 0; m < 8; ++m) {
            for (const auto* scheme : {&recip, &col}) {
                const AffineMap map = scheme->maps(m);
                CHECK(map.is_contractive());
                const Series t1 = rnd.series(6);
                const Series t2 = rnd.perturb_above(t1, rnd.index(6));
                CHECK(distance(map(t1), map(t2)) <= Rational(1, 2) * distance(t1, t2));
            }
        }
    }
}

TEST_CASE("crossed iterates converge one degree per step")
{
    oracle::Random rnd(24);
    for (int trial = 0; trial < 10; ++trial) {
        const Series f = rnd.unit(8);
        const Series g = rnd.unit(8);
        const Series exact(oracle::divide(oracle::coeffs(f), oracle::coeffs(g), 9));
        const auto trace = iterate_crossed(pser::reciprocal_scheme(f, g), Series::zero(8), 9);
        for (std::size_t m = 1; m < trace.size(); ++m) {
            CHECK(equal_through(trace[m], exact, m - 1));
        }
    }
}

TEST_CASE("columns by iteration match long division")
{
    oracle::Random rnd(25);
    const Series f = rnd.unit(9);
    const Series g = rnd.unit(9);
    const auto columns = iterate_columns(f, g, 5, 9);
    for (std::size_t k = 0; k < columns.size(); ++k) {
        oracle::Poly num(10);
        for (std::size_t i = 0; i + k < 10; ++i) {
            num[i + k] = f[i];
        }
        const auto den = oracle::pow(oracle::coeffs(g), k + 1, 10);
        CHECK(columns[k] == Series(oracle::divide(num, den, 10)));
    }
}

TEST_CASE("remainder rows of the curious iteration")
{
    const std::size_t steps = 7;
    const auto trace = iterate_fixed(curious_map(2 * steps), Series::zero(2 * steps), steps);
    std::vector<Rational> arith(2 * steps + 1);
    for (std::size_t k = 0; k < arith.size(); ++k) {
        arith[k] = Rational(static_cast<long>(k + 1));
    }
    const auto rows = trace.remainder_rows(Series(arith));
    REQUIRE(rows.size() == steps);
    CHECK(rows[0].empty());
    const std::vector<std::vector<Rational>> expected{
        {-1}, {-4, 1}, {-11, 6, -1}, {-26, 23, -8, 1}, {-57, 72, -39, 10, -1}, {-120, 201, -150, 59, -12, 1}};
    for (std::size_t r = 0; r < expected.size(); ++r) {
        CHECK(rows[r + 1] == expected[r]);
    }
    // Two-term recurrence inside the remainder block.
    for (std::size_t n = 2; n < rows.size(); ++n) {
        for (std::size_t k = 1; k < rows[n].size(); ++k) {
            const Rational above = k < rows[n - 1].size() ? rows[n - 1][k] : Rational(0);
            CHECK(rows[n][k] == 2 * above - rows[n - 1][k - 1]);
        }
    }
    CHECK_THROWS_AS((void)trace.remainder_rows(Series::zero(2 * steps)), pser::domain_error);
}
