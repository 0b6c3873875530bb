#include <doctest.h>

#include <sstream>

#include "pser/cli.hpp"
#include "pser/io.hpp"

using nlohmann::json;
using pser::Rational;
using pser::Series;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = pser::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) {
        out.push_back(line);
    }
    return out;
}

} // namespace

TEST_CASE("series literals")
{
    CHECK(pser::parse_series_literal(R"(["1","-1"])") == Series{1, -1});
    CHECK(pser::parse_series_literal(R"([1, "1/2", -3])") == Series{1, Rational(1, 2), -3});
    CHECK(pser::parse_series_literal(R"(["1"])", 3) == Series{1, 0, 0, 0});
    CHECK_THROWS_AS(pser::parse_series_literal("[]"), pser::parse_error);
    CHECK_THROWS_AS(pser::parse_series_literal(R"(["1/0"])"), pser::parse_error);
    CHECK_THROWS_AS(pser::parse_series_literal("[1.5]"), pser::parse_error);
    CHECK_THROWS_AS(pser::parse_series_literal("[1,"), pser::parse_error);
    CHECK_THROWS_AS(pser::parse_series_literal(R"({"a":1})"), pser::parse_error);
}

TEST_CASE("literal round trip")
{
    const Series s{Rational(-3, 4), 0, 7, Rational(1, 9)};
    CHECK(pser::parse_series_literal(pser::to_json(s).dump()) == s);
}

TEST_CASE("polynomial rendering")
{
    CHECK(pser::render_polynomial(Series{1, 2, 3, -4, 1}, false) == "1+2x+3x^2-4x^3+x^4");
    CHECK(pser::render_polynomial(Series{1, 1, 1}) == "1 + x + x^2");
    CHECK(pser::render_polynomial(Series::zero(3)) == "0");
    CHECK(pser::render_polynomial(Series{0, -1, Rational(-1, 2)}) == "-x - (1/2)x^2");
    CHECK(pser::render_polynomial(Series{Rational(1, 2)}) == "1/2");
}

TEST_CASE("triangle documents")
{
    const auto t = pser::build_triangle(Series::constant(1, 3), Series{1, -1, 0, 0}, 4);
    const json doc = pser::triangle_to_json(t);
    CHECK(doc["depth"] == 4);
    CHECK(doc["g"] == json::array({"1", "-1", "0", "0"}));
    CHECK(pser::triangle_rows_from_json(doc) == t.rows());
    json bad = doc;
    bad["rows"][2] = json::array({"1"});
    CHECK_THROWS_AS(pser::triangle_rows_from_json(bad), pser::parse_error);
    CHECK(pser::triangle_to_csv(t) == "1\n1,1\n1,2,1\n1,3,3,1\n");
    CHECK(pser::triangle_to_pretty(t) == "1\n1  1\n1  2  1\n1  3  3  1\n");
}

TEST_CASE("lagrange report document")
{
    pser::LagrangeReport report{4, {{3, 2, Rational(1, 2), Rational(3)}}};
    CHECK(pser::lagrange_report_to_json(report) ==
          json::parse(R"({"max_n":4,"violations":[{"n":3,"k":2,"lhs":"1/2","rhs":"3"}]})"));
}

TEST_CASE("series specs")
{
    using pser::cli::SeriesSpec;
    CHECK(SeriesSpec::parse("geometric").resolve(3) == Series{1, 1, 1, 1});
    CHECK(SeriesSpec::parse("pascal_g").resolve(2) == Series{1, -1, 0});
    CHECK(SeriesSpec::parse("one").resolve(1) == Series{1, 0});
    CHECK(SeriesSpec::parse("arithgeo").resolve(3) == Series{1, 2, 3, 4});
    CHECK(SeriesSpec::parse("curious_f").resolve(2) == Series{1, 2, 3});
    CHECK(SeriesSpec::parse("curious_g").resolve(2) == Series{-1, 2, 0});
    CHECK(SeriesSpec::parse("[1,-1]").resolve(0) == Series{1});
    CHECK_THROWS_AS(SeriesSpec::parse("fibonacci"), pser::parse_error);
}

TEST_CASE("cli triangle")
{
    auto r = run({"triangle", "--f", "one", "--g", "[1,-1]", "--depth", "5", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n1,1\n1,2,1\n1,3,3,1\n1,4,6,4,1\n");

    r = run({"triangle", "--f", "one", "--g", "one", "--depth", "3"});
    CHECK(r.code == 0);
    CHECK(lines(r.out) == std::vector<std::string>{"1", "0  1", "0  0  1"});

    r = run({"--format", "json", "triangle", "--f", "curious_f", "--g", "curious_g", "--depth", "6"});
    CHECK(r.code == 0);
    const auto rows = pser::triangle_rows_from_json(json::parse(r.out));
    CHECK(rows.back() == std::vector<Rational>{-120, 201, -150, 59, -12, 1});

    r = run({"triangle", "--f", "[0,1]", "--g", "one"});
    CHECK(r.code == pser::cli::exit_domain);
    CHECK(r.err.find("f must") != std::string::npos);

    r = run({"triangle", "--f", "one", "--g", "[\"1/0\"]"});
    CHECK(r.code == pser::cli::exit_parse);
    CHECK(r.err.find("--g") != std::string::npos);
}

TEST_CASE("cli recip")
{
    auto r = run({"recip", "--f", "one", "--g", "[1,-1]", "--precision", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 + x + x^2 + x^3 + x^4\n");
    r = run({"recip", "--f", "[0,1]", "--g", "[1,-2,1]", "--precision", "4"});
    CHECK(r.out == "x + 2x^2 + 3x^3 + 4x^4\n");
    r = run({"recip", "--f", "one", "--g", "[0,1]"});
    CHECK(r.code == pser::cli::exit_domain);
    CHECK(r.err.find("division domain") != std::string::npos);
}

TEST_CASE("cli invert")
{
    auto r = run({"invert", "--omega", "[0,1,-1]", "--precision", "5", "--format", "json"});
    CHECK(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(pser::Series(pser::rationals_from_json(doc["series"])) == Series{0, 1, 1, 2, 5, 14});
    r = run({"invert", "--omega", "[0,1]", "--precision", "5"});
    CHECK(r.out == "x\n");
    r = run({"invert", "--omega", "[1,1]"});
    CHECK(r.code == pser::cli::exit_domain);
    CHECK(r.err.find("not invertible: order must be 1") != std::string::npos);
}

TEST_CASE("cli trace")
{
    auto r = run({"trace", "--scheme", "geometric", "--steps", "4"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).back() == "1+x+x^2+x^3");
    r = run({"trace", "--scheme", "curious", "--steps", "3"});
    CHECK(lines(r.out).back() == "1+2x+3x^2-4x^3+x^4");
    r = run({"trace", "--scheme", "arithgeo", "--steps", "4"});
    CHECK(lines(r.out) == std::vector<std::string>{"0", "0", "x", "x+2x^2", "x+2x^2+3x^3"});
    r = run({"trace", "--scheme", "column", "--n", "3", "--steps", "5"});
    CHECK(lines(r.out).back() == "x^2+3x^3+6x^4");
    r = run({"trace", "--scheme", "spiral"});
    CHECK(r.code == pser::cli::exit_parse);
    r = run({"trace", "--scheme", "geometric", "--steps", "0"});
    CHECK(r.code == pser::cli::exit_parse);
}

TEST_CASE("cli azseq")
{
    auto r = run({"azseq", "--f", "one", "--g", "[1,-1]"});
    CHECK(r.code == 0);
    CHECK(r.out == "A = 1 + x\nZ = 1\n");
    r = run({"azseq", "--f", "one", "--g", "one"});
    CHECK(r.out == "A = 1\nZ = 0\n");
    r = run({"--format", "json", "azseq", "--f", "one", "--g", "[2,1]", "--precision", "3"});
    const json doc = json::parse(r.out);
    CHECK(Series(pser::rationals_from_json(doc["A"])) == Series{Rational(1, 2), Rational(-1, 2), 0, 0});
    CHECK(Series(pser::rationals_from_json(doc["Z"])) == Series{Rational(-1, 2), 0, 0, 0});
}

TEST_CASE("cli group operations")
{
    auto r = run({"inverse", "--f", "one", "--g", "pascal_g", "--depth", "4", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n-1,1\n1,-2,1\n-1,3,-3,1\n");
    r = run({"product", "--f1", "one", "--g1", "pascal_g", "--f2", "one", "--g2", "pascal_g", "--depth", "4",
             "--format", "csv"});
    CHECK(r.out == "1\n2,1\n4,4,1\n8,12,6,1\n");
    r = run({"lagrange", "--omega", "[0,1,-1]", "--max-n", "8", "--format", "json"});
    CHECK(json::parse(r.out) == json::parse(R"({"max_n":8,"violations":[]})"));
    r = run({"lagrange", "--omega", "[0,1]", "--max-n", "3"});
    CHECK(r.out == "checked 1 <= k <= n <= 3: 0 violations\n");
}

TEST_CASE("cli usage errors")
{
    CHECK(run({}).code == pser::cli::exit_parse);
    CHECK(run({"frobnicate"}).code == pser::cli::exit_parse);
    CHECK(run({"triangle", "--f", "one"}).code == pser::cli::exit_parse);
    CHECK(run({"triangle", "--f", "one", "--g", "one", "--format", "xml"}).code == pser::cli::exit_parse);
    CHECK(run({"--help"}).code == 0);
}
