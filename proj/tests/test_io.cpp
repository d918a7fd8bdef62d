#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dstir/io.hpp"
#include "test_util.hpp"

using namespace dstir;
using test_util::random_poly;
using test_util::random_rational;

TEST_CASE("rational serialization format") {
    CHECK(io::rational_to_json(Rational(3, 4)) == "3/4");
    CHECK(io::rational_to_json(Rational(-7)) == "-7");
    CHECK(io::rational_to_json(Rational(0)) == "0");
    CHECK(io::rational_from_json("5/10") == Rational(1, 2));
    CHECK_THROWS_AS(io::rational_from_json(nlohmann::json(3)), std::invalid_argument);
}

TEST_CASE("poly string forms") {
    const Poly p({Rational(3), Rational(-6), Rational(3)});
    CHECK(io::poly_to_string(p) == "3;-6;3");
    CHECK(io::poly_to_string(Poly::zero()) == "0");
    CHECK(io::poly_from_string("3;-6;3") == p);
    CHECK(io::poly_from_string("0") == Poly::zero());
    CHECK(io::poly_pretty(p) == "3 - 6*lambda + 3*lambda^2");
    CHECK(io::poly_pretty(Poly({Rational(0), Rational(1)})) == "lambda");
    CHECK(io::poly_pretty(Poly({Rational(-1), Rational(1, 2)})) == "-1 + 1/2*lambda");
    CHECK(io::poly_pretty(Poly::zero()) == "0");
}

TEST_CASE("round trips on random values") {
    std::mt19937 rng(808);
    for (int trial = 0; trial < 50; ++trial) {
        const Rational r = random_rational(rng);
        CHECK(io::rational_from_json(io::rational_to_json(r)) == r);
        const Poly p = random_poly(rng, 6);
        CHECK(io::poly_from_json(io::poly_to_json(p)) == p);
        CHECK(io::poly_from_string(io::poly_to_string(p)) == p);
    }
}

TEST_CASE("series round trip") {
    const Series s = series_e_lambda(Rational(2, 3), 6);
    CHECK(io::series_from_json(io::series_to_json(s)) == s);
}

TEST_CASE("table JSON round trip") {
    for (Kind kind : {Kind::second, Kind::first}) {
        const StirlingTable t = kind == Kind::second ? build_table_second(2, 6)
                                                     : build_table_first(2, 6);
        const StirlingTable back = io::table_from_json(io::table_to_json(t));
        CHECK(back.kind() == t.kind());
        CHECK(back.r() == t.r());
        CHECK(back.nmax() == t.nmax());
        for (unsigned n = 0; n <= t.nmax(); ++n)
            for (unsigned k = 0; k <= t.kmax(n); ++k)
                CHECK(back.at(n, k) == t.at(n, k));
    }
}

TEST_CASE("table CSV layout") {
    const std::string csv = io::table_to_csv(build_table_second(2, 4));
    CHECK(csv.starts_with("n,k,value\n"));
    CHECK(csv.find("4,2,3;-6;3\n") != std::string::npos);
    CHECK(csv.find("3,1,") != std::string::npos);

    const std::string at0 = io::table_to_csv(build_table_second(2, 4), Rational(0));
    CHECK(at0.find("4,2,3\n") != std::string::npos);
}

TEST_CASE("bell JSON round trip and pretty form") {
    const StirlingTable t = build_table_second(2, 5);
    const BellPoly b = bell_poly(4, 2, t);
    CHECK(io::bell_from_json(io::bell_to_json(b)) == b);
    const std::string pretty = io::bell_pretty(b);
    CHECK(pretty.find("x^1*(") != std::string::npos);
    CHECK(pretty.find("x^2*(") != std::string::npos);
    CHECK(io::bell_pretty(bell_poly(1, 2, t)) == "0");
}
