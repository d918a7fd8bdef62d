#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dstir/oracle.hpp"
#include "dstir/stirling.hpp"
#include "test_util.hpp"

using namespace dstir;
using test_util::random_rational;

namespace {
Poly P(std::vector<long> cs) {
    std::vector<Rational> out;
    for (long c : cs) out.emplace_back(c);
    return Poly(std::move(out));
}
}  // namespace

TEST_CASE("second kind, pinned small values") {
    const StirlingTable t2 = build_table_second(2, 5);
    // 3(1-lambda)^2
    CHECK(t2.at(4, 2) == P({3, -6, 3}));
    // 10(1-lambda)^2(1-2lambda)
    CHECK(t2.at(5, 2) == Rational(10) * (P({1, -1}) * P({1, -1}) * P({1, -2})));
    CHECK(t2.at(3, 2).is_zero());
    CHECK(t2.at(0, 0) == Poly::one());
    CHECK(t2.at(3, 0).is_zero());

    const StirlingTable t1 = build_table_second(1, 4);
    CHECK(t1.at(3, 2) == P({3, -3}));
    CHECK(t1.at(2, 1) == P({1, -1}));
}

TEST_CASE("first kind, pinned small values") {
    CHECK(build_table_first(2, 2).at(2, 1) == P({-1, 1}));
    CHECK(build_table_first(1, 2).at(2, 1) == P({-1, 1}));
    CHECK(build_table_first(3, 8).at(2, 1).is_zero());
    // S1^{(r)}(n,1) = c_n for n >= r.
    const StirlingTable t = build_table_first(2, 6);
    for (unsigned n = 2; n <= 6; ++n) CHECK(t.at(n, 1) == log_coeff(n));
}

TEST_CASE("explicit sums, pinned values") {
    CHECK(second_kind_by_composition_sum(4, 2, 2) == P({3, -6, 3}));
    CHECK(second_kind_by_composition_sum(3, 2, 2).is_zero());
    CHECK(second_kind_by_composition_sum(0, 0, 2) == Poly::one());
    CHECK(second_kind_by_composition_sum(5, 0, 1).is_zero());

    CHECK(second_kind_by_inclusion_exclusion(4, 2, 2) == P({3, -6, 3}));
    CHECK(second_kind_by_inclusion_exclusion(5, 0, 2).is_zero());
    CHECK(second_kind_by_inclusion_exclusion(0, 0, 3) == Poly::one());
}

TEST_CASE("diagonal entries match the unique uniform composition") {
    for (unsigned r = 1; r <= 4; ++r)
        for (unsigned k = 0; k * r <= 12 && k <= 4; ++k) {
            const unsigned n = r * k;
            Poly expected = Poly::one();
            BigInt denom = factorial(k);
            for (unsigned i = 0; i < k; ++i) {
                expected *= falling_lambda(Rational(1), r);
                denom *= factorial(r);
            }
            expected *= Rational(factorial(n), denom);
            CHECK(build_table_second(r, n == 0 ? 1 : n).at(n, k) == expected);
        }
}

TEST_CASE("series path, pinned values") {
    CHECK(number_by_series(Kind::second, 4, 2, 2, 6) == P({3, -6, 3}));
    CHECK(number_by_series(Kind::first, 2, 1, 2, 4) == P({-1, 1}));
    CHECK(number_by_series(Kind::second, 5, 3, 2, 7).is_zero());
    CHECK_THROWS_AS(number_by_series(Kind::second, 4, 2, 2, 4),
                    std::invalid_argument);
}

TEST_CASE("path agreement, both kinds, moderate range") {
    for (unsigned r = 1; r <= 3; ++r) {
        const StirlingTable second = build_table_second(r, 9);
        const StirlingTable first = build_table_first(r, 9);
        for (unsigned n = 0; n <= 9; ++n)
            for (unsigned k = 0; k <= n / r; ++k) {
                CAPTURE(r);
                CAPTURE(n);
                CAPTURE(k);
                CHECK(second.at(n, k) == second_kind_by_composition_sum(n, k, r));
                CHECK(second.at(n, k) == second_kind_by_inclusion_exclusion(n, k, r));
                CHECK(second.at(n, k) == number_by_series(Kind::second, n, k, r, 10));
                CHECK(first.at(n, k) == number_by_series(Kind::first, n, k, r, 10));
            }
    }
}

TEST_CASE("classical values") {
    const StirlingTable t22 = build_table_second(2, 5);
    CHECK(classical_value(t22, 5, 2) == 10);
    CHECK(classical_value(t22, 4, 2) == 3);
    CHECK(classical_value(build_table_second(1, 3), 3, 2) == 3);
    // diagonal count (rk)!/(k!(r!)^k)
    CHECK(classical_value(t22, 4, 2) ==
          factorial(4) / (factorial(2) * factorial(2) * factorial(2)));
}

TEST_CASE("classical values match the partition oracle") {
    for (unsigned r = 1; r <= 4; ++r) {
        const StirlingTable t = build_table_second(r, 9);
        for (unsigned n = 0; n <= 9; ++n)
            for (unsigned k = 0; k <= n / r; ++k)
                CHECK(classical_value(t, n, k) ==
                      BigInt(static_cast<unsigned long>(
                          oracle::count_partitions({n, k, r}))));
    }
}

TEST_CASE("degree bound: lambda-degree of S2 is at most n - k") {
    for (unsigned r = 1; r <= 4; ++r) {
        const StirlingTable t = build_table_second(r, 10);
        for (unsigned n = 0; n <= 10; ++n)
            for (unsigned k = 0; k <= n / r; ++k)
                CHECK(t.at(n, k).degree() <= static_cast<int>(n) - static_cast<int>(k));
    }
}

TEST_CASE("first-kind weight equals the raw two-term coefficient") {
    std::mt19937 rng(777);
    for (unsigned r = 1; r <= 8; ++r) {
        const Poly cr = log_coeff(r);
        for (int trial = 0; trial < 10; ++trial) {
            const Rational l0 = random_rational(rng, /*nonzero=*/true);
            Rational fall(1);  // (1)_{r-1,1/l0} as a literal product
            for (unsigned i = 0; i + 1 < r; ++i)
                fall *= Rational(1) - Rational(static_cast<long>(i)) / l0;
            Rational expected = pow(l0, r - 1) * fall;
            if (r >= 2)
                expected -= Rational(static_cast<long>(r - 1)) * pow(l0, r - 2) * fall;
            CHECK(cr.eval(l0) == expected);
        }
    }
}

TEST_CASE("inverse relation between the two r=1 triangles") {
    const StirlingTable second = build_table_second(1, 8);
    const StirlingTable first = build_table_first(1, 8);
    for (unsigned n = 0; n <= 8; ++n)
        for (unsigned m = 0; m <= 8; ++m) {
            Poly sum;
            for (unsigned k = m; k <= n; ++k) sum += second.at(n, k) * first.at(k, m);
            CHECK(sum == ((n == m) ? Poly::one() : Poly::zero()));
        }
}

TEST_CASE("invalid r is rejected") {
    CHECK_THROWS_AS(build_table_second(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_table_first(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(second_kind_by_composition_sum(3, 1, 0), std::invalid_argument);
}
