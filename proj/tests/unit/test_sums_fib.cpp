#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "twoside/sums_fib.hpp"

using namespace twoside;
using testing_support::as_rational;

TEST_CASE("fibonacci")
{
    CHECK(fibonacci(1) == 1);
    CHECK(fibonacci(2) == 1);
    CHECK(fibonacci(10) == 55);
    CHECK(fibonacci(90) == BigInt("2880067194370816120"));
    CHECK_THROWS_AS(fibonacci(0), std::domain_error);
    for (long n = 1; n <= 300; ++n)
        REQUIRE(fibonacci(n) == oracle::fibonacci_loop(n));
}

TEST_CASE("sum_identity_check examples")
{
    const auto tri = sum_identity_check(SumKind::triangular, 100);
    CHECK(tri.pass);
    CHECK(as_rational(tri.lhs) == 5050);
    CHECK(as_rational(tri.rhs) == 5050);
    CHECK(tri.suite == "sum.triangular");

    const auto odd = sum_identity_check(SumKind::odd_square, 1);
    CHECK(as_rational(odd.lhs) == 1);
    CHECK(as_rational(odd.rhs) == 1);

    const auto pal = sum_identity_check(SumKind::palindrome_odd, 3);
    CHECK(pal.pass);
    CHECK(as_rational(pal.lhs) == 25);  // 1+3+5+7+5+3+1
    CHECK(as_rational(pal.rhs) == 25);  // 3^2 + 4^2
    // the displayed rows at k = 1, 2: 1+3+1 = 1+4, 1+3+5+3+1 = 4+9
    CHECK(as_rational(sum_identity_check(SumKind::palindrome_odd, 1).lhs) == 5);
    CHECK(as_rational(sum_identity_check(SumKind::palindrome_odd, 2).lhs) == 13);

    const auto fsq = sum_identity_check(SumKind::fib_squares, 4);
    CHECK(as_rational(fsq.lhs) == 15);
    CHECK(as_rational(fsq.rhs) == 15);

    // 4+8+12+16+12+8+4 = 4^3
    CHECK(as_rational(sum_identity_check(SumKind::cube_layers, 4).lhs) == 64);
    CHECK(as_rational(sum_identity_check(SumKind::odd_square, 1000).lhs) == 1000000);
    CHECK_THROWS_AS(sum_identity_check(SumKind::triangular, 0), std::domain_error);
}

TEST_CASE("property: every sum kind holds for n <= 300")
{
    for (SumKind k : all_sum_kinds) {
        INFO(sum_kind_name(k));
        for (long n = 1; n <= 300; ++n)
            REQUIRE(sum_identity_check(k, n).pass);
    }
}

TEST_CASE("property: adjacent triangular numbers sum to a square")
{
    auto T = [](long k) { return k * (k + 1) / 2; };
    for (long k = 1; k <= 1000; ++k) {
        const auto r = sum_identity_check(SumKind::adj_triangular, k);
        REQUIRE(as_rational(r.lhs) == T(k) + T(k + 1));
        REQUIRE(as_rational(r.rhs) == (k + 1) * (k + 1));
    }
}

TEST_CASE("fib_betweenness examples")
{
    const auto r = fib_betweenness(1, 2);
    CHECK(r.x == 7);
    CHECK(r.x_telescoped == 7);
    CHECK(r.x_lower == 5);
    CHECK(r.x_upper == 8);
    CHECK(r.y == 4);
    CHECK(r.y_telescoped == 4);
    CHECK(r.y_lower == 3);
    CHECK(r.y_upper == 5);
    CHECK(r.pass);

    const auto s = fib_betweenness(3, 9);
    BigInt x = 0, y = 0;
    for (long i = 7; i <= 19; i += 2)
        x += oracle::fibonacci_loop(i);
    for (long i = 6; i <= 18; i += 2)
        y += oracle::fibonacci_loop(i);
    CHECK(s.x == x);
    CHECK(s.y == y);
    CHECK(s.x_telescoped == x);
    CHECK(s.y_telescoped == y);

    CHECK_THROWS_AS(fib_betweenness(2, 2), std::domain_error);
    CHECK_THROWS_AS(fib_betweenness(0, 3), std::domain_error);
    CHECK_THROWS_AS(fib_betweenness(5, 3), std::domain_error);
}

TEST_CASE("property: X and Y fall strictly between adjacent Fibonacci numbers")
{
    std::set<BigInt> fibs;
    for (long j = 1; j <= 84; ++j)
        fibs.insert(oracle::fibonacci_loop(j));
    for (long n = 2; n <= 40; ++n)
        for (long m = 1; m < n; ++m) {
            const auto r = fib_betweenness(m, n);
            REQUIRE(r.pass);
            REQUIRE(r.x_lower < r.x);
            REQUIRE(r.x < r.x_upper);
            REQUIRE(r.y_lower < r.y);
            REQUIRE(r.y < r.y_upper);
            REQUIRE(r.x == r.x_telescoped);
            REQUIRE(r.y == r.y_telescoped);
            REQUIRE(fibs.count(r.x) == 0);
            REQUIRE(fibs.count(r.y) == 0);
        }
}
