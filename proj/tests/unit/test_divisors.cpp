#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "twoside/divisors.hpp"

using namespace twoside;
using testing_support::as_rational;
using testing_support::q;

TEST_CASE("divisor_counts examples")
{
    CHECK(divisor_counts(1).d == std::vector<long>{1});
    CHECK(divisor_counts(6).d == std::vector<long>{1, 2, 2, 3, 2, 4});
    CHECK(divisor_counts(12).at(12) == 6);
    CHECK_THROWS(divisor_counts(0));
}

TEST_CASE("property: sieve matches trial division and its increments equal the floor sum")
{
    const auto t = divisor_counts(2000);
    long floor_sum = 0;
    for (long k = 1; k <= 2000; ++k) {
        REQUIRE(t.at(k) == oracle::divisor_count_trial(k));
        floor_sum += 2000 / k;
    }
    CHECK(t.increments == floor_sum);
    for (long p : {2L, 3L, 5L, 7L, 1999L})
        CHECK(t.at(p) == 2);
}

TEST_CASE("divisor_identity_check examples")
{
    const auto one = divisor_identity_check(1);
    CHECK(one.pass);
    CHECK(as_rational(one.lhs) == 1);
    const auto six = divisor_identity_check(6);
    CHECK(as_rational(six.lhs) == 14);
    CHECK(as_rational(six.rhs) == 14);
    CHECK(six.suite == "div.identity");
}

TEST_CASE("divisor_average_bounds examples")
{
    const auto b1 = divisor_average_bounds(1);
    CHECK(b1.lower == 0);
    CHECK(b1.avg == 1);
    CHECK(b1.upper == 1);
    CHECK(b1.pass);
    CHECK(b1.upper_attained);

    const auto b4 = divisor_average_bounds(4);
    CHECK(b4.divisor_sum == 8);
    CHECK(b4.lower == q(13, 12));
    CHECK(b4.avg == 2);
    CHECK(b4.upper == q(25, 12));
    CHECK(b4.pass);
    CHECK_FALSE(b4.upper_attained);

    const auto b1000 = divisor_average_bounds(1000);
    CHECK(b1000.pass);
    CHECK(b1000.lower < b1000.avg);
    CHECK(b1000.avg <= b1000.upper);
}

TEST_CASE("property: identity and harmonic sandwich up to 3000 against a direct oracle")
{
    const auto sweep = divisor_sweep(3000);
    CHECK(sweep.identity_failures == 0);
    CHECK(sweep.bound_failures == 0);

    // oracle: running trial-division sum and running harmonic number
    Rational h = 0;
    long dsum = 0;
    std::vector<long> attained;
    for (long n = 1; n <= 3000; ++n) {
        h += q(1, n);
        dsum += oracle::divisor_count_trial(n);
        const Rational avg = q(dsum, n);
        REQUIRE(h - 1 < avg);
        REQUIRE(avg <= h);
        if (avg == h)
            attained.push_back(n);
    }
    // d(1) + d(2) = 3 = 2 H_2, so the upper bound is attained at n = 2 as well
    CHECK(attained == std::vector<long>{1, 2});
    CHECK(sweep.upper_attained_at == attained);
}
