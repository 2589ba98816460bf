#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "twoside/bracket.hpp"
#include "twoside/rational.hpp"
#include "twoside/roots.hpp"

using namespace twoside;
using testing_support::dec;
using testing_support::q;

TEST_CASE("rational_normalize reduces and carries the sign on the numerator")
{
    CHECK(rational_normalize(6, 4) == q(3, 2));
    CHECK(rational_normalize(6, 4).num() == 3);
    CHECK(rational_normalize(6, 4).den() == 2);
    const Rational r = rational_normalize(2, -4);
    CHECK(r.num() == -1);
    CHECK(r.den() == 2);
    CHECK(r.str() == "-1/2");
    CHECK(rational_normalize(21, 10).str() == "21/10");
    CHECK(Rational::parse("2.1") == rational_normalize(21, 10));
    CHECK_THROWS_AS(rational_normalize(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(BigInt(3), BigInt(0)), std::domain_error);
}

TEST_CASE("rational parsing, rendering and rounding")
{
    CHECK(Rational::parse("-2.125") == q(-17, 8));
    CHECK(Rational::parse("6/-4") == q(-3, 2));
    CHECK(Rational::parse("7").str() == "7");
    CHECK_THROWS(Rational::parse("abc"));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK(q(2, 3).decimal(4) == "0.6667");
    CHECK(q(-2, 3).decimal(2) == "-0.67");
    CHECK(q(7, 2).floor() == 3);
    CHECK(q(7, 2).ceil() == 4);
    CHECK(q(-7, 2).floor() == -4);
    CHECK(q(-7, 2).ceil() == -3);
    CHECK(pow(q(2, 3), -2) == q(9, 4));
    CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
}

TEST_CASE("property: field axioms hold exactly on random rationals")
{
    SplitMix64 rng(2024);
    for (int i = 0; i < 2000; ++i) {
        const Rational a = testing_support::random_rational(rng, 1000);
        const Rational b = testing_support::random_rational(rng, 1000);
        const Rational c = testing_support::random_rational(rng, 1000);
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a + Rational(0) == a);
        REQUIRE(a * Rational(1) == a);
        REQUIRE(a - a == 0);
        if (!a.is_zero())
            REQUIRE(a * a.reciprocal() == 1);
        // canonical form after every operation
        const Rational s = a + b;
        REQUIRE(s.den() > 0);
        BigInt g;
        mpz_gcd(g.get_mpz_t(), s.num().get_mpz_t(), s.den().get_mpz_t());
        REQUIRE((s.is_zero() ? s.den() == 1 : g == 1));
    }
}

TEST_CASE("bracket_combine examples")
{
    CHECK(Bracket(1, 2) + Bracket(3, 4) == Bracket(4, 6));
    CHECK(Bracket(-1, 2) * Bracket(3, 4) == Bracket(-4, 8));
    CHECK(Bracket(0, 0) * Bracket(q(-7, 3), q(11, 2)) == Bracket(0, 0));
    CHECK(Bracket(1, 2) - Bracket(3, 4) == Bracket(-3, -1));
    CHECK_THROWS_AS(Bracket(2, 1), std::invalid_argument);
    CHECK(Bracket(q(1, 3), q(2, 3)).outward(q(1, 10)) == Bracket(q(3, 10), q(7, 10)));
    CHECK(Bracket(1, 2).scaled(-2) == Bracket(-4, -2));
}

TEST_CASE("property: bracket arithmetic is enclosure-sound")
{
    SplitMix64 rng(99);
    auto random_bracket = [&] {
        const Rational a = testing_support::random_rational(rng, 50);
        const Rational b = testing_support::random_rational(rng, 50);
        return Bracket(min(a, b), max(a, b));
    };
    auto inside = [&](const Bracket& b) {
        // lo + t (hi - lo) with t in [0, 1]
        const Rational t = q(rng.between(0, 1000), 1000);
        return b.lo() + t * b.width();
    };
    for (int i = 0; i < 10000; ++i) {
        const Bracket A = random_bracket(), B = random_bracket();
        const Rational x = inside(A), y = inside(B);
        REQUIRE((A + B).contains(x + y));
        REQUIRE((A - B).contains(x - y));
        REQUIRE((A * B).contains(x * y));
    }
}

TEST_CASE("root_bracket examples")
{
    const Bracket s2 = root_bracket(2, 2, q(1, 1000));
    CHECK(s2.lo() * s2.lo() <= 2);
    CHECK(s2.hi() * s2.hi() >= 2);
    CHECK(s2.contains(dec("1.41421356")));
    CHECK(s2.width() <= q(1, 1000));

    const Bracket four = root_bracket(4, 2, q(1, 10));
    CHECK(four.contains(2));

    const Bracket s5 = root_bracket(5, 2, q(1, 1000000));
    CHECK(s5.width() <= q(1, 1000000));
    CHECK(s5.contains(dec("2.2360679")));
    const auto oracle5 = oracle::bisect_power(5, 1, 2, 40);
    CHECK(testing_support::overlaps(s5, oracle5.lo, oracle5.hi));
    CHECK(s5.lo() * s5.lo() <= 5);
    CHECK(s5.hi() * s5.hi() >= 5);

    CHECK(root_bracket(0, 3, q(1, 100)).contains(0));
    CHECK_THROWS_AS(root_bracket(-1, 2, q(1, 10)), std::domain_error);
    CHECK_THROWS_AS(root_bracket(2, 2, 0), std::domain_error);
}

TEST_CASE("property: root_bracket refines monotonically and always encloses the root")
{
    for (long radicand : {2L, 3L, 7L, 10L, 1000L}) {
        for (unsigned long k : {2UL, 3UL, 5UL}) {
            std::optional<Bracket> prev;
            Rational eps = q(1, 2);
            for (int i = 0; i < 30; ++i, eps = eps / 2) {
                const Bracket b = root_bracket(radicand, k, eps);
                REQUIRE(pow(b.lo(), static_cast<long>(k)) <= radicand);
                REQUIRE(pow(b.hi(), static_cast<long>(k)) >= radicand);
                REQUIRE(b.width() <= eps);
                if (prev)
                    REQUIRE(prev->contains(b));
                prev = b;
            }
        }
    }
}

TEST_CASE("rational_power_bracket examples")
{
    const Bracket two = rational_power_bracket(2, 1, 1, q(1, 100));
    CHECK(two.contains(2));
    CHECK(two.width() <= q(1, 100));

    const Bracket b = rational_power_bracket(2, 1414, 1000, q(1, 1000));
    CHECK(b.width() <= q(1, 1000));
    const auto o = oracle::bisect_power(2, 1414, 1000, 40);
    CHECK(testing_support::overlaps(b, o.lo, o.hi));
    CHECK(b.lo() < dec("2.66475"));
    CHECK(b.hi() > dec("2.66474"));

    const Bracket c = rational_power_bracket(2, 3, 2, q(1, 10000));
    const auto oc = oracle::bisect_power(2, 3, 2, 40);
    CHECK(c.width() <= q(1, 10000));
    CHECK(testing_support::overlaps(c, oc.lo, oc.hi));
    CHECK(c.lo() >= dec("2.8283"));
    CHECK(c.hi() <= dec("2.8286"));

    const Bracket half = rational_power_bracket(2, -1, 1, q(1, 1000));
    CHECK(half.contains(q(1, 2)));
    const Bracket inv = rational_power_bracket(q(1, 4), 1, 2, q(1, 1000));
    CHECK(inv.contains(q(1, 2)));

    CHECK_THROWS_AS(rational_power_bracket(0, 1, 2, q(1, 10)), std::domain_error);
    CHECK_THROWS_AS(rational_power_bracket(-2, 1, 2, q(1, 10)), std::domain_error);
}

TEST_CASE("oracles agree with each other")
{
    // 2^(1414/1000) <= 2^sqrt(2) <= 2^(1415/1000)
    const auto lo = oracle::bisect_power(2, 1414, 1000, 40);
    const auto hi = oracle::bisect_power(2, 1415, 1000, 40);
    const auto tight = oracle::power_sqrt2(2);
    CHECK(lo.lo <= tight.lo);
    CHECK(tight.hi <= hi.hi);
    CHECK(tight.lo >= dec("2.66514414269022518865"));
    CHECK(tight.hi <= dec("2.66514414269022518866"));
    const auto pi = oracle::machin_pi(30);
    CHECK(pi.contains(dec("3.14159265358979323846264338327950")));
    CHECK(pi.hi - pi.lo < Rational::parse("1/1000000000000000000000000000000"));
}
