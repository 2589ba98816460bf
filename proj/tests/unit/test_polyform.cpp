#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "twoside/polyform.hpp"

using namespace twoside;
using testing_support::as_rational;
using testing_support::q;

namespace {

Polynomial norm(const std::string& text, std::vector<std::string> vars)
{
    return poly_normalize(Expr::parse(text), vars);
}

std::map<std::string, Rational> env_of(const std::vector<Param>& ps)
{
    std::map<std::string, Rational> env;
    for (const auto& p : ps)
        env[p.name] = Rational::parse(p.value);
    return env;
}

} // namespace

TEST_CASE("poly_normalize expands to the unique normal form")
{
    CHECK(norm("(a+b)^2", {"a", "b"}) == norm("a^2 + 2*a*b + b^2", {"a", "b"}));
    CHECK(norm("(a+b)^2", {"a", "b"}).str() == "a^2 + 2*a*b + b^2");
    CHECK(norm("(a+b)*(c+d)", {"a", "b", "c", "d"}) == norm("a*c + a*d + b*c + b*d", {"a", "b", "c", "d"}));
    CHECK(norm("0*a + 3 - 3", {"a"}).is_zero());
    CHECK(norm("0*a + 3 - 3", {"a"}).str() == "0");
    CHECK_THROWS_AS(norm("a + z", {"a"}), std::domain_error);
    CHECK_THROWS_AS(Expr::parse("a +"), std::invalid_argument);
    CHECK_THROWS_AS(Expr::parse("a / b"), std::invalid_argument);
    CHECK(norm("a/2 + a/2", {"a"}) == norm("a", {"a"}));
}

TEST_CASE("identity_check on the listed identities")
{
    auto chk = [](const std::string& l, const std::string& r, std::vector<std::string> vars) {
        return identity_check(Expr::parse(l), Expr::parse(r), vars);
    };
    CHECK(chk("(a+b)^3", "a^3 + 3*a^2*b + 3*a*b^2 + b^3", {"a", "b"}).pass);
    CHECK(chk("(a-b)^2", "a^2 - 2*a*b + b^2", {"a", "b"}).pass);

    const auto bad = chk("(a+b)^2", "a^2 + b^2", {"a", "b"});
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.witness);
    REQUIRE(bad.witness->params.size() == 2);
    CHECK(bad.witness->params[0].value == "1");
    CHECK(bad.witness->params[1].value == "1");
    CHECK(bad.witness->lhs == "4");
    CHECK(bad.witness->rhs == "2");
    CHECK(bad.status() == Status::fail);
}

TEST_CASE("every built-in algebra identity passes")
{
    const auto& ids = algebra_identities();
    CHECK(ids.size() >= 8);
    bool has_sq_sum = false, has_cube = false;
    for (const auto& id : ids) {
        INFO(id.id);
        const auto r = identity_check(Expr::parse(id.lhs), Expr::parse(id.rhs), id.vars, id.id);
        CHECK(r.pass);
        CHECK_FALSE(r.witness);
        CHECK(r.suite == id.id);
        has_sq_sum = has_sq_sum || id.id == "alg.sq_sum";
        has_cube = has_cube || id.id == "alg.cube_sum_expand";
    }
    CHECK(has_sq_sum);
    CHECK(has_cube);
}

TEST_CASE("property: perturbed identities fail with a genuine witness")
{
    for (const auto& id : algebra_identities()) {
        INFO(id.id);
        // bump the coefficient of the first variable's linear term by one
        const std::string rhs = "(" + id.rhs + ") + " + id.vars.front();
        const Expr l = Expr::parse(id.lhs), r = Expr::parse(rhs);
        const auto rep = identity_check(l, r, id.vars);
        REQUIRE_FALSE(rep.pass);
        REQUIRE(rep.witness);
        const auto env = env_of(rep.witness->params);
        CHECK(l.evaluate(env) != r.evaluate(env));
        CHECK(l.evaluate(env).str() == rep.witness->lhs);
    }
}

TEST_CASE("property: normal-form equality agrees with evaluation at random points")
{
    SplitMix64 rng(7);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& id : algebra_identities()) {
        pairs.emplace_back(id.lhs, id.rhs);
        pairs.emplace_back(id.lhs, "(" + id.rhs + ") - 2*" + id.vars.back() + "^2");
    }
    pairs.emplace_back("(a+b)*(a-b)", "a^2 - b^2");
    pairs.emplace_back("(a+b)*(a-b)", "a^2 + b^2");
    const std::vector<std::string> vars{"a", "b", "c", "d"};
    for (const auto& [l, r] : pairs) {
        INFO(l << " vs " << r);
        const Expr el = Expr::parse(l), er = Expr::parse(r);
        const bool same_form = poly_normalize(el, vars) == poly_normalize(er, vars);
        bool all_zero = true;
        for (int i = 0; i < 20; ++i) {
            std::map<std::string, Rational> env;
            for (const auto& v : vars)
                env[v] = testing_support::random_rational(rng, 97);
            all_zero = all_zero && (el.evaluate(env) - er.evaluate(env)).is_zero();
        }
        CHECK(same_form == all_zero);
    }
}

TEST_CASE("trapezoid rearrangement")
{
    const auto r = pythagoras_rearrangement_check();
    CHECK(r.pass);
    CHECK(r.suite == "geo.pythagoras");
    const auto t = pythagoras_trapezoid_areas(3, 4, 5);
    CHECK(t.whole == q(49, 2));
    CHECK(t.parts == q(49, 2));
    const auto z = pythagoras_trapezoid_areas(0, 0, 0);
    CHECK(z.whole == 0);
    CHECK(z.parts == 0);
    // a non-right triangle breaks the equality
    const auto u = pythagoras_trapezoid_areas(3, 4, 6);
    CHECK(u.whole != u.parts);

    const auto printed = pythagoras_printed_check();
    CHECK_FALSE(printed.pass);
    CHECK(printed.expectation == Expectation::fails_as_printed);
    CHECK(printed.status() == Status::expected_fail);
    CHECK(as_rational(printed.lhs) == 49);
    CHECK(as_rational(printed.rhs) == q(49, 2));
}

TEST_CASE("cauchy_schwarz_check examples")
{
    const auto orth = cauchy_schwarz_check(1, 0, 0, 1);
    CHECK(orth.report.pass);
    CHECK(as_rational(orth.report.lhs) == 0);
    CHECK(as_rational(orth.report.rhs) == 1);
    CHECK_FALSE(orth.equality);

    const auto prop = cauchy_schwarz_check(1, 2, 2, 4);
    CHECK(prop.report.pass);
    CHECK(prop.equality);

    const auto gen = cauchy_schwarz_check(1, 2, 3, 5);
    CHECK(as_rational(gen.report.lhs) == 169);
    CHECK(as_rational(gen.report.rhs) == 170);
    CHECK(gen.report.relation == Relation::less_equal);
    CHECK_FALSE(gen.equality);
}

TEST_CASE("property: Cauchy-Schwarz on random rational vectors, equality iff proportional")
{
    SplitMix64 rng(42);
    for (int i = 0; i < 10000; ++i) {
        const Rational a1 = testing_support::random_rational(rng, 20), a2 = testing_support::random_rational(rng, 20);
        Rational b1 = testing_support::random_rational(rng, 20), b2 = testing_support::random_rational(rng, 20);
        if (i % 7 == 0) {
            const Rational l = testing_support::random_rational(rng, 9);
            b1 = l * a1;
            b2 = l * a2;
        }
        const auto c = cauchy_schwarz_check(a1, a2, b1, b2);
        REQUIRE(c.report.pass);
        REQUIRE(c.equality == (a1 * b2 - a2 * b1).is_zero());
    }
}

TEST_CASE("mixture_concentration solves the mass balance exactly")
{
    // 1.3 x + 0.8 * 15 = 2.1 * 10  =>  x = (21 - 12) / 1.3 = 90/13
    const Rational x = mixture_concentration(q(13, 10), q(8, 10), 15, 10);
    CHECK(x == q(90, 13));
    CHECK(mixture_balance_check(q(13, 10), q(8, 10), 15, 10, x).pass);
    // the rounded 7 does not balance: 1.3*7 + 0.8*15 = 21.1
    const auto seven = mixture_balance_check(q(13, 10), q(8, 10), 15, 10, 7);
    CHECK_FALSE(seven.pass);
    CHECK(as_rational(seven.lhs) * 100 == q(211, 10));

    CHECK(mixture_concentration(1, 0, 99, 25) == 25);
    CHECK(mixture_concentration(1, 1, 10, 20) == 30);
    CHECK_THROWS_AS(mixture_concentration(0, 1, 10, 20), std::domain_error);
}

TEST_CASE("incircle tangent points coincide")
{
    CHECK(incircle_tangent_check(5, 5, 6, q(7, 3)).pass);
    const auto r = incircle_tangent_check(3, 4, 5, 2);
    CHECK(r.pass);
    CHECK(as_rational(r.lhs) == q(1, 2));
    CHECK(as_rational(r.rhs) == q(1, 2));
    const auto sym = incircle_tangent_symbolic();
    CHECK(sym.pass);
    CHECK_THROWS_AS(incircle_tangent_check(1, 2, 3, 1), std::domain_error);
    CHECK_THROWS_AS(incircle_tangent_check(3, 4, 5, 0), std::domain_error);
}

TEST_CASE("report invariants: witness present iff pass is false")
{
    const auto ok = make_report("t", {param("n", 1L)}, Rational(1), Rational(1));
    CHECK(ok.pass);
    CHECK_FALSE(ok.witness);
    const auto bad = make_report("t", {param("n", 1L)}, Rational(1), Rational(2));
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.witness);
    CHECK(bad.witness->params == bad.params);
    CHECK(make_report("t", {}, Rational(1), Rational(2), Relation::less_equal).pass);
    CHECK_FALSE(make_report("t", {}, Rational(2), Rational(2), Relation::less).pass);
    auto soft = bad;
    soft.soft = true;
    CHECK(soft.status() == Status::warn);
    CHECK(ok.case_label() == "n=1");
}
