#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "twoside/probability_games.hpp"

using namespace twoside;
using testing_support::q;

TEST_CASE("absorbing chains")
{
    const auto dice = absorbing_chain_solve(dice_chain());
    CHECK(dice.at("S") == q(6, 11));
    CHECK(dice.at("C1") == q(5, 11));

    const auto coin = absorbing_chain_solve(first_head_chain());
    CHECK(coin.at("S") == q(2, 3));

    AbsorbingChain instant;
    instant.state("S", {{1, "W"}}).state("W").win("W");
    CHECK(absorbing_chain_solve(instant).at("S") == 1);
    CHECK(absorbing_chain_solve(instant).at("W") == 1);

    // win + lose = 1 from every transient state
    AbsorbingChain three;
    three.state("S", {{q(1, 3), "W"}, {q(1, 3), "L"}, {q(1, 3), "M"}})
        .state("M", {{q(1, 2), "S"}, {q(1, 4), "W"}, {q(1, 4), "L"}})
        .state("W")
        .state("L")
        .win("W");
    const auto w = absorbing_chain_solve(three);
    const auto l = absorption_probabilities(three, {"L"});
    for (const auto& s : {"S", "M"})
        CHECK(w.at(s) + l.at(s) == 1);
    CHECK(w.at("S") == q(1, 2));  // symmetric chain
}

TEST_CASE("model errors")
{
    AbsorbingChain bad_sum;
    bad_sum.state("S", {{q(1, 2), "W"}}).state("W").win("W");
    CHECK_THROWS_AS(bad_sum.validate(), ModelError);
    CHECK_THROWS_AS(absorbing_chain_solve(bad_sum), ModelError);

    AbsorbingChain unknown;
    unknown.state("S", {{1, "X"}}).state("W").win("W");
    CHECK_THROWS_AS(unknown.validate(), ModelError);

    AbsorbingChain trap;
    trap.state("S", {{q(1, 2), "W"}, {q(1, 2), "A"}}).state("A", {{1, "B"}}).state("B", {{1, "A"}}).state("W").win("W");
    CHECK_THROWS_AS(trap.validate(), ModelError);

    AbsorbingChain win_transient;
    win_transient.state("S", {{1, "W"}}).state("W", {{1, "S"}}).win("W");
    CHECK_THROWS_AS(win_transient.validate(), ModelError);

    CHECK_THROWS_AS(dice_chain().transitions("nowhere"), ModelError);
    CHECK_NOTHROW(dice_chain().validate());
}

TEST_CASE("dice series")
{
    CHECK(dice_series_bracket(0).contains(q(6, 11)));
    Bracket prev = dice_series_bracket(0);
    for (long K = 0; K <= 60; ++K) {
        const auto b = dice_series_bracket(K);
        // partial sum computed here term by term
        Rational partial = 0;
        for (long k = 0; k <= K; ++k)
            partial += q(1, 6) * pow(q(25, 36), k);
        REQUIRE(b.lo() <= partial);
        REQUIRE(b.contains(q(6, 11)));
        REQUIRE(prev.contains(b));
        prev = b;
    }
    CHECK(prev.width() < q(1, 1000000000));
    CHECK_THROWS_AS(dice_series_bracket(-1), std::domain_error);
}

TEST_CASE("monte carlo")
{
    const auto a = monte_carlo(Game::dice, 100000, 42);
    const auto b = monte_carlo(Game::dice, 100000, 42);
    CHECK(a.hits == b.hits);
    CHECK(a.trials == 100000);
    CHECK(a.estimate == q(a.hits, a.trials));
    CHECK(a.expected == q(6, 11));
    CHECK(a.status == Status::pass);
    CHECK(a.status == sigma_gate(a.estimate, a.expected, a.trials));

    const auto s4 = monte_carlo(Game::coin, 100000, 7, 3, 4);
    CHECK(s4.hits == monte_carlo(Game::coin, 100000, 7, 3, 4).hits);
    CHECK(s4.expected == coin_game_closed_form(3));
    CHECK(s4.status != Status::fail);

    CHECK_THROWS_AS(monte_carlo(Game::dice, 0, 1), std::domain_error);
    CHECK_THROWS_AS(monte_carlo(Game::coin, 10, 1, 0), std::domain_error);
}

TEST_CASE("sigma_gate")
{
    CHECK(sigma_gate(q(1, 2), q(1, 2), 100) == Status::pass);
    CHECK(sigma_gate(q(65, 100), q(1, 2), 100) == Status::pass);   // exactly 3 sigma
    CHECK(sigma_gate(q(68, 100), q(1, 2), 100) == Status::warn);
    CHECK(sigma_gate(q(70, 100), q(1, 2), 100) == Status::warn);   // exactly 4 sigma
    CHECK(sigma_gate(q(71, 100), q(1, 2), 100) == Status::fail);
    CHECK(sigma_gate(q(29, 100), q(1, 2), 100) == Status::fail);
}

TEST_CASE("coin game")
{
    CHECK(coin_game_exact(1) == q(2, 3));
    CHECK(coin_game_closed_form(1) == q(2, 3));
    CHECK(coin_game_closed_form(2) == q(4, 9));
    for (long n = 1; n <= 12; ++n) {
        INFO("n=" << n);
        const Rational p = coin_game_exact(n);
        REQUIRE(p == coin_game_closed_form(n));
        REQUIRE(oracle::coin_negative_binomial(n, 200).contains(p));
        REQUIRE(p + coin_game_second_player(n) == 1);
        REQUIRE((p > q(1, 2)) == (n % 2 == 1));
    }
    CHECK_THROWS_AS(coin_game_exact(0), std::domain_error);
    CHECK_NOTHROW(coin_chain(3).validate());
    CHECK(absorbing_chain_solve(coin_chain(2)).at("A0") == q(4, 9));
}

TEST_CASE("coin series")
{
    const Rational eps = Rational(1) / pow(Rational(2), 60);
    CHECK((coin_game_series_partial(1, 0, 30) - q(2, 3)).abs() < eps);
    CHECK((coin_game_series_partial(1, 1, 30) - q(1, 6)).abs() < eps);
    CHECK(coin_game_series_partial(1, 0, 0) == q(1, 2));
    CHECK(coin_game_series_bracket(1, 0, 30).contains(q(2, 3)));
    CHECK_FALSE(coin_game_series_bracket(1, 1, 30).contains(q(2, 3)));
    CHECK_THROWS_AS(coin_game_series_partial(1, 3, 2), std::domain_error);

    const auto rows = coin_series_investigation(12, 60);
    CHECK(rows.size() == 24);
    for (const auto& r : rows) {
        INFO("n=" << r.n << " l_start=" << r.l_start);
        CHECK(r.dp == coin_game_closed_form(r.n));
        CHECK(r.matches == !(r.n == 1 && r.l_start == 1));
    }
}

TEST_CASE("game reports")
{
    const auto d = dice_game(40, 20000, 1);
    CHECK(d.exact == q(6, 11));
    CHECK(d.series_bracket == dice_series_bracket(40));
    CHECK(d.monte_carlo.trials == 20000);
    const auto c = coin_game(2, 60, 20000, 1);
    CHECK(c.exact == q(4, 9));
    CHECK(c.series_bracket.contains(q(4, 9)));
}
