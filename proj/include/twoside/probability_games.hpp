#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "twoside/bracket.hpp"
#include "twoside/report.hpp"

namespace twoside {

class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Transition {
    Rational p;
    std::string target;
};

/// Markov chain whose absorbing states are the ones without transitions.
class AbsorbingChain {
public:
    /// Declares a state; an empty transition list makes it absorbing.
    AbsorbingChain& state(std::string name, std::vector<Transition> transitions = {});
    AbsorbingChain& win(std::string name);

    const std::vector<std::string>& states() const { return order_; }
    const std::vector<Transition>& transitions(const std::string& s) const;
    bool absorbing(const std::string& s) const { return transitions(s).empty(); }
    const std::set<std::string>& wins() const { return wins_; }

    /// Probabilities sum to 1, targets exist, wins are absorbing, and every
    /// transient state can reach absorption. Throws ModelError.
    void validate() const;

private:
    std::vector<std::string> order_;
    std::map<std::string, std::vector<Transition>> edges_;
    std::set<std::string> wins_;
};

/// Probability of ending in `targets` from every state, exact Gaussian elimination.
std::map<std::string, Rational> absorption_probabilities(const AbsorbingChain& chain,
                                                         const std::set<std::string>& targets);

/// absorption_probabilities into the chain's win set.
std::map<std::string, Rational> absorbing_chain_solve(const AbsorbingChain& chain);

/// S -> A wins (1/6) | C1 (5/6); C1 -> B wins (1/6) | S (5/6).
AbsorbingChain dice_chain();

/// Same shape with a fair coin: first head wins.
AbsorbingChain first_head_chain();

enum class Game { dice, coin };

struct MonteCarloReport {
    long trials = 0;
    long hits = 0;
    Rational estimate;
    Rational expected;
    double sigma = 0;         ///< sqrt(p(1-p)/trials), presentation only
    double deviation = 0;     ///< |estimate - expected| / sigma
    Status status = Status::pass;  ///< pass within 3 sigma, warn to 4, fail beyond
};

/// Seeded splitmix64 simulation; shard i uses seed ^ i and results are
/// aggregated in shard order. Dice rolls by rejection sampling, one bit per
/// coin flip. `n` is the head count for the coin game.
MonteCarloReport monte_carlo(Game game, long trials, std::uint64_t seed, long n = 1, unsigned shards = 1);

/// Exact 3 sigma / 4 sigma classification of an estimate.
Status sigma_gate(const Rational& estimate, const Rational& expected, long trials);

struct GameReport {
    Rational exact;
    Bracket series_bracket{0, 0};
    long terms = 0;
    MonteCarloReport monte_carlo;
};

/// Exact by chain solve, series bracket sum_{k<=K} (1/6)(25/36)^k plus the
/// geometric tail, Monte Carlo at (trials, seed).
GameReport dice_game(long K = 40, long trials = 1000000, std::uint64_t seed = 42);

/// Partial sums of the dice series with the geometric tail.
Bracket dice_series_bracket(long K);

/// Starter's chance to flip the n-th head; alternating single fair flips.
Rational coin_game_exact(long n);

/// States (heads so far, who flips) as an absorbing chain; "A0" is the start.
AbsorbingChain coin_chain(long n);

/// The second player's chance, by solving coin_chain for B's absorption.
Rational coin_game_second_player(long n);

/// (1/2)(1 + (-1)^(n+1) / 3^n)
Rational coin_game_closed_form(long n);

/// sum_{L=l_start}^{l_max} C(2L, n-1) / 2^(2L+1)
Rational coin_game_series_partial(long n, long l_start, long l_max);

/// Partial sum up to l_max plus a ratio-test tail bound. Needs l_max large
/// enough that the term ratio has settled below 1 (std::domain_error otherwise).
Bracket coin_game_series_bracket(long n, long l_start, long l_max);

struct SeriesIndexRow {
    long n = 0;
    long l_start = 0;
    Rational dp;
    Bracket bracket{0, 0};
    bool matches = false;  ///< dp inside the bracket
};

/// For n = 1..max_n and l_start in {0, 1}: does the series reach the DP value?
std::vector<SeriesIndexRow> coin_series_investigation(long max_n = 12, long l_max = 60);

GameReport coin_game(long n, long K = 60, long trials = 1000000, std::uint64_t seed = 42);

} // namespace twoside
