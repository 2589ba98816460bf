#include "twoside/probability_games.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <thread>

#include "twoside/combinatorics.hpp"
#include "twoside/splitmix.hpp"

namespace twoside {

AbsorbingChain& AbsorbingChain::state(std::string name, std::vector<Transition> transitions)
{
    if (edges_.count(name))
        throw ModelError("state declared twice: " + name);
    order_.push_back(name);
    edges_.emplace(std::move(name), std::move(transitions));
    return *this;
}

AbsorbingChain& AbsorbingChain::win(std::string name)
{
    wins_.insert(std::move(name));
    return *this;
}

const std::vector<Transition>& AbsorbingChain::transitions(const std::string& s) const
{
    const auto it = edges_.find(s);
    if (it == edges_.end())
        throw ModelError("unknown state: " + s);
    return it->second;
}

void AbsorbingChain::validate() const
{
    for (const auto& w : wins_)
        if (!absorbing(w))
            throw ModelError("win state is not absorbing: " + w);
    for (const auto& s : order_) {
        const auto& ts = transitions(s);
        if (ts.empty())
            continue;
        Rational total = 0;
        for (const auto& t : ts) {
            if (t.p.sign() < 0)
                throw ModelError("negative probability out of " + s);
            transitions(t.target);  // must exist
            total = total + t.p;
        }
        if (total != 1)
            throw ModelError("probabilities out of " + s + " sum to " + total.str());
    }
    // every transient state must reach some absorbing state
    for (const auto& s : order_) {
        std::set<std::string> seen{s};
        std::deque<std::string> queue{s};
        bool reaches = false;
        while (!queue.empty() && !reaches) {
            const std::string cur = queue.front();
            queue.pop_front();
            if (absorbing(cur)) {
                reaches = true;
                break;
            }
            for (const auto& t : transitions(cur))
                if (t.p.sign() > 0 && seen.insert(t.target).second)
                    queue.push_back(t.target);
        }
        if (!reaches)
            throw ModelError("state " + s + " never reaches absorption");
    }
}

std::map<std::string, Rational> absorption_probabilities(const AbsorbingChain& chain,
                                                         const std::set<std::string>& targets)
{
    chain.validate();
    std::vector<std::string> transient;
    std::map<std::string, std::size_t> index;
    for (const auto& s : chain.states())
        if (!chain.absorbing(s)) {
            index[s] = transient.size();
            transient.push_back(s);
        }
    const std::size_t m = transient.size();
    // (I - Q) x = r, augmented
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1, Rational(0)));
    for (std::size_t i = 0; i < m; ++i) {
        a[i][i] = 1;
        for (const auto& t : chain.transitions(transient[i])) {
            if (chain.absorbing(t.target)) {
                if (targets.count(t.target))
                    a[i][m] = a[i][m] + t.p;
            } else {
                auto& cell = a[i][index.at(t.target)];
                cell = cell - t.p;
            }
        }
    }
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t pivot = col;
        while (pivot < m && a[pivot][col].is_zero())
            ++pivot;
        if (pivot == m)
            throw ModelError("singular absorption system");
        std::swap(a[col], a[pivot]);
        const Rational inv = a[col][col].reciprocal();
        for (std::size_t k = col; k <= m; ++k)
            a[col][k] = a[col][k] * inv;
        for (std::size_t row = 0; row < m; ++row) {
            if (row == col || a[row][col].is_zero())
                continue;
            const Rational f = a[row][col];
            for (std::size_t k = col; k <= m; ++k)
                a[row][k] = a[row][k] - f * a[col][k];
        }
    }
    std::map<std::string, Rational> out;
    for (const auto& s : chain.states())
        out[s] = chain.absorbing(s) ? Rational(targets.count(s) ? 1 : 0) : a[index.at(s)][m];
    return out;
}

std::map<std::string, Rational> absorbing_chain_solve(const AbsorbingChain& chain)
{
    return absorption_probabilities(chain, chain.wins());
}

AbsorbingChain dice_chain()
{
    AbsorbingChain c;
    c.state("S", {{Rational(1, 6), "A-wins"}, {Rational(5, 6), "C1"}})
        .state("C1", {{Rational(1, 6), "B-wins"}, {Rational(5, 6), "S"}})
        .state("A-wins")
        .state("B-wins")
        .win("A-wins");
    return c;
}

AbsorbingChain first_head_chain()
{
    AbsorbingChain c;
    c.state("S", {{Rational(1, 2), "A-wins"}, {Rational(1, 2), "C1"}})
        .state("C1", {{Rational(1, 2), "B-wins"}, {Rational(1, 2), "S"}})
        .state("A-wins")
        .state("B-wins")
        .win("A-wins");
    return c;
}

Status sigma_gate(const Rational& estimate, const Rational& expected, long trials)
{
    const Rational dev = estimate - expected;
    const Rational var = expected * (Rational(1) - expected) / Rational(trials);
    const Rational d2 = dev * dev;
    if (d2 <= 9 * var)
        return Status::pass;
    if (d2 <= 16 * var)
        return Status::warn;
    return Status::fail;
}

namespace {

// true when the starter wins one game
bool dice_trial(SplitMix64& rng)
{
    for (;;) {
        if (rng.below(6) == 5)
            return true;
        if (rng.below(6) == 5)
            return false;
    }
}

class BitStream {
public:
    explicit BitStream(SplitMix64& rng) : rng_(rng) {}
    bool next()
    {
        if (left_ == 0) {
            word_ = rng_.next();
            left_ = 64;
        }
        const bool bit = (word_ & 1U) != 0;
        word_ >>= 1;
        --left_;
        return bit;
    }

private:
    SplitMix64& rng_;
    std::uint64_t word_ = 0;
    int left_ = 0;
};

bool coin_trial(BitStream& bits, long n)
{
    long heads = 0;
    for (bool starter = true;; starter = !starter)
        if (bits.next() && ++heads == n)
            return starter;
}

long run_shard(Game game, long trials, std::uint64_t seed, long n)
{
    SplitMix64 rng(seed);
    BitStream bits(rng);
    long hits = 0;
    for (long t = 0; t < trials; ++t)
        hits += game == Game::dice ? dice_trial(rng) : coin_trial(bits, n);
    return hits;
}

} // namespace

MonteCarloReport monte_carlo(Game game, long trials, std::uint64_t seed, long n, unsigned shards)
{
    if (trials < 1)
        throw std::domain_error("need at least one trial");
    if (game == Game::coin && n < 1)
        throw std::domain_error("coin game needs n >= 1");
    shards = std::max(1U, shards);
    std::vector<long> hits(shards, 0);
    std::vector<long> share(shards, trials / static_cast<long>(shards));
    for (long i = 0; i < trials % static_cast<long>(shards); ++i)
        ++share[static_cast<std::size_t>(i)];
    if (shards == 1) {
        hits[0] = run_shard(game, trials, seed, n);
    } else {
        std::vector<std::thread> workers;
        for (unsigned i = 0; i < shards; ++i)
            workers.emplace_back([&, i] { hits[i] = run_shard(game, share[i], seed ^ i, n); });
        for (auto& w : workers)
            w.join();
    }
    MonteCarloReport r;
    r.trials = trials;
    for (long h : hits)
        r.hits += h;
    r.estimate = Rational(BigInt(r.hits), BigInt(trials));
    r.expected = game == Game::dice ? absorbing_chain_solve(dice_chain()).at("S") : coin_game_exact(n);
    const double p = r.expected.to_double();
    r.sigma = std::sqrt(p * (1 - p) / static_cast<double>(trials));
    r.deviation = std::abs((r.estimate - r.expected).to_double()) / r.sigma;
    r.status = sigma_gate(r.estimate, r.expected, trials);
    return r;
}

Bracket dice_series_bracket(long K)
{
    if (K < 0)
        throw std::domain_error("K must be non-negative");
    const Rational ratio(25, 36L);
    Rational term(1, 6L);
    Rational partial = 0;
    for (long k = 0; k <= K; ++k) {
        partial = partial + term;
        term = term * ratio;
    }
    // term is now (1/6)(25/36)^(K+1)
    return Bracket(partial, partial + term / (Rational(1) - ratio));
}

GameReport dice_game(long K, long trials, std::uint64_t seed)
{
    GameReport g;
    g.exact = absorbing_chain_solve(dice_chain()).at("S");
    g.series_bracket = dice_series_bracket(K);
    g.terms = K;
    g.monte_carlo = monte_carlo(Game::dice, trials, seed);
    return g;
}

namespace {

// Starter's value at h = 0 walking h down from n-1; two unknowns per h:
// u (A to flip) and v (B to flip) with u = a/2 + v/2, v = b/2 + u/2.
Rational coin_dp(long n)
{
    if (n < 1)
        throw std::domain_error("coin game needs n >= 1");
    Rational next_a = 0;  // value at h+1 with A to flip
    Rational next_b = 0;
    for (long h = n - 1; h >= 0; --h) {
        const bool last = h + 1 == n;
        const Rational a_heads = last ? Rational(1) : next_b;  // A flipped heads, B moves next
        const Rational b_heads = last ? Rational(0) : next_a;
        const Rational u = (2 * a_heads + b_heads) / 3;
        const Rational v = b_heads / 2 + u / 2;
        next_a = u;
        next_b = v;
    }
    return next_a;
}

} // namespace

Rational coin_game_exact(long n)
{
    return coin_dp(n);
}

AbsorbingChain coin_chain(long n)
{
    if (n < 1)
        throw std::domain_error("coin game needs n >= 1");
    auto name = [](long h, char who) { return std::string(1, who) + std::to_string(h); };
    AbsorbingChain c;
    for (long h = 0; h < n; ++h) {
        const bool last = h + 1 == n;
        c.state(name(h, 'A'), {{Rational(1, 2), last ? "A-wins" : name(h + 1, 'B')}, {Rational(1, 2), name(h, 'B')}});
        c.state(name(h, 'B'), {{Rational(1, 2), last ? "B-wins" : name(h + 1, 'A')}, {Rational(1, 2), name(h, 'A')}});
    }
    c.state("A-wins").state("B-wins").win("A-wins");
    return c;
}

Rational coin_game_second_player(long n)
{
    return absorption_probabilities(coin_chain(n), {"B-wins"}).at("A0");
}

Rational coin_game_closed_form(long n)
{
    if (n < 1)
        throw std::domain_error("coin game needs n >= 1");
    const Rational sign = n % 2 == 1 ? 1 : -1;
    return (Rational(1) + sign / pow(Rational(3), n)) / 2;
}

namespace {

Rational coin_term(long n, long L)
{
    return Rational(binomial(2 * L, n - 1)) / pow(Rational(2), 2 * L + 1);
}

} // namespace

Rational coin_game_series_partial(long n, long l_start, long l_max)
{
    if (n < 1)
        throw std::domain_error("coin game needs n >= 1");
    if (l_start < 0 || l_start > l_max)
        throw std::domain_error("need 0 <= l_start <= l_max");
    Rational s = 0;
    for (long L = l_start; L <= l_max; ++L)
        s = s + coin_term(n, L);
    return s;
}

Bracket coin_game_series_bracket(long n, long l_start, long l_max)
{
    const Rational partial = coin_game_series_partial(n, l_start, l_max);
    // Term ratios t_{L+1}/t_L are non-increasing once 2L + 2 > n; the tail is
    // then at most t_{l_max+1} / (1 - rho) with rho the first tail ratio.
    const long first = l_max + 1;
    if (2 * first + 2 - n <= 0)
        throw std::domain_error("tail bound needs more terms");
    const Rational t1 = coin_term(n, first);
    const Rational rho = coin_term(n, first + 1) / t1;
    if (rho >= 1)
        throw std::domain_error("tail bound needs more terms");
    return Bracket(partial, partial + t1 / (Rational(1) - rho));
}

std::vector<SeriesIndexRow> coin_series_investigation(long max_n, long l_max)
{
    std::vector<SeriesIndexRow> rows;
    for (long n = 1; n <= max_n; ++n) {
        const Rational dp = coin_game_exact(n);
        for (long l_start : {0L, 1L}) {
            SeriesIndexRow r;
            r.n = n;
            r.l_start = l_start;
            r.dp = dp;
            r.bracket = coin_game_series_bracket(n, l_start, l_max);
            r.matches = r.bracket.contains(dp);
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

GameReport coin_game(long n, long K, long trials, std::uint64_t seed)
{
    GameReport g;
    g.exact = coin_game_exact(n);
    g.series_bracket = coin_game_series_bracket(n, 0, K);
    g.terms = K;
    g.monte_carlo = monte_carlo(Game::coin, trials, seed, n);
    return g;
}

} // namespace twoside
