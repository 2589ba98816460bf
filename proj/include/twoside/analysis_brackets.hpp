#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "twoside/bracket.hpp"
#include "twoside/report.hpp"

namespace twoside {

/// Stateful supplier of enclosures of one fixed real value.
/// Single-owner; not meant to be shared mid-iteration.
class BracketGenerator {
public:
    virtual ~BracketGenerator() = default;

    /// Produces the next enclosure and bumps the step counter.
    Bracket step()
    {
        ++steps_;
        return next();
    }
    std::size_t steps() const { return steps_; }

    /// Refinement parameter of the most recent bracket, e.g. "n=8".
    virtual std::string parameter() const = 0;

protected:
    virtual Bracket next() = 0;

private:
    std::size_t steps_ = 0;
};

struct SqueezeResult {
    Bracket bracket;
    std::size_t steps;
    std::string parameter;
};

/// First yielded bracket with width <= tol. Throws NonConvergenceError
/// (carrying the last bracket) after max_steps, std::domain_error on bad args.
SqueezeResult squeeze_limit(BracketGenerator& g, const Rational& tol, std::size_t max_steps);

/// 5 <= (3^n + 5^n)^(1/n) <= 5 * 2^(1/n); hi rounded up via bisection.
Bracket nth_root_sequence_bracket(long n);

/// a^sqrt(2) between a^d and a^(d + 10^-digits), d the truncated decimal of sqrt(2).
Bracket real_power_bracket(const Rational& a, long digits);

struct GeometricSeriesReport {
    Rational partial;  ///< sum_{i=0}^{N} a r^i
    Rational closed;   ///< a / (1 - r)
    Rational tail;     ///< a r^(N+1) / (1 - r), exact
    Bracket tail_bracket;
};

/// |r| < 1, N >= 0; otherwise std::domain_error.
GeometricSeriesReport geometric_series_sum(const Rational& a, const Rational& r, long N);

struct SwinesheadReport {
    Rational partial;         ///< sum_{n=0}^{N} n / 2^n, literal
    Rational closed_partial;  ///< 2 - (N+2) / 2^N
    Bracket bracket{0, 0};    ///< [partial, partial + (N+2)/2^N]
    bool pass = false;
};

SwinesheadReport swineshead_check(long N);

/// Rows of tails summed row-wise vs the weighted column sum i / 2^i.
IdentityReport rows_rearrangement_check(long N);

/// c * x^k on [0, b], k in {1, 2, 3}.
struct MonomialIntegrand {
    Rational c = 1;
    int k = 2;
    Rational b = 1;

    Rational operator()(const Rational& x) const;
    /// c b^(k+1) / (k+1)
    Rational integral() const;
};

/// Lower/upper Darboux sums on n equal cells via Faulhaber closed forms.
Bracket riemann_bracket(const MonomialIntegrand& f, long n);

/// Unit circle area between the inscribed and circumscribed 6*2^d-gons.
/// Square roots by bisection, everything rounded outward to eps; successive
/// doublings are intersected so the sequence is nested.
Bracket pi_bracket(long doublings, const Rational& eps);

Bracket circle_area_bracket(const Rational& r, long doublings, const Rational& eps);
Bracket cylinder_volume_bracket(const Rational& r, const Rational& m, long doublings, const Rational& eps);

// ---- generators ----------------------------------------------------------

class ConstantGenerator final : public BracketGenerator {
public:
    explicit ConstantGenerator(Bracket b) : b_(std::move(b)) {}
    std::string parameter() const override { return "-"; }

protected:
    Bracket next() override { return b_; }

private:
    Bracket b_;
};

class NthRootGenerator final : public BracketGenerator {
public:
    std::string parameter() const override { return "n=" + std::to_string(n_); }

protected:
    Bracket next() override { return nth_root_sequence_bracket(++n_); }

private:
    long n_ = 0;
};

class RealPowerGenerator final : public BracketGenerator {
public:
    explicit RealPowerGenerator(Rational a) : a_(std::move(a)) {}
    std::string parameter() const override { return "digits=" + std::to_string(digits_); }

protected:
    Bracket next() override { return real_power_bracket(a_, ++digits_); }

private:
    Rational a_;
    long digits_ = -1;
};

/// n = 1, 2, 4, 8, ...
class RiemannGenerator final : public BracketGenerator {
public:
    explicit RiemannGenerator(MonomialIntegrand f) : f_(std::move(f)) {}
    std::string parameter() const override { return "n=" + std::to_string(n_); }

protected:
    Bracket next() override
    {
        n_ = n_ == 0 ? 1 : 2 * n_;
        return riemann_bracket(f_, n_);
    }

private:
    MonomialIntegrand f_;
    long n_ = 0;
};

/// One doubling per step, incremental; the first step is the hexagon.
class PiGenerator final : public BracketGenerator {
public:
    explicit PiGenerator(Rational eps, Rational scale = 1);
    std::string parameter() const override;

protected:
    Bracket next() override;

private:
    Rational eps_;
    Rational scale_;
    BigInt sides_;
    std::optional<Bracket> sin_;
    std::optional<Bracket> cos_;
    std::optional<Bracket> current_;
};

class GeometricGenerator final : public BracketGenerator {
public:
    GeometricGenerator(Rational a, Rational r) : a_(std::move(a)), r_(std::move(r)) {}
    std::string parameter() const override { return "N=" + std::to_string(N_); }

protected:
    Bracket next() override { return geometric_series_sum(a_, r_, ++N_).tail_bracket; }

private:
    Rational a_;
    Rational r_;
    long N_ = -1;
};

class SwinesheadGenerator final : public BracketGenerator {
public:
    std::string parameter() const override { return "N=" + std::to_string(N_); }

protected:
    Bracket next() override { return swineshead_check(++N_).bracket; }

private:
    long N_ = -1;
};

} // namespace twoside
