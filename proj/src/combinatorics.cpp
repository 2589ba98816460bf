#include "twoside/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>

#include "twoside/sums_fib.hpp"

namespace twoside {

BigInt binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    // r stays integral: after step i it equals C(n-k+i, i)
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

namespace {

// Paths of right/up arrows from (0,0) to (k, n-k), counted by walking them.
std::uint64_t count_paths(long right, long up)
{
    if (right == 0 || up == 0)
        return 1;
    return count_paths(right - 1, up) + count_paths(right, up - 1);
}

std::uint64_t count_subsets(long n, long k)
{
    std::uint64_t c = 0;
    const std::uint32_t limit = std::uint32_t{1} << n;
    for (std::uint32_t mask = 0; mask < limit; ++mask)
        if (std::popcount(mask) == k)
            ++c;
    return c;
}

BigInt pow2(long e)
{
    BigInt r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    return r;
}

void require(bool ok, BinomKind kind, const std::string& what)
{
    if (!ok)
        throw std::domain_error("binom." + std::string(binom_kind_name(kind)) + ": " + what);
}

} // namespace

IdentityReport binomial_enumeration_crosscheck(long n, long k)
{
    if (n < 0 || n > 22 || k < 0 || k > n)
        throw std::domain_error("crosscheck needs 0 <= k <= n <= 22");
    const std::uint64_t subsets = count_subsets(n, k);
    const std::uint64_t paths = count_paths(k, n - k);
    const BigInt formula = binomial(n, k);
    auto r = make_report("binom.crosscheck", {param("n", n), param("k", k)},
                         Rational(BigInt(static_cast<unsigned long>(subsets))), Rational(formula));
    if (paths != subsets) {
        r.pass = false;
        r.witness = Witness{r.params, std::to_string(subsets), std::to_string(paths)};
    }
    r.note = "subsets=" + std::to_string(subsets) + " paths=" + std::to_string(paths) + " formula=" + formula.get_str();
    return r;
}

std::string_view binom_kind_name(BinomKind kind)
{
    switch (kind) {
    case BinomKind::pascal:
        return "pascal";
    case BinomKind::square_pascal:
        return "square_pascal";
    case BinomKind::split_j:
        return "split_j";
    case BinomKind::row_sum:
        return "row_sum";
    case BinomKind::weighted_3n:
        return "weighted_3n";
    case BinomKind::double_3n:
        return "double_3n";
    case BinomKind::fib_diagonal:
        return "fib_diagonal";
    case BinomKind::hockey_stick:
        return "hockey_stick";
    case BinomKind::absorption_printed:
        return "absorption_printed";
    case BinomKind::absorption_standard:
        return "absorption_standard";
    case BinomKind::committee_product:
        return "committee_product";
    }
    return "?";
}

int binom_kind_arity(BinomKind kind)
{
    switch (kind) {
    case BinomKind::row_sum:
    case BinomKind::weighted_3n:
    case BinomKind::double_3n:
    case BinomKind::fib_diagonal:
        return 1;
    case BinomKind::split_j:
    case BinomKind::committee_product:
        return 3;
    default:
        return 2;
    }
}

IdentityReport binom_identity_check(BinomKind kind, const std::vector<long>& params)
{
    const int arity = binom_kind_arity(kind);
    if (static_cast<int>(params.size()) != arity)
        throw std::domain_error("binom." + std::string(binom_kind_name(kind)) + " takes " + std::to_string(arity) +
                                " parameter(s)");
    const long n = params[0];
    const long k = arity > 1 ? params[1] : 0;
    const long third = arity > 2 ? params[2] : 0;

    BigInt lhs;
    BigInt rhs;
    std::vector<Param> ps{param("n", n)};
    if (arity > 1)
        ps.push_back(param("k", k));

    switch (kind) {
    case BinomKind::pascal:
        require(n >= 0 && k >= 0 && k <= n + 1, kind, "needs 0 <= k <= n+1");
        lhs = binomial(n + 1, k);
        rhs = binomial(n, k) + binomial(n, k - 1);
        break;
    case BinomKind::square_pascal:
        require(k >= 2 && k <= n, kind, "needs 2 <= k <= n");
        lhs = binomial(n + 1, k);
        rhs = binomial(n - 1, k - 2) + 2 * binomial(n - 1, k - 1) + binomial(n - 1, k);
        break;
    case BinomKind::split_j: {
        const long j = third;
        require(0 <= j && j <= k && k <= n, kind, "needs 0 <= j <= k <= n");
        ps.push_back(param("j", j));
        lhs = binomial(n + 1, k);
        for (long i = 0; i <= j; ++i)
            rhs += binomial(j, i) * binomial(n + 1 - j, k - i);
        break;
    }
    case BinomKind::row_sum:
        require(n >= 0, kind, "needs n >= 0");
        for (long i = 0; i <= n; ++i)
            lhs += binomial(n, i);
        rhs = pow2(n);
        break;
    case BinomKind::weighted_3n:
        require(n >= 0, kind, "needs n >= 0");
        for (long i = 0; i <= n; ++i)
            lhs += pow2(n - i) * binomial(n, i);
        rhs = pow(BigInt(3), static_cast<unsigned long>(n));
        break;
    case BinomKind::double_3n:
        require(n >= 0, kind, "needs n >= 0");
        for (long i = 0; i <= n; ++i)
            for (long m = 0; m <= i; ++m)
                lhs += binomial(n, i) * binomial(i, m);
        rhs = pow(BigInt(3), static_cast<unsigned long>(n));
        break;
    case BinomKind::fib_diagonal:
        require(n >= 1, kind, "needs n >= 1");
        for (long i = 0; i <= (n - 1) / 2; ++i)
            lhs += binomial(n - i - 1, i);
        rhs = fibonacci(n);
        break;
    case BinomKind::hockey_stick:
        require(0 <= k && k <= n, kind, "needs 0 <= k <= n");
        for (long m = k; m <= n; ++m)
            lhs += binomial(m, k);
        rhs = binomial(n + 1, k + 1);
        break;
    case BinomKind::absorption_printed:
        require(0 <= k && k <= n && n >= 1, kind, "needs 0 <= k <= n, n >= 1");
        lhs = n * binomial(n - 1, k);
        rhs = k * binomial(n, k);
        break;
    case BinomKind::absorption_standard:
        require(1 <= k && k <= n, kind, "needs 1 <= k <= n");
        lhs = k * binomial(n, k);
        rhs = n * binomial(n - 1, k - 1);
        break;
    case BinomKind::committee_product: {
        const long l = third;
        require(0 <= l && l <= k && k <= n, kind, "needs 0 <= l <= k <= n");
        ps.push_back(param("l", l));
        lhs = binomial(n, l) * binomial(n - l, k - l);
        rhs = binomial(k, l) * binomial(n, k);
        break;
    }
    }

    auto r = make_report("binom." + std::string(binom_kind_name(kind)), std::move(ps), Rational(lhs), Rational(rhs));
    if (kind == BinomKind::absorption_printed) {
        r.expectation = Expectation::fails_as_printed;
        const auto [cn, ck] = absorption_printed_counterexample();
        r.note = "minimal counterexample n=" + std::to_string(cn) + ", k=" + std::to_string(ck) +
                 "; standard form is k*C(n,k) = n*C(n-1,k-1)";
    }
    return r;
}

std::pair<long, long> absorption_printed_counterexample()
{
    for (long n = 2;; ++n)
        for (long k = 1; k < n; ++k)
            if (n * binomial(n - 1, k) != k * binomial(n, k))
                return {n, k};
}

IdentityReport fib_diagonal_check(long n)
{
    return binom_identity_check(BinomKind::fib_diagonal, {n});
}

ColoringReport constrained_colorings(long n)
{
    if (n < 1 || n > 30)
        throw std::domain_error("colorings are enumerated for 1 <= n <= 30");
    ColoringReport r;
    r.n = n;
    std::uint64_t count = 0;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t x = 0; x < limit; ++x)
        if ((x & (x >> 1)) == 0)
            ++count;
    r.count = BigInt(static_cast<unsigned long>(count));
    r.fib = fibonacci(n + 2);
    for (long k = 0; k <= n - k + 1; ++k)
        r.binom_sum += binomial(n - k + 1, k);
    r.fib_check = r.count == r.fib;
    r.binom_check = r.count == r.binom_sum;
    return r;
}

Partition make_partition(std::vector<long> parts)
{
    Partition p;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be non-increasing");
        p.total += parts[i];
    }
    p.parts = std::move(parts);
    return p;
}

namespace {

void enumerate_into(long remaining, long cap, std::vector<long>& prefix, long total, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.push_back(Partition{prefix, total});
        return;
    }
    for (long part = std::min(remaining, cap); part >= 1; --part) {
        prefix.push_back(part);
        enumerate_into(remaining - part, part, prefix, total, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_enumerate(long n)
{
    if (n < 1 || n > 45)
        throw std::domain_error("partitions are enumerated for 1 <= n <= 45");
    std::vector<Partition> out;
    std::vector<long> prefix;
    enumerate_into(n, n, prefix, n, out);
    return out;
}

Partition partition_conjugate(const Partition& p)
{
    Partition c;
    c.total = p.total;
    if (p.parts.empty())
        return c;
    // column j of the diagram has as many cells as parts exceeding j
    for (long j = 0; j < p.parts.front(); ++j) {
        long column = 0;
        for (long part : p.parts)
            if (part > j)
                ++column;
        c.parts.push_back(column);
    }
    return c;
}

DualityReport partition_duality_check(long n, long k)
{
    if (k < 1 || k > n)
        throw std::domain_error("duality needs 1 <= k <= n");
    const auto all = partitions_enumerate(n);
    std::set<Partition> small_parts;
    std::set<Partition> few_parts;
    for (const auto& p : all) {
        if (p.parts.front() <= k)
            small_parts.insert(p);
        if (static_cast<long>(p.parts.size()) <= k)
            few_parts.insert(p);
    }
    DualityReport d;
    d.report = make_report("partition.duality", {param("n", n), param("k", k)},
                           Rational(BigInt(static_cast<unsigned long>(small_parts.size()))),
                           Rational(BigInt(static_cast<unsigned long>(few_parts.size()))));
    std::set<Partition> image;
    for (const auto& p : small_parts)
        image.insert(partition_conjugate(p));
    d.bijection = image == few_parts;
    if (!d.bijection && d.report.pass) {
        d.report.pass = false;
        d.report.witness = Witness{d.report.params, "conjugate image", "differs"};
    }
    return d;
}

} // namespace twoside
