#include "twoside/sums_fib.hpp"

#include <stdexcept>

#include "twoside/combinatorics.hpp"

namespace twoside {

BigInt fibonacci(long n)
{
    if (n < 1)
        throw std::domain_error("Fibonacci index starts at 1, got " + std::to_string(n));
    BigInt prev = 0;
    BigInt cur = 1;
    for (long i = 1; i < n; ++i) {
        BigInt next = prev + cur;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::string_view sum_kind_name(SumKind kind)
{
    switch (kind) {
    case SumKind::triangular:
        return "triangular";
    case SumKind::odd_square:
        return "odd_square";
    case SumKind::even:
        return "even";
    case SumKind::updown:
        return "updown";
    case SumKind::squares:
        return "squares";
    case SumKind::cubes:
        return "cubes";
    case SumKind::fib_squares:
        return "fib_squares";
    case SumKind::adj_triangular:
        return "adj_triangular";
    case SumKind::palindrome_odd:
        return "palindrome_odd";
    case SumKind::cube_layers:
        return "cube_layers";
    case SumKind::triangular_binom:
        return "triangular_binom";
    }
    return "?";
}

namespace {

BigInt triangular_by_loop(long k)
{
    BigInt t = 0;
    for (long i = 1; i <= k; ++i)
        t += i;
    return t;
}

// The counting side: never simplified.
BigInt literal_sum(SumKind kind, long n)
{
    BigInt s = 0;
    switch (kind) {
    case SumKind::triangular:
    case SumKind::triangular_binom:
        for (long i = 1; i <= n; ++i)
            s += i;
        break;
    case SumKind::odd_square:
        for (long i = 1; i <= n; ++i)
            s += 2 * i - 1;
        break;
    case SumKind::even:
        for (long i = 1; i <= n; ++i)
            s += 2 * i;
        break;
    case SumKind::updown:
        for (long i = 1; i <= n; ++i)
            s += i;
        for (long i = n - 1; i >= 1; --i)
            s += i;
        break;
    case SumKind::squares:
        for (long i = 1; i <= n; ++i)
            s += BigInt(i) * i;
        break;
    case SumKind::cubes:
        for (long i = 1; i <= n; ++i)
            s += BigInt(i) * i * i;
        break;
    case SumKind::fib_squares: {
        BigInt prev = 0;
        BigInt cur = 1;
        for (long i = 1; i <= n; ++i) {
            s += cur * cur;
            BigInt next = prev + cur;
            prev = std::move(cur);
            cur = std::move(next);
        }
        break;
    }
    case SumKind::adj_triangular:
        s = triangular_by_loop(n) + triangular_by_loop(n + 1);
        break;
    case SumKind::palindrome_odd:
        for (long i = 0; i <= n; ++i)
            s += 2 * i + 1;
        for (long i = n - 1; i >= 0; --i)
            s += 2 * i + 1;
        break;
    case SumKind::cube_layers:
        for (long i = 1; i <= n; ++i)
            s += BigInt(n) * i;
        for (long i = n - 1; i >= 1; --i)
            s += BigInt(n) * i;
        break;
    }
    return s;
}

BigInt closed_form(SumKind kind, long n)
{
    const BigInt N = n;
    switch (kind) {
    case SumKind::triangular:
        return N * (N + 1) / 2;
    case SumKind::odd_square:
    case SumKind::updown:
        return N * N;
    case SumKind::even:
        return N * (N + 1);
    case SumKind::squares:
        return N * (N + 1) * (2 * N + 1) / 6;
    case SumKind::cubes: {
        BigInt t = N * (N + 1) / 2;
        return t * t;
    }
    case SumKind::fib_squares:
        return fibonacci(n) * fibonacci(n + 1);
    case SumKind::adj_triangular:
        return (N + 1) * (N + 1);
    case SumKind::palindrome_odd:
        return N * N + (N + 1) * (N + 1);
    case SumKind::cube_layers:
        return N * N * N;
    case SumKind::triangular_binom:
        return binomial(n + 1, 2);
    }
    throw std::logic_error("unknown sum kind");
}

} // namespace

IdentityReport sum_identity_check(SumKind kind, long n)
{
    if (n < 1)
        throw std::domain_error("sum identities are indexed from n = 1");
    return make_report("sum." + std::string(sum_kind_name(kind)), {param("n", n)}, Rational(literal_sum(kind, n)),
                       Rational(closed_form(kind, n)));
}

BetweennessReport fib_betweenness(long m, long n)
{
    if (m <= 0 || m >= n)
        throw std::domain_error("betweenness needs 0 < m < n");
    BetweennessReport r;
    r.m = m;
    r.n = n;

    // f_1 .. f_{2n+2}, index 0 unused
    std::vector<BigInt> f(static_cast<std::size_t>(2 * n + 3));
    f[1] = 1;
    f[2] = 1;
    for (std::size_t i = 3; i < f.size(); ++i)
        f[i] = f[i - 1] + f[i - 2];
    auto F = [&](long i) -> const BigInt& { return f[static_cast<std::size_t>(i)]; };

    for (long i = 2 * m + 1; i <= 2 * n + 1; i += 2)
        r.x += F(i);
    for (long i = 2 * m; i <= 2 * n; i += 2)
        r.y += F(i);
    r.x_telescoped = F(2 * n + 2) - F(2 * m);
    r.y_telescoped = F(2 * n + 1) - F(2 * m - 1);
    r.x_lower = F(2 * n + 1);
    r.x_upper = F(2 * n + 2);
    r.y_lower = F(2 * n);
    r.y_upper = F(2 * n + 1);
    r.pass = r.x == r.x_telescoped && r.y == r.y_telescoped && r.x_lower < r.x && r.x < r.x_upper &&
             r.y_lower < r.y && r.y < r.y_upper;
    return r;
}

} // namespace twoside
