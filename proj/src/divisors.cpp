#include "twoside/divisors.hpp"

#include <stdexcept>

namespace twoside {

DivisorTable divisor_counts(long n)
{
    if (n < 1)
        throw std::domain_error("divisor table needs n >= 1");
    DivisorTable t;
    t.n = n;
    t.d.assign(static_cast<std::size_t>(n), 0);
    for (long i = 1; i <= n; ++i)
        for (long m = i; m <= n; m += i) {
            ++t.d[static_cast<std::size_t>(m - 1)];
            ++t.increments;
        }
    return t;
}

namespace {

BigInt floor_sum(long n)
{
    BigInt s = 0;
    for (long k = 1; k <= n; ++k)
        s += n / k;
    return s;
}

BigInt table_sum(const DivisorTable& t, long upto)
{
    BigInt s = 0;
    for (long k = 1; k <= upto; ++k)
        s += t.at(k);
    return s;
}

} // namespace

IdentityReport divisor_identity_check(long n)
{
    const auto t = divisor_counts(n);
    return make_report("div.identity", {param("n", n)}, Rational(table_sum(t, n)), Rational(floor_sum(n)));
}

DivisorBounds divisor_average_bounds(long n)
{
    const auto t = divisor_counts(n);
    DivisorBounds b;
    b.n = n;
    b.divisor_sum = table_sum(t, n);
    b.floor_sum = floor_sum(n);
    Rational h = 0;
    for (long k = 1; k <= n; ++k)
        h = h + Rational(1, k);
    b.upper = h;
    b.lower = h - 1;
    b.avg = Rational(b.divisor_sum) / Rational(n);
    b.pass = b.lower < b.avg && b.avg <= b.upper;
    b.upper_attained = b.avg == b.upper;
    return b;
}

DivisorSweep divisor_sweep(long max_n)
{
    const auto t = divisor_counts(max_n);
    DivisorSweep s;
    s.max_n = max_n;
    BigInt dsum = 0;
    Rational h = 0;
    for (long n = 1; n <= max_n; ++n) {
        dsum += t.at(n);
        h = h + Rational(1, n);
        if (dsum != floor_sum(n))
            ++s.identity_failures;
        const Rational avg = Rational(dsum) / Rational(n);
        if (!(h - 1 < avg && avg <= h))
            ++s.bound_failures;
        if (avg == h)
            s.upper_attained_at.push_back(n);
    }
    return s;
}

} // namespace twoside
