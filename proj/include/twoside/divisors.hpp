#pragma once

#include <vector>

#include "twoside/report.hpp"

namespace twoside {

struct DivisorTable {
    long n = 0;
    std::vector<long> d;  ///< d[k-1] = number of divisors of k
    long increments = 0;  ///< sieve steps taken; equals sum floor(n/i)

    long at(long k) const { return d.at(static_cast<std::size_t>(k - 1)); }
};

/// Sieve: every i bumps i, 2i, 3i, ...
DivisorTable divisor_counts(long n);

/// sum_{k<=n} d(k) against sum_{k<=n} floor(n/k).
IdentityReport divisor_identity_check(long n);

struct DivisorBounds {
    long n = 0;
    BigInt divisor_sum;
    BigInt floor_sum;
    Rational lower;  ///< H_n - 1
    Rational avg;    ///< divisor_sum / n
    Rational upper;  ///< H_n
    bool pass = false;
    bool upper_attained = false;
};

DivisorBounds divisor_average_bounds(long n);

struct DivisorSweep {
    long max_n = 0;
    long identity_failures = 0;
    long bound_failures = 0;
    std::vector<long> upper_attained_at;  ///< n with avg = H_n
};

/// Identity and bounds for every 1 <= n <= max_n, one sieve, incremental H_n.
DivisorSweep divisor_sweep(long max_n);

} // namespace twoside
