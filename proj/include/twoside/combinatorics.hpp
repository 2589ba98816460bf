#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "twoside/report.hpp"

namespace twoside {

/// Exact binomial coefficient; 0 outside 0 <= k <= n (and for n < 0).
BigInt binomial(long n, long k);

/// Subset popcount, lattice-path count and formula must agree. 0 <= k <= n <= 22.
IdentityReport binomial_enumeration_crosscheck(long n, long k);

enum class BinomKind {
    pascal,               ///< C(n+1,k) = C(n,k) + C(n,k-1)                (n, k)
    square_pascal,        ///< C(n+1,k) = C(n-1,k-2) + 2C(n-1,k-1) + C(n-1,k)  (n, k)
    split_j,              ///< sum_i C(j,i) C(n-j,k-i) = C(n,k)             (n, k, j)
    row_sum,              ///< sum_k C(n,k) = 2^n                           (n)
    weighted_3n,          ///< sum_k C(n,k) 2^k = 3^n                       (n)
    double_3n,            ///< sum_k C(n,k) sum_j C(n-k,j) = 3^n            (n)
    fib_diagonal,         ///< sum_{k<=[(n-1)/2]} C(n-k-1,k) = f_n          (n)
    hockey_stick,         ///< C(n,k) + C(n-1,k) + ... + C(k,k) = C(n+1,k+1) (n, k)
    absorption_printed,   ///< n C(n-1,k) = k C(n,k), fails as printed      (n, k)
    absorption_standard,  ///< k C(n,k) = n C(n-1,k-1)                      (n, k)
    committee_product,    ///< C(n,l) C(n-l,k-l) = C(k,l) C(n,k)            (n, k, l)
};

inline constexpr std::array<BinomKind, 11> all_binom_kinds{
    BinomKind::pascal,          BinomKind::square_pascal,       BinomKind::split_j,
    BinomKind::row_sum,         BinomKind::weighted_3n,         BinomKind::double_3n,
    BinomKind::fib_diagonal,    BinomKind::hockey_stick,        BinomKind::absorption_printed,
    BinomKind::absorption_standard, BinomKind::committee_product,
};

std::string_view binom_kind_name(BinomKind kind);

/// Number of integer parameters the kind takes (1, 2 or 3).
int binom_kind_arity(BinomKind kind);

/// Parameters in order (n), (n, k) or (n, k, j|l). Out-of-domain values throw
/// std::domain_error. absorption_printed is marked fails_as_printed.
IdentityReport binom_identity_check(BinomKind kind, const std::vector<long>& params);

/// Smallest (n, k) in order of n, then k, with 1 <= k < n where the printed
/// absorption identity fails.
std::pair<long, long> absorption_printed_counterexample();

IdentityReport fib_diagonal_check(long n);

struct ColoringReport {
    long n = 0;
    BigInt count;
    BigInt fib;        ///< f_{n+2}
    BigInt binom_sum;  ///< sum_k C(n-k+1, k)
    bool fib_check = false;
    bool binom_check = false;
};

/// Exhaustive count of n-bit strings without two adjacent ones. 1 <= n <= 30.
ColoringReport constrained_colorings(long n);

struct Partition {
    std::vector<long> parts;  ///< non-increasing, positive
    long total = 0;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;
};

/// Validates and wraps a part list; throws std::invalid_argument.
Partition make_partition(std::vector<long> parts);

/// All partitions of n, reverse-lexicographic (n first, 1+...+1 last). 1 <= n <= 45.
std::vector<Partition> partitions_enumerate(long n);

Partition partition_conjugate(const Partition& p);

struct DualityReport {
    IdentityReport report;   ///< count{max part <= k} vs count{#parts <= k}
    bool bijection = false;  ///< conjugation maps one set onto the other
};

/// 1 <= k <= n <= 45.
DualityReport partition_duality_check(long n, long k);

} // namespace twoside
