#pragma once

#include <array>
#include <string_view>

#include "twoside/report.hpp"

namespace twoside {

/// f_1 = f_2 = 1; n = 0 is a domain error.
BigInt fibonacci(long n);

enum class SumKind {
    triangular,        ///< 1+2+...+n = n(n+1)/2
    odd_square,        ///< 1+3+...+(2n-1) = n^2
    even,              ///< 2+4+...+2n = n(n+1)
    updown,            ///< 1+...+n+...+1 = n^2
    squares,           ///< sum i^2 = n(n+1)(2n+1)/6
    cubes,             ///< sum i^3 = (n(n+1)/2)^2
    fib_squares,       ///< f_1^2+...+f_n^2 = f_n f_{n+1}
    adj_triangular,    ///< T_n + T_{n+1} = (n+1)^2
    palindrome_odd,    ///< 1+3+...+(2n+1)+...+3+1 = n^2+(n+1)^2
    cube_layers,       ///< n+2n+...+n*n+...+2n+n = n^3
    triangular_binom,  ///< 1+2+...+n = binom(n+1, 2)
};

inline constexpr std::array<SumKind, 11> all_sum_kinds{
    SumKind::triangular, SumKind::odd_square,    SumKind::even,           SumKind::updown,
    SumKind::squares,    SumKind::cubes,         SumKind::fib_squares,    SumKind::adj_triangular,
    SumKind::palindrome_odd, SumKind::cube_layers, SumKind::triangular_binom,
};

/// Lower-case suite suffix, e.g. "triangular" for suite id "sum.triangular".
std::string_view sum_kind_name(SumKind kind);

/// lhs by a literal summation loop, rhs by the closed form.
IdentityReport sum_identity_check(SumKind kind, long n);

struct BetweennessReport {
    long m = 0;
    long n = 0;
    BigInt x;             ///< f_{2m+1} + f_{2m+3} + ... + f_{2n+1}
    BigInt y;             ///< f_{2m} + f_{2m+2} + ... + f_{2n}
    BigInt x_telescoped;  ///< f_{2n+2} - f_{2m}
    BigInt y_telescoped;  ///< f_{2n+1} - f_{2m-1}
    BigInt x_lower;       ///< f_{2n+1}
    BigInt x_upper;       ///< f_{2n+2}
    BigInt y_lower;       ///< f_{2n}
    BigInt y_upper;       ///< f_{2n+1}
    bool pass = false;
};

/// Requires 0 < m < n.
BetweennessReport fib_betweenness(long m, long n);

} // namespace twoside
