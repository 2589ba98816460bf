#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <mpfr.h>

namespace oracle {

BigInt factorial(long n)
{
    BigInt f = 1;
    for (long i = 2; i <= n; ++i)
        f *= i;
    return f;
}

BigInt binomial_factorial(long n, long k)
{
    if (k < 0 || k > n)
        return 0;
    return factorial(n) / (factorial(k) * factorial(n - k));
}

BigInt fibonacci_loop(long n)
{
    BigInt a = 1, b = 1;  // f_1, f_2
    for (long i = 1; i < n; ++i) {
        BigInt c = a + b;
        a = b;
        b = c;
    }
    return a;
}

long divisor_count_trial(long k)
{
    long c = 0;
    for (long d = 1; d <= k; ++d)
        if (k % d == 0)
            ++c;
    return c;
}

long partitions_count(long n, long max_part)
{
    static std::map<std::pair<long, long>, long> memo;
    if (n == 0)
        return 1;
    if (n < 0 || max_part == 0)
        return 0;
    const auto key = std::make_pair(n, max_part);
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    // either no part equals max_part, or remove one such part
    const long v = partitions_count(n, max_part - 1) + partitions_count(n - max_part, max_part);
    memo[key] = v;
    return v;
}

namespace {

Rational pow10(int e)
{
    BigInt p = 1;
    for (int i = 0; i < e; ++i)
        p *= 10;
    return Rational(p);
}

// arctan(1/m) between two consecutive alternating partial sums
Interval arctan_inv(long m, const Rational& tol)
{
    const Rational x(BigInt(1), BigInt(m));
    const Rational x2 = x * x;
    Rational term = x;  // x^(2j+1)
    Rational sum = 0;
    for (long j = 0;; ++j) {
        const Rational t = term / Rational(2 * j + 1);
        const Rational next = (j % 2 == 0) ? sum + t : sum - t;
        if (t < tol)
            return {std::min(sum, next), std::max(sum, next)};
        sum = next;
        term = term * x2;
    }
}

Rational mpfr_to_rational(const mpfr_t v)
{
    mpq_t q;
    mpq_init(q);
    mpfr_get_q(q, v);
    const Rational r(BigInt(mpq_numref(q)), BigInt(mpq_denref(q)));
    mpq_clear(q);
    return r;
}

} // namespace

Interval machin_pi(int digits)
{
    const Rational tol = Rational(1) / pow10(digits + 2);
    const Interval a = arctan_inv(5, tol);
    const Interval b = arctan_inv(239, tol);
    return {Rational(16) * a.lo - Rational(4) * b.hi, Rational(16) * a.hi - Rational(4) * b.lo};
}

Interval power_sqrt2(const Rational& a, int bits)
{
    if (a.sign() <= 0)
        throw std::domain_error("base must be positive");
    mpfr_t s_lo, s_hi, a_lo, a_hi, y_lo, y_hi;
    for (auto* v : {s_lo, s_hi, a_lo, a_hi, y_lo, y_hi})
        mpfr_init2(v, bits);
    mpfr_sqrt_ui(s_lo, 2, MPFR_RNDD);
    mpfr_sqrt_ui(s_hi, 2, MPFR_RNDU);
    mpfr_set_q(a_lo, a.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(a_hi, a.raw().get_mpq_t(), MPFR_RNDU);
    if (a >= 1) {
        mpfr_pow(y_lo, a_lo, s_lo, MPFR_RNDD);
        mpfr_pow(y_hi, a_hi, s_hi, MPFR_RNDU);
    } else {
        mpfr_pow(y_lo, a_lo, s_hi, MPFR_RNDD);
        mpfr_pow(y_hi, a_hi, s_lo, MPFR_RNDU);
    }
    Interval out{mpfr_to_rational(y_lo), mpfr_to_rational(y_hi)};
    for (auto* v : {s_lo, s_hi, a_lo, a_hi, y_lo, y_hi})
        mpfr_clear(v);
    return out;
}

Interval bisect_power(long base, long p, long q, int bits)
{
    if (base < 2 || p < 0 || q < 1)
        throw std::domain_error("bisect_power needs base > 1, p >= 0, q >= 1");
    BigInt target;  // base^p * 2^(bits*q), compared against m^q
    mpz_ui_pow_ui(target.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(p));
    target <<= static_cast<mp_bitcnt_t>(bits) * static_cast<mp_bitcnt_t>(q);
    BigInt lo = BigInt(1) << bits;  // y = 1
    BigInt hi;
    mpz_ui_pow_ui(hi.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>((p + q - 1) / q));
    hi <<= bits;
    while (hi - lo > 1) {
        const BigInt mid = (lo + hi) / 2;
        BigInt m_q;
        mpz_pow_ui(m_q.get_mpz_t(), mid.get_mpz_t(), static_cast<unsigned long>(q));
        if (m_q <= target)
            lo = mid;
        else
            hi = mid;
    }
    const BigInt den = BigInt(1) << bits;
    return {Rational(lo, den), Rational(hi, den)};
}

Interval riemann_literal(const Rational& c, int k, const Rational& b, long n)
{
    const Rational h = b / Rational(n);
    Rational lower = 0, upper = 0;
    for (long i = 0; i < n; ++i) {
        Rational xl = 1, xr = 1;
        const Rational left = Rational(i) * h;
        const Rational right = Rational(i + 1) * h;
        for (int e = 0; e < k; ++e) {
            xl *= left;
            xr *= right;
        }
        lower += c * xl * h;
        upper += c * xr * h;
    }
    return {lower, upper};
}

namespace {

bool collinear_between(Pt a, Pt b, Pt p)
{
    const std::int64_t cr = (b.first - a.first) * (p.second - a.second) - (b.second - a.second) * (p.first - a.first);
    if (cr != 0)
        return false;
    return std::min(a.first, b.first) <= p.first && p.first <= std::max(a.first, b.first) &&
           std::min(a.second, b.second) <= p.second && p.second <= std::max(a.second, b.second);
}

std::vector<Pt> segment_list(Pt a, Pt b)
{
    std::vector<Pt> out;
    if (a.first == b.first) {
        for (std::int64_t y = std::min(a.second, b.second); y <= std::max(a.second, b.second); ++y)
            out.push_back({a.first, y});
        return out;
    }
    const std::int64_t dx = b.first - a.first, dy = b.second - a.second;
    for (std::int64_t x = std::min(a.first, b.first); x <= std::max(a.first, b.first); ++x) {
        const std::int64_t num = (x - a.first) * dy;
        if (num % dx == 0)
            out.push_back({x, a.second + num / dx});
    }
    return out;
}

} // namespace

long segment_points(Pt a, Pt b)
{
    return static_cast<long>(segment_list(a, b).size());
}

long boundary_enumerate(const std::vector<Pt>& poly)
{
    std::set<Pt> pts;
    for (std::size_t i = 0; i < poly.size(); ++i)
        for (const Pt& p : segment_list(poly[i], poly[(i + 1) % poly.size()]))
            pts.insert(p);
    return static_cast<long>(pts.size());
}

long interior_winding(const std::vector<Pt>& poly)
{
    std::int64_t x0 = poly[0].first, x1 = x0, y0 = poly[0].second, y1 = y0;
    for (const auto& [x, y] : poly) {
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y0 = std::min(y0, y);
        y1 = std::max(y1, y);
    }
    long count = 0;
    const std::size_t n = poly.size();
    for (std::int64_t x = x0; x <= x1; ++x)
        for (std::int64_t y = y0; y <= y1; ++y) {
            const Pt p{x, y};
            bool on_edge = false;
            int wn = 0;
            for (std::size_t i = 0; i < n && !on_edge; ++i) {
                const Pt a = poly[i], b = poly[(i + 1) % n];
                if (collinear_between(a, b, p)) {
                    on_edge = true;
                    break;
                }
                const std::int64_t side =
                    (b.first - a.first) * (p.second - a.second) - (b.second - a.second) * (p.first - a.first);
                if (a.second <= y) {
                    if (b.second > y && side > 0)
                        ++wn;
                } else if (b.second <= y && side < 0) {
                    --wn;
                }
            }
            if (!on_edge && wn != 0)
                ++count;
        }
    return count;
}

std::int64_t twice_area_trapezoid(const std::vector<Pt>& poly)
{
    std::int64_t s = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Pt a = poly[i], b = poly[(i + 1) % poly.size()];
        s += (b.first - a.first) * (b.second + a.second);
    }
    return -s;
}

Interval coin_negative_binomial(long n, long t_max)
{
    Rational partial = 0;
    for (long t = n; t <= t_max; ++t)
        if (t % 2 == 1)
            partial += Rational(binomial_factorial(t - 1, n - 1), BigInt(1) << static_cast<mp_bitcnt_t>(t));
    Rational tail = 0;
    for (long j = 0; j < n; ++j)
        tail += Rational(binomial_factorial(t_max, j), BigInt(1) << static_cast<mp_bitcnt_t>(t_max));
    return {partial, partial + tail};
}

} // namespace oracle
