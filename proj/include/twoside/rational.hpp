#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace twoside {

using BigInt = mpz_class;

/// Exact fraction kept in canonical form: den > 0 and gcd(|num|, den) = 1.
///
/// Every constructor and operation re-canonicalizes, so equality is plain
/// structural equality of numerator and denominator.
class Rational {
public:
    Rational() = default;
    Rational(int v) : q_(static_cast<long>(v)) {}
    Rational(long v) : q_(v) {}
    Rational(unsigned long v) : q_(v) {}
    Rational(const BigInt& v) : q_(v) {}
    /// Throws std::domain_error when den == 0.
    Rational(const BigInt& num, const BigInt& den);

    /// Accepts "p/q", "p" and plain decimals such as "-2.125".
    static Rational parse(std::string_view text);

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational abs() const;
    Rational reciprocal() const;
    BigInt floor() const;
    BigInt ceil() const;

    /// "p/q", or "p" when q = 1.
    std::string str() const;
    /// Decimal rendering rounded half away from zero; presentation only.
    std::string decimal(int digits) const;
    double to_double() const { return q_.get_d(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return q_; }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_;
};

/// Builds the canonical form of num/den; den == 0 is a domain error.
Rational rational_normalize(const BigInt& num, const BigInt& den);

/// base^exponent; negative exponents need a nonzero base.
Rational pow(const Rational& base, long exponent);
BigInt pow(const BigInt& base, unsigned long exponent);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Number of bits of |v| (0 for v = 0).
std::size_t bit_length(const BigInt& v);

} // namespace twoside
