#include "twoside/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace twoside {

namespace {

BigInt parse_integer(std::string_view text)
{
    if (text.empty())
        throw std::invalid_argument("empty integer literal");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size())
        throw std::invalid_argument("malformed integer literal: " + std::string(text));
    for (std::size_t i = start; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("malformed integer literal: " + std::string(text));
    // mpz_class rejects a leading '+'
    return BigInt(std::string(text[0] == '+' ? text.substr(1) : text), 10);
}

} // namespace

Rational::Rational(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);

    if (auto slash = text.find('/'); slash != std::string_view::npos)
        return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));

    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool negative = !whole.empty() && whole[0] == '-';
        if (!whole.empty() && (whole[0] == '-' || whole[0] == '+'))
            whole.remove_prefix(1);
        if (whole.empty() && frac.empty())
            throw std::invalid_argument("malformed decimal literal: " + std::string(text));
        BigInt w = whole.empty() ? BigInt(0) : parse_integer(whole);
        BigInt f = frac.empty() ? BigInt(0) : parse_integer(frac);
        if (!frac.empty() && (frac[0] == '-' || frac[0] == '+'))
            throw std::invalid_argument("malformed decimal literal: " + std::string(text));
        BigInt scale = pow(BigInt(10), frac.size());
        Rational r(w * scale + f, scale);
        return negative ? -r : r;
    }
    return Rational(parse_integer(text));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::reciprocal() const
{
    if (is_zero())
        throw std::domain_error("reciprocal of zero");
    return Rational(q_.get_den(), q_.get_num());
}

BigInt Rational::floor() const
{
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

BigInt Rational::ceil() const
{
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

std::string Rational::str() const
{
    if (is_integer())
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::decimal(int digits) const
{
    if (digits < 0)
        digits = 0;
    const BigInt scale = pow(BigInt(10), static_cast<unsigned long>(digits));
    // round(|q| * scale) half away from zero
    mpq_class scaled = ::abs(q_) * scale;
    BigInt twice = (scaled.get_num() * 2 + scaled.get_den());
    BigInt rounded;
    mpz_fdiv_q(rounded.get_mpz_t(), twice.get_mpz_t(), BigInt(scaled.get_den() * 2).get_mpz_t());

    std::string body = rounded.get_str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits))
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    if (sign() < 0 && rounded != 0)
        body.insert(0, "-");
    return body;
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational& Rational::operator+=(const Rational& rhs)
{
    q_ += rhs.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    q_ -= rhs.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    q_ *= rhs.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero())
        throw std::domain_error("division by zero");
    q_ /= rhs.q_;
    return *this;
}

Rational rational_normalize(const BigInt& num, const BigInt& den) { return Rational(num, den); }

BigInt pow(const BigInt& base, unsigned long exponent)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rational pow(const Rational& base, long exponent)
{
    if (exponent < 0) {
        if (base.is_zero())
            throw std::domain_error("zero raised to a negative power");
        return pow(base.reciprocal(), -exponent);
    }
    const auto e = static_cast<unsigned long>(exponent);
    // num^e / den^e stays coprime, so no re-reduction is needed beyond the ctor
    return Rational(pow(base.num(), e), pow(base.den(), e));
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::size_t bit_length(const BigInt& v)
{
    if (v == 0)
        return 0;
    return mpz_sizeinbase(v.get_mpz_t(), 2);
}

} // namespace twoside
