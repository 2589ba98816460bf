#include "twoside/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace twoside {

Polynomial Polynomial::constant(std::vector<std::string> vars, const Rational& c)
{
    Polynomial p(std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

Polynomial Polynomial::variable(std::vector<std::string> vars, const std::string& name)
{
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end())
        throw std::domain_error("undeclared variable '" + name + "'");
    Exponents e(vars.size(), 0);
    e[static_cast<std::size_t>(it - vars.begin())] = 1;
    Polynomial p(std::move(vars));
    p.add_term(e, 1);
    return p;
}

unsigned Polynomial::total_degree() const
{
    unsigned d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0U));
    return d;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const
{
    if (point.size() != vars_.size())
        throw std::invalid_argument("evaluation point has the wrong dimension");
    Rational sum;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0)
                t *= pow(point[i], static_cast<long>(e[i]));
        sum += t;
    }
    return sum;
}

std::string Polynomial::str() const
{
    if (terms_.empty())
        return "0";
    std::vector<std::pair<Exponents, Rational>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
        unsigned dx = std::accumulate(x.first.begin(), x.first.end(), 0U);
        unsigned dy = std::accumulate(y.first.begin(), y.first.end(), 0U);
        if (dx != dy)
            return dx > dy;
        return x.first > y.first;
    });

    std::string out;
    bool first = true;
    for (const auto& [e, c] : ordered) {
        std::string monomial;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!monomial.empty())
                monomial += "*";
            monomial += vars_[i];
            if (e[i] > 1)
                monomial += "^" + std::to_string(e[i]);
        }
        Rational mag = c.abs();
        std::string body;
        if (monomial.empty())
            body = mag.str();
        else if (mag == 1)
            body = monomial;
        else
            body = (mag.is_integer() ? mag.str() : "(" + mag.str() + ")") + "*" + monomial;

        if (first)
            out += (c.sign() < 0 ? "-" : "") + body;
        else
            out += (c.sign() < 0 ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

void Polynomial::add_term(const Exponents& e, const Rational& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void Polynomial::check_compatible(const Polynomial& other) const
{
    if (vars_ != other.vars_)
        throw std::invalid_argument("polynomials over different variable lists");
}

Polynomial Polynomial::operator-() const
{
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    a.check_compatible(b);
    Polynomial r = a;
    for (const auto& [e, c] : b.terms_)
        r.add_term(e, c);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    a.check_compatible(b);
    Polynomial r(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Polynomial::Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

Polynomial pow(const Polynomial& base, unsigned exponent)
{
    Polynomial result = Polynomial::constant(base.variables(), 1);
    Polynomial b = base;
    while (exponent != 0) {
        if (exponent & 1U)
            result = result * b;
        exponent >>= 1;
        if (exponent != 0)
            b = b * b;
    }
    return result;
}

} // namespace twoside
