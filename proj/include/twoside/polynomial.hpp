#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "twoside/rational.hpp"

namespace twoside {

/// Multivariate polynomial over a fixed, ordered variable list.
///
/// Terms are keyed by exponent vectors; zero coefficients are never stored,
/// which makes the representation a unique normal form.
class Polynomial {
public:
    using Exponents = std::vector<unsigned>;

    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Polynomial constant(std::vector<std::string> vars, const Rational& c);
    /// Throws std::domain_error when name is not one of vars.
    static Polynomial variable(std::vector<std::string> vars, const std::string& name);

    const std::vector<std::string>& variables() const { return vars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    unsigned total_degree() const;

    /// point[i] is the value of variables()[i].
    Rational evaluate(std::span<const Rational> point) const;

    /// Highest-degree terms first, e.g. "a^2 + 2*a*b + b^2"; "0" when empty.
    std::string str() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    void add_term(const Exponents& e, const Rational& c);
    void check_compatible(const Polynomial& other) const;

    std::vector<std::string> vars_;
    std::map<Exponents, Rational> terms_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

} // namespace twoside
