#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "twoside/polynomial.hpp"
#include "twoside/report.hpp"

namespace twoside {

/// Expression tree over rational constants and named variables.
class Expr {
public:
    enum class Kind { constant, variable, sum, difference, product, power };
    struct Node;

    static Expr constant(const Rational& c);
    static Expr variable(std::string name);

    /// Parses +, -, *, ^ (non-negative integer exponents), parentheses,
    /// integer/decimal literals and identifiers. Division is accepted only
    /// by a constant subexpression. Throws std::invalid_argument.
    static Expr parse(std::string_view text);

    Kind kind() const;
    const Rational& value() const;
    const std::string& name() const;
    Expr left() const;
    Expr right() const;
    unsigned exponent() const;

    /// Direct recursive evaluation; independent of the normal form.
    Rational evaluate(const std::map<std::string, Rational>& env) const;
    std::vector<std::string> variables() const;

    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr pow(const Expr& base, unsigned exponent);

    friend Polynomial poly_normalize(const Expr& e, const std::vector<std::string>& vars);

private:
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Exact expansion into the unique normal form over `vars`.
/// An undeclared variable is a domain error.
Polynomial poly_normalize(const Expr& e, const std::vector<std::string>& vars);

/// Compares normal forms; on failure the witness is the first integer point
/// (per-coordinate order 0, 1, -1, 2, -2, 3, -3) where the sides differ.
IdentityReport identity_check(const Expr& lhs, const Expr& rhs, const std::vector<std::string>& vars,
                              std::string suite = "alg.custom");

struct AlgebraIdentity {
    std::string id;
    std::string lhs;
    std::string rhs;
    std::vector<std::string> vars;
};

/// The rectangle-cutting identities and their exercises.
const std::vector<AlgebraIdentity>& algebra_identities();

/// Trapezoid area counted whole and as three triangles:
/// (a+b)^2/2 - (ab + c^2/2) = (a^2 + b^2 - c^2)/2 as polynomials.
IdentityReport pythagoras_rearrangement_check();

struct TrapezoidAreas {
    Rational whole;  ///< (a+b)^2 / 2
    Rational parts;  ///< ab + c^2 / 2
};
TrapezoidAreas pythagoras_trapezoid_areas(const Rational& a, const Rational& b, const Rational& c);

/// The trapezoid equation exactly as printed, (a+b)^2 = (2ab + c^2)/2,
/// evaluated at a Pythagorean triple. Expected to fail.
IdentityReport pythagoras_printed_check(const Rational& a = 3, const Rational& b = 4, const Rational& c = 5);

struct CauchySchwarzReport {
    IdentityReport report;  ///< (a1 b1 + a2 b2)^2 <= (a1^2 + a2^2)(b1^2 + b2^2)
    bool equality = false;
};
CauchySchwarzReport cauchy_schwarz_check(const Rational& a1, const Rational& a2, const Rational& b1,
                                         const Rational& b2);

/// Solves m1*x + m2*c2 = (m1+m2)*c_mix for the unknown concentration x (percent).
Rational mixture_concentration(const Rational& m1, const Rational& m2, const Rational& c2, const Rational& c_mix);

/// Solute of the mixture counted both ways at concentration x.
IdentityReport mixture_balance_check(const Rational& m1, const Rational& m2, const Rational& c2,
                                     const Rational& c_mix, const Rational& x);

/// Tangent lengths from E in the two sub-triangles of the incircle problem.
/// Sides a, b, c must satisfy strict triangle inequalities, ce > 0.
IdentityReport incircle_tangent_check(const Rational& a, const Rational& b, const Rational& c,
                                      const Rational& ce);

/// DE - FE as a polynomial in a, b, c, ce.
IdentityReport incircle_tangent_symbolic();

} // namespace twoside
