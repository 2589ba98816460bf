#include "twoside/polyform.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace twoside {

struct Expr::Node {
    Kind kind;
    Rational value;
    std::string name;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    unsigned exponent = 0;
};

Expr Expr::constant(const Rational& c)
{
    return Expr(std::make_shared<const Node>(Node{Kind::constant, c, {}, nullptr, nullptr, 0}));
}

Expr Expr::variable(std::string name)
{
    if (name.empty())
        throw std::invalid_argument("empty variable name");
    return Expr(std::make_shared<const Node>(Node{Kind::variable, 0, std::move(name), nullptr, nullptr, 0}));
}

Expr::Kind Expr::kind() const { return node_->kind; }
const Rational& Expr::value() const { return node_->value; }
const std::string& Expr::name() const { return node_->name; }
Expr Expr::left() const
{
    if (!node_->left)
        throw std::logic_error("expression node has no left operand");
    return Expr(node_->left);
}

Expr Expr::right() const
{
    if (!node_->right)
        throw std::logic_error("expression node has no right operand");
    return Expr(node_->right);
}
unsigned Expr::exponent() const { return node_->exponent; }

Expr operator+(const Expr& a, const Expr& b)
{
    return Expr(std::make_shared<const Expr::Node>(
        Expr::Node{Expr::Kind::sum, 0, {}, a.node_, b.node_, 0}));
}

Expr operator-(const Expr& a, const Expr& b)
{
    return Expr(std::make_shared<const Expr::Node>(
        Expr::Node{Expr::Kind::difference, 0, {}, a.node_, b.node_, 0}));
}

Expr operator*(const Expr& a, const Expr& b)
{
    return Expr(std::make_shared<const Expr::Node>(
        Expr::Node{Expr::Kind::product, 0, {}, a.node_, b.node_, 0}));
}

Expr pow(const Expr& base, unsigned exponent)
{
    return Expr(std::make_shared<const Expr::Node>(
        Expr::Node{Expr::Kind::power, 0, {}, base.node_, nullptr, exponent}));
}

namespace {

Rational eval_node(const Expr::Node& n, const std::map<std::string, Rational>& env)
{
    switch (n.kind) {
    case Expr::Kind::constant:
        return n.value;
    case Expr::Kind::variable: {
        auto it = env.find(n.name);
        if (it == env.end())
            throw std::domain_error("no value for variable '" + n.name + "'");
        return it->second;
    }
    case Expr::Kind::sum:
        return eval_node(*n.left, env) + eval_node(*n.right, env);
    case Expr::Kind::difference:
        return eval_node(*n.left, env) - eval_node(*n.right, env);
    case Expr::Kind::product:
        return eval_node(*n.left, env) * eval_node(*n.right, env);
    case Expr::Kind::power:
        return pow(eval_node(*n.left, env), static_cast<long>(n.exponent));
    }
    throw std::logic_error("bad expression node");
}

void collect_vars(const Expr::Node& n, std::set<std::string>& out)
{
    if (n.kind == Expr::Kind::variable)
        out.insert(n.name);
    if (n.left)
        collect_vars(*n.left, out);
    if (n.right)
        collect_vars(*n.right, out);
}

Polynomial normalize_node(const Expr::Node& n, const std::vector<std::string>& vars)
{
    switch (n.kind) {
    case Expr::Kind::constant:
        return Polynomial::constant(vars, n.value);
    case Expr::Kind::variable:
        return Polynomial::variable(vars, n.name);
    case Expr::Kind::sum:
        return normalize_node(*n.left, vars) + normalize_node(*n.right, vars);
    case Expr::Kind::difference:
        return normalize_node(*n.left, vars) - normalize_node(*n.right, vars);
    case Expr::Kind::product:
        return normalize_node(*n.left, vars) * normalize_node(*n.right, vars);
    case Expr::Kind::power:
        return pow(normalize_node(*n.left, vars), n.exponent);
    }
    throw std::logic_error("bad expression node");
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expr run()
    {
        Expr e = expr();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    Expr expr()
    {
        Expr e = term();
        for (;;) {
            skip_space();
            if (accept('+'))
                e = e + term();
            else if (accept('-'))
                e = e - term();
            else
                return e;
        }
    }

    Expr term()
    {
        Expr e = unary();
        for (;;) {
            skip_space();
            if (accept('*')) {
                e = e * unary();
            } else if (accept('/')) {
                Expr d = unary();
                if (!d.variables().empty())
                    fail("division is only allowed by a constant");
                Rational c = d.evaluate({});
                if (c.is_zero())
                    fail("division by zero");
                e = e * Expr::constant(c.reciprocal());
            } else {
                return e;
            }
        }
    }

    Expr unary()
    {
        skip_space();
        if (accept('-'))
            return Expr::constant(-1) * unary();
        if (accept('+'))
            return unary();
        return power();
    }

    Expr power()
    {
        Expr base = primary();
        skip_space();
        if (accept('^')) {
            skip_space();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("exponent must be a non-negative integer literal");
            return pow(base, static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
        }
        return base;
    }

    Expr primary()
    {
        skip_space();
        if (pos_ >= text_.size())
            fail("unexpected end of expression");
        char ch = text_[pos_];
        if (accept('(')) {
            Expr e = expr();
            skip_space();
            if (!accept(')'))
                fail("missing ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
                ++pos_;
            return Expr::constant(Rational::parse(text_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            return Expr::variable(std::string(text_.substr(start, pos_ - start)));
        }
        fail("unexpected '" + std::string(1, ch) + "'");
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& why) const
    {
        throw std::invalid_argument("expression parse error at " + std::to_string(pos_) + ": " + why + " in \"" +
                                    std::string(text_) + "\"");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// 0, 1, -1, 2, -2, ..., limit, -limit
std::vector<Rational> witness_axis(long limit)
{
    std::vector<Rational> axis{0};
    for (long v = 1; v <= limit; ++v) {
        axis.emplace_back(v);
        axis.emplace_back(-v);
    }
    return axis;
}

std::optional<Witness> search_witness(const Expr& lhs, const Expr& rhs, const std::vector<std::string>& vars,
                                      long limit)
{
    const std::vector<Rational> axis = witness_axis(limit);
    std::vector<std::size_t> idx(vars.size(), 0);
    for (;;) {
        std::map<std::string, Rational> env;
        for (std::size_t i = 0; i < vars.size(); ++i)
            env[vars[i]] = axis[idx[i]];
        Rational l = lhs.evaluate(env);
        Rational r = rhs.evaluate(env);
        if (l != r) {
            Witness w;
            for (std::size_t i = 0; i < vars.size(); ++i)
                w.params.push_back(param(vars[i], axis[idx[i]]));
            w.lhs = l.str();
            w.rhs = r.str();
            return w;
        }
        // odometer, last coordinate fastest
        std::size_t k = vars.size();
        while (k > 0) {
            --k;
            if (++idx[k] < axis.size())
                break;
            idx[k] = 0;
            if (k == 0)
                return std::nullopt;
        }
        if (vars.empty())
            return std::nullopt;
    }
}

} // namespace

Expr Expr::parse(std::string_view text) { return Parser(text).run(); }

Rational Expr::evaluate(const std::map<std::string, Rational>& env) const { return eval_node(*node_, env); }

std::vector<std::string> Expr::variables() const
{
    std::set<std::string> s;
    collect_vars(*node_, s);
    return {s.begin(), s.end()};
}

Polynomial poly_normalize(const Expr& e, const std::vector<std::string>& vars)
{
    for (const auto& v : e.variables())
        if (std::find(vars.begin(), vars.end(), v) == vars.end())
            throw std::domain_error("undeclared variable '" + v + "'");
    std::set<std::string> unique(vars.begin(), vars.end());
    if (unique.size() != vars.size() || unique.count(""))
        throw std::domain_error("variable list must hold distinct nonempty names");
    return normalize_node(*e.node_, vars);
}

IdentityReport identity_check(const Expr& lhs, const Expr& rhs, const std::vector<std::string>& vars,
                              std::string suite)
{
    Polynomial pl = poly_normalize(lhs, vars);
    Polynomial pr = poly_normalize(rhs, vars);
    const bool equal = pl == pr;
    IdentityReport report = make_report(std::move(suite), {}, pl, pr);
    if (!equal) {
        auto w = search_witness(lhs, rhs, vars, 3);
        if (!w) {
            long degree = static_cast<long>(std::max(pl.total_degree(), pr.total_degree())) + 1;
            w = search_witness(lhs, rhs, vars, degree);
        }
        if (!w)
            throw std::logic_error("normal forms differ but no witness point was found");
        report.witness = std::move(w);
    }
    return report;
}

const std::vector<AlgebraIdentity>& algebra_identities()
{
    static const std::vector<AlgebraIdentity> table{
        {"alg.distrib", "(b+c)*a", "b*a + c*a", {"a", "b", "c"}},
        {"alg.every_term", "(a+b)*(c+d)", "a*c + a*d + b*c + b*d", {"a", "b", "c", "d"}},
        {"alg.sq_sum", "(a+b)^2", "a^2 + 2*a*b + b^2", {"a", "b"}},
        {"alg.distrib_diff", "a*(b-c)", "a*b - a*c", {"a", "b", "c"}},
        {"alg.diff_sum", "(a-b)*(c+d)", "a*c + a*d - b*c - b*d", {"a", "b", "c", "d"}},
        {"alg.diff_diff", "(a-b)*(c-d)", "a*c - a*d - b*c + b*d", {"a", "b", "c", "d"}},
        {"alg.sq_diff", "(a-b)^2", "a^2 - 2*a*b + b^2", {"a", "b"}},
        {"alg.cube_sum_expand", "(a+b)^3", "a^3 + 3*a^2*b + 3*a*b^2 + b^3", {"a", "b"}},
    };
    return table;
}

IdentityReport pythagoras_rearrangement_check()
{
    const std::vector<std::string> vars{"a", "b", "c"};
    Expr lhs = Expr::parse("(a+b)^2/2 - (a*b + c^2/2)");
    Expr rhs = Expr::parse("(a^2 + b^2 - c^2)/2");
    IdentityReport r = identity_check(lhs, rhs, vars, "geo.pythagoras");
    r.note = "trapezoid area whole vs. three triangles; zero difference forces a^2+b^2=c^2";
    return r;
}

TrapezoidAreas pythagoras_trapezoid_areas(const Rational& a, const Rational& b, const Rational& c)
{
    return {pow(a + b, 2) / 2, a * b + pow(c, 2) / 2};
}

IdentityReport pythagoras_printed_check(const Rational& a, const Rational& b, const Rational& c)
{
    if (pow(a, 2) + pow(b, 2) != pow(c, 2))
        throw std::domain_error("printed trapezoid equation is checked on a right triangle only");
    IdentityReport r = make_report("geo.pythagoras_printed", {param("a", a), param("b", b), param("c", c)},
                                   pow(a + b, 2), (2 * a * b + pow(c, 2)) / 2);
    r.expectation = Expectation::fails_as_printed;
    r.note = "(a+b)^2 = (2ab+c^2)/2 as printed lacks /2 on the left";
    return r;
}

CauchySchwarzReport cauchy_schwarz_check(const Rational& a1, const Rational& a2, const Rational& b1,
                                         const Rational& b2)
{
    Rational dot = a1 * b1 + a2 * b2;
    Rational norms = (a1 * a1 + a2 * a2) * (b1 * b1 + b2 * b2);
    CauchySchwarzReport out;
    out.report = make_report("geo.cauchy_schwarz",
                             {param("a1", a1), param("a2", a2), param("b1", b1), param("b2", b2)}, dot * dot,
                             norms, Relation::less_equal);
    out.equality = dot * dot == norms;
    return out;
}

Rational mixture_concentration(const Rational& m1, const Rational& m2, const Rational& c2, const Rational& c_mix)
{
    if (m1.is_zero())
        throw std::domain_error("degenerate mixture equation: first mass is zero");
    if (m1.sign() < 0 || m2.sign() < 0)
        throw std::domain_error("mixture masses must be non-negative");
    // solute counted two ways: m1*x/100 + m2*c2/100 = (m1+m2)*c_mix/100
    return ((m1 + m2) * c_mix - m2 * c2) / m1;
}

IdentityReport mixture_balance_check(const Rational& m1, const Rational& m2, const Rational& c2,
                                     const Rational& c_mix, const Rational& x)
{
    return make_report("word.mixture",
                       {param("m1", m1), param("m2", m2), param("c2", c2), param("c_mix", c_mix), param("x", x)},
                       m1 * x / 100 + m2 * c2 / 100, (m1 + m2) * c_mix / 100);
}

IdentityReport incircle_tangent_check(const Rational& a, const Rational& b, const Rational& c, const Rational& ce)
{
    if (!(a < b + c && b < a + c && c < a + b) || a.sign() <= 0 || b.sign() <= 0 || c.sign() <= 0)
        throw std::domain_error("sides violate the strict triangle inequality");
    if (ce.sign() <= 0)
        throw std::domain_error("CE must be positive");
    Rational s = (a + b + c) / 2;
    Rational ae = s - a;
    Rational eb = s - b;
    Rational de = (ae + ce - b) / 2;
    Rational fe = (eb + ce - a) / 2;
    return make_report("geo.incircle", {param("a", a), param("b", b), param("c", c), param("ce", ce)}, de, fe);
}

IdentityReport incircle_tangent_symbolic()
{
    const std::vector<std::string> vars{"a", "b", "c", "ce"};
    // s = (a+b+c)/2; DE = ((s-a) + ce - b)/2, FE = ((s-b) + ce - a)/2
    Expr de = Expr::parse("(((a+b+c)/2 - a) + ce - b)/2");
    Expr fe = Expr::parse("(((a+b+c)/2 - b) + ce - a)/2");
    return identity_check(de, fe, vars, "geo.incircle_symbolic");
}

} // namespace twoside
