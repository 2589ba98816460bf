#include "twoside/report.hpp"

#include <stdexcept>

namespace twoside {

std::string render(const ReportValue& v)
{
    if (const auto* r = std::get_if<Rational>(&v))
        return r->str();
    return std::get<Polynomial>(v).str();
}

std::string_view status_name(Status s)
{
    switch (s) {
    case Status::pass:
        return "PASS";
    case Status::fail:
        return "FAIL";
    case Status::expected_fail:
        return "EXPECTED-FAIL";
    case Status::warn:
        return "WARN";
    }
    return "FAIL";
}

std::string_view relation_symbol(Relation r)
{
    switch (r) {
    case Relation::equal:
        return "=";
    case Relation::less_equal:
        return "<=";
    case Relation::less:
        return "<";
    }
    return "?";
}

Status IdentityReport::status() const
{
    if (expectation == Expectation::fails_as_printed)
        return pass ? Status::fail : Status::expected_fail;
    if (!pass && soft)
        return Status::warn;
    return pass ? Status::pass : Status::fail;
}

std::string IdentityReport::case_label() const
{
    if (params.empty())
        return "-";
    std::string out;
    for (const auto& p : params) {
        if (!out.empty())
            out += ", ";
        out += p.name + "=" + p.value;
    }
    return out;
}

bool relation_holds(const ReportValue& lhs, const ReportValue& rhs, Relation relation)
{
    if (relation == Relation::equal) {
        if (lhs.index() != rhs.index())
            return false;
        if (const auto* a = std::get_if<Rational>(&lhs))
            return *a == std::get<Rational>(rhs);
        return std::get<Polynomial>(lhs) == std::get<Polynomial>(rhs);
    }
    const auto* a = std::get_if<Rational>(&lhs);
    const auto* b = std::get_if<Rational>(&rhs);
    if (a == nullptr || b == nullptr)
        throw std::invalid_argument("order relations need rational operands");
    return relation == Relation::less ? *a < *b : *a <= *b;
}

IdentityReport make_report(std::string suite, std::vector<Param> params, ReportValue lhs, ReportValue rhs,
                           Relation relation)
{
    IdentityReport r;
    r.suite = std::move(suite);
    r.params = std::move(params);
    r.relation = relation;
    r.pass = relation_holds(lhs, rhs, relation);
    if (!r.pass)
        r.witness = Witness{r.params, render(lhs), render(rhs)};
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

} // namespace twoside
