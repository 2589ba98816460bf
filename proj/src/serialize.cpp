#include "twoside/serialize.hpp"

namespace twoside {

Json rational_json(const Rational& r)
{
    return r.str();
}

Json bracket_json(const Bracket& b, int digits)
{
    Json j;
    j["lo"] = b.lo().str();
    j["hi"] = b.hi().str();
    j["width"] = b.width().str();
    j["lo_decimal"] = b.lo().decimal(digits);
    j["hi_decimal"] = b.hi().decimal(digits);
    j["width_decimal"] = b.width().decimal(digits);
    return j;
}

namespace {

Json params_json(const std::vector<Param>& ps)
{
    Json j = Json::object();
    for (const auto& p : ps)
        j[p.name] = p.value;
    return j;
}

} // namespace

Json report_json(const IdentityReport& r)
{
    Json j;
    j["suite"] = r.suite;
    j["case"] = r.case_label();
    j["params"] = params_json(r.params);
    j["lhs"] = render(r.lhs);
    j["rhs"] = render(r.rhs);
    j["relation"] = std::string(relation_symbol(r.relation));
    j["status"] = std::string(status_name(r.status()));
    if (r.witness) {
        j["witness"] = {{"params", params_json(r.witness->params)}, {"lhs", r.witness->lhs}, {"rhs", r.witness->rhs}};
    } else {
        j["witness"] = nullptr;
    }
    if (!r.note.empty())
        j["note"] = r.note;
    return j;
}

} // namespace twoside
