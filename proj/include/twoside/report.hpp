#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "twoside/polynomial.hpp"
#include "twoside/rational.hpp"

namespace twoside {

struct Param {
    std::string name;
    std::string value;

    friend bool operator==(const Param&, const Param&) = default;
};

inline Param param(std::string name, const Rational& v) { return {std::move(name), v.str()}; }
inline Param param(std::string name, long v) { return {std::move(name), std::to_string(v)}; }
inline Param param(std::string name, std::string v) { return {std::move(name), std::move(v)}; }

using ReportValue = std::variant<Rational, Polynomial>;

std::string render(const ReportValue& v);

/// How lhs and rhs are compared.
enum class Relation { equal, less_equal, less };

/// Whether the checked statement is expected to hold. Misprinted formulas
/// ship as `fails_as_printed` so that a failure is the predicted outcome.
enum class Expectation { holds, fails_as_printed };

enum class Status { pass, fail, expected_fail, warn };

std::string_view status_name(Status s);
std::string_view relation_symbol(Relation r);

struct Witness {
    std::vector<Param> params;
    std::string lhs;
    std::string rhs;
};

/// Outcome of one two-way computation.
///
/// `pass` is true iff relation(lhs, rhs) holds, and a witness is present
/// iff `pass` is false. Use make_report() to keep both invariants.
struct IdentityReport {
    std::string suite;
    std::vector<Param> params;
    ReportValue lhs;
    ReportValue rhs;
    Relation relation = Relation::equal;
    bool pass = false;
    std::optional<Witness> witness;
    Expectation expectation = Expectation::holds;
    /// A failed soft check reports WARN instead of FAIL.
    bool soft = false;
    std::string note;

    Status status() const;
    /// "n=5, k=2"; "-" when there are no params.
    std::string case_label() const;
};

/// Decides pass from the relation; on failure the witness defaults to the params.
IdentityReport make_report(std::string suite, std::vector<Param> params, ReportValue lhs, ReportValue rhs,
                           Relation relation = Relation::equal);

bool relation_holds(const ReportValue& lhs, const ReportValue& rhs, Relation relation);

} // namespace twoside
