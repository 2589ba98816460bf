#pragma once

#include <string>

#include <json.hpp>

#include "twoside/bracket.hpp"
#include "twoside/report.hpp"

namespace twoside {

using Json = nlohmann::ordered_json;

/// Exact rational as a "p/q" string; never a JSON number.
Json rational_json(const Rational& r);

/// {"lo", "hi", "width"} exact, plus decimal renderings for reading.
Json bracket_json(const Bracket& b, int digits = 15);

/// suite, case, params, lhs, rhs, relation, status, witness, note.
Json report_json(const IdentityReport& r);

} // namespace twoside
