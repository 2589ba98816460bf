#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "twoside/report.hpp"

namespace twoside {

struct SuiteParams {
    long max_n = 200;
    std::uint64_t seed = 42;
    std::optional<long> trials;  ///< suite-specific default when unset
};

struct SuiteEntry {
    std::string id;
    std::string tag;          ///< topic, e.g. "algebra", "binomials"
    std::string description;
    std::function<std::vector<IdentityReport>(const SuiteParams&)> run;
};

/// Static table in display order.
const std::vector<SuiteEntry>& suite_registry();

/// Resolves "id", "prefix.*" or "all"; empty when nothing matches.
std::vector<const SuiteEntry*> select_suites(const std::string& selector);

} // namespace twoside
