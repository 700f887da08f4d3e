#ifndef POWERSUM_TOOLS_VERIFY_SUITE_HPP
#define POWERSUM_TOOLS_VERIFY_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "powersum/factor.hpp"
#include "powersum/top_down.hpp"

namespace powersum::tools {

struct SuiteResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<std::string> first_failures; // at most a few, for the report
};

struct VerifyOptions {
    std::uint64_t seed = 20240601;
    std::size_t samples = 1000;
    unsigned threads = 1;
    int factor_cap = default_factor_degree_cap;
    std::size_t budget_bits = default_coefficient_budget_bits;
};

/// Height properties, sum formula, height/height_fast agreement,
/// valuation additivity and certified-vs-naive counting on the built-in systems.
std::vector<SuiteResult> run_verify(const VerifyOptions& opts);

} // namespace powersum::tools

#endif
