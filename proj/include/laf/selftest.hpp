#ifndef LAF_SELFTEST_HPP
#define LAF_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace laf {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Criteria 1..11 (deterministic given the seed).
std::vector<CriterionResult> run_acceptance_core(std::uint64_t seed);

/// Criteria 1..12; criterion 12 re-runs the core battery and compares the
/// serialized results byte for byte.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

nlohmann::json criteria_to_json(const std::vector<CriterionResult>& results);

} // namespace laf

#endif
