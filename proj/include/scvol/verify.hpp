/**
 * @file verify.hpp
 * @brief Named self-check suites over the library's cross-route identities,
 *        exposed so the CLI can run them and report per-property results.
 */
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace scvol {

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail;  // empty on pass; first counterexample on failure
};

/// Suite names: identities, convolution, signs, volumes, integrality.
std::vector<std::string> verify_suite_names();

/// Runs one suite, or every suite for "all"; throws on unknown names.
std::vector<CheckResult> verify_suite(std::string_view name);

}  // namespace scvol
