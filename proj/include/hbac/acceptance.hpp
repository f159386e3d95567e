/** \file
 * Acceptance checks: one entry per criterion, each printing a PASS/FAIL line
 * with measured-vs-published detail. The CLI `check` subcommand and the
 * acceptance test binary both run these.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hbac::acceptance {

struct CriterionResult {
    int id = 0;
    bool pass = false;
    std::string summary;
};

inline constexpr int kCriterionCount = 10;

/// Runs criterion `id` (1..10).
CriterionResult run_criterion(int id);

/// Runs all criteria (or a single one when `only` != 0), printing one line
/// each; returns the number of failures.
int run_and_print(std::ostream& out, int only = 0);

}  // namespace hbac::acceptance
