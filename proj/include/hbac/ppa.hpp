/** \file
 * Partner-pairing algorithm on the diagonal-state simulator: alternate a
 * descending SORT of the 2^n probabilities with a RESET of the reset spin.
 *
 * Calibrated run convention (reproduces the published (reset count -> bias)
 * pairs, e.g. n=5: 28 -> 4.03, 99 -> 7.00):
 *   - start from the all-spins-at-bias-0 product state,
 *   - each step is SORT then RESET and counts one reset,
 *   - the MSB bias is read after the step.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hbac/oracle.hpp"

namespace hbac {

struct PpaStop {
    enum class Kind { AfterResets, TargetMsbBias, Converged };
    Kind kind = Kind::Converged;
    long long resets = 0;     // AfterResets
    double target_units = 0;  // TargetMsbBias, in units of eps0
    double tol = 1e-9;        // Converged: relative MSB change per step...

    static PpaStop after_resets(long long count) {
        return {Kind::AfterResets, count, 0.0, 0.0};
    }
    static PpaStop target_msb_bias(double units) {
        return {Kind::TargetMsbBias, 0, units, 0.0};
    }
    static PpaStop converged(double tol = 1e-9) {
        return {Kind::Converged, 0, 0.0, tol};
    }
};

struct PpaConfig {
    int n = 0;
    double eps0 = 0.0;
    PpaStop stop;
    // ...sustained for this many consecutive steps (single-step change can
    // be exactly zero on early plateaus).
    int converge_window = 32;
    long long max_steps = 50'000'000;
    bool record_msb_trace = false;
    // Calibrated default; equilibrium start available for experiments.
    bool start_at_equilibrium = false;
};

struct PpaResult {
    double msb_bias = 0.0;        // absolute
    double msb_bias_units = 0.0;  // in units of eps0
    long long resets = 0;
    bool reached = true;  // false: target unreachable / max_steps hit
    std::vector<double> msb_trace_units;  // filled when record_msb_trace
    std::string convention;               // run metadata
};

/// One SORT + RESET iteration on an explicit state.
void ppa_step(DiagonalState& state, double eps0);

PpaResult run_ppa(const PpaConfig& cfg);

}  // namespace hbac
