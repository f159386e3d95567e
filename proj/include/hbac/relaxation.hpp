/** \file
 * Finite relaxation-ratio extension of the linear bias engine. During each
 * reset interval of duration tau (in reset-spin T1 units) every spin relaxes
 * exponentially toward the bath bias: the reset spin with rate 1 and the
 * computation spins with rate 1/R, R = T1(comp)/T1(reset). PT and COMP3 are
 * instantaneous; only reset intervals advance time. In the R -> infinity,
 * tau -> infinity limit this recovers the ideal engine.
 */
#pragma once

#include "hbac/algorithms.hpp"

namespace hbac {

struct RelaxConfig {
    double ratio_R = 0.0;        // T1(comp) / T1(reset), >= 1
    double reset_duration = 0.0; // tau, in units of T1(reset), > 0
};

struct RelaxedReport {
    std::vector<double> final_biases_units;  // units of eps0
    long long reset_count = 0;
    double msb_bias_units() const { return final_biases_units.back(); }
};

/// Runs the compiled schedule with finite-ratio resets, starting from
/// equilibrium. Linear regime, biases in units of eps0.
RelaxedReport run_schedule_relaxed(const AlgorithmSpec& spec,
                                   const RelaxConfig& cfg);

}  // namespace hbac
