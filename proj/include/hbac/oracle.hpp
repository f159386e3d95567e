/** \file
 * Exact diagonal-state simulator: the full 2^n probability vector over
 * computational basis strings. Ground truth for the bias-vector engine and
 * the substrate the partner-pairing algorithm runs on.
 *
 * Bit convention (fixed project-wide): spin k occupies bit k-1 of the basis
 * index, so spin 1 (the reset spin) is the least significant bit and spin n
 * (the MSB) the most significant. Bit value 0 is |up> = |0>.
 */
#pragma once

#include <span>
#include <vector>

#include "hbac/core.hpp"

namespace hbac {

class DiagonalState {
  public:
    /// Dense-vector guard: 2^24 doubles = 128 MiB.
    static constexpr int kMaxSpins = 24;

    /// Product state with the given marginal biases (index 0 = spin 1).
    static DiagonalState from_product(std::span<const double> biases);
    static DiagonalState from_product(std::initializer_list<double> biases) {
        return from_product(std::span<const double>(biases.begin(),
                                                    biases.size()));
    }

    int spin_count() const { return n_; }
    const std::vector<double>& probabilities() const { return probs_; }

    /// P(spin k = |0>) - P(spin k = |1>).
    double marginal_bias(int spin) const;
    std::vector<double> marginal_biases() const;
    double probability_sum() const;

    /// Exchanges |100> <-> |011> on (c,b,a) for every setting of the other
    /// spins; the six remaining local patterns are untouched.
    void apply_comp3(int c, int b, int a);
    /// Swaps the states of spins s and t (basis-index bit swap).
    void apply_pt(int s, int t);
    /// Discards spin k's state and re-draws it from the heat bath at eps0:
    /// state <- (marginal over the rest) (x) equilibrium(k). All other
    /// marginals -- and their correlations -- are preserved exactly.
    void apply_reset(int spin, double eps0);

    /// Reorders the probabilities into non-increasing order by basis index
    /// (index 0 largest). The PPA's SORT step.
    void sort_descending();

  private:
    DiagonalState(int n, std::vector<double> probs)
        : n_(n), probs_(std::move(probs)) {}
    int check_spin(int spin) const;

    int n_ = 0;
    std::vector<double> probs_;
};

/// Applies the schedule exactly on the diagonal state (RESET thermalizes at
/// eps0) and reports the final marginal biases and the reset count.
RunReport run_schedule_oracle(DiagonalState state, const Schedule& sched,
                              double eps0);

}  // namespace hbac
