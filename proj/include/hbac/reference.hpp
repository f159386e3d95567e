/** \file
 * Published reference values the benchmarks reproduce: the 5/7/9/11-spin
 * cooling comparisons, the qubit-purification resource tables, the
 * fixed-target resource tables, the linear-regime spot factors, and the
 * finite-relaxation-ratio biases. Biases are in units of eps0 unless a row
 * is an absolute polarization (the purification tables).
 */
#pragma once

#include <vector>

#include "hbac/algorithms.hpp"

namespace hbac::reference {

struct CoolingRow {
    Family family;
    int m;             // 0 when not applicable
    double bias;       // published MSB bias, units of eps0
    long long resets;  // published run-time in reset steps
};

struct PpaPair {
    int n;
    long long resets;
    double bias_units;  // published MSB bias at that reset count
};

/// Rows of the n-spin comparison tables (n = 5, 7, 9, 11), paper order.
const std::vector<CoolingRow>& cooling_table(int n);
/// Published PPA (reset count -> bias) snapshots for the same tables.
const std::vector<PpaPair>& ppa_pairs(int n);

struct PurifyRow {
    Family family;
    int m;
    double eps0;
    int spins;
    long long resets;
    double bias;  // absolute polarization
};

/// Resources to purify the MSB to >= 60 % polarization (eps0 = 0.01 and 0.1).
const std::vector<PurifyRow>& purify60_rows();
/// Resources to reach >= 0.9999 polarization from eps0 = 0.1.
const std::vector<PurifyRow>& purify9999_rows();

struct TargetRow {
    Family family;  // Family::Pac2 with m=0 marks the PPA row; see is_ppa
    int m;
    bool is_ppa;
    int spins;
    long long resets;
};

/// Rows of the fixed-target tables; target in {3, 7, 11, 15} units of eps0.
const std::vector<TargetRow>& target_rows(int target_units);

struct SpotFactor {
    int m, j;
    double factor;  // published (2 - 2^-m)^j value
};
const std::vector<SpotFactor>& mpac_spot_factors();

struct RelaxRow {
    double ratio_R;
    double tau;
    Scope scope;
    double bias_units;  // published final MSB bias, units of eps0
};
/// 2PAC on 7 spins under finite relaxation ratios.
const std::vector<RelaxRow>& relaxation_rows();

}  // namespace hbac::reference
