#include "hbac/reference.hpp"

#include <stdexcept>

namespace hbac::reference {

namespace {
using F = Family;
}

const std::vector<CoolingRow>& cooling_table(int n) {
    static const std::vector<CoolingRow> t5 = {
        {F::DeltaFib, 0, 3.29, 120},  {F::Pac2, 1, 2.25, 17},
        {F::Pac3, 0, 2.75, 29},       {F::MPac, 2, 3.06, 37},
        {F::MPac, 4, 3.75, 101},      {F::MPac, 6, 3.94, 197},
        {F::MFib, 3, 3.64, 128},      {F::MFib, 4, 4.28, 250},
    };
    static const std::vector<CoolingRow> t7 = {
        {F::DeltaFib, 0, 8.27, 5040}, {F::Pac2, 1, 3.38, 53},
        {F::Pac3, 0, 5.13, 169},      {F::MPac, 2, 5.36, 187},
        {F::MPac, 4, 7.27, 911},      {F::MPac, 6, 7.81, 2563},
        {F::MFib, 3, 7.81, 2048},     {F::MFib, 4, 10.15, 6250},
    };
    static const std::vector<CoolingRow> t9 = {
        {F::DeltaFib, 0, 21.5, 362880}, {F::Pac2, 1, 5.06, 161},
        {F::Pac3, 0, 9.56, 985},        {F::MPac, 2, 9.38, 937},
        {F::MPac, 4, 14.1, 8201},       {F::MPac, 6, 15.5, 33321},
        {F::MFib, 3, 16.9, 32768},      {F::MFib, 4, 24.2, 156250},
    };
    static const std::vector<CoolingRow> t11 = {
        {F::DeltaFib, 0, 56.0, 39916800}, {F::Pac2, 1, 7.59, 485},
        {F::Pac3, 0, 17.8, 5741},         {F::MPac, 2, 16.4, 4687},
        {F::MPac, 4, 27.3, 73811},        {F::MPac, 6, 30.8, 433175},
        {F::MFib, 3, 36.4, 524288},       {F::MFib, 4, 57.7, 3906250},
    };
    switch (n) {
        case 5: return t5;
        case 7: return t7;
        case 9: return t9;
        case 11: return t11;
    }
    throw std::invalid_argument("cooling_table: n in {5,7,9,11}");
}

const std::vector<PpaPair>& ppa_pairs(int n) {
    static const std::vector<PpaPair> p5 = {{5, 28, 4.03}, {5, 99, 7.00}};
    static const std::vector<PpaPair> p7 = {{7, 104, 8.02}, {7, 428, 16.0}};
    static const std::vector<PpaPair> p9 = {{9, 1639, 32.0}, {9, 6836, 64.0}};
    static const std::vector<PpaPair> p11 = {{11, 6456, 64.0},
                                             {11, 109323, 256.0}};
    switch (n) {
        case 5: return p5;
        case 7: return p7;
        case 9: return p9;
        case 11: return p11;
    }
    throw std::invalid_argument("ppa_pairs: n in {5,7,9,11}");
}

const std::vector<PurifyRow>& purify60_rows() {
    static const std::vector<PurifyRow> rows = {
        {F::MPac, 1, 0.01, 23, 354293, 0.72},
        {F::MPac, 2, 0.01, 17, 585937, 0.72},
        {F::MPac, 4, 0.01, 15, 5978711, 0.78},
        // run-time as printed; it disagrees with the mFib closed form
        // 2*(m+1)^(n-2) = 8388608 for m = 3, n = 13
        {F::MFib, 3, 0.01, 13, 97656250, 0.72},
        {F::MFib, 4, 0.01, 12, 19531250, 0.72},
        {F::MPac, 1, 0.1, 11, 485, 0.66},
        {F::MPac, 2, 0.1, 9, 937, 0.76},
        {F::MPac, 4, 0.1, 7, 911, 0.63},
        {F::MFib, 3, 0.1, 7, 2048, 0.67},
        {F::MFib, 4, 0.1, 7, 6250, 0.78},
    };
    return rows;
}

const std::vector<PurifyRow>& purify9999_rows() {
    static const std::vector<PurifyRow> rows = {
        {F::MPac, 1, 0.1, 19, 39365, 0.999996},
        {F::MPac, 2, 0.1, 15, 117187, 0.999999},
        {F::MPac, 4, 0.1, 13, 664301, 0.999984},
        {F::MFib, 3, 0.1, 11, 524288, 0.999877},
        {F::MFib, 4, 0.1, 11, 3906250, 0.999999},
    };
    return rows;
}

const std::vector<TargetRow>& target_rows(int target_units) {
    static const std::vector<TargetRow> t3 = {
        {F::DeltaFib, 0, false, 5, 120}, {F::Pac2, 1, false, 7, 53},
        {F::Pac3, 0, false, 6, 70},      {F::Pac2, 0, true, 4, 16},
        {F::MPac, 2, false, 5, 37},      {F::MFib, 3, false, 5, 128},
    };
    static const std::vector<TargetRow> t7 = {
        {F::DeltaFib, 0, false, 7, 5040}, {F::Pac2, 1, false, 11, 485},
        {F::Pac3, 0, false, 8, 408},      {F::Pac2, 0, true, 5, 97},
        {F::MPac, 2, false, 9, 937},      {F::MPac, 4, false, 7, 911},
        {F::MPac, 6, false, 7, 2563},     {F::MFib, 3, false, 7, 2048},
        {F::MFib, 4, false, 7, 6250},
    };
    static const std::vector<TargetRow> t11 = {
        {F::DeltaFib, 0, false, 8, 40320}, {F::Pac2, 1, false, 13, 1457},
        {F::Pac3, 0, false, 10, 2378},     {F::Pac2, 0, true, 6, 204},
        {F::MPac, 2, false, 11, 4687},     {F::MPac, 4, false, 9, 8201},
        {F::MPac, 6, false, 9, 33321},     {F::MFib, 3, false, 8, 8192},
        {F::MFib, 4, false, 8, 31250},
    };
    static const std::vector<TargetRow> t15 = {
        {F::DeltaFib, 0, false, 9, 362880}, {F::Pac2, 1, false, 15, 4373},
        {F::Pac3, 0, false, 11, 5741},      {F::Pac2, 0, true, 6, 529},
        {F::MPac, 2, false, 11, 4687},      {F::MPac, 4, false, 11, 73811},
        {F::MPac, 6, false, 9, 33321},      {F::MFib, 3, false, 9, 32768},
        {F::MFib, 4, false, 8, 31250},
    };
    switch (target_units) {
        case 3: return t3;
        case 7: return t7;
        case 11: return t11;
        case 15: return t15;
    }
    throw std::invalid_argument("target_rows: target in {3,7,11,15}");
}

const std::vector<SpotFactor>& mpac_spot_factors() {
    static const std::vector<SpotFactor> rows = {
        {4, 5, 27.3}, {4, 10, 745.0}, {7, 10, 985.0}};
    return rows;
}

const std::vector<RelaxRow>& relaxation_rows() {
    static const std::vector<RelaxRow> rows = {
        {1e4, 5.0, Scope::FullString, 5.11},
        {1e3, 5.0, Scope::FullString, 3.63},
        {1e2, 5.0, Scope::FullString, 1.07},
        {1e4, 5.0, Scope::MsbOnly, 5.24},
        {1e3, 5.0, Scope::MsbOnly, 4.58},
        {1e2, 5.0, Scope::MsbOnly, 2.56},
        {1e2, 1.8, Scope::MsbOnly, 3.05},
        {1e2, 0.91, Scope::FullString, 1.97},
    };
    return rows;
}

}  // namespace hbac::reference
