/** \file
 * Benchmark front end: reproduces the published comparison tables, runs the
 * fixed-target resource searches, and emits the cooling-curve datasets, in
 * CSV or JSON, with every row annotated with the published value and the
 * relative deviation.
 */
#pragma once

#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "hbac/algorithms.hpp"
#include "hbac/ppa.hpp"
#include "hbac/reference.hpp"

namespace hbac {

enum class TableId { T1, T2, T3, T4, T5, T6, T7, T8, T9, T10, F1, F2, F3, F4, F5 };

/// Parses "T1".."T10", "F1".."F5" (case-insensitive); throws on anything else.
TableId parse_table_id(const std::string& text);
std::string to_string(TableId id);

struct BenchRow {
    std::string algorithm;
    int n = 0;
    long long resets = 0;
    double bias = 0.0;
    // published annotations; NaN / -1 when a column does not apply
    double paper_value = std::numeric_limits<double>::quiet_NaN();
    double rel_dev = std::numeric_limits<double>::quiet_NaN();
    long long paper_resets = -1;
    int paper_n = -1;
    std::string note;
};

struct CurvePoint {
    std::string series;
    int j = 0;  // purification level
    int n = 0;  // spins involved (2j+1)
    double value = 0.0;
};

struct Dataset {
    std::string id;
    std::string title;
    std::string convention;  // PPA run metadata, when applicable
    std::vector<BenchRow> rows;     // tables
    std::vector<CurvePoint> curve;  // figures
    bool is_curve() const { return !curve.empty(); }
};

Dataset reproduce_table(TableId id);

struct SearchRequest {
    Family family = Family::MPac;
    int m = 1;
    double eps0 = 1e-5;
    double target = 0.0;
    // true: linear regime, target in units of eps0; false: absolute
    // polarization target, exact regime
    bool target_in_units = true;
    int max_spins = 40;
};

struct SearchResult {
    bool reachable = false;
    int n = 0;
    long long resets = 0;
    double bias = 0.0;  // achieved (units of eps0 when target_in_units)
};

/// Smallest admissible spin count whose MSB bias meets the target, plus the
/// full-string run-time at that size. Throws if target <= eps0 (absolute)
/// or <= 1 (units).
SearchResult search_resources(const SearchRequest& req);

/// PPA resource search: smallest n whose asymptote covers the target, and
/// the number of SORT+RESET steps until the MSB bias first reaches it.
SearchResult search_ppa(double target_units, double eps0 = 1e-5,
                        int max_spins = DiagonalState::kMaxSpins);

/// (j, eps_{2j+1}) pairs for the cooling curves; family is MPac (with m) or
/// InftyPac; regime Linear emits factors in units of eps0.
std::vector<CurvePoint> emit_curve(Family family, int m, double eps0, int j_max,
                                   Regime regime);

void write_csv(const Dataset& data, std::ostream& out);
void write_json(const Dataset& data, std::ostream& out);

}  // namespace hbac
