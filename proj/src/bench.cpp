#include "hbac/bench.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace hbac {

namespace {

std::string fmt15(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

double round15(double v) { return std::stod(fmt15(v)); }

double rel_dev(double got, double published) {
    return std::abs(got - published) / std::abs(published);
}

std::string row_label(Family family, int m) {
    switch (family) {
        case Family::MPac: return std::to_string(m) + "PAC";
        case Family::MFib: return std::to_string(m) + "Fib";
        default: return to_string(family);
    }
}

AlgorithmSpec make_spec(Family family, int n, int m, Scope scope) {
    AlgorithmSpec spec;
    spec.family = family;
    spec.n = n;
    spec.m = m;
    spec.scope = scope;
    return spec;
}

Dataset cooling_dataset(TableId id, int n) {
    Dataset data;
    data.id = to_string(id);
    data.title = "Cooling a " + std::to_string(n) + "-spin system (bias in "
                 "units of eps0, run-time in reset steps)";
    for (const auto& row : reference::cooling_table(n)) {
        const auto spec = make_spec(row.family, n, row.m, Scope::FullString);
        BenchRow out;
        out.algorithm = row_label(row.family, row.m);
        out.n = n;
        out.resets = runtime_formula(spec);
        out.bias = expected_msb_linear(spec);
        out.paper_value = row.bias;
        out.rel_dev = rel_dev(out.bias, row.bias);
        out.paper_resets = row.resets;
        if (reads_compressed_spins(row.family)) {
            // the closed-form series is the published (lower-bound) value;
            // the gate-by-gate run re-enters lower levels warm and sits a
            // fraction of a percent above it
            const auto report = run_algorithm(
                spec, SpinSystem::cold_start(n, 1.0, Regime::Linear));
            out.note = "gate_msb=" + fmt15(report.msb_bias());
        }
        data.rows.push_back(out);
    }
    for (const auto& pair : reference::ppa_pairs(n)) {
        PpaConfig cfg;
        cfg.n = n;
        cfg.eps0 = 1e-5;
        cfg.stop = PpaStop::after_resets(pair.resets);
        const PpaResult res = run_ppa(cfg);
        data.convention = res.convention;
        BenchRow out;
        out.algorithm = "PPA";
        out.n = n;
        out.resets = res.resets;
        out.bias = res.msb_bias_units;
        out.paper_value = pair.bias_units;
        out.rel_dev = rel_dev(out.bias, pair.bias_units);
        out.paper_resets = pair.resets;
        data.rows.push_back(out);
    }
    return data;
}

Dataset purify_dataset(TableId id, double search_threshold,
                       const std::vector<reference::PurifyRow>& rows,
                       const std::string& title) {
    Dataset data;
    data.id = to_string(id);
    data.title = title;
    for (const auto& row : rows) {
        SearchRequest req;
        req.family = row.family;
        req.m = row.m;
        req.eps0 = row.eps0;
        req.target = search_threshold;
        req.target_in_units = false;
        const SearchResult res = search_resources(req);
        BenchRow out;
        out.algorithm = row_label(row.family, row.m);
        out.n = res.n;
        out.resets = res.resets;
        out.bias = res.bias;
        out.paper_value = row.bias;
        out.rel_dev = rel_dev(out.bias, row.bias);
        out.paper_resets = row.resets;
        out.paper_n = row.spins;
        out.note = "eps0=" + fmt15(row.eps0);
        if (reads_compressed_spins(row.family) && res.reachable) {
            // gate-by-gate execution of the same schedule, for comparison
            // with the level recurrence (they agree by construction)
            const auto spec =
                make_spec(row.family, res.n, row.m, Scope::FullString);
            if (runtime_formula(spec) <= 30'000'000) {
                const auto report = run_algorithm(
                    spec, SpinSystem::cold_start(res.n, row.eps0, Regime::Exact));
                out.note += " gate_level_bias=" + fmt15(report.msb_bias());
            }
        }
        data.rows.push_back(out);
    }
    return data;
}

Dataset target_dataset(TableId id, int target_units) {
    Dataset data;
    data.id = to_string(id);
    data.title = "Resources for a target bias of at least " +
                 std::to_string(target_units) + " eps0";
    for (const auto& row : reference::target_rows(target_units)) {
        BenchRow out;
        if (row.is_ppa) {
            const SearchResult res = search_ppa(target_units);
            out.algorithm = "PPA";
            out.n = res.n;
            out.resets = res.resets;
            out.bias = res.bias;
        } else {
            SearchRequest req;
            req.family = row.family;
            req.m = row.m;
            req.eps0 = 1e-5;
            req.target = target_units;
            req.target_in_units = true;
            const SearchResult res = search_resources(req);
            out.algorithm = row_label(row.family, row.m);
            out.n = res.n;
            out.resets = res.resets;
            out.bias = res.bias;
        }
        out.paper_value = static_cast<double>(row.resets);
        out.rel_dev = rel_dev(static_cast<double>(out.resets),
                              static_cast<double>(row.resets));
        out.paper_resets = row.resets;
        out.paper_n = row.spins;
        data.rows.push_back(out);
    }
    return data;
}

Dataset figure_dataset(TableId id) {
    Dataset data;
    data.id = to_string(id);
    const bool linear = id == TableId::F1;
    const bool closeup = id == TableId::F4 || id == TableId::F5;
    const double eps0 = linear ? 1e-5
                        : (id == TableId::F2 || id == TableId::F4) ? 0.01
                                                                   : 0.1;
    data.title = linear ? "mPAC cooling factors (linear regime, units of eps0)"
                        : "mPAC polarization biases, eps0 = " + fmt15(eps0);
    const std::vector<int> ms = closeup ? std::vector<int>{4, 6}
                                        : std::vector<int>{1, 2, 4, 6};
    const int j_max = linear ? 6 : 10;
    for (int m : ms) {
        auto pts = emit_curve(Family::MPac, m, eps0, j_max,
                              linear ? Regime::Linear : Regime::Exact);
        data.curve.insert(data.curve.end(), pts.begin(), pts.end());
    }
    if (!linear) {
        auto pts = emit_curve(Family::InftyPac, 0, eps0, j_max, Regime::Exact);
        data.curve.insert(data.curve.end(), pts.begin(), pts.end());
    }
    return data;
}

}  // namespace

TableId parse_table_id(const std::string& text) {
    std::string up;
    for (char c : text) up.push_back(static_cast<char>(std::toupper(c)));
    static const std::vector<std::pair<std::string, TableId>> ids = {
        {"T1", TableId::T1},   {"T2", TableId::T2}, {"T3", TableId::T3},
        {"T4", TableId::T4},   {"T5", TableId::T5}, {"T6", TableId::T6},
        {"T7", TableId::T7},   {"T8", TableId::T8}, {"T9", TableId::T9},
        {"T10", TableId::T10}, {"F1", TableId::F1}, {"F2", TableId::F2},
        {"F3", TableId::F3},   {"F4", TableId::F4}, {"F5", TableId::F5}};
    for (const auto& [name, id] : ids)
        if (up == name) return id;
    throw std::invalid_argument("unknown table id '" + text +
                                "' (expected T1..T10 or F1..F5)");
}

std::string to_string(TableId id) {
    switch (id) {
        case TableId::T1: return "T1";
        case TableId::T2: return "T2";
        case TableId::T3: return "T3";
        case TableId::T4: return "T4";
        case TableId::T5: return "T5";
        case TableId::T6: return "T6";
        case TableId::T7: return "T7";
        case TableId::T8: return "T8";
        case TableId::T9: return "T9";
        case TableId::T10: return "T10";
        case TableId::F1: return "F1";
        case TableId::F2: return "F2";
        case TableId::F3: return "F3";
        case TableId::F4: return "F4";
        case TableId::F5: return "F5";
    }
    return "?";
}

Dataset reproduce_table(TableId id) {
    switch (id) {
        case TableId::T1: return cooling_dataset(id, 5);
        case TableId::T2: return cooling_dataset(id, 7);
        case TableId::T3: return cooling_dataset(id, 9);
        case TableId::T4: return cooling_dataset(id, 11);
        case TableId::T5:
            return purify_dataset(
                id, 0.6, reference::purify60_rows(),
                "Resources to purify the MSB to >= 60% polarization");
        case TableId::T6:
            // rows qualify once the bias rounds to 0.9999 at four decimals
            // (the published 3Fib entry reaches 0.999877)
            return purify_dataset(
                id, 0.99985, reference::purify9999_rows(),
                "Resources to reach >= 0.9999 polarization from eps0 = 0.1");
        case TableId::T7: return target_dataset(id, 3);
        case TableId::T8: return target_dataset(id, 7);
        case TableId::T9: return target_dataset(id, 11);
        case TableId::T10: return target_dataset(id, 15);
        default: return figure_dataset(id);
    }
}

SearchResult search_resources(const SearchRequest& req) {
    if (req.target_in_units) {
        if (req.target <= 1.0)
            throw std::invalid_argument(
                "search_resources: target must exceed 1 (units of eps0)");
    } else {
        if (!is_physical_bias(req.target) || req.target <= req.eps0)
            throw std::invalid_argument(
                "search_resources: target must be a bias above eps0");
    }
    const bool pac_family = req.family == Family::Pac2 ||
                            req.family == Family::MPac ||
                            req.family == Family::InftyPac;
    if (req.family == Family::VmPac || req.family == Family::Fernandez ||
        req.family == Family::InftyPac)
        throw std::invalid_argument(
            "search_resources: constant-m families only");
    if (!req.target_in_units && req.family == Family::Pac3)
        throw std::invalid_argument(
            "search_resources: no exact-regime closed form for PAC3");

    const int step = pac_family ? 2 : 1;
    for (int n = 3; n <= req.max_spins; n += step) {
        double bias;
        if (req.target_in_units) {
            bias = expected_msb_linear(
                make_spec(req.family, n, req.m, Scope::FullString));
        } else {
            switch (req.family) {
                case Family::Pac2:
                    bias = mpac_bias_exact(req.eps0, 1, (n - 1) / 2);
                    break;
                case Family::MPac:
                    bias = mpac_bias_exact(req.eps0, req.m, (n - 1) / 2);
                    break;
                case Family::MFib:
                    bias = mfib_bias_exact(req.eps0, req.m, n).back();
                    break;
                case Family::DeltaFib:
                    bias = deltafib_bias_exact(req.eps0, n).back();
                    break;
                default:
                    throw std::logic_error("unreachable");
            }
        }
        if (bias >= req.target) {
            SearchResult res;
            res.reachable = true;
            res.n = n;
            res.resets =
                runtime_formula(make_spec(req.family, n, req.m,
                                          Scope::FullString));
            res.bias = bias;
            return res;
        }
    }
    return {};  // unreachable within max_spins
}

SearchResult search_ppa(double target_units, double eps0, int max_spins) {
    if (target_units <= 1.0)
        throw std::invalid_argument("search_ppa: target must exceed 1");
    for (int n = 3; n <= max_spins; ++n) {
        if (std::ldexp(1.0, n - 2) < target_units) continue;  // asymptote short
        PpaConfig cfg;
        cfg.n = n;
        cfg.eps0 = eps0;
        cfg.stop = PpaStop::target_msb_bias(target_units);
        const PpaResult res = run_ppa(cfg);
        if (res.reached) {
            SearchResult out;
            out.reachable = true;
            out.n = n;
            out.resets = res.resets;
            out.bias = res.msb_bias_units;
            return out;
        }
    }
    return {};
}

std::vector<CurvePoint> emit_curve(Family family, int m, double eps0, int j_max,
                                   Regime regime) {
    if (family != Family::MPac && family != Family::InftyPac)
        throw std::invalid_argument("emit_curve: MPac or InftyPac");
    if (family == Family::InftyPac && regime == Regime::Linear)
        throw std::invalid_argument("emit_curve: inftyPAC curve is exact-regime");
    std::vector<CurvePoint> out;
    const std::string series = family == Family::InftyPac
                                   ? "inftyPAC"
                                   : std::to_string(m) + "PAC";
    const int j_min = regime == Regime::Linear ? 1 : 0;
    for (int j = j_min; j <= j_max; ++j) {
        CurvePoint p;
        p.series = series;
        p.j = j;
        p.n = 2 * j + 1;
        if (family == Family::InftyPac)
            p.value = inftypac_bias(eps0, j);
        else
            p.value = regime == Regime::Linear ? mpac_bias_linear(m, j)
                                               : mpac_bias_exact(eps0, m, j);
        out.push_back(p);
    }
    return out;
}

void write_csv(const Dataset& data, std::ostream& out) {
    if (data.is_curve()) {
        out << "series,j,n,value\n";
        for (const auto& p : data.curve)
            out << p.series << ',' << p.j << ',' << p.n << ','
                << fmt15(p.value) << '\n';
        return;
    }
    out << "algorithm,n,resets,bias,paper_value,rel_dev,paper_resets,paper_n,"
           "note\n";
    for (const auto& r : data.rows) {
        out << r.algorithm << ',' << r.n << ',' << r.resets << ','
            << fmt15(r.bias) << ',' << fmt15(r.paper_value) << ','
            << fmt15(r.rel_dev) << ',' << r.paper_resets << ',' << r.paper_n
            << ',' << r.note << '\n';
    }
}

void write_json(const Dataset& data, std::ostream& out) {
    nlohmann::json doc;
    doc["table"] = data.id;
    doc["title"] = data.title;
    if (!data.convention.empty()) doc["convention"] = data.convention;
    auto rows = nlohmann::json::array();
    if (data.is_curve()) {
        for (const auto& p : data.curve)
            rows.push_back({{"series", p.series},
                            {"j", p.j},
                            {"n", p.n},
                            {"value", round15(p.value)}});
    } else {
        for (const auto& r : data.rows) {
            nlohmann::json row = {{"algorithm", r.algorithm},
                                  {"n", r.n},
                                  {"resets", r.resets},
                                  {"bias", round15(r.bias)},
                                  {"paper_value", round15(r.paper_value)},
                                  {"rel_dev", round15(r.rel_dev)}};
            if (r.paper_resets >= 0) row["paper_resets"] = r.paper_resets;
            if (r.paper_n >= 0) row["paper_n"] = r.paper_n;
            if (!r.note.empty()) row["note"] = r.note;
            rows.push_back(row);
        }
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
}

}  // namespace hbac
