#include "hbac/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <ostream>
#include <sstream>

#include "hbac/bench.hpp"
#include "hbac/oracle.hpp"
#include "hbac/ppa.hpp"
#include "hbac/relaxation.hpp"

namespace hbac::acceptance {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

double rel(double got, double want) {
    return std::abs(got - want) / std::abs(want);
}

AlgorithmSpec make_spec(Family family, int n, int m, Scope scope) {
    AlgorithmSpec s;
    s.family = family;
    s.n = n;
    s.m = m;
    s.scope = scope;
    return s;
}

std::string label(Family f, int m) {
    if (f == Family::MPac) return std::to_string(m) + "PAC";
    if (f == Family::MFib) return std::to_string(m) + "Fib";
    return to_string(f);
}

// criteria 1 and 2: the n-spin cooling tables from compiled linear runs
CriterionResult check_cooling_tables(int id, std::vector<int> ns) {
    CriterionResult res{id, true, {}};
    std::ostringstream bad;
    int rows = 0;
    for (int n : ns) {
        for (const auto& row : reference::cooling_table(n)) {
            const auto spec = make_spec(row.family, n, row.m, Scope::FullString);
            const auto report =
                run_algorithm(spec, SpinSystem::cold_start(n, 1.0, Regime::Linear));
            ++rows;
            const double dev = rel(report.msb_bias(), row.bias);
            if (dev > 5e-3) {
                res.pass = false;
                bad << " [" << label(row.family, row.m) << " n=" << n
                    << " bias " << fmt(report.msb_bias()) << " vs "
                    << fmt(row.bias) << " dev " << fmt(dev) << "]";
            }
            if (report.reset_count != row.resets ||
                runtime_formula(spec) != row.resets) {
                res.pass = false;
                bad << " [" << label(row.family, row.m) << " n=" << n
                    << " resets " << report.reset_count << " vs " << row.resets
                    << "]";
            }
        }
    }
    res.summary = std::to_string(rows) + " rows, bias tol 0.5%, resets exact";
    if (!res.pass) res.summary += ";" + bad.str();
    return res;
}

CriterionResult check_ppa_pairs() {
    CriterionResult res{3, true, {}};
    std::ostringstream bad;
    int rows = 0;
    for (int n : {5, 7, 9, 11}) {
        for (const auto& pair : reference::ppa_pairs(n)) {
            if (n == 11 && pair.resets > 10000) continue;  // not in criterion set
            PpaConfig cfg;
            cfg.n = n;
            cfg.eps0 = 1e-5;
            cfg.stop = PpaStop::after_resets(pair.resets);
            const PpaResult r = run_ppa(cfg);
            ++rows;
            const double dev = rel(r.msb_bias_units, pair.bias_units);
            if (dev > 1e-2) {
                res.pass = false;
                bad << " [n=" << n << " after " << pair.resets << ": "
                    << fmt(r.msb_bias_units) << " vs " << fmt(pair.bias_units)
                    << "]";
            }
        }
    }
    res.summary = std::to_string(rows) + " (resets -> bias) pairs, tol 1%";
    if (!res.pass) res.summary += ";" + bad.str();
    return res;
}

CriterionResult check_spot_factors() {
    CriterionResult res{4, true, {}};
    std::ostringstream bad;
    for (const auto& s : reference::mpac_spot_factors()) {
        const double got = mpac_bias_linear(s.m, s.j);
        if (rel(got, s.factor) > 5e-3) {
            res.pass = false;
            bad << " [m=" << s.m << " j=" << s.j << ": " << fmt(got) << " vs "
                << fmt(s.factor) << "]";
        }
    }
    res.summary = "mPAC factors (m=4,j=5), (m=4,j=10), (m=7,j=10), tol 0.5%";
    if (!res.pass) res.summary += ";" + bad.str();
    return res;
}

CriterionResult check_purification() {
    CriterionResult res{5, true, {}};
    std::ostringstream bad;
    for (const auto& row : reference::purify60_rows()) {
        SearchRequest req;
        req.family = row.family;
        req.m = row.m;
        req.eps0 = row.eps0;
        req.target = 0.6;
        req.target_in_units = false;
        const SearchResult got = search_resources(req);
        const std::string tag =
            label(row.family, row.m) + " eps0=" + fmt(row.eps0);
        if (!got.reachable || got.n != row.spins) {
            res.pass = false;
            bad << " [" << tag << " spins " << got.n << " vs " << row.spins
                << "]";
        }
        if (got.resets != row.resets) {
            res.pass = false;
            bad << " [" << tag << " resets " << got.resets << " vs "
                << row.resets << "]";
        }
        if (rel(got.bias, row.bias) > 1e-2) {
            res.pass = false;
            bad << " [" << tag << " bias " << fmt(got.bias) << " vs "
                << fmt(row.bias) << " dev " << fmt(rel(got.bias, row.bias))
                << "]";
        }
    }
    for (const auto& row : reference::purify9999_rows()) {
        SearchRequest req;
        req.family = row.family;
        req.m = row.m;
        req.eps0 = row.eps0;
        // the published rows accept biases that round to 0.9999 at four
        // decimals (the 3Fib entry reaches 0.999877)
        req.target = 0.99985;
        req.target_in_units = false;
        const SearchResult got = search_resources(req);
        const std::string tag = label(row.family, row.m) + " ->0.9999";
        if (!got.reachable || got.n != row.spins) {
            res.pass = false;
            bad << " [" << tag << " spins " << got.n << " vs " << row.spins
                << "]";
        }
        if (got.resets != row.resets) {
            res.pass = false;
            bad << " [" << tag << " resets " << got.resets << " vs "
                << row.resets << "]";
        }
        // the published biases carry six decimals; compare error probabilities
        const double delta_got = 1.0 - got.bias;
        const double delta_pub = 1.0 - row.bias;
        if (std::abs(delta_got - delta_pub) / delta_pub > 0.5) {
            res.pass = false;
            bad << " [" << tag << " delta " << fmt(delta_got) << " vs "
                << fmt(delta_pub) << "]";
        }
    }
    res.summary = "15 purification rows: spins exact, resets exact, bias tol "
                  "1% (60% table) / leading error digit (0.9999 table)";
    if (!res.pass) res.summary += ";" + bad.str();
    return res;
}

CriterionResult check_target_tables() {
    CriterionResult res{6, true, {}};
    std::ostringstream bad;
    int rows = 0;
    for (int target : {3, 7, 11, 15}) {
        for (const auto& row : reference::target_rows(target)) {
            ++rows;
            SearchResult got;
            std::string tag;
            if (row.is_ppa) {
                got = search_ppa(target);
                tag = "PPA@" + std::to_string(target);
            } else {
                SearchRequest req;
                req.family = row.family;
                req.m = row.m;
                req.target = target;
                req.target_in_units = true;
                got = search_resources(req);
                tag = label(row.family, row.m) + "@" + std::to_string(target);
            }
            if (!got.reachable || got.n != row.spins ||
                got.resets != row.resets) {
                res.pass = false;
                bad << " [" << tag << " got " << got.n << "/" << got.resets
                    << " vs " << row.spins << "/" << row.resets << "]";
            }
        }
    }
    res.summary =
        std::to_string(rows) + " fixed-target rows, (spins, run-time) exact";
    if (!res.pass) res.summary += ";" + bad.str();
    return res;
}

struct OracleCase {
    AlgorithmSpec spec;
    bool fib;
};

CriterionResult check_oracle_equivalence() {
    CriterionResult res{7, true, {}};
    std::vector<OracleCase> cases;
    for (int n : {3, 5, 7, 9}) {
        for (int m = 1; m <= 4; ++m) {
            for (Scope scope : {Scope::MsbOnly, Scope::FullString}) {
                cases.push_back({make_spec(Family::MPac, n, m, scope), false});
                if (m == 1 && n >= 5)
                    cases.push_back(
                        {make_spec(Family::VmPac, n, 0, scope), false});
            }
        }
    }
    for (auto& c : cases) {
        if (c.spec.family == Family::VmPac) {
            c.spec.m_levels.assign(static_cast<size_t>((c.spec.n - 1) / 2), 2);
            c.spec.m_levels.front() = 3;  // mixed per-level counts
        }
    }
    for (int n = 3; n <= 9; ++n)
        for (Scope scope : {Scope::MsbOnly, Scope::FullString})
            cases.push_back({make_spec(Family::Pac3, n, 0, scope), false});
    for (int m = 1; m <= 4; ++m)
        cases.push_back({make_spec(Family::Fernandez, 3, m, Scope::MsbOnly),
                         false});
    for (int n = 3; n <= 9; ++n) {
        for (int m = 1; m <= 4; ++m)
            cases.push_back({make_spec(Family::MFib, n, m, Scope::MsbOnly),
                             true});
        cases.push_back({make_spec(Family::DeltaFib, n, 0, Scope::MsbOnly),
                         true});
    }

    double pac_max_dev = 0.0;
    double fib_min = 1e9, fib_max = 0.0;
    std::ostringstream bad;
    bool fib_ok = true;

    auto eval = [](const OracleCase& c, double eps0) {
        const Schedule sched = build_schedule(c.spec);
        const auto engine = run_schedule(
            SpinSystem::equilibrium(c.spec.n, eps0, Regime::Exact), sched);
        const auto oracle = run_schedule_oracle(
            DiagonalState::from_product(
                std::vector<double>(static_cast<size_t>(c.spec.n), eps0)),
            sched, eps0);
        return std::pair{engine.msb_bias(), oracle.msb_bias()};
    };

    for (const auto& c : cases) {
        for (double eps0 : {1e-5, 0.1}) {
            const auto [eng, orc] = eval(c, eps0);
            if (!c.fib) {
                const double dev = std::abs(eng - orc);
                pac_max_dev = std::max(pac_max_dev, dev);
                if (dev > 1e-9) {
                    res.pass = false;
                    bad << " [" << label(c.spec.family, c.spec.m)
                        << " n=" << c.spec.n << " " << to_string(c.spec.scope)
                        << " eps0=" << fmt(eps0) << " |d|=" << fmt(dev) << "]";
                }
            } else {
                const double dev = std::abs(eng - orc) / std::abs(orc);
                if (eps0 == 1e-5) {
                    fib_min = std::min(fib_min, dev);
                    fib_max = std::max(fib_max, dev);
                    if (dev > 1e-2) {
                        if (fib_ok) {
                            fib_ok = false;
                            res.pass = false;
                            bad << " [first fib miss: "
                                << label(c.spec.family, c.spec.m)
                                << " n=" << c.spec.n << " dev=" << fmt(dev)
                                << "]";
                        }
                    }
                }
            }
        }
    }
    std::ostringstream sum;
    sum << "PAC family max |engine-oracle| = " << fmt(pac_max_dev)
        << " (<=1e-9); mFib/delta-Fib dev at eps0=1e-5 in [" << fmt(fib_min)
        << ", " << fmt(fib_max) << "] (required <1%"
        << (fib_ok ? "" : ", NOT met: published series are lower bounds; "
                          "the joint state cools beyond them") << ")";
    res.summary = sum.str();
    if (!res.pass) res.summary += ";" + bad.str();
    return res;
}

// deterministic correlated test states for the property checks
DiagonalState scrambled_state(int n, unsigned seed) {
    std::vector<double> biases(static_cast<size_t>(n));
    unsigned x = seed * 2654435761u + 12345u;
    auto next = [&] {
        x ^= x << 13;
        x ^= x >> 17;
        x ^= x << 5;
        return static_cast<double>(x % 10000u) / 10000.0;
    };
    for (auto& b : biases) b = 0.8 * next() - 0.4;
    DiagonalState s = DiagonalState::from_product(biases);
    // a few compressions to build correlations
    for (int k = 3; k <= n; ++k) s.apply_comp3(k, k - 1, k - 2);
    s.apply_pt(1, n);
    return s;
}

CriterionResult check_properties() {
    CriterionResult res{8, true, {}};
    std::ostringstream bad;

    // probability conservation + permutation invariants
    for (int n : {4, 5, 6}) {
        for (unsigned seed : {1u, 2u, 3u}) {
            DiagonalState s = scrambled_state(n, seed);
            auto sorted_probs = [](const DiagonalState& st) {
                auto p = st.probabilities();
                std::sort(p.begin(), p.end());
                return p;
            };
            const auto before = sorted_probs(s);
            DiagonalState t = s;
            t.apply_comp3(n, n - 1, n - 2);
            t.apply_pt(2, n);
            if (sorted_probs(t) != before) {
                res.pass = false;
                bad << " [permutation multiset broken n=" << n << "]";
            }
            t.apply_reset(1, 0.3);
            if (std::abs(t.probability_sum() - 1.0) > 1e-12) {
                res.pass = false;
                bad << " [probability sum n=" << n << "]";
            }
            double min_p = 0.0;
            for (double p : t.probabilities()) min_p = std::min(min_p, p);
            if (min_p < -1e-15) {
                res.pass = false;
                bad << " [negative probability n=" << n << "]";
            }
            // reset preserves every other marginal
            DiagonalState u = s;
            u.apply_reset(2, 0.1);
            for (int k = 1; k <= n; ++k) {
                if (k == 2) continue;
                if (std::abs(u.marginal_bias(k) - s.marginal_bias(k)) > 1e-12) {
                    res.pass = false;
                    bad << " [reset changed marginal " << k << "]";
                }
            }
        }
    }

    // PPA monotonicity of the MSB bias
    for (int n : {4, 6}) {
        PpaConfig cfg;
        cfg.n = n;
        cfg.eps0 = 1e-5;
        cfg.stop = PpaStop::after_resets(1500);
        cfg.record_msb_trace = true;
        const PpaResult r = run_ppa(cfg);
        // slack covers float noise in the per-step sums (~1e-16 absolute)
        for (size_t i = 1; i < r.msb_trace_units.size(); ++i) {
            if (r.msb_trace_units[i] < r.msb_trace_units[i - 1] - 1e-8) {
                res.pass = false;
                bad << " [PPA msb decreased at step " << i << " n=" << n << "]";
                break;
            }
        }
    }

    // PPA converged bias: in [2^{n-2}, 2^{n-1}] eps0 and within 2% of the
    // lower bound (approached from below, hence the 2% slack on the bracket)
    {
        std::vector<std::future<std::pair<int, double>>> jobs;
        for (int n = 3; n <= 11; ++n)
            jobs.push_back(std::async(std::launch::async, [n] {
                PpaConfig cfg;
                cfg.n = n;
                cfg.eps0 = 1e-5;
                cfg.stop = PpaStop::converged(1e-9);
                return std::pair{n, run_ppa(cfg).msb_bias_units};
            }));
        for (auto& job : jobs) {
            const auto [n, units] = job.get();
            const double lo = std::ldexp(1.0, n - 2);
            if (units > std::ldexp(1.0, n - 1) || rel(units, lo) > 0.02) {
                res.pass = false;
                bad << " [PPA converged n=" << n << " " << fmt(units) << " vs "
                    << fmt(lo) << "]";
            }
        }
    }

    // vmPAC: permutations of m change neither the linear MSB nor the run-time
    {
        const std::vector<std::vector<int>> vecs = {
            {1, 2, 3}, {3, 2, 1}, {2, 3, 1}, {1, 3, 2}, {3, 1, 2}, {2, 1, 3}};
        double first_msb = 0.0;
        long long first_rt = 0;
        for (size_t i = 0; i < vecs.size(); ++i) {
            AlgorithmSpec spec = make_spec(Family::VmPac, 7, 0, Scope::MsbOnly);
            spec.m_levels = vecs[i];
            const auto report =
                run_algorithm(spec, SpinSystem::cold_start(7, 1.0, Regime::Linear));
            const long long rt = runtime_formula(spec);
            if (i == 0) {
                first_msb = report.msb_bias();
                first_rt = rt;
            } else if (std::abs(report.msb_bias() - first_msb) >
                           1e-12 * first_msb ||
                       rt != first_rt) {
                res.pass = false;
                bad << " [vmPAC permutation variance]";
            }
        }
    }

    // delta-Fib per-bit guarantee on the compiled run
    for (int n = 3; n <= 9; ++n) {
        const auto spec = make_spec(Family::DeltaFib, n, 0, Scope::FullString);
        const auto report =
            run_algorithm(spec, SpinSystem::cold_start(n, 1.0, Regime::Linear));
        for (int k = 3; k <= n; ++k) {
            if (report.final_biases[k - 1] <
                deltafib_guarantee(n, k) * (1.0 - 1e-12)) {
                res.pass = false;
                bad << " [delta-Fib bound n=" << n << " k=" << k << "]";
            }
        }
    }

    // low-error quadratic convergence envelope of the exact level map
    for (int m = 2; m <= 7; ++m) {
        for (double delta : {1e-2, 3e-3, 1e-3, 3e-4, 1e-4, 1e-5, 1e-6}) {
            const double eps = 1.0 - 2.0 * delta;
            const double next = mpac_level_exact(eps, m);
            const double delta_next = 0.5 * (1.0 - next);
            if (delta_next > 2.0 * delta * delta) {
                res.pass = false;
                bad << " [low-delta envelope m=" << m << " d=" << fmt(delta)
                    << "]";
            }
        }
    }

    res.summary =
        "conservation/permutation, PPA monotone + converged bracket (n<=11), "
        "vmPAC permutation invariance, delta-Fib bound (n<=9), low-delta "
        "envelope";
    if (!res.pass) res.summary += ";" + bad.str();
    return res;
}

CriterionResult check_relaxation() {
    CriterionResult res{9, true, {}};
    std::ostringstream bad;
    for (const auto& row : reference::relaxation_rows()) {
        const auto spec = make_spec(Family::MPac, 7, 2, row.scope);
        const auto report =
            run_schedule_relaxed(spec, {row.ratio_R, row.tau});
        const double got = report.msb_bias_units();
        const double dev = rel(got, row.bias_units);
        if (dev > 0.10) {
            res.pass = false;
            bad << " [R=" << fmt(row.ratio_R) << " tau=" << fmt(row.tau) << " "
                << to_string(row.scope) << ": " << fmt(got) << " vs "
                << fmt(row.bias_units) << "]";
        }
    }
    res.summary = "8 finite-ratio rows (2PAC, n=7), tol 10%";
    if (!res.pass) res.summary += ";" + bad.str();
    return res;
}

CriterionResult check_runtime_identities() {
    CriterionResult res{10, true, {}};
    std::ostringstream bad;
    constexpr long long kBudget = 20'000'000;
    long long cases = 0, skipped = 0;

    auto check = [&](const AlgorithmSpec& spec) {
        const long long formula = runtime_formula(spec);
        if (formula > kBudget) {
            ++skipped;
            return;
        }
        ++cases;
        const long long counted = count_resets_compiled(spec);
        if (counted != formula) {
            res.pass = false;
            bad << " [" << label(spec.family, spec.m) << " n=" << spec.n << " "
                << to_string(spec.scope) << ": counted " << counted
                << " formula " << formula << "]";
        }
    };

    for (Scope scope : {Scope::MsbOnly, Scope::FullString}) {
        for (int n = 3; n <= 13; n += 2) {
            check(make_spec(Family::Pac2, n, 1, scope));
            for (int m = 1; m <= 7; ++m) check(make_spec(Family::MPac, n, m, scope));
        }
        for (int n = 2; n <= 13; ++n) check(make_spec(Family::Pac3, n, 0, scope));
        for (int m = 1; m <= 7; ++m) check(make_spec(Family::Fernandez, 3, m, scope));
        for (int n = 3; n <= 13; ++n) {
            for (int m = 1; m <= 7; ++m) check(make_spec(Family::MFib, n, m, scope));
            check(make_spec(Family::DeltaFib, n, 0, scope));
        }
        for (int n : {5, 7, 9}) {
            AlgorithmSpec spec = make_spec(Family::VmPac, n, 0, scope);
            spec.m_levels.resize(static_cast<size_t>((n - 1) / 2));
            for (size_t j = 0; j < spec.m_levels.size(); ++j)
                spec.m_levels[j] = 1 + static_cast<int>((j * 3 + 1) % 7);
            check(spec);
        }
    }

    // the factorial run-time by explicit materialization
    const Schedule dfib8 = build_schedule(make_spec(Family::DeltaFib, 8, 0,
                                                    Scope::FullString));
    if (dfib8.reset_count != 40320) {
        res.pass = false;
        bad << " [delta-Fib n=8 materialized " << dfib8.reset_count << "]";
    }

    std::ostringstream sum;
    sum << cases << " identities exact (" << skipped
        << " corners beyond the " << kBudget
        << "-reset compile budget skipped); delta-Fib n=8 materialized = 8!";
    res.summary = sum.str();
    if (!res.pass) res.summary += ";" + bad.str();
    return res;
}

}  // namespace

CriterionResult run_criterion(int id) {
    switch (id) {
        case 1: return check_cooling_tables(1, {5});
        case 2: return check_cooling_tables(2, {7, 9, 11});
        case 3: return check_ppa_pairs();
        case 4: return check_spot_factors();
        case 5: return check_purification();
        case 6: return check_target_tables();
        case 7: return check_oracle_equivalence();
        case 8: return check_properties();
        case 9: return check_relaxation();
        case 10: return check_runtime_identities();
    }
    throw std::invalid_argument("criterion id must be 1..10");
}

int run_and_print(std::ostream& out, int only) {
    int failures = 0;
    for (int id = 1; id <= kCriterionCount; ++id) {
        if (only != 0 && id != only) continue;
        const CriterionResult r = run_criterion(id);
        out << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL")
            << " - " << r.summary << "\n";
        out.flush();
        if (!r.pass) ++failures;
    }
    return failures;
}

}  // namespace hbac::acceptance
