// Command-line front end: runs cooling algorithms, reproduces the published
// benchmark tables and curve datasets, searches resource requirements, and
// runs the acceptance checks. Exit codes: 0 success, 1 usage error,
// 2 acceptance-check failure.

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "hbac/acceptance.hpp"
#include "hbac/bench.hpp"
#include "hbac/relaxation.hpp"

namespace {

using nlohmann::json;

hbac::Family parse_family(const std::string& name) {
    static const std::vector<std::pair<std::string, hbac::Family>> table = {
        {"pac2", hbac::Family::Pac2},       {"pac3", hbac::Family::Pac3},
        {"mpac", hbac::Family::MPac},       {"vmpac", hbac::Family::VmPac},
        {"inftypac", hbac::Family::InftyPac},
        {"fernandez", hbac::Family::Fernandez},
        {"mfib", hbac::Family::MFib},       {"dfib", hbac::Family::DeltaFib},
        {"delta-fib", hbac::Family::DeltaFib}};
    for (const auto& [key, fam] : table)
        if (name == key) return fam;
    throw CLI::ValidationError("--family", "unknown family '" + name + "'");
}

struct GlobalOpts {
    double eps0 = 1e-5;
    std::string regime = "linear";
    std::string format = "csv";
    std::string out_path;
};

hbac::Regime regime_of(const GlobalOpts& g) {
    if (g.regime == "linear") return hbac::Regime::Linear;
    if (g.regime == "exact") return hbac::Regime::Exact;
    throw CLI::ValidationError("--regime", "expected linear|exact");
}

std::ostream& open_out(const GlobalOpts& g, std::ofstream& file) {
    if (g.out_path.empty()) return std::cout;
    file.open(g.out_path);
    if (!file) throw CLI::ValidationError("--out", "cannot open " + g.out_path);
    return file;
}

void emit_kv(const GlobalOpts& g, const json& doc, std::ostream& out) {
    if (g.format == "json") {
        out << doc.dump(2) << "\n";
        return;
    }
    out << "key,value\n";
    for (auto it = doc.begin(); it != doc.end(); ++it)
        out << it.key() << "," << (it->is_string() ? it->get<std::string>()
                                                   : it->dump())
            << "\n";
}

json biases_json(const std::vector<double>& biases) {
    json arr = json::array();
    for (double b : biases) arr.push_back(b);
    return arr;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"heat-bath algorithmic cooling simulator and benchmarks"};
    app.set_config("--config");
    app.require_subcommand(1);
    // let global flags (--eps0, --format, ...) appear after the subcommand
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--eps0", g.eps0, "heat-bath equilibrium bias")
        ->capture_default_str();
    app.add_option("--regime", g.regime, "linear|exact")->capture_default_str();
    app.add_option("--format", g.format, "csv|json")->capture_default_str();
    app.add_option("--out", g.out_path, "output file (default stdout)");

    // run
    std::string family_name = "mpac", scope_name = "full", init_name = "cold";
    int n = 5, m = 2;
    std::vector<int> mvec;
    bool trace = false;
    auto* run_cmd = app.add_subcommand("run", "compile and run one algorithm");
    run_cmd->add_option("--family", family_name,
                        "pac2|pac3|mpac|vmpac|fernandez|mfib|dfib");
    run_cmd->add_option("--n", n, "spin count");
    run_cmd->add_option("--m", m, "cycles per level");
    run_cmd->add_option("--mvec", mvec, "vmPAC per-level cycle counts");
    run_cmd->add_option("--scope", scope_name, "msb|full");
    run_cmd->add_option("--init", init_name, "cold|equilibrium");
    run_cmd->add_flag("--trace", trace, "record per-op biases");

    // table
    std::string table_id;
    auto* table_cmd =
        app.add_subcommand("table", "reproduce a published table or figure");
    table_cmd->add_option("id", table_id, "T1..T10 or F1..F5")->required();

    // search
    double target = 0.0;
    bool units = false;
    int max_spins = 40;
    std::string search_family = "mpac";
    auto* search_cmd =
        app.add_subcommand("search", "smallest spin count reaching a target");
    search_cmd->add_option("--family", search_family,
                           "pac2|pac3|mpac|mfib|dfib|ppa");
    search_cmd->add_option("--m", m, "cycles per level");
    search_cmd->add_option("--target", target, "target bias")->required();
    search_cmd->add_flag("--units", units, "target is in units of eps0 "
                                           "(linear regime)");
    search_cmd->add_option("--max-spins", max_spins, "search limit");

    // curve
    int j_max = 10;
    auto* curve_cmd = app.add_subcommand("curve", "cooling-curve dataset");
    curve_cmd->add_option("--family", family_name, "mpac|inftypac");
    curve_cmd->add_option("--m", m, "cycles per level");
    curve_cmd->add_option("--jmax", j_max, "maximum purification level");

    // ppa
    long long ppa_resets = -1;
    double ppa_target = -1.0;
    auto* ppa_cmd = app.add_subcommand("ppa", "partner-pairing algorithm run");
    ppa_cmd->add_option("--n", n, "spin count");
    ppa_cmd->add_option("--resets", ppa_resets, "stop after this many resets");
    ppa_cmd->add_option("--target", ppa_target,
                        "stop at this MSB bias (units of eps0)");
    ppa_cmd->add_flag("--trace", trace, "record the per-step MSB bias");

    // relaxed
    double ratio = 1e4, tau = 5.0;
    auto* relaxed_cmd =
        app.add_subcommand("relaxed", "finite relaxation-ratio run");
    relaxed_cmd->add_option("--family", family_name, "algorithm family");
    relaxed_cmd->add_option("--n", n, "spin count");
    relaxed_cmd->add_option("--m", m, "cycles per level");
    relaxed_cmd->add_option("--scope", scope_name, "msb|full");
    relaxed_cmd->add_option("--ratio", ratio, "T1(comp)/T1(reset)");
    relaxed_cmd->add_option("--tau", tau, "reset duration in T1(reset) units");

    // check
    int criterion = 0;
    auto* check_cmd =
        app.add_subcommand("check", "run the acceptance checks (exit 2 on "
                                    "violation)");
    check_cmd->add_option("--criterion", criterion, "run a single criterion");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        std::ofstream file;
        std::ostream& out = open_out(g, file);

        auto scope_of = [&] {
            if (scope_name == "msb") return hbac::Scope::MsbOnly;
            if (scope_name == "full") return hbac::Scope::FullString;
            throw CLI::ValidationError("--scope", "expected msb|full");
        };
        auto spec_of = [&] {
            hbac::AlgorithmSpec spec;
            spec.family = parse_family(family_name);
            spec.n = n;
            spec.m = m;
            spec.m_levels = mvec;
            spec.scope = scope_of();
            return spec;
        };

        if (*run_cmd) {
            const auto spec = spec_of();
            const auto initial =
                init_name == "equilibrium"
                    ? hbac::SpinSystem::equilibrium(n, g.eps0, regime_of(g))
                    : hbac::SpinSystem::cold_start(n, g.eps0, regime_of(g));
            hbac::RunReport report;
            if (trace) {
                hbac::RunOptions opts;
                opts.record_trace = true;
                report = run_schedule(initial, build_schedule(spec), opts);
            } else {
                report = run_algorithm(spec, initial);
            }
            json doc = {{"algorithm", to_string(spec.family)},
                        {"n", n},
                        {"scope", to_string(spec.scope)},
                        {"regime", g.regime},
                        {"eps0", g.eps0},
                        {"resets", report.reset_count},
                        {"msb_bias", report.msb_bias()},
                        {"final_biases", biases_json(report.final_biases)}};
            if (report.trace) {
                json steps = json::array();
                for (const auto& entry : *report.trace)
                    steps.push_back({{"op", to_string(entry.op)},
                                     {"biases", biases_json(entry.biases_after)}});
                doc["trace"] = std::move(steps);
            }
            emit_kv(g, doc, out);
        } else if (*table_cmd) {
            const auto data = hbac::reproduce_table(hbac::parse_table_id(table_id));
            if (g.format == "json")
                hbac::write_json(data, out);
            else
                hbac::write_csv(data, out);
        } else if (*search_cmd) {
            hbac::SearchResult res;
            if (search_family == "ppa") {
                res = hbac::search_ppa(target, g.eps0, max_spins);
            } else {
                hbac::SearchRequest req;
                req.family = parse_family(search_family);
                req.m = m;
                req.eps0 = g.eps0;
                req.target = target;
                req.target_in_units = units;
                req.max_spins = max_spins;
                res = hbac::search_resources(req);
            }
            json doc = {{"family", search_family}, {"target", target},
                        {"reachable", res.reachable}, {"n", res.n},
                        {"resets", res.resets},      {"bias", res.bias}};
            emit_kv(g, doc, out);
            if (!res.reachable) return 1;
        } else if (*curve_cmd) {
            hbac::Dataset data;
            data.id = "curve";
            data.title = family_name + " cooling curve";
            data.curve = hbac::emit_curve(parse_family(family_name), m, g.eps0,
                                          j_max, regime_of(g));
            if (g.format == "json")
                hbac::write_json(data, out);
            else
                hbac::write_csv(data, out);
        } else if (*ppa_cmd) {
            hbac::PpaConfig cfg;
            cfg.n = n;
            cfg.eps0 = g.eps0;
            cfg.record_msb_trace = trace;
            if (ppa_resets >= 0)
                cfg.stop = hbac::PpaStop::after_resets(ppa_resets);
            else if (ppa_target > 0)
                cfg.stop = hbac::PpaStop::target_msb_bias(ppa_target);
            else
                cfg.stop = hbac::PpaStop::converged();
            const auto res = run_ppa(cfg);
            json doc = {{"n", n},
                        {"eps0", g.eps0},
                        {"resets", res.resets},
                        {"msb_bias", res.msb_bias},
                        {"msb_bias_units", res.msb_bias_units},
                        {"reached", res.reached},
                        {"convention", res.convention}};
            if (trace) doc["msb_trace_units"] = res.msb_trace_units;
            emit_kv(g, doc, out);
            if (!res.reached) return 1;
        } else if (*relaxed_cmd) {
            const auto spec = spec_of();
            const auto report = run_schedule_relaxed(spec, {ratio, tau});
            json doc = {{"algorithm", to_string(spec.family)},
                        {"n", n},
                        {"scope", to_string(spec.scope)},
                        {"ratio_R", ratio},
                        {"tau", tau},
                        {"resets", report.reset_count},
                        {"msb_bias_units", report.msb_bias_units()},
                        {"final_biases_units",
                         biases_json(report.final_biases_units)}};
            emit_kv(g, doc, out);
        } else if (*check_cmd) {
            const int failures = hbac::acceptance::run_and_print(out, criterion);
            return failures == 0 ? 0 : 2;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
