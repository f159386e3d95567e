#include "hbac/algorithms.hpp"

#include <cmath>
#include <limits>

namespace hbac {

namespace {

long long checked_mul(long long a, long long b) {
    long long out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("runtime_formula: reset count exceeds 2^63");
    return out;
}

long long checked_add(long long a, long long b) {
    long long out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("runtime_formula: reset count exceeds 2^63");
    return out;
}

long long ipow(long long base, int exp) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
    return out;
}

// MSB-only reset counts per purification level, T(0) = 1.
long long pac_level_runtime(const AlgorithmSpec& spec, int level) {
    long long t = 1;
    for (int j = 1; j <= level; ++j) {
        const int m = spec.family == Family::VmPac
                          ? spec.m_levels[static_cast<size_t>(j) - 1]
                          : (spec.family == Family::Pac2 ? 1 : spec.m);
        t = checked_mul(t, 1 + 2LL * m);
    }
    return t;
}

long long pac3_level_runtime(int level) {
    long long t0 = 1, t1 = 1;
    if (level == 0) return t0;
    for (int k = 2; k <= level; ++k) {
        const long long t2 = checked_add(checked_mul(2, t1), t0);
        t0 = t1;
        t1 = t2;
    }
    return t1;
}

}  // namespace

std::string to_string(Family family) {
    switch (family) {
        case Family::Pac2: return "PAC2";
        case Family::Pac3: return "PAC3";
        case Family::MPac: return "mPAC";
        case Family::VmPac: return "vmPAC";
        case Family::InftyPac: return "inftyPAC";
        case Family::Fernandez: return "Fernandez";
        case Family::MFib: return "mFib";
        case Family::DeltaFib: return "delta-Fib";
    }
    return "?";
}

std::string to_string(Scope scope) {
    return scope == Scope::MsbOnly ? "msb-only" : "full-string";
}

void validate(const AlgorithmSpec& spec) {
    switch (spec.family) {
        case Family::Pac2:
        case Family::MPac:
            if (spec.n < 3 || spec.n % 2 == 0)
                throw std::invalid_argument(to_string(spec.family) +
                                            " needs an odd spin count n >= 3");
            if (spec.family == Family::MPac && spec.m < 1)
                throw std::invalid_argument("mPAC needs m >= 1");
            break;
        case Family::VmPac: {
            if (spec.n < 3 || spec.n % 2 == 0)
                throw std::invalid_argument("vmPAC needs an odd spin count n >= 3");
            const size_t levels = static_cast<size_t>((spec.n - 1) / 2);
            if (spec.m_levels.size() != levels)
                throw std::invalid_argument(
                    "vmPAC needs one cycle count per purification level");
            for (int m : spec.m_levels)
                if (m < 1) throw std::invalid_argument("vmPAC needs all m_j >= 1");
            break;
        }
        case Family::Pac3:
            if (spec.n < 2)
                throw std::invalid_argument("PAC3 needs n >= 2");
            break;
        case Family::Fernandez:
            if (spec.n != 3)
                throw std::invalid_argument("Fernandez runs on exactly 3 spins");
            if (spec.m < 1) throw std::invalid_argument("Fernandez needs m >= 1");
            break;
        case Family::MFib:
            if (spec.n < 3) throw std::invalid_argument("mFib needs n >= 3");
            if (spec.m < 1) throw std::invalid_argument("mFib needs m >= 1");
            break;
        case Family::DeltaFib:
            if (spec.n < 3) throw std::invalid_argument("delta-Fib needs n >= 3");
            break;
        case Family::InftyPac:
            if (spec.n < 3 || spec.n % 2 == 0)
                throw std::invalid_argument(
                    "inftyPAC needs an odd spin count n >= 3");
            break;
    }
}

bool reads_compressed_spins(Family family) {
    return family == Family::MFib || family == Family::DeltaFib;
}

Schedule build_schedule(const AlgorithmSpec& spec, long long max_resets) {
    validate(spec);
    const long long resets = runtime_formula(spec);
    if (resets > max_resets)
        throw std::length_error(
            to_string(spec.family) + " schedule has " + std::to_string(resets) +
            " resets; too large to materialize (use run_algorithm)");
    Schedule sched;
    sched.compressed_reads_allowed = reads_compressed_spins(spec.family);
    sched.ops.reserve(static_cast<size_t>(resets * 2 + 16));
    for_each_op(spec, [&](const PrimitiveOp& op) { sched.push(op); });
    return sched;
}

long long runtime_formula(const AlgorithmSpec& spec) {
    validate(spec);
    switch (spec.family) {
        case Family::Pac2:
        case Family::MPac:
        case Family::VmPac: {
            const int levels = (spec.n - 1) / 2;
            long long total = pac_level_runtime(spec, levels);
            if (spec.scope == Scope::FullString) {
                for (int j = 1; j < levels; ++j)
                    total = checked_add(
                        total, checked_mul(2, pac_level_runtime(spec, j)));
                total = checked_add(total, 2);
            }
            return total;
        }
        case Family::Pac3: {
            if (spec.scope == Scope::MsbOnly) return pac3_level_runtime(spec.n - 1);
            long long total = 0;
            for (int lvl = 0; lvl < spec.n; ++lvl)
                total = checked_add(total, pac3_level_runtime(lvl));
            return total;
        }
        case Family::Fernandez:
            return 2LL * spec.m + (spec.scope == Scope::FullString ? 2 : 0);
        case Family::MFib:
            return checked_mul(2, ipow(spec.m + 1, spec.n - 2));
        case Family::DeltaFib: {
            long long total = 2;
            for (int k = 3; k <= spec.n; ++k)
                total = checked_mul(total, spec.n - k + 3);
            return total;  // = n!
        }
        case Family::InftyPac:
            throw std::invalid_argument("inftyPAC has no finite run-time");
    }
    throw std::logic_error("unreachable");
}

long long count_resets_compiled(const AlgorithmSpec& spec) {
    long long resets = 0;
    for_each_op(spec, [&](const PrimitiveOp& op) {
        if (op.kind == OpKind::Reset) ++resets;
    });
    return resets;
}

RunReport run_algorithm(const AlgorithmSpec& spec, const SpinSystem& initial) {
    if (initial.size() < spec.n)
        throw std::invalid_argument("run_algorithm: state has too few spins");
    BiasEngine engine(initial, reads_compressed_spins(spec.family));
    for_each_op(spec, [&](const PrimitiveOp& op) { engine.apply(op); });
    return engine.report();
}

// ---- linear closed forms ----

double mpac_bias_linear(int m, int j) {
    if (m < 1 || j < 0) throw std::invalid_argument("mpac_bias_linear: bad args");
    return std::pow(2.0 - std::ldexp(1.0, -m), j);
}

double vmpac_bias_linear(std::span<const int> m_levels) {
    double bias = 1.0;
    for (int m : m_levels) {
        if (m < 1) throw std::invalid_argument("vmpac_bias_linear: m_j >= 1");
        bias *= 2.0 - std::ldexp(1.0, -m);
    }
    return bias;
}

double fernandez_bias_linear(int m) {
    if (m < 1) throw std::invalid_argument("fernandez_bias_linear: m >= 1");
    return 2.0 * (1.0 - std::ldexp(1.0, -m));
}

std::vector<double> mfib_bias_linear(int m, int n) {
    if (m < 1 || n < 2) throw std::invalid_argument("mfib_bias_linear: bad args");
    const double f = 1.0 - std::ldexp(1.0, -m);
    std::vector<double> eps{1.0, 1.0};
    eps.reserve(static_cast<size_t>(n));
    for (int k = 3; k <= n; ++k)
        eps.push_back(f * (eps[k - 2] + eps[k - 3]));
    return eps;
}

std::vector<double> deltafib_bias_linear(int n) {
    if (n < 2) throw std::invalid_argument("deltafib_bias_linear: n >= 2");
    std::vector<double> eps{1.0, 1.0};
    eps.reserve(static_cast<size_t>(n));
    for (int k = 3; k <= n; ++k) {
        const double f = 1.0 - std::ldexp(1.0, -(n - k + 2));
        eps.push_back(f * (eps[k - 2] + eps[k - 3]));
    }
    return eps;
}

std::vector<double> pac3_bias_linear(int n) {
    if (n < 2) throw std::invalid_argument("pac3_bias_linear: n >= 2");
    std::vector<double> eps{1.0, 1.0};
    eps.reserve(static_cast<size_t>(n));
    for (int k = 3; k <= n; ++k)
        eps.push_back(eps[k - 2] + 0.5 * eps[k - 3]);
    return eps;
}

long long fibonacci_number(int k) {
    if (k < 1) throw std::invalid_argument("fibonacci_number: k >= 1");
    long long a = 1, b = 1;
    for (int i = 3; i <= k; ++i) {
        const long long c = checked_add(a, b);
        a = b;
        b = c;
    }
    return b;
}

double deltafib_guarantee(int n, int k) {
    if (k < 3 || k > n) throw std::invalid_argument("deltafib_guarantee: 3 <= k <= n");
    return static_cast<double>(fibonacci_number(k)) *
           (1.0 - std::ldexp(1.0, k - n - 1));
}

// ---- exact closed forms ----

double mpac_level_exact(double eps, int m) {
    const double a = 0.5 * (1.0 - eps * eps);
    // eps * (1 + a + ... + a^m); the geometric form 1-a^{1+m})/(1-a)
    // degenerates at eps = 1 (a = 0), where the sum is exactly eps.
    double sum = 1.0, pow_a = 1.0;
    for (int i = 1; i <= m; ++i) {
        pow_a *= a;
        sum += pow_a;
    }
    return eps * sum;
}

double mpac_bias_exact(double eps0, int m, int j) {
    if (!is_physical_bias(eps0))
        throw std::invalid_argument("mpac_bias_exact: eps0 outside [-1,1]");
    double eps = eps0;
    for (int level = 0; level < j; ++level) eps = mpac_level_exact(eps, m);
    return eps;
}

double vmpac_bias_exact(double eps0, std::span<const int> m_levels) {
    double eps = eps0;
    for (int m : m_levels) eps = mpac_level_exact(eps, m);
    return eps;
}

double inftypac_bias(double eps0, int j) {
    if (eps0 < 0.0 || eps0 > 1.0)
        throw std::invalid_argument("inftypac_bias: eps0 outside [0,1]");
    double eps = eps0;
    for (int level = 0; level < j; ++level) {
        const double a = 0.5 * (1.0 - eps * eps);
        eps = eps / (1.0 - a);
    }
    return eps;
}

namespace {

std::vector<double> fib_bias_exact_impl(double eps0, int n, auto m_of) {
    if (!is_physical_bias(eps0))
        throw std::invalid_argument("fib_bias_exact: eps0 outside [-1,1]");
    if (n < 2) throw std::invalid_argument("fib_bias_exact: n >= 2");
    std::vector<double> eps{eps0, eps0};
    eps.reserve(static_cast<size_t>(n));
    for (int k = 3; k <= n; ++k) {
        const double a = eps[k - 2], b = eps[k - 3];
        double x = 0.0;
        const int cycles = m_of(k);
        for (int c = 0; c < cycles; ++c) x = comp3_exact(x, a, b);
        eps.push_back(x);
    }
    return eps;
}

}  // namespace

std::vector<double> mfib_bias_exact(double eps0, int m, int n) {
    if (m < 1) throw std::invalid_argument("mfib_bias_exact: m >= 1");
    return fib_bias_exact_impl(eps0, n, [m](int) { return m; });
}

std::vector<double> deltafib_bias_exact(double eps0, int n) {
    return fib_bias_exact_impl(eps0, n, [n](int k) { return n - k + 2; });
}

double expected_msb_linear(const AlgorithmSpec& spec) {
    validate(spec);
    switch (spec.family) {
        case Family::Pac2:
            return mpac_bias_linear(1, (spec.n - 1) / 2);
        case Family::MPac:
            return mpac_bias_linear(spec.m, (spec.n - 1) / 2);
        case Family::VmPac:
            return vmpac_bias_linear(spec.m_levels);
        case Family::Pac3:
            return pac3_bias_linear(spec.n).back();
        case Family::Fernandez:
            return fernandez_bias_linear(spec.m);
        case Family::MFib:
            return mfib_bias_linear(spec.m, spec.n).back();
        case Family::DeltaFib:
            return deltafib_bias_linear(spec.n).back();
        case Family::InftyPac:
            throw std::invalid_argument("inftyPAC has no compiled series");
    }
    throw std::logic_error("unreachable");
}

std::vector<double> expected_series_linear(const AlgorithmSpec& spec) {
    validate(spec);
    if (spec.scope == Scope::MsbOnly && spec.family != Family::MFib &&
        spec.family != Family::DeltaFib)
        throw std::invalid_argument(
            "msb-only schedules pin only the MSB; use expected_msb_linear");
    switch (spec.family) {
        case Family::Pac2:
        case Family::MPac:
        case Family::VmPac: {
            const int levels = (spec.n - 1) / 2;
            auto level_bias = [&](int j) {
                if (spec.family == Family::VmPac)
                    return vmpac_bias_linear(
                        std::span<const int>(spec.m_levels.data(),
                                             static_cast<size_t>(j)));
                return mpac_bias_linear(spec.family == Family::Pac2 ? 1 : spec.m,
                                        j);
            };
            std::vector<double> out(static_cast<size_t>(spec.n));
            out[0] = out[1] = 1.0;
            for (int j = 1; j < levels; ++j)
                out[2 * j] = out[2 * j + 1] = level_bias(j);
            out[static_cast<size_t>(spec.n) - 1] = level_bias(levels);
            return out;
        }
        case Family::Pac3:
            return pac3_bias_linear(spec.n);
        case Family::Fernandez:
            return {1.0, 1.0, fernandez_bias_linear(spec.m)};
        case Family::MFib:
            return mfib_bias_linear(spec.m, spec.n);
        case Family::DeltaFib:
            return deltafib_bias_linear(spec.n);
        case Family::InftyPac:
            throw std::invalid_argument("inftyPAC has no compiled series");
    }
    throw std::logic_error("unreachable");
}

std::vector<double> asymptotic_series(ReferenceSeries series, int n) {
    if (n < 2) throw std::invalid_argument("asymptotic_series: n >= 2");
    std::vector<double> out(static_cast<size_t>(n));
    out[0] = out[1] = 1.0;
    switch (series) {
        case ReferenceSeries::InftyPac:
        case ReferenceSeries::Pac2: {
            if (n % 2 == 0)
                throw std::invalid_argument("PAC series need an odd spin count");
            const double factor =
                series == ReferenceSeries::InftyPac ? 2.0 : 1.5;
            // pairs: spins 2j+1 and 2j+2 sit at factor^j; the MSB at factor^J
            for (int k = 3; k <= n; ++k)
                out[k - 1] = std::pow(factor, (k - 1) / 2);
            break;
        }
        case ReferenceSeries::PpaAllBonacci:
            for (int k = 3; k <= n; ++k) out[k - 1] = std::ldexp(1.0, k - 2);
            break;
        case ReferenceSeries::Fibonacci:
            for (int k = 3; k <= n; ++k)
                out[k - 1] = static_cast<double>(fibonacci_number(k));
            break;
        case ReferenceSeries::Pac3:
            return pac3_bias_linear(n);
    }
    return out;
}

}  // namespace hbac
