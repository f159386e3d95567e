/** \file
 * Bias-vector model of heat-bath algorithmic cooling.
 *
 * A register of n spin-half particles is summarized by one polarization bias
 * per spin (spin 1 is the reset spin, spin n the MSB). Three primitive
 * operations act on it:
 *
 *  - RESET(t)      rethermalizes spin t to the heat-bath bias eps0,
 *  - PT(s,t)       polarization transfer, realized as a full state swap,
 *  - COMP3(c,b,a)  3-bit compression |100> <-> |011|, boosting spin c.
 *
 * Two update rules are supported for COMP3: the small-bias linear rule
 * (eps_c + eps_b + eps_a)/2 and the exact rule
 * (eps_c + eps_b + eps_a - eps_c*eps_b*eps_a)/2, selected by Regime.
 *
 * After a compression the two non-target spins are "hot": the model does not
 * track their physical post-compression biases. They are zeroed and flagged;
 * a schedule must either overwrite them (RESET/PT) before the next read --
 * which every PAC-family schedule does -- or be compiled with
 * compressed_reads_allowed, in which case a later compression re-cools them
 * starting from bias 0. The zero restart is what makes the compiled
 * Fibonacci-family schedules land exactly on their published bias series.
 *
 * In the linear regime biases are carried in units of eps0 and may exceed 1;
 * no clamping is performed. The exact rule is closed on [-1,1] by itself.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hbac {

enum class Regime { Linear, Exact };

inline constexpr double kBiasTol = 1e-12;

/// True iff eps is a physically admissible polarization bias.
inline bool is_physical_bias(double eps) { return eps >= -1.0 && eps <= 1.0; }

/// Small-bias compression result for the target spin: (c + b + a) / 2.
inline double comp3_linear(double eps_c, double eps_b, double eps_a) {
    return 0.5 * (eps_c + eps_b + eps_a);
}

/// Exact compression result for the target spin:
/// (c + b + a - c*b*a) / 2. Maps [-1,1]^3 into [-1,1].
inline double comp3_exact(double eps_c, double eps_b, double eps_a) {
    return 0.5 * (eps_c + eps_b + eps_a - eps_c * eps_b * eps_a);
}

enum class OpKind : std::uint8_t { Reset, Pt, Comp3 };

/// One primitive gate. Spin indices are 1-based (spin 1 = reset spin).
struct PrimitiveOp {
    OpKind kind;
    std::int16_t s0, s1, s2;  // Reset: {t,0,0}; Pt: {s,t,0}; Comp3: {c,b,a}

    static PrimitiveOp reset(int target) {
        return {OpKind::Reset, static_cast<std::int16_t>(target), 0, 0};
    }
    static PrimitiveOp pt(int source, int target) {
        return {OpKind::Pt, static_cast<std::int16_t>(source),
                static_cast<std::int16_t>(target), 0};
    }
    static PrimitiveOp comp3(int c, int b, int a) {
        return {OpKind::Comp3, static_cast<std::int16_t>(c),
                static_cast<std::int16_t>(b), static_cast<std::int16_t>(a)};
    }

    bool operator==(const PrimitiveOp&) const = default;
};

std::string to_string(const PrimitiveOp& op);

/// An ordered gate sequence plus derived bookkeeping.
struct Schedule {
    std::vector<PrimitiveOp> ops;
    long long reset_count = 0;  // number of Reset ops in `ops`
    // Compiler hint: the Fibonacci-family recursion re-reads compressed spins
    // (they restart from bias 0); PAC-family schedules never do and run strict.
    bool compressed_reads_allowed = false;

    void push(const PrimitiveOp& op) {
        ops.push_back(op);
        if (op.kind == OpKind::Reset) ++reset_count;
    }
    void append(const Schedule& other) {
        ops.insert(ops.end(), other.ops.begin(), other.ops.end());
        reset_count += other.reset_count;
    }
};

/// Marginal biases of an n-spin register plus execution settings.
class SpinSystem {
  public:
    SpinSystem(std::vector<double> biases, double equilibrium_bias, Regime regime);

    /// All spins thermalized at eps0.
    static SpinSystem equilibrium(int n, double eps0, Regime regime);
    /// All spins at bias 0 (the convention under which every published
    /// bias series is stated); the first RESET injects eps0.
    static SpinSystem cold_start(int n, double eps0, Regime regime);

    int size() const { return static_cast<int>(biases_.size()); }
    double bias(int spin) const { return biases_[check_index(spin)]; }
    const std::vector<double>& biases() const { return biases_; }
    double equilibrium_bias() const { return eps0_; }
    Regime regime() const { return regime_; }

  private:
    friend class BiasEngine;
    int check_index(int spin) const;

    std::vector<double> biases_;  // biases_[k-1] = bias of spin k
    double eps0_;
    Regime regime_;
};

struct RunOptions {
    bool record_trace = false;
    // Overrides the schedule's own flag when set.
    std::optional<bool> compressed_reads_allowed;
};

struct TraceEntry {
    PrimitiveOp op;
    std::vector<double> biases_after;
};

struct RunReport {
    std::vector<double> final_biases;  // final_biases[k-1] = bias of spin k
    long long reset_count = 0;
    long long compressed_reads = 0;  // COMP3 reads of hot (zeroed) spins
    std::optional<std::vector<TraceEntry>> trace;

    double msb_bias() const { return final_biases.back(); }
};

/// Thrown when a strict run reads a hot spin, or an op index is out of range.
class ExecutionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Stepwise executor. Useful when a schedule is too large to materialize:
/// feed ops one at a time and harvest the report at the end.
class BiasEngine {
  public:
    explicit BiasEngine(SpinSystem state, bool compressed_reads_allowed = false);

    void apply(const PrimitiveOp& op);
    const std::vector<double>& biases() const { return state_.biases_; }
    double bias(int spin) const { return state_.bias(spin); }
    long long reset_count() const { return resets_; }
    long long compressed_reads() const { return compressed_reads_; }

    RunReport report() const;

  private:
    SpinSystem state_;
    std::vector<bool> hot_;
    long long resets_ = 0;
    long long compressed_reads_ = 0;
    bool allow_compressed_reads_;
};

/// Applies a single op, returning the new state (functional flavor of
/// BiasEngine::apply; hot flags do not survive across calls, so this is
/// only appropriate for op-level experiments and tests).
SpinSystem apply_op(const SpinSystem& state, const PrimitiveOp& op);

RunReport run_schedule(const SpinSystem& initial, const Schedule& sched,
                       const RunOptions& options = {});

}  // namespace hbac
