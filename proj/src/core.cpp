#include "hbac/core.hpp"

#include <sstream>

namespace hbac {

std::string to_string(const PrimitiveOp& op) {
    std::ostringstream out;
    switch (op.kind) {
        case OpKind::Reset: out << "RESET(" << op.s0 << ")"; break;
        case OpKind::Pt: out << "PT(" << op.s0 << "->" << op.s1 << ")"; break;
        case OpKind::Comp3:
            out << "COMP3(" << op.s0 << "," << op.s1 << "," << op.s2 << ")";
            break;
    }
    return out.str();
}

SpinSystem::SpinSystem(std::vector<double> biases, double equilibrium_bias,
                       Regime regime)
    : biases_(std::move(biases)), eps0_(equilibrium_bias), regime_(regime) {
    if (biases_.empty()) throw std::invalid_argument("SpinSystem: no spins");
    if (!is_physical_bias(eps0_))
        throw std::invalid_argument("SpinSystem: equilibrium bias outside [-1,1]");
    if (regime_ == Regime::Exact) {
        for (double b : biases_)
            if (!is_physical_bias(b))
                throw std::invalid_argument("SpinSystem: bias outside [-1,1]");
    }
}

SpinSystem SpinSystem::equilibrium(int n, double eps0, Regime regime) {
    if (n < 1) throw std::invalid_argument("SpinSystem: n must be positive");
    return SpinSystem(std::vector<double>(static_cast<size_t>(n), eps0), eps0,
                      regime);
}

SpinSystem SpinSystem::cold_start(int n, double eps0, Regime regime) {
    if (n < 1) throw std::invalid_argument("SpinSystem: n must be positive");
    return SpinSystem(std::vector<double>(static_cast<size_t>(n), 0.0), eps0,
                      regime);
}

int SpinSystem::check_index(int spin) const {
    if (spin < 1 || spin > size())
        throw ExecutionError("spin index " + std::to_string(spin) +
                             " out of range 1.." + std::to_string(size()));
    return spin - 1;
}

BiasEngine::BiasEngine(SpinSystem state, bool compressed_reads_allowed)
    : state_(std::move(state)),
      hot_(state_.biases_.size(), false),
      allow_compressed_reads_(compressed_reads_allowed) {}

void BiasEngine::apply(const PrimitiveOp& op) {
    auto& b = state_.biases_;
    switch (op.kind) {
        case OpKind::Reset: {
            const int t = state_.check_index(op.s0);
            b[t] = state_.eps0_;
            hot_[t] = false;
            ++resets_;
            break;
        }
        case OpKind::Pt: {
            const int s = state_.check_index(op.s0);
            const int t = state_.check_index(op.s1);
            if (s == t) throw ExecutionError("PT with equal indices");
            std::swap(b[s], b[t]);
            // the displaced value keeps its hot flag
            const bool hs = hot_[s];
            hot_[s] = hot_[t];
            hot_[t] = hs;
            break;
        }
        case OpKind::Comp3: {
            const int c = state_.check_index(op.s0);
            const int bb = state_.check_index(op.s1);
            const int a = state_.check_index(op.s2);
            if (c == bb || c == a || bb == a)
                throw ExecutionError("COMP3 indices must be distinct");
            if (hot_[c] || hot_[bb] || hot_[a]) {
                ++compressed_reads_;
                if (!allow_compressed_reads_)
                    throw ExecutionError(
                        "COMP3 reads a compressed spin; schedule was not "
                        "compiled with compressed_reads_allowed");
            }
            b[c] = state_.regime_ == Regime::Linear
                       ? comp3_linear(b[c], b[bb], b[a])
                       : comp3_exact(b[c], b[bb], b[a]);
            hot_[c] = false;
            // entropy was dumped into b and a; their physical biases are not
            // modeled -- re-cooling restarts them from 0
            b[bb] = 0.0;
            b[a] = 0.0;
            hot_[bb] = true;
            hot_[a] = true;
            break;
        }
    }
}

RunReport BiasEngine::report() const {
    RunReport r;
    r.final_biases = state_.biases_;
    r.reset_count = resets_;
    r.compressed_reads = compressed_reads_;
    return r;
}

SpinSystem apply_op(const SpinSystem& state, const PrimitiveOp& op) {
    BiasEngine engine(state, /*compressed_reads_allowed=*/true);
    engine.apply(op);
    return SpinSystem(engine.biases(), state.equilibrium_bias(), state.regime());
}

RunReport run_schedule(const SpinSystem& initial, const Schedule& sched,
                       const RunOptions& options) {
    BiasEngine engine(initial, options.compressed_reads_allowed.value_or(
                                   sched.compressed_reads_allowed));
    std::vector<TraceEntry> trace;
    if (options.record_trace) trace.reserve(sched.ops.size());
    for (const PrimitiveOp& op : sched.ops) {
        engine.apply(op);
        if (options.record_trace) trace.push_back({op, engine.biases()});
    }
    RunReport r = engine.report();
    if (options.record_trace) r.trace = std::move(trace);
    return r;
}

}  // namespace hbac
