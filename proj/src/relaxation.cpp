#include "hbac/relaxation.hpp"

#include <cmath>

namespace hbac {

RelaxedReport run_schedule_relaxed(const AlgorithmSpec& spec,
                                   const RelaxConfig& cfg) {
    if (cfg.ratio_R < 1.0)
        throw std::invalid_argument("run_schedule_relaxed: ratio_R >= 1");
    if (cfg.reset_duration <= 0.0)
        throw std::invalid_argument("run_schedule_relaxed: reset_duration > 0");
    validate(spec);

    const double decay_reset = std::exp(-cfg.reset_duration);
    const double decay_comp = std::exp(-cfg.reset_duration / cfg.ratio_R);

    // biases in units of eps0; equilibrium = 1
    std::vector<double> b(static_cast<size_t>(spec.n), 1.0);
    long long resets = 0;

    for_each_op(spec, [&](const PrimitiveOp& op) {
        switch (op.kind) {
            case OpKind::Reset:
                // a reset is a relaxation interval, not an instantaneous set:
                // spin 1 re-thermalizes fast, everything else drifts slowly
                for (size_t k = 0; k < b.size(); ++k) {
                    const double f = k == 0 ? decay_reset : decay_comp;
                    b[k] = 1.0 + (b[k] - 1.0) * f;
                }
                ++resets;
                break;
            case OpKind::Pt:
                std::swap(b[op.s0 - 1], b[op.s1 - 1]);
                break;
            case OpKind::Comp3:
                b[op.s0 - 1] = comp3_linear(b[op.s0 - 1], b[op.s1 - 1],
                                            b[op.s2 - 1]);
                b[op.s1 - 1] = 0.0;
                b[op.s2 - 1] = 0.0;
                break;
        }
    });
    return {std::move(b), resets};
}

}  // namespace hbac
