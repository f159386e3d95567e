#include "hbac/oracle.hpp"

#include <algorithm>
#include <functional>

namespace hbac {

namespace {
using Index = std::size_t;
}

DiagonalState DiagonalState::from_product(std::span<const double> biases) {
    const int n = static_cast<int>(biases.size());
    if (n < 1 || n > kMaxSpins)
        throw std::invalid_argument("DiagonalState: spin count outside 1..24");
    for (double eps : biases)
        if (!is_physical_bias(eps))
            throw std::invalid_argument("DiagonalState: bias outside [-1,1]");

    std::vector<double> probs{1.0};
    probs.reserve(Index{1} << n);
    for (int k = 0; k < n; ++k) {
        const double p_up = 0.5 * (1.0 + biases[k]);
        const double p_down = 0.5 * (1.0 - biases[k]);
        std::vector<double> next(probs.size() * 2);
        for (Index i = 0; i < probs.size(); ++i) {
            next[i] = probs[i] * p_up;
            next[i + probs.size()] = probs[i] * p_down;
        }
        probs = std::move(next);
    }
    return DiagonalState(n, std::move(probs));
}

int DiagonalState::check_spin(int spin) const {
    if (spin < 1 || spin > n_)
        throw ExecutionError("oracle: spin index " + std::to_string(spin) +
                             " out of range 1.." + std::to_string(n_));
    return spin - 1;
}

double DiagonalState::marginal_bias(int spin) const {
    const int bit = check_spin(spin);
    const Index mask = Index{1} << bit;
    double up = 0.0, down = 0.0;
    for (Index i = 0; i < probs_.size(); ++i)
        (i & mask ? down : up) += probs_[i];
    return up - down;
}

std::vector<double> DiagonalState::marginal_biases() const {
    std::vector<double> out(static_cast<size_t>(n_));
    for (int k = 1; k <= n_; ++k) out[k - 1] = marginal_bias(k);
    return out;
}

double DiagonalState::probability_sum() const {
    double s = 0.0;
    for (double p : probs_) s += p;
    return s;
}

void DiagonalState::apply_comp3(int c, int b, int a) {
    const Index cm = Index{1} << check_spin(c);
    const Index bm = Index{1} << check_spin(b);
    const Index am = Index{1} << check_spin(a);
    if (cm == bm || cm == am || bm == am)
        throw ExecutionError("oracle: COMP3 indices must be distinct");
    const Index flip = cm | bm | am;
    for (Index i = 0; i < probs_.size(); ++i) {
        // local pattern |100>: c set, b and a clear; partner is |011>
        if ((i & cm) && !(i & bm) && !(i & am))
            std::swap(probs_[i], probs_[i ^ flip]);
    }
}

void DiagonalState::apply_pt(int s, int t) {
    const Index sm = Index{1} << check_spin(s);
    const Index tm = Index{1} << check_spin(t);
    if (sm == tm) throw ExecutionError("oracle: PT with equal indices");
    for (Index i = 0; i < probs_.size(); ++i) {
        if ((i & sm) && !(i & tm)) std::swap(probs_[i], probs_[i ^ sm ^ tm]);
    }
}

void DiagonalState::apply_reset(int spin, double eps0) {
    const Index mask = Index{1} << check_spin(spin);
    const double p_up = 0.5 * (1.0 + eps0);
    const double p_down = 0.5 * (1.0 - eps0);
    for (Index i = 0; i < probs_.size(); ++i) {
        if (i & mask) continue;
        const Index j = i | mask;
        const double m = probs_[i] + probs_[j];
        probs_[i] = m * p_up;
        probs_[j] = m * p_down;
    }
}

void DiagonalState::sort_descending() {
    std::sort(probs_.begin(), probs_.end(), std::greater<double>());
}

RunReport run_schedule_oracle(DiagonalState state, const Schedule& sched,
                              double eps0) {
    long long resets = 0;
    for (const PrimitiveOp& op : sched.ops) {
        switch (op.kind) {
            case OpKind::Reset:
                state.apply_reset(op.s0, eps0);
                ++resets;
                break;
            case OpKind::Pt:
                state.apply_pt(op.s0, op.s1);
                break;
            case OpKind::Comp3:
                state.apply_comp3(op.s0, op.s1, op.s2);
                break;
        }
    }
    RunReport r;
    r.final_biases = state.marginal_biases();
    r.reset_count = resets;
    return r;
}

}  // namespace hbac
