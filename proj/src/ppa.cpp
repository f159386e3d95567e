#include "hbac/ppa.hpp"

#include <algorithm>
#include <cmath>

namespace hbac {

void ppa_step(DiagonalState& state, double eps0) {
    state.sort_descending();
    state.apply_reset(1, eps0);
}

namespace {

// The run keeps only the pair-sum vector m of the sorted state: after a
// SORT + RESET step the full vector is the interleave of m*u and m*d
// (u,d = up/down reset-spin weights), i.e. two already-sorted halves, so the
// next SORT is a merge instead of a full sort. One step costs O(2^n).
class PairSumLoop {
  public:
    PairSumLoop(const DiagonalState& initial, double eps0)
        : u_(0.5 * (1.0 + eps0)),
          d_(0.5 * (1.0 - eps0)),
          initial_(initial.probabilities()) {}

    /// Advances one SORT + RESET step; returns the MSB bias after it.
    double step() {
        if (!m_.empty()) return merge_step();
        // first step: sort the raw initial state
        std::sort(initial_.begin(), initial_.end(), std::greater<double>());
        m_.resize(initial_.size() / 2);
        next_.resize(m_.size());
        const size_t half = m_.size() / 2;
        double first_half = 0.0, second_half = 0.0;
        for (size_t i = 0; i < m_.size(); ++i) {
            m_[i] = initial_[2 * i] + initial_[2 * i + 1];
            (i < half ? first_half : second_half) += m_[i];
        }
        initial_.clear();
        return first_half - second_half;
    }

  private:
    // After a step the pair-sum vector m represents the post-reset state
    // interleave(m*u, m*d): two already-sorted halves, so the next SORT is a
    // merge of the descending sequences {m_i*u} and {m_i*d}, pair-summed on
    // the fly.
    double merge_step() {
        const size_t len = m_.size();
        size_t ia = 0, ib = 0;
        double pending = 0.0;
        bool have_pending = false;
        size_t out = 0;
        double first_half = 0.0, second_half = 0.0;
        const size_t half = len / 2;
        while (ia < len || ib < len) {
            double v;
            if (ib >= len || (ia < len && m_[ia] * u_ >= m_[ib] * d_))
                v = m_[ia++] * u_;
            else
                v = m_[ib++] * d_;
            if (!have_pending) {
                pending = v;
                have_pending = true;
            } else {
                const double s = pending + v;
                next_[out] = s;
                (out < half ? first_half : second_half) += s;
                ++out;
                have_pending = false;
            }
        }
        m_.swap(next_);
        return first_half - second_half;
    }

    double u_, d_;
    std::vector<double> initial_;
    std::vector<double> m_, next_;
};

std::string convention_string(const PpaConfig& cfg) {
    std::string s = "sort-then-reset, one reset per step, msb read after step, ";
    s += cfg.start_at_equilibrium ? "equilibrium start" : "zero-bias start";
    return s;
}

}  // namespace

PpaResult run_ppa(const PpaConfig& cfg) {
    if (cfg.n < 2 || cfg.n > DiagonalState::kMaxSpins)
        throw std::invalid_argument("run_ppa: n outside 2..24");
    if (!is_physical_bias(cfg.eps0) || cfg.eps0 <= 0.0)
        throw std::invalid_argument("run_ppa: eps0 must be in (0,1]");

    PpaResult result;
    result.convention = convention_string(cfg);

    const std::vector<double> init_biases(
        static_cast<size_t>(cfg.n), cfg.start_at_equilibrium ? cfg.eps0 : 0.0);
    const DiagonalState initial = DiagonalState::from_product(init_biases);

    if (cfg.stop.kind == PpaStop::Kind::AfterResets && cfg.stop.resets == 0) {
        result.msb_bias = initial.marginal_bias(cfg.n);
        result.msb_bias_units = result.msb_bias / cfg.eps0;
        return result;
    }

    PairSumLoop loop(initial, cfg.eps0);

    // the hard ceiling on any PPA bias; targets beyond it never terminate
    const double supremum_units = std::ldexp(1.0, cfg.n - 1);
    if (cfg.stop.kind == PpaStop::Kind::TargetMsbBias &&
        cfg.stop.target_units > supremum_units) {
        result.reached = false;
        return result;
    }

    const double stall_tol =
        cfg.stop.kind == PpaStop::Kind::Converged ? cfg.stop.tol : 1e-9;
    double prev = 0.0;
    int streak = 0;
    for (long long t = 1; t <= cfg.max_steps; ++t) {
        const double msb = loop.step();
        const double units = msb / cfg.eps0;
        if (cfg.record_msb_trace) result.msb_trace_units.push_back(units);
        result.msb_bias = msb;
        result.msb_bias_units = units;
        result.resets = t;

        switch (cfg.stop.kind) {
            case PpaStop::Kind::AfterResets:
                if (t == cfg.stop.resets) return result;
                break;
            case PpaStop::Kind::TargetMsbBias:
                if (units >= cfg.stop.target_units) return result;
                break;
            case PpaStop::Kind::Converged:
                break;
        }

        // stall detection doubles as the Converged stop
        if (t > 1 &&
            std::abs(msb - prev) <= stall_tol * std::max(std::abs(msb),
                                                         cfg.eps0)) {
            if (++streak >= cfg.converge_window) {
                if (cfg.stop.kind == PpaStop::Kind::Converged) return result;
                if (cfg.stop.kind == PpaStop::Kind::TargetMsbBias) {
                    result.reached = false;  // converged below the target
                    return result;
                }
            }
        } else {
            streak = 0;
        }
        prev = msb;
    }
    if (cfg.stop.kind != PpaStop::Kind::AfterResets) result.reached = false;
    return result;
}

}  // namespace hbac
