// Trace-based STDP. The single source of truth for weight changes.
//
// Each synapse keeps a pre trace P and a post trace Q that decay
// exponentially between spikes and jump by amp_ltp / amp_ltd on arrival.
// A pre spike pairs against the stored post trace (depression), a post
// spike pairs against the stored pre trace (potentiation), with the trace
// decayed over the interval since its own last update. Weights clamp to
// [w_min, w_max] after every change.
#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "snnstdp/hh.hpp" // kNever

namespace snnstdp {

struct StdpParams {
    double tau_ltp = 20.0; // ms
    double tau_ltd = 20.0; // ms
    double amp_ltp = 1.0;  // trace increment on pre spike
    double amp_ltd = -1.0; // trace increment on post spike
    double rate_ltp = 6.0e-5;
    double rate_ltd = 6.3e-5;
    double w_max = 0.02;
    double w_min = 0.0;

    void validate() const {
        if (!(tau_ltp > 0.0) || !(tau_ltd > 0.0))
            throw std::invalid_argument("StdpParams: time constants must be positive");
        if (w_min > w_max) throw std::invalid_argument("StdpParams: w_min > w_max");
        if (rate_ltp < 0.0 || rate_ltd < 0.0)
            throw std::invalid_argument("StdpParams: learning rates must be non-negative");
    }
};

struct SynapseState {
    double w = 0.0;
    double p = 0.0; // pre trace
    double q = 0.0; // post trace
    double t_last_pre = kNever;
    double t_last_post = kNever;
};

namespace detail {
// exp((t_from - t_to) / tau); 0 when there was no previous spike.
inline double trace_decay(double t_from, double t_to, double tau) {
    if (t_from == kNever) return 0.0;
    return std::exp((t_from - t_to) / tau);
}
} // namespace detail

// Pre-synaptic spike at t_pre: refresh P, then depress by the post trace
// decayed from its last update.
inline void on_pre_spike(SynapseState& s, const StdpParams& prm, double t_pre) {
    if (s.t_last_pre != kNever && t_pre < s.t_last_pre)
        throw std::invalid_argument("on_pre_spike: time precedes last pre spike");
    s.p = s.p * detail::trace_decay(s.t_last_pre, t_pre, prm.tau_ltp) + prm.amp_ltp;
    if (s.t_last_post != kNever) {
        const double dwq = prm.rate_ltd * s.q * detail::trace_decay(s.t_last_post, t_pre, prm.tau_ltd);
        s.w = std::clamp(s.w + dwq, prm.w_min, prm.w_max);
    }
    s.t_last_pre = t_pre;
}

// Post-synaptic spike at t_post: refresh Q, then potentiate by the pre
// trace decayed from its last update.
inline void on_post_spike(SynapseState& s, const StdpParams& prm, double t_post) {
    if (s.t_last_post != kNever && t_post < s.t_last_post)
        throw std::invalid_argument("on_post_spike: time precedes last post spike");
    s.q = s.q * detail::trace_decay(s.t_last_post, t_post, prm.tau_ltd) + prm.amp_ltd;
    if (s.t_last_pre != kNever) {
        const double dwp = prm.rate_ltp * s.p * detail::trace_decay(s.t_last_pre, t_post, prm.tau_ltp);
        s.w = std::clamp(s.w + dwp, prm.w_min, prm.w_max);
    }
    s.t_last_post = t_post;
}

} // namespace snnstdp
