// Hodgkin-Huxley membrane dynamics for the output neurons.
//
// Classic squid-axon parameter set shifted to a resting potential near
// -65 mV. Integration is fixed-step RK4; spikes are upward threshold
// crossings gated by a detection-level refractory period (the 25 ms
// refractory used here is far longer than the channels' own recovery, so
// it is enforced on spike events rather than in the channel dynamics).
#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace snnstdp {

inline constexpr double kNever = -std::numeric_limits<double>::infinity();

struct HHParams {
    double c_m = 1.0;    // membrane capacitance, uF/cm^2
    double g_na = 120.0; // mS/cm^2
    double g_k = 36.0;
    double g_l = 0.3;
    double e_na = 50.0;  // mV
    double e_k = -77.0;
    double e_l = -54.4;
    double v_thresh = 0.0;  // spike detection threshold, mV
    double t_refrac = 25.0; // ms

    void validate() const {
        if (!(c_m > 0.0)) throw std::invalid_argument("HHParams: c_m must be positive");
        if (g_na < 0.0 || g_k < 0.0 || g_l < 0.0)
            throw std::invalid_argument("HHParams: conductances must be non-negative");
        if (!(e_k < e_l && e_l < e_na))
            throw std::invalid_argument("HHParams: require e_k < e_l < e_na");
        if (t_refrac < 0.0) throw std::invalid_argument("HHParams: t_refrac must be non-negative");
    }
};

struct MembraneState {
    double v = -65.0;
    double m = 0.0;
    double h = 0.0;
    double n = 0.0;
    double t_last_spike = kNever; // ms
};

// Rectangular current injection used to force a spike on an output neuron.
struct StimulusPulse {
    double onset = 0.0;      // ms
    double duration = 2.0;   // ms
    double amplitude = 50.0; // uA/cm^2

    void validate() const {
        if (!(duration > 0.0)) throw std::invalid_argument("StimulusPulse: duration must be positive");
        if (!(amplitude > 0.0)) throw std::invalid_argument("StimulusPulse: amplitude must be positive");
    }
};

// x / (e^x - 1), continuous through x = 0. Keeps the alpha_m / alpha_n
// rate expressions finite at their removable singularities.
inline double exprelr(double x) {
    if (std::fabs(x) < 1e-9) return 1.0 - 0.5 * x;
    return x / std::expm1(x);
}

inline double alpha_m(double v) { return exprelr(-(v + 40.0) / 10.0); }
inline double beta_m(double v) { return 4.0 * std::exp(-(v + 65.0) / 18.0); }
inline double alpha_h(double v) { return 0.07 * std::exp(-(v + 65.0) / 20.0); }
inline double beta_h(double v) { return 1.0 / (1.0 + std::exp(-(v + 35.0) / 10.0)); }
inline double alpha_n(double v) { return 0.1 * exprelr(-(v + 55.0) / 10.0); }
inline double beta_n(double v) { return 0.125 * std::exp(-(v + 65.0) / 80.0); }

inline double m_inf(double v) { return alpha_m(v) / (alpha_m(v) + beta_m(v)); }
inline double h_inf(double v) { return alpha_h(v) / (alpha_h(v) + beta_h(v)); }
inline double n_inf(double v) { return alpha_n(v) / (alpha_n(v) + beta_n(v)); }

// Steady-state membrane current at voltage v with gates at equilibrium.
inline double steady_state_current(double v, const HHParams& p) {
    double m = m_inf(v), h = h_inf(v), n = n_inf(v);
    return -(p.g_na * m * m * m * h * (v - p.e_na) + p.g_k * n * n * n * n * (v - p.e_k) +
             p.g_l * (v - p.e_l));
}

// Resting potential as the zero-input fixed point, found by bisection on
// the steady-state current over the subthreshold range.
inline double resting_potential(const HHParams& p) {
    double lo = -90.0, hi = -40.0;
    double flo = steady_state_current(lo, p);
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        double fmid = steady_state_current(mid, p);
        if ((flo <= 0.0) == (fmid <= 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

inline MembraneState resting_state(const HHParams& p) {
    MembraneState s;
    s.v = resting_potential(p);
    s.m = m_inf(s.v);
    s.h = h_inf(s.v);
    s.n = n_inf(s.v);
    s.t_last_spike = kNever;
    return s;
}

namespace detail {

struct HHDeriv {
    double dv, dm, dh, dn;
};

// i_ext is a constant current density over the stage; the synaptic term is
// a conductance g_e toward reversal e_syn so it tracks v within the step.
inline HHDeriv hh_deriv(double v, double m, double h, double n, const HHParams& p, double i_ext,
                        double g_e, double e_syn) {
    HHDeriv d;
    const double i_ion = p.g_na * m * m * m * h * (v - p.e_na) + p.g_k * n * n * n * n * (v - p.e_k) +
                         p.g_l * (v - p.e_l);
    d.dv = (i_ext + g_e * (e_syn - v) - i_ion) / p.c_m;
    d.dm = alpha_m(v) * (1.0 - m) - beta_m(v) * m;
    d.dh = alpha_h(v) * (1.0 - h) - beta_h(v) * h;
    d.dn = alpha_n(v) * (1.0 - n) - beta_n(v) * n;
    return d;
}

inline double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

} // namespace detail

// One RK4 step of length dt. The synaptic conductance is sampled at the
// stage times (g0 at t, g_mid at t+dt/2, g1 at t+dt); pass zeros for a
// current-only step.
inline MembraneState step(const MembraneState& s, const HHParams& p, double i_ext, double g0,
                          double g_mid, double g1, double e_syn, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("hh::step: dt must be positive");
    if (!std::isfinite(s.v) || !std::isfinite(s.m) || !std::isfinite(s.h) || !std::isfinite(s.n) ||
        !std::isfinite(i_ext) || !std::isfinite(g0) || !std::isfinite(g_mid) || !std::isfinite(g1))
        throw std::invalid_argument("hh::step: non-finite input");

    using detail::hh_deriv;
    const auto k1 = hh_deriv(s.v, s.m, s.h, s.n, p, i_ext, g0, e_syn);
    const double hdt = 0.5 * dt;
    const auto k2 = hh_deriv(s.v + hdt * k1.dv, s.m + hdt * k1.dm, s.h + hdt * k1.dh,
                             s.n + hdt * k1.dn, p, i_ext, g_mid, e_syn);
    const auto k3 = hh_deriv(s.v + hdt * k2.dv, s.m + hdt * k2.dm, s.h + hdt * k2.dh,
                             s.n + hdt * k2.dn, p, i_ext, g_mid, e_syn);
    const auto k4 = hh_deriv(s.v + dt * k3.dv, s.m + dt * k3.dm, s.h + dt * k3.dh, s.n + dt * k3.dn,
                             p, i_ext, g1, e_syn);

    MembraneState out = s;
    const double w = dt / 6.0;
    out.v = s.v + w * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv);
    out.m = detail::clamp01(s.m + w * (k1.dm + 2.0 * k2.dm + 2.0 * k3.dm + k4.dm));
    out.h = detail::clamp01(s.h + w * (k1.dh + 2.0 * k2.dh + 2.0 * k3.dh + k4.dh));
    out.n = detail::clamp01(s.n + w * (k1.dn + 2.0 * k2.dn + 2.0 * k3.dn + k4.dn));
    return out;
}

// Constant synaptic current variant matching the plain operation contract.
inline MembraneState step(const MembraneState& s, const HHParams& p, double i_ext, double i_syn,
                          double dt) {
    return step(s, p, i_ext + i_syn, 0.0, 0.0, 0.0, 0.0, dt);
}

inline bool crossed_threshold(const MembraneState& prev, const MembraneState& next,
                              const HHParams& p) {
    return prev.v < p.v_thresh && next.v >= p.v_thresh;
}

// True iff v crossed v_thresh upward between prev and next and the neuron
// is past its refractory period; records the spike time on success.
inline bool detect_spike(const MembraneState& prev, MembraneState& next, const HHParams& p,
                         double t) {
    if (!crossed_threshold(prev, next, p)) return false;
    if (t - next.t_last_spike < p.t_refrac) return false;
    next.t_last_spike = t;
    return true;
}

} // namespace snnstdp
