#include "qpd/pulses/envelopes.hpp"

#include <cmath>

namespace qpd::pulses {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kSqrt2 = 1.4142135623730950488016887242097;
}  // namespace

MicrowavePulse mw_pulse_for_rotation(double angle_rad, double axis_phase_rad,
                                     double duration_ns, double buffer_ns,
                                     double drag_coefficient) {
    MicrowavePulse p;
    p.duration_ns = duration_ns;
    p.buffer_ns = buffer_ns;
    p.amplitude = 2.0 * angle_rad / duration_ns;
    p.phase = axis_phase_rad;
    p.drag_coefficient = drag_coefficient;
    return p;
}

std::complex<double> drag_envelope(const MicrowavePulse& p, double t_local_ns,
                                   double eta_ghz) {
    const double t = t_local_ns - p.buffer_ns;
    if (t <= 0.0 || t >= p.duration_ns) return {0.0, 0.0};
    const double w = kTwoPi / p.duration_ns;
    const double omega = 0.5 * p.amplitude * (1.0 - std::cos(w * t));
    if (p.drag_coefficient == 0.0) return {omega, 0.0};
    const double domega = 0.5 * p.amplitude * w * std::sin(w * t);
    // positive quadrature cancels the first-order phase error for f12 < f01
    const double quad = p.drag_coefficient / (kTwoPi * eta_ghz) * domega;
    return {omega, quad};
}

double smoothed_square_value(const SmoothedSquare& p, double t_ns) {
    const double s = kSqrt2 * p.sigma_ns;
    return 0.5 * p.amplitude_2e *
           (std::erf((t_ns - p.t0_ns) / s) - std::erf((t_ns - p.t0_ns - p.flat_top_ns) / s));
}

GatePulseNetZero make_net_zero(double ng0, double amplitude_2e, double flat_top_ns,
                               double sigma_ns, double t1_ns, double t2_ns) {
    GatePulseNetZero g;
    g.ng0 = ng0;
    g.first = SmoothedSquare{t1_ns, flat_top_ns, sigma_ns, amplitude_2e};
    g.second = SmoothedSquare{t2_ns, flat_top_ns, sigma_ns, -amplitude_2e};
    return g;
}

double ng_of_t(const GatePulseNetZero& g, double t_ns) {
    return g.ng0 + smoothed_square_value(g.first, t_ns) + smoothed_square_value(g.second, t_ns);
}

}  // namespace qpd::pulses
