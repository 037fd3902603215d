#pragma once

#include <complex>

namespace qpd::pulses {

/// Microwave drive pulse: cosine-flank envelope with DRAG quadrature,
/// zero-padded by `buffer_ns` on each side. Total span = duration + 2*buffer.
/// `amplitude` is the signed peak Rabi rate (rad/ns); the rotation angle is
/// amplitude * duration / 2. `phase` sets the rotation axis (0 = X, pi/2 = Y).
struct MicrowavePulse {
    double duration_ns = 20.0;
    double buffer_ns = 5.0;
    double amplitude = 0.0;
    double phase = 0.0;
    double drag_coefficient = 0.0;
    double drive_freq_ghz = 0.0;

    double span_ns() const { return duration_ns + 2.0 * buffer_ns; }
    double rotation_angle() const { return amplitude * duration_ns / 2.0; }
};

/// Pulse implementing a rotation by `angle` about the equatorial axis at
/// `axis_phase`, with the amplitude solved from the envelope area.
MicrowavePulse mw_pulse_for_rotation(double angle_rad, double axis_phase_rad,
                                     double duration_ns, double buffer_ns,
                                     double drag_coefficient);

/// In-phase + quadrature envelope at local time `t_local` ns measured from the
/// segment start (buffers included). Zero inside the buffers.
///   Omega(t) = (amplitude/2) (1 - cos(2 pi (t - buffer)/duration))
///   quadrature = (drag/(2 pi eta)) dOmega/dt
/// The axis phase is applied at Hamiltonian assembly, not here.
std::complex<double> drag_envelope(const MicrowavePulse& p, double t_local_ns,
                                   double eta_ghz);

/// Smoothed-square (erf-edged) gate displacement on the charge axis.
/// t0 is the absolute start of the flat top; value(t0 + T/2) ~ amplitude
/// for T >= 10 sigma.
struct SmoothedSquare {
    double t0_ns = 0.0;
    double flat_top_ns = 0.0;   // T
    double sigma_ns = 0.0;      // edge smoothness
    double amplitude_2e = 0.0;  // offset-charge displacement
};

/// (A/2) [erf((t-t0)/(sqrt2 sigma)) - erf((t-t0-T)/(sqrt2 sigma))].
double smoothed_square_value(const SmoothedSquare& p, double t_ns);

/// Net-zero gate pulse: two equal-magnitude, opposite-sign smoothed squares.
/// The time integral of ng(t) - ng0 over the full span vanishes.
struct GatePulseNetZero {
    double ng0 = 0.25;
    SmoothedSquare first;
    SmoothedSquare second;  // amplitude -A
};

GatePulseNetZero make_net_zero(double ng0, double amplitude_2e, double flat_top_ns,
                               double sigma_ns, double t1_ns, double t2_ns);

double ng_of_t(const GatePulseNetZero& g, double t_ns);

}  // namespace qpd::pulses
