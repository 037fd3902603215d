#pragma once

#include <span>
#include <string>
#include <vector>

#include "qpd/cliffords/channels.hpp"

namespace qpd::cliffords {

enum class FitStatus { ok, non_convergence, singular };

/// Power-law decay fit A p^m + B.
struct DecayFit {
    double a = 0.0, p = 0.0, b = 0.0;
    double a_err = 0.0, p_err = 0.0, b_err = 0.0;
    double residual_norm = 0.0;
    FitStatus status = FitStatus::ok;
    std::string message;
};

/// Least-squares fit of A p^m + B to (depths, survivals). The linear
/// parameters are projected out per candidate p; p is bracketed from a
/// log-linear regression on (survival - 0.5) and refined by golden section.
/// Optional per-point weights (1/sigma^2).
DecayFit fit_decay(std::span<const double> depths, std::span<const double> survivals,
                   std::span<const double> weights = {});

/// Average gate fidelity from the reference decay: 1 - (1 - p)/2.
double rb_fidelity(double p_ref);

/// Interleaved gate fidelity 1 - (1 - p_int/p_ref)/2. Sets *unphysical when
/// p_int > p_ref (value still returned).
double irb_fidelity(double p_int, double p_ref, bool* unphysical = nullptr);

/// Single echoPA fidelity from the pseudo-Z interleaved fidelity (sqrt).
double echo_pa_fidelity(double pseudo_z_fidelity);

/// Charge-parity mapping fidelity echoPA * X/2 * Y/2.
double mapping_fidelity(double echo_pa, double f_x_half, double f_y_half);

/// Ideal pseudo-Z algebra: echoPA(s) echoPA'(s) with
/// echoPA = R_Z(s d/4) R_X(pi) R_Z(-s d/4); the composition equals R_Z(s d).
/// At delta = pi both parities land on Z up to global phase.
struct PseudoZReport {
    Matrix composed_even;           // s = +1 branch
    Matrix composed_odd;            // s = -1 branch
    double dist_even_to_target = 0.0;  // |composed - R_Z(+delta)| mod phase
    double dist_odd_to_target = 0.0;   // |composed - R_Z(-delta)| mod phase
    double dist_even_to_z = 0.0;
    double dist_odd_to_z = 0.0;
    double parity_dependence = 0.0;  // |composed_even - composed_odd| mod phase
};
PseudoZReport pseudo_z_compose(double delta);

/// Simulated variant: composes the supplied per-parity echoPA channels and
/// reports average fidelities against R_Z(+-delta) and the channel-level
/// parity dependence (Frobenius distance of the superoperators).
struct PseudoZChannelReport {
    QuantumChannel even;
    QuantumChannel odd;
    double avg_fidelity_even = 0.0;
    double avg_fidelity_odd = 0.0;
    double parity_dependence = 0.0;
};
PseudoZChannelReport pseudo_z_from_channels(const QuantumChannel& echo_pa_even,
                                            const QuantumChannel& echo_pa_prime_even,
                                            const QuantumChannel& echo_pa_odd,
                                            const QuantumChannel& echo_pa_prime_odd,
                                            double delta);

}  // namespace qpd::cliffords
