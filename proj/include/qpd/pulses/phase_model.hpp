#pragma once

#include <vector>

#include "qpd/pulses/sequence.hpp"
#include "qpd/qdyn/lindblad.hpp"

namespace qpd::pulses {

/// Closed-form Bloch-vector model of a compiled sequence: microwave gates are
/// ideal rotations applied at the pulse center, everything else is free
/// Z precession under the parity-dependent dispersion detuning
/// (phase per window = -2 pi * integral of Delta f_P(ng(t)) dt).
/// This is the oracle the full Lindblad simulations are validated against.
struct PhaseModelResult {
    qdyn::BlochVector final_state;
    std::vector<qdyn::BlochVector> checkpoints;  // initial state + after each segment
};

PhaseModelResult ideal_phase_model(const PulseSequence& seq,
                                   const qdyn::TransmonParams& params, qdyn::Parity parity,
                                   double extra_detuning_ghz = 0.0);

/// Excited-level population implied by the model's final state.
double phase_model_population(const PulseSequence& seq, const qdyn::TransmonParams& params,
                              qdyn::Parity parity, double extra_detuning_ghz = 0.0);

/// Total accumulated parity phase difference |phi_even - phi_odd| in rad, with
/// echo pi-pulses flipping the accumulation sign (both gate pulses of an
/// EchoCPM sum). delta = pi is the charge-parity mapping condition.
double parity_phase_difference(const PulseSequence& seq, const qdyn::TransmonParams& params);

/// Idealized hard-edged, full-swing solution of delta(T) = pi:
/// T = 1/(4 |eps10|), about 209.7 ns for 1.192 MHz.
double theoretical_pi_duration_ns(double abs_epsilon10_mhz);

}  // namespace qpd::pulses
