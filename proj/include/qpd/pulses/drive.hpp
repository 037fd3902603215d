#pragma once

#include "qpd/pulses/sequence.hpp"
#include "qpd/qdyn/lindblad.hpp"

namespace qpd::pulses {

/// Assembles H(t) in the frame rotating at the sequence drive frequency
/// (the degeneracy-point qubit frequency): transmon ladder minus the frame
/// term, the charge-dispersion diagonal following ng(t), and the RWA drive
/// 1/2 (E(t) e^{-i phase} a^dag + h.c.) during microwave segments.
/// `extra_detuning_ghz` adds a quasi-static qubit-frequency offset (k per
/// level), used for noise-injection studies.
qdyn::HamiltonianFn rotating_frame_hamiltonian(const qdyn::TransmonParams& params,
                                               const PulseSequence& seq,
                                               qdyn::Parity parity,
                                               double extra_detuning_ghz = 0.0);

}  // namespace qpd::pulses
