#pragma once

#include <vector>

namespace qpd::qdyn {

// Unit conventions used throughout the dynamics code:
//   frequencies  GHz        (f01, eta; epsilon_k in MHz)
//   times        ns         (pulse timeline), us (coherence times)
//   Hamiltonians rad/ns     (angular frequency)

/// Charge parity of the qubit: even = -1, odd = +1. Toggled by one
/// quasiparticle tunneling event.
enum class Parity : int { even = -1, odd = +1 };

inline int parity_value(Parity p) { return static_cast<int>(p); }
inline Parity flip(Parity p) { return p == Parity::even ? Parity::odd : Parity::even; }

/// Device constants of the offset-charge-tunable transmon.
struct TransmonParams {
    double f01_ghz = 0.0;             // qubit transition frequency
    double eta_ghz = 0.0;             // anharmonicity magnitude, f12 = f01 - eta
    std::vector<double> epsilon_mhz;  // per-level charge-dispersion amplitudes, K entries
    double t1_us = 0.0;               // relaxation time
    double t2_echo_us = 0.0;          // echo dephasing time
    double t2_ramsey_us = 0.0;        // Ramsey dephasing time
    int levels = 3;                   // truncation K >= 3

    /// Default device profile (coherence values at ng = 0.5, where the gate
    /// pulses dwell).
    static TransmonParams paper_device(int levels = 3);

    /// Throws ConfigError when any invariant is violated.
    void validate() const;

    double epsilon10_mhz() const { return epsilon_mhz[1] - epsilon_mhz[0]; }
    double abs_epsilon10_ghz() const;
};

/// Fills the dispersion ladder for K levels given the signed 0-1 dispersion
/// difference, using the transmon large-EJ/EC asymptotics for the ratios
/// eps_{k+1}/eps_k = -16/(k+1) * sqrt(EJ/2EC) with EC ~ eta,
/// EJ ~ (f01+EC)^2/(8 EC). Only eps1 - eps0 is pinned by experiment; the
/// higher levels matter solely for leakage-level phases.
std::vector<double> default_epsilon_ladder(double f01_ghz, double eta_ghz,
                                           double epsilon10_signed_mhz, int levels);

}  // namespace qpd::qdyn
