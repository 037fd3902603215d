#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "qpd/qdyn/transmon.hpp"

namespace qpd::qdyn {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double two_pi = 6.283185307179586476925286766559;

/// Lowering operator a on K levels, <k|a|k+1> = sqrt(k+1).
Matrix lowering_op(int levels);
Matrix number_op(int levels);

/// Static transmon ladder, diag 2*pi*(k*f01 - eta/2 * k(k-1)) in rad/ns.
/// Sign convention: f12 = f01 - eta. Rejects levels < 2.
Matrix static_hamiltonian(const TransmonParams& params);

/// Same ladder expressed in the frame rotating at `frame_freq_ghz` per photon,
/// i.e. minus 2*pi*frame*k on the diagonal.
Matrix static_hamiltonian_rotating(const TransmonParams& params, double frame_freq_ghz);

/// Charge-dispersion term: diag -(1/2) * 2*pi * eps_k * cos(2*pi*(ng + (P-1)/4))
/// in rad/ns (appendix sign convention). Periodic in ng, any real accepted.
Matrix dispersion_hamiltonian(const TransmonParams& params, double ng, Parity parity);

/// 0-1 transition frequency including the dispersion shift (GHz).
/// Degenerate between parities at ng = 0.5 n + 0.25.
double parity_frequency_ghz(const TransmonParams& params, double ng, Parity parity);

/// |f_even - f_odd| = |eps10 * cos(2*pi*ng)| in GHz.
double parity_splitting_ghz(const TransmonParams& params, double ng);

enum class DephasingSource { echo, ramsey };

/// Collapse operators: sqrt(1/T1) a and sqrt(2*Gamma_phi) a^dag a with
/// Gamma_phi = 1/T2 - 1/(2 T1) >= 0. Rates in 1/ns. Rejects T2 > 2 T1.
std::vector<Matrix> collapse_operators(const TransmonParams& params, DephasingSource source);

/// Pure-dephasing rate 1/T2 - 1/(2 T1) in 1/us.
double pure_dephasing_rate_per_us(const TransmonParams& params, DephasingSource source);

}  // namespace qpd::qdyn
