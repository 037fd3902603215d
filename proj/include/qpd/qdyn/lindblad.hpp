#pragma once

#include <functional>
#include <vector>

#include "qpd/qdyn/operators.hpp"

namespace qpd::qdyn {

/// Fills `h_out` (rad/ns, Hermitian) with the Hamiltonian at time t (ns).
/// The buffer is preallocated by the integrator and reused across steps.
using HamiltonianFn = std::function<void(double t_ns, Matrix& h_out)>;

struct LindbladOptions {
    double dt_ns = 0.02;      // fixed RK4 step, rotating-frame scale
    double trace_tol = 1e-6;  // drift beyond this is an integration failure
};

/// Fixed-step RK4 integration of
///   drho/dt = -i[H, rho] + sum_j (L_j rho L_j^dag - 1/2 {L_j^dag L_j, rho})
/// from t_start to t_end. Throws NumericalError when the trace drifts by more
/// than trace_tol (suggests a smaller dt).
Matrix lindblad_evolve(const HamiltonianFn& h_of_t, const std::vector<Matrix>& collapse,
                       const Matrix& rho0, double t_start_ns, double t_end_ns,
                       const LindbladOptions& opts = {});

/// <psi|rho|psi> for a normalized pure target. Throws on dimension mismatch.
double state_fidelity(const Matrix& rho, const Vector& target_pure);

struct DensityCheck {
    double hermiticity_dev = 0.0;  // max |rho - rho^dag|
    double trace_dev = 0.0;        // |tr(rho) - 1|
    double min_eigenvalue = 0.0;

    bool physical(double herm_tol = 1e-10, double trace_tol = 1e-9,
                  double eig_tol = -1e-9) const {
        return hermiticity_dev <= herm_tol && trace_dev <= trace_tol &&
               min_eigenvalue >= eig_tol;
    }
};

DensityCheck check_density(const Matrix& rho);

/// Density matrix of the pure level state |k>.
Matrix level_projector(int levels, int k);
Vector level_state(int levels, int k);

/// Bloch vector (x, y, z) of the 0-1 block of rho.
struct BlochVector {
    double x = 0.0, y = 0.0, z = 0.0;
};

BlochVector qubit_bloch(const Matrix& rho);

}  // namespace qpd::qdyn
