#include "qpd/qdyn/lindblad.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "qpd/common/errors.hpp"

namespace qpd::qdyn {

namespace {

/// Workspace for the RK4 stages; allocations happen once per evolve call.
struct Rk4Workspace {
    Matrix h, k1, k2, k3, k4, stage, tmp;
    std::vector<Matrix> l_dag;
    std::vector<Matrix> ldl_half;  // 1/2 L^dag L

    Rk4Workspace(int dim, const std::vector<Matrix>& collapse) {
        h = Matrix::Zero(dim, dim);
        k1 = k2 = k3 = k4 = stage = tmp = h;
        for (const Matrix& l : collapse) {
            l_dag.push_back(l.adjoint());
            ldl_half.push_back(0.5 * l.adjoint() * l);
        }
    }
};

void lindblad_rhs(const Matrix& h, const std::vector<Matrix>& collapse, Rk4Workspace& w,
                  const Matrix& rho, Matrix& out) {
    const Complex minus_i(0.0, -1.0);
    out.noalias() = minus_i * (h * rho);
    out.noalias() -= minus_i * (rho * h);
    for (std::size_t j = 0; j < collapse.size(); ++j) {
        w.tmp.noalias() = collapse[j] * rho;
        out.noalias() += w.tmp * w.l_dag[j];
        out.noalias() -= w.ldl_half[j] * rho;
        out.noalias() -= rho * w.ldl_half[j];
    }
}

void rk4_step(const HamiltonianFn& h_of_t, const std::vector<Matrix>& collapse,
              Rk4Workspace& w, Matrix& rho, double t, double dt) {
    h_of_t(t, w.h);
    lindblad_rhs(w.h, collapse, w, rho, w.k1);

    h_of_t(t + 0.5 * dt, w.h);
    w.stage = rho + (0.5 * dt) * w.k1;
    lindblad_rhs(w.h, collapse, w, w.stage, w.k2);

    w.stage = rho + (0.5 * dt) * w.k2;
    lindblad_rhs(w.h, collapse, w, w.stage, w.k3);

    h_of_t(t + dt, w.h);
    w.stage = rho + dt * w.k3;
    lindblad_rhs(w.h, collapse, w, w.stage, w.k4);

    rho += (dt / 6.0) * w.k1 + (dt / 3.0) * (w.k2 + w.k3) + (dt / 6.0) * w.k4;
}

}  // namespace

Matrix lindblad_evolve(const HamiltonianFn& h_of_t, const std::vector<Matrix>& collapse,
                       const Matrix& rho0, double t_start_ns, double t_end_ns,
                       const LindbladOptions& opts) {
    if (rho0.rows() != rho0.cols()) throw ConfigError("lindblad_evolve: rho0 must be square");
    if (!(opts.dt_ns > 0.0)) throw ConfigError("lindblad_evolve: dt must be positive");
    if (t_end_ns < t_start_ns) throw ConfigError("lindblad_evolve: t_end before t_start");
    for (const Matrix& l : collapse) {
        if (l.rows() != rho0.rows() || l.cols() != rho0.cols())
            throw ConfigError("lindblad_evolve: collapse operator dimension mismatch");
    }

    const int dim = static_cast<int>(rho0.rows());
    Rk4Workspace w(dim, collapse);
    Matrix rho = rho0;
    const Complex trace0 = rho0.trace();

    const double span = t_end_ns - t_start_ns;
    const auto n_full = static_cast<long long>(std::floor(span / opts.dt_ns));
    double t = t_start_ns;
    for (long long i = 0; i < n_full; ++i) {
        rk4_step(h_of_t, collapse, w, rho, t, opts.dt_ns);
        t = t_start_ns + static_cast<double>(i + 1) * opts.dt_ns;
    }
    const double rem = t_end_ns - t;
    if (rem > 1e-12 * std::max(1.0, span)) rk4_step(h_of_t, collapse, w, rho, t, rem);

    // the generator is trace-free, so the initial trace must be preserved
    const double drift = std::abs(rho.trace() - trace0);
    if (drift > opts.trace_tol) {
        throw NumericalError("lindblad_evolve: trace drift " + std::to_string(drift) +
                             " exceeds tolerance; use a smaller dt");
    }
    return rho;
}

double state_fidelity(const Matrix& rho, const Vector& target_pure) {
    if (rho.rows() != target_pure.size())
        throw ConfigError("state_fidelity: dimension mismatch");
    const Complex f = target_pure.adjoint() * rho * target_pure;
    return f.real();
}

DensityCheck check_density(const Matrix& rho) {
    DensityCheck c;
    c.hermiticity_dev = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    const Complex tr = rho.trace();
    c.trace_dev = std::abs(tr - Complex(1.0, 0.0));
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (rho + rho.adjoint()));
    c.min_eigenvalue = es.eigenvalues().minCoeff();
    return c;
}

Matrix level_projector(int levels, int k) {
    Matrix rho = Matrix::Zero(levels, levels);
    rho(k, k) = 1.0;
    return rho;
}

Vector level_state(int levels, int k) {
    Vector v = Vector::Zero(levels);
    v(k) = 1.0;
    return v;
}

BlochVector qubit_bloch(const Matrix& rho) {
    BlochVector b;
    b.x = 2.0 * rho(0, 1).real();
    b.y = -2.0 * rho(0, 1).imag();
    b.z = rho(0, 0).real() - rho(1, 1).real();
    return b;
}

}  // namespace qpd::qdyn
