#include "qpd/cliffords/channels.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "qpd/common/errors.hpp"
#include "qpd/pulses/drive.hpp"

namespace qpd::cliffords {

using qdyn::Complex;

QuantumChannel QuantumChannel::identity(int dim) {
    return QuantumChannel(dim, Matrix::Identity(dim * dim, dim * dim));
}

QuantumChannel QuantumChannel::unitary(const Matrix& u) {
    const int d = static_cast<int>(u.rows());
    // vec(U rho U^dag) = (conj(U) kron U) vec(rho), column-major vec
    Matrix s(d * d, d * d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            s.block(i * d, j * d, d, d) = std::conj(u(i, j)) * u;
        }
    }
    return QuantumChannel(d, std::move(s));
}

QuantumChannel QuantumChannel::depolarizing(int dim, double p) {
    if (p < 0.0 || p > 1.0) throw ConfigError("depolarizing: p must be in [0,1]");
    Matrix s = p * Matrix::Identity(dim * dim, dim * dim);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim * dim);
    for (int k = 0; k < dim; ++k) v(k * dim + k) = 1.0;
    s += ((1.0 - p) / dim) * (v * v.adjoint());
    return QuantumChannel(dim, std::move(s));
}

QuantumChannel QuantumChannel::thermal(double t_ns, double t1_ns, double t2_ns) {
    const double gamma = 1.0 - std::exp(-t_ns / t1_ns);
    const double coh = std::exp(-t_ns / t2_ns);
    // basis order (00, 10, 01, 11) of vec(rho)
    Matrix s = Matrix::Zero(4, 4);
    s(0, 0) = 1.0;
    s(0, 3) = gamma;
    s(3, 3) = 1.0 - gamma;
    s(1, 1) = coh;
    s(2, 2) = coh;
    return QuantumChannel(2, std::move(s));
}

QuantumChannel QuantumChannel::after(const QuantumChannel& other) const {
    if (dim_ != other.dim_) throw ConfigError("channel composition: dimension mismatch");
    return QuantumChannel(dim_, s_ * other.s_);
}

Matrix QuantumChannel::apply(const Matrix& rho) const {
    if (rho.rows() != dim_ || rho.cols() != dim_)
        throw ConfigError("channel apply: dimension mismatch");
    Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(rho.data(), dim_ * dim_);
    Eigen::VectorXcd w = s_ * v;
    return Eigen::Map<const Matrix>(w.data(), dim_, dim_);
}

QuantumChannel::CptpCheck QuantumChannel::cptp_check() const {
    CptpCheck c;
    const int d = dim_;
    // trace preservation: tr(S(E_ij)) = delta_ij
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            Matrix e = Matrix::Zero(d, d);
            e(i, j) = 1.0;
            const Matrix out = apply(e);
            const Complex tr = out.trace();
            const double expect = (i == j) ? 1.0 : 0.0;
            c.trace_preservation_dev =
                std::max(c.trace_preservation_dev, std::abs(tr - Complex(expect, 0.0)));
        }
    }
    // complete positivity: Choi matrix sum_{ij} E_ij kron S(E_ij) is PSD
    Matrix choi = Matrix::Zero(d * d, d * d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            Matrix e = Matrix::Zero(d, d);
            e(i, j) = 1.0;
            const Matrix out = apply(e);
            choi.block(i * d, j * d, d, d) = out;
        }
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (choi + choi.adjoint()));
    c.choi_min_eigenvalue = es.eigenvalues().minCoeff();
    return c;
}

double QuantumChannel::average_gate_fidelity(const Matrix& target_unitary) const {
    const int d = dim_;
    const QuantumChannel ideal = unitary(target_unitary);
    const Complex overlap = (ideal.s_.adjoint() * s_).trace();
    const double f_pro = overlap.real() / (d * d);
    return (d * f_pro + 1.0) / (d + 1.0);
}

QuantumChannel channel_from_pulse(const qdyn::TransmonParams& params,
                                  const pulses::PulseSequence& seq, qdyn::Parity parity,
                                  bool with_decoherence, const qdyn::LindbladOptions& opts) {
    const int d = params.levels;
    const auto h = pulses::rotating_frame_hamiltonian(params, seq, parity);
    std::vector<Matrix> collapse;
    if (with_decoherence) {
        collapse = qdyn::collapse_operators(params, qdyn::DephasingSource::echo);
    }
    Matrix s(d * d, d * d);
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) {
            Matrix e = Matrix::Zero(d, d);
            e(i, j) = 1.0;
            const Matrix out =
                qdyn::lindblad_evolve(h, collapse, e, 0.0, seq.total_duration_ns(), opts);
            s.col(j * d + i) = Eigen::Map<const Eigen::VectorXcd>(out.data(), d * d);
        }
    }
    return QuantumChannel(d, std::move(s));
}

double unitary_distance(const Matrix& a, const Matrix& b) {
    // computed as the phase-aligned difference, stable near zero
    const Complex tr = (b.adjoint() * a).trace();
    const double mag = std::abs(tr);
    const Complex phase = mag > 1e-300 ? tr / mag : Complex(1.0, 0.0);
    return (a - phase * b).norm();
}

QuantumChannel qubit_block(const QuantumChannel& channel) {
    const int d = channel.dim();
    if (d == 2) return channel;
    Matrix s2(4, 4);
    auto vec_index = [d](int i, int j) { return j * d + i; };  // column-major
    const int rows[4][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            s2(r, c) = channel.superop()(vec_index(rows[r][0], rows[r][1]),
                                         vec_index(rows[c][0], rows[c][1]));
        }
    }
    return QuantumChannel(2, std::move(s2));
}

}  // namespace qpd::cliffords
