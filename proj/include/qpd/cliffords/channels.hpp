#pragma once

#include <optional>

#include "qpd/cliffords/group.hpp"
#include "qpd/pulses/sequence.hpp"
#include "qpd/qdyn/lindblad.hpp"

namespace qpd::cliffords {

using qdyn::Matrix;

/// Quantum channel as a superoperator on column-major vec(rho).
class QuantumChannel {
public:
    QuantumChannel() = default;
    QuantumChannel(int dim, Matrix superop) : dim_(dim), s_(std::move(superop)) {}

    static QuantumChannel identity(int dim);
    static QuantumChannel unitary(const Matrix& u);
    /// rho -> p rho + (1-p) tr(rho) I/d.
    static QuantumChannel depolarizing(int dim, double p);
    /// Qubit amplitude damping (T1) plus pure dephasing over a duration:
    /// gamma = 1 - exp(-t/T1), coherence factor exp(-t/T2).
    static QuantumChannel thermal(double t_ns, double t1_ns, double t2_ns);

    int dim() const { return dim_; }
    const Matrix& superop() const { return s_; }

    /// this after other (other acts first).
    QuantumChannel after(const QuantumChannel& other) const;

    Matrix apply(const Matrix& rho) const;

    struct CptpCheck {
        double trace_preservation_dev = 0.0;  // max |tr(S(E_ij)) - delta_ij|
        double choi_min_eigenvalue = 0.0;
        bool ok(double tol = 1e-9) const {
            return trace_preservation_dev <= tol && choi_min_eigenvalue >= -tol;
        }
    };
    CptpCheck cptp_check() const;

    /// Average gate fidelity against a target unitary on the same dimension:
    /// F_avg = (d F_pro + 1)/(d + 1), F_pro = tr(S_target^dag S)/d^2.
    double average_gate_fidelity(const Matrix& target_unitary) const;

private:
    int dim_ = 0;
    Matrix s_;
};

/// Channel of a compiled pulse sequence by basis-matrix propagation through
/// the Lindblad model (d^2 evolutions). With decoherence off this is the
/// unitary channel of the pulse including leakage and bandwidth effects.
QuantumChannel channel_from_pulse(const qdyn::TransmonParams& params,
                                  const pulses::PulseSequence& seq, qdyn::Parity parity,
                                  bool with_decoherence,
                                  const qdyn::LindbladOptions& opts = {});

/// Frobenius distance between unitaries modulo global phase:
/// sqrt(2d - 2 |tr(B^dag A)|).
double unitary_distance(const Matrix& a, const Matrix& b);

/// Restriction of a K-level channel to the 0-1 block (trace-decreasing when
/// there is leakage); what single-qubit RB actually probes.
QuantumChannel qubit_block(const QuantumChannel& channel);

}  // namespace qpd::cliffords
