#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <vector>

#include "qpd/common/rng.hpp"

namespace qpd::cliffords {

using Matrix2 = Eigen::Matrix2cd;

/// Physical gate alphabet for Clifford decompositions. `identity` is an idle
/// of one gate duration.
enum class PhysGate : uint8_t {
    identity,
    x_half,
    x_half_neg,
    y_half,
    y_half_neg,
    x,
    y,
};

/// 2x2 unitary of a physical gate.
Matrix2 gate_unitary(PhysGate g);

/// Rotation angle/axis-phase pair of a physical gate (angle in rad, axis in
/// the equatorial plane at the given phase).
struct GateRotation {
    double angle;
    double axis_phase;
};
GateRotation gate_rotation(PhysGate g);

struct CliffordElement {
    int index = 0;
    Matrix2 unitary;                     // up to global phase
    std::vector<PhysGate> decomposition;  // time-ordered physical gates
};

/// The 24-element single-qubit Clifford group. Elements are generated from
/// {X/2, Y/2} words; decompositions are minimal-length words over the
/// physical alphabet (45 gates in total, 1.875 per element). The
/// multiplication table and inverses are precomputed.
class CliffordGroup {
public:
    static const CliffordGroup& instance();

    const CliffordElement& element(int i) const { return elements_[static_cast<size_t>(i)]; }
    const std::array<CliffordElement, 24>& elements() const { return elements_; }

    /// Index of U_a * U_b (apply b first, then a), up to global phase.
    int multiply(int a, int b) const { return mult_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
    int inverse(int a) const { return inv_[static_cast<size_t>(a)]; }
    int identity_index() const { return 0; }

    /// Index of the element matching `u` up to global phase; -1 when absent.
    int find(const Matrix2& u, double tol = 1e-8) const;

    double average_gates_per_clifford() const;

private:
    CliffordGroup();
    std::array<CliffordElement, 24> elements_;
    std::array<std::array<uint8_t, 24>, 24> mult_{};
    std::array<uint8_t, 24> inv_{};
};

struct RbSequence {
    std::vector<int> elements;  // time-ordered Clifford indices
    int recovery = 0;           // group inverse of the ordered product
};

/// Uniform random Clifford word of length m plus its recovery element.
RbSequence random_rb_sequence(int m, Rng& rng);

}  // namespace qpd::cliffords
