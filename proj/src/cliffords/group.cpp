#include "qpd/cliffords/group.hpp"

#include <cmath>
#include <complex>
#include <deque>

#include "qpd/common/errors.hpp"

namespace qpd::cliffords {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

using Complex = std::complex<double>;

Matrix2 rotation(double angle, double axis_phase) {
    const double c = std::cos(0.5 * angle);
    const double s = std::sin(0.5 * angle);
    Matrix2 u;
    u(0, 0) = Complex(c, 0.0);
    u(0, 1) = Complex(0.0, -s) * std::polar(1.0, -axis_phase);
    u(1, 0) = Complex(0.0, -s) * std::polar(1.0, axis_phase);
    u(1, 1) = Complex(c, 0.0);
    return u;
}

/// Multiplies by the global phase that makes the first sizable entry real
/// positive; lets unitaries be compared entrywise.
Matrix2 phase_canonical(const Matrix2& u) {
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const Complex v = u(i, j);
            if (std::abs(v) > 1e-6) return u * (std::conj(v) / std::abs(v));
        }
    }
    return u;
}

bool same_up_to_phase(const Matrix2& a, const Matrix2& b, double tol) {
    return (phase_canonical(a) - phase_canonical(b)).cwiseAbs().maxCoeff() < tol;
}

}  // namespace

GateRotation gate_rotation(PhysGate g) {
    switch (g) {
        case PhysGate::identity: return {0.0, 0.0};
        case PhysGate::x_half: return {0.5 * kPi, 0.0};
        case PhysGate::x_half_neg: return {-0.5 * kPi, 0.0};
        case PhysGate::y_half: return {0.5 * kPi, 0.5 * kPi};
        case PhysGate::y_half_neg: return {-0.5 * kPi, 0.5 * kPi};
        case PhysGate::x: return {kPi, 0.0};
        case PhysGate::y: return {kPi, 0.5 * kPi};
    }
    throw ConfigError("unknown physical gate");
}

Matrix2 gate_unitary(PhysGate g) {
    const GateRotation r = gate_rotation(g);
    return rotation(r.angle, r.axis_phase);
}

CliffordGroup::CliffordGroup() {
    // enumerate the group from {X/2, Y/2} words
    std::vector<Matrix2> found{Matrix2::Identity()};
    std::deque<Matrix2> frontier{Matrix2::Identity()};
    const Matrix2 gen_x = gate_unitary(PhysGate::x_half);
    const Matrix2 gen_y = gate_unitary(PhysGate::y_half);
    while (!frontier.empty() && found.size() < 24) {
        const Matrix2 u = frontier.front();
        frontier.pop_front();
        for (const Matrix2* g : {&gen_x, &gen_y}) {
            const Matrix2 v = *g * u;
            bool known = false;
            for (const Matrix2& w : found) {
                if (same_up_to_phase(v, w, 1e-8)) {
                    known = true;
                    break;
                }
            }
            if (!known) {
                found.push_back(v);
                frontier.push_back(v);
            }
        }
    }
    if (found.size() != 24) throw NumericalError("clifford group enumeration failed");

    for (int i = 0; i < 24; ++i) {
        elements_[static_cast<size_t>(i)].index = i;
        elements_[static_cast<size_t>(i)].unitary = phase_canonical(found[static_cast<size_t>(i)]);
    }

    // minimal-length decompositions over the physical alphabet (BFS); the
    // identity element is a single idle gate
    const std::array<PhysGate, 6> alphabet{PhysGate::x_half,     PhysGate::x_half_neg,
                                           PhysGate::y_half,     PhysGate::y_half_neg,
                                           PhysGate::x,          PhysGate::y};
    elements_[0].decomposition = {PhysGate::identity};
    std::array<bool, 24> decomposed{};
    decomposed[0] = true;
    std::deque<int> bfs{0};
    int remaining = 23;
    while (!bfs.empty() && remaining > 0) {
        const int cur = bfs.front();
        bfs.pop_front();
        for (PhysGate g : alphabet) {
            const Matrix2 v = gate_unitary(g) * elements_[static_cast<size_t>(cur)].unitary;
            const int idx = find(v);
            if (idx < 0) throw NumericalError("clifford closure violated");
            if (!decomposed[static_cast<size_t>(idx)]) {
                decomposed[static_cast<size_t>(idx)] = true;
                auto word = cur == 0 ? std::vector<PhysGate>{}
                                     : elements_[static_cast<size_t>(cur)].decomposition;
                word.push_back(g);
                elements_[static_cast<size_t>(idx)].decomposition = std::move(word);
                bfs.push_back(idx);
                --remaining;
            }
        }
    }
    if (remaining != 0) throw NumericalError("clifford decomposition incomplete");

    for (int a = 0; a < 24; ++a) {
        for (int b = 0; b < 24; ++b) {
            const Matrix2 v =
                elements_[static_cast<size_t>(a)].unitary * elements_[static_cast<size_t>(b)].unitary;
            const int idx = find(v);
            if (idx < 0) throw NumericalError("clifford multiplication left the group");
            mult_[static_cast<size_t>(a)][static_cast<size_t>(b)] = static_cast<uint8_t>(idx);
            if (idx == 0) {
                inv_[static_cast<size_t>(a)] = static_cast<uint8_t>(b);
            }
        }
    }
}

const CliffordGroup& CliffordGroup::instance() {
    static const CliffordGroup group;
    return group;
}

int CliffordGroup::find(const Matrix2& u, double tol) const {
    for (int i = 0; i < 24; ++i) {
        if (same_up_to_phase(u, elements_[static_cast<size_t>(i)].unitary, tol)) return i;
    }
    return -1;
}

double CliffordGroup::average_gates_per_clifford() const {
    std::size_t total = 0;
    for (const auto& e : elements_) total += e.decomposition.size();
    return static_cast<double>(total) / 24.0;
}

RbSequence random_rb_sequence(int m, Rng& rng) {
    if (m < 1) throw ConfigError("random_rb_sequence: m must be >= 1");
    const auto& group = CliffordGroup::instance();
    RbSequence seq;
    seq.elements.reserve(static_cast<size_t>(m));
    int product = group.identity_index();
    for (int i = 0; i < m; ++i) {
        const int c = static_cast<int>(rng.integer(24));
        seq.elements.push_back(c);
        product = group.multiply(c, product);  // apply c after the running product
    }
    seq.recovery = group.inverse(product);
    return seq;
}

}  // namespace qpd::cliffords
