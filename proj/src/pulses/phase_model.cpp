#include "qpd/pulses/phase_model.hpp"

#include <cmath>

#include "qpd/common/errors.hpp"

namespace qpd::pulses {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kPi = 3.1415926535897932384626433832795;

using qdyn::BlochVector;

BlochVector rotate(const BlochVector& v, double nx, double ny, double nz, double angle) {
    // Rodrigues rotation, right-handed about the unit axis n.
    const double c = std::cos(angle), s = std::sin(angle);
    const double dot = nx * v.x + ny * v.y + nz * v.z;
    BlochVector cross{ny * v.z - nz * v.y, nz * v.x - nx * v.z, nx * v.y - ny * v.x};
    return BlochVector{v.x * c + cross.x * s + nx * dot * (1.0 - c),
                       v.y * c + cross.y * s + ny * dot * (1.0 - c),
                       v.z * c + cross.z * s + nz * dot * (1.0 - c)};
}

/// Detuning of parity branch P from the drive frame at time t (GHz).
double detuning_ghz(const PulseSequence& seq, const qdyn::TransmonParams& params,
                    qdyn::Parity parity, double extra, double t) {
    const double ng = seq.ng_at(t);
    return qdyn::parity_frequency_ghz(params, ng, parity) + extra - seq.drive_frame_ghz();
}

/// Composite-Simpson integral of the detuning over [a, b], in GHz*ns (cycles).
double detuning_integral(const PulseSequence& seq, const qdyn::TransmonParams& params,
                         qdyn::Parity parity, double extra, double a, double b) {
    if (b <= a) return 0.0;
    const double target_step = 0.125;  // resolves sigma >= 1 ns erf edges
    int n = static_cast<int>(std::ceil((b - a) / target_step));
    n += n % 2;  // Simpson needs an even interval count
    if (n < 2) n = 2;
    const double h = (b - a) / n;
    double acc = detuning_ghz(seq, params, parity, extra, a) +
                 detuning_ghz(seq, params, parity, extra, b);
    for (int i = 1; i < n; ++i) {
        acc += (i % 2 ? 4.0 : 2.0) * detuning_ghz(seq, params, parity, extra, a + i * h);
    }
    return acc * h / 3.0;
}

}  // namespace

PhaseModelResult ideal_phase_model(const PulseSequence& seq,
                                   const qdyn::TransmonParams& params, qdyn::Parity parity,
                                   double extra_detuning_ghz) {
    PhaseModelResult res;
    BlochVector v{0.0, 0.0, 1.0};  // |0>
    res.checkpoints.push_back(v);

    auto precess = [&](double a, double b) {
        const double phase =
            -kTwoPi * detuning_integral(seq, params, parity, extra_detuning_ghz, a, b);
        v = rotate(v, 0.0, 0.0, 1.0, phase);
    };

    for (const Segment& s : seq.segments()) {
        if (const auto* mw = std::get_if<MicrowavePulse>(&s.payload)) {
            const double center = 0.5 * (s.t_start_ns + s.t_end_ns);
            precess(s.t_start_ns, center);
            v = rotate(v, std::cos(mw->phase), std::sin(mw->phase), 0.0, mw->rotation_angle());
            precess(center, s.t_end_ns);
        } else {
            precess(s.t_start_ns, s.t_end_ns);
        }
        res.checkpoints.push_back(v);
    }
    res.final_state = v;
    return res;
}

double phase_model_population(const PulseSequence& seq, const qdyn::TransmonParams& params,
                              qdyn::Parity parity, double extra_detuning_ghz) {
    const BlochVector v = ideal_phase_model(seq, params, parity, extra_detuning_ghz).final_state;
    return 0.5 * (1.0 - v.z);
}

double parity_phase_difference(const PulseSequence& seq, const qdyn::TransmonParams& params) {
    double phi_even = 0.0, phi_odd = 0.0;
    double sign = 1.0;
    double cursor = 0.0;
    auto accumulate = [&](double a, double b) {
        phi_even += sign * kTwoPi *
                    detuning_integral(seq, params, qdyn::Parity::even, 0.0, a, b);
        phi_odd += sign * kTwoPi *
                   detuning_integral(seq, params, qdyn::Parity::odd, 0.0, a, b);
    };
    for (const Segment& s : seq.segments()) {
        if (const auto* mw = std::get_if<MicrowavePulse>(&s.payload)) {
            const double center = 0.5 * (s.t_start_ns + s.t_end_ns);
            accumulate(cursor, center);
            if (std::abs(std::abs(mw->rotation_angle()) - kPi) < 1e-9) sign = -sign;
            cursor = center;
        }
    }
    accumulate(cursor, seq.total_duration_ns());
    return std::abs(phi_even - phi_odd);
}

double theoretical_pi_duration_ns(double abs_epsilon10_mhz) {
    if (!(abs_epsilon10_mhz > 0.0))
        throw ConfigError("theoretical_pi_duration: eps10 must be nonzero");
    return 1.0 / (4.0 * abs_epsilon10_mhz * 1e-3);
}

}  // namespace qpd::pulses
