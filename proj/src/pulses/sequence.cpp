#include "qpd/pulses/sequence.hpp"

#include <cmath>
#include <ostream>

#include "qpd/common/csv.hpp"
#include "qpd/common/errors.hpp"

namespace qpd::pulses {

namespace {
constexpr double kHalfPi = 1.5707963267948966192313216916398;
constexpr double kPi = 3.1415926535897932384626433832795;
}  // namespace

void PulseSequence::append_microwave(const MicrowavePulse& p) {
    if (p.duration_ns <= 0.0) throw ConfigError("pulse sequence: microwave duration must be > 0");
    Segment s;
    s.t_start_ns = end_ns_;
    s.t_end_ns = end_ns_ + p.span_ns();
    s.payload = p;
    segments_.push_back(s);
    end_ns_ = s.t_end_ns;
}

void PulseSequence::append_gate(double amplitude_2e, double flat_top_ns, double sigma_ns) {
    if (flat_top_ns <= 0.0 || sigma_ns <= 0.0)
        throw ConfigError("pulse sequence: gate flat top and sigma must be > 0");
    Segment s;
    s.t_start_ns = end_ns_;
    s.t_end_ns = end_ns_ + flat_top_ns + 4.0 * sigma_ns;
    s.payload = SmoothedSquare{end_ns_ + 2.0 * sigma_ns, flat_top_ns, sigma_ns, amplitude_2e};
    segments_.push_back(s);
    end_ns_ = s.t_end_ns;
}

void PulseSequence::append_idle(double span_ns) {
    if (span_ns < 0.0) throw ConfigError("pulse sequence: idle span must be >= 0");
    Segment s;
    s.t_start_ns = end_ns_;
    s.t_end_ns = end_ns_ + span_ns;
    s.payload = Idle{};
    segments_.push_back(s);
    end_ns_ = s.t_end_ns;
}

double PulseSequence::ng_at(double t_ns) const {
    double ng = ng0_;
    for (const Segment& s : segments_) {
        if (const auto* g = std::get_if<SmoothedSquare>(&s.payload)) {
            ng += smoothed_square_value(*g, t_ns);
        }
    }
    return ng;
}

double PulseSequence::net_displacement_integral(double t_lo_ns, double t_hi_ns) const {
    // Analytic: integral of the erf-edged square over (-inf, t) has closed form;
    // over a window use the difference of antiderivatives.
    auto antideriv = [](const SmoothedSquare& g, double t) {
        auto piece = [&](double x) {
            const double s = 1.4142135623730950488 * g.sigma_ns;
            const double u = x / s;
            return x * std::erf(u) + s / std::sqrt(kPi) * std::exp(-u * u);
        };
        return 0.5 * g.amplitude_2e * (piece(t - g.t0_ns) - piece(t - g.t0_ns - g.flat_top_ns));
    };
    double acc = 0.0;
    for (const Segment& s : segments_) {
        if (const auto* g = std::get_if<SmoothedSquare>(&s.payload)) {
            acc += antideriv(*g, t_hi_ns) - antideriv(*g, t_lo_ns);
        }
    }
    return acc;
}

void PulseSequence::write_timeline_csv(std::ostream& out) const {
    out << "t_start_ns,t_end_ns,kind,params\n";
    for (const Segment& s : segments_) {
        out << csv_num(s.t_start_ns) << "," << csv_num(s.t_end_ns) << ",";
        if (const auto* mw = std::get_if<MicrowavePulse>(&s.payload)) {
            out << "mw,\"angle_rad=" << csv_num(mw->rotation_angle())
                << ";phase_rad=" << csv_num(mw->phase)
                << ";amplitude_rad_ns=" << csv_num(mw->amplitude)
                << ";duration_ns=" << csv_num(mw->duration_ns)
                << ";buffer_ns=" << csv_num(mw->buffer_ns)
                << ";drag=" << csv_num(mw->drag_coefficient) << "\"";
        } else if (const auto* g = std::get_if<SmoothedSquare>(&s.payload)) {
            out << "gate,\"amplitude_2e=" << csv_num(g->amplitude_2e)
                << ";flat_top_ns=" << csv_num(g->flat_top_ns)
                << ";sigma_ns=" << csv_num(g->sigma_ns) << ";t0_ns=" << csv_num(g->t0_ns)
                << "\"";
        } else {
            out << "idle,\"\"";
        }
        out << "\n";
    }
}

namespace {

MicrowavePulse final_gate_pulse(const SequenceConfig& cfg, FinalGate g) {
    switch (g) {
        case FinalGate::y_half:
            return mw_pulse_for_rotation(kHalfPi, kHalfPi, cfg.mw_duration_ns, cfg.mw_buffer_ns,
                                         cfg.drag_coefficient);
        case FinalGate::x_half:
            return mw_pulse_for_rotation(kHalfPi, 0.0, cfg.mw_duration_ns, cfg.mw_buffer_ns,
                                         cfg.drag_coefficient);
        case FinalGate::minus_x_half:
            return mw_pulse_for_rotation(-kHalfPi, 0.0, cfg.mw_duration_ns, cfg.mw_buffer_ns,
                                         cfg.drag_coefficient);
    }
    throw ConfigError("unknown final gate");
}

}  // namespace

PulseSequence compile_echo_cpm(const qdyn::TransmonParams& params, const SequenceConfig& cfg,
                               FinalGate final_gate) {
    PulseSequence seq(cfg.ng0, params.f01_ghz);
    const MicrowavePulse x_half = mw_pulse_for_rotation(kHalfPi, 0.0, cfg.mw_duration_ns,
                                                        cfg.mw_buffer_ns, cfg.drag_coefficient);
    const MicrowavePulse x_pi = mw_pulse_for_rotation(kPi, 0.0, cfg.mw_duration_ns,
                                                      cfg.mw_buffer_ns, cfg.drag_coefficient);
    seq.append_microwave(x_half);
    seq.append_gate(cfg.gate_amplitude_2e, cfg.gate_flat_top_ns, cfg.gate_sigma_ns);
    seq.append_microwave(x_pi);
    seq.append_gate(-cfg.gate_amplitude_2e, cfg.gate_flat_top_ns, cfg.gate_sigma_ns);
    seq.append_microwave(final_gate_pulse(cfg, final_gate));
    return seq;
}

PulseSequence compile_ramsey_cpm(const qdyn::TransmonParams& params, const SequenceConfig& cfg,
                                 FinalGate final_gate) {
    PulseSequence seq(cfg.ng0, params.f01_ghz);
    const MicrowavePulse x_half = mw_pulse_for_rotation(kHalfPi, 0.0, cfg.mw_duration_ns,
                                                        cfg.mw_buffer_ns, cfg.drag_coefficient);
    seq.append_microwave(x_half);
    seq.append_gate(cfg.gate_amplitude_2e, cfg.gate_flat_top_ns, cfg.gate_sigma_ns);
    seq.append_microwave(final_gate_pulse(cfg, final_gate));
    return seq;
}

PulseSequence compile_charge_monitor(const qdyn::TransmonParams& params,
                                     const SequenceConfig& cfg, double delay_ns) {
    if (delay_ns < 0.0) throw ConfigError("charge monitor: delay must be >= 0");
    PulseSequence seq(cfg.ng0, params.f01_ghz);
    const MicrowavePulse x_half = mw_pulse_for_rotation(kHalfPi, 0.0, cfg.mw_duration_ns,
                                                        cfg.mw_buffer_ns, cfg.drag_coefficient);
    seq.append_microwave(x_half);
    seq.append_idle(delay_ns);
    seq.append_microwave(x_half);
    return seq;
}

}  // namespace qpd::pulses
