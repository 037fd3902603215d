#pragma once

#include <iosfwd>
#include <variant>
#include <vector>

#include "qpd/pulses/envelopes.hpp"
#include "qpd/qdyn/transmon.hpp"

namespace qpd::pulses {

struct Idle {};

struct Segment {
    double t_start_ns = 0.0;
    double t_end_ns = 0.0;
    std::variant<MicrowavePulse, SmoothedSquare, Idle> payload;

    double span_ns() const { return t_end_ns - t_start_ns; }
    bool is_microwave() const { return std::holds_alternative<MicrowavePulse>(payload); }
    bool is_gate() const { return std::holds_alternative<SmoothedSquare>(payload); }
};

/// Ordered, gapless timeline of drive/gate/idle segments. Gate segments carry
/// erf-edged displacements whose tails extend beyond their segment; ng_at
/// evaluates the full waveform (baseline + every gate contribution), matching
/// the net-zero construction.
class PulseSequence {
public:
    explicit PulseSequence(double ng0 = 0.25, double drive_frame_ghz = 0.0)
        : ng0_(ng0), drive_frame_ghz_(drive_frame_ghz) {}

    /// Appends a segment at the current end of the timeline.
    void append_microwave(const MicrowavePulse& p);
    /// Gate segment spans flat_top + 4 sigma; the flat top starts 2 sigma in.
    void append_gate(double amplitude_2e, double flat_top_ns, double sigma_ns);
    void append_idle(double span_ns);

    double total_duration_ns() const { return end_ns_; }
    double ng0() const { return ng0_; }
    double drive_frame_ghz() const { return drive_frame_ghz_; }
    const std::vector<Segment>& segments() const { return segments_; }

    double ng_at(double t_ns) const;

    /// Integral of (ng(t) - ng0) over [t_lo, t_hi]; zero over the full span
    /// for net-zero sequences.
    double net_displacement_integral(double t_lo_ns, double t_hi_ns) const;

    /// Plain-text timeline: t_start,t_end,kind,params
    void write_timeline_csv(std::ostream& out) const;

private:
    std::vector<Segment> segments_;
    double ng0_;
    double drive_frame_ghz_;
    double end_ns_ = 0.0;
};

enum class FinalGate { y_half, x_half, minus_x_half };

struct SequenceConfig {
    double ng0 = 0.25;               // degeneracy point baseline
    double gate_amplitude_2e = 0.2;  // 0.67 V through the default conversion
    double gate_flat_top_ns = 217.0;
    double gate_sigma_ns = 5.0;
    double mw_duration_ns = 20.0;
    double mw_buffer_ns = 5.0;
    double drag_coefficient = 0.5;
};

/// EchoCPM: X/2 - gate(+A) - X - gate(-A) - final on a gapless timeline.
PulseSequence compile_echo_cpm(const qdyn::TransmonParams& params, const SequenceConfig& cfg,
                               FinalGate final_gate = FinalGate::y_half);

/// Ramsey-based variant: X/2 - gate(+A) - X/2 (single displacement, no echo).
PulseSequence compile_ramsey_cpm(const qdyn::TransmonParams& params, const SequenceConfig& cfg,
                                 FinalGate final_gate = FinalGate::x_half);

/// Charge monitor: X/2 - idle(delay) - X/2 at the degenerate qubit frequency.
PulseSequence compile_charge_monitor(const qdyn::TransmonParams& params,
                                     const SequenceConfig& cfg, double delay_ns);

}  // namespace qpd::pulses
