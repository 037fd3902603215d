#include "qpd/pulses/drive.hpp"

#include <cmath>
#include <memory>
#include <vector>

namespace qpd::pulses {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct DriveContext {
    qdyn::Matrix h_base;                // static rotating-frame ladder + detuning term
    std::vector<double> eps_rad_ns;     // 2*pi*eps_k in rad/ns
    double parity_offset;               // (P-1)/4
    std::vector<Segment> mw_segments;   // microwave segments only
    std::vector<SmoothedSquare> gates;  // all gate displacements
    double ng0;
    double eta_ghz;
    int levels;
};

}  // namespace

qdyn::HamiltonianFn rotating_frame_hamiltonian(const qdyn::TransmonParams& params,
                                               const PulseSequence& seq,
                                               qdyn::Parity parity,
                                               double extra_detuning_ghz) {
    auto ctx = std::make_shared<DriveContext>();
    ctx->h_base = qdyn::static_hamiltonian_rotating(params, seq.drive_frame_ghz());
    for (int k = 0; k < params.levels; ++k) {
        ctx->h_base(k, k) += kTwoPi * extra_detuning_ghz * k;
    }
    for (double e : params.epsilon_mhz) ctx->eps_rad_ns.push_back(kTwoPi * e * 1e-3);
    ctx->parity_offset = (qdyn::parity_value(parity) - 1) / 4.0;
    for (const Segment& s : seq.segments()) {
        if (s.is_microwave()) ctx->mw_segments.push_back(s);
        if (const auto* g = std::get_if<SmoothedSquare>(&s.payload)) ctx->gates.push_back(*g);
    }
    ctx->ng0 = seq.ng0();
    ctx->eta_ghz = params.eta_ghz;
    ctx->levels = params.levels;

    return [ctx](double t, qdyn::Matrix& h) {
        h = ctx->h_base;

        double ng = ctx->ng0;
        for (const SmoothedSquare& g : ctx->gates) ng += smoothed_square_value(g, t);
        const double c = std::cos(kTwoPi * (ng + ctx->parity_offset));
        for (int k = 0; k < ctx->levels; ++k) {
            h(k, k) += -0.5 * ctx->eps_rad_ns[static_cast<std::size_t>(k)] * c;
        }

        for (const Segment& s : ctx->mw_segments) {
            if (t < s.t_start_ns || t > s.t_end_ns) continue;
            const auto& mw = std::get<MicrowavePulse>(s.payload);
            const std::complex<double> env =
                drag_envelope(mw, t - s.t_start_ns, ctx->eta_ghz);
            if (env == std::complex<double>(0.0, 0.0)) continue;
            // a^dag = (sigma_x - i sigma_y)/2 on the 0-1 block, so +phase here
            // drives the axis (cos phase, sin phase).
            const std::complex<double> e =
                0.5 * env * std::polar(1.0, mw.phase);
            for (int k = 0; k + 1 < ctx->levels; ++k) {
                const double elem = std::sqrt(static_cast<double>(k + 1));
                h(k + 1, k) += e * elem;
                h(k, k + 1) += std::conj(e) * elem;
            }
        }
    };
}

}  // namespace qpd::pulses
