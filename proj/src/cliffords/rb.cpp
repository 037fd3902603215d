#include "qpd/cliffords/rb.hpp"

#include <cmath>

#include "qpd/common/errors.hpp"

namespace qpd::cliffords {

void RbConfig::validate() const {
    if (depths.empty()) throw ConfigError("rb: depths must not be empty");
    for (std::size_t i = 0; i < depths.size(); ++i) {
        if (depths[i] < 1) throw ConfigError("rb: depths must be positive");
        if (i > 0 && depths[i] <= depths[i - 1])
            throw ConfigError("rb: depths must be strictly increasing");
    }
    if (sequences_per_depth < 1) throw ConfigError("rb: sequences_per_depth must be >= 1");
    if (shots < 0) throw ConfigError("rb: shots must be >= 0");
    if (tier == ChannelTier::depolarizing && (depolarizing_p <= 0.0 || depolarizing_p > 1.0))
        throw ConfigError("rb: depolarizing parameter out of (0, 1]");
}

void ChannelSet::validate(double tol) const {
    for (const auto& c : clifford) {
        const auto check = c.cptp_check();
        if (!check.ok(tol))
            throw ConfigError("rb: non-CPTP Clifford channel (trace dev " +
                              std::to_string(check.trace_preservation_dev) + ", choi min " +
                              std::to_string(check.choi_min_eigenvalue) + ")");
    }
    if (interleaved) {
        const auto check = interleaved->cptp_check();
        if (!check.ok(tol)) throw ConfigError("rb: non-CPTP interleaved channel");
    }
}

namespace {

/// Embeds a qubit unitary into the K-level space (identity on the rest).
qdyn::Matrix embed_qubit(const Matrix2& u, int dim) {
    qdyn::Matrix big = qdyn::Matrix::Identity(dim, dim);
    big.block(0, 0, 2, 2) = u;
    return big;
}

std::vector<QuantumChannel> ideal_clifford_channels(int dim) {
    const auto& group = CliffordGroup::instance();
    std::vector<QuantumChannel> out;
    out.reserve(24);
    for (const auto& e : group.elements()) {
        out.push_back(QuantumChannel::unitary(embed_qubit(e.unitary, dim)));
    }
    return out;
}

}  // namespace

ChannelSet make_ideal_channels(int dim) {
    ChannelSet set;
    set.dim = dim;
    set.clifford = ideal_clifford_channels(dim);
    set.clifford_ideal = set.clifford;
    return set;
}

ChannelSet make_depolarizing_channels(double p) {
    ChannelSet set;
    set.dim = 2;
    set.clifford_ideal = ideal_clifford_channels(2);
    const QuantumChannel depol = QuantumChannel::depolarizing(2, p);
    for (const auto& ideal : set.clifford_ideal) {
        set.clifford.push_back(depol.after(ideal));
    }
    return set;
}

ChannelSet make_analytic_channels(const qdyn::TransmonParams& params, double gate_span_ns,
                                  qdyn::DephasingSource source) {
    const double t1_ns = params.t1_us * 1e3;
    const double t2_ns =
        (source == qdyn::DephasingSource::echo ? params.t2_echo_us : params.t2_ramsey_us) * 1e3;
    const QuantumChannel thermal = QuantumChannel::thermal(gate_span_ns, t1_ns, t2_ns);

    // per-physical-gate channels: ideal rotation then damping over the span
    std::vector<QuantumChannel> gate_channels;
    for (int g = 0; g < 7; ++g) {
        const auto u = gate_unitary(static_cast<PhysGate>(g));
        gate_channels.push_back(thermal.after(QuantumChannel::unitary(u)));
    }

    ChannelSet set;
    set.dim = 2;
    set.clifford_ideal = ideal_clifford_channels(2);
    const auto& group = CliffordGroup::instance();
    for (const auto& e : group.elements()) {
        QuantumChannel c = QuantumChannel::identity(2);
        for (PhysGate g : e.decomposition) {
            c = gate_channels[static_cast<std::size_t>(g)].after(c);
        }
        set.clifford.push_back(c);
    }
    return set;
}

ChannelSet make_lindblad_channels(const qdyn::TransmonParams& params,
                                  const pulses::SequenceConfig& seq_cfg, qdyn::Parity parity,
                                  double ng_bias, bool with_decoherence,
                                  const qdyn::LindbladOptions& opts) {
    // one pulse channel per physical gate at the bias point
    std::vector<QuantumChannel> gate_channels;
    for (int g = 0; g < 7; ++g) {
        const GateRotation rot = gate_rotation(static_cast<PhysGate>(g));
        pulses::PulseSequence seq(ng_bias, params.f01_ghz);
        if (static_cast<PhysGate>(g) == PhysGate::identity) {
            seq.append_idle(seq_cfg.mw_duration_ns + 2.0 * seq_cfg.mw_buffer_ns);
        } else {
            seq.append_microwave(pulses::mw_pulse_for_rotation(
                rot.angle, rot.axis_phase, seq_cfg.mw_duration_ns, seq_cfg.mw_buffer_ns,
                seq_cfg.drag_coefficient));
        }
        gate_channels.push_back(channel_from_pulse(params, seq, parity, with_decoherence, opts));
    }

    ChannelSet set;
    set.dim = params.levels;
    set.clifford_ideal = ideal_clifford_channels(params.levels);
    const auto& group = CliffordGroup::instance();
    for (const auto& e : group.elements()) {
        QuantumChannel c = QuantumChannel::identity(params.levels);
        for (PhysGate g : e.decomposition) {
            c = gate_channels[static_cast<std::size_t>(g)].after(c);
        }
        set.clifford.push_back(c);
    }
    return set;
}

int interleaved_clifford_index(InterleavedGate g) {
    const auto& group = CliffordGroup::instance();
    switch (g) {
        case InterleavedGate::none:
            return -1;
        case InterleavedGate::x_half:
            return group.find(gate_unitary(PhysGate::x_half));
        case InterleavedGate::y_half:
            return group.find(gate_unitary(PhysGate::y_half));
        case InterleavedGate::pseudo_z: {
            Matrix2 z = Matrix2::Zero();
            z(0, 0) = 1.0;
            z(1, 1) = -1.0;
            return group.find(z);
        }
    }
    throw ConfigError("unknown interleaved gate");
}

void set_interleaved(ChannelSet& set, InterleavedGate gate, QuantumChannel channel) {
    set.interleaved = std::move(channel);
    set.interleaved_index = interleaved_clifford_index(gate);
    if (set.interleaved_index < 0) throw ConfigError("rb: interleaved gate is not a Clifford");
}

double simulate_sequence(const std::vector<int>& elements, int recovery,
                         const ChannelSet& channels, bool interleave, bool noisy_recovery) {
    const int d = channels.dim;
    qdyn::Matrix rho = qdyn::level_projector(d, 0);
    for (int c : elements) {
        rho = channels.clifford[static_cast<std::size_t>(c)].apply(rho);
        if (interleave && channels.interleaved) {
            rho = channels.interleaved->apply(rho);
        }
    }
    const auto& rec = noisy_recovery ? channels.clifford[static_cast<std::size_t>(recovery)]
                                     : channels.clifford_ideal[static_cast<std::size_t>(recovery)];
    rho = rec.apply(rho);
    return rho(0, 0).real();
}

RbResult run_rb(const RbConfig& cfg, const ChannelSet& channels, const ExecPolicy& policy) {
    cfg.validate();
    channels.validate();
    const bool interleave = cfg.interleaved != InterleavedGate::none;
    if (interleave && (!channels.interleaved || channels.interleaved_index < 0))
        throw ConfigError("rb: interleaved gate requested but no channel supplied");

    const std::size_t n_depths = cfg.depths.size();
    const std::size_t n_seq = static_cast<std::size_t>(cfg.sequences_per_depth);

    RbResult res;
    res.survivals.assign(n_depths, std::vector<double>(n_seq, 0.0));

    const auto& group = CliffordGroup::instance();
    for_each_index(n_depths * n_seq, policy, [&](std::size_t idx) {
        const std::size_t di = idx / n_seq;
        const std::size_t si = idx % n_seq;
        Rng rng = Rng::stream(cfg.seed, di, si);
        const RbSequence seq = random_rb_sequence(cfg.depths[di], rng);
        int recovery = seq.recovery;
        if (interleave) {
            // the recovery inverts the full word including the interleaved gates
            int product = group.identity_index();
            for (int c : seq.elements) {
                product = group.multiply(c, product);
                product = group.multiply(channels.interleaved_index, product);
            }
            recovery = group.inverse(product);
        }
        double surv = simulate_sequence(seq.elements, recovery, channels, interleave,
                                        cfg.noisy_recovery);
        if (cfg.shots > 0) {
            int hits = 0;
            for (int s = 0; s < cfg.shots; ++s) hits += rng.bernoulli(surv) ? 1 : 0;
            surv = static_cast<double>(hits) / cfg.shots;
        }
        res.survivals[di][si] = surv;
    });

    std::vector<double> depths_d, means;
    for (std::size_t di = 0; di < n_depths; ++di) {
        double mean = 0.0;
        for (double v : res.survivals[di]) mean += v;
        mean /= static_cast<double>(n_seq);
        double var = 0.0;
        for (double v : res.survivals[di]) var += (v - mean) * (v - mean);
        var = n_seq > 1 ? var / static_cast<double>(n_seq - 1) : 0.0;
        res.points.push_back(
            {cfg.depths[di], mean, std::sqrt(var), static_cast<int>(n_seq)});
        depths_d.push_back(static_cast<double>(cfg.depths[di]));
        means.push_back(mean);
    }
    res.fit = fit_decay(depths_d, means);
    return res;
}

}  // namespace qpd::cliffords
