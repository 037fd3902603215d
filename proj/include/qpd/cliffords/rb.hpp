#pragma once

#include <optional>

#include "qpd/cliffords/channels.hpp"
#include "qpd/cliffords/decay_fit.hpp"
#include "qpd/cliffords/group.hpp"
#include "qpd/common/parallel.hpp"

namespace qpd::cliffords {

enum class ChannelTier { ideal, depolarizing, analytic, lindblad };

enum class InterleavedGate { none, x_half, y_half, pseudo_z };

struct RbConfig {
    std::vector<int> depths{1, 2, 4, 8, 16, 32, 64, 128, 256, 512};
    int sequences_per_depth = 30;
    uint64_t seed = 1;
    InterleavedGate interleaved = InterleavedGate::none;
    ChannelTier tier = ChannelTier::ideal;
    double depolarizing_p = 1.0;   // depolarizing tier
    int shots = 0;                 // 0 = exact channel probabilities
    bool noisy_recovery = false;   // apply the channel noise to the recovery too

    void validate() const;  // depths strictly increasing, count >= 1
};

/// Per-Clifford channels plus the ideal (unitary-only) versions used for the
/// recovery gate, all on one Hilbert-space dimension (2 for the analytic
/// tiers, the transmon truncation for the Lindblad tier).
struct ChannelSet {
    int dim = 2;
    std::vector<QuantumChannel> clifford;       // 24, noise included
    std::vector<QuantumChannel> clifford_ideal; // 24, unitary only
    std::optional<QuantumChannel> interleaved;
    int interleaved_index = -1;  // Clifford index of the ideal interleaved gate

    /// Rejects channel sets containing non-CPTP members.
    void validate(double tol = 1e-7) const;
};

/// Clifford index of the ideal version of an interleaved gate (pseudo-Z is
/// the Z Clifford).
int interleaved_clifford_index(InterleavedGate g);

/// Attaches an interleaved-gate channel to the set.
void set_interleaved(ChannelSet& set, InterleavedGate gate, QuantumChannel channel);

ChannelSet make_ideal_channels(int dim = 2);
ChannelSet make_depolarizing_channels(double p);

/// Analytic decoherence tier: each physical gate is its unitary followed by
/// a thermal (T1 + dephasing) channel over the gate span; Cliffords compose
/// their decompositions.
ChannelSet make_analytic_channels(const qdyn::TransmonParams& params, double gate_span_ns,
                                  qdyn::DephasingSource source = qdyn::DephasingSource::echo);

/// Lindblad tier: per-physical-gate channels from the full pulse simulation
/// at the transmon truncation, at offset charge `ng_bias`.
ChannelSet make_lindblad_channels(const qdyn::TransmonParams& params,
                                  const pulses::SequenceConfig& seq_cfg, qdyn::Parity parity,
                                  double ng_bias, bool with_decoherence,
                                  const qdyn::LindbladOptions& opts = {});

/// Ground-state return probability of one sequence: |0> through the element
/// channels (interleaved channel after each element when supplied), then the
/// recovery. The recovery uses the ideal channel unless `noisy_recovery`.
double simulate_sequence(const std::vector<int>& elements, int recovery,
                         const ChannelSet& channels, bool interleave, bool noisy_recovery);

struct RbPoint {
    int depth = 0;
    double mean = 0.0;
    double stddev = 0.0;
    int n = 0;
};

struct RbResult {
    std::vector<RbPoint> points;
    std::vector<std::vector<double>> survivals;  // per depth, per sequence
    DecayFit fit;
};

/// Full RB run: per-(depth, sequence) RNG streams derived from the master
/// seed, so results are reproducible and independent of the execution policy.
RbResult run_rb(const RbConfig& cfg, const ChannelSet& channels,
                const ExecPolicy& policy = {});

}  // namespace qpd::cliffords
