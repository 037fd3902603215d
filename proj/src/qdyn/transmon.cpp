#include "qpd/qdyn/transmon.hpp"

#include <cmath>
#include <cstddef>

#include "qpd/common/errors.hpp"

namespace qpd::qdyn {

std::vector<double> default_epsilon_ladder(double f01_ghz, double eta_ghz,
                                           double epsilon10_signed_mhz, int levels) {
    const double ec = eta_ghz;
    const double ej = (f01_ghz + ec) * (f01_ghz + ec) / (8.0 * ec);
    const double root = std::sqrt(ej / (2.0 * ec));

    // eps1 from eps1 - eps0 = eps10 with eps0 = eps1 / r10, r10 = -16 sqrt(EJ/2EC)
    const double r10 = -16.0 * root;
    const double eps1 = epsilon10_signed_mhz / (1.0 - 1.0 / r10);

    std::vector<double> eps(static_cast<std::size_t>(levels));
    eps[1] = eps1;
    eps[0] = eps1 / r10;
    for (int k = 2; k < levels; ++k) {
        const double ratio = -16.0 / k * root;  // eps_k / eps_{k-1}
        eps[static_cast<std::size_t>(k)] = eps[static_cast<std::size_t>(k - 1)] * ratio;
    }
    return eps;
}

TransmonParams TransmonParams::paper_device(int levels) {
    TransmonParams p;
    p.f01_ghz = 3.51589;
    p.eta_ghz = 0.33;
    p.t1_us = 80.0;
    p.t2_echo_us = 47.0;
    p.t2_ramsey_us = 8.7;
    p.levels = levels;
    // Stored magnitude 1.192 MHz with sign -1 (main-text convention).
    p.epsilon_mhz = default_epsilon_ladder(p.f01_ghz, p.eta_ghz, -1.192, levels);
    return p;
}

void TransmonParams::validate() const {
    if (levels < 3) throw ConfigError("transmon: levels must be >= 3");
    if (!(f01_ghz > 0.0)) throw ConfigError("transmon: f01 must be positive");
    if (!(eta_ghz > 0.0)) throw ConfigError("transmon: eta must be positive");
    if (!(t1_us > 0.0)) throw ConfigError("transmon: t1 must be positive");
    if (!(t2_echo_us > 0.0) || t2_echo_us > 2.0 * t1_us)
        throw ConfigError("transmon: t2_echo must satisfy 0 < t2_echo <= 2*t1");
    if (!(t2_ramsey_us > 0.0) || t2_ramsey_us > t2_echo_us)
        throw ConfigError("transmon: t2_ramsey must satisfy 0 < t2_ramsey <= t2_echo");
    if (epsilon_mhz.size() != static_cast<std::size_t>(levels))
        throw ConfigError("transmon: epsilon list must have exactly `levels` entries");
    for (double e : epsilon_mhz) {
        if (!std::isfinite(e)) throw ConfigError("transmon: epsilon entries must be finite");
    }
}

double TransmonParams::abs_epsilon10_ghz() const {
    return std::abs(epsilon10_mhz()) * 1e-3;
}

}  // namespace qpd::qdyn
