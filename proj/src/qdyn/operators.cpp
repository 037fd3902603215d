#include "qpd/qdyn/operators.hpp"

#include <cmath>

#include "qpd/common/errors.hpp"

namespace qpd::qdyn {

Matrix lowering_op(int levels) {
    Matrix a = Matrix::Zero(levels, levels);
    for (int k = 0; k + 1 < levels; ++k) a(k, k + 1) = std::sqrt(static_cast<double>(k + 1));
    return a;
}

Matrix number_op(int levels) {
    Matrix n = Matrix::Zero(levels, levels);
    for (int k = 0; k < levels; ++k) n(k, k) = static_cast<double>(k);
    return n;
}

Matrix static_hamiltonian(const TransmonParams& params) {
    if (params.levels < 2) throw ConfigError("static_hamiltonian: needs at least 2 levels");
    Matrix h = Matrix::Zero(params.levels, params.levels);
    for (int k = 0; k < params.levels; ++k) {
        const double fk = k * params.f01_ghz - 0.5 * params.eta_ghz * k * (k - 1);
        h(k, k) = two_pi * fk;
    }
    return h;
}

Matrix static_hamiltonian_rotating(const TransmonParams& params, double frame_freq_ghz) {
    Matrix h = static_hamiltonian(params);
    for (int k = 0; k < params.levels; ++k) h(k, k) -= two_pi * frame_freq_ghz * k;
    return h;
}

namespace {
double dispersion_cos(double ng, Parity parity) {
    return std::cos(two_pi * (ng + (parity_value(parity) - 1) / 4.0));
}
}  // namespace

Matrix dispersion_hamiltonian(const TransmonParams& params, double ng, Parity parity) {
    const double c = dispersion_cos(ng, parity);
    Matrix h = Matrix::Zero(params.levels, params.levels);
    for (int k = 0; k < params.levels; ++k) {
        h(k, k) = -0.5 * two_pi * params.epsilon_mhz[static_cast<std::size_t>(k)] * 1e-3 * c;
    }
    return h;
}

double parity_frequency_ghz(const TransmonParams& params, double ng, Parity parity) {
    const double c = dispersion_cos(ng, parity);
    return params.f01_ghz - 0.5 * params.epsilon10_mhz() * 1e-3 * c;
}

double parity_splitting_ghz(const TransmonParams& params, double ng) {
    return std::abs(params.epsilon10_mhz()) * 1e-3 * std::abs(std::cos(two_pi * ng));
}

double pure_dephasing_rate_per_us(const TransmonParams& params, DephasingSource source) {
    const double t2 = source == DephasingSource::echo ? params.t2_echo_us : params.t2_ramsey_us;
    return 1.0 / t2 - 1.0 / (2.0 * params.t1_us);
}

std::vector<Matrix> collapse_operators(const TransmonParams& params, DephasingSource source) {
    const double gamma_phi_us = pure_dephasing_rate_per_us(params, source);
    if (gamma_phi_us < 0.0)
        throw ConfigError("collapse_operators: T2 > 2*T1 gives a negative dephasing rate");

    const double relax_rate = 1.0 / (params.t1_us * 1e3);  // 1/ns
    const double deph_rate = 2.0 * gamma_phi_us * 1e-3;    // 1/ns

    std::vector<Matrix> ops;
    ops.push_back(std::sqrt(relax_rate) * lowering_op(params.levels));
    ops.push_back(std::sqrt(deph_rate) * number_op(params.levels));
    return ops;
}

}  // namespace qpd::qdyn
