#include "qpd/cliffords/decay_fit.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "qpd/common/errors.hpp"

namespace qpd::cliffords {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

struct LinearSolution {
    double a = 0.0, b = 0.0, sse = 0.0;
    bool ok = false;
};

/// Weighted least squares for (A, B) at fixed p.
LinearSolution solve_linear(std::span<const double> m, std::span<const double> y,
                            std::span<const double> w, double p) {
    double sxx = 0.0, sx = 0.0, s1 = 0.0, sxy = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const double x = std::pow(p, m[i]);
        const double wi = w.empty() ? 1.0 : w[i];
        sxx += wi * x * x;
        sx += wi * x;
        s1 += wi;
        sxy += wi * x * y[i];
        sy += wi * y[i];
    }
    const double det = sxx * s1 - sx * sx;
    LinearSolution sol;
    if (std::abs(det) < 1e-14 * std::max(1.0, sxx * s1)) return sol;
    sol.a = (sxy * s1 - sx * sy) / det;
    sol.b = (sxx * sy - sx * sxy) / det;
    sol.ok = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const double r = sol.a * std::pow(p, m[i]) + sol.b - y[i];
        sol.sse += (w.empty() ? 1.0 : w[i]) * r * r;
    }
    return sol;
}

}  // namespace

DecayFit fit_decay(std::span<const double> depths, std::span<const double> survivals,
                   std::span<const double> weights) {
    if (depths.size() != survivals.size())
        throw ConfigError("fit_decay: depths/survivals size mismatch");
    if (depths.size() < 3) throw ConfigError("fit_decay: needs at least 3 depths");

    DecayFit fit;

    // initialization: B0 = 0.5, A0 = first survival - 0.5, p0 from log-linear
    // regression on (survival - B0)
    const double b0 = 0.5;
    double sm = 0.0, sl = 0.0, sml = 0.0, smm = 0.0;
    int n_pos = 0;
    for (std::size_t i = 0; i < depths.size(); ++i) {
        const double d = survivals[i] - b0;
        if (d <= 1e-12) continue;
        const double l = std::log(d);
        sm += depths[i];
        sl += l;
        sml += depths[i] * l;
        smm += depths[i] * depths[i];
        ++n_pos;
    }
    double p0 = 0.99;
    if (n_pos >= 2) {
        const double det = n_pos * smm - sm * sm;
        if (std::abs(det) > 1e-12) {
            const double slope = (n_pos * sml - sm * sl) / det;
            p0 = std::clamp(std::exp(slope), 1e-4, 1.0);
        }
    }

    // coarse scan in log(1-p) around p0, then golden-section refinement
    auto objective = [&](double p) { return solve_linear(depths, survivals, weights, p); };
    double best_p = p0;
    double best_sse = std::numeric_limits<double>::infinity();
    const double q0 = std::clamp(1.0 - p0, 1e-9, 0.999);
    for (int k = -40; k <= 40; ++k) {
        const double q = q0 * std::pow(10.0, k / 20.0);
        if (q >= 1.0) continue;
        const auto sol = objective(1.0 - q);
        if (sol.ok && sol.sse < best_sse) {
            best_sse = sol.sse;
            best_p = 1.0 - q;
        }
    }
    double lo = std::max(1e-9, 1.0 - (1.0 - best_p) * 3.0);
    double hi = std::min(1.0, 1.0 - (1.0 - best_p) / 3.0);
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = objective(x1).sse, f2 = objective(x2).sse;
    for (int it = 0; it < 200 && (hi - lo) > 1e-14; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = objective(x1).sse;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = objective(x2).sse;
        }
    }
    fit.p = 0.5 * (lo + hi);
    const auto sol = objective(fit.p);
    if (!sol.ok) {
        fit.status = FitStatus::singular;
        fit.message = "normal equations singular";
        return fit;
    }
    fit.a = sol.a;
    fit.b = sol.b;
    fit.residual_norm = std::sqrt(sol.sse);

    if (fit.p <= 1e-8 || fit.p >= 1.0 - 1e-12) {
        fit.status = FitStatus::non_convergence;
        fit.message = "decay parameter pinned at the search boundary";
    }

    // covariance from the Jacobian at the optimum
    const std::size_t n = depths.size();
    Eigen::MatrixXd j(n, 3);
    Eigen::VectorXd wv(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double pm = std::pow(fit.p, depths[i]);
        j(static_cast<Eigen::Index>(i), 0) = pm;
        j(static_cast<Eigen::Index>(i), 1) = 1.0;
        j(static_cast<Eigen::Index>(i), 2) =
            depths[i] > 0 ? fit.a * depths[i] * std::pow(fit.p, depths[i] - 1.0) : 0.0;
        wv(static_cast<Eigen::Index>(i)) = weights.empty() ? 1.0 : weights[i];
    }
    const Eigen::MatrixXd jtj = j.transpose() * wv.asDiagonal() * j;
    const double dof = static_cast<double>(n) - 3.0;
    const double s2 = dof > 0 ? sol.sse / dof : 0.0;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(jtj);
    if (lu.isInvertible()) {
        const Eigen::MatrixXd cov = s2 * lu.inverse();
        fit.a_err = std::sqrt(std::max(0.0, cov(0, 0)));
        fit.b_err = std::sqrt(std::max(0.0, cov(1, 1)));
        fit.p_err = std::sqrt(std::max(0.0, cov(2, 2)));
    } else if (fit.status == FitStatus::ok && s2 > 0.0) {
        fit.status = FitStatus::singular;
        fit.message = "covariance singular";
    }
    return fit;
}

double rb_fidelity(double p_ref) {
    if (!(p_ref > 0.0 && p_ref <= 1.0)) throw ConfigError("rb_fidelity: p out of (0, 1]");
    return 1.0 - (1.0 - p_ref) / 2.0;
}

double irb_fidelity(double p_int, double p_ref, bool* unphysical) {
    if (!(p_int > 0.0 && p_int <= 1.0 && p_ref > 0.0 && p_ref <= 1.0))
        throw ConfigError("irb_fidelity: p out of (0, 1]");
    if (unphysical) *unphysical = p_int > p_ref;
    return 1.0 - (1.0 - p_int / p_ref) / 2.0;
}

double echo_pa_fidelity(double pseudo_z_fidelity) { return std::sqrt(pseudo_z_fidelity); }

double mapping_fidelity(double echo_pa, double f_x_half, double f_y_half) {
    return echo_pa * f_x_half * f_y_half;
}

namespace {

Matrix rz(double theta) {
    Matrix u = Matrix::Zero(2, 2);
    u(0, 0) = std::polar(1.0, -0.5 * theta);
    u(1, 1) = std::polar(1.0, 0.5 * theta);
    return u;
}

Matrix rx(double theta) {
    Matrix u(2, 2);
    u(0, 0) = u(1, 1) = std::cos(0.5 * theta);
    u(0, 1) = u(1, 0) = qdyn::Complex(0.0, -std::sin(0.5 * theta));
    return u;
}

Matrix echo_pa_unitary(double delta, double sign) {
    return rz(sign * delta / 4.0) * rx(kPi) * rz(-sign * delta / 4.0);
}

}  // namespace

PseudoZReport pseudo_z_compose(double delta) {
    PseudoZReport r;
    // echoPA' carries the opposite gate sign, i.e. the opposite Z phases
    r.composed_even = echo_pa_unitary(delta, 1.0) * echo_pa_unitary(delta, -1.0);
    r.composed_odd = echo_pa_unitary(delta, -1.0) * echo_pa_unitary(delta, 1.0);
    Matrix z = Matrix::Zero(2, 2);
    z(0, 0) = 1.0;
    z(1, 1) = -1.0;
    r.dist_even_to_target = unitary_distance(r.composed_even, rz(delta));
    r.dist_odd_to_target = unitary_distance(r.composed_odd, rz(-delta));
    r.dist_even_to_z = unitary_distance(r.composed_even, z);
    r.dist_odd_to_z = unitary_distance(r.composed_odd, z);
    r.parity_dependence = unitary_distance(r.composed_even, r.composed_odd);
    return r;
}

PseudoZChannelReport pseudo_z_from_channels(const QuantumChannel& echo_pa_even,
                                            const QuantumChannel& echo_pa_prime_even,
                                            const QuantumChannel& echo_pa_odd,
                                            const QuantumChannel& echo_pa_prime_odd,
                                            double delta) {
    PseudoZChannelReport r;
    r.even = echo_pa_prime_even.after(echo_pa_even);
    r.odd = echo_pa_prime_odd.after(echo_pa_odd);
    r.avg_fidelity_even = r.even.average_gate_fidelity(rz(delta));
    r.avg_fidelity_odd = r.odd.average_gate_fidelity(rz(-delta));
    r.parity_dependence = (r.even.superop() - r.odd.superop()).norm();
    return r;
}

}  // namespace qpd::cliffords
