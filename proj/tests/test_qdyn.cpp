#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

#include "doctest.h"
#include "qpd/common/errors.hpp"
#include "qpd/common/rng.hpp"
#include "qpd/qdyn/lindblad.hpp"
#include "qpd/qdyn/operators.hpp"

using namespace qpd;
using namespace qpd::qdyn;

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

Matrix random_hermitian(int dim, double scale, Rng& rng) {
    Matrix h(dim, dim);
    for (int i = 0; i < dim; ++i) {
        h(i, i) = Complex(rng.normal(0.0, scale), 0.0);
        for (int j = i + 1; j < dim; ++j) {
            const Complex v(rng.normal(0.0, scale), rng.normal(0.0, scale));
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    return h;
}

}  // namespace

TEST_CASE("static hamiltonian matches the transmon ladder") {
    TransmonParams p = TransmonParams::paper_device();

    SUBCASE("two levels") {
        TransmonParams p2 = p;
        p2.levels = 2;
        p2.epsilon_mhz.resize(2);
        const Matrix h = static_hamiltonian(p2);
        CHECK(h(0, 0) == Complex(0.0, 0.0));
        CHECK(h(1, 1).real() == doctest::Approx(kTwoPi * 3.51589).epsilon(1e-14));
    }

    SUBCASE("third level carries the anharmonicity") {
        const Matrix h = static_hamiltonian(p);
        CHECK(h(2, 2).real() ==
              doctest::Approx(kTwoPi * (2.0 * 3.51589 - 0.33)).epsilon(1e-14));
    }

    SUBCASE("zero anharmonicity gives a harmonic ladder") {
        TransmonParams ph = p;
        ph.eta_ghz = 0.0;
        const Matrix h = static_hamiltonian(ph);
        const double gap10 = (h(1, 1) - h(0, 0)).real();
        const double gap21 = (h(2, 2) - h(1, 1)).real();
        CHECK(gap21 == doctest::Approx(gap10).epsilon(1e-14));
    }

    SUBCASE("rejects fewer than two levels") {
        TransmonParams bad = p;
        bad.levels = 1;
        CHECK_THROWS_AS(static_hamiltonian(bad), ConfigError);
    }
}

TEST_CASE("dispersion term") {
    const TransmonParams p = TransmonParams::paper_device();

    SUBCASE("degenerate at ng = 0.25") {
        const Matrix he = dispersion_hamiltonian(p, 0.25, Parity::even);
        const Matrix ho = dispersion_hamiltonian(p, 0.25, Parity::odd);
        CHECK((he - ho).cwiseAbs().maxCoeff() < 1e-15);
        CHECK(he.cwiseAbs().maxCoeff() < 1e-15);
    }

    SUBCASE("splitting at ng = 0.5 equals |eps10|") {
        const double split = parity_splitting_ghz(p, 0.5);
        CHECK(split == doctest::Approx(1.192e-3).epsilon(1e-12));
    }

    SUBCASE("mirror points about 0.25 swap the parities") {
        const double x = 0.073;
        const Matrix a = dispersion_hamiltonian(p, 0.25 + x, Parity::even);
        const Matrix b = dispersion_hamiltonian(p, 0.25 - x, Parity::odd);
        CHECK((a - b).cwiseAbs().maxCoeff() < 1e-15);
    }

    SUBCASE("hermitian for arbitrary ng") {
        Rng rng(7);
        for (int i = 0; i < 50; ++i) {
            const double ng = rng.uniform(-3.0, 3.0);
            const Matrix h = dispersion_hamiltonian(p, ng, Parity::odd);
            CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() < 1e-10);
        }
    }
}

TEST_CASE("parity frequency") {
    const TransmonParams p = TransmonParams::paper_device();

    CHECK(parity_frequency_ghz(p, 0.25, Parity::even) ==
          doctest::Approx(parity_frequency_ghz(p, 0.25, Parity::odd)).epsilon(1e-15));

    // maximal splitting |eps10| at the charge sweet point
    const double fe = parity_frequency_ghz(p, 0.0, Parity::even);
    const double fo = parity_frequency_ghz(p, 0.0, Parity::odd);
    CHECK(std::abs(fe - fo) == doctest::Approx(1.192e-3).epsilon(1e-12));

    // half-period shift swaps the branches
    CHECK(parity_frequency_ghz(p, 0.1 + 0.5, Parity::even) ==
          doctest::Approx(parity_frequency_ghz(p, 0.1, Parity::odd)).epsilon(1e-12));

    // splitting vanishes at every degeneracy point, peaks at sweet points
    for (double ng : {0.25, 0.75, 1.25, -0.75}) CHECK(parity_splitting_ghz(p, ng) < 1e-15);
    for (double ng : {0.0, 0.5, 1.0}) {
        CHECK(parity_splitting_ghz(p, ng) == doctest::Approx(1.192e-3).epsilon(1e-12));
    }
}

TEST_CASE("collapse operators") {
    TransmonParams p = TransmonParams::paper_device();

    SUBCASE("paper rates") {
        // Gamma_phi = 1/47 - 1/160 per us
        const double gamma_phi = pure_dephasing_rate_per_us(p, DephasingSource::echo);
        CHECK(gamma_phi == doctest::Approx(1.0 / 47.0 - 1.0 / 160.0).epsilon(1e-14));
        CHECK(gamma_phi == doctest::Approx(0.01503).epsilon(1e-3));

        const auto ops = collapse_operators(p, DephasingSource::echo);
        REQUIRE(ops.size() == 2);
        // relaxation: sqrt(1/T1) * a, T1 in ns
        CHECK(std::abs(ops[0](0, 1)) ==
              doctest::Approx(std::sqrt(1.0 / 80000.0)).epsilon(1e-12));
        // dephasing: sqrt(2 Gamma_phi) * n
        CHECK(std::abs(ops[1](1, 1)) ==
              doctest::Approx(std::sqrt(2.0 * gamma_phi * 1e-3)).epsilon(1e-12));
    }

    SUBCASE("pure-T1 limit has no dephasing") {
        p.t2_echo_us = 2.0 * p.t1_us;
        const auto ops = collapse_operators(p, DephasingSource::echo);
        CHECK(ops[1].cwiseAbs().maxCoeff() < 1e-12);
    }

    SUBCASE("T1 -> infinity keeps only dephasing") {
        p.t1_us = 1e12;
        const auto ops = collapse_operators(p, DephasingSource::echo);
        CHECK(ops[0].cwiseAbs().maxCoeff() < 1e-5);
        CHECK(ops[1].cwiseAbs().maxCoeff() > 1e-4);
    }

    SUBCASE("rejects T2 > 2 T1") {
        p.t2_echo_us = 2.0 * p.t1_us + 1.0;
        CHECK_THROWS_AS(collapse_operators(p, DephasingSource::echo), ConfigError);
    }
}

TEST_CASE("lindblad evolution against closed-form oracles") {
    const TransmonParams p = TransmonParams::paper_device();
    const int dim = 3;

    SUBCASE("H = 0, no collapse: identity evolution") {
        auto h = [](double, Matrix& out) { out.setZero(); };
        Matrix rho0 = Matrix::Zero(dim, dim);
        rho0(0, 0) = 0.25;
        rho0(1, 1) = 0.75;
        rho0(0, 1) = Complex(0.1, -0.2);
        rho0(1, 0) = std::conj(rho0(0, 1));
        const Matrix rho = lindblad_evolve(h, {}, rho0, 0.0, 100.0);
        CHECK((rho - rho0).cwiseAbs().maxCoeff() < 1e-12);
    }

    SUBCASE("relaxation only: excited population decays as exp(-t/T1)") {
        auto h = [](double, Matrix& out) { out.setZero(); };
        const double t1_ns = p.t1_us * 1e3;
        std::vector<Matrix> collapse{std::sqrt(1.0 / t1_ns) * lowering_op(dim)};
        const double t = 2000.0;
        const Matrix rho = lindblad_evolve(h, collapse, level_projector(dim, 1), 0.0, t);
        const double oracle = std::exp(-t / t1_ns);
        CHECK(rho(1, 1).real() == doctest::Approx(oracle).epsilon(1e-6));
    }

    SUBCASE("resonant Rabi drive oscillates at the drive rate") {
        const double omega = 0.05;  // rad/ns
        Matrix hx = Matrix::Zero(2, 2);
        hx(0, 1) = hx(1, 0) = 0.5 * omega;
        auto h = [&](double, Matrix& out) { out = hx; };
        const double t = 400.0;
        const Matrix rho = lindblad_evolve(h, {}, level_projector(2, 0), 0.0, t);
        const double oracle = std::sin(0.5 * omega * t) * std::sin(0.5 * omega * t);
        CHECK(rho(1, 1).real() == doctest::Approx(oracle).epsilon(1e-8));
    }

    SUBCASE("pure dephasing of |+> against the analytic oracle") {
        // dephasing operator sqrt(2 Gamma_phi) n decays rho01 at Gamma_phi
        auto h = [](double, Matrix& out) { out.setZero(); };
        const double gamma_phi = pure_dephasing_rate_per_us(p, DephasingSource::echo) * 1e-3;
        std::vector<Matrix> collapse{std::sqrt(2.0 * gamma_phi) * number_op(2)};
        Matrix plus = Matrix::Constant(2, 2, Complex(0.5, 0.0));
        const double t = 30000.0;
        const Matrix rho = lindblad_evolve(h, collapse, plus, 0.0, t, {0.05, 1e-6});
        Vector target(2);
        target << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
        const double oracle = 0.5 * (1.0 + std::exp(-gamma_phi * t));
        CHECK(state_fidelity(rho, target) == doctest::Approx(oracle).epsilon(1e-6));
    }

    SUBCASE("trace drift reported as integration failure") {
        auto h = [](double, Matrix& out) { out.setZero(); };
        std::vector<Matrix> collapse{2.0 * lowering_op(dim)};  // fast decay
        LindbladOptions opts;
        opts.dt_ns = 5.0;  // far too coarse
        CHECK_THROWS_AS(
            lindblad_evolve(h, collapse, level_projector(dim, 1), 0.0, 100.0, opts),
            NumericalError);
    }
}

TEST_CASE("state fidelity basics") {
    Vector psi(2);
    psi << Complex(0.6, 0.0), Complex(0.0, 0.8);
    Matrix pure = psi * psi.adjoint();
    CHECK(state_fidelity(pure, psi) == doctest::Approx(1.0).epsilon(1e-12));

    Matrix mixed = 0.5 * Matrix::Identity(2, 2);
    CHECK(state_fidelity(mixed, psi) == doctest::Approx(0.5).epsilon(1e-12));

    Vector wrong(3);
    wrong.setZero();
    CHECK_THROWS_AS(state_fidelity(mixed, wrong), ConfigError);
}

TEST_CASE("decoherence-free evolution matches the matrix-exponential oracle") {
    // Piecewise-constant random H, both paths segment-aligned: K <= 4, <= 1 us.
    Rng rng(42);
    for (int dim : {2, 3, 4}) {
        Matrix rho = level_projector(dim, 0);
        Vector psi = level_state(dim, 0);
        const int n_seg = 4;
        const double seg_ns = 250.0;
        for (int s = 0; s < n_seg; ++s) {
            const Matrix h = random_hermitian(dim, 0.15, rng);
            auto h_fn = [&](double, Matrix& out) { out = h; };
            rho = lindblad_evolve(h_fn, {}, rho, 0.0, seg_ns);
            const Matrix u = (Complex(0.0, -1.0) * h * seg_ns).exp();
            psi = u * psi;
        }
        CHECK(state_fidelity(rho, psi) >= 1.0 - 1e-8);

        const DensityCheck c = check_density(rho);
        CHECK(c.hermiticity_dev < 1e-10);
        CHECK(c.trace_dev < 1e-6);
        CHECK(c.min_eigenvalue > -1e-6);
    }
}

TEST_CASE("rk4 step-halving convergence at the default step") {
    // drive-scale Hamiltonian, comparable to the compiled pulse workloads
    Rng rng(3);
    const int dim = 3;
    const Matrix h = random_hermitian(dim, 0.12, rng);
    auto h_fn = [&](double t, Matrix& out) {
        out = h;
        out(1, 1) += 0.05 * std::sin(0.01 * t);
    };
    const TransmonParams p = TransmonParams::paper_device();
    const auto collapse = collapse_operators(p, DephasingSource::echo);
    Vector target = level_state(dim, 1);

    LindbladOptions coarse;  // default dt
    LindbladOptions fine;
    fine.dt_ns = coarse.dt_ns / 2.0;
    const Matrix ra = lindblad_evolve(h_fn, collapse, level_projector(dim, 0), 0.0, 500.0, coarse);
    const Matrix rb = lindblad_evolve(h_fn, collapse, level_projector(dim, 0), 0.0, 500.0, fine);
    CHECK(std::abs(state_fidelity(ra, target) - state_fidelity(rb, target)) < 1e-8);
}

TEST_CASE("default epsilon ladder pins eps10 and grows with level") {
    const auto eps = default_epsilon_ladder(3.51589, 0.33, -1.192, 4);
    REQUIRE(eps.size() == 4);
    CHECK(eps[1] - eps[0] == doctest::Approx(-1.192).epsilon(1e-12));
    CHECK(std::abs(eps[2]) > std::abs(eps[1]));
    CHECK(std::abs(eps[3]) > std::abs(eps[2]));

    const TransmonParams p = TransmonParams::paper_device();
    CHECK(std::abs(p.epsilon10_mhz()) == doctest::Approx(1.192).epsilon(1e-12));
    CHECK_NOTHROW(p.validate());
}

TEST_CASE("transmon parameter validation") {
    TransmonParams p = TransmonParams::paper_device();
    p.t2_echo_us = 200.0;  // > 2*T1
    CHECK_THROWS_AS(p.validate(), ConfigError);

    p = TransmonParams::paper_device();
    p.epsilon_mhz.pop_back();
    CHECK_THROWS_AS(p.validate(), ConfigError);

    p = TransmonParams::paper_device();
    p.t2_ramsey_us = p.t2_echo_us + 1.0;
    CHECK_THROWS_AS(p.validate(), ConfigError);
}
