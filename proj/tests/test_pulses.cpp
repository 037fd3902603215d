#include <cmath>
#include <sstream>

#include "doctest.h"
#include "qpd/common/rng.hpp"
#include "qpd/pulses/drive.hpp"
#include "qpd/pulses/envelopes.hpp"
#include "qpd/pulses/phase_model.hpp"
#include "qpd/pulses/sequence.hpp"
#include "qpd/qdyn/lindblad.hpp"

using namespace qpd;
using namespace qpd::pulses;
using qdyn::Complex;
using qdyn::Matrix;
using qdyn::Parity;
using qdyn::TransmonParams;
using qdyn::Vector;

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;
}

TEST_CASE("smoothed square value") {
    SmoothedSquare p{0.0, 217.0, 5.0, 0.42};

    SUBCASE("flat-top center reaches the amplitude") {
        CHECK(smoothed_square_value(p, 0.5 * p.flat_top_ns) ==
              doctest::Approx(p.amplitude_2e).epsilon(1e-6));
    }

    SUBCASE("vanishes far away") {
        CHECK(std::abs(smoothed_square_value(p, -1e4)) < 1e-12);
        CHECK(std::abs(smoothed_square_value(p, 1e4)) < 1e-12);
    }

    SUBCASE("symmetric about the flat-top center") {
        Rng rng(5);
        for (int i = 0; i < 40; ++i) {
            const double x = rng.uniform(-30.0, 250.0);
            const double a = smoothed_square_value(p, x);
            const double b = smoothed_square_value(p, p.flat_top_ns - x);
            CHECK(a == doctest::Approx(b).epsilon(1e-12));
        }
    }
}

TEST_CASE("net-zero gate pulse") {
    const auto g = make_net_zero(0.25, 0.25, 217.0, 5.0, 30.0, 297.0);

    SUBCASE("baseline before the pulses") { CHECK(ng_of_t(g, -200.0) == doctest::Approx(0.25)); }

    SUBCASE("first flat top sits near the sweet point for A = 0.25") {
        CHECK(ng_of_t(g, 30.0 + 0.5 * 217.0) == doctest::Approx(0.5).epsilon(1e-6));
    }

    SUBCASE("displacement integral vanishes") {
        // closed-form antiderivative through the sequence helper
        TransmonParams params = TransmonParams::paper_device();
        SequenceConfig cfg;
        cfg.gate_amplitude_2e = 0.25;
        const PulseSequence seq = compile_echo_cpm(params, cfg);
        const double integral =
            seq.net_displacement_integral(-500.0, seq.total_duration_ns() + 500.0);
        CHECK(std::abs(integral) < 1e-9 * 0.25 * 217.0);
    }
}

TEST_CASE("drag envelope") {
    MicrowavePulse p = mw_pulse_for_rotation(kPi, 0.0, 20.0, 5.0, 0.0);

    SUBCASE("area gives the rotation angle") {
        // trapezoid over the span
        const int n = 20000;
        double area = 0.0;
        for (int i = 0; i < n; ++i) {
            const double t = p.span_ns() * (i + 0.5) / n;
            area += drag_envelope(p, t, 0.33).real() * p.span_ns() / n;
        }
        CHECK(area == doctest::Approx(kPi).epsilon(1e-6));
        CHECK(p.rotation_angle() == doctest::Approx(kPi).epsilon(1e-12));
    }

    SUBCASE("zero drag coefficient keeps the envelope real") {
        for (double t : {6.0, 12.0, 17.5, 24.0}) {
            CHECK(drag_envelope(p, t, 0.33).imag() == 0.0);
        }
    }

    SUBCASE("zero at segment edges and inside buffers") {
        MicrowavePulse q = mw_pulse_for_rotation(kPi / 2, 0.0, 20.0, 5.0, 0.5);
        for (double t : {0.0, 2.5, 5.0, 25.0, 27.0, 30.0}) {
            CHECK(std::abs(drag_envelope(q, t, 0.33)) < 1e-12);
        }
    }

    SUBCASE("calibrated pulse is an X gate at K = 2") {
        // unitary oracle: evolve |0> through the pulse with no decoherence
        TransmonParams params = TransmonParams::paper_device();
        params.levels = 2;
        params.epsilon_mhz.resize(2);
        PulseSequence seq(0.25, params.f01_ghz);
        seq.append_microwave(p);
        auto h = rotating_frame_hamiltonian(params, seq, Parity::odd);
        const Matrix rho =
            qdyn::lindblad_evolve(h, {}, qdyn::level_projector(2, 0), 0.0, seq.total_duration_ns());
        CHECK(rho(1, 1).real() == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("echo cpm compilation") {
    const TransmonParams params = TransmonParams::paper_device();
    SequenceConfig cfg;  // defaults: T = 217, sigma = 5, 20 ns gates + 5 ns buffers

    const PulseSequence seq = compile_echo_cpm(params, cfg);

    SUBCASE("timeline layout") {
        REQUIRE(seq.segments().size() == 5);
        CHECK(seq.total_duration_ns() ==
              doctest::Approx(3.0 * 30.0 + 2.0 * (217.0 + 4.0 * 5.0)).epsilon(1e-12));
        // gapless
        double cursor = 0.0;
        for (const auto& s : seq.segments()) {
            CHECK(s.t_start_ns == doctest::Approx(cursor));
            cursor = s.t_end_ns;
        }
    }

    SUBCASE("zero-amplitude gates make the output parity independent") {
        SequenceConfig flat = cfg;
        flat.gate_amplitude_2e = 0.0;
        const PulseSequence s = compile_echo_cpm(params, flat);
        const double pe = phase_model_population(s, params, Parity::even);
        const double po = phase_model_population(s, params, Parity::odd);
        CHECK(pe == doctest::Approx(po).epsilon(1e-12));
    }

    SUBCASE("X/2 and -X/2 calibration traces mirror about one half") {
        // Swapping the parity label together with the final-gate sign reflects
        // the trajectory through the xz-plane, so p(odd, -X/2) = 1 - p(even, X/2);
        // the two parity-averaged traces cross at 0.5 (the delta = pi condition).
        const PulseSequence sx = compile_echo_cpm(params, cfg, FinalGate::x_half);
        const PulseSequence sxm = compile_echo_cpm(params, cfg, FinalGate::minus_x_half);
        const double p_even_x = phase_model_population(sx, params, Parity::even);
        const double p_odd_x = phase_model_population(sx, params, Parity::odd);
        const double p_even_xm = phase_model_population(sxm, params, Parity::even);
        const double p_odd_xm = phase_model_population(sxm, params, Parity::odd);
        CHECK(p_even_x == doctest::Approx(1.0 - p_odd_xm).epsilon(1e-9));
        CHECK(p_odd_x == doctest::Approx(1.0 - p_even_xm).epsilon(1e-9));
    }

    SUBCASE("timeline csv dump") {
        std::ostringstream os;
        seq.write_timeline_csv(os);
        const std::string text = os.str();
        CHECK(text.find("t_start_ns,t_end_ns,kind,params") != std::string::npos);
        CHECK(text.find("mw") != std::string::npos);
        CHECK(text.find("gate") != std::string::npos);
    }
}

TEST_CASE("ideal phase model") {
    const TransmonParams params = TransmonParams::paper_device();

    SUBCASE("delta = pi sends the parities to opposite poles") {
        // hard-edge equivalent: pick the flat top so the erf-edged delta is pi
        SequenceConfig cfg;
        cfg.gate_amplitude_2e = 0.25;
        PulseSequence seq = compile_echo_cpm(params, cfg);
        // bisect the flat top for delta(T) = pi
        double lo = 150.0, hi = 260.0;
        for (int i = 0; i < 60; ++i) {
            SequenceConfig mid = cfg;
            mid.gate_flat_top_ns = 0.5 * (lo + hi);
            const double d =
                parity_phase_difference(compile_echo_cpm(params, mid), params);
            (d < kPi ? lo : hi) = mid.gate_flat_top_ns;
        }
        cfg.gate_flat_top_ns = 0.5 * (lo + hi);
        seq = compile_echo_cpm(params, cfg);
        const auto even = ideal_phase_model(seq, params, Parity::even);
        const auto odd = ideal_phase_model(seq, params, Parity::odd);
        CHECK(std::abs(even.final_state.z + odd.final_state.z) < 1e-6);
        CHECK(std::abs(std::abs(even.final_state.z) - 1.0) < 1e-6);

        // intermediate checkpoints (after X/2, gates, X) stay on the equator
        for (std::size_t i = 1; i + 1 < even.checkpoints.size(); ++i) {
            CHECK(std::abs(even.checkpoints[i].z) < 1e-9);
        }
    }

    SUBCASE("zero displacement gives identical parity outcomes") {
        SequenceConfig cfg;
        cfg.gate_amplitude_2e = 0.0;
        const PulseSequence seq = compile_echo_cpm(params, cfg);
        const auto even = ideal_phase_model(seq, params, Parity::even).final_state;
        const auto odd = ideal_phase_model(seq, params, Parity::odd).final_state;
        CHECK(even.x == doctest::Approx(odd.x).epsilon(1e-12));
        CHECK(even.y == doctest::Approx(odd.y).epsilon(1e-12));
        CHECK(even.z == doctest::Approx(odd.z).epsilon(1e-12));
    }

    SUBCASE("parity antisymmetry of the final Z projection") {
        SequenceConfig cfg;
        for (double t : {120.0, 180.0, 217.0, 240.0}) {
            cfg.gate_flat_top_ns = t;
            const PulseSequence seq = compile_echo_cpm(params, cfg);
            const double ze = ideal_phase_model(seq, params, Parity::even).final_state.z;
            const double zo = ideal_phase_model(seq, params, Parity::odd).final_state.z;
            CHECK(ze == doctest::Approx(-zo).epsilon(1e-9));
        }
    }
}

TEST_CASE("theoretical pi duration and the erf-edge shift") {
    const TransmonParams params = TransmonParams::paper_device();

    SUBCASE("hard-edged, full-swing solution") {
        CHECK(theoretical_pi_duration_ns(1.192) == doctest::Approx(209.7315).epsilon(1e-4));
        // oracle: delta(T) = 2 * 2*pi*|eps10|*T for rectangular full-swing pulses
        const double T = theoretical_pi_duration_ns(1.192);
        const double delta = 2.0 * 2.0 * kPi * 1.192e-3 * T;
        CHECK(delta == doctest::Approx(kPi).epsilon(1e-12));
    }

    SUBCASE("compiled default sequence reaches delta = pi near the working point") {
        SequenceConfig cfg;  // A = 0.2, sigma = 5
        cfg.gate_flat_top_ns = 217.0;
        const double delta = parity_phase_difference(compile_echo_cpm(params, cfg), params);
        CHECK(delta / kPi == doctest::Approx(1.0).epsilon(0.02));
    }
}

TEST_CASE("charge monitor fringe") {
    const TransmonParams params = TransmonParams::paper_device();
    SequenceConfig cfg;

    SUBCASE("zero delay returns the qubit to |1> (two X/2 = X)") {
        const PulseSequence seq = compile_charge_monitor(params, cfg, 0.0);
        for (Parity p : {Parity::even, Parity::odd}) {
            CHECK(phase_model_population(seq, params, p) == doctest::Approx(1.0).epsilon(1e-9));
        }
    }

    SUBCASE("800 ns delay: maxima at degeneracy, minima at sweet points") {
        auto mean_pop = [&](double ng) {
            SequenceConfig c = cfg;
            c.ng0 = ng;
            const PulseSequence seq = compile_charge_monitor(params, c, 800.0);
            return 0.5 * (phase_model_population(seq, params, Parity::even) +
                          phase_model_population(seq, params, Parity::odd));
        };
        // oracle: parity-averaged fringe (1 + cos(pi*eps10*t_free*cos(2 pi ng)))/2,
        // with the free time running between the two X/2 pulse centers
        auto oracle = [&](double ng) {
            const double t_free = 800.0 + cfg.mw_duration_ns + 2.0 * cfg.mw_buffer_ns;
            const double phi = kPi * 1.192e-3 * t_free * std::cos(2.0 * kPi * ng);
            return 0.5 * (1.0 + std::cos(phi));
        };
        for (double ng : {0.0, 0.1, 0.25, 0.37, 0.5}) {
            CHECK(mean_pop(ng) == doctest::Approx(oracle(ng)).epsilon(1e-6));
        }
        CHECK(mean_pop(0.25) == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(mean_pop(0.0) < 0.01);   // near-unit contrast at 800 ns
        CHECK(mean_pop(0.5) < 0.01);
    }
}

TEST_CASE("lindblad simulation agrees with the phase model when decoherence is off") {
    const TransmonParams params = TransmonParams::paper_device();
    SequenceConfig cfg;
    cfg.gate_flat_top_ns = 217.0;

    for (Parity parity : {Parity::even, Parity::odd}) {
        const PulseSequence seq = compile_echo_cpm(params, cfg);
        auto h = rotating_frame_hamiltonian(params, seq, parity);
        const Matrix rho = qdyn::lindblad_evolve(h, {}, qdyn::level_projector(params.levels, 0),
                                                 0.0, seq.total_duration_ns());
        const auto model = ideal_phase_model(seq, params, parity).final_state;
        Vector target(params.levels);
        target.setZero();
        // Bloch -> state: |psi> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>
        const double theta = std::acos(std::clamp(model.z, -1.0, 1.0));
        const double phi = std::atan2(model.y, model.x);
        target(0) = std::cos(0.5 * theta);
        target(1) = std::polar(std::sin(0.5 * theta), phi);
        CHECK(qdyn::state_fidelity(rho, target) >= 0.999);
    }
}
