#include <doctest.h>

#include <fftw3.h>

#include "nlshock/nlssim.hpp"

using namespace nlshock;

namespace {
SimGrid small_grid() {
    SimGrid g;
    g.L = 60.0;
    g.N = 1 << 11;
    g.dt = 4e-4;
    g.sponge_width = 14.0;
    g.sponge_rate = 30.0;
    return g;
}
} // namespace

TEST_CASE("plane-wave regions stay exact away from the front") {
    BackgroundParams p{1.4, 1.4, 0.0};
    NlsSimulator sim(p, small_grid());
    sim.run_to(2.0);
    // window untouched by the step front and by the sponge
    double worst = 0.0;
    for (double x : {25.0, 28.0, 31.0, 34.0}) {
        worst = std::max(worst, std::abs(sim.q_at(x) - sim.reference(x, sim.time())));
        worst = std::max(worst, std::abs(sim.q_at(-x) - sim.reference(-x, sim.time())));
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("mass density is conserved in the untouched window") {
    BackgroundParams p{1.4, 1.4, 0.0};
    NlsSimulator sim(p, small_grid());
    double m0 = sim.mass(24.0, 36.0);
    sim.run_to(2.0);
    double m1 = sim.mass(24.0, 36.0);
    CHECK(std::abs(m1 - m0) < 1e-6 * m0);
}

TEST_CASE("dispersion relation of the background is reproduced") {
    BackgroundParams p{1.3, 1.3, 0.0};
    NlsSimulator sim(p, small_grid());
    double x0 = 30.0;
    cplx a = sim.q_at(x0);
    sim.run_to(0.5);
    cplx b = sim.q_at(x0);
    double dphase = std::arg(b / a);
    double w = 2.0 * p.A2 * p.A2 - 4.0;
    double expect = std::remainder(w * 0.5, 2.0 * M_PI);
    CHECK(std::abs(std::remainder(dphase - expect, 2.0 * M_PI)) < 1e-4);
}

TEST_CASE("second-order self-convergence under dt refinement") {
    BackgroundParams p{1.5, 1.5, 0.0};
    auto run_with = [&](double dt) {
        SimGrid g = small_grid();
        g.dt = dt;
        NlsSimulator sim(p, g);
        sim.run_to(0.5);
        return sim.q_at(0.8);  // inside the dispersive fan
    };
    cplx qa = run_with(4.0e-4);
    cplx qb = run_with(2.0e-4);
    cplx qc = run_with(1.0e-4);
    double e1 = std::abs(qa - qc);
    double e2 = std::abs(qb - qc);
    // halving dt shrinks the error by ~4 (Richardson against the finest):
    // e1 ~ c(4h^2), e2 ~ c(h^2 * ~1.33 relative to qc)
    CHECK(e1 / e2 > 2.2);
    CHECK(e1 / e2 < 8.0);
}

TEST_CASE("linear substep is time-reversible to machine precision") {
    int N = 1 << 10;
    std::vector<cplx> q(N), qh(N), phase(N), back(N);
    std::srand(71);
    for (int i = 0; i < N; ++i)
        q[i] = cplx(std::rand() / double(RAND_MAX) - 0.5, std::rand() / double(RAND_MAX) - 0.5);
    std::vector<cplx> orig = q;
    double L = 40.0, dt = 1e-3;
    for (int i = 0; i < N; ++i) {
        double k = 2.0 * M_PI * ((i <= N / 2) ? i : i - N) / (2.0 * L);
        phase[i] = std::exp(cplx(0, -k * k * dt)) / double(N);
        back[i] = std::exp(cplx(0, k * k * dt)) / double(N);
    }
    fftw_plan fwd = fftw_plan_dft_1d(N, reinterpret_cast<fftw_complex*>(q.data()),
                                     reinterpret_cast<fftw_complex*>(qh.data()), FFTW_FORWARD,
                                     FFTW_ESTIMATE);
    fftw_plan bwd = fftw_plan_dft_1d(N, reinterpret_cast<fftw_complex*>(qh.data()),
                                     reinterpret_cast<fftw_complex*>(q.data()), FFTW_BACKWARD,
                                     FFTW_ESTIMATE);
    fftw_execute(fwd);
    kernels::spectral_multiply_serial(qh, phase);
    fftw_execute(bwd);
    fftw_execute(fwd);
    kernels::spectral_multiply_serial(qh, back);
    fftw_execute(bwd);
    double worst = 0.0;
    for (int i = 0; i < N; ++i) worst = std::max(worst, std::abs(q[i] - orig[i]));
    CHECK(worst < 1e-12);
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
}

TEST_CASE("interior window is independent of the domain half-length") {
    BackgroundParams p{1.5, 1.5, 0.0};
    SimGrid g1 = small_grid();
    SimGrid g2 = small_grid();
    g2.L = 90.0;
    g2.N = 1 << 12;  // keeps dx comparable
    NlsSimulator s1(p, g1), s2(p, g2);
    s1.run_to(1.5);
    s2.run_to(1.5);
    double worst = 0.0;
    for (double x = -3.0; x <= 3.0; x += 0.5)
        worst = std::max(worst, std::abs(s1.q_at(x) - s2.q_at(x)));
    CHECK(worst < 1e-6);
}

TEST_CASE("sponge keeps the edges pinned to the references") {
    BackgroundParams p{1.5, 1.5, 0.0};
    NlsSimulator sim(p, small_grid());
    sim.run_to(1.0);
    CHECK(sim.sponge_residual() < 0.05);
    CHECK(sim.max_abs() < 5.0);
}

TEST_CASE("below-threshold comparison carries a warning flag") {
    BackgroundParams p{1.5, 1.5, 0.0};
    SimGrid g = small_grid();
    NlsSimulator sim(p, g);
    Asymptotics asym(p);
    CompareReport rep = compare_sim_asym(sim, asym, 0.0, {1.0}, 1);
    CHECK(rep.below_threshold_warning);
    CHECK(rep.rows.size() == 1);
}
