#include <doctest.h>

#include "nlshock/gband.hpp"
#include "nlshock/quadrature.hpp"

using namespace nlshock;

TEST_CASE("symmetric band parameters") {
    GBand g = GBand::build_symmetric(BackgroundParams{1.5, 1.5, 0.0});
    CHECK(g.mu() == 0.0);
    CHECK(std::abs(g.beta() - cplx(0, 1.1180339887498949)) < 1e-14);
    GBand g2 = GBand::build_symmetric(BackgroundParams{std::sqrt(2.0), std::sqrt(2.0), 0.0});
    CHECK(std::abs(g2.beta() - cplx(0, 1)) < 1e-14);
    CHECK_THROWS(GBand::build_symmetric(BackgroundParams{0.9, 0.9, 0.0}));
}

TEST_CASE("dg matches the phase derivative at infinity") {
    GBand g = GBand::build_symmetric(BackgroundParams{1.5, 1.5, 0.0});
    // symmetric merge: dg - 4k = O(k^-3), log-log slope about -3
    double r1 = std::abs(g.dg(cplx(1e2, 0)) - 4.0 * 1e2);
    double r2 = std::abs(g.dg(cplx(1e3, 0)) - 4.0 * 1e3);
    double slope = std::log10(r2 / r1);
    CHECK(slope < -2.5);
    CHECK(slope > -3.5);
}

TEST_CASE("jump relations: g+ + g- on the two cuts, Omega1 real") {
    GBand g = GBand::build_symmetric(BackgroundParams{1.5, 1.5, 0.0});
    const double eps = 1e-10;
    cplx m2(1.0, 0.6);
    cplx sum2 = g.g(m2 + eps) + g.g(m2 - eps);
    CHECK(std::abs(sum2) < 1e-8);
    cplx m1(-1.0, 0.9);
    cplx sum1 = g.g(m1 + eps) + g.g(m1 - eps);
    CHECK(std::abs(sum1 - 2.0 * g.omega1_period()) < 1e-8);
    CHECK(std::abs(g.omega1_im_residual()) < 1e-8);
    // constancy along Sigma1
    cplx m1b(-1.0, 1.2);
    cplx sum1b = g.g(m1b + eps) + g.g(m1b - eps);
    CHECK(std::abs(sum1b - sum1) < 1e-8);
}

TEST_CASE("g0 self-consistency between anchor radii and realness at beta") {
    GBand g = GBand::build_symmetric(BackgroundParams{1.5, 1.5, 0.0});
    // independent route to g0 at two anchor radii: g(K) - theta(K) plus the
    // analytically substituted tail from K to infinity
    auto g0_at = [&](double K) {
        cplx v = g.g(cplx(K, 0)) - 2.0 * K * K;
        auto tail = [&](cplx u) { return g.dg_minus_phase(K / u) * K / (u * u); };
        v += integrate(Contour{{cplx(1e-9, 0), cplx(1, 0)}}, tail);
        return v.real();
    };
    double v1 = g0_at(1e3), v2 = g0_at(1e4);
    CHECK(std::abs(v1 - v2) < 1e-8);
    CHECK(std::abs(v1 - g.g0()) < 1e-8);
    CHECK(std::abs(g.g(g.beta() * 0.999999999).imag()) < 1e-8);
    // frozen regression values for the canonical case
    CHECK(std::abs(g.g0() - 2.5) < 1e-7);
    CHECK(std::abs(g.g_plus_beta() + 6.0) < 1e-7);
    CHECK(std::abs(g.omega1_period()) < 1e-8);
}

TEST_CASE("path independence and Schwarz symmetry of g") {
    GBand g = GBand::build_symmetric(BackgroundParams{1.5, 1.5, 0.0});
    for (cplx k : {cplx(0.4, 0.8), cplx(-2.3, 0.5), cplx(2.2, 2.0)}) {
        CHECK(std::abs(g.g(std::conj(k)) - std::conj(g.g(k))) < 1e-9);
    }
    // two homotopic paths agree (difference form cancels the constants)
    cplx k(0.35, 1.3), k2(-0.6, 2.1);
    cplx manual = integrate(Contour{{cplx(50, 0), cplx(50, 4.5), cplx(0.35, 4.5), k}},
                            [&](cplx s) { return g.dg(s); });
    cplx manual2 = integrate(Contour{{cplx(50, 0), cplx(50, 4.5), cplx(-0.6, 4.5), k2}},
                             [&](cplx s) { return g.dg(s); });
    CHECK(std::abs((g.g(k) - g.g(k2)) - (manual - manual2)) < 1e-9);
}

TEST_CASE("Im g sign pattern at fixed probe points") {
    GBand g = GBand::build_symmetric(BackgroundParams{1.5, 1.5, 0.0});
    cplx b = g.beta();
    // around beta: positive in the NE and SW sectors, negative in NW and SE;
    // probe list frozen from the computed sign map of the canonical case
    struct Probe { cplx k; int sign; };
    const Probe probes[] = {
        {b + std::polar(0.15, 0.70), +1}, {b + std::polar(0.15, 2.50), -1},
        {b + std::polar(0.15, -2.40), +1}, {b + std::polar(0.15, -0.65), -1},
        {cplx(0.5, 0.10), -1},  {cplx(-0.5, 0.10), +1},
        {cplx(1.8, 0.15), +1},  {cplx(-1.8, 0.15), -1},
        {cplx(0.2, 2.6), +1},   {cplx(-0.2, 2.6), -1},
        {cplx(3.0, 2.0), +1},   {cplx(-3.0, 2.0), -1},
    };
    for (const auto& pr : probes) {
        double im = g.g(pr.k).imag();
        CHECK(im * pr.sign > 0.0);
    }
}

TEST_CASE("g1 and g_beta local structure at the merge") {
    BackgroundParams p{1.5, 1.5, 0.0};
    GBand g = GBand::build_symmetric(p);
    // closed-form value g1(beta) = 4 b^2 / A at the symmetric merge
    double b2 = p.A1 * p.A1 - 1.0;
    CHECK(std::abs(g.g1(g.beta()) - 4.0 * b2 / p.A1) < 1e-12);
    CHECK(std::abs(std::arg(g.psi_beta()) + 0.25 * M_PI) < 1e-12);
    CHECK(g.y_of(1e3) == 0.0);

    // g_beta vanishes at the base point
    CHECK(std::abs(g.g_beta(g.beta() * 0.999999999)) < 1e-7);

    // 2 i t g_beta + lambda^2 + 2 y lambda = O(t |k-beta|^3) on a shrinking disk
    double t = 1e4;
    double prev = -1.0;
    for (double rad : {0.2, 0.1, 0.05}) {
        double worst = 0.0;
        for (int j = 0; j < 8; ++j) {
            cplx k = g.beta() + std::polar(rad, 0.3 + 2.0 * M_PI * j / 8.0);
            cplx lam = g.lambda_of(t, k);
            cplx res = 2.0 * I * t * g.g_beta(k) + lam * lam;
            worst = std::max(worst, std::abs(res) / (t * rad * rad * rad));
        }
        if (prev > 0.0) CHECK(worst < 3.0 * prev);  // bounded constant in the cubic fit
        prev = worst;
    }
}

TEST_CASE("continued band parameters solve the defining conditions") {
    BackgroundParams p{1.5, 1.5, 0.0};
    for (double xi : {0.0, 0.05, 0.12}) {
        double mu;
        cplx beta;
        band_params_for_xi(p, xi, mu, beta);
        if (xi == 0.0) {
            CHECK(std::abs(mu) < 1e-8);
            CHECK(std::abs(beta - cplx(0, std::sqrt(1.25))) < 1e-8);
        }
        GBand g = GBand::build(p, xi, mu, beta);
        // large-k matching: dg - 4k - xi decays like k^-2 or faster
        CHECK(std::abs(g.dg_minus_phase(cplx(1e3, 0))) < 2e-3);
        CHECK(std::abs(g.dg_minus_phase(cplx(4e3, 0))) <
              0.3 * std::abs(g.dg_minus_phase(cplx(1e3, 0))) + 1e-9);
        // Im g(beta) = 0
        CHECK(std::abs(g.g(beta * (1.0 - 1e-12)).imag()) < 1e-7);
    }
}
