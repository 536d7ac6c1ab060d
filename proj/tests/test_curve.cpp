#include <doctest.h>

#include "nlshock/curve.hpp"
#include "nlshock/quadrature.hpp"

using namespace nlshock;

namespace {
// branch-tracked product of the four factors along a path from large real k,
// independent of the radical-product route inside the library
cplx wt_path_oracle(const BackgroundParams& p, cplx target) {
    cplx roots[4] = {p.E1(), std::conj(p.E1()), p.E2(), std::conj(p.E2())};
    auto quartic = [&](cplx k) {
        cplx v = 1.0;
        for (auto r : roots) v *= (k - r);
        return v;
    };
    int n = 4000;
    cplx k0(1e3, 0.0);
    cplx w = std::sqrt(quartic(k0));  // positive for k >> 0
    // walk k0 -> i*3 -> target with continuous sqrt tracking
    std::vector<cplx> path;
    for (int i = 0; i <= n; ++i) path.push_back(k0 + (cplx(0, 3.0) - k0) * (double(i) / n));
    for (int i = 1; i <= n; ++i) path.push_back(cplx(0, 3.0) + (target - cplx(0, 3.0)) * (double(i) / n));
    for (size_t i = 1; i < path.size(); ++i) {
        cplx cand = std::sqrt(quartic(path[i]));
        if (std::abs(cand - w) > std::abs(cand + w)) cand = -cand;
        w = cand;
    }
    return w;
}
} // namespace

TEST_CASE("w_tilde: leading growth, Schwarz symmetry, path-tracked oracle") {
    BackgroundParams p{1.5, 1.5, 0.0};
    CurveData c = CurveData::build(p);
    cplx big(1e3, 0.0);
    CHECK(std::abs(c.w_tilde(big) / (big * big) - 1.0) < 1e-5);
    std::srand(31);
    for (int i = 0; i < 20; ++i) {
        cplx k(-4.0 + 8.0 * (std::rand() / double(RAND_MAX)),
               -3.0 + 6.0 * (std::rand() / double(RAND_MAX)));
        if (std::abs(k.real() - 1.0) < 0.1 || std::abs(k.real() + 1.0) < 0.1) continue;
        CHECK(std::abs(c.w_tilde(std::conj(k)) - std::conj(c.w_tilde(k))) < 1e-11);
        cplx sq = c.w_tilde(k) * c.w_tilde(k);
        cplx quart = (k - p.E1()) * (k - std::conj(p.E1())) * (k - p.E2()) * (k - std::conj(p.E2()));
        CHECK(std::abs(sq - quart) < 1e-10 * std::abs(quart));
    }
    CHECK(std::abs(c.w_tilde(cplx(0, 2)) - wt_path_oracle(p, cplx(0, 2))) < 1e-8);
}

TEST_CASE("periods: normalization, Im tau > 0, homotopy invariance") {
    BackgroundParams p{1.5, 1.5, 0.0};
    CurveData c = CurveData::build(p);
    CHECK(c.tau().imag() > 0.0);
    // symmetric case: Re tau is 0 or 1 up to tolerance
    double re = std::abs(std::remainder(c.tau().real(), 1.0));
    CHECK(re < 1e-9);

    // a-cycle normalization with an independent loop representative
    Contour loop;
    int n = 321;
    for (int i = 0; i < n; ++i) {
        double th = 2.0 * M_PI * i / (n - 1);
        loop.pts.push_back(cplx(1.0, 0.0) + cplx(0.45 * std::cos(th), (p.A2 + 0.31) * std::sin(th)));
    }
    loop.pts.back() = loop.pts.front();
    cplx per = integrate(loop, [&](cplx k) { return 1.0 / c.w_tilde(k); }) / c.cnorm();
    CHECK(std::abs(std::abs(per) - 1.0) < 1e-8);
}

TEST_CASE("abel map: base point, a-period increment, branch-point half-lattice") {
    BackgroundParams p{1.5, 1.5, 0.0};
    CurveData c = CurveData::build(p);
    // phi at a point just off the base branch point is small
    cplx near_base = std::conj(p.E2()) + cplx(1e-8, 0);
    CHECK(std::abs(c.abel(near_base)) < 1e-3);
    // 2 phi(E2) lands on the lattice (E2 maps to a half-period)
    cplx east = c.abel(cplx(1.0 + 1e-9, 0.2));
    cplx west = c.abel(cplx(1.0 - 1e-9, 0.2));
    cplx sum = east + west;  // = 2 phi of the cut constant = lattice point
    cplx red = sum - std::round(sum.real());
    red -= std::round((red.imag() / c.tau().imag())) * c.tau();
    CHECK(std::abs(red) < 1e-8);
}

TEST_CASE("P1: defining residual and d_tilde against the theta zero") {
    BackgroundParams p{1.5, 1.5, 0.0};
    CurveData c = CurveData::build(p);
    SurfacePoint P1 = c.P1();
    cplx nsq = c.nu(P1.k) * c.nu(P1.k) * double(P1.sheet);
    CHECK(std::abs(nsq - 1.0) < 1e-10);
    // symmetric case: the projection is real
    CHECK(std::abs(P1.k.imag()) < 1e-12);
    // nu -> 1 at infinity (the other zero of nuhat - 1)
    CHECK(std::abs(c.nu(cplx(1e3, 0)) - 1.0) < 1e-2);
    CHECK(std::abs(c.nu(cplx(1e6, 0)) - 1.0) < 1e-5);
    // theta vanishes exactly where the pole-cancellation pairing needs it:
    // theta(-phi(P1-projection) + d) = 0 on the upper sheet
    cplx z = -c.abel(P1.k) + c.d_tilde();
    CHECK(std::abs(c.theta_of(z)) < 1e-9);
}

TEST_CASE("periods vary continuously in A (regression sweep)") {
    double prev_im = 0.0;
    bool first = true;
    for (double A : {1.1, 1.5, 2.0, 2.5, 3.0}) {
        CurveData c = CurveData::build(BackgroundParams{A, A, 0.0});
        CHECK(c.tau().imag() > 0.0);
        if (!first) CHECK(c.tau().imag() != prev_im);
        prev_im = c.tau().imag();
        first = false;
    }
}
