#include "nlshock/curve.hpp"

#include <cmath>
#include <stdexcept>

#include "nlshock/quadrature.hpp"

namespace nlshock {

namespace {

cplx radical(cplx k, double B, double A) {
    cplx d = k - B;
    if (d == cplx(0.0)) return cplx(A, 0.0);  // east limit at the cut crossing
    return d * std::sqrt(1.0 + A * A / (d * d));
}

// waypoint route from near Ebar2 to k that avoids both cuts: exit east,
// travel below the cut span, approach at the abscissa of k
Contour route_to(const BackgroundParams& p, cplx start, cplx k) {
    double ymin = -std::max(p.A1, p.A2) - 0.7;
    double x = k.real(), y = k.imag();
    Contour c;
    c.pts.push_back(start);
    double xd;
    if (x > BackgroundParams::B2) xd = std::max(x, BackgroundParams::B2 + 0.4);
    else if (x < BackgroundParams::B1) xd = std::min(x, BackgroundParams::B1 - 0.4);
    else xd = std::clamp(x, BackgroundParams::B1 + 0.4, BackgroundParams::B2 - 0.4);
    if (y < ymin) {
        // already below the cut span
        c.pts.push_back(cplx(start.real(), y));
        c.pts.push_back(k);
        return c;
    }
    c.pts.push_back(cplx(start.real(), ymin));
    c.pts.push_back(cplx(xd, ymin));
    c.pts.push_back(cplx(xd, y));
    c.pts.push_back(k);
    return c;
}

} // namespace

cplx CurveData::w_tilde(cplx k) const {
    return radical(k, BackgroundParams::B1, p_.A1) * radical(k, BackgroundParams::B2, p_.A2);
}

cplx CurveData::nu(cplx k) const {
    cplx r1 = std::pow((k - p_.E1()) / (k - std::conj(p_.E1())), 0.25);
    cplx r2 = std::pow((k - p_.E2()) / (k - std::conj(p_.E2())), 0.25);
    return r1 * r2;
}

cplx CurveData::abel(cplx k) const {
    cplx Eb2 = std::conj(p_.E2());
    auto f = [this](cplx s) { return 1.0 / w_tilde(s); };
    cplx start = Eb2 + 0.6;
    cplx v = sqrt_endpoint_integrate(Eb2, start, f);
    v += integrate(route_to(p_, start, k), f);
    return v / cnorm_;
}

CurveData CurveData::build(const BackgroundParams& p) {
    CurveData c;
    c.p_ = p;
    auto f = [&c](cplx s) { return 1.0 / c.w_tilde(s); };

    // a1 encircles Sigma2; the clockwise orientation makes Im tau > 0
    double R = 0.4, H = p.A2 + 0.4;
    Contour a1{{cplx(BackgroundParams::B2 + R, 0), cplx(BackgroundParams::B2 + R, H),
                cplx(BackgroundParams::B2 - R, H), cplx(BackgroundParams::B2 - R, -H),
                cplx(BackgroundParams::B2 + R, -H), cplx(BackgroundParams::B2 + R, 0)}};
    c.cnorm_ = -integrate(a1, f);

    // tau = 2 abel(Ebar1): branch points sit on the half-lattice, which gives
    // the b-period without tracing an explicit b-cycle representative
    cplx Eb2 = std::conj(p.E2()), Eb1 = std::conj(p.E1());
    double ymin = -std::max(p.A1, p.A2) - 0.7;
    cplx start = Eb2 + 0.6;
    cplx v = sqrt_endpoint_integrate(Eb2, start, f);
    v += integrate(Contour{{start, cplx(start.real(), ymin), cplx(BackgroundParams::B1, ymin)}}, f);
    v -= sqrt_endpoint_integrate(Eb1, cplx(BackgroundParams::B1, ymin), f);
    c.tau_ = 2.0 * v / c.cnorm_;
    if (c.tau_.imag() <= 0.0) throw std::runtime_error("curve: period has non-positive imaginary part");
    c.tp_ = ThetaParams::make(c.tau_);

    // abel(inf+): integrate to a large radius, then the 1/k^2 tail
    {
        double K = 2e5;
        cplx vi = sqrt_endpoint_integrate(Eb2, start, f);
        vi += integrate(Contour{{start, cplx(K, start.imag()), cplx(K, 0.0)}}, f);
        vi += 1.0 / K;  // 1/wtilde = 1/k^2 + O(k^-4)
        c.abel_inf_ = vi / c.cnorm_;
    }

    // P1: the finite zero of nuhat - 1. The defining equation collapses to a
    // linear one for the projection; the sheet is picked by nu^2 = +1.
    cplx E1 = p.E1(), E2 = p.E2();
    cplx kstar = (E1 * E2 - std::conj(E1) * std::conj(E2)) / ((E1 + E2) - std::conj(E1 + E2));
    // Newton polish on nu^4 - 1 (degenerate linear equation; polish only)
    for (int it = 0; it < 4; ++it) {
        auto F = [&](cplx k) {
            return (k - E1) * (k - E2) - (k - std::conj(E1)) * (k - std::conj(E2));
        };
        cplx h = 1e-7;
        cplx d = (F(kstar + h) - F(kstar - h)) / (2.0 * h);
        if (std::abs(d) < 1e-14) break;
        kstar -= F(kstar) / d;
    }
    cplx nsq = c.nu(kstar) * c.nu(kstar);
    int sheet = (std::abs(nsq - 1.0) < std::abs(nsq + 1.0)) ? +1 : -1;
    c.P1_ = {kstar, sheet};
    c.d_tilde_ = double(sheet) * c.abel(kstar) + c.K_tilde();
    return c;
}

} // namespace nlshock
