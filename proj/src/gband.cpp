#include "nlshock/gband.hpp"

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

const double kAnchor = 30.0;

Contour descend_route(const BackgroundParams& p, cplx k) {
    double H = std::max(std::max(p.A1, p.A2) + 1.5, k.imag() + 0.5);
    double x = k.real(), xd;
    if (x > BackgroundParams::B2) xd = std::max(x, BackgroundParams::B2 + 0.4);
    else if (x < BackgroundParams::B1) xd = std::min(x, BackgroundParams::B1 - 0.4);
    else xd = std::clamp(x, BackgroundParams::B1 + 0.4, BackgroundParams::B2 - 0.4);
    return Contour{{cplx(kAnchor, 0), cplx(kAnchor, H), cplx(xd, H), cplx(xd, k.imag()), k}};
}

} // namespace

cplx GBand::dg(cplx k) const {
    cplx wt = radical(k, BackgroundParams::B1, p_.A1) * radical(k, BackgroundParams::B2, p_.A2);
    return 4.0 * (k - mu_) * (k - beta_) * (k - std::conj(beta_)) / wt;
}

namespace {
// c += scale * p * q for polynomial coefficient arrays (ascending powers)
void poly_mul_acc(cplx* c, double scale, const std::vector<cplx>& p, const std::vector<cplx>& q) {
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < q.size(); ++j) c[i + j] += scale * p[i] * q[j];
}
std::vector<cplx> poly_from_roots(const std::vector<cplx>& roots) {
    std::vector<cplx> c{1.0};
    for (cplx r : roots) {
        std::vector<cplx> n(c.size() + 1, 0.0);
        for (size_t i = 0; i < c.size(); ++i) {
            n[i + 1] += c[i];
            n[i] -= r * c[i];
        }
        c = n;
    }
    return c;
}
} // namespace

void GBand::set_poly() {
    for (auto& c : ncoef_) c = 0.0;
    cplx bb = std::conj(beta_);
    std::vector<cplx> P = poly_from_roots({mu_, beta_, bb});                 // degree 3
    std::vector<cplx> Q = poly_from_roots(
        {p_.E1(), std::conj(p_.E1()), p_.E2(), std::conj(p_.E2())});         // degree 4
    poly_mul_acc(ncoef_, 16.0, P, P);
    poly_mul_acc(ncoef_, -1.0, {xi_ * xi_, 8.0 * xi_, 16.0}, Q);
    // the top two coefficients must vanish exactly, not to roundoff, or the
    // k -> infinity tail integral sees k^6-amplified noise
    ncoef_[6] = 0.0;
    ncoef_[5] = -32.0 * (mu_ + 2.0 * beta_.real()) - 8.0 * xi_;
}

cplx GBand::dg_minus_phase(cplx k) const {
    cplx num = 0.0;
    for (int i = 6; i >= 0; --i) num = num * k + ncoef_[i];
    cplx wt = radical(k, BackgroundParams::B1, p_.A1) * radical(k, BackgroundParams::B2, p_.A2);
    cplx den = wt * (4.0 * (k - mu_) * (k - beta_) * (k - std::conj(beta_)) + (4.0 * k + xi_) * wt);
    return num / den;
}

// g is assembled as theta(k) + int (dg - theta') + const: the difference
// integrand stays O(1), so the large phase never enters the quadrature
cplx GBand::g_raw(cplx k) const {
    auto f = [this](cplx s) { return dg_minus_phase(s); };
    return 2.0 * k * k + xi_ * k + integrate(descend_route(p_, k), f, 1e-11);
}

cplx GBand::g(cplx k) const {
    if (k.imag() < 0.0) return std::conj(g(std::conj(k)));
    return g_raw(k) + shift_;
}

cplx GBand::g1(cplx s) const {
    cplx wt = radical(s, BackgroundParams::B1, p_.A1) * radical(s, BackgroundParams::B2, p_.A2);
    return 4.0 * (s - mu_) * (s - std::conj(beta_)) / wt;
}

cplx GBand::g1s(cplx s) const {
    const double h = 1e-6;
    return (g1(s + h) - g1(s - h)) / (2.0 * h);
}

double GBand::y_of(double t) const {
    cplx y = -std::sqrt(t) * I * g1(beta_) * (beta_ - alpha_) / (2.0 * psi_beta_);
    return y.real();
}

void GBand::finish(bool with_g0) {
    const double eps = 1e-10;
    cplx m2(BackgroundParams::B2, 0.5 * p_.A2);
    cplx m1(BackgroundParams::B1, 0.5 * p_.A1);
    cplx s2 = g_raw(m2 + eps) + g_raw(m2 - eps);
    cplx s1 = g_raw(m1 + eps) + g_raw(m1 - eps);
    shift_ = -0.5 * s2;
    cplx Om = 0.5 * (s1 - s2);
    Omega1_ = Om.real();
    Omega1_im_ = Om.imag();

    if (with_g0) {
        // g0 = shift + int_{anchor}^{inf} (dg - theta'), tail by k = anchor/u
        auto tail = [&](cplx u) { return dg_minus_phase(kAnchor / u) * kAnchor / (u * u); };
        cplx gi = shift_ + integrate(Contour{{cplx(1e-9, 0.0), cplx(1.0, 0.0)}}, tail);
        g0_ = gi.real();
    }

    g_beta_val_ = g(beta_ * (1.0 - 1e-12) + cplx(1e-14, 0)).real();

    cplx rad = g1(beta_) + g1s(beta_) * 0.5 * (beta_ - alpha_);
    psi_beta_ = std::exp(cplx(0, -0.25 * M_PI)) * std::sqrt(rad);
}

GBand GBand::build_symmetric(const BackgroundParams& p) {
    if (std::abs(p.A1 - p.A2) > 1e-14)
        throw std::domain_error("gband: symmetric build needs A1 = A2");
    if (p.A1 <= 1.0) throw std::domain_error("gband: requires A > 1");
    GBand g;
    g.p_ = p;
    g.xi_ = 0.0;
    g.mu_ = 0.0;
    g.beta_ = cplx(0.0, std::sqrt(p.A1 * p.A1 - 1.0));
    g.alpha_ = g.beta_;
    g.set_poly();
    g.finish();
    return g;
}

GBand GBand::build(const BackgroundParams& p, double xi, double mu, cplx beta) {
    return build(p, xi, mu, beta, beta);
}

GBand GBand::build_light(const BackgroundParams& p, double xi, double mu, cplx beta) {
    GBand g;
    g.p_ = p;
    g.xi_ = xi;
    g.mu_ = mu;
    g.beta_ = beta;
    g.alpha_ = beta;
    g.set_poly();
    g.finish(false);
    return g;
}

GBand GBand::build(const BackgroundParams& p, double xi, double mu, cplx beta, cplx alpha) {
    GBand g;
    g.p_ = p;
    g.xi_ = xi;
    g.mu_ = mu;
    g.beta_ = beta;
    g.alpha_ = alpha;
    g.set_poly();
    g.finish();
    return g;
}

namespace {

// Im g(beta) for candidate band parameters, without the full constant set:
// only the Sigma2 normalization enters the imaginary part
double im_g_beta(const BackgroundParams& p, double xi, double mu, cplx beta) {
    GBand g = GBand::build_light(p, xi, mu, beta);
    return g.g(beta * (1.0 - 1e-12) + cplx(1e-14, 0)).imag();
}

} // namespace

void band_params_for_xi(const BackgroundParams& p, double xi, double& mu, cplx& beta) {
    // quartic k^2-coefficient of wtilde^2
    double q2 = p.A1 * p.A1 + p.A2 * p.A2 - 2.0;
    if (std::abs(xi) < 1e-12 && std::abs(p.A1 - p.A2) < 1e-14) {
        mu = 0.0;
        beta = cplx(0.0, std::sqrt(0.5 * q2));
        return;
    }
    // large-k matching pins mu = -xi/4 - 2u and 3u^2 + (xi/2)u + (q2/2 - v^2) = 0
    // with beta = u + iv; the remaining real condition is Im g(beta) = 0.
    auto u_of_v = [&](double v) {
        double b = 0.5 * xi, c = 0.5 * q2 - v * v;
        double disc = std::sqrt(std::max(b * b - 12.0 * c, 0.0));
        double r1 = (-b + disc) / 6.0, r2 = (-b - disc) / 6.0;
        return std::abs(r1) < std::abs(r2) ? r1 : r2;  // continuity root, -> 0 at merge
    };
    double vc = std::sqrt(0.5 * q2);
    auto f = [&](double v) {
        double u = u_of_v(v);
        return im_g_beta(p, xi, -0.25 * xi - 2.0 * u, cplx(u, v));
    };
    // bracket a sign change around the merge value, then bisect
    double lo = vc, hi = vc, flo = f(vc), fhi = flo;
    bool bracketed = false;
    for (int j = 1; j <= 24 && !bracketed; ++j) {
        double step = vc * 0.004 * j;
        double vp = vc + step, vm = std::max(vc - step, 0.05 * vc);
        double fp = f(vp);
        if (flo * fp <= 0.0) { hi = vp; fhi = fp; bracketed = true; break; }
        double fm = f(vm);
        if (fm * flo <= 0.0) { hi = lo; fhi = flo; lo = vm; flo = fm; bracketed = true; break; }
        if (std::abs(fp) < std::abs(flo)) { lo = vp; flo = fp; }
        if (std::abs(fm) < std::abs(flo)) { lo = vm; flo = fm; }
    }
    double v1 = lo, f1 = flo;
    if (bracketed) {
        for (int it = 0; it < 60 && std::abs(hi - lo) > 1e-13; ++it) {
            double vm2 = 0.5 * (lo + hi);
            double fm2 = f(vm2);
            if (std::abs(fm2) < 1e-12) { lo = hi = vm2; flo = fm2; break; }
            if (flo * fm2 <= 0.0) { hi = vm2; fhi = fm2; }
            else { lo = vm2; flo = fm2; }
        }
        v1 = 0.5 * (lo + hi);
        f1 = flo;
    }
    (void)f1; (void)fhi;
    double u = u_of_v(v1);
    mu = -0.25 * xi - 2.0 * u;
    beta = cplx(u, v1);
}

} // namespace nlshock
