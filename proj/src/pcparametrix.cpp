#include "nlshock/pcparametrix.hpp"

#include <cmath>
#include <stdexcept>

#include "nlshock/specfun.hpp"

namespace nlshock {

cplx log_C(cplx lam) {
    if (lam == cplx(0.0)) throw std::domain_error("log_C: singular at the origin");
    double a = std::arg(lam);
    if (a <= RayContourY::cut_angle) a += 2.0 * M_PI;
    return cplx(std::log(std::abs(lam)), a);
}

cplx RayContourY::midpoint(int piece, double rmax) {
    double rmid = 0.5 * (1.0 + rmax);
    switch (piece) {
        case 1: return cplx(rmid, 0);
        case 2: return cplx(0, rmid);
        case 3: return cplx(-rmid, 0);
        case 4: return cplx(0, -rmid);
        case 5: return std::polar(1.0, -0.25 * M_PI);
        case 6: return std::polar(1.0, 0.25 * M_PI);
        case 7: return std::polar(1.0, 0.75 * M_PI);
        case 8: return std::polar(1.0, 1.125 * M_PI);
        case 9: return std::polar(1.0, -0.625 * M_PI);
    }
    throw std::domain_error("contour piece index out of range");
}

const std::vector<cplx>& RayContourY::junctions() {
    static const std::vector<cplx> j{cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1),
                                     std::polar(1.0, -0.75 * M_PI)};
    return j;
}

int RayContourY::sector(cplx lam) {
    if (std::abs(lam) < 1.0) return 6;
    double a = std::arg(lam);
    if (a > 0.0 && a < 0.5 * M_PI) return 2;
    if (a >= 0.5 * M_PI && a < M_PI) return 3;
    if (a >= M_PI || a <= cut_angle) return 4;  // between Y3 and the cut
    if (a > cut_angle && a < -0.5 * M_PI) return 5;
    return 1;  // (-pi/2, 0)
}

int piece_of(cplx lam, double tol) {
    double r = std::abs(lam), a = std::arg(lam);
    if (r >= 1.0 - tol) {
        if (std::abs(lam.imag()) < tol && lam.real() >= 1.0 - tol) return 1;
        if (std::abs(lam.real()) < tol && lam.imag() >= 1.0 - tol) return 2;
        if (std::abs(lam.imag()) < tol && lam.real() <= -1.0 + tol) return 3;
        if (std::abs(lam.real()) < tol && lam.imag() <= -1.0 + tol) return 4;
    }
    if (std::abs(r - 1.0) < tol) {
        if (a >= -0.5 * M_PI && a <= 0.0) return 5;
        if (a >= 0.0 && a <= 0.5 * M_PI) return 6;
        if (a >= 0.5 * M_PI && a <= M_PI) return 7;
        if (a >= M_PI || a <= -0.75 * M_PI) return 8;
        return 9;
    }
    throw std::domain_error("lambda is not on the model contour");
}

// Rays oriented outward from the unit circle, arcs counterclockwise; the
// + side of each piece is to the left of its orientation.
Mat2 v_Y(double y, cplx nutilde, cplx lam, int piece) {
    cplx p = std::exp(2.0 * M_PI * nutilde) - 1.0;  // rho rho*
    cplx ep = std::exp(-lam * lam - 2.0 * y * lam);
    cplx em = std::exp(lam * lam + 2.0 * y * lam);
    cplx lp2 = pow_C(lam, 2.0 * I * nutilde);
    cplx lm2 = pow_C(lam, -2.0 * I * nutilde);
    Mat2 diag = Mat2::diag(pow_C(lam, -I * nutilde), pow_C(lam, I * nutilde));
    switch (piece) {
        case 1: return {1.0, 0.0, p / (1.0 + p) * lp2 * ep, 1.0};
        case 2: return {1.0, -lm2 * em, 0.0, 1.0};
        case 3: return {1.0, 0.0, p * lp2 * ep, 1.0};
        case 4: return {1.0, -(1.0 + p) * lm2 * em, 0.0, 1.0};
        case 5: return diag;
        case 6: return diag * Mat2{1.0, 0.0, -p / (1.0 + p) * ep, 1.0};
        case 7: return diag * Mat2{1.0 / (1.0 + p), em, -p / (1.0 + p) * ep, 1.0};
        case 8: return diag * Mat2{1.0 / (1.0 + p), em, 0.0, 1.0 + p};
        case 9: return diag * Mat2{1.0, (1.0 + p) * em, 0.0, 1.0};
    }
    throw std::domain_error("contour piece index out of range");
}

cplx beta_Y(cplx nutilde) {
    cplx inu = I * nutilde;
    return std::pow(2.0 * I, inu + 1.0) * std::sqrt(M_PI) * std::exp(2.5 * M_PI * nutilde) /
           ((std::exp(2.0 * M_PI * nutilde) - 1.0) * gamma_c(inu));
}

Mat2 m1_Y(double y, cplx nutilde) {
    cplx bY = beta_Y(nutilde);
    return {-I * nutilde * y, -0.5 * bY * std::exp(-y * y),
            -I * nutilde / bY * std::exp(y * y), I * nutilde * y};
}

namespace {

// entire fundamental matrix of the Weber-system Lax pair
Mat2 psi_matrix(double y, cplx nutilde, cplx lam) {
    cplx bY = beta_Y(nutilde);
    cplx arg_i = I * std::sqrt(2.0) * (y + lam);
    cplx arg_r = std::sqrt(2.0) * (y + lam);
    cplx epn = std::exp(-0.5 * M_PI * nutilde);
    Mat2 core{epn * pcf_d(-I * nutilde, arg_i),
              -bY / std::sqrt(2.0) * pcf_d(I * nutilde - 1.0, arg_r),
              std::sqrt(2.0) / bY * epn * nutilde * pcf_d(-I * nutilde - 1.0, arg_i),
              pcf_d(I * nutilde, arg_r)};
    Mat2 left = Mat2::exp_sigma3(-0.5 * y * y);
    Mat2 right = Mat2::exp_sigma3(0.5 * I * nutilde * std::log(2.0));
    return left * core * right;
}

Mat2 R1(cplx p) { return {1.0, 0.0, p / (1.0 + p), 1.0}; }
Mat2 R2() { return {1.0, -1.0, 0.0, 1.0}; }
Mat2 R3(cplx p) { return {1.0, 0.0, p, 1.0}; }
Mat2 R4(cplx p) { return {1.0, -(1.0 + p), 0.0, 1.0}; }

} // namespace

Mat2 m_Y(double y, cplx nutilde, cplx lam) {
    cplx p = std::exp(2.0 * M_PI * nutilde) - 1.0;
    Mat2 Psi = psi_matrix(y, nutilde, lam);
    switch (RayContourY::sector(lam)) {
        case 2: Psi = Psi * R1(p); break;
        case 3: Psi = Psi * R1(p) * R2(); break;
        case 4: Psi = Psi * R1(p) * R2() * R3(p).inv(); break;
        case 5: Psi = Psi * R4(p); break;
        default: break;  // sectors 1 and 6 use psi itself
    }
    Mat2 m = Psi * Mat2::exp_sigma3(-(0.5 * lam * lam + y * lam));
    if (RayContourY::sector(lam) != 6)
        m = m * Mat2::diag(pow_C(lam, I * nutilde), pow_C(lam, -I * nutilde));
    return m;
}

LaxReport lax_identities(cplx nutilde, double y0, double h) {
    LaxReport rep{};
    auto w_of = [&](double y) { return -2.0 * m1_Y(y, nutilde).a12; };
    cplx dw = (w_of(y0 + h) - w_of(y0 - h)) / (2.0 * h);
    rep.w_ode_residual = std::abs(dw + 2.0 * y0 * w_of(y0));
    Mat2 m1 = m1_Y(y0, nutilde);
    rep.z_residual = std::abs(I * nutilde + (-2.0 * m1.a12) * m1.a21);
    cplx p = std::exp(2.0 * M_PI * nutilde) - 1.0;
    cplx s1 = p / (1.0 + p), s2 = -1.0, s3 = -p, s4 = 1.0 / (1.0 + p);
    cplx e = std::exp(2.0 * M_PI * I * (I * nutilde));
    cplx lhs = (1.0 + s2 * s3) * e + (s1 * s4 + (1.0 + s3 * s4) * (1.0 + s1 * s2)) / e;
    rep.cyclic_residual = std::abs(lhs - 2.0);  // 2 cos(2 pi Theta) at Theta = 0
    return rep;
}

Mat2 Y_beta(const ModelSolution& ms, const ScalarFactors& sf, double t, cplx k) {
    const GBand& gb = sf.gband();
    cplx ab_prod = sf.delta(k) * sf.delta(k) * sf.scattering().a_hat(k) * sf.scattering().b_hat(k);
    cplx root = std::sqrt(ab_prod);  // either branch: it only enters squared
    cplx c = std::exp(-I * sf.htilde(k)) * root * sf.delta0() * std::exp(-I * t * gb.g_plus_beta());
    return ms.m_mod(k) * Mat2::exp_sigma3(std::log(c));
}

Mat2 T_beta(const ModelSolution& ms, const ScalarFactors& sf, double t) {
    const GBand& gb = sf.gband();
    Mat2 Yb = Y_beta(ms, sf, t, gb.beta());
    Mat2 core = m1_Y(gb.y_of(t), sf.nutilde());
    Mat2 tp = Mat2::exp_sigma3(0.5 * I * sf.nutilde() * std::log(t));
    Mat2 inner = tp * core * tp.inv();
    cplx s = -1.0 / gb.psi_beta();
    return s * (Yb * inner * Yb.inv());
}

namespace {

// Real-stationary-point realization: the same explicit solution driven at
// y = 0 with the real order -ln(1+|r(mu)|^2)/(2 pi). The conjugator mirrors
// the beta one with the reflection phase at mu in place of (delta^2 ahat bhat).
class StandardMu : public MuParametrix {
public:
    Mat2 t_mu(const ModelSolution& ms, const ScalarFactors& sf, double t) const override {
        const GBand& gb = sf.gband();
        const ScatteringData& sd = sf.scattering();
        cplx mu(gb.mu(), 0.0);

        double nu_mu = -std::log(1.0 + sd.rr_star(mu).real()) / (2.0 * M_PI);
        cplx g1mu =
            4.0 * (mu - gb.beta()) * (mu - std::conj(gb.beta())) / (sd.X1(mu) * sd.X2(mu));
        cplx psi_mu = std::exp(-0.25 * I * M_PI) * std::sqrt(g1mu);

        // regular part of delta2 at mu: delta2 = (k-mu)^{-i nu_mu} reg(k)
        auto reg_at = [&](double h) {
            cplx k = mu + h * std::exp(0.25 * I * M_PI);
            return sf.delta2(k) * std::pow(k - mu, I * cplx(nu_mu, 0.0));
        };
        cplx r1 = reg_at(1e-5), r2 = reg_at(5e-6);
        cplx reg = r2 + (r2 - r1);
        cplx delta0mu = std::pow(psi_mu, I * cplx(nu_mu, 0.0)) * reg;

        // unimodular factor aligning the reflection phase at mu
        cplx rhat = std::conj(sd.b(mu) * sd.nu1(mu)) / (sd.a(mu) * sd.nu1(mu));
        cplx uhalf = std::sqrt(rhat / std::abs(rhat));

        cplx c = std::exp(-I * sf.htilde(mu)) * uhalf * delta0mu *
                 std::exp(-I * t * gb.g(mu).real());
        Mat2 Ymu = ms.m_mod(mu) * Mat2::exp_sigma3(std::log(c));

        Mat2 core = m1_Y(0.0, cplx(nu_mu, 0.0));
        Mat2 tp = Mat2::exp_sigma3(0.5 * I * cplx(nu_mu, 0.0) * std::log(t));
        Mat2 inner = tp * core * tp.inv();
        cplx s = -1.0 / psi_mu;
        return s * (Ymu * inner * Ymu.inv());
    }
};

} // namespace

std::unique_ptr<MuParametrix> standard_mu_parametrix() { return std::make_unique<StandardMu>(); }

} // namespace nlshock
