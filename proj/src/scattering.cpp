#include "nlshock/scattering.hpp"

#include <cmath>
#include <stdexcept>

#include "nlshock/quadrature.hpp"

namespace nlshock {

namespace {

// X = (k-B) sqrt(1 + A^2/(k-B)^2): principal sqrt puts the cut exactly on
// the segment [B-iA, B+iA] and pins X ~ k at +infinity
cplx radical(cplx k, double B, double A) {
    cplx d = k - B;
    if (d == cplx(0.0)) return cplx(A, 0.0);  // east limit at the cut crossing
    return d * std::sqrt(1.0 + A * A / (d * d));
}

cplx zeta_of(cplx k, double B, double A) { return (k - B + radical(k, B, A)) / A; }

} // namespace

ScatteringData::ScatteringData(const BackgroundParams& p) : p_(p) {
    if (p.A1 <= 0.0 || p.A2 <= 0.0) throw std::domain_error("scattering: amplitudes must be positive");
}

ScatteringData::ScatteringData(const BackgroundParams& p, std::function<AbPair(cplx)> custom_ab)
    : p_(p), custom_(std::move(custom_ab)) {}

cplx ScatteringData::X1(cplx k) const { return radical(k, BackgroundParams::B1, p_.A1); }
cplx ScatteringData::X2(cplx k) const { return radical(k, BackgroundParams::B2, p_.A2); }

AbPair ScatteringData::ab(cplx k) const {
    if (custom_) return custom_(k);
    cplx z1 = zeta_of(k, BackgroundParams::B1, p_.A1);
    cplx z2 = zeta_of(k, BackgroundParams::B2, p_.A2);
    cplx d1 = 1.0 + 1.0 / (z1 * z1);
    cplx d2 = 1.0 + 1.0 / (z2 * z2);
    cplx s = std::sqrt(d1 * d2);
    cplx eph = std::exp(cplx(0, -p_.phi));
    return {(1.0 + eph / (z1 * z2)) / s, I * (1.0 / z2 - eph / z1) / s};
}

AbPair ScatteringData::ab_star(cplx k) const {
    AbPair v = ab(std::conj(k));
    return {std::conj(v.a), std::conj(v.b)};
}

cplx ScatteringData::r(cplx k) const {
    return ab_star(k).b / ab(k).a;
}

cplx ScatteringData::rr_star(cplx k) const {
    AbPair v = ab(k), w = ab_star(k);
    return (w.b * v.b) / (v.a * w.a);
}

cplx ScatteringData::rr_star_prime(cplx k) const {
    const double h = 1e-6;
    return (rr_star(k + h) - rr_star(k - h)) / (2.0 * h);
}

cplx ScatteringData::nu1(cplx k) const {
    return std::pow((k - p_.E1()) / (k - std::conj(p_.E1())), 0.25);
}

cplx ScatteringData::a_hat(cplx k) const { return a(k) * nu1(k); }
cplx ScatteringData::b_hat(cplx k) const { return b(k) * nu1(k); }

void ScatteringData::build_unwrap(cplx mu, cplx beta) const {
    const int n = 2048;
    unwrap_corr_.assign(n + 1, 0.0);
    double prev_im = 0.0;  // ln(1+|r(mu)|^2) is real positive
    for (int i = 0; i <= n; ++i) {
        double t = std::max(double(i) / n, 1e-12);
        cplx s = mu + t * (beta - mu);
        cplx v = std::log(1.0 + rr_star(s));
        double im = unwrap_near(prev_im, v.imag());
        unwrap_corr_[i] = im - v.imag();
        prev_im = im;
    }
    cached_mu_ = mu;
    cached_beta_ = beta;
}

cplx ScatteringData::log1rr_gamma(cplx mu, cplx beta, cplx s) const {
    if (unwrap_corr_.empty() || cached_mu_ != mu || cached_beta_ != beta) build_unwrap(mu, beta);
    double t = std::clamp((((s - mu) / (beta - mu))).real(), 0.0, 1.0);
    int i = (int)std::lround(t * (unwrap_corr_.size() - 1));
    cplx v = std::log(1.0 + rr_star(s));
    return v + cplx(0.0, unwrap_corr_[i]);
}

cplx ScatteringData::log1rr_gamma_conj(cplx mu, cplx beta, cplx s) const {
    return std::conj(log1rr_gamma(mu, beta, std::conj(s)));
}

TransitionConstants transition_constants(const ScatteringData& sd) {
    const auto& p = sd.params();
    if (std::abs(p.A1 - p.A2) > 1e-14)
        throw std::domain_error("transition_constants: closed form needs A1 = A2; supply (mu,beta)");
    double A = p.A1;
    if (A <= 1.0) throw std::domain_error("transition_constants: requires A > 1");
    cplx beta(0.0, std::sqrt(A * A - 1.0));
    return transition_constants(sd, 0.0, beta);
}

TransitionConstants transition_constants(const ScatteringData& sd, double mu, cplx beta) {
    cplx w = sd.log1rr_gamma(mu, beta, beta * (1.0 - 1e-12) + 1e-12 * mu);
    cplx nutilde0 = w / (2.0 * M_PI);
    bool ok = std::abs(nutilde0.imag()) < 0.5;
    return {mu, beta, nutilde0, ok};
}

} // namespace nlshock
