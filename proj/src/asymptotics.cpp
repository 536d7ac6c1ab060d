#include "nlshock/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace nlshock {

Asymptotics::Asymptotics(const BackgroundParams& p, const WedgeParams& w)
    : p_(p), w_(w), curve_(CurveData::build(p)), sd_(p), mu_(standard_mu_parametrix()) {}

void Asymptotics::set_band_override(double mu, cplx beta, cplx alpha) {
    override_ = Override{mu, beta, alpha};
    sf_xi_ = 1e300;
}

const ScalarFactors& Asymptotics::factors_at(double xi) const {
    if (sf_cache_ && sf_xi_ == xi) return *sf_cache_;
    GBand gb = [&] {
        if (override_) return GBand::build(p_, xi, override_->mu, override_->beta, override_->alpha);
        if (xi == 0.0 && std::abs(p_.A1 - p_.A2) < 1e-14) return GBand::build_symmetric(p_);
        double mu;
        cplx beta;
        band_params_for_xi(p_, xi, mu, beta);
        return GBand::build(p_, xi, mu, beta);
    }();
    sf_cache_ = std::make_unique<ScalarFactors>(sd_, gb);
    sf_xi_ = xi;
    return *sf_cache_;
}

double Asymptotics::F_value(double xi, double t, double d) const {
    const ScalarFactors& sf = factors_at(xi);
    double im = std::abs(sf.nutilde().imag());
    double lead = (d > 0.0) ? t * d * d * std::abs(std::log(d)) : 0.0;
    return std::pow(t, im) * std::pow(std::log(t), im + 2.0) * (lead + 1.0 / std::sqrt(t));
}

bool Asymptotics::wedge_test(double xi, double t, double d) const {
    if (xi < w_.xi0 - 1e-12) return false;
    if (t < w_.T) return false;
    const ScalarFactors& sf = factors_at(xi);
    double im0 = std::abs(sf.nutilde().imag());
    return d < w_.M * std::pow(t, -0.5 * (1.0 + im0) - w_.delta);
}

AsymptoticResult Asymptotics::eval(double x, double t) const { return eval_xi(x / t, t); }

AsymptoticResult Asymptotics::eval_xi(double xi, double t) const {
    const ScalarFactors& sf = factors_at(xi);
    const GBand& gb = sf.gband();
    AsymptoticResult res;
    res.xi = xi;
    res.t = t;
    res.mu = gb.mu();
    res.beta = gb.beta();
    res.nutilde = sf.nutilde();
    res.tau = curve_.tau();
    res.dtilde = curve_.d_tilde();
    res.omega1 = sf.omega1();
    res.Omega1 = gb.omega1_period();
    res.g0 = gb.g0();
    res.htilde_inf = sf.htilde_inf();
    res.y = gb.y_of(t);
    res.betaY = beta_Y(sf.nutilde());
    res.assumption_ok = std::abs(sf.nutilde().imag()) < 0.5;
    double dist = std::abs(gb.alpha() - gb.beta());
    res.wedge_ok = wedge_test(xi, t, dist);
    double F = F_value(xi, t, dist);
    res.error_bound = F * F + t * dist * dist;

    ModelSolution ms(curve_, gb.omega1_period(), sf.omega1(), t);
    res.vtilde = ms.vtilde();
    cplx phase = std::exp(2.0 * I * (t * gb.g0() + sf.htilde_inf()));

    // leading term two ways: the closed-form quotient and the model limit
    cplx pinf = curve_.abel_inf();
    cplx d = curve_.d_tilde();
    cplx v = ms.vtilde();
    cplx quot = (curve_.theta_of(pinf + d) * curve_.theta_of(pinf - v - d)) /
                (curve_.theta_of(pinf + v + d) * curve_.theta_of(pinf - d));
    cplx q0_direct = phase * (p_.A1 + p_.A2) * quot;
    cplx q0_model = 2.0 * I * phase * ms.limit12();
    res.q0 = q0_direct;
    res.q0_consistency = std::abs(q0_direct - q0_model);

    if (!res.assumption_ok) return res;

    Mat2 tb = T_beta(ms, sf, t);
    cplx sum = tb.a12 - std::conj(tb.a21);
    if (mu_) {
        Mat2 tm = mu_->t_mu(ms, sf, t);
        sum += tm.a12;
        res.q1_valid = true;
    }
    res.q1 = 2.0 * I * phase * sum;
    return res;
}

} // namespace nlshock
