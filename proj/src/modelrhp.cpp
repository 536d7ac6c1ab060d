#include "nlshock/modelrhp.hpp"

#include <cmath>
#include <stdexcept>

namespace nlshock {

ModelSolution::ModelSolution(const CurveData& curve, double Omega1, double omega1, double t)
    : curve_(curve), Omega1_(Omega1), omega1_(omega1), t_(t) {
    vtilde_ = -(t * Omega1 + omega1) / M_PI;
    cplx pinf = curve_.abel_inf();
    cplx d = curve_.d_tilde();
    th_inf_pd_ = curve_.theta_of(pinf + d);
    th_inf_md_ = curve_.theta_of(pinf - d);
    norm11_ = th_inf_pd_ / curve_.theta_of(pinf + vtilde_ + d);
    norm22_ = curve_.theta_of(-pinf - d) / curve_.theta_of(-pinf + vtilde_ - d);
    if (std::abs(curve_.theta_of(pinf + vtilde_ + d)) < 1e-13 ||
        std::abs(curve_.theta_of(-pinf + vtilde_ - d)) < 1e-13)
        throw std::runtime_error("model: theta denominator vanishes at this (xi,t)");
}

Mat2 ModelSolution::v_mod(cplx k) const {
    double phase = t_ * Omega1_ + omega1_;
    if (k.real() < 0.0)
        return Mat2::offdiag(I * std::exp(cplx(0, -2.0 * phase)), I * std::exp(cplx(0, 2.0 * phase)));
    return Mat2::offdiag(I, I);
}

Mat2 ModelSolution::m_mod(cplx k) const {
    cplx nu = curve_.nu(k);
    cplx Np = 0.5 * (nu + 1.0 / nu);
    cplx Nm = 0.5 * (nu - 1.0 / nu);
    cplx ph = curve_.abel(k);
    cplx d = curve_.d_tilde();
    cplx v = vtilde_;
    auto th = [&](cplx z) { return curve_.theta_of(z); };
    Mat2 m;
    m.a11 = Np * th(ph + v + d) / th(ph + d) * norm11_;
    m.a12 = Nm * th(-ph + v + d) / th(-ph + d) * norm11_;
    m.a21 = Nm * th(ph + v - d) / th(ph - d) * norm22_;
    m.a22 = Np * th(-ph + v - d) / th(-ph - d) * norm22_;
    return m;
}

cplx ModelSolution::limit12() const {
    const auto& p = curve_.params();
    cplx pinf = curve_.abel_inf();
    cplx d = curve_.d_tilde();
    cplx quot = (th_inf_pd_ * curve_.theta_of(pinf - vtilde_ - d)) /
                (curve_.theta_of(pinf + vtilde_ + d) * th_inf_md_);
    return -0.5 * I * (p.A1 + p.A2) * quot;
}

} // namespace nlshock
