#ifndef NLSHOCK_MODELRHP_HPP
#define NLSHOCK_MODELRHP_HPP

#include "nlshock/curve.hpp"

namespace nlshock {

// Global parametrix: the theta-function solution of the model problem with
// the constant off-diagonal jumps on Sigma1, Sigma2 (oriented downward, so
// the + side is east). vtilde = -(t Omega1 + omega1)/pi enters through
// shifted theta quotients.
class ModelSolution {
public:
    ModelSolution(const CurveData& curve, double Omega1, double omega1, double t);

    cplx vtilde() const { return vtilde_; }
    Mat2 v_mod(cplx k) const;   // jump matrix at k in Sigma-mod
    Mat2 m_mod(cplx k) const;   // pointwise solution, k off Sigma-mod
    cplx limit12() const;       // lim k (m_mod)_{12}

    const CurveData& curve() const { return curve_; }

private:
    CurveData curve_;
    double Omega1_, omega1_, t_;
    cplx vtilde_;
    cplx th_inf_pd_, th_inf_md_;  // theta(phi_inf + d), theta(phi_inf - d)
    cplx norm11_, norm22_;
};

} // namespace nlshock

#endif
