#ifndef NLSHOCK_GBAND_HPP
#define NLSHOCK_GBAND_HPP

#include "nlshock/curve.hpp"

namespace nlshock {

// g-function of the merged configuration: dg/dk = 4(k-mu)(k-beta)(k-betabar)/wtilde.
// g is normalized so that g+ + g- = 0 on Sigma2; then g+ + g- = 2 Omega1 on
// Sigma1 and g - theta -> g0 at infinity, with Omega1 and g0 real.
class GBand {
public:
    // merged band parameters at the symmetric point: mu = 0, beta = i sqrt(A^2-1)
    static GBand build_symmetric(const BackgroundParams& p);
    // Newton-continued merged parameters at nearby xi (see band_params_for_xi),
    // or externally supplied ones
    static GBand build(const BackgroundParams& p, double xi, double mu, cplx beta);
    static GBand build(const BackgroundParams& p, double xi, double mu, cplx beta, cplx alpha);
    // skips the tail constant g0 (used inside parameter solves)
    static GBand build_light(const BackgroundParams& p, double xi, double mu, cplx beta);

    double xi() const { return xi_; }
    double mu() const { return mu_; }
    cplx beta() const { return beta_; }
    cplx alpha() const { return alpha_; }
    double g0() const { return g0_; }
    double omega1_period() const { return Omega1_; }   // Omega1 in the jump g+ + g- = 2 Omega1
    double g_plus_beta() const { return g_beta_val_; } // real boundary value at beta
    double omega1_im_residual() const { return Omega1_im_; }

    cplx dg(cplx k) const;
    // dg - (4k + xi), evaluated through an exact polynomial difference so the
    // O(k^-2) tail never suffers cancellation
    cplx dg_minus_phase(cplx k) const;
    cplx g(cplx k) const;
    cplx g_beta(cplx k) const { return g(k) - g_beta_val_; }
    // g'(s)/((s-beta)(s-alpha))^{1/2...}, analytic across the merged pair
    cplx g1(cplx s) const;
    cplx g1s(cplx s) const;  // d g1 / ds
    cplx psi_beta() const { return psi_beta_; }
    // y = -sqrt(t) i g1(beta)(beta-alpha)/(2 psi_beta)
    double y_of(double t) const;
    cplx lambda_of(double t, cplx k) const { return std::sqrt(t) * psi_beta_ * (k - beta_); }

    const BackgroundParams& params() const { return p_; }

private:
    BackgroundParams p_;
    double xi_{0.0}, mu_{0.0};
    cplx beta_, alpha_;
    double g0_{0.0}, Omega1_{0.0}, Omega1_im_{0.0}, g_beta_val_{0.0};
    cplx shift_{0.0};
    cplx psi_beta_;
    cplx ncoef_[7];  // 16(k-mu)^2(k-beta)^2(k-betabar)^2 - (4k+xi)^2 Q(k)
    void set_poly();
    void finish(bool with_g0 = true);
    cplx g_raw(cplx k) const;
};

// merged band parameters (mu, beta) at xi near the merge: solves the large-k
// matching of dg together with Im g(beta) = 0
void band_params_for_xi(const BackgroundParams& p, double xi, double& mu, cplx& beta);

} // namespace nlshock

#endif
