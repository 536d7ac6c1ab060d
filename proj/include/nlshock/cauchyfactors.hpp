#ifndef NLSHOCK_CAUCHYFACTORS_HPP
#define NLSHOCK_CAUCHYFACTORS_HPP

#include <memory>
#include <vector>

#include "nlshock/gband.hpp"
#include "nlshock/quadrature.hpp"
#include "nlshock/scattering.hpp"

namespace nlshock {

// Scalar Cauchy-integral factors of the conjugation chain: delta (real-line),
// delta_tilde (band contour), their product delta2, the chi split of
// delta_tilde near beta, and the Sigma-mod field (omega1, htilde) that makes
// the cut jumps constant.
class ScalarFactors {
public:
    ScalarFactors(const ScatteringData& sd, const GBand& gb);

    // exp of the Cauchy transform of ln(1+|r|^2) over (-inf, mu]
    cplx delta(cplx k) const;
    // exp of the band-contour transform of the continued ln(1+rr*); cut on
    // gamma_(betabar,beta), delta_tilde = (delta_tilde*)^{-1}
    cplx delta_tilde(cplx k) const;
    cplx delta2(cplx k) const { return delta(k) * delta_tilde(k); }

    // ln(k-beta) with cut along gamma_(mu,beta), pinned so that
    // ln_C(lambda) = ln_mu(k-beta) + ln(sqrt(t) psi_beta)
    cplx ln_mu(cplx k) const;
    cplx chi_tilde(cplx k) const;
    cplx nutilde() const { return nutilde_; }
    cplx delta0() const { return delta0_; }
    cplx delta1(cplx k) const { return std::exp(chi_tilde(k) - chi_beta_); }

    double omega1() const { return omega1_; }
    double htilde_inf() const { return htilde_inf_; }
    double htilde_inf_im_residual() const { return htilde_inf_im_; }
    cplx htilde(cplx k) const;

    // boundary values of the Sigma-mod jump densities (for the jump audits):
    // 2*omega1 - i ln(ahat+ ahat- delta2^2 e^{i phi}) on Sigma1+,
    // -i ln(nu1^2 delta2^2) on Sigma2
    cplx sigma1_density(double y) const;  // at -1 + i y, y in (0, A1)
    cplx sigma2_density(double y) const;  // at  1 + i y, y in (-A2, A2)

    double R_of(double t) const { return 1.0 / (std::abs(gb_.psi_beta()) * std::sqrt(t)); }
    double eps_disk() const { return eps_; }

    const GBand& gband() const { return gb_; }
    const ScatteringData& scattering() const { return sd_; }

private:
    ScatteringData sd_;
    GBand gb_;
    cplx beta_, nutilde_, chi_beta_, delta0_;
    double mu_, omega1_{0.0}, htilde_inf_{0.0}, htilde_inf_im_{0.0}, eps_{0.35};

    // Sigma-mod pieces parametrized as s = bp + dir u^2 with cached log
    // densities; index 0: Sigma1 upper, 1: Sigma2 upper
    struct Piece {
        cplx bp, dir;
        double U;
        std::vector<double> ugrid;
        std::vector<cplx> L;  // continued log density at ugrid
        cplx L_at(double u) const;
        cplx s_of(double u) const { return bp + dir * u * u; }
    };
    Piece pieces_[2];

    cplx wt_plus(cplx s) const;
    cplx dtilde_exponent(cplx k) const;
    void build_piece(int which, int ngrid);
    // integral over one piece (both conjugate halves) of H(s) f(s) ds
    cplx piece_integral(int which, double om, const std::function<cplx(cplx)>& f) const;
    cplx htilde_integral(cplx k) const;
};

} // namespace nlshock

#endif
