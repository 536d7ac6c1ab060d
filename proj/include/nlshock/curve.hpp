#ifndef NLSHOCK_CURVE_HPP
#define NLSHOCK_CURVE_HPP

#include "nlshock/scattering.hpp"
#include "nlshock/specfun.hpp"

namespace nlshock {

// Point on the genus-1 surface: projection plus sheet sign (+1 upper).
struct SurfacePoint {
    cplx k;
    int sheet{+1};
};

// Genus-1 surface with cuts Sigma1, Sigma2. Carries the normalized
// differential dk/(cNorm wtilde), the period tau, the Abel map from Ebar2,
// and the constants Ktilde, dtilde attached to the finite zero P1 of
// nuhat - 1.
class CurveData {
public:
    static CurveData build(const BackgroundParams& p);

    // branch-tracked sqrt of the quartic, positive for k >> 0
    cplx w_tilde(cplx k) const;
    // nu = ((k-E1)(k-E2)/((k-Ebar1)(k-Ebar2)))^{1/4}, -> 1 at infinity
    cplx nu(cplx k) const;

    // Abel map of an upper-sheet projection (mod the lattice Z + tau Z);
    // lower sheet is the negative
    cplx abel(cplx k) const;
    cplx abel(const SurfacePoint& P) const { return double(P.sheet) * abel(P.k); }

    cplx cnorm() const { return cnorm_; }
    cplx tau() const { return tau_; }
    cplx abel_inf() const { return abel_inf_; }
    cplx K_tilde() const { return 0.5 * (1.0 + tau_); }
    cplx d_tilde() const { return d_tilde_; }
    SurfacePoint P1() const { return P1_; }
    const BackgroundParams& params() const { return p_; }
    const ThetaParams& theta_params() const { return tp_; }
    cplx theta_of(cplx z) const { return theta(z, tp_); }

private:
    BackgroundParams p_;
    cplx cnorm_, tau_, abel_inf_, d_tilde_;
    SurfacePoint P1_;
    ThetaParams tp_{cplx(0, 1), 8};
};

} // namespace nlshock

#endif
