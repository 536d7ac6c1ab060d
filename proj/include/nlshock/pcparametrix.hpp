#ifndef NLSHOCK_PCPARAMETRIX_HPP
#define NLSHOCK_PCPARAMETRIX_HPP

#include <functional>
#include <memory>
#include <vector>

#include "nlshock/cauchyfactors.hpp"
#include "nlshock/modelrhp.hpp"

namespace nlshock {

// The ray-and-arc contour of the exactly solvable local problem: four rays
// from the unit circle along the half-axes, five arcs partitioning the
// circle, and a branch cut along arg = -3pi/4.
struct RayContourY {
    static constexpr double cut_angle = -0.75 * M_PI;

    // piece index 1..9; midpoint of each piece (rays truncated at radius rmax)
    static cplx midpoint(int piece, double rmax = 3.0);
    // sector index 1..6 of an off-contour point
    static int sector(cplx lam);
    // endpoints shared by rays and arcs, for junction audits
    static const std::vector<cplx>& junctions();
};

// ln with the cut along arg = -3pi/4, positive on the positive reals
cplx log_C(cplx lam);
inline cplx pow_C(cplx lam, cplx a) { return std::exp(a * log_C(lam)); }

// piecewise jump matrix of the local model
Mat2 v_Y(double y, cplx nutilde, cplx lam, int piece);
int piece_of(cplx lam, double tol = 1e-9);

// (2i)^{i nu + 1} sqrt(pi) e^{5 pi nu / 2} / ((e^{2 pi nu} - 1) Gamma(i nu))
cplx beta_Y(cplx nutilde);

// Explicit solution via parabolic cylinder functions and its residue.
// Far from the origin the entries mix a dominant and a recessive Weber
// solution; deep inside the sectors adjacent to the coordinate axes that
// mixing cancels beyond double range once |lambda|^2 |cos 2 arg lambda|
// exceeds a few hundred, so large-lambda evaluation is reliable near the
// diagonal rays (which is where the residue expansion is examined).
Mat2 m_Y(double y, cplx nutilde, cplx lam);
Mat2 m1_Y(double y, cplx nutilde);

// Lax-pair cross-checks: w_y + 2yw = 0 (finite differences), z = 0, and the
// cyclic constraint on the Stokes-type constants
struct LaxReport {
    double w_ode_residual;
    double z_residual;
    double cyclic_residual;
};
LaxReport lax_identities(cplx nutilde, double y0 = 0.5, double h = 1e-4);

// local conjugator at beta and the subleading coefficient it produces
Mat2 Y_beta(const ModelSolution& ms, const ScalarFactors& sf, double t, cplx k);
Mat2 T_beta(const ModelSolution& ms, const ScalarFactors& sf, double t);

// stationary-point realization at mu, behind a pluggable interface
class MuParametrix {
public:
    virtual ~MuParametrix() = default;
    virtual Mat2 t_mu(const ModelSolution& ms, const ScalarFactors& sf, double t) const = 0;
};

// default: the same explicit solution driven with y = 0 and the real order
// -ln(1+|r(mu)|^2)/(2 pi)
std::unique_ptr<MuParametrix> standard_mu_parametrix();

} // namespace nlshock

#endif
