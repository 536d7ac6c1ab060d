#ifndef NLSHOCK_SPECFUN_HPP
#define NLSHOCK_SPECFUN_HPP

#include "nlshock/mat2.hpp"

namespace nlshock {

// Gamma on the complex plane (Lanczos, reflection for Re z < 1/2).
// Poles at the non-positive integers.
cplx gamma_c(cplx z);

// Parabolic cylinder function D_a(z), entire in both arguments.
// Power series below |z| = 8, sector-dependent asymptotic expansion above.
cplx pcf_d(cplx a, cplx z);

// confluent hypergeometric M(alpha, gamma, x) = 1F1, Kummer-transformed for
// Re x < 0 to keep the series cancellation-free
cplx kummer_m(cplx alpha, cplx gamma, cplx x);

namespace detail {
// both internal routes of pcf_d, exposed for the overlap-agreement check
cplx pcf_d_series(cplx a, cplx z);
cplx pcf_d_asymptotic(cplx a, cplx z);
} // namespace detail

struct ThetaParams {
    cplx tau;   // Im tau > 0
    int trunc;  // series cutoff N

    static ThetaParams make(cplx tau, double tail_tol = 1e-15);
};

// theta(z) = sum_n exp(2 pi i (n^2 tau / 2 + n z)); even, 1-periodic,
// theta(z + tau) = exp(-i pi tau - 2 pi i z) theta(z).
// The argument is lattice-reduced before summation.
cplx theta(cplx z, const ThetaParams& p);

// A ray branch cut: the associated log is continuous off
// {anchor + s e^{i dir}, s >= 0} and equals log|z-anchor| + i*arg with
// arg - ref_arg wrapped into (-pi, pi].
struct BranchCut {
    cplx anchor{0.0};
    double dir{M_PI};     // ray direction
    double ref_arg{0.0};  // argument assigned on the opposite ray (continuity pin)

    static BranchCut negative_real_axis() { return {0.0, M_PI, 0.0}; }
};

cplx log_cut(cplx z, const BranchCut& cut);
inline cplx pow_cut(cplx z, cplx a, const BranchCut& cut) { return std::exp(a * log_cut(z, cut)); }

} // namespace nlshock

#endif
