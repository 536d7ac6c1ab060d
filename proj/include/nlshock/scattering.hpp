#ifndef NLSHOCK_SCATTERING_HPP
#define NLSHOCK_SCATTERING_HPP

#include <functional>
#include <memory>
#include <vector>

#include "nlshock/mat2.hpp"

namespace nlshock {

// Physical data of the two plane-wave backgrounds. B1 = -1, B2 = 1 is the
// shock normalization; E_j = B_j + i A_j are the branch points.
struct BackgroundParams {
    double A1{1.5};
    double A2{1.5};
    double phi{0.0};

    static constexpr double B1 = -1.0;
    static constexpr double B2 = 1.0;
    cplx E1() const { return {B1, A1}; }
    cplx E2() const { return {B2, A2}; }
};

struct AbPair {
    cplx a, b;
};

// Jost scattering data of the pure-step initial condition, built from the
// transfer-matrix match at x = 0 of the plane-wave solutions of the
// Zakharov-Shabat system. a a* + b b* = 1 identically and a -> 1 at infinity.
// A user-supplied (a,b) evaluator can replace the step closed form.
class ScatteringData {
public:
    explicit ScatteringData(const BackgroundParams& p);
    ScatteringData(const BackgroundParams& p, std::function<AbPair(cplx)> custom_ab);

    const BackgroundParams& params() const { return p_; }

    AbPair ab(cplx k) const;
    AbPair ab_star(cplx k) const;  // Schwarz conjugates a*, b*
    cplx a(cplx k) const { return ab(k).a; }
    cplx b(cplx k) const { return ab(k).b; }
    cplx r(cplx k) const;          // b*/a
    cplx rr_star(cplx k) const;    // r(k) r*(k)
    cplx rr_star_prime(cplx k) const;
    cplx a_hat(cplx k) const;      // a nu1
    cplx b_hat(cplx k) const;      // b nu1

    // nu1 = ((k-E1)/(k-Ebar1))^{1/4}, cut on Sigma1, -> 1 at infinity
    cplx nu1(cplx k) const;

    // the radicals X_j = ((k-B_j)^2+A_j^2)^{1/2}, cut on Sigma_j, ~ k at +inf
    cplx X1(cplx k) const;
    cplx X2(cplx k) const;

    // ln(1+ r r*) continued along the straight contour from mu to beta,
    // starting from the positive real value at mu
    cplx log1rr_gamma(cplx mu, cplx beta, cplx s) const;
    // same along the conjugate contour (Schwarz image)
    cplx log1rr_gamma_conj(cplx mu, cplx beta, cplx s) const;

private:
    BackgroundParams p_;
    std::function<AbPair(cplx)> custom_;
    mutable std::vector<double> unwrap_corr_;  // 2*pi multiples along [mu,beta]
    mutable cplx cached_mu_{0.0}, cached_beta_{0.0};
    void build_unwrap(cplx mu, cplx beta) const;
};

// transition constants of the merged configuration
struct TransitionConstants {
    double mu;
    cplx beta;
    cplx nutilde0;
    bool assumption_ok;  // Im nutilde0 in (-1/2, 1/2)
};

// symmetric case A1 = A2 = A > 1: mu = 0, beta = i sqrt(A^2-1)
TransitionConstants transition_constants(const ScatteringData& sd);
// general merged band parameters supplied externally
TransitionConstants transition_constants(const ScatteringData& sd, double mu, cplx beta);

} // namespace nlshock

#endif
