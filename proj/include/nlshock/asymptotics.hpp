#ifndef NLSHOCK_ASYMPTOTICS_HPP
#define NLSHOCK_ASYMPTOTICS_HPP

#include <memory>
#include <optional>

#include "nlshock/pcparametrix.hpp"

namespace nlshock {

struct WedgeParams {
    double delta{0.51};
    double M{1.0};
    double T{50.0};
    double xi0{0.0};
};

struct AsymptoticResult {
    cplx q0{0.0};
    cplx q1{0.0};
    bool q1_valid{false};
    double error_bound{0.0};
    bool wedge_ok{false};
    bool assumption_ok{false};
    // constants in effect
    cplx nutilde, tau, dtilde, vtilde, betaY, beta;
    double omega1{0}, Omega1{0}, g0{0}, htilde_inf{0}, y{0}, mu{0}, xi{0}, t{0};
    double q0_consistency{0};  // |direct - via limit12|
};

// Assembly of the transition-zone asymptotics. Curve data is shared across
// xi; the band and scalar factors are rebuilt (and cached) per xi.
class Asymptotics {
public:
    Asymptotics(const BackgroundParams& p, const WedgeParams& w = {});

    AsymptoticResult eval(double x, double t) const;
    AsymptoticResult eval_xi(double xi, double t) const;

    bool wedge_test(double xi, double t, double alpha_beta_dist = 0.0) const;
    double F_value(double xi, double t, double alpha_beta_dist = 0.0) const;

    // replace or remove the mu-parametrix plug-in (nullptr: Q1 partial)
    void set_mu_parametrix(std::unique_ptr<MuParametrix> mp) { mu_ = std::move(mp); }
    // override the continued band parameters for a given xi
    void set_band_override(double mu, cplx beta, cplx alpha);

    const CurveData& curve() const { return curve_; }
    const BackgroundParams& params() const { return p_; }
    const WedgeParams& wedge() const { return w_; }
    const ScalarFactors& factors_at(double xi) const;

private:
    BackgroundParams p_;
    WedgeParams w_;
    CurveData curve_;
    ScatteringData sd_;
    std::unique_ptr<MuParametrix> mu_;
    struct Override {
        double mu;
        cplx beta, alpha;
    };
    std::optional<Override> override_;
    // single-slot cache keyed by xi
    mutable std::unique_ptr<ScalarFactors> sf_cache_;
    mutable double sf_xi_{1e300};
};

} // namespace nlshock

#endif
