#include "nlshock/cauchyfactors.hpp"

#include <cmath>
#include <stdexcept>
#include <cstdio>

#include "nlshock/parallel.hpp"

namespace nlshock {

namespace {
const double kTailCut = 40.0;  // |r|^2 tail beyond this is integrated by substitution
}

cplx ScalarFactors::wt_plus(cplx s) const {
    // east boundary value of wtilde on the vertical cuts
    return sd_.X1(s + 1e-11) * sd_.X2(s + 1e-11);
}

cplx ScalarFactors::delta(cplx k) const {
    auto f = [this](cplx s) { return std::log(1.0 + sd_.rr_star(cplx(s.real(), 0.0)).real()); };
    Contour fin{{cplx(-kTailCut, 0), cplx(-2.0, 0), cplx(-0.5, 0), cplx(mu_, 0)}};
    cplx v = cauchy_integral(fin, f, k, 1e-11);
    // s = -kTailCut/u maps the tail to (0,1]
    auto tail = [&](cplx u) {
        cplx s(-kTailCut / u.real(), 0.0);
        return std::log(1.0 + sd_.rr_star(s).real()) / (s - k) * (kTailCut / (u.real() * u.real()));
    };
    v += integrate(Contour{{cplx(1e-8, 0), cplx(1, 0)}}, tail, 1e-11);
    return std::exp(v / (2.0 * M_PI * I));
}

cplx ScalarFactors::dtilde_exponent(cplx k) const {
    Contour up{{cplx(mu_, 0), beta_}};
    Contour dn{{std::conj(beta_), cplx(mu_, 0)}};
    auto wu = [this](cplx s) { return sd_.log1rr_gamma(mu_, beta_, s); };
    auto wd = [this](cplx s) { return sd_.log1rr_gamma_conj(mu_, beta_, s); };
    return (cauchy_integral(up, wu, k, 1e-11) - cauchy_integral(dn, wd, k, 1e-11)) /
           (2.0 * M_PI * I);
}

cplx ScalarFactors::delta_tilde(cplx k) const { return std::exp(dtilde_exponent(k)); }

cplx ScalarFactors::ln_mu(cplx k) const {
    double arg_psi = std::arg(gb_.psi_beta());
    double a = std::arg(gb_.psi_beta() * (k - beta_));
    while (a <= -0.75 * M_PI) a += 2.0 * M_PI;
    while (a > 1.25 * M_PI) a -= 2.0 * M_PI;
    return cplx(std::log(std::abs(k - beta_)), a - arg_psi);
}

cplx ScalarFactors::chi_tilde(cplx k) const {
    // continued ln(k-s) along the segment beta -> mu, pinned at ln_mu(k-beta)
    const int panels = 44, n = 16;
    std::vector<double> bnd;  // t parameter, 1 at beta
    bnd.push_back(1.0 - 1e-12);
    for (int j = 1; j < panels; ++j) bnd.push_back(1.0 - std::pow(2.0, -(double)j));
    bnd.push_back(0.0);
    cplx span = beta_ - cplx(mu_, 0);
    auto s_of = [&](double t) { return cplx(mu_, 0) + t * span; };
    // refine panels near k so the log kernel is resolved
    for (int pass = 0; pass < 24; ++pass) {
        bool split = false;
        std::vector<double> nb;
        nb.push_back(bnd[0]);
        for (size_t j = 1; j < bnd.size(); ++j) {
            double ta = bnd[j - 1], tb = bnd[j];
            double len = std::abs(ta - tb) * std::abs(span);
            double dist = std::min(std::abs(k - s_of(ta)),
                                   std::min(std::abs(k - s_of(tb)), std::abs(k - s_of(0.5 * (ta + tb)))));
            if (len > 0.5 * dist && len > 1e-11) {
                nb.push_back(0.5 * (ta + tb));
                split = true;
            }
            nb.push_back(tb);
        }
        bnd.swap(nb);
        if (!split) break;
    }

    // walk the panel-boundary values
    std::vector<cplx> Lb(bnd.size());
    Lb[0] = ln_mu(k);  // limit value at s ~ beta
    for (size_t j = 1; j < bnd.size(); ++j) {
        cplx prev = Lb[j - 1];
        const int sub = 48;
        for (int i = 1; i <= sub; ++i) {
            double t = bnd[j - 1] + (bnd[j] - bnd[j - 1]) * (double(i) / sub);
            cplx v = std::log(k - s_of(t));
            prev = cplx(v.real(), unwrap_near(prev.imag(), v.imag()));
        }
        Lb[j] = prev;
    }

    double w_mu = std::log(1.0 + sd_.rr_star(cplx(mu_, 0)).real());
    cplx t1 = -Lb.back() * w_mu / (2.0 * M_PI * I);

    // int over gamma_(mu,beta) of L_mu(s,k) d ln(1+rr*); GL nodes per panel,
    // each unwrapped against the linear interpolation of the walked endpoints
    const auto& xs = gl_nodes(n);
    const auto& ws = gl_weights(n);
    cplx t2 = 0.0;
    for (size_t j = 1; j < bnd.size(); ++j) {
        double ta = bnd[j - 1], tb = bnd[j];
        cplx acc = 0.0;
        for (int i = 0; i < n; ++i) {
            double t = 0.5 * (ta + tb) + 0.5 * (tb - ta) * xs[i];
            cplx s = s_of(t);
            cplx lm = std::log(k - s);
            double frac = (t - ta) / (tb - ta);
            double guide = Lb[j - 1].imag() + frac * (Lb[j].imag() - Lb[j - 1].imag());
            lm = cplx(lm.real(), unwrap_near(guide, lm.imag()));
            cplx wp = sd_.rr_star_prime(s) / (1.0 + sd_.rr_star(s));
            acc += ws[i] * lm * wp;
        }
        t2 += acc * 0.5 * (tb - ta) * span;
    }
    // the panels run from beta down to mu, so the accumulated sum is the
    // negative of the mu -> beta integral
    t2 *= 1.0 / (2.0 * M_PI * I);

    Contour dn{{std::conj(beta_), cplx(mu_, 0)}};
    auto wd = [this](cplx s) { return sd_.log1rr_gamma_conj(mu_, beta_, s); };
    cplx t3 = -cauchy_integral(dn, wd, k, 1e-11) / (2.0 * M_PI * I);
#ifdef NLSHOCK_CHI_DEBUG
    std::fprintf(stderr, "chi parts: t1=%.8f%+.8fi t2=%.8f%+.8fi t3=%.8f%+.8fi Lmu_end=%.8f%+.8fi\n",
        t1.real(), t1.imag(), t2.real(), t2.imag(), t3.real(), t3.imag(),
        Lb.back().real(), Lb.back().imag());
#endif
    return t1 + t2 + t3;
}

cplx ScalarFactors::Piece::L_at(double u) const {
    // cubic Lagrange on the uniform grid
    double h = ugrid[1] - ugrid[0];
    int n = (int)ugrid.size();
    int i = std::clamp((int)std::floor(u / h), 1, n - 3);
    double x = (u - ugrid[i]) / h;
    cplx f0 = L[i - 1], f1 = L[i], f2 = L[i + 1], f3 = L[i + 2];
    double xm = x + 1.0;
    return f0 * (-(x) * (x - 1.0) * (x - 2.0) / 6.0) + f1 * (xm * (x - 1.0) * (x - 2.0) / 2.0) +
           f2 * (-xm * x * (x - 2.0) / 2.0) + f3 * (xm * x * (x - 1.0) / 6.0);
}

void ScalarFactors::build_piece(int which, int ngrid) {
    Piece& pc = pieces_[which];
    const auto& p = sd_.params();
    pc.bp = (which == 0) ? p.E1() : p.E2();
    pc.dir = cplx(0, -1);
    pc.U = std::sqrt((which == 0) ? p.A1 : p.A2);
    pc.ugrid.resize(ngrid);
    pc.L.resize(ngrid);
    for (int i = 0; i < ngrid; ++i) pc.ugrid[i] = pc.U * (double(i) / (ngrid - 1));
    std::vector<cplx> raw(ngrid);
    par::parallel_for(ngrid, [&](std::ptrdiff_t i) {
        // keep the sample off the branch point and just above the real axis
        double u = std::clamp(pc.ugrid[i], 1e-7, pc.U * (1.0 - 2e-9));
        cplx s = pc.s_of(u);
        cplx east = s + 1e-11, west = s - 1e-11;
        cplx d2 = delta2(east) * delta2(west);
        if (which == 0) {
            cplx ah = sd_.a_hat(east) * sd_.a_hat(west);
            raw[i] = std::log(ah * d2 * std::exp(I * p.phi));
        } else {
            raw[i] = std::log(sd_.nu1(east) * sd_.nu1(west) * d2);
        }
    });
    pc.L[ngrid - 1] = raw[ngrid - 1];  // principal at the crossing
    for (int i = ngrid - 2; i >= 0; --i)
        pc.L[i] = cplx(raw[i].real(), unwrap_near(pc.L[i + 1].imag(), raw[i].imag()));
}

cplx ScalarFactors::sigma1_density(double y) const {
    double u = std::sqrt(sd_.params().A1 - y);
    return 2.0 * omega1_ - I * pieces_[0].L_at(u);
}

cplx ScalarFactors::sigma2_density(double y) const {
    if (y >= 0.0) {
        double u = std::sqrt(sd_.params().A2 - y);
        return -I * pieces_[1].L_at(u);
    }
    return std::conj(sigma2_density(-y));
}

cplx ScalarFactors::piece_integral(int which, double om, const std::function<cplx(cplx)>& f) const {
    const Piece& pc = pieces_[which];
    double w1 = (which == 0) ? 2.0 * om : 0.0;
    // upper half, downward orientation, branch point to axis: ds = 2 u dir du
    auto dens = [&](cplx uc) {
        double u = uc.real();
        cplx s = pc.s_of(u);
        cplx H = (cplx(w1, 0) - I * pc.L_at(u)) / wt_plus(s);
        return H * f(s) * 2.0 * u * pc.dir;
    };
    cplx up = integrate(Contour{{cplx(0, 0), cplx(pc.U, 0)}}, dens, 1e-11);
    // lower half via H = H*, continuing from the axis down to the conjugate
    // branch point: s runs conj(s(U-^2)) .. conj(bp), i.e. u from U to 0 with
    // ds = conj(2 u dir) du
    auto dens_c = [&](cplx uc) {
        double u = uc.real();
        cplx s = pc.s_of(u);
        cplx H = (cplx(w1, 0) - I * pc.L_at(u)) / wt_plus(s);
        return std::conj(H) * f(std::conj(s)) * std::conj(2.0 * u * pc.dir);
    };
    cplx dn = -integrate(Contour{{cplx(0, 0), cplx(pc.U, 0)}}, dens_c, 1e-11);
    return up + dn;
}

cplx ScalarFactors::htilde_integral(cplx k) const {
    cplx v = 0.0;
    for (int which = 0; which < 2; ++which)
        v += piece_integral(which, omega1_, [&](cplx s) { return 1.0 / (s - k); });
    return v;
}

cplx ScalarFactors::htilde(cplx k) const {
    cplx wt = sd_.X1(k) * sd_.X2(k);
    return wt * htilde_integral(k) / (2.0 * M_PI * I);
}

ScalarFactors::ScalarFactors(const ScatteringData& sd, const GBand& gb) : sd_(sd), gb_(gb) {
    mu_ = gb.mu();
    beta_ = gb.beta();
    nutilde_ = sd_.log1rr_gamma(mu_, beta_, beta_ * (1.0 - 1e-12) + 1e-12 * mu_) / (2.0 * M_PI);

    chi_beta_ = chi_tilde(beta_ + 1e-9 * std::exp(I * std::arg(beta_ - cplx(mu_, 0))));
    delta0_ = std::exp(I * nutilde_ * std::log(gb_.psi_beta())) * std::exp(chi_beta_);

    build_piece(0, 320);
    build_piece(1, 320);

    // omega1 from the affine condition: the total integral of H over the
    // model contour must vanish or htilde grows linearly at infinity
    auto one = [](cplx) { return cplx(1.0, 0.0); };
    cplx I0 = piece_integral(0, 0.0, one) + piece_integral(1, 0.0, one);
    cplx I1 = piece_integral(0, 1.0, one) + piece_integral(1, 1.0, one);
    omega1_ = (-I0 / (I1 - I0)).real();

    auto sf = [](cplx s) { return s; };
    cplx J = piece_integral(0, omega1_, sf) + piece_integral(1, omega1_, sf);
    cplx hinf = -J / (2.0 * M_PI * I);
    htilde_inf_ = hinf.real();
    htilde_inf_im_ = hinf.imag();
}

} // namespace nlshock
