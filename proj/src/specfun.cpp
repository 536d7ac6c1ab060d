#include "nlshock/specfun.hpp"

#include <cmath>
#include <quadmath.h>
#include <stdexcept>

namespace nlshock {

namespace {

using lcplx = std::complex<long double>;
constexpr long double LPI = 3.14159265358979323846264338327950288L;

// Spouge's rational approximation in 80-bit arithmetic; a = 26 leaves the
// truncation error well below the long double epsilon
lcplx gamma_l(lcplx z) {
    constexpr int a = 26;
    static long double c[a];
    static bool init = false;
    if (!init) {
        c[0] = std::sqrt(2.0L * LPI);
        long double fact = 1.0L;  // (-1)^{k-1} (k-1)!
        for (int k = 1; k < a; ++k) {
            c[k] = std::exp((long double)(a - k)) * std::pow((long double)(a - k), k - 0.5L) / fact;
            fact *= -(long double)k;
        }
        init = true;
    }
    if (z.real() < 0.5L) return LPI / (std::sin(LPI * z) * gamma_l(1.0L - z));
    z -= 1.0L;
    lcplx acc = c[0];
    for (int k = 1; k < a; ++k) acc += c[k] / (z + lcplx(k));
    return acc * std::pow(z + lcplx(a), z + 0.5L) * std::exp(-(z + lcplx(a)));
}

} // namespace

cplx gamma_c(cplx z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw std::domain_error("gamma_c: pole at non-positive integer");
    lcplx v = gamma_l(lcplx(z.real(), z.imag()));
    return cplx((double)v.real(), (double)v.imag());
}

namespace {
// 1/Gamma, entire
cplx rgamma_c(cplx z) {
    lcplx lz(z.real(), z.imag());
    lcplx v;
    if (lz.real() < 0.5L) v = std::sin(LPI * lz) * gamma_l(1.0L - lz) / LPI;
    else v = 1.0L / gamma_l(lz);
    return cplx((double)v.real(), (double)v.imag());
}
} // namespace

namespace {

// Minimal quad-precision complex arithmetic. The power-series route needs
// ~e^{|z|^2/2} headroom against cancellation at the switchover radius, which
// double (and 80-bit) cannot supply for |a| up to 3.
struct qcplx {
    __float128 re, im;
    qcplx(__float128 r = 0, __float128 i = 0) : re(r), im(i) {}
    qcplx(cplx z) : re(z.real()), im(z.imag()) {}
    cplx to_cplx() const { return cplx((double)re, (double)im); }
};
inline qcplx operator+(qcplx a, qcplx b) { return {a.re + b.re, a.im + b.im}; }
inline qcplx operator-(qcplx a, qcplx b) { return {a.re - b.re, a.im - b.im}; }
inline qcplx operator-(qcplx a) { return {-a.re, -a.im}; }
inline qcplx operator*(qcplx a, qcplx b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline qcplx operator/(qcplx a, qcplx b) {
    __float128 d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline __float128 qabs(qcplx a) { return sqrtq(a.re * a.re + a.im * a.im); }
inline qcplx qexp(qcplx a) {
    __float128 e = expq(a.re);
    return {e * cosq(a.im), e * sinq(a.im)};
}
inline qcplx qlog(qcplx a) { return {logq(qabs(a)), atan2q(a.im, a.re)}; }
inline qcplx qpow(qcplx a, qcplx b) { return qexp(b * qlog(a)); }
const __float128 QPI = 3.14159265358979323846264338327950288Q;

inline qcplx qsin(qcplx a) {
    return {sinq(a.re) * coshq(a.im), cosq(a.re) * sinhq(a.im)};
}

qcplx kummer_core(qcplx alpha, qcplx gamma, qcplx x) {
    if (x.re < 0) return qexp(x) * kummer_core(gamma - alpha, gamma, -x);
    qcplx term{1}, sum{1};
    for (int n = 0; n < 900; ++n) {
        term = term * ((alpha + qcplx(n)) / (gamma + qcplx(n))) * x / qcplx(n + 1);
        sum = sum + term;
        if (qabs(term) < 1e-36Q * (1 + qabs(sum)) && n > 4) return sum;
    }
    return sum;
}

// Spouge in quad; a = 40 keeps the truncation error near the quad epsilon
qcplx gamma_q(qcplx z) {
    constexpr int a = 40;
    static __float128 c[a];
    static bool init = false;
    if (!init) {
        c[0] = sqrtq(2.0Q * QPI);
        __float128 fact = 1.0Q;  // (-1)^{k-1} (k-1)!
        for (int k = 1; k < a; ++k) {
            c[k] = expq((__float128)(a - k)) * powq((__float128)(a - k), k - 0.5Q) / fact;
            fact *= -(__float128)k;
        }
        init = true;
    }
    if (z.re < 0.5Q) return qcplx(QPI) / (qsin(qcplx(QPI) * z) * gamma_q(qcplx(1) - z));
    z = z - qcplx(1);
    qcplx acc{c[0]};
    for (int k = 1; k < a; ++k) acc = acc + qcplx(c[k]) / (z + qcplx(k));
    return acc * qpow(z + qcplx(a), z + qcplx(0.5Q)) * qexp(-(z + qcplx(a)));
}

// 1/Gamma, entire: vanishes at the poles instead of overflowing
qcplx rgamma_q(qcplx z) {
    if (z.re < 0.5Q) return qsin(qcplx(QPI) * z) * gamma_q(qcplx(1) - z) / qcplx(QPI);
    return qcplx(1) / gamma_q(z);
}

} // namespace

cplx kummer_m(cplx alpha, cplx gamma, cplx x) {
    return kummer_core(qcplx(alpha), qcplx(gamma), qcplx(x)).to_cplx();
}

namespace {

// power-series route: even/odd confluent solutions of Weber's equation,
// D_a(z) = 2^{a/2} sqrt(pi) e^{-z^2/4} [ M(-a/2,1/2,z^2/2)/Gamma((1-a)/2)
//          - sqrt(2) z M((1-a)/2,3/2,z^2/2)/Gamma(-a/2) ]
cplx pcf_series(cplx a, cplx z) {
    qcplx qa(a), qz(z);
    qcplx half{0.5Q}, x = half * qz * qz;
    qcplx t1 = kummer_core(-half * qa, half, x) * rgamma_q(half * (qcplx(1) - qa));
    qcplx t2 = qcplx(sqrtq(2.0Q)) * qz * kummer_core(half * (qcplx(1) - qa), qcplx(1.5Q), x) *
               rgamma_q(-half * qa);
    qcplx pre = qcplx(sqrtq(QPI)) * qexp(half * qa * qcplx(logq(2.0Q))) * qexp(-qcplx(0.25Q) * qz * qz);
    return (pre * (t1 - t2)).to_cplx();
}

// sector-dependent large-z expansion; the subdominant reflection term carries
// 0, e^{i pi a} or e^{-i pi a} depending on arg z
cplx pcf_asym(cplx a, cplx z) {
    auto asym_sum_1 = [&](cplx zz) {
        // sum_n (-1)^n a(a-1)...(a-2n+1) / (n! 2^n z^{2n}), truncated at the
        // smallest term
        cplx sum = 1.0, term = 1.0;
        cplx z2 = zz * zz;
        double smallest = 1e300;
        cplx acc = 1.0;
        for (int n = 1; n <= 40; ++n) {
            term *= -(a - cplx(2 * n - 2, 0)) * (a - cplx(2 * n - 1, 0)) / (2.0 * n * z2);
            if (std::abs(term) > smallest) break;
            smallest = std::abs(term);
            acc += term;
            if (std::abs(term) < 1e-18) break;
        }
        sum = acc;
        return sum;
    };
    auto asym_sum_2 = [&](cplx zz) {
        // sum_n (a+1)(a+2)...(a+2n) / (n! 2^n z^{2n})
        cplx z2 = zz * zz;
        cplx term = 1.0, acc = 1.0;
        double smallest = 1e300;
        for (int n = 1; n <= 40; ++n) {
            term *= (a + cplx(2 * n - 1, 0)) * (a + cplx(2 * n, 0)) / (2.0 * n * z2);
            if (std::abs(term) > smallest) break;
            smallest = std::abs(term);
            acc += term;
            if (std::abs(term) < 1e-18) break;
        }
        return acc;
    };

    // the three sector formulas overlap on |arg z| in (pi/4, 3pi/4);
    // switching at +-pi/2 stays well inside the overlaps
    double ph = std::arg(z);
    cplx lead = std::pow(z, a) * std::exp(-0.25 * z * z) * asym_sum_1(z);
    if (std::abs(ph) <= 0.5 * M_PI) return lead;
    cplx refl = (ph > 0.0) ? std::exp(cplx(0, M_PI) * a) : std::exp(cplx(0, -M_PI) * a);
    cplx sub = -std::sqrt(2.0 * M_PI) * rgamma_c(-a) * std::exp(0.25 * z * z) *
               std::pow(z, -a - 1.0) * asym_sum_2(z);
    return lead + refl * sub;
}

} // namespace

cplx pcf_d(cplx a, cplx z) {
    // quad precision keeps the series clean through |z| = 8 (cancellation
    // costs e^{|z|^2/2} ~ 1e14 of the ~1e-34 headroom); past 8 the expansion's
    // smallest term is below 1e-10 even for |a| = 3
    if (std::abs(z) <= 8.0) return pcf_series(a, z);
    return pcf_asym(a, z);
}

namespace detail {
cplx pcf_d_series(cplx a, cplx z) { return pcf_series(a, z); }
cplx pcf_d_asymptotic(cplx a, cplx z) { return pcf_asym(a, z); }
} // namespace detail

ThetaParams ThetaParams::make(cplx tau, double tail_tol) {
    if (tau.imag() <= 0.0) throw std::domain_error("theta: Im tau must be positive");
    double target = -std::log(tail_tol);
    int n = (int)std::ceil(std::sqrt(target / (M_PI * tau.imag()))) + 2;
    return {tau, n};
}

cplx theta(cplx z, const ThetaParams& p) {
    if (p.tau.imag() <= 0.0) throw std::domain_error("theta: Im tau must be positive");
    // shift into the fundamental strip first to keep the truncation honest
    double m = std::round(z.imag() / p.tau.imag());
    cplx zr = z - m * p.tau;
    zr -= std::round(zr.real());
    cplx s = 0.0;
    for (int n = p.trunc; n >= 1; --n) {
        cplx e = std::exp(cplx(0, 2.0 * M_PI) * (0.5 * double(n) * double(n) * p.tau));
        s += e * (std::exp(cplx(0, 2.0 * M_PI) * (double(n) * zr)) +
                  std::exp(cplx(0, -2.0 * M_PI) * (double(n) * zr)));
    }
    s += 1.0;
    if (m != 0.0)
        s *= std::exp(cplx(0, -M_PI) * (m * m * p.tau) + cplx(0, -2.0 * M_PI) * (m * zr));
    return s;
}

cplx log_cut(cplx z, const BranchCut& cut) {
    cplx w = z - cut.anchor;
    if (w == cplx(0.0)) throw std::domain_error("log_cut: singular at the anchor");
    double lo = cut.dir + 2.0 * M_PI * std::floor((cut.ref_arg - cut.dir) / (2.0 * M_PI));
    double th = std::arg(w);
    th = lo + std::fmod(th - lo + 4.0 * M_PI, 2.0 * M_PI);
    if (th <= lo) th += 2.0 * M_PI;
    return cplx(std::log(std::abs(w)), th);
}

} // namespace nlshock
