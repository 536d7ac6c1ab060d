#ifndef NLSHOCK_MAT2_HPP
#define NLSHOCK_MAT2_HPP

#include <complex>
#include <cmath>
#include <algorithm>

namespace nlshock {

using cplx = std::complex<double>;
inline constexpr cplx I{0.0, 1.0};

// 2x2 complex matrix, the value type of all RHP solutions and jumps.
struct Mat2 {
    cplx a11{1.0}, a12{0.0}, a21{0.0}, a22{1.0};

    static Mat2 identity() { return {}; }
    static Mat2 zero() { return {0.0, 0.0, 0.0, 0.0}; }
    static Mat2 diag(cplx d1, cplx d2) { return {d1, 0.0, 0.0, d2}; }
    static Mat2 offdiag(cplx u, cplx l) { return {0.0, u, l, 0.0}; }
    // exp(c*sigma3) as a diagonal matrix
    static Mat2 exp_sigma3(cplx c) { return diag(std::exp(c), std::exp(-c)); }

    cplx det() const { return a11 * a22 - a12 * a21; }
    Mat2 inv() const {
        cplx d = det();
        return {a22 / d, -a12 / d, -a21 / d, a11 / d};
    }
    Mat2 conjugate() const { return {std::conj(a11), std::conj(a12), std::conj(a21), std::conj(a22)}; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
                x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
    }
    friend Mat2 operator*(cplx c, const Mat2& x) { return {c * x.a11, c * x.a12, c * x.a21, c * x.a22}; }
    friend Mat2 operator+(const Mat2& x, const Mat2& y) {
        return {x.a11 + y.a11, x.a12 + y.a12, x.a21 + y.a21, x.a22 + y.a22};
    }
    friend Mat2 operator-(const Mat2& x, const Mat2& y) {
        return {x.a11 - y.a11, x.a12 - y.a12, x.a21 - y.a21, x.a22 - y.a22};
    }

    double norm_max() const {
        return std::max({std::abs(a11), std::abs(a12), std::abs(a21), std::abs(a22)});
    }
};

inline Mat2 sigma1() { return Mat2::offdiag(1.0, 1.0); }
inline Mat2 sigma3() { return Mat2::diag(1.0, -1.0); }

// sigma3 sigma1 conj(M) sigma1 sigma3, the symmetry all RHP solutions obey in k -> conj(k)
inline Mat2 schwarz_image(const Mat2& m) {
    Mat2 c = m.conjugate();
    return {c.a22, -c.a21, -c.a12, c.a11};
}

} // namespace nlshock

#endif
