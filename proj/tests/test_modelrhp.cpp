#include <doctest.h>

#include "nlshock/modelrhp.hpp"

using namespace nlshock;

namespace {
CurveData curve15() { return CurveData::build(BackgroundParams{1.5, 1.5, 0.0}); }
} // namespace

TEST_CASE("v_mod structure") {
    ModelSolution ms(curve15(), 0.3, 0.11, 7.0);
    Mat2 v2 = ms.v_mod(cplx(1.0, 0.4));
    CHECK(std::abs(v2.a12 - I) < 1e-15);
    CHECK(std::abs(v2.a21 - I) < 1e-15);
    CHECK(std::abs(v2.det() - 1.0) < 1e-15);
    Mat2 v1 = ms.v_mod(cplx(-1.0, 0.4));
    CHECK(std::abs(v1.det() - 1.0) < 1e-14);
    CHECK(std::abs(v1.a12 * v1.a21 - (-1.0)) < 1e-14);
    // phase multiple of pi collapses to the constant matrix, up to sign
    ModelSolution ms0(curve15(), 0.0, M_PI, 5.0);
    Mat2 w = ms0.v_mod(cplx(-1.0, 0.4));
    CHECK(std::abs(w.a12 - I) < 1e-12);
}

TEST_CASE("m_mod: normalization, determinant, Schwarz symmetry") {
    CurveData c = curve15();
    ModelSolution ms(c, 0.0, 0.37, 1e3);  // symmetric case has Omega1 = 0
    Mat2 far = ms.m_mod(cplx(3e3, 1.0));
    CHECK((far - Mat2::identity()).norm_max() < 2e-3);
    std::srand(41);
    for (int i = 0; i < 12; ++i) {
        cplx k(-3.0 + 6.0 * (std::rand() / double(RAND_MAX)),
               -2.5 + 5.0 * (std::rand() / double(RAND_MAX)));
        if (std::abs(k.real() - 1.0) < 0.15 || std::abs(k.real() + 1.0) < 0.15) continue;
        Mat2 m = ms.m_mod(k);
        CHECK(std::abs(m.det() - 1.0) < 1e-8);
        Mat2 sym = schwarz_image(ms.m_mod(std::conj(k)));
        CHECK((m - sym).norm_max() < 1e-8);
    }
}

TEST_CASE("m_mod: jump condition on both cuts") {
    CurveData c = curve15();
    ModelSolution ms(c, 0.0, 0.37, 1e3);
    const double eps = 1e-8;
    for (cplx s0 : {cplx(1.0, 0.75), cplx(1.0, -0.6), cplx(-1.0, 0.75), cplx(-1.0, -0.9)}) {
        Mat2 mp = ms.m_mod(s0 - eps);   // west = + side (cuts oriented upward)
        Mat2 mm = ms.m_mod(s0 + eps);
        Mat2 resid = mp - mm * ms.v_mod(s0);
        CHECK(resid.norm_max() < 1e-6);
    }
}

TEST_CASE("limit12: degenerate value and large-k fit") {
    CurveData c = curve15();
    // vtilde = 0 when both constants vanish: quotient collapses
    ModelSolution ms0(c, 0.0, 0.0, 123.0);
    CHECK(std::abs(ms0.limit12() - (-0.5 * I * 3.0)) < 1e-12);

    ModelSolution ms(c, 0.0, 0.37, 1e3);
    for (double K : {1e2, 1e3}) {
        cplx k(0.0, K);
        cplx fit = k * ms.m_mod(k).a12;
        CHECK(std::abs(fit - ms.limit12()) < 3.0 / K + 1e-6);
    }
}

TEST_CASE("vtilde shifts by full periods leave the quotient invariant") {
    CurveData c = curve15();
    ModelSolution a(c, 0.0, 0.37, 10.0);
    // omega1 -> omega1 + 2 pi shifts vtilde by -2
    ModelSolution b(c, 0.0, 0.37 + 2.0 * M_PI, 10.0);
    CHECK(std::abs(a.limit12() - b.limit12()) < 1e-10);
    Mat2 ma = a.m_mod(cplx(0.3, 1.2));
    Mat2 mb = b.m_mod(cplx(0.3, 1.2));
    CHECK((ma - mb).norm_max() < 1e-10);
}

TEST_CASE("uniqueness proxy: Schwarz-symmetrized ansatz equals the direct one") {
    CurveData c = curve15();
    ModelSolution ms(c, 0.0, 0.51, 333.0);
    for (cplx k : {cplx(0.4, 1.1), cplx(-2.2, 0.7), cplx(2.4, -1.3)}) {
        Mat2 direct = ms.m_mod(k);
        Mat2 sym = schwarz_image(ms.m_mod(std::conj(k)));
        CHECK((direct - sym).norm_max() < 1e-9);
    }
}
