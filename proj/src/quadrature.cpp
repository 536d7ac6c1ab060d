#include "nlshock/quadrature.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace nlshock {

namespace {

// Newton iteration on Legendre polynomials; cached per order.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double dz = -p1 / pp;
            z += dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
}

struct GLCache {
    std::map<int, std::pair<std::vector<double>, std::vector<double>>> tab;
    const std::pair<std::vector<double>, std::vector<double>>& get(int n) {
        auto it = tab.find(n);
        if (it == tab.end()) {
            std::vector<double> x, w;
            gauss_legendre(n, x, w);
            it = tab.emplace(n, std::make_pair(std::move(x), std::move(w))).first;
        }
        return it->second;
    }
};

GLCache& cache() {
    static GLCache c;
    return c;
}

cplx gl_segment(const CplxFn& f, cplx a, cplx b, int n) {
    const auto& [x, w] = cache().get(n);
    cplx mid = 0.5 * (a + b), half = 0.5 * (b - a);
    cplx s = 0.0;
    for (int i = 0; i < n; ++i) s += w[i] * f(mid + half * x[i]);
    return s * half;
}

cplx gl_segment_cauchy(const CplxFn& f, cplx a, cplx b, cplx k, int n) {
    const auto& [x, w] = cache().get(n);
    cplx mid = 0.5 * (a + b), half = 0.5 * (b - a);
    cplx s = 0.0;
    for (int i = 0; i < n; ++i) {
        cplx z = mid + half * x[i];
        s += w[i] * f(z) / (z - k);
    }
    return s * half;
}

// adaptive on one segment: split until GL-12 and GL-24 agree
cplx adapt_segment(const CplxFn& f, cplx a, cplx b, double tol, int depth) {
    cplx c = gl_segment(f, a, b, 12);
    cplx fine = gl_segment(f, a, b, 24);
    if (std::abs(fine - c) <= tol * (1.0 + std::abs(fine)) || depth > 48 || std::abs(b - a) < 1e-14)
        return fine;
    cplx m = 0.5 * (a + b);
    return adapt_segment(f, a, m, tol, depth + 1) + adapt_segment(f, m, b, tol, depth + 1);
}

double seg_dist(cplx a, cplx b, cplx k) {
    cplx d = b - a;
    double L2 = std::norm(d);
    if (L2 == 0.0) return std::abs(k - a);
    double t = std::clamp(((k - a) * std::conj(d)).real() / L2, 0.0, 1.0);
    return std::abs(k - (a + t * d));
}

// panels split until each is shorter than 0.6x its distance to k
void pole_panels(cplx a, cplx b, cplx k, std::vector<std::pair<cplx, cplx>>& out, int depth) {
    double L = std::abs(b - a);
    double d = seg_dist(a, b, k);
    if (L <= 0.6 * d || depth > 42 || L < 1e-13) {
        out.emplace_back(a, b);
        return;
    }
    cplx m = 0.5 * (a + b);
    pole_panels(a, m, k, out, depth + 1);
    pole_panels(m, b, k, out, depth + 1);
}

} // namespace

const std::vector<double>& gl_nodes(int n) { return cache().get(n).first; }
const std::vector<double>& gl_weights(int n) { return cache().get(n).second; }

double Contour::length() const {
    double L = 0.0;
    for (size_t i = 1; i < pts.size(); ++i) L += std::abs(pts[i] - pts[i - 1]);
    return L;
}

cplx Contour::nearest(cplx k) const {
    cplx best = pts.front();
    double bd = std::abs(k - best);
    for (size_t i = 1; i < pts.size(); ++i) {
        cplx a = pts[i - 1], b = pts[i], d = b - a;
        double L2 = std::norm(d);
        double t = L2 > 0 ? std::clamp(((k - a) * std::conj(d)).real() / L2, 0.0, 1.0) : 0.0;
        cplx p = a + t * d;
        if (std::abs(k - p) < bd) {
            bd = std::abs(k - p);
            best = p;
        }
    }
    return best;
}

cplx integrate(const Contour& path, const CplxFn& f, double tol) {
    cplx s = 0.0;
    for (size_t i = 1; i < path.pts.size(); ++i) {
        // pre-split long legs: the two-order error estimate can agree
        // spuriously when a panel spans many scale lengths
        cplx a = path.pts[i - 1], b = path.pts[i];
        int m = std::max(1, (int)std::ceil(std::abs(b - a) / 8.0));
        for (int j = 0; j < m; ++j)
            s += adapt_segment(f, a + (b - a) * (double(j) / m), a + (b - a) * (double(j + 1) / m),
                               tol, 0);
    }
    return s;
}

double unwrap_near(double prev, double raw) {
    return raw - 2.0 * M_PI * std::round((raw - prev) / (2.0 * M_PI));
}

std::vector<cplx> log_along(const Contour& path, cplx k) {
    std::vector<cplx> out;
    out.reserve(path.pts.size());
    cplx v = std::log(path.pts.front() - k);
    out.push_back(v);
    for (size_t i = 1; i < path.pts.size(); ++i) {
        // sub-sample the segment so the argument never steps by more than pi
        cplx a = path.pts[i - 1], b = path.pts[i];
        int m = 1;
        double d = seg_dist(a, b, k);
        if (d > 0) m = std::max(1, (int)std::ceil(std::abs(b - a) / d));
        m = std::min(m, 4096);
        cplx prev = v;
        for (int j = 1; j <= m; ++j) {
            cplx z = a + (b - a) * (double(j) / m);
            cplx w = std::log(z - k);
            w = cplx(w.real(), unwrap_near(prev.imag(), w.imag()));
            prev = w;
        }
        v = prev;
        out.push_back(v);
    }
    return out;
}

cplx cauchy_integral(const Contour& path, const CplxFn& f, cplx k, double tol) {
    double d = path.dist(k);
    cplx total = 0.0;
    if (d > 0.05 * path.length()) {
        for (size_t i = 1; i < path.pts.size(); ++i) {
            std::vector<std::pair<cplx, cplx>> panels;
            pole_panels(path.pts[i - 1], path.pts[i], k, panels, 0);
            for (auto& [a, b] : panels) {
                cplx coarse = gl_segment_cauchy(f, a, b, k, 12);
                cplx fine = gl_segment_cauchy(f, a, b, k, 24);
                if (std::abs(fine - coarse) <= tol * (1.0 + std::abs(fine)))
                    total += fine;
                else
                    total += adapt_segment([&](cplx z) { return f(z) / (z - k); }, a, b, tol, 0);
            }
        }
        return total;
    }
    // near or on the path: subtract the value at the nearest point, integrate
    // the log term with its exact primitive
    cplx s0 = path.nearest(k);
    cplx f0 = f(s0);
    auto reg = [&](cplx z) { return f(z) - f0; };
    for (size_t i = 1; i < path.pts.size(); ++i) {
        std::vector<std::pair<cplx, cplx>> panels;
        pole_panels(path.pts[i - 1], path.pts[i], k, panels, 0);
        for (auto& [a, b] : panels)
            total += adapt_segment([&](cplx z) { return reg(z) / (z - k); }, a, b, tol, 0);
    }
    auto lp = log_along(path, k);
    total += f0 * (lp.back() - lp.front());
    return total;
}

cplx sqrt_endpoint_integrate(cplx bp, cplx end, const CplxFn& f, double tol) {
    cplx dir = (end - bp) / std::abs(end - bp);
    double U = std::sqrt(std::abs(end - bp));
    auto g = [&](cplx u) { return f(bp + dir * u * u) * 2.0 * u * dir; };
    return adapt_segment(g, 0.0, U, tol, 0);
}

} // namespace nlshock
