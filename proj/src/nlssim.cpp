#include "nlshock/nlssim.hpp"

#include <fftw3.h>

#include <cmath>
#include <stdexcept>

#include "nlshock/parallel.hpp"

namespace nlshock {

namespace kernels {

void nonlinear_phase_serial(std::vector<cplx>& q, double coeff) {
    for (size_t i = 0; i < q.size(); ++i) {
        double a = coeff * std::norm(q[i]);
        q[i] *= cplx(std::cos(a), std::sin(a));
    }
}

void nonlinear_phase_omp(std::vector<cplx>& q, double coeff) {
    par::parallel_for((std::ptrdiff_t)q.size(), [&](std::ptrdiff_t i) {
        double a = coeff * std::norm(q[i]);
        q[i] *= cplx(std::cos(a), std::sin(a));
    });
}

void sponge_serial(std::vector<cplx>& q, const std::vector<cplx>& ref,
                   const std::vector<double>& sigma, double dt) {
    for (size_t i = 0; i < q.size(); ++i) {
        double f = std::exp(-sigma[i] * dt);
        q[i] = ref[i] + (q[i] - ref[i]) * f;
    }
}

void sponge_omp(std::vector<cplx>& q, const std::vector<cplx>& ref,
                const std::vector<double>& sigma, double dt) {
    par::parallel_for((std::ptrdiff_t)q.size(), [&](std::ptrdiff_t i) {
        double f = std::exp(-sigma[i] * dt);
        q[i] = ref[i] + (q[i] - ref[i]) * f;
    });
}

void spectral_multiply_serial(std::vector<cplx>& qhat, const std::vector<cplx>& phase) {
    for (size_t i = 0; i < qhat.size(); ++i) qhat[i] *= phase[i];
}

void spectral_multiply_omp(std::vector<cplx>& qhat, const std::vector<cplx>& phase) {
    par::parallel_for((std::ptrdiff_t)qhat.size(), [&](std::ptrdiff_t i) { qhat[i] *= phase[i]; });
}

} // namespace kernels

cplx NlsSimulator::reference(double x, double t) const {
    // plane waves A e^{i phi} e^{-2iBx + i w t}, w = 2A^2 - 4B^2, B = -+1
    if (x < 0.0) {
        double w = 2.0 * p_.A1 * p_.A1 - 4.0;
        return p_.A1 * std::exp(I * (p_.phi + 2.0 * x + w * t));
    }
    double w = 2.0 * p_.A2 * p_.A2 - 4.0;
    return p_.A2 * std::exp(I * (-2.0 * x + w * t));
}

NlsSimulator::NlsSimulator(const BackgroundParams& p, const SimGrid& g) : p_(p), g_(g) {
    // the background phases e^{+-2ix} have period pi: a half-length that is a
    // multiple of pi/2 keeps them continuous across the periodic wrap
    g_.L = std::ceil(g.L / (0.5 * M_PI)) * 0.5 * M_PI;
    int N = g_.N;
    if (N & (N - 1)) throw std::domain_error("sim: N must be a power of two");
    dx_ = 2.0 * g_.L / N;
    if (2.0 * M_PI / 2.0 / dx_ < 16.0)
        throw std::domain_error("sim: fewer than 16 points per background oscillation");
    if (g_.dt > 0.1 * dx_ * dx_ / M_PI)
        throw std::domain_error("sim: dt exceeds the splitting stability budget");

    x_.resize(N);
    q_.resize(N);
    qhat_.resize(N);
    phase_.resize(N);
    sigma_.assign(N, 0.0);
    ref_.resize(N);
    for (int i = 0; i < N; ++i) x_[i] = -g_.L + i * dx_;

    // sponge profile: smooth ramp over the outer band
    double W = g_.sponge_width;
    for (int i = 0; i < N; ++i) {
        double d = g_.L - std::abs(x_[i]);  // distance to the edge
        if (d < W) {
            double u = 1.0 - d / W;
            sigma_[i] = g_.sponge_rate * u * u * (3.0 - 2.0 * u);
        }
    }

    // initial data: the step, optionally mollified, cross-faded to the
    // periodic wrap inside the sponge band
    for (int i = 0; i < N; ++i) {
        double x = x_[i];
        cplx left = p_.A1 * std::exp(I * (p_.phi + 2.0 * x));
        cplx right = p_.A2 * std::exp(I * (-2.0 * x));
        cplx v;
        if (g_.mollify > 0.0) {
            double s = 0.5 * (1.0 + std::tanh(x / g_.mollify));
            v = (1.0 - s) * left + s * right;
        } else {
            v = (x < 0.0) ? left : right;
        }
        double d = g_.L - std::abs(x);
        if (d < 0.5 * W) {
            // near the wrap blend toward the opposite side's wave
            double u = 1.0 - d / (0.5 * W);
            double blend = 0.5 * u;
            v = (1.0 - blend) * v + blend * ((x < 0.0) ? right : left);
        }
        q_[i] = v;
    }

    // dispersion phases e^{-i k^2 dt}
    for (int i = 0; i < N; ++i) {
        double kfreq = 2.0 * M_PI * ((i <= N / 2) ? i : i - N) / (2.0 * g_.L);
        phase_[i] = std::exp(-I * kfreq * kfreq * g_.dt) / double(N);
    }

    plan_fwd_ = fftw_plan_dft_1d(N, reinterpret_cast<fftw_complex*>(q_.data()),
                                 reinterpret_cast<fftw_complex*>(qhat_.data()), FFTW_FORWARD,
                                 FFTW_ESTIMATE);
    plan_bwd_ = fftw_plan_dft_1d(N, reinterpret_cast<fftw_complex*>(qhat_.data()),
                                 reinterpret_cast<fftw_complex*>(q_.data()), FFTW_BACKWARD,
                                 FFTW_ESTIMATE);
    refresh_reference();
}

NlsSimulator::~NlsSimulator() {
    fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
}

void NlsSimulator::refresh_reference() {
    int N = g_.N;
    double W = g_.sponge_width;
    for (int i = 0; i < N; ++i) {
        if (sigma_[i] == 0.0) continue;
        double x = x_[i];
        cplx v = reference(x, t_);
        double d = g_.L - std::abs(x);
        if (d < 0.5 * W) {
            double u = 1.0 - d / (0.5 * W);
            double blend = 0.5 * u;
            cplx other = (x < 0.0) ? reference(std::abs(x), t_) : reference(-std::abs(x), t_);
            v = (1.0 - blend) * v + blend * other;
        }
        ref_[i] = v;
    }
}

void NlsSimulator::step() {
    double half = g_.dt;  // phase coefficient: 2 |q|^2 * (dt/2)
    if (use_omp_kernels) kernels::nonlinear_phase_omp(q_, half);
    else kernels::nonlinear_phase_serial(q_, half);

    fftw_execute(static_cast<fftw_plan>(plan_fwd_));
    if (use_omp_kernels) kernels::spectral_multiply_omp(qhat_, phase_);
    else kernels::spectral_multiply_serial(qhat_, phase_);
    fftw_execute(static_cast<fftw_plan>(plan_bwd_));

    if (use_omp_kernels) kernels::nonlinear_phase_omp(q_, half);
    else kernels::nonlinear_phase_serial(q_, half);

    t_ += g_.dt;
    refresh_reference();
    if (use_omp_kernels) kernels::sponge_omp(q_, ref_, sigma_, g_.dt);
    else kernels::sponge_serial(q_, ref_, sigma_, g_.dt);

    double peak = max_abs();
    if (peak > 10.0 * std::max(p_.A1, p_.A2))
        throw std::runtime_error("sim: field blow-up guard tripped");
}

void NlsSimulator::run_to(double t_end) {
    while (t_ < t_end - 0.5 * g_.dt) step();
}

cplx NlsSimulator::q_at(double x) const {
    double u = (x + g_.L) / dx_;
    int i = (int)std::floor(u);
    double f = u - i;
    int N = g_.N;
    int i0 = ((i % N) + N) % N, i1 = (i0 + 1) % N;
    return (1.0 - f) * q_[i0] + f * q_[i1];
}

double NlsSimulator::max_abs() const {
    double m = 0.0;
    for (const cplx& v : q_) m = std::max(m, std::norm(v));
    return std::sqrt(m);
}

double NlsSimulator::mass(double x0, double x1) const {
    double s = 0.0;
    for (int i = 0; i < g_.N; ++i)
        if (x_[i] >= x0 && x_[i] <= x1) s += std::norm(q_[i]) * dx_;
    return s;
}

double NlsSimulator::sponge_residual() const {
    double m = 0.0;
    for (int i = 0; i < g_.N; ++i) {
        if (sigma_[i] < 0.9 * g_.sponge_rate) continue;  // deep sponge only
        m = std::max(m, std::abs(q_[i] - ref_[i]));
    }
    return m;
}

CompareReport compare_sim_asym(NlsSimulator& sim, const Asymptotics& asym, double xi_max,
                               const std::vector<double>& t_list, int nx) {
    CompareReport rep;
    rep.t_list = t_list;
    for (double t : t_list) {
        if (t < asym.wedge().T) rep.below_threshold_warning = true;
        sim.run_to(t);
        double m0 = 0, m01 = 0, l0 = 0, l01 = 0;
        int count = 0;
        for (int j = 0; j < nx; ++j) {
            double xi = xi_max * j / std::max(1, nx - 1);
            double x = xi * t;
            AsymptoticResult ar = asym.eval_xi(xi, t);
            CompareRow row;
            row.t = t;
            row.x = x;
            row.xi = xi;
            row.q_sim = sim.q_at(x);
            row.q0 = ar.q0;
            row.q01 = ar.q0 + (ar.q1_valid ? ar.q1 / std::sqrt(t) : cplx(0.0));
            row.err0 = std::abs(row.q_sim - row.q0);
            row.err01 = std::abs(row.q_sim - row.q01);
            rep.rows.push_back(row);
            m0 = std::max(m0, row.err0);
            m01 = std::max(m01, row.err01);
            l0 += row.err0 * row.err0;
            l01 += row.err01 * row.err01;
            ++count;
        }
        rep.max_err0.push_back(m0);
        rep.max_err01.push_back(m01);
        rep.l2_err0.push_back(std::sqrt(l0 / count));
        rep.l2_err01.push_back(std::sqrt(l01 / count));
    }
    if (rep.t_list.size() >= 2) {
        double lx0 = std::log(rep.t_list.front()), lx1 = std::log(rep.t_list.back());
        rep.fitted_exponent0 =
            std::log(rep.max_err0.back() / rep.max_err0.front()) / (lx1 - lx0);
        rep.q1_improves_at_last_t = rep.max_err01.back() <= rep.max_err0.back();
    }
    return rep;
}

} // namespace nlshock
