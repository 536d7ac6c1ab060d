#ifndef NLSHOCK_NLSSIM_HPP
#define NLSHOCK_NLSSIM_HPP

#include <vector>

#include "nlshock/asymptotics.hpp"

namespace nlshock {

// Direct integration of i q_t + q_xx + 2|q|^2 q = 0 with the step data and
// plane-wave backgrounds: Strang splitting between the spectral dispersion
// and the pointwise cubic phase, with sponge layers relaxing the field to
// the exact plane waves near the edges.
struct SimGrid {
    double L{400.0};        // half-length; rounded up to a multiple of pi/2
    int N{1 << 14};         // spatial points, power of two
    double dt{2e-4};
    double sponge_width{60.0};
    double sponge_rate{40.0};
    double mollify{0.0};    // optional step smoothing width (0: sharp step)
};

namespace kernels {
// pointwise cubic phase rotation q <- exp(i dt |q|^2 * 2) q... the factor
// carried by the caller; serial and OpenMP variants kept in lockstep
void nonlinear_phase_serial(std::vector<cplx>& q, double coeff);
void nonlinear_phase_omp(std::vector<cplx>& q, double coeff);
// sponge relaxation toward a reference field with profile sigma
void sponge_serial(std::vector<cplx>& q, const std::vector<cplx>& ref,
                   const std::vector<double>& sigma, double dt);
void sponge_omp(std::vector<cplx>& q, const std::vector<cplx>& ref,
                const std::vector<double>& sigma, double dt);
// frequency-space dispersion multiplier q_hat <- phase[i] * q_hat
void spectral_multiply_serial(std::vector<cplx>& qhat, const std::vector<cplx>& phase);
void spectral_multiply_omp(std::vector<cplx>& qhat, const std::vector<cplx>& phase);
} // namespace kernels

class NlsSimulator {
public:
    NlsSimulator(const BackgroundParams& p, const SimGrid& g);
    ~NlsSimulator();
    NlsSimulator(const NlsSimulator&) = delete;
    NlsSimulator& operator=(const NlsSimulator&) = delete;

    void step();                 // one Strang step
    void run_to(double t_end);   // steps until just past t_end
    double time() const { return t_; }
    double dx() const { return dx_; }
    const std::vector<double>& x() const { return x_; }
    const std::vector<cplx>& q() const { return q_; }
    cplx q_at(double x) const;   // linear interpolation
    double max_abs() const;
    // mass density integral over a window (conservation diagnostic)
    double mass(double x0, double x1) const;
    // largest |q - ref| inside the sponge (contamination monitor)
    double sponge_residual() const;
    bool use_omp_kernels{true};

    cplx reference(double x, double t) const;  // exact plane waves by side

private:
    BackgroundParams p_;
    SimGrid g_;
    double t_{0.0}, dx_;
    std::vector<double> x_, sigma_;
    std::vector<cplx> q_, qhat_, phase_, ref_;
    void* plan_fwd_;
    void* plan_bwd_;
    void refresh_reference();
};

struct CompareRow {
    double t, x, xi;
    cplx q_sim, q0, q01;
    double err0, err01;
};

struct CompareReport {
    std::vector<CompareRow> rows;
    std::vector<double> t_list;
    std::vector<double> max_err0, max_err01, l2_err0, l2_err01;
    double fitted_exponent0{0.0};  // log-log slope of max|q_sim - Q0| vs t
    bool q1_improves_at_last_t{false};
    bool below_threshold_warning{false};
};

// Samples the simulation at the listed times over x in [0, xi_max * t] and
// compares with the asymptotic values
CompareReport compare_sim_asym(NlsSimulator& sim, const Asymptotics& asym, double xi_max,
                               const std::vector<double>& t_list, int nx = 7);

} // namespace nlshock

#endif
