// greens.hpp — closed-form nonequilibrium Green functions of the coupled
// two-mode problem, the two-time correlation kernels they derive from, and
// residual checks of the integro-differential equations they satisfy.
//
// u(tau,t0)   amplitude retained by mode 1
// v0(tau,t0)  transfer amplitude from mode 2
// v1(tau,t), v2(tau,t)  squeezing-induced terms mixing the forward and
//                       backward paths; both vanish iff gamma = 0, which is
//                       the causality-preserving (classical) case.

#pragma once

#include <Eigen/Dense>

#include "bimode/model.hpp"

namespace bimode {

// Exponential memory kernels generated by eliminating mode 2:
//   g(t,t')    = |v12|^2 e^{-i w2 (t-t')}
//   g_tilde    = sinh^2(gamma) * g
//   g_bar(t,t')= sinh(2 gamma)/4 * e^{i(theta + 2 w2 t0)} * v12^2 e^{-i w2 (t+t')}
struct CorrelationKernels {
    SystemParams params;
    double gamma{0.0};
    double theta{0.0};
    double t0{0.0};

    CorrelationKernels(const SystemParams& p, const InitialState& state, double start)
        : params(p), gamma(state.gamma), theta(state.theta), t0(start) {}

    Complex g(double tau, double tau_p) const;
    Complex g_tilde(double tau, double tau_p) const;
    Complex g_bar(double tau, double tau_p) const;
};

Complex u_of(const SystemParams& params, double t0, double tau);

// Closed form of -i v12 * int_{t0}^{tau} u(tau,s) e^{-i w2 (s-t0)} ds; each
// normal-mode term is an exponential quotient, switched to its analytic limit
// (tau-t0) e^{-i w2 (tau-t0)} when |omega_pm - omega2| < 1e-9 * parameter scale.
Complex v0_of(const SystemParams& params, double t0, double tau);

Complex v1_of(const SystemParams& params, const InitialState& state,
              double t0, double tau, double t);
Complex v2_of(const SystemParams& params, const InitialState& state,
              double t0, double tau, double t);

// 2x2 one-particle propagator [[u, v0], [v0~, u~]] for a time step dt; the
// second row is the first with the mode roles swapped (v12 -> conj(v12)).
Eigen::Matrix2cd one_particle_propagator(const SystemParams& params, double dt);

struct GreensSolution {
    TimeGrid grid;
    std::vector<Complex> u;    // u(tau_k, t0)
    std::vector<Complex> v0;   // v0(tau_k, t0)
    std::vector<Complex> v1;   // v1(tau_k, t) at the grid's final time t
    std::vector<Complex> v2;   // v2(tau_k, t)
};

GreensSolution solve_greens(const SystemParams& params, const InitialState& state,
                            const TimeGrid& grid);

// Max over interior grid points of |du/dtau + i w1 u + int_{t0}^{tau} g u| with
// centered differences and trapezoid quadrature; converges to zero at second
// order in the grid spacing when u_of solves its equation. Grids with fewer
// than 3 points are rejected.
double residual_u(const SystemParams& params, const TimeGrid& grid);

// Same for the driven equation, RHS = -i v12 e^{-i w2 (tau-t0)}.
double residual_v0(const SystemParams& params, const TimeGrid& grid);

// Scalar causality-breaking detector: max over the grid of |v1| + |v2|.
// Exactly zero iff gamma = 0.
double future_influence(const SystemParams& params, const InitialState& state,
                        const TimeGrid& grid);

}  // namespace bimode
