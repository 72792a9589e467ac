#include "bimode/greens.hpp"

#include <cmath>
#include <stdexcept>

namespace bimode {

namespace {

constexpr Complex kI{0.0, 1.0};

Complex cexp(double phase) { return std::exp(Complex{0.0, phase}); }

double parameter_scale(const SystemParams& p) {
    return std::max({p.omega1, p.omega2, std::abs(p.v12)});
}

}  // namespace

Complex CorrelationKernels::g(double tau, double tau_p) const {
    const double v2 = std::norm(params.v12);
    return v2 * cexp(-params.omega2 * (tau - tau_p));
}

Complex CorrelationKernels::g_tilde(double tau, double tau_p) const {
    const double sh = std::sinh(gamma);
    return sh * sh * g(tau, tau_p);
}

Complex CorrelationKernels::g_bar(double tau, double tau_p) const {
    const Complex pref = 0.25 * std::sinh(2.0 * gamma) * cexp(theta + 2.0 * params.omega2 * t0);
    return pref * params.v12 * params.v12 * cexp(-params.omega2 * (tau + tau_p));
}

Complex u_of(const SystemParams& params, double t0, double tau) {
    const NormalModes nm = normal_mode_frequencies(params);
    const double T = tau - t0;
    const double c = std::cos(0.5 * nm.phi);
    const double s = std::sin(0.5 * nm.phi);
    return c * c * cexp(-nm.omega_plus * T) + s * s * cexp(-nm.omega_minus * T);
}

Complex v0_of(const SystemParams& params, double t0, double tau) {
    const NormalModes nm = normal_mode_frequencies(params);
    const double T = tau - t0;
    const double w2 = params.omega2;
    const double tol = 1e-9 * parameter_scale(params);

    // int_0^T e^{-i w T} ... each normal-mode branch integrates to
    // (e^{-i w T} - e^{-i w2 T}) / (i (w2 - w)), with the resonant limit
    // T e^{-i w2 T} when w ~ w2.
    auto branch = [&](double w) -> Complex {
        if (std::abs(w - w2) < tol) return T * cexp(-w2 * T);
        return (cexp(-w * T) - cexp(-w2 * T)) / (kI * (w2 - w));
    };

    const double c = std::cos(0.5 * nm.phi);
    const double s = std::sin(0.5 * nm.phi);
    return -kI * params.v12 * (c * c * branch(nm.omega_plus) + s * s * branch(nm.omega_minus));
}

Complex v1_of(const SystemParams& params, const InitialState& state,
              double t0, double tau, double t) {
    const double sh = std::sinh(state.gamma);
    return sh * sh * v0_of(params, t0, tau) * std::conj(v0_of(params, t0, t));
}

Complex v2_of(const SystemParams& params, const InitialState& state,
              double t0, double tau, double t) {
    const Complex pref = 0.25 * std::sinh(2.0 * state.gamma) * cexp(state.theta);
    return pref * v0_of(params, t0, tau) * v0_of(params, t0, t);
}

Eigen::Matrix2cd one_particle_propagator(const SystemParams& params, double dt) {
    SystemParams swapped{params.omega2, params.omega1, std::conj(params.v12)};
    Eigen::Matrix2cd m;
    m(0, 0) = u_of(params, 0.0, dt);
    m(0, 1) = v0_of(params, 0.0, dt);
    m(1, 0) = v0_of(swapped, 0.0, dt);
    m(1, 1) = u_of(swapped, 0.0, dt);
    return m;
}

GreensSolution solve_greens(const SystemParams& params, const InitialState& state,
                            const TimeGrid& grid) {
    params.validate();
    state.validate();
    grid.validate();

    const int n = grid.n_points();
    GreensSolution sol{grid, {}, {}, {}, {}};
    sol.u.resize(n);
    sol.v0.resize(n);
    sol.v1.resize(n);
    sol.v2.resize(n);

    const Complex v0_end = v0_of(params, grid.t0, grid.t);
    const double sh2 = std::sinh(state.gamma) * std::sinh(state.gamma);
    const Complex pref2 = 0.25 * std::sinh(2.0 * state.gamma) * cexp(state.theta);
    for (int k = 0; k < n; ++k) {
        const double tau = grid.time_at(k);
        sol.u[k] = u_of(params, grid.t0, tau);
        sol.v0[k] = v0_of(params, grid.t0, tau);
        sol.v1[k] = sh2 * sol.v0[k] * std::conj(v0_end);
        sol.v2[k] = pref2 * sol.v0[k] * v0_end;
    }
    return sol;
}

namespace {

// Shared residual machinery. The memory kernel factorizes,
//   int_{t0}^{tau_k} g(tau_k, s) f(s) ds
//     = |v12|^2 e^{-i w2 tau_k} * trapezoid_k[ e^{i w2 s} f(s) ],
// so the running trapezoid prefix gives all memory integrals in O(n).
double residual_of(const SystemParams& params, const TimeGrid& grid,
                   const std::vector<Complex>& f,
                   const std::vector<Complex>& rhs) {
    const int n = grid.n_steps;
    const double h = grid.dt();
    const double v2 = std::norm(params.v12);

    std::vector<Complex> phased(f.size());
    for (int k = 0; k <= n; ++k) {
        phased[k] = cexp(params.omega2 * grid.time_at(k)) * f[k];
    }

    double worst = 0.0;
    Complex prefix{0.0, 0.0};
    for (int k = 1; k < n; ++k) {
        prefix += 0.5 * h * (phased[k - 1] + phased[k]);
        const Complex memory = v2 * cexp(-params.omega2 * grid.time_at(k)) * prefix;
        const Complex deriv = (f[k + 1] - f[k - 1]) / (2.0 * h);
        const Complex res = deriv + kI * params.omega1 * f[k] + memory - rhs[k];
        worst = std::max(worst, std::abs(res));
    }
    return worst;
}

}  // namespace

double residual_u(const SystemParams& params, const TimeGrid& grid) {
    params.validate();
    grid.validate();
    if (grid.n_points() < 3) throw std::invalid_argument("residual_u: grid too coarse (need >= 3 points)");

    std::vector<Complex> u(grid.n_points());
    for (int k = 0; k < grid.n_points(); ++k) u[k] = u_of(params, grid.t0, grid.time_at(k));
    std::vector<Complex> rhs(grid.n_points(), Complex{0.0, 0.0});
    return residual_of(params, grid, u, rhs);
}

double residual_v0(const SystemParams& params, const TimeGrid& grid) {
    params.validate();
    grid.validate();
    if (grid.n_points() < 3) throw std::invalid_argument("residual_v0: grid too coarse (need >= 3 points)");

    std::vector<Complex> v0(grid.n_points()), rhs(grid.n_points());
    for (int k = 0; k < grid.n_points(); ++k) {
        const double tau = grid.time_at(k);
        v0[k] = v0_of(params, grid.t0, tau);
        rhs[k] = -kI * params.v12 * cexp(-params.omega2 * (tau - grid.t0));
    }
    return residual_of(params, grid, v0, rhs);
}

double future_influence(const SystemParams& params, const InitialState& state,
                        const TimeGrid& grid) {
    const GreensSolution sol = solve_greens(params, state, grid);
    double worst = 0.0;
    for (int k = 0; k < grid.n_points(); ++k) {
        worst = std::max(worst, std::abs(sol.v1[k]) + std::abs(sol.v2[k]));
    }
    return worst;
}

}  // namespace bimode
