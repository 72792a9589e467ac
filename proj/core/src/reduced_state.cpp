#include "bimode/reduced_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bimode/greens.hpp"

namespace bimode {

namespace {

constexpr double kTopWeightThreshold = 1e-10;

Eigen::MatrixXcd creation_matrix(int n_max) {
    Eigen::MatrixXcd ad = Eigen::MatrixXcd::Zero(n_max + 1, n_max + 1);
    for (int m = 0; m < n_max; ++m) ad(m + 1, m) = std::sqrt(static_cast<double>(m + 1));
    return ad;
}

}  // namespace

double mixing_delta(double gamma, double w) {
    const double th2 = std::tanh(gamma) * std::tanh(gamma);
    const double denom = 1.0 - (1.0 - w) * (1.0 - w) * th2;
    return th2 * (1.0 - w) * w / denom;
}

ReducedStateCoefficients coefficients_from_greens(Complex u_t, Complex v0_t,
                                                  Complex v1_tt, Complex v2_tt,
                                                  const InitialState& state) {
    ReducedStateCoefficients c;
    c.alpha_t = u_t * state.alpha1 + v0_t * state.alpha2;
    c.w = std::clamp(std::norm(v0_t), 0.0, 1.0);

    const double ch2 = std::cosh(state.gamma) * std::cosh(state.gamma);
    const double th2 = std::tanh(state.gamma) * std::tanh(state.gamma);
    const double denom = 1.0 - (1.0 - c.w) * (1.0 - c.w) * th2;  // >= sech^2(gamma) > 0

    // tanh(g) e^{i th} v0^2 = 2 v2(t,t) / cosh^2(g)
    c.beta_t = 2.0 * v2_tt / (ch2 * denom);

    // tanh^2(g) w = v1(t,t) / cosh^2(g); v1(t,t) is real by construction
    const Complex delta_c = v1_tt * (1.0 - c.w) / (ch2 * denom);
    if (std::abs(delta_c.imag()) >= 1e-12) {
        throw std::runtime_error("coefficients_from_greens: delta acquired an imaginary part");
    }
    c.delta_t = std::max(delta_c.real(), 0.0);
    return c;
}

ReducedStateCoefficients coefficients(const SystemParams& params, const InitialState& state,
                                      double t0, double t) {
    params.validate();
    state.validate();
    if (t < t0) throw std::invalid_argument("coefficients: t must be >= t0");
    return coefficients_from_greens(u_of(params, t0, t), v0_of(params, t0, t),
                                    v1_of(params, state, t0, t, t),
                                    v2_of(params, state, t0, t, t), state);
}

FockMatrix rho1_from_coefficients(const ReducedStateCoefficients& coeffs, int n_max) {
    if (n_max < 1) throw std::invalid_argument("rho1_from_coefficients: n_max must be >= 1");

    const int dim = n_max + 1;
    const Eigen::MatrixXcd ad = creation_matrix(n_max);
    const Complex lin = (1.0 - coeffs.delta_t) * coeffs.alpha_t +
                        coeffs.beta_t * std::conj(coeffs.alpha_t);
    const Eigen::MatrixXcd gen = lin * ad - 0.5 * coeffs.beta_t * (ad * ad).eval();

    // gen is strictly lower triangular, so the exponential series terminates
    // after at most dim terms.
    Eigen::MatrixXcd expA = Eigen::MatrixXcd::Identity(dim, dim);
    Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(dim, dim);
    for (int k = 1; k <= n_max + 1; ++k) {
        term = (term * gen).eval() / static_cast<double>(k);
        if (term.norm() == 0.0) break;
        expA += term;
    }

    Eigen::VectorXcd thermal(dim);
    double dn = 1.0;
    for (int n = 0; n < dim; ++n) {
        thermal(n) = dn;
        dn *= coeffs.delta_t;
    }

    Eigen::MatrixXcd rho = expA * thermal.asDiagonal() * expA.adjoint();
    const double trace = rho.trace().real();
    if (!(trace > 0.0) || !std::isfinite(trace)) {
        throw std::runtime_error("rho1_from_coefficients: non-positive trace");
    }

    FockMatrix out;
    out.n_max = n_max;
    out.top_weight = std::abs(rho(n_max, n_max)) / trace;
    out.truncation_flagged = out.top_weight > kTopWeightThreshold;
    rho /= trace;
    out.data = 0.5 * (rho + rho.adjoint());
    return out;
}

FockMatrix rho1_fock(const SystemParams& params, const InitialState& state,
                     double t0, double t, int n_max) {
    return rho1_from_coefficients(coefficients(params, state, t0, t), n_max);
}

double analytic_purity(const ReducedStateCoefficients& coeffs, int n_max) {
    return rho1_from_coefficients(coeffs, n_max).data.squaredNorm();
}

double spectrum_ratio(double gamma, double w) {
    const double sh = std::sinh(gamma);
    const double nu = std::sqrt(0.25 + w * (1.0 - w) * sh * sh);
    return (2.0 * nu - 1.0) / (2.0 * nu + 1.0);
}

}  // namespace bimode
