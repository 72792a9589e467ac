// reduced_state.hpp — the analytical reduced density matrix of mode 1:
// coefficient set (alpha(t), beta(t), delta(t)) and its realization as a
// dense Hermitian matrix in a truncated number basis.

#pragma once

#include <Eigen/Dense>

#include "bimode/model.hpp"

namespace bimode {

// alpha_t : centroid, u(t,t0) alpha1 + v0(t,t0) alpha2
// beta_t  : squeezing coefficient, tanh(g) e^{i th} v0^2 / (1 - (1-w)^2 tanh^2 g)
// delta_t : mixedness weight,      tanh^2(g) (1-w) w   / (1 - (1-w)^2 tanh^2 g)
// w       : |v0(t,t0)|^2
struct ReducedStateCoefficients {
    Complex alpha_t{0.0, 0.0};
    Complex beta_t{0.0, 0.0};
    double delta_t{0.0};
    double w{0.0};
};

double mixing_delta(double gamma, double w);

ReducedStateCoefficients coefficients(const SystemParams& params, const InitialState& state,
                                      double t0, double t);

// Same computation from already-evaluated Green functions at the final time;
// beta comes through v2(t,t) and delta through v1(t,t), so a defect in either
// propagates into the state. Asserts the delta intermediate is real.
ReducedStateCoefficients coefficients_from_greens(Complex u_t, Complex v0_t,
                                                  Complex v1_tt, Complex v2_tt,
                                                  const InitialState& state);

// Dense density operator on |0>..|n_max>. Hermitian, unit trace, positive
// semidefinite up to roundoff. truncation_flagged is set when the top
// diagonal element of the unnormalized matrix exceeds 1e-10 of the trace
// (top_weight stores that ratio) — the signal that n_max is too small.
struct FockMatrix {
    int n_max{0};
    Eigen::MatrixXcd data;
    bool truncation_flagged{false};
    double top_weight{0.0};

    int dim() const { return n_max + 1; }
};

// Builds exp(A') [sum_n delta^n |n><n|] exp(A) with
//   A' = [(1-delta) alpha + beta conj(alpha)] a' - (beta/2) a'^2
// as a finite matrix polynomial (the truncated creation operator is
// nilpotent), then normalizes by the computed trace.
FockMatrix rho1_from_coefficients(const ReducedStateCoefficients& coeffs, int n_max);

FockMatrix rho1_fock(const SystemParams& params, const InitialState& state,
                     double t0, double t, int n_max);

// Tr(rho^2) of the realized matrix; 1 iff pure.
double analytic_purity(const ReducedStateCoefficients& coeffs, int n_max);

// Eigenvalue ratio of the realized state: the spectrum is geometric with
// ratio q = (2 nu - 1)/(2 nu + 1), nu = sqrt(1/4 + w (1-w) sinh^2 gamma),
// from the reduced covariance. q = 0 iff delta = 0.
double spectrum_ratio(double gamma, double w);

}  // namespace bimode
