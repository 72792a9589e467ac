// fock_oracle.hpp — brute-force verification path: exact unitary evolution of
// the full two-mode system in a truncated Fock basis, plus partial traces.
// Tensor indices are mode-1-major: index = m1 * (n_max + 1) + m2.

#pragma once

#include <Eigen/Dense>

#include "bimode/model.hpp"
#include "bimode/reduced_state.hpp"

namespace bimode::fock {

inline constexpr double kDefaultTruncationBudget = 1e-10;

// Dense single-mode lowering operator on |0>..|n_max>.
Eigen::MatrixXcd lowering_matrix(int n_max);

struct TwoModeOperators {
    int n_max{0};
    Eigen::MatrixXcd a1, a1_dag, a2, a2_dag, n1, n2;

    static TwoModeOperators build(int n_max);
    int dim() const { return (n_max + 1) * (n_max + 1); }
};

// H = w1 n1 + w2 n2 + v12 a1' a2 + conj(v12) a2' a1; Hermitian and block
// diagonal in the total photon number.
Eigen::MatrixXcd build_hamiltonian(const SystemParams& params, int n_max);

// Amplitudes e^{-|alpha|^2/2} alpha^m / sqrt(m!), truncated. The lost tail
// mass is checked against the budget; rejects with TruncationError otherwise.
Eigen::VectorXcd coherent_vector(Complex alpha, int n_max,
                                 double truncation_budget = kDefaultTruncationBudget);

// D(alpha) S(s) |0> with s = gamma e^{i theta}, built by exponentiating the
// truncated anti-Hermitian generators (same eigendecomposition path as
// evolve) in an enlarged working space, then projecting to n_max; the
// projected-away mass is the norm deficit checked against the budget.
Eigen::VectorXcd squeezed_coherent_vector(Complex alpha, double gamma, double theta,
                                          int n_max,
                                          double truncation_budget = kDefaultTruncationBudget);

// Product state coherent(alpha1) (x) squeezed_coherent(alpha2, s).
Eigen::VectorXcd initial_state_vector(const InitialState& state, int n_max,
                                      double truncation_budget = kDefaultTruncationBudget);

// Eigendecomposition of a Hermitian generator, computed once and reused for
// every requested time. Rejects non-Hermitian input.
class Propagator {
public:
    explicit Propagator(const Eigen::MatrixXcd& hamiltonian);

    // exp(-i H dt) psi0
    Eigen::VectorXcd evolve(const Eigen::VectorXcd& psi0, double dt) const;

    const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }

private:
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXcd eigenvectors_;
};

// One-shot convenience; prefer a Propagator when evolving to many times.
Eigen::VectorXcd evolve(const Eigen::MatrixXcd& hamiltonian,
                        const Eigen::VectorXcd& psi0, double dt);

// rho1[m,m'] = sum_k psi[m,k] conj(psi[m',k]); trace equals |psi|^2.
FockMatrix partial_trace_mode2(const Eigen::VectorXcd& psi, int n_max);

// Traces out mode 1 instead, returning mode 2's state.
FockMatrix partial_trace_mode1(const Eigen::VectorXcd& psi, int n_max);

// <psi| op |psi>
Complex expectation(const Eigen::MatrixXcd& op, const Eigen::VectorXcd& psi);

}  // namespace bimode::fock
