// measures.hpp — scalar diagnostics: mixedness, purity, entropy, and the
// analytical-vs-oracle distance pipeline.

#pragma once

#include <utility>
#include <vector>

#include "bimode/model.hpp"
#include "bimode/reduced_state.hpp"

namespace bimode::fock {
class Propagator;
}

namespace bimode {

struct ComparisonReport {
    double time{0.0};
    double trace_distance{0.0};
    double fidelity{1.0};
    double purity_analytical{1.0};
    double purity_oracle{1.0};
    double entropy_oracle{0.0};    // natural log
    double delta_t{0.0};
    bool truncation_flagged{false};
};

// (1/2) sum |eig(a - b)|; requires matching n_max.
double trace_distance(const FockMatrix& a, const FockMatrix& b);

// Uhlmann fidelity (Tr sqrt(sqrt(a) b sqrt(a)))^2.
double fidelity(const FockMatrix& a, const FockMatrix& b);

// Tr(rho^2)
double purity(const FockMatrix& rho);

// -sum lambda ln lambda; eigenvalues in [-1e-10, 0) are clamped to zero,
// anything more negative is rejected as not a density matrix.
double von_neumann_entropy(const FockMatrix& rho);

// delta(tau_k) over the grid; values in [0, 1).
std::vector<std::pair<double, double>> delta_timeseries(const SystemParams& params,
                                                        const InitialState& state,
                                                        const TimeGrid& grid);

// Full comparison pipeline: one Hamiltonian eigendecomposition reused across
// the grid, analytical rho1 vs normalized oracle partial trace at each point.
// Throws TruncationError if the initial state exceeds the budget.
std::vector<ComparisonReport> compare_timeseries(const SystemParams& params,
                                                 const InitialState& state,
                                                 const TimeGrid& grid, int n_max,
                                                 double truncation_budget);

// Same pipeline with an already-decomposed propagator for params at n_max,
// for callers comparing several initial states against one Hamiltonian.
std::vector<ComparisonReport> compare_timeseries(const fock::Propagator& propagator,
                                                 const SystemParams& params,
                                                 const InitialState& state,
                                                 const TimeGrid& grid, int n_max,
                                                 double truncation_budget);

}  // namespace bimode
