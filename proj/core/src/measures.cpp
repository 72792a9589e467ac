#include "bimode/measures.hpp"

#include <cmath>
#include <stdexcept>

#include "bimode/fock_oracle.hpp"
#include "bimode/greens.hpp"

namespace bimode {

namespace {

void require_same_dim(const FockMatrix& a, const FockMatrix& b, const char* who) {
    if (a.n_max != b.n_max) {
        throw std::invalid_argument(std::string(who) + ": truncation mismatch");
    }
}

// PSD square root via eigendecomposition, clamping small negative eigenvalues.
Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    Eigen::VectorXd vals = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return solver.eigenvectors() * vals.asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace

double trace_distance(const FockMatrix& a, const FockMatrix& b) {
    require_same_dim(a, b, "trace_distance");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a.data - b.data,
                                                           Eigen::EigenvaluesOnly);
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

double fidelity(const FockMatrix& a, const FockMatrix& b) {
    require_same_dim(a, b, "fidelity");
    const Eigen::MatrixXcd root = psd_sqrt(a.data);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(root * b.data * root,
                                                           Eigen::EigenvaluesOnly);
    const double sum = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
    return sum * sum;
}

double purity(const FockMatrix& rho) { return rho.data.squaredNorm(); }

double von_neumann_entropy(const FockMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.data, Eigen::EigenvaluesOnly);
    double entropy = 0.0;
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
        const double lambda = solver.eigenvalues()(k);
        if (lambda < -1e-10) {
            throw std::invalid_argument("von_neumann_entropy: input is not a density matrix");
        }
        if (lambda > 0.0) entropy -= lambda * std::log(lambda);
    }
    return entropy;
}

std::vector<std::pair<double, double>> delta_timeseries(const SystemParams& params,
                                                        const InitialState& state,
                                                        const TimeGrid& grid) {
    params.validate();
    state.validate();
    grid.validate();
    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<std::size_t>(grid.n_points()));
    for (int k = 0; k < grid.n_points(); ++k) {
        const double tau = grid.time_at(k);
        const double w = std::clamp(std::norm(v0_of(params, grid.t0, tau)), 0.0, 1.0);
        out.emplace_back(tau, mixing_delta(state.gamma, w));
    }
    return out;
}

std::vector<ComparisonReport> compare_timeseries(const SystemParams& params,
                                                 const InitialState& state,
                                                 const TimeGrid& grid, int n_max,
                                                 double truncation_budget) {
    const fock::Propagator prop(fock::build_hamiltonian(params, n_max));
    return compare_timeseries(prop, params, state, grid, n_max, truncation_budget);
}

std::vector<ComparisonReport> compare_timeseries(const fock::Propagator& prop,
                                                 const SystemParams& params,
                                                 const InitialState& state,
                                                 const TimeGrid& grid, int n_max,
                                                 double truncation_budget) {
    params.validate();
    state.validate();
    grid.validate();

    const Eigen::VectorXcd psi0 = fock::initial_state_vector(state, n_max, truncation_budget);

    std::vector<ComparisonReport> reports;
    reports.reserve(static_cast<std::size_t>(grid.n_points()));
    for (int k = 0; k < grid.n_points(); ++k) {
        const double tau = grid.time_at(k);

        const ReducedStateCoefficients coeffs = coefficients(params, state, grid.t0, tau);
        const FockMatrix analytical = rho1_from_coefficients(coeffs, n_max);

        const Eigen::VectorXcd psi = prop.evolve(psi0, tau - grid.t0);
        FockMatrix oracle = fock::partial_trace_mode2(psi, n_max);
        oracle.data /= oracle.data.trace().real();

        ComparisonReport r;
        r.time = tau;
        r.trace_distance = trace_distance(analytical, oracle);
        r.fidelity = fidelity(analytical, oracle);
        r.purity_analytical = purity(analytical);
        r.purity_oracle = purity(oracle);
        r.entropy_oracle = von_neumann_entropy(oracle);
        r.delta_t = coeffs.delta_t;
        r.truncation_flagged = analytical.truncation_flagged;
        reports.push_back(r);
    }
    return reports;
}

}  // namespace bimode
