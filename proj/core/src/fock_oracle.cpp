#include "bimode/fock_oracle.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

#include "bimode/errors.hpp"

namespace bimode::fock {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_valid_truncation(int n_max) {
    if (n_max < 1) throw std::invalid_argument("fock: n_max must be >= 1");
}

[[noreturn]] void reject_truncation(const char* what, double deficit, double budget) {
    std::ostringstream msg;
    msg << what << ": truncation budget exceeded (lost norm " << deficit
        << " > " << budget << "); increase n_max";
    throw TruncationError(msg.str());
}

}  // namespace

Eigen::MatrixXcd lowering_matrix(int n_max) {
    require_valid_truncation(n_max);
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n_max + 1, n_max + 1);
    for (int m = 1; m <= n_max; ++m) a(m - 1, m) = std::sqrt(static_cast<double>(m));
    return a;
}

TwoModeOperators TwoModeOperators::build(int n_max) {
    require_valid_truncation(n_max);
    const Eigen::MatrixXcd a = lowering_matrix(n_max);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n_max + 1, n_max + 1);

    TwoModeOperators ops;
    ops.n_max = n_max;
    ops.a1 = Eigen::kroneckerProduct(a, id);
    ops.a2 = Eigen::kroneckerProduct(id, a);
    ops.a1_dag = ops.a1.adjoint();
    ops.a2_dag = ops.a2.adjoint();
    ops.n1 = ops.a1_dag * ops.a1;
    ops.n2 = ops.a2_dag * ops.a2;
    return ops;
}

Eigen::MatrixXcd build_hamiltonian(const SystemParams& params, int n_max) {
    params.validate();
    const TwoModeOperators ops = TwoModeOperators::build(n_max);
    Eigen::MatrixXcd h = params.omega1 * ops.n1 + params.omega2 * ops.n2 +
                         params.v12 * (ops.a1_dag * ops.a2) +
                         std::conj(params.v12) * (ops.a2_dag * ops.a1);
    return 0.5 * (h + h.adjoint().eval());
}

Eigen::VectorXcd coherent_vector(Complex alpha, int n_max, double truncation_budget) {
    require_valid_truncation(n_max);
    Eigen::VectorXcd c(n_max + 1);
    c(0) = std::exp(-0.5 * std::norm(alpha));
    for (int m = 0; m < n_max; ++m) c(m + 1) = c(m) * alpha / std::sqrt(static_cast<double>(m + 1));
    const double deficit = 1.0 - c.squaredNorm();
    if (deficit > truncation_budget) reject_truncation("coherent_vector", deficit, truncation_budget);
    return c;
}

Eigen::VectorXcd squeezed_coherent_vector(Complex alpha, double gamma, double theta,
                                          int n_max, double truncation_budget) {
    require_valid_truncation(n_max);
    if (gamma < 0.0) throw std::invalid_argument("squeezed_coherent_vector: gamma must be >= 0");
    if (gamma == 0.0) return coherent_vector(alpha, n_max, truncation_budget);

    // Enlarged working space so the projection to n_max has a measurable tail.
    const int n_work = 2 * n_max + 32;
    const Eigen::MatrixXcd a = lowering_matrix(n_work);
    const Eigen::MatrixXcd ad = a.adjoint();
    const Complex s = std::polar(gamma, theta);

    Eigen::VectorXcd vac = Eigen::VectorXcd::Zero(n_work + 1);
    vac(0) = 1.0;

    // exp(G) = exp(-i (iG)) for anti-Hermitian G; reuse the Hermitian
    // propagator for both the squeeze and displacement exponentials.
    const Eigen::MatrixXcd squeeze_gen = 0.5 * (std::conj(s) * (a * a) - s * (ad * ad));
    const Eigen::MatrixXcd disp_gen = alpha * ad - std::conj(alpha) * a;
    Eigen::VectorXcd psi = Propagator(kI * squeeze_gen).evolve(vac, 1.0);
    psi = Propagator(kI * disp_gen).evolve(psi, 1.0);

    const Eigen::VectorXcd projected = psi.head(n_max + 1);
    const double deficit = psi.squaredNorm() - projected.squaredNorm();
    if (deficit > truncation_budget) {
        reject_truncation("squeezed_coherent_vector", deficit, truncation_budget);
    }
    return projected;
}

Eigen::VectorXcd initial_state_vector(const InitialState& state, int n_max,
                                      double truncation_budget) {
    state.validate();
    const Eigen::VectorXcd mode1 = coherent_vector(state.alpha1, n_max, truncation_budget);
    const Eigen::VectorXcd mode2 =
        squeezed_coherent_vector(state.alpha2, state.gamma, state.theta, n_max, truncation_budget);
    Eigen::VectorXcd psi = Eigen::kroneckerProduct(mode1, mode2);
    const double deficit = 1.0 - psi.squaredNorm();
    if (deficit > truncation_budget) reject_truncation("initial_state_vector", deficit, truncation_budget);
    return psi;
}

Propagator::Propagator(const Eigen::MatrixXcd& hamiltonian) {
    if (hamiltonian.rows() != hamiltonian.cols() || hamiltonian.rows() == 0) {
        throw std::invalid_argument("Propagator: generator must be square and nonempty");
    }
    const double scale = std::max(1.0, hamiltonian.cwiseAbs().maxCoeff());
    const double asym = (hamiltonian - hamiltonian.adjoint()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * scale) {
        throw std::invalid_argument("Propagator: generator is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hamiltonian);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("Propagator: eigendecomposition failed");
    }
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
}

Eigen::VectorXcd Propagator::evolve(const Eigen::VectorXcd& psi0, double dt) const {
    if (psi0.size() != eigenvalues_.size()) {
        throw std::invalid_argument("Propagator::evolve: state dimension mismatch");
    }
    Eigen::VectorXcd modal = eigenvectors_.adjoint() * psi0;
    for (Eigen::Index k = 0; k < modal.size(); ++k) {
        modal(k) *= std::exp(Complex{0.0, -eigenvalues_(k) * dt});
    }
    return eigenvectors_ * modal;
}

Eigen::VectorXcd evolve(const Eigen::MatrixXcd& hamiltonian,
                        const Eigen::VectorXcd& psi0, double dt) {
    return Propagator(hamiltonian).evolve(psi0, dt);
}

namespace {

FockMatrix density_from_product(const Eigen::MatrixXcd& amplitudes, int n_max) {
    Eigen::MatrixXcd rho = amplitudes * amplitudes.adjoint();
    FockMatrix out;
    out.n_max = n_max;
    out.top_weight = 0.0;
    const double trace = rho.trace().real();
    if (trace > 0.0) out.top_weight = std::abs(rho(n_max, n_max)) / trace;
    out.data = 0.5 * (rho + rho.adjoint().eval());
    return out;
}

Eigen::MatrixXcd as_mode1_major(const Eigen::VectorXcd& psi, int n_max) {
    require_valid_truncation(n_max);
    const int dim = n_max + 1;
    if (psi.size() != static_cast<Eigen::Index>(dim) * dim) {
        throw std::invalid_argument("partial_trace: state length is not (n_max+1)^2");
    }
    using RowMajorMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    return Eigen::Map<const RowMajorMat>(psi.data(), dim, dim);
}

}  // namespace

FockMatrix partial_trace_mode2(const Eigen::VectorXcd& psi, int n_max) {
    return density_from_product(as_mode1_major(psi, n_max), n_max);
}

FockMatrix partial_trace_mode1(const Eigen::VectorXcd& psi, int n_max) {
    return density_from_product(as_mode1_major(psi, n_max).transpose(), n_max);
}

Complex expectation(const Eigen::MatrixXcd& op, const Eigen::VectorXcd& psi) {
    if (op.cols() != psi.size()) throw std::invalid_argument("expectation: dimension mismatch");
    return psi.dot(op * psi);
}

}  // namespace bimode::fock
