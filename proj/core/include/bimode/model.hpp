// model.hpp — physical parameters, initial-state descriptors, and time grids
// shared by the analytical engine and the Fock-space oracle. hbar = 1; all
// frequencies and couplings carry the same inverse-time unit.

#pragma once

#include <complex>
#include <vector>

namespace bimode {

using Complex = std::complex<double>;

// Two harmonic modes exchanging excitations through a beam-splitter coupling:
//   H = w1 a1'a1 + w2 a2'a2 + v12 a1'a2 + conj(v12) a2'a1
struct SystemParams {
    double omega1{1.0};
    double omega2{1.0};
    Complex v12{0.0, 0.0};

    // throws std::invalid_argument on non-finite or non-positive frequencies
    void validate() const;
};

// Separable initial state: mode 1 coherent |alpha1>, mode 2 squeezed coherent
// D(alpha2) S(s) |0> with s = gamma * e^{i theta}.
struct InitialState {
    Complex alpha1{0.0, 0.0};
    Complex alpha2{0.0, 0.0};
    double gamma{0.0};   // squeezing magnitude, >= 0 (0 = plain coherent state)
    double theta{0.0};   // squeezing phase

    Complex squeezing() const { return std::polar(gamma, theta); }
    void validate() const;
};

// Uniform grid tau_k = t0 + k*(t - t0)/n_steps, k = 0..n_steps.
struct TimeGrid {
    double t0{0.0};
    double t{1.0};
    int n_steps{1};

    int n_points() const { return n_steps + 1; }
    double dt() const { return (t - t0) / n_steps; }
    double time_at(int k) const { return t0 + k * dt(); }
    std::vector<double> times() const;
    void validate() const;
};

struct NormalModes {
    double omega_plus;
    double omega_minus;
    double phi;   // mixing angle, chosen in [0, pi] so sin(phi) >= 0
};

// Eigenfrequencies of the one-particle 2x2 block,
//   omega_pm = (w1+w2)/2 +- sqrt((w1-w2)^2 + 4|v12|^2)/2,
// and phi = atan2(2|v12|, w1 - w2); the degenerate w1 == w2 case gives
// phi = pi/2 (continuity limit).
NormalModes normal_mode_frequencies(const SystemParams& params);

}  // namespace bimode
