#include "bimode/model.hpp"

#include <cmath>
#include <stdexcept>

namespace bimode {

void SystemParams::validate() const {
    if (!std::isfinite(omega1) || !std::isfinite(omega2) ||
        !std::isfinite(v12.real()) || !std::isfinite(v12.imag())) {
        throw std::invalid_argument("SystemParams: non-finite parameter");
    }
    if (omega1 <= 0.0 || omega2 <= 0.0) {
        throw std::invalid_argument("SystemParams: mode frequencies must be positive");
    }
}

void InitialState::validate() const {
    if (!std::isfinite(alpha1.real()) || !std::isfinite(alpha1.imag()) ||
        !std::isfinite(alpha2.real()) || !std::isfinite(alpha2.imag()) ||
        !std::isfinite(gamma) || !std::isfinite(theta)) {
        throw std::invalid_argument("InitialState: non-finite parameter");
    }
    if (gamma < 0.0) {
        throw std::invalid_argument("InitialState: squeezing magnitude gamma must be >= 0");
    }
}

std::vector<double> TimeGrid::times() const {
    std::vector<double> out(static_cast<std::size_t>(n_points()));
    for (int k = 0; k < n_points(); ++k) out[static_cast<std::size_t>(k)] = time_at(k);
    return out;
}

void TimeGrid::validate() const {
    if (!std::isfinite(t0) || !std::isfinite(t)) {
        throw std::invalid_argument("TimeGrid: non-finite endpoint");
    }
    if (t < t0) throw std::invalid_argument("TimeGrid: end time before start time");
    if (n_steps < 1) throw std::invalid_argument("TimeGrid: n_steps must be >= 1");
}

NormalModes normal_mode_frequencies(const SystemParams& params) {
    const double mean = 0.5 * (params.omega1 + params.omega2);
    const double det = params.omega1 - params.omega2;
    const double v = std::abs(params.v12);
    const double split = 0.5 * std::sqrt(det * det + 4.0 * v * v);
    // atan2(2|v12|, w1-w2) lands in [0, pi] since the first argument is >= 0
    return NormalModes{mean + split, mean - split, std::atan2(2.0 * v, det)};
}

}  // namespace bimode
