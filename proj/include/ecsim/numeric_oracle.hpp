#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ecsim/model.hpp"

namespace ecsim {

/// Single-excitation coupling matrix of the cavity + exciton chain:
/// omega on the diagonal, g_n on the cavity row/column.  Amplitudes evolve
/// as alpha(t) = exp(-i H t) alpha(0).
Eigen::MatrixXd coupling_matrix(const SystemConfig& cfg);

/// Propagates the initial coherent amplitudes (alpha, 0, ..., 0) with the
/// spectral decomposition of the coupling matrix.  Independent of the
/// closed-form solution; used to cross-check it.
AmplitudeSet evolve_amplitudes_numeric(const SystemConfig& cfg, double t);

/// Uniform discretization of a flat bath continuum attached to the cavity.
struct BathDiscretization {
    int k_modes = 0;
    double band_halfwidth = 0.0;      // W
    std::vector<double> frequencies;  // absolute mode frequencies
    std::vector<double> couplings;    // per-mode coupling lambda_k

    void validate() const;
};

/// K modes spread uniformly (midpoint grid) over [omega - W, omega + W] with
/// constant couplings lambda_k = sqrt(Gamma d_omega / (2 pi)), so that
/// sum_k lambda_k^2 = Gamma W / pi independent of K.
BathDiscretization flat_bath(const DecayConfig& dc, double band_halfwidth,
                             int k_modes);

/// Amplitude-transfer coefficients u, v extracted from a fixed-step RK4
/// integration of the cavity + collective-exciton + bath mode system, sampled
/// at the requested times.
struct BathTrajectory {
    std::vector<double> times;
    std::vector<Complex> u;
    std::vector<Complex> v;
    std::vector<double> total_norm;  // sum of squared amplitudes, u-run
};

/// Integrates the discretized system twice (unit cavity amplitude, then unit
/// collective-exciton amplitude) in the frame rotating at omega.  Times must
/// be nonnegative, ascending, and below the finite-bath recurrence horizon
/// K pi / (2 W); the step size is capped at 1/(50 max(|delta_n|, W)).
BathTrajectory evolve_with_bath_trajectory(const DecayConfig& dc,
                                           const BathDiscretization& bath,
                                           const std::vector<double>& times);

/// Single-time convenience wrapper returning (u, v).
std::pair<Complex, Complex> evolve_with_bath(const DecayConfig& dc,
                                             const BathDiscretization& bath,
                                             double t);

}  // namespace ecsim
