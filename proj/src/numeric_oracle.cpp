#include "ecsim/numeric_oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ecsim {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

// State layout for the bath integration: y(0) = cavity, y(1) = collective
// exciton mode, y(2..) = bath modes, all in the frame rotating at omega.
struct BathSystem {
    double g_collective;            // g sqrt(N)
    std::vector<double> detunings;  // omega_k - omega
    std::vector<double> couplings;  // lambda_k sqrt(N)

    void deriv(const Eigen::VectorXcd& y, Eigen::VectorXcd& dy) const {
        const size_t k_modes = detunings.size();
        Complex bath_sum{0.0, 0.0};
        for (size_t k = 0; k < k_modes; ++k)
            bath_sum += couplings[k] * y(static_cast<Eigen::Index>(k) + 2);
        dy(0) = kI * g_collective * y(1);
        dy(1) = kI * (g_collective * y(0) + bath_sum);
        for (size_t k = 0; k < k_modes; ++k) {
            const Eigen::Index idx = static_cast<Eigen::Index>(k) + 2;
            dy(idx) = kI * (detunings[k] * y(idx) + couplings[k] * y(1));
        }
    }
};

// Classic RK4 with a fixed number of equal substeps across [0, span].
void rk4_advance(const BathSystem& sys, Eigen::VectorXcd& y, double span,
                 int steps) {
    const double h = span / steps;
    const Eigen::Index dim = y.size();
    Eigen::VectorXcd k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);
    for (int s = 0; s < steps; ++s) {
        sys.deriv(y, k1);
        tmp = y + 0.5 * h * k1;
        sys.deriv(tmp, k2);
        tmp = y + 0.5 * h * k2;
        sys.deriv(tmp, k3);
        tmp = y + h * k3;
        sys.deriv(tmp, k4);
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
}

}  // namespace

Eigen::MatrixXd coupling_matrix(const SystemConfig& cfg) {
    cfg.validate();
    const int dim = cfg.n_excitons + 1;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) h(k, k) = cfg.omega;
    for (int n = 0; n < cfg.n_excitons; ++n) {
        h(0, n + 1) = cfg.couplings[static_cast<size_t>(n)];
        h(n + 1, 0) = cfg.couplings[static_cast<size_t>(n)];
    }
    return h;
}

AmplitudeSet evolve_amplitudes_numeric(const SystemConfig& cfg, double t) {
    const Eigen::MatrixXd h = coupling_matrix(cfg);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("evolve_amplitudes_numeric: eigendecomposition failed");
    const Eigen::VectorXd& vals = es.eigenvalues();
    const Eigen::MatrixXd& vecs = es.eigenvectors();
    Eigen::VectorXcd phases(vals.size());
    for (Eigen::Index k = 0; k < vals.size(); ++k)
        phases(k) = std::exp(-kI * vals(k) * t);
    Eigen::VectorXcd init = Eigen::VectorXcd::Zero(h.rows());
    init(0) = cfg.alpha;
    const Eigen::VectorXcd out =
        vecs.cast<Complex>() * phases.asDiagonal() * vecs.transpose().cast<Complex>() * init;
    std::vector<Complex> amps(out.data(), out.data() + out.size());
    return AmplitudeSet::from_amplitudes(t, std::move(amps));
}

void BathDiscretization::validate() const {
    if (k_modes < 1)
        throw std::invalid_argument("BathDiscretization: need at least one mode");
    if (!(band_halfwidth > 0.0))
        throw std::invalid_argument("BathDiscretization: band halfwidth must be positive");
    if (frequencies.size() != static_cast<size_t>(k_modes) ||
        couplings.size() != static_cast<size_t>(k_modes))
        throw std::invalid_argument("BathDiscretization: inconsistent mode arrays");
}

BathDiscretization flat_bath(const DecayConfig& dc, double band_halfwidth,
                             int k_modes) {
    dc.validate();
    if (k_modes < 1)
        throw std::invalid_argument("flat_bath: need at least one mode");
    if (!(band_halfwidth > 0.0))
        throw std::invalid_argument("flat_bath: band halfwidth must be positive");
    BathDiscretization bath;
    bath.k_modes = k_modes;
    bath.band_halfwidth = band_halfwidth;
    const double d_omega = 2.0 * band_halfwidth / k_modes;
    const double lambda = std::sqrt(dc.gamma * d_omega / (2.0 * kPi));
    bath.frequencies.resize(static_cast<size_t>(k_modes));
    bath.couplings.assign(static_cast<size_t>(k_modes), lambda);
    for (int k = 0; k < k_modes; ++k)
        bath.frequencies[static_cast<size_t>(k)] =
            dc.omega - band_halfwidth + (k + 0.5) * d_omega;
    return bath;
}

BathTrajectory evolve_with_bath_trajectory(const DecayConfig& dc,
                                           const BathDiscretization& bath,
                                           const std::vector<double>& times) {
    dc.validate();
    bath.validate();
    if (times.empty())
        throw std::invalid_argument("evolve_with_bath_trajectory: no sample times");
    const double horizon = bath.k_modes * kPi / (2.0 * bath.band_halfwidth);
    double prev = 0.0;
    for (double t : times) {
        if (t < prev)
            throw std::invalid_argument("evolve_with_bath_trajectory: times must be ascending and nonnegative");
        if (t > horizon)
            throw std::domain_error("evolve_with_bath_trajectory: sample time beyond the finite-bath recurrence horizon");
        prev = t;
    }

    const double n = static_cast<double>(dc.n_excitons);
    const double sqrt_n = std::sqrt(n);
    BathSystem sys;
    sys.g_collective = dc.g * sqrt_n;
    sys.detunings.resize(static_cast<size_t>(bath.k_modes));
    sys.couplings.resize(static_cast<size_t>(bath.k_modes));
    for (int k = 0; k < bath.k_modes; ++k) {
        sys.detunings[static_cast<size_t>(k)] = bath.frequencies[static_cast<size_t>(k)] - dc.omega;
        sys.couplings[static_cast<size_t>(k)] = bath.couplings[static_cast<size_t>(k)] * sqrt_n;
    }

    const double rate = n * dc.gamma / 4.0;
    const double abs_delta = std::sqrt(std::abs(n * dc.g * dc.g - rate * rate));
    const double h_max = 1.0 / (50.0 * std::max(abs_delta, bath.band_halfwidth));

    const Eigen::Index dim = static_cast<Eigen::Index>(bath.k_modes) + 2;
    BathTrajectory out;
    out.times = times;
    out.u.resize(times.size());
    out.v.resize(times.size());
    out.total_norm.resize(times.size());

    for (int run = 0; run < 2; ++run) {
        Eigen::VectorXcd y = Eigen::VectorXcd::Zero(dim);
        y(run) = 1.0;  // run 0: cavity excited; run 1: collective exciton mode
        double t_now = 0.0;
        for (size_t i = 0; i < times.size(); ++i) {
            const double span = times[i] - t_now;
            if (span > 0.0) {
                const int steps = static_cast<int>(std::ceil(span / h_max));
                rk4_advance(sys, y, span, steps);
                t_now = times[i];
            }
            const Complex frame = std::exp(kI * dc.omega * times[i]);
            if (run == 0) {
                out.u[i] = y(0) * frame;
                out.total_norm[i] = y.squaredNorm();
            } else {
                out.v[i] = y(0) * frame / sqrt_n;
            }
        }
    }
    return out;
}

std::pair<Complex, Complex> evolve_with_bath(const DecayConfig& dc,
                                             const BathDiscretization& bath,
                                             double t) {
    const BathTrajectory traj = evolve_with_bath_trajectory(dc, bath, {t});
    return {traj.u.front(), traj.v.front()};
}

}  // namespace ecsim
