#include "ecsim/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ecsim {

namespace {

constexpr double kPi = std::numbers::pi;

// sin(z)/z with a short series around z = 0; the series branch keeps the
// overdamped and critically damped decay coefficients smooth.
Complex csinc(Complex z) {
    if (std::abs(z) < 1e-4) {
        const Complex z2 = z * z;
        return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
    }
    return std::sin(z) / z;
}

}  // namespace

SystemConfig SystemConfig::equal_couplings(int n, double total_coupling,
                                           Complex alpha, double theta,
                                           double omega) {
    SystemConfig cfg;
    cfg.n_excitons = n;
    if (n > 0) {
        cfg.couplings.assign(static_cast<size_t>(n),
                             total_coupling / std::sqrt(static_cast<double>(n)));
    }
    cfg.omega = omega;
    cfg.alpha = alpha;
    cfg.theta = theta;
    cfg.validate();
    return cfg;
}

double SystemConfig::total_coupling() const {
    double sum = 0.0;
    for (double g : couplings) sum += g * g;
    return std::sqrt(sum);
}

void SystemConfig::validate() const {
    if (n_excitons < 1)
        throw std::invalid_argument("SystemConfig: need at least one exciton");
    if (static_cast<int>(couplings.size()) != n_excitons)
        throw std::invalid_argument("SystemConfig: coupling count does not match n_excitons");
    for (double g : couplings)
        if (!(g >= 0.0))
            throw std::invalid_argument("SystemConfig: couplings must be nonnegative");
    if (!(total_coupling() > 0.0))
        throw std::invalid_argument("SystemConfig: all couplings are zero");
    if (std::abs(std::remainder(theta, 2.0 * kPi)) >= kPi - 1e-15 && std::abs(alpha) == 0.0)
        throw std::invalid_argument("SystemConfig: theta = pi with alpha = 0 has zero norm");
}

SphericalCoupling spherical_from_couplings(const std::vector<double>& couplings) {
    if (couplings.empty())
        throw std::invalid_argument("spherical_from_couplings: empty coupling list");
    double sum = 0.0;
    for (double g : couplings) {
        if (!(g >= 0.0))
            throw std::invalid_argument("spherical_from_couplings: negative coupling");
        sum += g * g;
    }
    if (!(sum > 0.0))
        throw std::invalid_argument("spherical_from_couplings: all couplings are zero");

    SphericalCoupling sc;
    sc.total_coupling = std::sqrt(sum);
    const size_t n = couplings.size();
    sc.angles.reserve(n - 1);
    // Peel one coordinate at a time: phi_j = acos(g_j / remaining norm).
    double tail = sum;
    for (size_t j = 0; j + 1 < n; ++j) {
        const double r = std::sqrt(tail);
        if (r == 0.0) {
            sc.angles.push_back(0.0);  // remaining couplings all vanish
            continue;
        }
        double c = couplings[j] / r;
        c = std::min(1.0, std::max(-1.0, c));
        sc.angles.push_back(std::acos(c));
        tail = std::max(0.0, tail - couplings[j] * couplings[j]);
    }
    return sc;
}

std::vector<double> couplings_from_spherical(const SphericalCoupling& sc) {
    if (!(sc.total_coupling > 0.0))
        throw std::invalid_argument("couplings_from_spherical: total coupling must be positive");
    std::vector<double> g(sc.angles.size() + 1, 0.0);
    double prefix = sc.total_coupling;  // G sin(phi_1)...sin(phi_{j-1})
    for (size_t j = 0; j < sc.angles.size(); ++j) {
        g[j] = prefix * std::cos(sc.angles[j]);
        prefix *= std::sin(sc.angles[j]);
    }
    g.back() = prefix;
    return g;
}

AmplitudeSet AmplitudeSet::from_amplitudes(double time, std::vector<Complex> amps) {
    AmplitudeSet aset;
    aset.time = time;
    aset.amps = std::move(amps);
    aset.overlaps.reserve(aset.amps.size());
    aset.m_factors.reserve(aset.amps.size());
    for (const Complex& a : aset.amps) {
        const double a2 = std::norm(a);
        aset.overlaps.push_back(std::exp(-2.0 * a2));
        // 1 - p^2 = -expm1(-4|a|^2) avoids cancellation for small amplitudes.
        aset.m_factors.push_back(std::sqrt(-std::expm1(-4.0 * a2)));
    }
    return aset;
}

double AmplitudeSet::mode_energy(int first_mode, int count) const {
    if (first_mode < 0 || count < 0 || first_mode + count > n_modes())
        throw std::invalid_argument("AmplitudeSet: mode range out of bounds");
    double sum = 0.0;
    for (int k = first_mode; k < first_mode + count; ++k) sum += std::norm(amps[k]);
    return sum;
}

AmplitudeSet lossless_amplitudes(const SystemConfig& cfg, double t) {
    cfg.validate();
    const double big_g = cfg.total_coupling();
    const Complex rot = std::exp(Complex(0.0, -cfg.omega * t));
    std::vector<Complex> amps(static_cast<size_t>(cfg.n_excitons) + 1);
    amps[0] = cfg.alpha * std::cos(big_g * t) * rot;
    const Complex shared = Complex(0.0, -1.0) * cfg.alpha * std::sin(big_g * t) * rot / big_g;
    for (int n = 0; n < cfg.n_excitons; ++n)
        amps[static_cast<size_t>(n) + 1] = shared * cfg.couplings[static_cast<size_t>(n)];
    return AmplitudeSet::from_amplitudes(t, std::move(amps));
}

double one_plus_cos_overlap(double cos_theta, double energy) {
    // 1 + c e^{-2E} = (1 - e^{-2E}) + (1 + c) e^{-2E}; both pieces are
    // nonnegative for c in [-1, 1], so no subtractive cancellation remains.
    return -std::expm1(-2.0 * energy) + (1.0 + cos_theta) * std::exp(-2.0 * energy);
}

double cat_normalization(const SystemConfig& cfg, const AmplitudeSet& aset) {
    const double energy = aset.mode_energy(0, aset.n_modes());
    const double half = one_plus_cos_overlap(std::cos(cfg.theta), energy);
    if (!(half > 0.0))
        throw std::domain_error("cat_normalization: degenerate cat state");
    return 1.0 / std::sqrt(2.0 * half);
}

double mean_photon(const SystemConfig& cfg) {
    cfg.validate();
    const double a2 = std::norm(cfg.alpha);
    const double c = std::cos(cfg.theta);
    const double denom = one_plus_cos_overlap(c, a2);
    if (!(denom > 0.0))
        throw std::domain_error("mean_photon: degenerate cat state");
    const double numer = 2.0 - denom;  // 1 - cos(theta) e^{-2|alpha|^2}
    return numer / denom * a2;
}

void DecayConfig::validate() const {
    if (n_excitons < 1)
        throw std::invalid_argument("DecayConfig: need at least one exciton");
    if (!(g > 0.0))
        throw std::invalid_argument("DecayConfig: coupling must be positive");
    if (!(gamma >= 0.0))
        throw std::invalid_argument("DecayConfig: decay rate must be nonnegative");
}

DecayCoefficients decay_coefficients(const DecayConfig& dc, double t) {
    dc.validate();
    if (t < 0.0)
        throw std::domain_error("decay_coefficients: negative time");
    const double n = static_cast<double>(dc.n_excitons);
    const double rate = n * dc.gamma / 4.0;
    const Complex delta = std::sqrt(Complex(n * dc.g * dc.g - rate * rate, 0.0));
    const Complex z = delta * t;
    const Complex envelope = std::exp(Complex(-rate * t, dc.omega * t));
    DecayCoefficients out;
    out.delta_n = delta;
    out.u = envelope * (std::cos(z) + rate * t * csinc(z));
    out.v = Complex(0.0, 1.0) * dc.g * t * csinc(z) * envelope;
    return out;
}

}  // namespace ecsim
