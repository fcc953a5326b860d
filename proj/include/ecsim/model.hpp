#pragma once

#include <complex>
#include <vector>

namespace ecsim {

using Complex = std::complex<double>;

/// Static description of one cavity mode coupled to N exciton modes, all at
/// the common frequency omega, plus the initial cat-state preparation of the
/// cavity field: (|alpha> + e^{i theta}|-alpha>) up to normalization, every
/// exciton starting in vacuum.
struct SystemConfig {
    int n_excitons = 1;
    std::vector<double> couplings;  // g_n >= 0, one entry per exciton
    double omega = 0.0;             // shared mode frequency (hbar = 1)
    Complex alpha{1.0, 0.0};        // initial cavity amplitude
    double theta = 0.0;             // superposition phase in radians

    /// All couplings equal, normalized so the collective coupling is
    /// `total_coupling`.
    static SystemConfig equal_couplings(int n, double total_coupling = 1.0,
                                        Complex alpha = Complex{1.0, 0.0},
                                        double theta = 0.0, double omega = 0.0);

    /// Collective coupling G = sqrt(sum_n g_n^2).
    double total_coupling() const;

    /// Throws std::invalid_argument on inconsistent dimensions, negative
    /// couplings, all-zero couplings, or a degenerate cat (theta = pi with
    /// alpha = 0).
    void validate() const;
};

/// Hyperspherical parametrization of a coupling vector: the collective
/// coupling G plus N-1 angles, g_1 = G cos(phi_1),
/// g_2 = G sin(phi_1) cos(phi_2), ..., g_N = G sin(phi_1)...sin(phi_{N-1}).
/// Nonnegative couplings map to angles in [0, pi/2].
struct SphericalCoupling {
    double total_coupling = 0.0;
    std::vector<double> angles;  // N-1 entries
};

SphericalCoupling spherical_from_couplings(const std::vector<double>& couplings);
std::vector<double> couplings_from_spherical(const SphericalCoupling& sc);

/// Coherent amplitudes of all N+1 modes at one instant (index 0 is the
/// cavity), together with the per-mode cat overlaps
/// p_k = |<alpha_k|-alpha_k>| = exp(-2|alpha_k|^2) and the qubit-encoding
/// weights m_k = sqrt(1 - p_k^2).
struct AmplitudeSet {
    double time = 0.0;
    std::vector<Complex> amps;
    std::vector<double> overlaps;   // p_k, in (0, 1]
    std::vector<double> m_factors;  // sqrt(1 - p_k^2), in [0, 1)

    static AmplitudeSet from_amplitudes(double time, std::vector<Complex> amps);

    int n_modes() const { return static_cast<int>(amps.size()); }

    /// sum_k |alpha_k|^2 over modes [first_mode, first_mode + count).
    double mode_energy(int first_mode, int count) const;
};

/// Closed-form lossless evolution of the amplitudes: the cavity oscillates as
/// alpha cos(G t) e^{-i omega t} and each exciton as
/// -i alpha sin(G t) (g_n / G) e^{-i omega t}.  Total energy sum_k|alpha_k|^2
/// is conserved and every |alpha_k| has period pi/G.
AmplitudeSet lossless_amplitudes(const SystemConfig& cfg, double t);

/// Normalization constant of the multimode cat built on `aset`:
/// [2 + 2 cos(theta) prod_k p_k]^{-1/2}.  Throws std::domain_error when the
/// cat norm degenerates to zero.
double cat_normalization(const SystemConfig& cfg, const AmplitudeSet& aset);

/// Mean photon number of the initial cavity cat:
/// (1 - cos(theta) e^{-2|alpha|^2}) / (1 + cos(theta) e^{-2|alpha|^2}) |alpha|^2.
/// Approaches 1 for theta = pi, alpha -> 0 (one-photon limit) and 0 for
/// theta = 0, alpha -> 0.
double mean_photon(const SystemConfig& cfg);

/// Cavity decay problem: N excitons with equal couplings g to the cavity,
/// which leaks into a flat continuum at rate Gamma.
struct DecayConfig {
    double gamma = 0.0;  // cavity energy decay rate Gamma >= 0
    double g = 1.0;      // per-exciton coupling, > 0
    int n_excitons = 1;
    double omega = 0.0;

    void validate() const;
};

/// Weisskopf-Wigner amplitude-transfer coefficients: the cavity operator
/// evolves as b_0(t) = u(t) b_0(0) + v(t) sum_n b_n(0) + bath terms.
struct DecayCoefficients {
    Complex u;
    Complex v;
    Complex delta_n;  // effective Rabi frequency sqrt(N g^2 - N^2 Gamma^2 / 16)
};

/// Closed-form u, v:
///   u(t) = e^{-N Gamma t/4} [cos(D t) + (N Gamma)/(4 D) sin(D t)] e^{i omega t}
///   v(t) = (i g / D) e^{-N Gamma t/4} sin(D t) e^{i omega t}
/// with D = delta_n continued analytically into the overdamped regime
/// (D^2 < 0) and a series branch for |D t| < 1e-4.  Satisfies
/// |u|^2 + N |v|^2 <= 1, with equality at Gamma = 0 where the lossless
/// dynamics at G = g sqrt(N) is recovered.
DecayCoefficients decay_coefficients(const DecayConfig& dc, double t);

/// 1 + cos(theta) exp(-2 E), evaluated without cancellation near theta = pi,
/// E -> 0.  This is half the squared inverse cat normalization with mode
/// energy E.
double one_plus_cos_overlap(double cos_theta, double energy);

}  // namespace ecsim
