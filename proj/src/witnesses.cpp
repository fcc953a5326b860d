#include "ecsim/witnesses.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace ecsim {

namespace {

constexpr double kPi = std::numbers::pi;

struct ScopeAggregates {
    double energy;     // sum_k |alpha_k|^2 over the scope
    double m_product;  // prod_k sqrt(1 - p_k^2)
};

ScopeAggregates aggregate(const AmplitudeSet& aset, const EncodingScope& scope) {
    scope.validate(aset.n_modes());
    ScopeAggregates agg{0.0, 1.0};
    for (int k = scope.first_mode; k < scope.first_mode + scope.m_qubits; ++k) {
        agg.energy += std::norm(aset.amps[static_cast<size_t>(k)]);
        agg.m_product *= aset.m_factors[static_cast<size_t>(k)];
    }
    return agg;
}

double checked_cat_denominator(double cos_theta, double energy, const char* who) {
    const double denom = one_plus_cos_overlap(cos_theta, energy);
    if (!(denom > 0.0))
        throw std::domain_error(std::string(who) + ": degenerate cat norm");
    return denom;
}

}  // namespace

EncodingScope EncodingScope::full_state(int n_excitons) {
    return EncodingScope{n_excitons + 1, 0};
}

EncodingScope EncodingScope::excitons_only(int n_excitons) {
    return EncodingScope{n_excitons, 1};
}

double EncodingScope::aligned_phase() const {
    return kPi * (m_qubits - 1) / 4.0;
}

std::vector<int> EncodingScope::modes() const {
    std::vector<int> out(static_cast<size_t>(m_qubits));
    std::iota(out.begin(), out.end(), first_mode);
    return out;
}

void EncodingScope::validate(int n_modes_available) const {
    if (m_qubits < 2)
        throw std::invalid_argument("EncodingScope: at least two qubits required");
    if (first_mode < 0 || first_mode > 1)
        throw std::invalid_argument("EncodingScope: first mode must be 0 (cavity) or 1 (excitons)");
    if (first_mode + m_qubits > n_modes_available)
        throw std::invalid_argument("EncodingScope: scope exceeds available modes");
}

double bell_expectation(const AmplitudeSet& aset, const EncodingScope& scope,
                        double theta, double beta) {
    const ScopeAggregates agg = aggregate(aset, scope);
    const double p = std::exp(-2.0 * agg.energy);
    const double denom =
        checked_cat_denominator(std::cos(theta), agg.energy, "bell_expectation");
    const double scale = std::pow(2.0, 0.5 * (scope.m_qubits + 1));
    return scale * (std::cos(theta - beta) + std::cos(beta) * p) / denom *
           agg.m_product;
}

double bell_expectation(const AmplitudeSet& aset, const EncodingScope& scope,
                        double theta) {
    return bell_expectation(aset, scope, theta, scope.aligned_phase());
}

double bell_quantity(double expectation_value, int m_qubits) {
    if (m_qubits < 1)
        throw std::invalid_argument("bell_quantity: bad qubit count");
    const double local_bound = std::pow(2.0, 0.5 * m_qubits);
    return (std::abs(expectation_value) - local_bound) /
           (local_bound * (std::numbers::sqrt2 - 1.0));
}

double preparation_fidelity(const AmplitudeSet& aset, const EncodingScope& scope,
                            double theta, double gamma) {
    const ScopeAggregates agg = aggregate(aset, scope);
    const double p = std::exp(-2.0 * agg.energy);
    const double m = agg.m_product;
    const double denom =
        4.0 * checked_cat_denominator(std::cos(theta), agg.energy, "preparation_fidelity");
    const double numer = 1.0 + p * p + m * m + 2.0 * p * std::cos(theta) +
                         2.0 * m * std::cos(theta - gamma) +
                         2.0 * p * m * std::cos(gamma);
    return numer / denom;
}

double fidelity_indicator(const AmplitudeSet& aset, const EncodingScope& scope,
                          double theta, double gamma) {
    return 2.0 * preparation_fidelity(aset, scope, theta, gamma) - 1.0;
}

double squared_concurrence(const AmplitudeSet& aset, const EncodingScope& scope,
                           double theta) {
    const ScopeAggregates agg = aggregate(aset, scope);
    const double denom =
        checked_cat_denominator(std::cos(theta), agg.energy, "squared_concurrence");
    const double ratio = agg.m_product / denom;
    return ratio * ratio;
}

WitnessReport exciton_witnesses(Complex alpha, int n_excitons, double theta) {
    if (n_excitons < 2)
        throw std::domain_error("exciton_witnesses: at least two excitons required");
    const double n = static_cast<double>(n_excitons);
    const double a2 = std::norm(alpha);
    const double q = -std::expm1(-4.0 * a2 / n);  // 1 - p^2 per exciton
    const double m_prod = std::pow(q, 0.5 * n);

    WitnessReport report;
    report.time = kPi / 2.0;  // quarter-period transfer time in units of 1/G
    report.bell_q =
        bell_quantity(std::pow(2.0, 0.5 * (n + 1.0)) * m_prod, n_excitons);
    const double fid =
        0.25 * (1.0 + m_prod) * (1.0 + m_prod) + 0.25 * std::exp(-4.0 * a2);
    report.fidelity_f = 2.0 * fid - 1.0;

    const double c = std::cos(theta);
    if (a2 == 0.0) {
        // Continuous limits at vanishing amplitude.
        const bool odd_cat = 1.0 + c <= 0.0;
        report.tau = (odd_cat && n_excitons == 2) ? 1.0 : 0.0;
        report.mean_photon = odd_cat ? 1.0 : 0.0;
    } else {
        const double denom = one_plus_cos_overlap(c, a2);
        if (!(denom > 0.0))
            throw std::domain_error("exciton_witnesses: degenerate cat norm");
        const double ratio = std::pow(q, 0.5 * n) / denom;
        report.tau = ratio * ratio;
        report.mean_photon = (2.0 - denom) / denom * a2;
    }
    return report;
}

double dissipative_fidelity(const DecayConfig& dc, Complex alpha, double t) {
    const double a2 = std::norm(alpha);
    if (!(a2 > 0.0))
        throw std::domain_error("dissipative_fidelity: needs a nonzero amplitude");
    const DecayCoefficients c = decay_coefficients(dc, t);
    const double n = static_cast<double>(dc.n_excitons);
    const double eu = a2 * std::norm(c.u);        // |alpha_u|^2
    const double ev = a2 * std::norm(c.v);        // |alpha_v|^2 per exciton
    const double pu = std::exp(-2.0 * eu);
    const double pv_n = std::exp(-2.0 * n * ev);  // p_v^N
    const double mu = std::sqrt(-std::expm1(-4.0 * eu));
    const double mv_n = std::pow(-std::expm1(-4.0 * ev), 0.5 * n);
    const double m_all = mu * mv_n;
    // e^{-2|a|^2} / (p_u p_v^N) = exp(-2 * energy lost to the bath)
    const double bath_energy = std::max(0.0, a2 - eu - n * ev);
    const double cat = std::exp(-2.0 * a2);
    const double numer = 1.0 + 2.0 * (m_all * std::exp(-2.0 * bath_energy) - cat) +
                         (m_all - pu * pv_n) * (m_all - pu * pv_n);
    const double denom = -4.0 * std::expm1(-2.0 * a2);
    return numer / denom;
}

double dissipative_fidelity_indicator(const DecayConfig& dc, Complex alpha,
                                      double t) {
    return 2.0 * dissipative_fidelity(dc, alpha, t) - 1.0;
}

double find_root_bisect(const std::function<double(double)>& f, double lo,
                        double hi, double tol) {
    if (!(lo < hi) || !(tol > 0.0))
        throw std::invalid_argument("find_root_bisect: bad interval or tolerance");
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw std::domain_error("find_root_bisect: interval does not bracket a sign change");
    for (int iter = 0; iter < 200 && (hi - lo) > tol; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if ((fmid > 0.0) == (fhi > 0.0)) {
            hi = mid;
            fhi = fmid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    return 0.5 * (lo + hi);
}

double witness_threshold(WitnessKind kind, int n_excitons, double lo, double hi,
                         double tol) {
    const auto metric = [&](double a) {
        const WitnessReport r = exciton_witnesses(Complex{a, 0.0}, n_excitons, kPi);
        return kind == WitnessKind::bell ? r.bell_q : r.fidelity_f;
    };
    return find_root_bisect(metric, lo, hi, tol);
}

}  // namespace ecsim
