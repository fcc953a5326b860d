#pragma once

#include <functional>
#include <vector>

#include "ecsim/model.hpp"

namespace ecsim {

/// Selects which modes of an AmplitudeSet act as qubits: either the full
/// cavity + exciton register (M = N + 1 qubits, modes 0..N) or the excitons
/// alone (M = N qubits, modes 1..N).  Witness formulas scale with the qubit
/// count M, so every witness carries this context.
struct EncodingScope {
    int m_qubits = 0;
    int first_mode = 0;

    static EncodingScope full_state(int n_excitons);
    static EncodingScope excitons_only(int n_excitons);

    /// Operator phase pi (M - 1) / 4 that aligns the Bell correlation with an
    /// M-qubit cat.
    double aligned_phase() const;

    std::vector<int> modes() const;
    void validate(int n_modes_available) const;
};

/// One row of a witness sweep.
struct WitnessReport {
    double time = 0.0;
    double bell_q = 0.0;        // normalized Bell excess B
    double fidelity_f = 0.0;    // F = 2 * fidelity - 1
    double tau = 0.0;           // squared multiqubit concurrence
    double mean_photon = 0.0;   // initial cavity cat mean photon number
};

/// Bell correlation of the encoded cat with operator phase beta:
///   2^{(M+1)/2} [cos(theta - beta) + cos(beta) P] / (1 + cos(theta) P) prod_k m_k
/// where P is the overlap product over the scope modes.  At theta = beta this
/// collapses to 2^{(M+1)/2} prod_k m_k.
double bell_expectation(const AmplitudeSet& aset, const EncodingScope& scope,
                        double theta, double beta);

/// Same with the aligned choice beta = pi (M - 1) / 4.
double bell_expectation(const AmplitudeSet& aset, const EncodingScope& scope,
                        double theta);

/// Normalized excess over the local-realism bound:
/// (|expectation| - 2^{M/2}) / (2^{(M+1)/2} - 2^{M/2}).  Positive values
/// witness M-partite entanglement; 1 is the quantum maximum.
double bell_quantity(double expectation_value, int m_qubits);

/// Squared overlap of the encoded cat with the M-qubit GHZ reference of
/// phase gamma.
double preparation_fidelity(const AmplitudeSet& aset, const EncodingScope& scope,
                            double theta, double gamma);

/// F = 2 * fidelity - 1; positive values witness genuine M-partite
/// entanglement.
double fidelity_indicator(const AmplitudeSet& aset, const EncodingScope& scope,
                          double theta, double gamma);

/// Tangle of the encoded cat:
///   prod_k (1 - p_k^2) / (1 + cos(theta) P)^2.
/// Invariant under permutations of the scope modes, bounded by [0, 1].
double squared_concurrence(const AmplitudeSet& aset, const EncodingScope& scope,
                           double theta);

/// Closed-form witnesses of the N-exciton state prepared by a quarter period
/// of resonant transfer (cavity decoupled, every exciton at amplitude
/// alpha/sqrt(N)):
///   <O>  = 2^{(N+1)/2} (1 - e^{-4|alpha|^2/N})^{N/2}          (aligned phase)
///   fid  = [1 + (1 - e^{-4|alpha|^2/N})^{N/2}]^2/4 + e^{-4|alpha|^2}/4
///   tau  = (1 - e^{-4|alpha|^2/N})^N / (1 + cos(theta) e^{-2|alpha|^2})^2
/// B and F use their own aligned phase conventions; theta enters tau and the
/// mean photon number.  At alpha = 0 tau takes its continuous limit.
WitnessReport exciton_witnesses(Complex alpha, int n_excitons, double theta);

/// GHZ fidelity of the damped cavity + exciton register in terms of the
/// decay coefficients u, v (minus-sign cat reference):
///   [1 + 2 e^{-2|a|^2} (m_u m_v^N / (p_u p_v^N) - 1) + (m_u m_v^N - p_u p_v^N)^2]
///   / (4 - 4 e^{-2|a|^2}).
/// Equals (1 - e^{-2|a|^2})/4 at t = 0 and approaches 1/2 as u, v -> 0.
double dissipative_fidelity(const DecayConfig& dc, Complex alpha, double t);

/// F = 2 * dissipative_fidelity - 1.
double dissipative_fidelity_indicator(const DecayConfig& dc, Complex alpha,
                                      double t);

enum class WitnessKind { bell, fidelity };

/// Bisection root of f on [lo, hi]; requires a sign change.
double find_root_bisect(const std::function<double(double)>& f, double lo,
                        double hi, double tol);

/// |alpha| at which the chosen exciton witness crosses zero, by bisection on
/// [lo, hi] to absolute tolerance tol.
double witness_threshold(WitnessKind kind, int n_excitons, double lo, double hi,
                         double tol);

}  // namespace ecsim
