#pragma once

#include <vector>

#include <Eigen/Dense>

#include "ecsim/model.hpp"

namespace ecsim {

/// Dense state vector over M qubits.  Qubit 0 is the most significant bit of
/// the basis index, so |q0 q1 ... q_{M-1}> sits at index
/// q0 2^{M-1} + ... + q_{M-1}.
struct QubitState {
    int m_qubits = 0;
    Eigen::VectorXcd amplitudes;

    double norm_sq() const { return amplitudes.squaredNorm(); }
};

/// Dense Hermitian operator over M qubits, same bit convention as QubitState.
struct DenseOperator {
    int m_qubits = 0;
    Eigen::MatrixXcd entries;
};

inline constexpr int kMaxQubits = 12;

/// Smallest orthogonality weight sqrt(1-p_k^2) accepted by the encoding; a
/// mode below this carries no distinguishable superposition and cannot act as
/// a qubit.
inline constexpr double kMinEncodingWeight = 1e-8;

/// Maps the multimode cat onto qubits, one qubit per listed mode: |0>_k is
/// the coherent state |alpha_k> and |1>_k its Gram-Schmidt complement built
/// from |-alpha_k>.  The resulting state is
///   Nfac { |0...0> + e^{i theta} prod_k (m_k |1>_k + p_k |0>_k) }.
/// Modes are assigned to qubits in the order given (first mode = qubit 0 =
/// most significant bit).
QubitState encode_qubit_state(const AmplitudeSet& aset, double theta,
                              const std::vector<int>& modes);

/// M-partite Bell-type correlation operator built from the standard recursion
///   O_m = 1/2 (A + A') x O_{m-1} + 1/2 (A - A') x O'_{m-1}
/// with A = sigma_x, A' = sigma_y and O_1 = 2 sigma_x, O'_1 = 2 sigma_y.
DenseOperator bell_operator(int m_qubits);

/// Equivalent closed form 2^{(m+1)/2} (e^{-i beta} sp^m + e^{i beta} sm^m)
/// with beta = pi (m-1)/4 and sp = |0><1|, sm = |1><0| per qubit; only the
/// two antidiagonal corner entries are nonzero.
DenseOperator bell_operator_closed_form(int m_qubits);

/// Phase beta_m = pi (m-1)/4 that aligns the Bell operator with an m-qubit
/// cat state.
double bell_phase(int m_qubits);

/// <psi|op|psi>; asserts the imaginary part is below 1e-12 and discards it.
double expectation(const DenseOperator& op, const QubitState& psi);

/// (|00...0> + e^{i gamma}|11...1>)/sqrt(2).
QubitState ghz_state(int m_qubits, double gamma);

/// |<psi|sigma_y^{x M}|psi^*>|.  A faithful entanglement monotone for even M;
/// identically zero for odd M.
double concurrence_multiqubit(const QubitState& psi);

/// Wootters concurrence of the reduced two-qubit state of qubits (i, j) of a
/// three-qubit pure state.
double wootters_pairwise(const QubitState& psi, int i, int j);

/// Concurrence between qubit i and the remaining pair of a three-qubit pure
/// state: sqrt(2 (1 - tr rho_i^2)).
double bipartite_concurrence_one_vs_rest(const QubitState& psi, int i);

// Brute-force witness evaluations used for cross-checking the closed forms.

/// Bell correlation of the encoded cat over the listed modes.
double oracle_bell_expectation(const AmplitudeSet& aset, double theta,
                               const std::vector<int>& modes);

/// Squared overlap with the M-qubit GHZ reference of phase gamma.
double oracle_fidelity(const AmplitudeSet& aset, double theta, double gamma,
                       const std::vector<int>& modes);

/// Tangle of the encoded cat: squared multiqubit concurrence for even M, the
/// monogamy combination C_{0(12)}^2 - C_{01}^2 - C_{02}^2 for M = 3.  Odd
/// M > 3 is outside the validated domain and throws.
double oracle_tau(const AmplitudeSet& aset, double theta,
                  const std::vector<int>& modes);

}  // namespace ecsim
