#include "ecsim/qubit_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ecsim {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

void check_qubit_count(int m) {
    if (m < 1 || m > kMaxQubits)
        throw std::invalid_argument("qubit count outside supported range [1, 12]");
}

void check_state(const QubitState& psi) {
    check_qubit_count(psi.m_qubits);
    if (psi.amplitudes.size() != (Eigen::Index{1} << psi.m_qubits))
        throw std::invalid_argument("state dimension does not match qubit count");
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Eigen::MatrixXcd pauli_x() {
    Eigen::MatrixXcd m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Eigen::MatrixXcd pauli_y() {
    Eigen::MatrixXcd m(2, 2);
    m << 0, -kI, kI, 0;
    return m;
}

Eigen::Matrix2cd reduced_single(const QubitState& psi, int i) {
    const int m = psi.m_qubits;
    const Eigen::Index dim = Eigen::Index{1} << m;
    const int shift = m - 1 - i;
    Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
    for (Eigen::Index x = 0; x < dim; ++x) {
        const int bx = static_cast<int>((x >> shift) & 1);
        const Eigen::Index y = x ^ (Eigen::Index{1} << shift);
        rho(bx, bx) += std::norm(psi.amplitudes(x));
        rho(bx, 1 - bx) += psi.amplitudes(x) * std::conj(psi.amplitudes(y));
    }
    return rho;
}

}  // namespace

QubitState encode_qubit_state(const AmplitudeSet& aset, double theta,
                              const std::vector<int>& modes) {
    const int m = static_cast<int>(modes.size());
    check_qubit_count(m);
    double energy = 0.0;
    for (int k : modes) {
        if (k < 0 || k >= aset.n_modes())
            throw std::invalid_argument("encode_qubit_state: mode index out of range");
        if (aset.m_factors[static_cast<size_t>(k)] < kMinEncodingWeight)
            throw std::domain_error("encode_qubit_state: degenerate encoding, mode has no superposition weight");
        energy += std::norm(aset.amps[static_cast<size_t>(k)]);
    }
    const double half = one_plus_cos_overlap(std::cos(theta), energy);
    if (!(half > 0.0))
        throw std::domain_error("encode_qubit_state: degenerate cat state");
    const double nfac = 1.0 / std::sqrt(2.0 * half);
    const Complex branch2 = nfac * std::exp(kI * theta);

    const Eigen::Index dim = Eigen::Index{1} << m;
    QubitState psi;
    psi.m_qubits = m;
    psi.amplitudes = Eigen::VectorXcd::Zero(dim);
    for (Eigen::Index b = 0; b < dim; ++b) {
        double w = 1.0;
        for (int k = 0; k < m; ++k) {
            const size_t mode = static_cast<size_t>(modes[static_cast<size_t>(k)]);
            const bool one = (b >> (m - 1 - k)) & 1;
            w *= one ? aset.m_factors[mode] : aset.overlaps[mode];
        }
        psi.amplitudes(b) = branch2 * w;
    }
    psi.amplitudes(0) += nfac;
    return psi;
}

DenseOperator bell_operator(int m_qubits) {
    check_qubit_count(m_qubits);
    const Eigen::MatrixXcd half_sum = 0.5 * (pauli_x() + pauli_y());
    const Eigen::MatrixXcd half_diff = 0.5 * (pauli_x() - pauli_y());
    Eigen::MatrixXcd op = 2.0 * pauli_x();
    Eigen::MatrixXcd op_primed = 2.0 * pauli_y();
    for (int m = 2; m <= m_qubits; ++m) {
        Eigen::MatrixXcd next = kron(half_sum, op) + kron(half_diff, op_primed);
        Eigen::MatrixXcd next_primed = kron(half_sum, op_primed) - kron(half_diff, op);
        op = std::move(next);
        op_primed = std::move(next_primed);
    }
    return DenseOperator{m_qubits, std::move(op)};
}

double bell_phase(int m_qubits) {
    check_qubit_count(m_qubits);
    return kPi * (m_qubits - 1) / 4.0;
}

DenseOperator bell_operator_closed_form(int m_qubits) {
    check_qubit_count(m_qubits);
    const Eigen::Index dim = Eigen::Index{1} << m_qubits;
    const double scale = std::pow(2.0, 0.5 * (m_qubits + 1));
    const Complex corner = scale * std::exp(-kI * bell_phase(m_qubits));
    Eigen::MatrixXcd entries = Eigen::MatrixXcd::Zero(dim, dim);
    entries(0, dim - 1) = corner;
    entries(dim - 1, 0) = std::conj(corner);
    return DenseOperator{m_qubits, std::move(entries)};
}

double expectation(const DenseOperator& op, const QubitState& psi) {
    check_state(psi);
    if (op.m_qubits != psi.m_qubits)
        throw std::invalid_argument("expectation: operator and state dimensions differ");
    const Complex value = psi.amplitudes.dot(op.entries * psi.amplitudes);
    if (std::abs(value.imag()) > 1e-12)
        throw std::domain_error("expectation: non-real expectation value");
    return value.real();
}

QubitState ghz_state(int m_qubits, double gamma) {
    check_qubit_count(m_qubits);
    const Eigen::Index dim = Eigen::Index{1} << m_qubits;
    QubitState psi;
    psi.m_qubits = m_qubits;
    psi.amplitudes = Eigen::VectorXcd::Zero(dim);
    psi.amplitudes(0) = 1.0 / std::sqrt(2.0);
    psi.amplitudes(dim - 1) = std::exp(kI * gamma) / std::sqrt(2.0);
    return psi;
}

double concurrence_multiqubit(const QubitState& psi) {
    check_state(psi);
    const int m = psi.m_qubits;
    const Eigen::Index dim = Eigen::Index{1} << m;
    // <b|sigma_y^{x m}|~b> = (-i)^m (-1)^{popcount(b)}
    Complex base{1.0, 0.0};
    for (int k = 0; k < m; ++k) base *= -kI;
    Complex sum{0.0, 0.0};
    for (Eigen::Index b = 0; b < dim; ++b) {
        const double sign = (std::popcount(static_cast<uint64_t>(b)) & 1) ? -1.0 : 1.0;
        sum += std::conj(psi.amplitudes(b)) * base * sign *
               std::conj(psi.amplitudes(dim - 1 - b));
    }
    return std::abs(sum);
}

// Tracing the spectator out of a pure three-qubit state leaves a rank <= 2
// mixture of the two spectator-conditioned vectors w_c. In that ensemble the
// Wootters roots are the two singular values of the 2x2 preconcurrence matrix
// tau_{cd} = w_c^T (sigma_y x sigma_y) w_d plus two exact zeros; this avoids
// the sqrt of near-zero eigenvalues of rho * rho~, which costs ~1e-8.
double wootters_pairwise(const QubitState& psi, int i, int j) {
    check_state(psi);
    if (psi.m_qubits != 3)
        throw std::invalid_argument("wootters_pairwise: supported for three-qubit states only");
    if (i == j || i < 0 || j < 0 || i >= 3 || j >= 3)
        throw std::invalid_argument("wootters_pairwise: bad qubit pair");
    const int s = 3 - i - j;
    Eigen::Matrix<Complex, 4, 2> w = Eigen::Matrix<Complex, 4, 2>::Zero();
    for (Eigen::Index x = 0; x < 8; ++x) {
        const int bi = static_cast<int>((x >> (2 - i)) & 1);
        const int bj = static_cast<int>((x >> (2 - j)) & 1);
        const int bs = static_cast<int>((x >> (2 - s)) & 1);
        w(bi * 2 + bj, bs) = psi.amplitudes(x);
    }
    Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    const Eigen::Matrix2cd tau = w.transpose() * yy * w;
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(tau);
    return std::max(0.0, svd.singularValues()(0) - svd.singularValues()(1));
}

double bipartite_concurrence_one_vs_rest(const QubitState& psi, int i) {
    check_state(psi);
    if (psi.m_qubits != 3)
        throw std::invalid_argument("bipartite_concurrence_one_vs_rest: three-qubit states only");
    if (i < 0 || i >= 3)
        throw std::invalid_argument("bipartite_concurrence_one_vs_rest: bad qubit index");
    if (std::abs(psi.norm_sq() - 1.0) > 1e-10)
        throw std::invalid_argument("bipartite_concurrence_one_vs_rest: unnormalized state");
    const Eigen::Matrix2cd rho = reduced_single(psi, i);
    const double purity = (rho * rho).trace().real();
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

double oracle_bell_expectation(const AmplitudeSet& aset, double theta,
                               const std::vector<int>& modes) {
    const QubitState psi = encode_qubit_state(aset, theta, modes);
    return expectation(bell_operator(psi.m_qubits), psi);
}

double oracle_fidelity(const AmplitudeSet& aset, double theta, double gamma,
                       const std::vector<int>& modes) {
    const QubitState psi = encode_qubit_state(aset, theta, modes);
    const QubitState ref = ghz_state(psi.m_qubits, gamma);
    return std::norm(ref.amplitudes.dot(psi.amplitudes));
}

double oracle_tau(const AmplitudeSet& aset, double theta,
                  const std::vector<int>& modes) {
    const QubitState psi = encode_qubit_state(aset, theta, modes);
    if (psi.m_qubits % 2 == 0) {
        const double c = concurrence_multiqubit(psi);
        return c * c;
    }
    if (psi.m_qubits == 3) {
        const double c_rest = bipartite_concurrence_one_vs_rest(psi, 0);
        const double c01 = wootters_pairwise(psi, 0, 1);
        const double c02 = wootters_pairwise(psi, 0, 2);
        return c_rest * c_rest - c01 * c01 - c02 * c02;
    }
    throw std::domain_error("oracle_tau: odd qubit counts above 3 are outside the validated domain");
}

}  // namespace ecsim
