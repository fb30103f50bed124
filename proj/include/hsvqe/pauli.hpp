#ifndef HSVQE_PAULI_HPP
#define HSVQE_PAULI_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace hsvqe {

using StateVector = std::vector<std::complex<double>>;

// Upper bound for operations that materialize a 2^n x 2^n dense matrix.
inline constexpr int kMaxDenseQubits = 14;

// n-qubit Pauli string in the symplectic (X-mask, Z-mask) representation.
// Bit q of each mask refers to qubit q, where qubit 0 is the leftmost
// character of the text label and the most significant bit of a basis
// state index.  The operator encoded is
//
//   i^{popcount(x & z)} * X^{x} * Z^{z}
//
// so that overlapping bits produce Y on that qubit with no residual phase.
struct PauliString {
    int n_qubits = 0;
    std::uint64_t x_mask = 0;
    std::uint64_t z_mask = 0;

    bool is_identity() const { return x_mask == 0 && z_mask == 0; }
    // Number of Y factors; fixes the intrinsic phase i^y of the string.
    int y_count() const;

    friend bool operator==(const PauliString&, const PauliString&) = default;
};

// Product of two Pauli strings is another string times i^{phase_exponent}.
struct PhasedPauli {
    PauliString string;
    int phase_exponent = 0; // mod 4
};

PauliString pauli_from_label(const std::string& label);
std::string pauli_to_label(const PauliString& p);

PhasedPauli pauli_multiply(const PauliString& a, const PauliString& b);
bool pauli_commutes(const PauliString& a, const PauliString& b);

// Reverses the qubit<->index-bit order of a mask for state-vector kernels:
// qubit q acts on index bit (n - 1 - q).
std::uint64_t reverse_qubit_bits(std::uint64_t mask, int n_qubits);

StateVector apply_pauli(const PauliString& p, const StateVector& v);
void apply_pauli_into(const PauliString& p, const StateVector& v, StateVector& out);

// <v| P |v>; the result of a Hermitian operator on any state, returned with
// its (numerically tiny) imaginary part so callers can check residues.
std::complex<double> pauli_expectation(const PauliString& p, const StateVector& v);

// Row-major dense 2^n x 2^n matrix; refuses n > kMaxDenseQubits.
std::vector<std::complex<double>> pauli_dense_matrix(const PauliString& p);

} // namespace hsvqe

#endif
