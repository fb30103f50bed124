#include "hsvqe/statevector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hsvqe {

StateVector basis_state(int n_qubits, std::uint64_t index) {
    if (n_qubits < 1 || n_qubits > 63) {
        throw std::invalid_argument("basis_state supports 1..63 qubits");
    }
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (index >= dim) {
        throw std::invalid_argument("basis state index out of range");
    }
    StateVector v(dim, {0.0, 0.0});
    v[index] = {1.0, 0.0};
    return v;
}

void apply_ry(StateVector& v, int n_qubits, int qubit, double theta) {
    if (qubit < 0 || qubit >= n_qubits) {
        throw std::invalid_argument("qubit index out of range");
    }
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const std::size_t bit = std::size_t{1} << (n_qubits - 1 - qubit);
    const std::size_t dim = v.size();
    for (std::size_t b = 0; b < dim; ++b) {
        if (b & bit) continue;
        const std::complex<double> v0 = v[b];
        const std::complex<double> v1 = v[b | bit];
        v[b] = c * v0 - s * v1;
        v[b | bit] = s * v0 + c * v1;
    }
}

void apply_cnot(StateVector& v, int n_qubits, int control, int target) {
    if (control < 0 || control >= n_qubits || target < 0 || target >= n_qubits ||
        control == target) {
        throw std::invalid_argument("invalid CNOT qubit pair");
    }
    const std::size_t cbit = std::size_t{1} << (n_qubits - 1 - control);
    const std::size_t tbit = std::size_t{1} << (n_qubits - 1 - target);
    const std::size_t dim = v.size();
    for (std::size_t b = 0; b < dim; ++b) {
        if ((b & cbit) && !(b & tbit)) {
            std::swap(v[b], v[b | tbit]);
        }
    }
}

double state_norm(const StateVector& v) {
    double acc = 0.0;
    for (const auto& a : v) acc += std::norm(a);
    return std::sqrt(acc);
}

double expectation(const QubitHamiltonian& h, const StateVector& v) {
    std::complex<double> acc{0.0, 0.0};
    for (const auto& t : h.terms) {
        acc += t.coefficient * pauli_expectation(t.string, v);
    }
    if (std::abs(acc.imag()) > kImagResidueTolerance) {
        throw std::runtime_error("expectation has imaginary residue " +
                                 std::to_string(acc.imag()));
    }
    return acc.real();
}

} // namespace hsvqe
