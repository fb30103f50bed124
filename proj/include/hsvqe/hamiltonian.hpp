#ifndef HSVQE_HAMILTONIAN_HPP
#define HSVQE_HAMILTONIAN_HPP

#include <string>
#include <vector>

#include "hsvqe/pauli.hpp"

namespace hsvqe {

// Coefficients with magnitude below this are dropped when merging.
inline constexpr double kCoefficientDropThreshold = 1e-12;
// Largest imaginary residue tolerated when a real-coefficient operator is
// assembled from complex intermediate arithmetic.
inline constexpr double kImagResidueTolerance = 1e-10;

// Structural classes of the fermionic term a qubit term descends from.
enum class TermClass {
    Number = 0,
    CoulombExchange = 1,
    Excitation = 2,
    NumberExcitation = 3,
    DoubleExcitation = 4,
    Unknown = 5,
};

std::string term_class_name(TermClass c);
TermClass term_class_from_name(const std::string& name);

struct HamiltonianTerm {
    double coefficient = 0.0;
    PauliString string;
    TermClass term_class = TermClass::Unknown;
};

struct QubitHamiltonian {
    int n_qubits = 0;
    std::vector<HamiltonianTerm> terms;
};

// Combines duplicate strings (first occurrence keeps its position and class)
// and drops negligible coefficients.
QubitHamiltonian merge_terms(const QubitHamiltonian& h);

// The partial sum over the first `count` terms, in stored order.
QubitHamiltonian prefix(const QubitHamiltonian& h, std::size_t count);

} // namespace hsvqe

#endif
