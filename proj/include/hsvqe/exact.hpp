#ifndef HSVQE_EXACT_HPP
#define HSVQE_EXACT_HPP

#include <map>
#include <string>
#include <vector>

#include "hsvqe/hamiltonian.hpp"
#include "hsvqe/pauli.hpp"

namespace hsvqe {

// Eigenpairs are accepted when ||H v - lambda v|| stays below this times
// max(1, |lambda|).
inline constexpr double kEigenResidualTolerance = 1e-9;

struct SpectrumResult {
    double ground_energy = 0.0;
    StateVector ground_vector;      // full 2^n dimension
    std::vector<double> eigenvalues; // ascending; filled only on request
    double residual = 0.0;
};

// Dense eigendecomposition of the Hamiltonian.  Refuses more than
// kMaxDenseQubits qubits.  Verifies Hermiticity of the assembled matrix and
// the residual of the returned ground pair.
SpectrumResult ground_state(const QubitHamiltonian& h, bool full_spectrum = false);

// Ground state of P H P restricted to the subspace where the listed qubits
// are pinned to given computational values (0 or 1); matrix elements leaving
// the subspace are projected away.
SpectrumResult projected_ground_state(const QubitHamiltonian& h,
                                      const std::map<int, int>& fixed_qubits);

struct CoefficientEntry {
    double abs_coefficient = 0.0;
    std::string label;
    TermClass term_class = TermClass::Unknown;
};

// Term magnitudes in non-increasing order; ties break on the label.
std::vector<CoefficientEntry> coefficient_distribution(const QubitHamiltonian& h);

} // namespace hsvqe

#endif
