#ifndef HSVQE_STATEVECTOR_HPP
#define HSVQE_STATEVECTOR_HPP

#include <cstdint>

#include "hsvqe/hamiltonian.hpp"
#include "hsvqe/pauli.hpp"

namespace hsvqe {

// |index> with the convention that qubit 0 is the most significant bit.
StateVector basis_state(int n_qubits, std::uint64_t index);

// In-place single-qubit Y rotation: Ry(theta) = exp(-i theta Y / 2),
// acting as [[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]].
void apply_ry(StateVector& v, int n_qubits, int qubit, double theta);

void apply_cnot(StateVector& v, int n_qubits, int control, int target);

double state_norm(const StateVector& v);

// Sum of per-term expectations accumulated in stored term order.  The order
// is part of the contract: repeated evaluation of the same Hamiltonian on
// the same state is bit-identical.  Throws if the accumulated imaginary
// residue exceeds kImagResidueTolerance.
double expectation(const QubitHamiltonian& h, const StateVector& v);

} // namespace hsvqe

#endif
