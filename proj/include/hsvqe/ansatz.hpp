#ifndef HSVQE_ANSATZ_HPP
#define HSVQE_ANSATZ_HPP

#include <atomic>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "hsvqe/hamiltonian.hpp"
#include "hsvqe/statevector.hpp"

namespace hsvqe {

enum class Entangler { Full, Linear };

// Hardware-efficient Ry ansatz: a rotation layer, then `depth` repetitions
// of (entangling block, rotation layer).  Parameters are consumed row by
// row, qubit 0 first within each row.
struct AnsatzCircuit {
    int n_qubits = 0;
    int depth = 0;
    Entangler entangler = Entangler::Full;
    std::uint64_t initial_state = 0;

    std::size_t parameter_count() const {
        return static_cast<std::size_t>(n_qubits) *
               static_cast<std::size_t>(depth + 1);
    }
};

// CNOT (control, target) pairs of one entangling block, in application order.
std::vector<std::pair<int, int>> entangler_pairs(int n_qubits, Entangler e);

StateVector run_circuit(const AnsatzCircuit& c, const std::vector<double>& theta);
void run_circuit_into(const AnsatzCircuit& c, const std::vector<double>& theta,
                      StateVector& out);

// Callable energy surface E(theta) = <psi(theta)| H |psi(theta)>.
// Copies share the evaluation counter but keep private scratch buffers, so
// copies may be evaluated from different threads concurrently.
class EnergyObjective {
public:
    EnergyObjective(AnsatzCircuit circuit, QubitHamiltonian hamiltonian);

    double operator()(const std::vector<double>& theta) const;

    const AnsatzCircuit& circuit() const { return circuit_; }
    const QubitHamiltonian& hamiltonian() const { return hamiltonian_; }
    std::size_t dimension() const { return circuit_.parameter_count(); }

    long long evaluation_count() const { return calls_->load(); }
    void reset_evaluation_count() { calls_->store(0); }

private:
    AnsatzCircuit circuit_;
    QubitHamiltonian hamiltonian_;
    std::shared_ptr<std::atomic<long long>> calls_;
    mutable StateVector scratch_;
};

} // namespace hsvqe

#endif
