#include "hsvqe/ansatz.hpp"

#include <stdexcept>

namespace hsvqe {

std::vector<std::pair<int, int>> entangler_pairs(int n_qubits, Entangler e) {
    std::vector<std::pair<int, int>> pairs;
    switch (e) {
    case Entangler::Full:
        for (int i = 0; i < n_qubits; ++i) {
            for (int j = i + 1; j < n_qubits; ++j) {
                pairs.emplace_back(i, j);
            }
        }
        break;
    case Entangler::Linear:
        for (int i = 0; i + 1 < n_qubits; ++i) {
            pairs.emplace_back(i, i + 1);
        }
        break;
    }
    return pairs;
}

void run_circuit_into(const AnsatzCircuit& c, const std::vector<double>& theta,
                      StateVector& out) {
    if (theta.size() != c.parameter_count()) {
        throw std::invalid_argument("parameter vector has wrong length");
    }
    const std::size_t dim = std::size_t{1} << c.n_qubits;
    out.assign(dim, {0.0, 0.0});
    out[c.initial_state] = {1.0, 0.0};

    const auto pairs = entangler_pairs(c.n_qubits, c.entangler);
    std::size_t k = 0;
    for (int q = 0; q < c.n_qubits; ++q) {
        apply_ry(out, c.n_qubits, q, theta[k++]);
    }
    for (int layer = 0; layer < c.depth; ++layer) {
        for (const auto& [ctrl, tgt] : pairs) {
            apply_cnot(out, c.n_qubits, ctrl, tgt);
        }
        for (int q = 0; q < c.n_qubits; ++q) {
            apply_ry(out, c.n_qubits, q, theta[k++]);
        }
    }
}

StateVector run_circuit(const AnsatzCircuit& c, const std::vector<double>& theta) {
    StateVector out;
    run_circuit_into(c, theta, out);
    return out;
}

EnergyObjective::EnergyObjective(AnsatzCircuit circuit, QubitHamiltonian hamiltonian)
    : circuit_(circuit),
      hamiltonian_(std::move(hamiltonian)),
      calls_(std::make_shared<std::atomic<long long>>(0)) {
    if (circuit_.n_qubits != hamiltonian_.n_qubits) {
        throw std::invalid_argument("circuit and Hamiltonian qubit counts differ");
    }
}

double EnergyObjective::operator()(const std::vector<double>& theta) const {
    run_circuit_into(circuit_, theta, scratch_);
    calls_->fetch_add(1);
    return expectation(hamiltonian_, scratch_);
}

} // namespace hsvqe
