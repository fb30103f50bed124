#include "hsvqe/pauli.hpp"

#include <bit>
#include <cstdlib>
#include <stdexcept>

#include "hsvqe/errors.hpp"

namespace hsvqe {

namespace {

const std::complex<double> kPhase[4] = {
    {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

} // namespace

int PauliString::y_count() const {
    return std::popcount(x_mask & z_mask);
}

PauliString pauli_from_label(const std::string& label) {
    if (label.empty() || label.size() > 64) {
        throw input_error("Pauli label must have between 1 and 64 characters, got \"" +
                          label + "\"");
    }
    PauliString p;
    p.n_qubits = static_cast<int>(label.size());
    for (int q = 0; q < p.n_qubits; ++q) {
        const std::uint64_t bit = std::uint64_t{1} << q;
        switch (label[static_cast<std::size_t>(q)]) {
        case 'I': break;
        case 'X': p.x_mask |= bit; break;
        case 'Y': p.x_mask |= bit; p.z_mask |= bit; break;
        case 'Z': p.z_mask |= bit; break;
        default:
            throw input_error("invalid Pauli character '" +
                              std::string(1, label[static_cast<std::size_t>(q)]) +
                              "' in label \"" + label + "\"");
        }
    }
    return p;
}

std::string pauli_to_label(const PauliString& p) {
    std::string label(static_cast<std::size_t>(p.n_qubits), 'I');
    for (int q = 0; q < p.n_qubits; ++q) {
        const std::uint64_t bit = std::uint64_t{1} << q;
        const bool x = p.x_mask & bit;
        const bool z = p.z_mask & bit;
        if (x && z) label[static_cast<std::size_t>(q)] = 'Y';
        else if (x) label[static_cast<std::size_t>(q)] = 'X';
        else if (z) label[static_cast<std::size_t>(q)] = 'Z';
    }
    return label;
}

PhasedPauli pauli_multiply(const PauliString& a, const PauliString& b) {
    if (a.n_qubits != b.n_qubits) {
        throw std::invalid_argument("Pauli product requires equal qubit counts");
    }
    PhasedPauli r;
    r.string.n_qubits = a.n_qubits;
    r.string.x_mask = a.x_mask ^ b.x_mask;
    r.string.z_mask = a.z_mask ^ b.z_mask;
    // i^ya * i^yb * (-1)^{za & xb crossings} = i^yc * i^phase
    const int ya = a.y_count();
    const int yb = b.y_count();
    const int yc = r.string.y_count();
    const int crossings = std::popcount(a.z_mask & b.x_mask);
    r.phase_exponent = ((ya + yb + 2 * crossings - yc) % 4 + 4) % 4;
    return r;
}

bool pauli_commutes(const PauliString& a, const PauliString& b) {
    if (a.n_qubits != b.n_qubits) {
        throw std::invalid_argument("commutation check requires equal qubit counts");
    }
    const int asym = std::popcount(a.x_mask & b.z_mask) +
                     std::popcount(a.z_mask & b.x_mask);
    return (asym % 2) == 0;
}

std::uint64_t reverse_qubit_bits(std::uint64_t mask, int n_qubits) {
    std::uint64_t out = 0;
    for (int q = 0; q < n_qubits; ++q) {
        if (mask & (std::uint64_t{1} << q)) {
            out |= std::uint64_t{1} << (n_qubits - 1 - q);
        }
    }
    return out;
}

void apply_pauli_into(const PauliString& p, const StateVector& v, StateVector& out) {
    const std::size_t dim = std::size_t{1} << p.n_qubits;
    if (v.size() != dim) {
        throw std::invalid_argument("state vector dimension does not match Pauli size");
    }
    out.assign(dim, {0.0, 0.0});
    const std::uint64_t xr = reverse_qubit_bits(p.x_mask, p.n_qubits);
    const std::uint64_t zr = reverse_qubit_bits(p.z_mask, p.n_qubits);
    const std::complex<double> lead = kPhase[p.y_count() % 4];
    for (std::size_t b = 0; b < dim; ++b) {
        const double sign = (std::popcount(b & zr) & 1) ? -1.0 : 1.0;
        out[b ^ xr] += lead * sign * v[b];
    }
}

StateVector apply_pauli(const PauliString& p, const StateVector& v) {
    StateVector out;
    apply_pauli_into(p, v, out);
    return out;
}

std::complex<double> pauli_expectation(const PauliString& p, const StateVector& v) {
    const std::size_t dim = std::size_t{1} << p.n_qubits;
    if (v.size() != dim) {
        throw std::invalid_argument("state vector dimension does not match Pauli size");
    }
    const std::uint64_t xr = reverse_qubit_bits(p.x_mask, p.n_qubits);
    const std::uint64_t zr = reverse_qubit_bits(p.z_mask, p.n_qubits);
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t b = 0; b < dim; ++b) {
        const double sign = (std::popcount(b & zr) & 1) ? -1.0 : 1.0;
        acc += std::conj(v[b ^ xr]) * sign * v[b];
    }
    return kPhase[p.y_count() % 4] * acc;
}

std::vector<std::complex<double>> pauli_dense_matrix(const PauliString& p) {
    if (p.n_qubits > kMaxDenseQubits) {
        throw std::invalid_argument("dense Pauli matrix limited to " +
                                    std::to_string(kMaxDenseQubits) + " qubits");
    }
    const std::size_t dim = std::size_t{1} << p.n_qubits;
    std::vector<std::complex<double>> m(dim * dim, {0.0, 0.0});
    const std::uint64_t xr = reverse_qubit_bits(p.x_mask, p.n_qubits);
    const std::uint64_t zr = reverse_qubit_bits(p.z_mask, p.n_qubits);
    const std::complex<double> lead = kPhase[p.y_count() % 4];
    for (std::size_t col = 0; col < dim; ++col) {
        const double sign = (std::popcount(col & zr) & 1) ? -1.0 : 1.0;
        m[(col ^ xr) * dim + col] = lead * sign;
    }
    return m;
}

} // namespace hsvqe
