#include "hsvqe/exact.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace hsvqe {

namespace {

const std::complex<double> kPhase[4] = {
    {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

Eigen::MatrixXcd dense_hamiltonian(const QubitHamiltonian& h) {
    if (h.n_qubits < 1 || h.n_qubits > kMaxDenseQubits) {
        throw std::invalid_argument("dense solve limited to 1.." +
                                    std::to_string(kMaxDenseQubits) + " qubits");
    }
    const std::size_t dim = std::size_t{1} << h.n_qubits;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                static_cast<Eigen::Index>(dim));
    for (const auto& t : h.terms) {
        const std::uint64_t xr = reverse_qubit_bits(t.string.x_mask, h.n_qubits);
        const std::uint64_t zr = reverse_qubit_bits(t.string.z_mask, h.n_qubits);
        const std::complex<double> lead =
            t.coefficient * kPhase[t.string.y_count() % 4];
        for (std::size_t col = 0; col < dim; ++col) {
            const double sign = (std::popcount(col & zr) & 1) ? -1.0 : 1.0;
            m(static_cast<Eigen::Index>(col ^ xr), static_cast<Eigen::Index>(col)) +=
                lead * sign;
        }
    }
    return m;
}

void check_hermitian(const Eigen::MatrixXcd& m) {
    const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (asym > kEigenResidualTolerance) {
        throw std::runtime_error("assembled matrix is not Hermitian (asymmetry " +
                                 std::to_string(asym) + ")");
    }
}

void check_residual(double residual, double eigenvalue) {
    if (residual > kEigenResidualTolerance * std::max(1.0, std::abs(eigenvalue))) {
        throw std::runtime_error("eigenpair residual " + std::to_string(residual) +
                                 " exceeds tolerance");
    }
}

} // namespace

SpectrumResult ground_state(const QubitHamiltonian& h, bool full_spectrum) {
    const Eigen::MatrixXcd m = dense_hamiltonian(h);
    check_hermitian(m);
    const Eigen::MatrixXcd sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigendecomposition failed to converge");
    }

    SpectrumResult r;
    r.ground_energy = solver.eigenvalues()(0);
    const Eigen::VectorXcd v = solver.eigenvectors().col(0);
    r.residual = (m * v - r.ground_energy * v).norm();
    check_residual(r.residual, r.ground_energy);
    r.ground_vector.assign(v.data(), v.data() + v.size());
    if (full_spectrum) {
        r.eigenvalues.assign(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + solver.eigenvalues().size());
    }
    return r;
}

SpectrumResult projected_ground_state(const QubitHamiltonian& h,
                                      const std::map<int, int>& fixed_qubits) {
    if (h.n_qubits < 1 || h.n_qubits > kMaxDenseQubits) {
        throw std::invalid_argument("dense solve limited to 1.." +
                                    std::to_string(kMaxDenseQubits) + " qubits");
    }
    std::uint64_t pin_mask = 0, pin_value = 0;
    for (const auto& [q, bit] : fixed_qubits) {
        if (q < 0 || q >= h.n_qubits) {
            throw std::invalid_argument("pinned qubit index out of range");
        }
        if (bit != 0 && bit != 1) {
            throw std::invalid_argument("pinned qubit value must be 0 or 1");
        }
        const std::uint64_t b = std::uint64_t{1} << (h.n_qubits - 1 - q);
        pin_mask |= b;
        if (bit) pin_value |= b;
    }

    const std::size_t dim = std::size_t{1} << h.n_qubits;
    std::vector<std::uint64_t> kept;
    std::unordered_map<std::uint64_t, std::size_t> pos;
    for (std::uint64_t b = 0; b < dim; ++b) {
        if ((b & pin_mask) == pin_value) {
            pos.emplace(b, kept.size());
            kept.push_back(b);
        }
    }
    if (kept.empty()) {
        throw std::invalid_argument("pinning leaves an empty subspace");
    }

    const Eigen::Index sub = static_cast<Eigen::Index>(kept.size());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(sub, sub);
    for (const auto& t : h.terms) {
        const std::uint64_t xr = reverse_qubit_bits(t.string.x_mask, h.n_qubits);
        const std::uint64_t zr = reverse_qubit_bits(t.string.z_mask, h.n_qubits);
        const std::complex<double> lead =
            t.coefficient * kPhase[t.string.y_count() % 4];
        for (std::size_t c = 0; c < kept.size(); ++c) {
            const std::uint64_t col = kept[c];
            const auto it = pos.find(col ^ xr);
            if (it == pos.end()) continue;
            const double sign = (std::popcount(col & zr) & 1) ? -1.0 : 1.0;
            m(static_cast<Eigen::Index>(it->second), static_cast<Eigen::Index>(c)) +=
                lead * sign;
        }
    }
    check_hermitian(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(0.5 * (m + m.adjoint()));
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigendecomposition failed to converge");
    }

    SpectrumResult r;
    r.ground_energy = solver.eigenvalues()(0);
    const Eigen::VectorXcd v = solver.eigenvectors().col(0);
    r.residual = (m * v - r.ground_energy * v).norm();
    check_residual(r.residual, r.ground_energy);
    r.ground_vector.assign(dim, {0.0, 0.0});
    for (std::size_t c = 0; c < kept.size(); ++c) {
        r.ground_vector[kept[c]] = v(static_cast<Eigen::Index>(c));
    }
    return r;
}

std::vector<CoefficientEntry> coefficient_distribution(const QubitHamiltonian& h) {
    std::vector<CoefficientEntry> out;
    out.reserve(h.terms.size());
    for (const auto& t : h.terms) {
        out.push_back({std::abs(t.coefficient), pauli_to_label(t.string), t.term_class});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.abs_coefficient != b.abs_coefficient) {
            return a.abs_coefficient > b.abs_coefficient;
        }
        return a.label < b.label;
    });
    return out;
}

} // namespace hsvqe
