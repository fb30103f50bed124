#include "hsvqe/encodings.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "hsvqe/errors.hpp"

namespace hsvqe {

namespace {

const std::complex<double> kPhase[4] = {
    {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

std::uint64_t bits_of(const std::vector<int>& set) {
    std::uint64_t m = 0;
    for (int q : set) m |= std::uint64_t{1} << q;
    return m;
}

void check_mode_count(int n_modes) {
    if (n_modes < 1 || n_modes > 64) {
        throw input_error("encodings support 1..64 modes, got " +
                          std::to_string(n_modes));
    }
}

} // namespace

std::vector<int> occupation_set(int j) {
    std::vector<int> s;
    int idx = j + 1;
    s.push_back(idx - 1);
    const int parent = idx & (idx - 1);
    idx -= 1;
    while (idx != parent) {
        s.push_back(idx - 1);
        idx &= idx - 1;
    }
    return s;
}

std::vector<int> parity_set(int j) {
    std::vector<int> s;
    int idx = j;
    while (idx > 0) {
        s.push_back(idx - 1);
        idx &= idx - 1;
    }
    return s;
}

std::vector<int> update_set(int j, int n_modes) {
    std::vector<int> s;
    int idx = j + 1;
    idx += idx & (-idx);
    while (idx <= n_modes) {
        s.push_back(idx - 1);
        idx += idx & (-idx);
    }
    return s;
}

std::vector<MajoranaPair> jw_mode_operators(int n_modes) {
    check_mode_count(n_modes);
    std::vector<MajoranaPair> out(static_cast<std::size_t>(n_modes));
    for (int j = 0; j < n_modes; ++j) {
        const std::uint64_t xj = std::uint64_t{1} << j;
        const std::uint64_t below = xj - 1;
        out[static_cast<std::size_t>(j)].c = {n_modes, xj, below};
        out[static_cast<std::size_t>(j)].d = {n_modes, xj, below | xj};
    }
    return out;
}

std::vector<MajoranaPair> bk_mode_operators(int n_modes) {
    check_mode_count(n_modes);
    std::vector<MajoranaPair> out(static_cast<std::size_t>(n_modes));
    for (int j = 0; j < n_modes; ++j) {
        const std::uint64_t xj = std::uint64_t{1} << j;
        const std::uint64_t update = bits_of(update_set(j, n_modes));
        const std::uint64_t parity = bits_of(parity_set(j));
        const std::uint64_t occupation = bits_of(occupation_set(j));
        out[static_cast<std::size_t>(j)].c = {n_modes, update | xj, parity};
        out[static_cast<std::size_t>(j)].d = {n_modes, update | xj,
                                              (parity & ~occupation) | xj};
    }
    return out;
}

QubitHamiltonian encode(const FermionOperatorSum& op, Encoding enc) {
    check_mode_count(op.n_modes);
    const auto majoranas = enc == Encoding::JordanWigner
                               ? jw_mode_operators(op.n_modes)
                               : bk_mode_operators(op.n_modes);

    using Key = std::pair<std::uint64_t, std::uint64_t>;
    std::map<Key, std::complex<double>> total;
    std::map<Key, std::array<double, 6>> mass;

    for (const auto& term : op.terms) {
        TermClass cls = TermClass::Unknown;
        try {
            cls = classify_term(term);
        } catch (const input_error&) {
        }

        std::map<Key, std::complex<double>> states;
        states[{0, 0}] = term.coefficient;
        for (const auto& o : term.ops) {
            if (o.mode < 0 || o.mode >= op.n_modes) {
                throw input_error("mode index out of range in operator sum");
            }
            const auto& mj = majoranas[static_cast<std::size_t>(o.mode)];
            // a+ = (c - i d)/2, a = (c + i d)/2
            const std::complex<double> wc{0.5, 0.0};
            const std::complex<double> wd = o.dagger ? std::complex<double>{0.0, -0.5}
                                                     : std::complex<double>{0.0, 0.5};
            std::map<Key, std::complex<double>> next;
            for (const auto& [key, amp] : states) {
                const PauliString cur{op.n_modes, key.first, key.second};
                const PhasedPauli pc = pauli_multiply(cur, mj.c);
                next[{pc.string.x_mask, pc.string.z_mask}] +=
                    amp * wc * kPhase[pc.phase_exponent];
                const PhasedPauli pd = pauli_multiply(cur, mj.d);
                next[{pd.string.x_mask, pd.string.z_mask}] +=
                    amp * wd * kPhase[pd.phase_exponent];
            }
            states = std::move(next);
        }
        for (const auto& [key, amp] : states) {
            if (amp == std::complex<double>{0.0, 0.0}) continue;
            total[key] += amp;
            mass[key][static_cast<std::size_t>(cls)] += std::abs(amp);
        }
    }

    QubitHamiltonian h;
    h.n_qubits = op.n_modes;
    for (const auto& [key, amp] : total) {
        if (std::abs(amp.imag()) > kImagResidueTolerance) {
            throw input_error("encoded operator is not Hermitian: string " +
                              pauli_to_label({op.n_modes, key.first, key.second}) +
                              " has imaginary coefficient " +
                              std::to_string(amp.imag()));
        }
        if (std::abs(amp.real()) < kCoefficientDropThreshold) continue;
        HamiltonianTerm t;
        t.coefficient = amp.real();
        t.string = {op.n_modes, key.first, key.second};
        if (t.string.is_identity()) {
            t.term_class = TermClass::Number;
        } else {
            const auto& m = mass.at(key);
            std::size_t best = static_cast<std::size_t>(TermClass::Unknown);
            double best_mass = 0.0;
            for (std::size_t c = 0; c < m.size(); ++c) {
                if (m[c] > best_mass) {
                    best_mass = m[c];
                    best = c;
                }
            }
            t.term_class = static_cast<TermClass>(best);
        }
        h.terms.push_back(t);
    }
    return h;
}

QubitHamiltonian jordan_wigner(const FermionOperatorSum& op) {
    return encode(op, Encoding::JordanWigner);
}

QubitHamiltonian bravyi_kitaev(const FermionOperatorSum& op) {
    return encode(op, Encoding::BravyiKitaev);
}

std::uint64_t occupied_modes_to_state(const std::vector<int>& occupied_modes,
                                      Encoding enc, int n_modes) {
    check_mode_count(n_modes);
    std::vector<int> occ(static_cast<std::size_t>(n_modes), 0);
    for (int m : occupied_modes) {
        if (m < 0 || m >= n_modes) {
            throw input_error("occupied mode " + std::to_string(m) + " out of range");
        }
        if (occ[static_cast<std::size_t>(m)]) {
            throw input_error("occupied mode " + std::to_string(m) + " listed twice");
        }
        occ[static_cast<std::size_t>(m)] = 1;
    }

    std::vector<int> qubit(static_cast<std::size_t>(n_modes), 0);
    if (enc == Encoding::JordanWigner) {
        qubit = occ;
    } else {
        // occupation_set(j) decodes n_j from qubit values; the set always
        // contains j itself plus smaller indices, so the system solves
        // forward in j.
        for (int j = 0; j < n_modes; ++j) {
            int parity = occ[static_cast<std::size_t>(j)];
            for (int k : occupation_set(j)) {
                if (k != j) parity ^= qubit[static_cast<std::size_t>(k)];
            }
            qubit[static_cast<std::size_t>(j)] = parity;
        }
    }

    std::uint64_t index = 0;
    for (int j = 0; j < n_modes; ++j) {
        if (qubit[static_cast<std::size_t>(j)]) {
            index |= std::uint64_t{1} << (n_modes - 1 - j);
        }
    }
    return index;
}

std::uint64_t hf_occupation_to_computational_state(int n_electrons, Encoding enc,
                                                   int n_modes) {
    if (n_electrons < 0 || n_electrons > n_modes) {
        throw input_error("electron count out of range for " +
                          std::to_string(n_modes) + " modes");
    }
    std::vector<int> occupied;
    for (int j = 0; j < n_electrons; ++j) occupied.push_back(j);
    return occupied_modes_to_state(occupied, enc, n_modes);
}

} // namespace hsvqe
