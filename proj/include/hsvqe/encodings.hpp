#ifndef HSVQE_ENCODINGS_HPP
#define HSVQE_ENCODINGS_HPP

#include <cstdint>
#include <vector>

#include "hsvqe/fermion_op.hpp"
#include "hsvqe/hamiltonian.hpp"
#include "hsvqe/pauli.hpp"

namespace hsvqe {

enum class Encoding { JordanWigner, BravyiKitaev };

// Majorana components of mode j: c_j = a_j + a+_j and d_j = i(a_j - a+_j),
// so a+_j = (c_j - i d_j)/2 and a_j = (c_j + i d_j)/2.
struct MajoranaPair {
    PauliString c;
    PauliString d;
};

std::vector<MajoranaPair> jw_mode_operators(int n_modes);
std::vector<MajoranaPair> bk_mode_operators(int n_modes);

// Index sets of the binary-tree encoding, all 0-based.
std::vector<int> occupation_set(int j);
std::vector<int> parity_set(int j);
std::vector<int> update_set(int j, int n_modes);

QubitHamiltonian encode(const FermionOperatorSum& op, Encoding enc);
QubitHamiltonian jordan_wigner(const FermionOperatorSum& op);
QubitHamiltonian bravyi_kitaev(const FermionOperatorSum& op);

// Computational-basis index of the product state carrying one fermion in
// each listed mode, under the given encoding's occupation bookkeeping.
std::uint64_t occupied_modes_to_state(const std::vector<int>& occupied_modes,
                                      Encoding enc, int n_modes);

// Closed-shell reference with the n_electrons lowest modes occupied; valid
// when the mode order fills lowest-first (interleaved spin order).
std::uint64_t hf_occupation_to_computational_state(int n_electrons, Encoding enc,
                                                   int n_modes);

} // namespace hsvqe

#endif
