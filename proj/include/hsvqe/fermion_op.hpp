#ifndef HSVQE_FERMION_OP_HPP
#define HSVQE_FERMION_OP_HPP

#include <utility>
#include <vector>

#include "hsvqe/fcidump.hpp"
#include "hsvqe/hamiltonian.hpp"

namespace hsvqe {

struct LadderOp {
    int mode = 0;
    bool dagger = false;

    friend bool operator==(const LadderOp&, const LadderOp&) = default;
};

// A product of ladder operators times a real coefficient; an empty product
// is a constant.
struct FermionTerm {
    double coefficient = 0.0;
    std::vector<LadderOp> ops;
};

struct FermionOperatorSum {
    int n_modes = 0;
    std::vector<FermionTerm> terms;
};

enum class SpinOrder { Interleaved, Blocked };

// Spin-orbital modes covering the given spatial orbitals, both spins.
std::vector<int> spatial_to_spin_modes(const std::vector<int>& spatial,
                                       SpinOrder order, int n_spatial);

// Splits a list of frozen spatial orbitals into (doubly occupied, removed
// virtual) halves according to the closed-shell filling of n_electrons.
std::pair<std::vector<int>, std::vector<int>>
split_frozen_by_occupation(const std::vector<int>& frozen_spatial, int n_electrons);

// Rewrites the sum with every term in canonical normal order: all creation
// operators first with strictly decreasing modes, then all annihilation
// operators with strictly decreasing modes.  Equal terms are merged and
// negligible coefficients dropped.
FermionOperatorSum normal_ordered(const FermionOperatorSum& op);

// Second-quantized molecular Hamiltonian over 2 * n_orbitals spin-orbital
// modes, in canonical normal order.
FermionOperatorSum build_fermion_hamiltonian(const FermionIntegrals& integrals,
                                             SpinOrder order);

// Projects the operator onto the sector where frozen_occupied modes hold one
// fermion each and removed_virtual modes are empty, then relabels the
// remaining modes densely.  Input must be in canonical normal order.
FermionOperatorSum freeze_orbitals(const FermionOperatorSum& op,
                                   const std::vector<int>& frozen_occupied,
                                   const std::vector<int>& removed_virtual);

// Structural class of a canonical normal-ordered term.
TermClass classify_term(const FermionTerm& term);

} // namespace hsvqe

#endif
