#ifndef HSVQE_FCIDUMP_HPP
#define HSVQE_FCIDUMP_HPP

#include <iosfwd>
#include <vector>

namespace hsvqe {

// Molecular integrals over spatial orbitals, chemist notation.
// one_body(p,q) = h_pq, two_body(p,q,r,s) = (pq|rs), all 0-based.
struct FermionIntegrals {
    int n_orbitals = 0;
    int n_electrons = 0;
    double core_energy = 0.0;
    std::vector<double> one_body; // n^2, row-major
    std::vector<double> two_body; // n^4

    double h1(int p, int q) const {
        return one_body[static_cast<std::size_t>(p) * n_orbitals + q];
    }
    double eri(int p, int q, int r, int s) const {
        const std::size_t n = static_cast<std::size_t>(n_orbitals);
        return two_body[((static_cast<std::size_t>(p) * n + q) * n + r) * n + s];
    }
};

// Reads the FCIDUMP interchange format: a namelist header carrying NORB and
// NELEC, then one record per line, "value i j k l" with 1-based indices.
// i=j=k=l=0 is the constant shift, k=l=0 a one-body element, anything else a
// two-body element stored under full 8-fold permutation symmetry.  Fortran
// D exponents are accepted.
FermionIntegrals parse_fcidump(std::istream& in);

} // namespace hsvqe

#endif
