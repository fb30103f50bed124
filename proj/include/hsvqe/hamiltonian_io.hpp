#ifndef HSVQE_HAMILTONIAN_IO_HPP
#define HSVQE_HAMILTONIAN_IO_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hsvqe/hamiltonian.hpp"

namespace hsvqe {

using MetaList = std::vector<std::pair<std::string, std::string>>;

// Text format, LF line endings, ASCII:
//   # qubits: 4
//   # <key>: <value>        (optional metadata lines)
//   # classes: <name...>    (optional, one name per body line)
//   <coefficient> <LABEL>
// Coefficients are written with enough digits to reparse bit-identically.
void serialize_hamiltonian(std::ostream& out, const QubitHamiltonian& h,
                           const MetaList& meta = {});

// Inverse of serialize_hamiltonian.  Duplicate strings merge into the first
// occurrence.  Metadata lines land in *meta_out when given.
QubitHamiltonian parse_hamiltonian(std::istream& in, MetaList* meta_out = nullptr);

QubitHamiltonian load_hamiltonian_file(const std::string& path,
                                       MetaList* meta_out = nullptr);
void save_hamiltonian_file(const std::string& path, const QubitHamiltonian& h,
                           const MetaList& meta = {});

} // namespace hsvqe

#endif
