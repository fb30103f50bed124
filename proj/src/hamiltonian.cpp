#include "hsvqe/hamiltonian.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

#include "hsvqe/errors.hpp"

namespace hsvqe {

std::string term_class_name(TermClass c) {
    switch (c) {
    case TermClass::Number: return "number";
    case TermClass::CoulombExchange: return "coulomb_exchange";
    case TermClass::Excitation: return "excitation";
    case TermClass::NumberExcitation: return "number_excitation";
    case TermClass::DoubleExcitation: return "double_excitation";
    case TermClass::Unknown: return "unknown";
    }
    throw std::logic_error("unreachable term class");
}

TermClass term_class_from_name(const std::string& name) {
    if (name == "number") return TermClass::Number;
    if (name == "coulomb_exchange") return TermClass::CoulombExchange;
    if (name == "excitation") return TermClass::Excitation;
    if (name == "number_excitation") return TermClass::NumberExcitation;
    if (name == "double_excitation") return TermClass::DoubleExcitation;
    if (name == "unknown") return TermClass::Unknown;
    throw input_error("unknown term class name \"" + name + "\"");
}

QubitHamiltonian merge_terms(const QubitHamiltonian& h) {
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t> seen;
    QubitHamiltonian out;
    out.n_qubits = h.n_qubits;
    for (const auto& t : h.terms) {
        const auto key = std::make_pair(t.string.x_mask, t.string.z_mask);
        auto it = seen.find(key);
        if (it == seen.end()) {
            seen.emplace(key, out.terms.size());
            out.terms.push_back(t);
        } else {
            out.terms[it->second].coefficient += t.coefficient;
        }
    }
    QubitHamiltonian kept;
    kept.n_qubits = h.n_qubits;
    for (const auto& t : out.terms) {
        if (std::abs(t.coefficient) >= kCoefficientDropThreshold) {
            kept.terms.push_back(t);
        }
    }
    return kept;
}

QubitHamiltonian prefix(const QubitHamiltonian& h, std::size_t count) {
    if (count > h.terms.size()) {
        throw std::invalid_argument("prefix length exceeds term count");
    }
    QubitHamiltonian out;
    out.n_qubits = h.n_qubits;
    out.terms.assign(h.terms.begin(), h.terms.begin() + static_cast<std::ptrdiff_t>(count));
    return out;
}

} // namespace hsvqe
