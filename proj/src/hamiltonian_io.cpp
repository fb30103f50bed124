#include "hsvqe/hamiltonian_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hsvqe/errors.hpp"

namespace hsvqe {

namespace {

std::string format_coefficient(double c) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", c);
    return buf;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace

void serialize_hamiltonian(std::ostream& out, const QubitHamiltonian& h,
                           const MetaList& meta) {
    out << "# qubits: " << h.n_qubits << "\n";
    for (const auto& [key, value] : meta) {
        out << "# " << key << ": " << value << "\n";
    }
    bool any_class = false;
    for (const auto& t : h.terms) {
        if (t.term_class != TermClass::Unknown) { any_class = true; break; }
    }
    if (any_class) {
        out << "# classes:";
        for (const auto& t : h.terms) {
            out << ' ' << term_class_name(t.term_class);
        }
        out << "\n";
    }
    for (const auto& t : h.terms) {
        out << format_coefficient(t.coefficient) << ' '
            << pauli_to_label(t.string) << "\n";
    }
}

QubitHamiltonian parse_hamiltonian(std::istream& in, MetaList* meta_out) {
    QubitHamiltonian raw;
    std::vector<std::string> class_names;
    bool saw_qubits = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = trim(line);
        if (body.empty()) continue;
        if (body[0] == '#') {
            const std::string comment = trim(body.substr(1));
            const auto colon = comment.find(':');
            if (colon == std::string::npos) continue;
            const std::string key = trim(comment.substr(0, colon));
            const std::string value = trim(comment.substr(colon + 1));
            if (key == "qubits") {
                if (saw_qubits) {
                    throw input_error("line " + std::to_string(line_no) +
                                      ": repeated qubits header");
                }
                try {
                    raw.n_qubits = std::stoi(value);
                } catch (const std::exception&) {
                    throw input_error("line " + std::to_string(line_no) +
                                      ": invalid qubit count \"" + value + "\"");
                }
                if (raw.n_qubits < 1 || raw.n_qubits > 64) {
                    throw input_error("qubit count must be 1..64, got " + value);
                }
                saw_qubits = true;
            } else if (key == "classes") {
                std::istringstream ss(value);
                std::string name;
                while (ss >> name) class_names.push_back(name);
            } else if (meta_out) {
                meta_out->emplace_back(key, value);
            }
            continue;
        }
        if (!saw_qubits) {
            throw input_error("line " + std::to_string(line_no) +
                              ": term before the qubits header");
        }
        std::istringstream ss(body);
        std::string coef_tok, label, extra;
        if (!(ss >> coef_tok >> label) || (ss >> extra)) {
            throw input_error("line " + std::to_string(line_no) +
                              ": expected \"coefficient LABEL\"");
        }
        double coef = 0.0;
        std::size_t used = 0;
        try {
            coef = std::stod(coef_tok, &used);
        } catch (const std::exception&) {
            throw input_error("line " + std::to_string(line_no) +
                              ": invalid coefficient \"" + coef_tok + "\"");
        }
        if (used != coef_tok.size() || !std::isfinite(coef)) {
            throw input_error("line " + std::to_string(line_no) +
                              ": invalid coefficient \"" + coef_tok + "\"");
        }
        if (static_cast<int>(label.size()) != raw.n_qubits) {
            throw input_error("line " + std::to_string(line_no) + ": label \"" +
                              label + "\" does not have " +
                              std::to_string(raw.n_qubits) + " characters");
        }
        HamiltonianTerm t;
        t.coefficient = coef;
        t.string = pauli_from_label(label);
        raw.terms.push_back(t);
    }
    if (!saw_qubits) {
        throw input_error("missing \"# qubits: n\" header");
    }
    if (!class_names.empty()) {
        if (class_names.size() != raw.terms.size()) {
            throw input_error("classes header lists " +
                              std::to_string(class_names.size()) + " entries for " +
                              std::to_string(raw.terms.size()) + " terms");
        }
        for (std::size_t i = 0; i < raw.terms.size(); ++i) {
            raw.terms[i].term_class = term_class_from_name(class_names[i]);
        }
    }
    return merge_terms(raw);
}

QubitHamiltonian load_hamiltonian_file(const std::string& path, MetaList* meta_out) {
    std::ifstream in(path);
    if (!in) {
        throw input_error("cannot open \"" + path + "\"");
    }
    return parse_hamiltonian(in, meta_out);
}

void save_hamiltonian_file(const std::string& path, const QubitHamiltonian& h,
                           const MetaList& meta) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw input_error("cannot write \"" + path + "\"");
    }
    serialize_hamiltonian(out, h, meta);
    if (!out) {
        throw input_error("write to \"" + path + "\" failed");
    }
}

} // namespace hsvqe
