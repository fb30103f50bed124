#include "hsvqe/fcidump.hpp"

#include <algorithm>
#include <cctype>
#include <iostream>
#include <istream>
#include <sstream>
#include <string>

#include "hsvqe/errors.hpp"

namespace hsvqe {

namespace {

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    return s;
}

// Finds "KEY = <int>" in a namelist body, tolerating spaces and commas.
int namelist_int(const std::string& body, const std::string& key) {
    const std::string ubody = upper(body);
    std::size_t pos = 0;
    while ((pos = ubody.find(key, pos)) != std::string::npos) {
        const bool start_ok = pos == 0 || !std::isalnum(static_cast<unsigned char>(ubody[pos - 1]));
        std::size_t p = pos + key.size();
        while (p < ubody.size() && std::isspace(static_cast<unsigned char>(ubody[p]))) ++p;
        if (!start_ok || p >= ubody.size() || ubody[p] != '=') {
            pos += key.size();
            continue;
        }
        ++p;
        while (p < ubody.size() && std::isspace(static_cast<unsigned char>(ubody[p]))) ++p;
        std::size_t end = p;
        if (end < ubody.size() && (ubody[end] == '+' || ubody[end] == '-')) ++end;
        while (end < ubody.size() && std::isdigit(static_cast<unsigned char>(ubody[end]))) ++end;
        if (end == p || (end == p + 1 && !std::isdigit(static_cast<unsigned char>(ubody[p])))) {
            throw input_error("namelist key " + key + " has no integer value");
        }
        return std::stoi(body.substr(p, end - p));
    }
    throw input_error("namelist key " + key + " not found in header");
}

double parse_value(const std::string& token) {
    std::string t = token;
    for (auto& c : t) {
        if (c == 'D' || c == 'd') c = 'E';
    }
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(t, &pos);
    } catch (const std::exception&) {
        throw input_error("non-numeric integral value \"" + token + "\"");
    }
    if (pos != t.size()) {
        throw input_error("trailing characters in integral value \"" + token + "\"");
    }
    return v;
}

} // namespace

FermionIntegrals parse_fcidump(std::istream& in) {
    std::string line;
    // Header: a Fortran namelist opened by '&' and closed by &END or '/'.
    std::string header;
    bool header_done = false;
    bool header_started = false;
    while (!header_done && std::getline(in, line)) {
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (!header_started) {
            if (line[first] != '&') {
                throw input_error("integral file does not start with a namelist header");
            }
            header_started = true;
        }
        header += line;
        header += ' ';
        const std::string uline = upper(header);
        if (uline.find("&END") != std::string::npos ||
            uline.find('/') != std::string::npos) {
            header_done = true;
        }
    }
    if (!header_done) {
        throw input_error("namelist header is not terminated");
    }

    FermionIntegrals out;
    out.n_orbitals = namelist_int(header, "NORB");
    out.n_electrons = namelist_int(header, "NELEC");
    if (out.n_orbitals < 1 || out.n_orbitals > 32) {
        throw input_error("NORB must be between 1 and 32, got " +
                          std::to_string(out.n_orbitals));
    }
    if (out.n_electrons < 0 || out.n_electrons > 2 * out.n_orbitals) {
        throw input_error("NELEC out of range for " +
                          std::to_string(out.n_orbitals) + " orbitals");
    }

    const std::size_t n = static_cast<std::size_t>(out.n_orbitals);
    out.one_body.assign(n * n, 0.0);
    out.two_body.assign(n * n * n * n, 0.0);

    bool saw_core = false;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::string vtok;
        if (!(ss >> vtok)) continue;
        long i = 0, j = 0, k = 0, l = 0;
        if (!(ss >> i >> j >> k >> l)) {
            throw input_error("malformed integral record: \"" + line + "\"");
        }
        std::string extra;
        if (ss >> extra) {
            throw input_error("trailing fields in integral record: \"" + line + "\"");
        }
        const double v = parse_value(vtok);
        const long hi = out.n_orbitals;
        if (i < 0 || j < 0 || k < 0 || l < 0 || i > hi || j > hi || k > hi || l > hi) {
            throw input_error("orbital index out of range in record: \"" + line + "\"");
        }
        if (i == 0 && j == 0 && k == 0 && l == 0) {
            out.core_energy = v;
            saw_core = true;
        } else if (k == 0 && l == 0) {
            if (i == 0 || j == 0) {
                throw input_error("one-body record needs two nonzero indices: \"" +
                                  line + "\"");
            }
            const std::size_t p = static_cast<std::size_t>(i - 1);
            const std::size_t q = static_cast<std::size_t>(j - 1);
            out.one_body[p * n + q] = v;
            out.one_body[q * n + p] = v;
        } else {
            if (i == 0 || j == 0 || k == 0 || l == 0) {
                throw input_error("two-body record needs four nonzero indices: \"" +
                                  line + "\"");
            }
            const std::size_t p = static_cast<std::size_t>(i - 1);
            const std::size_t q = static_cast<std::size_t>(j - 1);
            const std::size_t r = static_cast<std::size_t>(k - 1);
            const std::size_t s = static_cast<std::size_t>(l - 1);
            const std::size_t idx[8][4] = {
                {p, q, r, s}, {q, p, r, s}, {p, q, s, r}, {q, p, s, r},
                {r, s, p, q}, {s, r, p, q}, {r, s, q, p}, {s, r, q, p},
            };
            for (const auto& t : idx) {
                out.two_body[((t[0] * n + t[1]) * n + t[2]) * n + t[3]] = v;
            }
        }
    }
    if (!saw_core) {
        std::cerr << "warning: integral file has no constant-shift record; using 0\n";
    }
    return out;
}

} // namespace hsvqe
