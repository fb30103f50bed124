#ifndef HSVQE_ERRORS_HPP
#define HSVQE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hsvqe {

// Malformed or inconsistent user input (files, labels, CLI values).
// The CLI maps this to exit code 1; unexpected internal failures map to 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace hsvqe

#endif
