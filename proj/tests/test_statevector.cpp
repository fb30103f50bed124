#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "hsvqe/ansatz.hpp"
#include "hsvqe/statevector.hpp"

#include "test_helpers.hpp"

using namespace hsvqe;
using testutil::cd;

namespace {

// Dense 2^n matrix acting with a 4x4 or 2x2 gate on named qubits, qubit 0
// being the leftmost Kronecker factor.
testutil::Matrix embed_ry(int n, int qubit, double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const testutil::Matrix ry = {cd{c, 0}, cd{-s, 0}, cd{s, 0}, cd{c, 0}};
    testutil::Matrix m = qubit == 0 ? ry : testutil::identity(2);
    std::size_t dim = 2;
    for (int q = 1; q < n; ++q) {
        m = testutil::kron(m, dim, q == qubit ? ry : testutil::identity(2), 2);
        dim *= 2;
    }
    return m;
}

} // namespace

TEST_CASE("basis_state sets exactly one amplitude") {
    const StateVector v = basis_state(3, 5);
    CHECK(v.size() == 8);
    for (std::size_t i = 0; i < v.size(); ++i) {
        CHECK(v[i] == (i == 5 ? cd{1.0, 0.0} : cd{0.0, 0.0}));
    }
    CHECK_THROWS(basis_state(0, 0));
    CHECK_THROWS(basis_state(64, 0));
    CHECK_THROWS(basis_state(2, 4));
}

TEST_CASE("single-qubit Ry rotates |0> onto the Bloch great circle") {
    for (double theta : {0.0, 0.3, 1.0, 3.1, -2.2}) {
        StateVector v = basis_state(1, 0);
        apply_ry(v, 1, 0, theta);
        CHECK(v[0].real() == doctest::Approx(std::cos(theta / 2)).epsilon(1e-14));
        CHECK(v[1].real() == doctest::Approx(std::sin(theta / 2)).epsilon(1e-14));
        CHECK(v[0].imag() == 0.0);
        CHECK(v[1].imag() == 0.0);
    }
}

TEST_CASE("Ry on any qubit of a register matches the dense embedding") {
    std::mt19937_64 eng(3);
    const int n = 3;
    for (int qubit = 0; qubit < n; ++qubit) {
        const double theta = 0.7 + 0.9 * qubit;
        const auto v0 = testutil::random_state(8, eng);
        StateVector v = v0;
        apply_ry(v, n, qubit, theta);
        const auto expected = testutil::matvec(embed_ry(n, qubit, theta), v0);
        CHECK(testutil::max_abs_diff(v, expected) < 1e-14);
    }
    StateVector v = basis_state(2, 0);
    CHECK_THROWS(apply_ry(v, 2, 2, 0.1));
    CHECK_THROWS(apply_ry(v, 2, -1, 0.1));
}

TEST_CASE("CNOT permutes basis states with qubit 0 as the high bit") {
    // control 0, target 1 on two qubits: |10> -> |11>, |11> -> |10>.
    for (std::uint64_t b = 0; b < 4; ++b) {
        StateVector v = basis_state(2, b);
        apply_cnot(v, 2, 0, 1);
        const std::uint64_t expect = (b & 2) ? (b ^ 1) : b;
        CHECK(v[expect] == cd{1.0, 0.0});
    }
    // Reversed roles: control 1, target 0.
    for (std::uint64_t b = 0; b < 4; ++b) {
        StateVector v = basis_state(2, b);
        apply_cnot(v, 2, 1, 0);
        const std::uint64_t expect = (b & 1) ? (b ^ 2) : b;
        CHECK(v[expect] == cd{1.0, 0.0});
    }
    StateVector v = basis_state(2, 0);
    CHECK_THROWS(apply_cnot(v, 2, 0, 0));
    CHECK_THROWS(apply_cnot(v, 2, 0, 2));
}

TEST_CASE("random rotation-entangler sequences preserve the norm") {
    std::mt19937_64 eng(41);
    std::uniform_real_distribution<double> angle(-6.3, 6.3);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(eng() % 4); // 2..5 qubits
        StateVector v = testutil::random_state(std::size_t{1} << n, eng);
        for (int step = 0; step < 12; ++step) {
            if (eng() % 2 == 0) {
                apply_ry(v, n, static_cast<int>(eng() % n), angle(eng));
            } else {
                const int c = static_cast<int>(eng() % n);
                const int t = (c + 1 + static_cast<int>(eng() % (n - 1))) % n;
                apply_cnot(v, n, c, t);
            }
        }
        CHECK(std::abs(state_norm(v) - 1.0) < 1e-12);
    }
}

TEST_CASE("expectation sums terms against a dense matrix oracle") {
    std::mt19937_64 eng(9);
    QubitHamiltonian h;
    h.n_qubits = 3;
    h.terms.push_back({0.75, pauli_from_label("ZII"), TermClass::Unknown});
    h.terms.push_back({-0.25, pauli_from_label("XYZ"), TermClass::Unknown});
    h.terms.push_back({0.5, pauli_from_label("IIY"), TermClass::Unknown});
    h.terms.push_back({1.25, pauli_from_label("III"), TermClass::Unknown});

    testutil::Matrix dense(64, cd{0.0, 0.0});
    for (const auto& t : h.terms) {
        const auto m = testutil::pauli_label_matrix(pauli_to_label(t.string));
        for (std::size_t i = 0; i < dense.size(); ++i) dense[i] += t.coefficient * m[i];
    }

    for (int trial = 0; trial < 10; ++trial) {
        const auto v = testutil::random_state(8, eng);
        const auto hv = testutil::matvec(dense, v);
        cd expected{0.0, 0.0};
        for (std::size_t i = 0; i < v.size(); ++i) expected += std::conj(v[i]) * hv[i];
        CHECK(expectation(h, v) == doctest::Approx(expected.real()).epsilon(1e-13));
    }
}

TEST_CASE("repeated expectation of the same state is bit-identical") {
    std::mt19937_64 eng(77);
    QubitHamiltonian h;
    h.n_qubits = 4;
    for (const char* label : {"XXYY", "ZZII", "IXIX", "YZYZ", "IIII", "XIZI"}) {
        h.terms.push_back({std::uniform_real_distribution<double>(-1, 1)(eng),
                           pauli_from_label(label), TermClass::Unknown});
    }
    const auto v = testutil::random_state(16, eng);
    const double first = expectation(h, v);
    for (int i = 0; i < 5; ++i) {
        CHECK(expectation(h, v) == first);
    }
}

TEST_CASE("entangler layouts enumerate the documented CNOT pairs") {
    using P = std::pair<int, int>;
    CHECK(entangler_pairs(3, Entangler::Full) ==
          std::vector<P>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(entangler_pairs(4, Entangler::Full) ==
          std::vector<P>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(entangler_pairs(3, Entangler::Linear) == std::vector<P>{{0, 1}, {1, 2}});
    CHECK(entangler_pairs(1, Entangler::Full).empty());
}

TEST_CASE("circuit parameter budget is qubits times layers") {
    AnsatzCircuit c;
    c.n_qubits = 5;
    c.depth = 3;
    CHECK(c.parameter_count() == 20);
    c.depth = 0;
    CHECK(c.parameter_count() == 5);
    CHECK_THROWS(run_circuit(c, std::vector<double>(4, 0.0)));
}

TEST_CASE("depth-0 circuit is one rotation row applied to the initial state") {
    AnsatzCircuit c;
    c.n_qubits = 2;
    c.depth = 0;
    c.initial_state = 0;
    const std::vector<double> theta = {0.4, 1.1};
    const auto v = run_circuit(c, theta);

    StateVector expected = basis_state(2, 0);
    apply_ry(expected, 2, 0, theta[0]);
    apply_ry(expected, 2, 1, theta[1]);
    CHECK(testutil::max_abs_diff(v, expected) == 0.0);
}

TEST_CASE("depth-1 full-entangler circuit matches a hand-applied gate list") {
    AnsatzCircuit c;
    c.n_qubits = 3;
    c.depth = 1;
    c.entangler = Entangler::Full;
    c.initial_state = 5;
    const std::vector<double> theta = {0.3, -0.8, 1.7, 0.9, 2.4, -1.2};
    const auto v = run_circuit(c, theta);

    StateVector expected = basis_state(3, 5);
    for (int q = 0; q < 3; ++q) apply_ry(expected, 3, q, theta[static_cast<std::size_t>(q)]);
    apply_cnot(expected, 3, 0, 1);
    apply_cnot(expected, 3, 0, 2);
    apply_cnot(expected, 3, 1, 2);
    for (int q = 0; q < 3; ++q) apply_ry(expected, 3, q, theta[static_cast<std::size_t>(3 + q)]);
    CHECK(testutil::max_abs_diff(v, expected) == 0.0);
}

TEST_CASE("energy objective evaluates the circuit and counts calls") {
    AnsatzCircuit c;
    c.n_qubits = 2;
    c.depth = 1;
    c.entangler = Entangler::Linear;

    QubitHamiltonian h;
    h.n_qubits = 2;
    h.terms.push_back({1.0, pauli_from_label("ZI"), TermClass::Unknown});
    h.terms.push_back({0.5, pauli_from_label("IZ"), TermClass::Unknown});

    EnergyObjective f(c, h);
    CHECK(f.dimension() == 4);
    CHECK(f.evaluation_count() == 0);

    const std::vector<double> theta = {0.2, 0.4, 0.6, 0.8};
    const double e = f(theta);
    CHECK(e == expectation(h, run_circuit(c, theta)));
    CHECK(f.evaluation_count() == 1);

    EnergyObjective copy = f;
    copy(theta);
    CHECK(f.evaluation_count() == 2); // copies share the counter
    f.reset_evaluation_count();
    CHECK(copy.evaluation_count() == 0);

    QubitHamiltonian mismatched;
    mismatched.n_qubits = 3;
    CHECK_THROWS(EnergyObjective(c, mismatched));
}
