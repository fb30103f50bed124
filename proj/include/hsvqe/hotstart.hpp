#ifndef HSVQE_HOTSTART_HPP
#define HSVQE_HOTSTART_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hsvqe/ansatz.hpp"
#include "hsvqe/hamiltonian.hpp"
#include "hsvqe/optimizer.hpp"

namespace hsvqe {

enum class OrderingTag { Descending, Ascending, Random, FileOrder, ClassBatched };

std::string ordering_name(OrderingTag t);
OrderingTag ordering_from_name(const std::string& name);

struct OrderingStrategy {
    OrderingTag tag = OrderingTag::Descending;
    std::uint64_t seed = 0; // consumed by the random ordering only
};

// Reorders terms without changing the operator sum.  Descending/ascending
// sort on |coefficient| with label tie-breaks; random applies a seeded
// shuffle; class_batched groups by term class, largest coefficients first
// within each class.
QubitHamiltonian sort_terms(const QubitHamiltonian& h, const OrderingStrategy& s);

// Cumulative term counts closing each class group of a class-batched
// ordering; the last entry equals the term count.
std::vector<std::size_t> class_batches(const QubitHamiltonian& ordered);

// 1, 2, ..., n: one new term per stage.
std::vector<std::size_t> per_term_schedule(std::size_t n_terms);

struct HotStartSchedule {
    OrderingStrategy ordering;
    std::vector<std::size_t> boundaries; // strictly increasing, ends at N
    bool carry_hessian = false;
};

struct StageRecord {
    int stage = 0;               // 1-based
    std::size_t prefix_size = 0;
    double energy_on_prefix = 0.0;
    double energy_on_full = 0.0;
    long long cumulative_calls = 0;
    OptStatus status = OptStatus::MaxIterations;
};

struct HotStartResult {
    std::vector<double> theta;
    double final_energy = 0.0; // on the full Hamiltonian
    std::vector<StageRecord> stages;
    std::vector<std::vector<TraceRecord>> stage_traces;
    QubitHamiltonian ordered;
};

// Minimizes over a growing chain of prefix Hamiltonians, warm-starting each
// stage with the previous stage's angles.  A stage whose line search stalls
// is recorded and the chain continues from its best iterate.
HotStartResult hot_start(const QubitHamiltonian& h, const AnsatzCircuit& circuit,
                         const HotStartSchedule& schedule,
                         const std::vector<double>& theta0,
                         const OptimizerConfig& config);

struct RunSpec {
    std::string name;
    bool hot = true;                 // false: plain minimize on the full sum
    OrderingStrategy ordering;       // used when hot
};

struct OrderingRun {
    std::string strategy;
    std::uint64_t seed = 0;
    double energy = 0.0;
    double error = 0.0; // energy - reference
    long long calls = 0;
    bool converged = false;
    std::vector<StageRecord> stages; // empty for plain runs
};

// Cross product of strategies and seeds; seed k draws the shared starting
// angles, and the random ordering reuses it as its shuffle seed.  Cells are
// independent and run on up to `jobs` threads; results keep a fixed order.
std::vector<OrderingRun> compare_orderings(const QubitHamiltonian& h,
                                           const AnsatzCircuit& circuit,
                                           const std::vector<RunSpec>& strategies,
                                           const std::vector<std::uint64_t>& seeds,
                                           const OptimizerConfig& config,
                                           double reference_energy, int jobs = 1);

} // namespace hsvqe

#endif
