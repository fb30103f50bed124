#include "hsvqe/hotstart.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include "hsvqe/errors.hpp"
#include "hsvqe/gradient.hpp"
#include "hsvqe/statevector.hpp"

namespace hsvqe {

std::string ordering_name(OrderingTag t) {
    switch (t) {
    case OrderingTag::Descending: return "descending";
    case OrderingTag::Ascending: return "ascending";
    case OrderingTag::Random: return "random";
    case OrderingTag::FileOrder: return "file_order";
    case OrderingTag::ClassBatched: return "class_batched";
    }
    return "unknown";
}

OrderingTag ordering_from_name(const std::string& name) {
    if (name == "descending") return OrderingTag::Descending;
    if (name == "ascending") return OrderingTag::Ascending;
    if (name == "random") return OrderingTag::Random;
    if (name == "file_order") return OrderingTag::FileOrder;
    if (name == "class_batched") return OrderingTag::ClassBatched;
    throw input_error("unknown ordering \"" + name + "\"");
}

namespace {

bool descending_less(const HamiltonianTerm& a, const HamiltonianTerm& b) {
    const double ma = std::abs(a.coefficient);
    const double mb = std::abs(b.coefficient);
    if (ma != mb) return ma > mb;
    return pauli_to_label(a.string) < pauli_to_label(b.string);
}

} // namespace

QubitHamiltonian sort_terms(const QubitHamiltonian& h, const OrderingStrategy& s) {
    QubitHamiltonian out = h;
    switch (s.tag) {
    case OrderingTag::FileOrder:
        break;
    case OrderingTag::Descending:
        std::stable_sort(out.terms.begin(), out.terms.end(), descending_less);
        break;
    case OrderingTag::Ascending:
        std::stable_sort(out.terms.begin(), out.terms.end(), descending_less);
        std::reverse(out.terms.begin(), out.terms.end());
        break;
    case OrderingTag::Random: {
        std::mt19937_64 eng(s.seed);
        for (std::size_t i = out.terms.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(eng() % i);
            std::swap(out.terms[i - 1], out.terms[j]);
        }
        break;
    }
    case OrderingTag::ClassBatched:
        for (const auto& t : out.terms) {
            if (t.term_class == TermClass::Unknown) {
                throw input_error(
                    "class-batched ordering needs classified terms; found \"" +
                    pauli_to_label(t.string) + "\" with unknown class");
            }
        }
        std::stable_sort(out.terms.begin(), out.terms.end(),
                         [](const HamiltonianTerm& a, const HamiltonianTerm& b) {
                             if (a.term_class != b.term_class) {
                                 return static_cast<int>(a.term_class) <
                                        static_cast<int>(b.term_class);
                             }
                             return descending_less(a, b);
                         });
        break;
    }
    return out;
}

std::vector<std::size_t> class_batches(const QubitHamiltonian& ordered) {
    std::vector<std::size_t> boundaries;
    for (std::size_t i = 0; i < ordered.terms.size(); ++i) {
        const TermClass c = ordered.terms[i].term_class;
        if (c == TermClass::Unknown) {
            throw input_error("cannot batch terms with unknown class");
        }
        if (i + 1 < ordered.terms.size()) {
            const TermClass next = ordered.terms[i + 1].term_class;
            if (static_cast<int>(next) < static_cast<int>(c)) {
                throw input_error("terms are not grouped by class");
            }
            if (next != c) boundaries.push_back(i + 1);
        }
    }
    boundaries.push_back(ordered.terms.size());
    return boundaries;
}

std::vector<std::size_t> per_term_schedule(std::size_t n_terms) {
    std::vector<std::size_t> b(n_terms);
    for (std::size_t i = 0; i < n_terms; ++i) b[i] = i + 1;
    return b;
}

HotStartResult hot_start(const QubitHamiltonian& h, const AnsatzCircuit& circuit,
                         const HotStartSchedule& schedule,
                         const std::vector<double>& theta0,
                         const OptimizerConfig& config) {
    if (theta0.size() != circuit.parameter_count()) {
        throw std::invalid_argument("starting angles have wrong dimension");
    }

    HotStartResult result;
    result.ordered = sort_terms(h, schedule.ordering);
    const std::size_t n = result.ordered.terms.size();
    if (n == 0) {
        throw input_error("cannot run the schedule on an empty Hamiltonian");
    }
    const auto& bounds = schedule.boundaries;
    if (bounds.empty() || bounds.back() != n) {
        throw input_error("schedule must end at the full term count");
    }
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        if (bounds[i] == 0 || (i > 0 && bounds[i] <= bounds[i - 1])) {
            throw input_error("schedule boundaries must increase strictly");
        }
    }

    std::vector<double> theta = theta0;
    std::vector<double> carried_hessian;
    StateVector scratch;
    for (std::size_t k = 0; k < bounds.size(); ++k) {
        EnergyObjective stage_objective(circuit, prefix(result.ordered, bounds[k]));
        Problem problem = make_problem(stage_objective, config.gradient_spec);
        const std::vector<double>* seed_hessian =
            (schedule.carry_hessian && !carried_hessian.empty()) ? &carried_hessian
                                                                 : nullptr;
        MinimizeResult stage = minimize(problem, theta, config, seed_hessian);
        theta = stage.theta;
        if (schedule.carry_hessian) carried_hessian = stage.inverse_hessian;

        run_circuit_into(circuit, theta, scratch);
        StageRecord rec;
        rec.stage = static_cast<int>(k) + 1;
        rec.prefix_size = bounds[k];
        rec.energy_on_prefix = stage.energy;
        rec.energy_on_full = expectation(result.ordered, scratch);
        rec.cumulative_calls =
            (result.stages.empty() ? 0 : result.stages.back().cumulative_calls) +
            stage_objective.evaluation_count();
        rec.status = stage.status;
        result.stages.push_back(rec);
        result.stage_traces.push_back(std::move(stage.trace));
    }
    result.theta = std::move(theta);
    result.final_energy = result.stages.back().energy_on_full;
    return result;
}

std::vector<OrderingRun> compare_orderings(const QubitHamiltonian& h,
                                           const AnsatzCircuit& circuit,
                                           const std::vector<RunSpec>& strategies,
                                           const std::vector<std::uint64_t>& seeds,
                                           const OptimizerConfig& config,
                                           double reference_energy, int jobs) {
    struct Cell {
        std::size_t strategy_index;
        std::size_t seed_index;
    };
    std::vector<Cell> cells;
    for (std::size_t si = 0; si < strategies.size(); ++si) {
        for (std::size_t ki = 0; ki < seeds.size(); ++ki) {
            cells.push_back({si, ki});
        }
    }
    std::vector<OrderingRun> results(cells.size());

    const auto run_cell = [&](const Cell& cell, OrderingRun& out) {
        const RunSpec& spec = strategies[cell.strategy_index];
        const std::uint64_t seed = seeds[cell.seed_index];
        const std::vector<double> theta0 =
            random_initial_angles(circuit.parameter_count(), seed);
        out.strategy = spec.name;
        out.seed = seed;
        if (spec.hot) {
            HotStartSchedule schedule;
            schedule.ordering = spec.ordering;
            if (spec.ordering.tag == OrderingTag::Random) {
                schedule.ordering.seed = seed;
            }
            QubitHamiltonian ordered = sort_terms(h, schedule.ordering);
            schedule.boundaries = spec.ordering.tag == OrderingTag::ClassBatched
                                      ? class_batches(ordered)
                                      : per_term_schedule(ordered.terms.size());
            HotStartResult r = hot_start(h, circuit, schedule, theta0, config);
            out.energy = r.final_energy;
            out.calls = r.stages.back().cumulative_calls;
            out.converged = std::all_of(
                r.stages.begin(), r.stages.end(), [](const StageRecord& s) {
                    return s.status == OptStatus::Converged;
                });
            out.stages = std::move(r.stages);
        } else {
            EnergyObjective objective(circuit, h);
            Problem problem = make_problem(objective, config.gradient_spec);
            MinimizeResult r = minimize(problem, theta0, config);
            out.energy = r.energy;
            out.calls = objective.evaluation_count();
            out.converged = r.status == OptStatus::Converged;
        }
        out.error = out.energy - reference_energy;
    };

    const int workers = std::max(1, jobs);
    if (workers == 1 || cells.size() <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            run_cell(cells[i], results[i]);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const std::size_t n_threads =
            std::min(static_cast<std::size_t>(workers), cells.size());
        pool.reserve(n_threads);
        for (std::size_t t = 0; t < n_threads; ++t) {
            pool.emplace_back([&]() {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= cells.size()) return;
                    run_cell(cells[i], results[i]);
                }
            });
        }
        for (auto& th : pool) th.join();
    }
    return results;
}

} // namespace hsvqe
