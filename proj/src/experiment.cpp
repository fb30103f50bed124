#include "hsvqe/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>
#include <vector>

#include "json.hpp"

#include "hsvqe/ansatz.hpp"
#include "hsvqe/encodings.hpp"
#include "hsvqe/errors.hpp"
#include "hsvqe/exact.hpp"
#include "hsvqe/fcidump.hpp"
#include "hsvqe/fermion_op.hpp"
#include "hsvqe/hamiltonian_io.hpp"
#include "hsvqe/hotstart.hpp"
#include "hsvqe/optimizer.hpp"

namespace hsvqe {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt15(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

// Energies pass through a 15-significant-digit decimal before landing in
// JSON so serialized numbers are stable and re-parse to the same double.
double round15(double x) {
    return std::stod(fmt15(x));
}

std::vector<long long> parse_index_list(const std::string& text, const char* what) {
    std::vector<long long> out;
    if (text.empty()) return out;
    const auto colon = text.find(':');
    try {
        if (colon != std::string::npos) {
            const long long lo = std::stoll(text.substr(0, colon));
            const long long hi = std::stoll(text.substr(colon + 1));
            if (lo < 0 || hi < lo) {
                throw input_error(std::string(what) + " range \"" + text +
                                  "\" is invalid");
            }
            for (long long v = lo; v < hi; ++v) out.push_back(v);
            return out;
        }
        std::istringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            out.push_back(std::stoll(item));
            if (out.back() < 0) {
                throw input_error(std::string(what) + " entries must be >= 0");
            }
        }
    } catch (const input_error&) {
        throw;
    } catch (const std::exception&) {
        throw input_error(std::string(what) + " list \"" + text +
                          "\" is not a number list");
    }
    if (out.empty()) {
        throw input_error(std::string(what) + " list \"" + text + "\" is empty");
    }
    return out;
}

std::string join_indices(const std::vector<long long>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

Encoding parse_encoding(const std::string& name) {
    if (name == "jw") return Encoding::JordanWigner;
    if (name == "bk") return Encoding::BravyiKitaev;
    throw input_error("encoding must be jw or bk, got \"" + name + "\"");
}

SpinOrder parse_spin_order(const std::string& name) {
    if (name == "interleaved") return SpinOrder::Interleaved;
    if (name == "blocked") return SpinOrder::Blocked;
    throw input_error("spin order must be interleaved or blocked, got \"" + name +
                      "\"");
}

Entangler parse_entangler(const std::string& name) {
    if (name == "full") return Entangler::Full;
    if (name == "linear") return Entangler::Linear;
    throw input_error("entangler must be full or linear, got \"" + name + "\"");
}

GradientMethod parse_gradient_method(const std::string& name) {
    if (name == "analytic") return GradientMethod::AnalyticShift;
    if (name == "forward") return GradientMethod::ForwardDifference;
    if (name == "central") return GradientMethod::CentralDifference;
    throw input_error("gradient method must be analytic, forward or central, got \"" +
                      name + "\"");
}

double resolved_gradient_step(GradientMethod m, double step) {
    if (step > 0.0) return step;
    switch (m) {
    case GradientMethod::AnalyticShift: return 0.0;
    case GradientMethod::ForwardDifference: return kForwardDifferenceStep;
    case GradientMethod::CentralDifference: return kCentralDifferenceStep;
    }
    return 0.0;
}

OptimizerConfig make_optimizer_config(const RunOptions& opt) {
    OptimizerConfig cfg;
    if (opt.max_iterations < 1) {
        throw input_error("max iterations must be positive");
    }
    if (!(opt.gradient_tolerance >= 0.0)) {
        throw input_error("gradient tolerance must be non-negative");
    }
    cfg.max_iterations = opt.max_iterations;
    cfg.gradient_tolerance = opt.gradient_tolerance;
    cfg.gradient_spec.method = parse_gradient_method(opt.gradient_method);
    cfg.gradient_spec.step = opt.gradient_step;
    return cfg;
}

struct LoadedProblem {
    QubitHamiltonian h;
    MetaList meta;
    std::uint64_t initial_state = 0;
    double reference_energy = 0.0;
    double reference_residual = 0.0;
};

LoadedProblem load_problem(const RunOptions& opt) {
    LoadedProblem lp;
    lp.h = load_hamiltonian_file(opt.input, &lp.meta);
    if (opt.stride > 0) {
        if (opt.stride_ordering.empty()) {
            throw input_error("--stride needs an explicit --stride-ordering");
        }
        const OrderingTag tag = ordering_from_name(opt.stride_ordering);
        if (tag == OrderingTag::Random) {
            throw input_error("stride selection needs a deterministic ordering");
        }
        const QubitHamiltonian sorted = sort_terms(lp.h, {tag, 0});
        const long long n = static_cast<long long>(sorted.terms.size());
        if (opt.stride_base < 0 || opt.stride_base >= n) {
            throw input_error("stride base " + std::to_string(opt.stride_base) +
                              " outside 0.." + std::to_string(n - 1));
        }
        QubitHamiltonian reduced;
        reduced.n_qubits = lp.h.n_qubits;
        for (long long r = opt.stride_base; r < n; r += opt.stride) {
            reduced.terms.push_back(sorted.terms[static_cast<std::size_t>(r)]);
        }
        lp.h = std::move(reduced);
    }

    if (opt.initial_state >= 0) {
        lp.initial_state = static_cast<std::uint64_t>(opt.initial_state);
    } else {
        for (const auto& [key, value] : lp.meta) {
            if (key == "hf_state") {
                try {
                    lp.initial_state = std::stoull(value);
                } catch (const std::exception&) {
                    throw input_error("bad hf_state metadata \"" + value + "\"");
                }
            }
        }
    }
    if (lp.h.n_qubits < 64 &&
        lp.initial_state >= (std::uint64_t{1} << lp.h.n_qubits)) {
        throw input_error("initial state index out of range for " +
                          std::to_string(lp.h.n_qubits) + " qubits");
    }

    const SpectrumResult exact = ground_state(lp.h);
    lp.reference_energy = exact.ground_energy;
    lp.reference_residual = exact.residual;
    return lp;
}

AnsatzCircuit make_circuit(const RunOptions& opt, int n_qubits,
                           std::uint64_t initial_state) {
    if (opt.depth < 0) {
        throw input_error("ansatz depth must be >= 0");
    }
    AnsatzCircuit c;
    c.n_qubits = n_qubits;
    c.depth = opt.depth;
    c.entangler = parse_entangler(opt.entangler);
    c.initial_state = initial_state;
    return c;
}

MetaList run_config_entries(const std::string& command, const RunOptions& opt,
                            const LoadedProblem& lp,
                            const std::vector<long long>& seeds) {
    const GradientMethod gm = parse_gradient_method(opt.gradient_method);
    MetaList m;
    m.emplace_back("command", command);
    m.emplace_back("input", opt.input);
    m.emplace_back("depth", std::to_string(opt.depth));
    m.emplace_back("entangler", opt.entangler);
    m.emplace_back("seeds", join_indices(seeds));
    m.emplace_back("max_iterations", std::to_string(opt.max_iterations));
    m.emplace_back("gradient_tolerance", fmt15(opt.gradient_tolerance));
    m.emplace_back("gradient_method", opt.gradient_method);
    m.emplace_back("gradient_step", fmt15(resolved_gradient_step(gm, opt.gradient_step)));
    m.emplace_back("initial_state", std::to_string(lp.initial_state));
    if (opt.stride > 0) {
        m.emplace_back("stride", std::to_string(opt.stride));
        m.emplace_back("stride_base", std::to_string(opt.stride_base));
        m.emplace_back("stride_ordering", opt.stride_ordering);
    }
    m.emplace_back("jobs", std::to_string(opt.jobs));
    m.emplace_back("n_qubits", std::to_string(lp.h.n_qubits));
    m.emplace_back("n_terms", std::to_string(lp.h.terms.size()));
    m.emplace_back("reference_energy_ha", fmt15(lp.reference_energy));
    return m;
}

ordered_json config_json(const MetaList& entries) {
    ordered_json j = ordered_json::object();
    for (const auto& [key, value] : entries) j[key] = value;
    return j;
}

void write_config_header(std::ostream& out, const MetaList& entries) {
    for (const auto& [key, value] : entries) {
        out << "# " << key << ": " << value << "\n";
    }
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw input_error("cannot write \"" + path.string() + "\"");
    }
    return out;
}

void write_json_output(const std::string& target, const ordered_json& j) {
    if (target == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    auto out = open_output(target);
    out << j.dump(2) << "\n";
}

double median(std::vector<double> v) {
    if (v.empty()) return std::nan("");
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double mean(const std::vector<double>& v) {
    if (v.empty()) return std::nan("");
    double acc = 0.0;
    for (double x : v) acc += x;
    return acc / static_cast<double>(v.size());
}

// Runs fn(i) for i in [0, n) on up to `jobs` threads; exceptions from any
// task are rethrown after all workers finish.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers =
        std::min(static_cast<std::size_t>(std::max(1, jobs)), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            try {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= n) return;
                    fn(i);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

struct SeedOutcome {
    long long seed = 0;
    double energy = 0.0;
    double error = 0.0;
    long long calls = 0;
    std::string status;
};

ordered_json summary_json(const MetaList& config,
                          const std::vector<SeedOutcome>& outcomes) {
    std::vector<double> errors, calls;
    for (const auto& o : outcomes) {
        errors.push_back(o.error);
        calls.push_back(static_cast<double>(o.calls));
    }
    ordered_json per_seed = ordered_json::array();
    for (const auto& o : outcomes) {
        ordered_json row = ordered_json::object();
        row["seed"] = o.seed;
        row["energy_ha"] = round15(o.energy);
        row["error_ha"] = round15(o.error);
        row["calls"] = o.calls;
        row["status"] = o.status;
        per_seed.push_back(row);
    }
    ordered_json agg = ordered_json::object();
    agg["median_error_ha"] = round15(median(errors));
    agg["mean_error_ha"] = round15(mean(errors));
    agg["min_error_ha"] = round15(*std::min_element(errors.begin(), errors.end()));
    agg["median_calls"] = round15(median(calls));
    agg["mean_calls"] = round15(mean(calls));

    ordered_json j = ordered_json::object();
    j["config"] = config_json(config);
    j["per_seed"] = per_seed;
    j["aggregate"] = agg;
    return j;
}

} // namespace

void run_transform(const TransformOptions& opt) {
    std::ifstream in(opt.input);
    if (!in) {
        throw input_error("cannot open \"" + opt.input + "\"");
    }
    const FermionIntegrals integrals = parse_fcidump(in);
    const SpinOrder spin = parse_spin_order(opt.spin_order);
    const Encoding enc = parse_encoding(opt.encoding);

    std::vector<int> frozen_spatial;
    for (long long v : parse_index_list(opt.freeze.empty() ? "" : opt.freeze,
                                        "frozen orbital")) {
        frozen_spatial.push_back(static_cast<int>(v));
    }
    const auto [occupied_spatial, removed_spatial] =
        split_frozen_by_occupation(frozen_spatial, integrals.n_electrons);

    const FermionOperatorSum fermion = build_fermion_hamiltonian(integrals, spin);
    const std::vector<int> occupied_modes =
        spatial_to_spin_modes(occupied_spatial, spin, integrals.n_orbitals);
    const std::vector<int> removed_modes =
        spatial_to_spin_modes(removed_spatial, spin, integrals.n_orbitals);
    const FermionOperatorSum active =
        freeze_orbitals(fermion, occupied_modes, removed_modes);
    if (active.n_modes < 1) {
        throw input_error("freezing removed every mode");
    }
    const QubitHamiltonian h = encode(active, enc);

    // Reference determinant in the active space: the filled modes that
    // survive freezing, relabeled to the dense active indexing.
    std::vector<int> filled_spatial;
    for (int p = 0; p < integrals.n_electrons / 2; ++p) filled_spatial.push_back(p);
    const std::vector<int> filled_modes =
        spatial_to_spin_modes(filled_spatial, spin, integrals.n_orbitals);
    std::vector<int> active_index(static_cast<std::size_t>(2 * integrals.n_orbitals), -1);
    {
        int next = 0;
        for (int m = 0; m < 2 * integrals.n_orbitals; ++m) {
            const bool frozen =
                std::find(occupied_modes.begin(), occupied_modes.end(), m) !=
                    occupied_modes.end() ||
                std::find(removed_modes.begin(), removed_modes.end(), m) !=
                    removed_modes.end();
            if (!frozen) active_index[static_cast<std::size_t>(m)] = next++;
        }
    }
    std::vector<int> active_occupied;
    for (int m : filled_modes) {
        const int idx = active_index[static_cast<std::size_t>(m)];
        if (idx >= 0) active_occupied.push_back(idx);
    }
    const std::uint64_t hf_state =
        occupied_modes_to_state(active_occupied, enc, active.n_modes);

    MetaList meta;
    meta.emplace_back("source", opt.input);
    meta.emplace_back("encoding", opt.encoding);
    meta.emplace_back("spin_order", opt.spin_order);
    if (!frozen_spatial.empty()) {
        meta.emplace_back("frozen", join_ints(frozen_spatial));
        meta.emplace_back("frozen_occupied", join_ints(occupied_spatial));
        meta.emplace_back("removed_virtual", join_ints(removed_spatial));
    }
    meta.emplace_back("active_electrons",
                      std::to_string(static_cast<int>(active_occupied.size())));
    meta.emplace_back("hf_state", std::to_string(hf_state));
    save_hamiltonian_file(opt.output, h, meta);
    std::cout << h.terms.size() << "\n";
}

void run_exact(const ExactOptions& opt) {
    MetaList meta;
    const QubitHamiltonian h = load_hamiltonian_file(opt.input, &meta);
    const SpectrumResult r = ground_state(h);
    ordered_json j = ordered_json::object();
    ordered_json cfg = ordered_json::object();
    cfg["command"] = "exact";
    cfg["input"] = opt.input;
    j["config"] = cfg;
    j["energy_ha"] = round15(r.ground_energy);
    j["n_qubits"] = h.n_qubits;
    j["n_terms"] = h.terms.size();
    j["residual"] = round15(r.residual);
    write_json_output(opt.output, j);
}

void run_spectrum(const SpectrumOptions& opt) {
    MetaList meta;
    const QubitHamiltonian h = load_hamiltonian_file(opt.input, &meta);
    const SpectrumResult r = ground_state(h);
    const auto dist = coefficient_distribution(h);

    std::ostringstream out;
    out << "# command: spectrum\n";
    out << "# input: " << opt.input << "\n";
    out << "# n_qubits: " << h.n_qubits << "\n";
    out << "# n_terms: " << h.terms.size() << "\n";
    out << "# exact_ground_energy_ha: " << fmt15(r.ground_energy) << "\n";
    out << "rank,abs_coefficient,class,label\n";
    for (std::size_t i = 0; i < dist.size(); ++i) {
        out << i << ',' << fmt15(dist[i].abs_coefficient) << ','
            << term_class_name(dist[i].term_class) << ',' << dist[i].label << "\n";
    }
    if (opt.output == "-") {
        std::cout << out.str();
    } else {
        auto f = open_output(opt.output);
        f << out.str();
    }
}

void run_vqe(const VqeOptions& opt) {
    const LoadedProblem lp = load_problem(opt);
    const OptimizerConfig cfg = make_optimizer_config(opt);
    const std::vector<long long> seeds = parse_index_list(opt.seeds, "seed");
    const AnsatzCircuit circuit = make_circuit(opt, lp.h.n_qubits, lp.initial_state);
    const MetaList config = run_config_entries("vqe", opt, lp, seeds);

    std::filesystem::create_directories(opt.output_dir);
    std::vector<SeedOutcome> outcomes(seeds.size());

    parallel_for(seeds.size(), opt.jobs, [&](std::size_t i) {
        const std::uint64_t seed = static_cast<std::uint64_t>(seeds[i]);
        const std::vector<double> theta0 =
            random_initial_angles(circuit.parameter_count(), seed);
        EnergyObjective objective(circuit, lp.h);
        const Problem problem = make_problem(objective, cfg.gradient_spec);
        const MinimizeResult r = minimize(problem, theta0, cfg);

        SeedOutcome& o = outcomes[i];
        o.seed = seeds[i];
        o.energy = r.energy;
        o.error = r.energy - lp.reference_energy;
        o.calls = objective.evaluation_count();
        o.status = opt_status_name(r.status);

        ordered_json j = ordered_json::object();
        j["config"] = config_json(config);
        j["seed"] = seeds[i];
        j["reference_energy_ha"] = round15(lp.reference_energy);
        ordered_json fin = ordered_json::object();
        fin["energy_ha"] = round15(o.energy);
        fin["error_ha"] = round15(o.error);
        fin["calls"] = o.calls;
        fin["status"] = o.status;
        j["final"] = fin;
        ordered_json trace = ordered_json::array();
        for (const auto& rec : r.trace) {
            trace.push_back({rec.iteration, round15(rec.energy),
                             round15(rec.gradient_inf_norm), rec.calls});
        }
        j["trace"] = trace;
        auto out = open_output(std::filesystem::path(opt.output_dir) /
                               ("vqe_seed" + std::to_string(seeds[i]) + ".json"));
        out << j.dump(2) << "\n";
    });

    auto out = open_output(std::filesystem::path(opt.output_dir) / "summary.json");
    out << summary_json(config, outcomes).dump(2) << "\n";
}

void run_hotstart(const HotstartOptions& opt) {
    const LoadedProblem lp = load_problem(opt);
    const OptimizerConfig cfg = make_optimizer_config(opt);
    const std::vector<long long> seeds = parse_index_list(opt.seeds, "seed");
    const AnsatzCircuit circuit = make_circuit(opt, lp.h.n_qubits, lp.initial_state);
    const OrderingTag tag = ordering_from_name(opt.ordering);

    MetaList config = run_config_entries("hotstart", opt, lp, seeds);
    config.emplace_back("ordering", opt.ordering);
    config.emplace_back("carry_hessian", opt.carry_hessian ? "true" : "false");

    std::filesystem::create_directories(opt.output_dir);
    std::vector<SeedOutcome> outcomes(seeds.size());

    parallel_for(seeds.size(), opt.jobs, [&](std::size_t i) {
        const std::uint64_t seed = static_cast<std::uint64_t>(seeds[i]);
        const std::vector<double> theta0 =
            random_initial_angles(circuit.parameter_count(), seed);
        HotStartSchedule schedule;
        schedule.ordering.tag = tag;
        schedule.ordering.seed = tag == OrderingTag::Random ? seed : 0;
        schedule.carry_hessian = opt.carry_hessian;
        const QubitHamiltonian ordered = sort_terms(lp.h, schedule.ordering);
        schedule.boundaries = tag == OrderingTag::ClassBatched
                                  ? class_batches(ordered)
                                  : per_term_schedule(ordered.terms.size());
        const HotStartResult r = hot_start(lp.h, circuit, schedule, theta0, cfg);

        SeedOutcome& o = outcomes[i];
        o.seed = seeds[i];
        o.energy = r.final_energy;
        o.error = r.final_energy - lp.reference_energy;
        o.calls = r.stages.back().cumulative_calls;
        const bool all_converged =
            std::all_of(r.stages.begin(), r.stages.end(), [](const StageRecord& s) {
                return s.status == OptStatus::Converged;
            });
        o.status = all_converged ? "converged" : "stage_failure";

        std::ostringstream csv;
        write_config_header(csv, config);
        csv << "# seed: " << seeds[i] << "\n";
        csv << "stage,prefix_size,energy_on_prefix,energy_on_full,calls,status\n";
        for (const auto& s : r.stages) {
            csv << s.stage << ',' << s.prefix_size << ','
                << fmt15(s.energy_on_prefix) << ',' << fmt15(s.energy_on_full)
                << ',' << s.cumulative_calls << ',' << opt_status_name(s.status)
                << "\n";
        }
        auto out = open_output(std::filesystem::path(opt.output_dir) /
                               ("hotstart_seed" + std::to_string(seeds[i]) + ".csv"));
        out << csv.str();
    });

    auto out = open_output(std::filesystem::path(opt.output_dir) / "summary.json");
    out << summary_json(config, outcomes).dump(2) << "\n";
}

void run_bench(const BenchOptions& opt) {
    const LoadedProblem lp = load_problem(opt);
    const OptimizerConfig cfg = make_optimizer_config(opt);
    const std::vector<long long> seeds = parse_index_list(opt.seeds, "seed");
    const std::vector<long long> depths = parse_index_list(opt.depths, "depth");
    const std::string molecule =
        opt.molecule.empty() ? std::filesystem::path(opt.input).stem().string()
                             : opt.molecule;

    std::vector<RunSpec> specs;
    {
        std::istringstream ss(opt.strategies);
        std::string name;
        while (std::getline(ss, name, ',')) {
            if (name.empty()) continue;
            RunSpec spec;
            spec.name = name;
            if (name == "ordinary") {
                spec.hot = false;
            } else {
                spec.hot = true;
                spec.ordering.tag = ordering_from_name(name);
            }
            specs.push_back(spec);
        }
    }
    if (specs.empty()) {
        throw input_error("strategy list is empty");
    }

    MetaList config = run_config_entries("bench", opt, lp, seeds);
    config.emplace_back("depths", join_indices(depths));
    config.emplace_back("strategies", opt.strategies);
    config.emplace_back("molecule", molecule);

    struct Row {
        long long depth;
        OrderingRun run;
    };
    std::vector<Row> rows;
    std::vector<std::uint64_t> useeds;
    for (long long s : seeds) useeds.push_back(static_cast<std::uint64_t>(s));
    for (long long depth : depths) {
        RunOptions depth_opt = opt;
        depth_opt.depth = static_cast<int>(depth);
        const AnsatzCircuit circuit =
            make_circuit(depth_opt, lp.h.n_qubits, lp.initial_state);
        const auto runs = compare_orderings(lp.h, circuit, specs, useeds, cfg,
                                            lp.reference_energy, opt.jobs);
        for (const auto& run : runs) rows.push_back({depth, run});
    }

    std::filesystem::create_directories(opt.output_dir);
    {
        std::ostringstream csv;
        write_config_header(csv, config);
        csv << "molecule,strategy,depth,seed,final_error_ha,calls,status\n";
        for (const auto& row : rows) {
            csv << molecule << ',' << row.run.strategy << ',' << row.depth << ','
                << row.run.seed << ',' << fmt15(row.run.error) << ','
                << row.run.calls << ','
                << (row.run.converged ? "converged" : "incomplete") << "\n";
        }
        auto out = open_output(std::filesystem::path(opt.output_dir) / "long.csv");
        out << csv.str();
    }
    {
        // Error against prefix size, aggregated over seeds per strategy.
        std::ostringstream csv;
        write_config_header(csv, config);
        csv << "strategy,depth,prefix_size,median_error_ha,mean_error_ha\n";
        for (const auto& spec : specs) {
            if (!spec.hot) continue;
            for (long long depth : depths) {
                std::map<std::size_t, std::vector<double>> by_prefix;
                for (const auto& row : rows) {
                    if (row.depth != depth || row.run.strategy != spec.name) continue;
                    for (const auto& s : row.run.stages) {
                        by_prefix[s.prefix_size].push_back(s.energy_on_full -
                                                           lp.reference_energy);
                    }
                }
                for (const auto& [size, errs] : by_prefix) {
                    csv << spec.name << ',' << depth << ',' << size << ','
                        << fmt15(median(errs)) << ',' << fmt15(mean(errs)) << "\n";
                }
            }
        }
        auto out = open_output(std::filesystem::path(opt.output_dir) /
                               "ordering_convergence.csv");
        out << csv.str();
    }
    {
        std::ostringstream csv;
        write_config_header(csv, config);
        csv << "molecule,strategy,depth,median_error_ha,mean_error_ha,"
               "median_calls,mean_calls,n_converged\n";
        for (const auto& spec : specs) {
            for (long long depth : depths) {
                std::vector<double> errs, calls;
                int converged = 0;
                for (const auto& row : rows) {
                    if (row.depth != depth || row.run.strategy != spec.name) continue;
                    errs.push_back(row.run.error);
                    calls.push_back(static_cast<double>(row.run.calls));
                    if (row.run.converged) ++converged;
                }
                if (errs.empty()) continue;
                csv << molecule << ',' << spec.name << ',' << depth << ','
                    << fmt15(median(errs)) << ',' << fmt15(mean(errs)) << ','
                    << fmt15(median(calls)) << ',' << fmt15(mean(calls)) << ','
                    << converged << "\n";
            }
        }
        auto out = open_output(std::filesystem::path(opt.output_dir) /
                               "depth_summary.csv");
        out << csv.str();
    }
}

} // namespace hsvqe
