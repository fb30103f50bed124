#include <algorithm>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hsvqe/errors.hpp"
#include "hsvqe/experiment.hpp"

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// Expands a flat key=value config file into command-line tokens inserted
// right after the subcommand name.  Every option keeps only its last
// occurrence, so explicit flags always override file values.
std::vector<std::string> with_config_expanded(const std::vector<std::string>& args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        }
    }
    if (path.empty()) return args;

    std::ifstream in(path);
    if (!in) {
        throw hsvqe::input_error("cannot open config file \"" + path + "\"");
    }
    std::vector<std::string> tokens;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        const std::string key = eq == std::string::npos ? "" : trim(line.substr(0, eq));
        if (key.empty()) {
            throw hsvqe::input_error(path + " line " + std::to_string(line_no) +
                                     ": expected key=value");
        }
        tokens.push_back("--" + key + "=" + trim(line.substr(eq + 1)));
    }

    std::vector<std::string> out;
    bool inserted = false;
    for (const auto& arg : args) {
        out.push_back(arg);
        if (!inserted && !arg.empty() && arg[0] != '-') {
            out.insert(out.end(), tokens.begin(), tokens.end());
            inserted = true;
        }
    }
    if (!inserted) {
        throw hsvqe::input_error("--config needs a subcommand to apply to");
    }
    return out;
}

void add_run_options(CLI::App* cmd, hsvqe::RunOptions& opt, std::string& config) {
    cmd->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    cmd->add_option("-i,--input", opt.input, "Hamiltonian file")->required();
    cmd->add_option("-o,--output-dir", opt.output_dir, "directory for result files")
        ->required();
    cmd->add_option("--depth", opt.depth, "entangling layers in the ansatz");
    cmd->add_option("--entangler", opt.entangler, "full or linear");
    cmd->add_option("--seeds", opt.seeds, "seed list: a,b,c or lo:hi");
    cmd->add_option("--max-iterations", opt.max_iterations, "optimizer iteration cap");
    cmd->add_option("--gradient-tolerance", opt.gradient_tolerance,
                    "stop when the gradient infinity norm falls below this");
    cmd->add_option("--gradient-method", opt.gradient_method,
                    "analytic, forward or central");
    cmd->add_option("--gradient-step", opt.gradient_step,
                    "finite-difference step (0 = method default)");
    cmd->add_option("--initial-state", opt.initial_state,
                    "basis-state index preparing the circuit input "
                    "(-1 = hf_state from the file header)");
    cmd->add_option("--stride", opt.stride,
                    "keep every stride-th term of the sorted list (0 = all)");
    cmd->add_option("--stride-base", opt.stride_base, "first rank kept");
    cmd->add_option("--stride-ordering", opt.stride_ordering,
                    "sort applied before the stride pick (required with --stride)");
    cmd->add_option("--jobs", opt.jobs, "concurrent cells");
    cmd->add_option("--config", config,
                    "flat key=value config file; explicit flags override it");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Variational ground-state toolkit for qubit Hamiltonians"};
    app.require_subcommand(1);
    std::string config_path;

    hsvqe::TransformOptions transform_opt;
    auto* transform = app.add_subcommand(
        "transform", "encode a molecular integral file as a qubit Hamiltonian");
    transform->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    transform->add_option("-i,--input", transform_opt.input, "FCIDUMP file")
        ->required();
    transform->add_option("-o,--output", transform_opt.output, "Hamiltonian file")
        ->required();
    transform->add_option("--encoding", transform_opt.encoding, "jw or bk");
    transform->add_option("--spin-order", transform_opt.spin_order,
                          "interleaved or blocked");
    transform->add_option("--freeze", transform_opt.freeze,
                          "comma-separated spatial orbitals to freeze");
    transform->add_option("--config", config_path,
                          "flat key=value config file; explicit flags override it");

    hsvqe::ExactOptions exact_opt;
    auto* exact = app.add_subcommand("exact", "dense ground-state energy");
    exact->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    exact->add_option("-i,--input", exact_opt.input, "Hamiltonian file")->required();
    exact->add_option("-o,--output", exact_opt.output, "JSON output ('-' = stdout)");
    exact->add_option("--config", config_path,
                      "flat key=value config file; explicit flags override it");

    hsvqe::SpectrumOptions spectrum_opt;
    auto* spectrum = app.add_subcommand(
        "spectrum", "coefficient magnitudes in non-increasing order");
    spectrum->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    spectrum->add_option("-i,--input", spectrum_opt.input, "Hamiltonian file")
        ->required();
    spectrum->add_option("-o,--output", spectrum_opt.output,
                         "CSV output ('-' = stdout)");
    spectrum->add_option("--config", config_path,
                         "flat key=value config file; explicit flags override it");

    hsvqe::VqeOptions vqe_opt;
    auto* vqe = app.add_subcommand("vqe", "plain variational minimization per seed");
    add_run_options(vqe, vqe_opt, config_path);

    hsvqe::HotstartOptions hotstart_opt;
    auto* hotstart = app.add_subcommand(
        "hotstart", "staged minimization over growing prefix sums");
    add_run_options(hotstart, hotstart_opt, config_path);
    hotstart->add_option("--ordering", hotstart_opt.ordering,
                         "descending, ascending, random, file_order or class_batched");
    hotstart->add_flag("--carry-hessian", hotstart_opt.carry_hessian,
                       "seed each stage with the previous inverse Hessian");

    hsvqe::BenchOptions bench_opt;
    auto* bench = app.add_subcommand(
        "bench", "strategy/depth/seed grid with aggregate tables");
    add_run_options(bench, bench_opt, config_path);
    bench->add_option("--depths", bench_opt.depths, "depth list: a,b,c or lo:hi");
    bench->add_option("--strategies", bench_opt.strategies,
                      "comma list from: ordinary, descending, ascending, random, "
                      "file_order, class_batched");
    bench->add_option("--molecule", bench_opt.molecule,
                      "label for output rows (default: input stem)");

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        args = with_config_expanded(args);
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
        if (transform->parsed()) hsvqe::run_transform(transform_opt);
        if (exact->parsed()) hsvqe::run_exact(exact_opt);
        if (spectrum->parsed()) hsvqe::run_spectrum(spectrum_opt);
        if (vqe->parsed()) hsvqe::run_vqe(vqe_opt);
        if (hotstart->parsed()) hsvqe::run_hotstart(hotstart_opt);
        if (bench->parsed()) hsvqe::run_bench(bench_opt);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 1 : 0;
    } catch (const hsvqe::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
