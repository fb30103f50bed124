#ifndef HSVQE_EXPERIMENT_HPP
#define HSVQE_EXPERIMENT_HPP

#include <string>

namespace hsvqe {

struct TransformOptions {
    std::string input;
    std::string output;
    std::string encoding = "bk";
    std::string spin_order = "interleaved";
    std::string freeze; // comma-separated spatial orbitals
};

struct ExactOptions {
    std::string input;
    std::string output = "-"; // '-' writes to stdout
};

struct SpectrumOptions {
    std::string input;
    std::string output = "-";
};

// Flags shared by the optimization drivers.
struct RunOptions {
    std::string input;
    std::string output_dir;
    int depth = 2;
    std::string entangler = "full";
    std::string seeds = "0:10";
    int max_iterations = 500;
    double gradient_tolerance = 1e-8;
    std::string gradient_method = "analytic";
    double gradient_step = 0.0;
    long long initial_state = -1; // -1: file metadata, falling back to 0
    long long stride = 0;         // 0 disables term-stride reduction
    long long stride_base = 0;
    std::string stride_ordering;  // required when stride > 0
    int jobs = 1;
};

struct VqeOptions : RunOptions {};

struct HotstartOptions : RunOptions {
    std::string ordering = "descending";
    bool carry_hessian = false;
};

struct BenchOptions : RunOptions {
    std::string depths = "2";
    std::string strategies = "ordinary,descending";
    std::string molecule; // defaults to the input file stem
};

void run_transform(const TransformOptions& opt);
void run_exact(const ExactOptions& opt);
void run_vqe(const VqeOptions& opt);
void run_hotstart(const HotstartOptions& opt);
void run_bench(const BenchOptions& opt);
void run_spectrum(const SpectrumOptions& opt);

} // namespace hsvqe

#endif
