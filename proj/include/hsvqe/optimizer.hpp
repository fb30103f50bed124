#ifndef HSVQE_OPTIMIZER_HPP
#define HSVQE_OPTIMIZER_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hsvqe/gradient.hpp"

namespace hsvqe {

// A smooth objective presented to the minimizer.  `calls` reports the
// cumulative count of underlying objective evaluations (value and gradient
// probes combined), used for cost accounting in traces.
struct Problem {
    std::function<double(const std::vector<double>&)> value;
    std::function<std::vector<double>(const std::vector<double>&)> gradient;
    std::function<long long()> calls;
};

Problem make_problem(const EnergyObjective& objective, const GradientSpec& spec);

struct WolfeParams {
    double c1 = 1e-4;
    double c2 = 0.9;
};

struct OptimizerConfig {
    int max_iterations = 500;
    double gradient_tolerance = 1e-8; // infinity norm
    WolfeParams wolfe;
    GradientSpec gradient_spec;
};

enum class OptStatus { Converged, MaxIterations, LineSearchFailure };

std::string opt_status_name(OptStatus s);

struct TraceRecord {
    int iteration = 0;
    double energy = 0.0;
    double gradient_inf_norm = 0.0;
    long long calls = 0;
};

struct MinimizeResult {
    std::vector<double> theta;
    double energy = 0.0;
    OptStatus status = OptStatus::MaxIterations;
    std::vector<TraceRecord> trace;       // record 0 is the starting point
    std::vector<double> inverse_hessian;  // d*d row-major
};

// BFGS with a strong-Wolfe line search.  Returns the best iterate seen.
// `initial_inverse_hessian` (d*d row-major) seeds the quasi-Newton model;
// when absent the identity is used and rescaled after the first update.
MinimizeResult minimize(const Problem& problem, const std::vector<double>& theta0,
                        const OptimizerConfig& config,
                        const std::vector<double>* initial_inverse_hessian = nullptr);

// D angles drawn uniformly from [0, 2*pi), reproducible across platforms.
std::vector<double> random_initial_angles(std::size_t d, std::uint64_t seed);

} // namespace hsvqe

#endif
