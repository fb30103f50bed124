#ifndef HSVQE_GRADIENT_HPP
#define HSVQE_GRADIENT_HPP

#include <vector>

#include "hsvqe/ansatz.hpp"

namespace hsvqe {

enum class GradientMethod { AnalyticShift, ForwardDifference, CentralDifference };

inline constexpr double kForwardDifferenceStep = 1e-6;
inline constexpr double kCentralDifferenceStep = 1e-4;

struct GradientSpec {
    GradientMethod method = GradientMethod::AnalyticShift;
    // Finite-difference step; non-positive selects the method default.  The
    // analytic rule always shifts by pi/2 and ignores this.
    double step = 0.0;
};

// Gradient of the energy surface.  The analytic rule is exact for circuits
// whose every parameter feeds one Ry gate:
//   dE/dt_k = (E(t + pi/2 e_k) - E(t - pi/2 e_k)) / 2.
// Costs exactly 2D evaluations; forward differences cost D+1 and central
// differences 2D.
std::vector<double> gradient(const EnergyObjective& f,
                             const std::vector<double>& theta,
                             const GradientSpec& spec);

// Objective evaluations one gradient call spends at dimension d.
long long gradient_evaluation_cost(GradientMethod method, std::size_t d);

} // namespace hsvqe

#endif
