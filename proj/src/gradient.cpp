#include "hsvqe/gradient.hpp"

#include <cmath>
#include <numbers>

namespace hsvqe {

std::vector<double> gradient(const EnergyObjective& f,
                             const std::vector<double>& theta,
                             const GradientSpec& spec) {
    const std::size_t d = theta.size();
    std::vector<double> g(d, 0.0);
    std::vector<double> probe = theta;

    switch (spec.method) {
    case GradientMethod::AnalyticShift: {
        const double shift = std::numbers::pi / 2.0;
        for (std::size_t k = 0; k < d; ++k) {
            probe[k] = theta[k] + shift;
            const double plus = f(probe);
            probe[k] = theta[k] - shift;
            const double minus = f(probe);
            probe[k] = theta[k];
            g[k] = 0.5 * (plus - minus);
        }
        break;
    }
    case GradientMethod::ForwardDifference: {
        const double h = spec.step > 0.0 ? spec.step : kForwardDifferenceStep;
        const double f0 = f(theta);
        for (std::size_t k = 0; k < d; ++k) {
            probe[k] = theta[k] + h;
            g[k] = (f(probe) - f0) / h;
            probe[k] = theta[k];
        }
        break;
    }
    case GradientMethod::CentralDifference: {
        const double h = spec.step > 0.0 ? spec.step : kCentralDifferenceStep;
        for (std::size_t k = 0; k < d; ++k) {
            probe[k] = theta[k] + h;
            const double plus = f(probe);
            probe[k] = theta[k] - h;
            const double minus = f(probe);
            probe[k] = theta[k];
            g[k] = (plus - minus) / (2.0 * h);
        }
        break;
    }
    }
    return g;
}

long long gradient_evaluation_cost(GradientMethod method, std::size_t d) {
    switch (method) {
    case GradientMethod::AnalyticShift: return 2 * static_cast<long long>(d);
    case GradientMethod::ForwardDifference: return static_cast<long long>(d) + 1;
    case GradientMethod::CentralDifference: return 2 * static_cast<long long>(d);
    }
    return 0;
}

} // namespace hsvqe
