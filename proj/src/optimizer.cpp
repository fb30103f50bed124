#include "hsvqe/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace hsvqe {

namespace {

double inf_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

bool all_finite(const std::vector<double>& v) {
    for (double x : v) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

struct ProbePoint {
    double alpha = 0.0;
    double value = std::numeric_limits<double>::infinity();
    double slope = 0.0; // directional derivative along the search direction
    std::vector<double> theta;
    std::vector<double> grad;
    bool has_grad = false;
};

struct LineSearchResult {
    bool ok = false;
    ProbePoint point;
};

class LineSearch {
public:
    LineSearch(const Problem& problem, const std::vector<double>& theta,
               const std::vector<double>& direction, double f0, double slope0,
               const WolfeParams& wolfe)
        : problem_(problem), theta_(theta), dir_(direction), f0_(f0),
          slope0_(slope0), wolfe_(wolfe) {}

    LineSearchResult run() {
        // Bracketing phase of the strong-Wolfe search: grow the step until
        // the sufficient-decrease condition fails or curvature is met.
        constexpr double kAlphaMax = 1e6;
        constexpr int kMaxBracket = 60;
        ProbePoint prev;
        prev.alpha = 0.0;
        prev.value = f0_;
        prev.slope = slope0_;
        double alpha = 1.0;
        for (int i = 0; i < kMaxBracket; ++i) {
            ProbePoint cur = probe_value(alpha);
            if (violates_decrease(cur) || (i > 0 && cur.value >= prev.value)) {
                return zoom(prev, cur);
            }
            fill_slope(cur);
            if (std::abs(cur.slope) <= -wolfe_.c2 * slope0_) {
                return {true, std::move(cur)};
            }
            if (cur.slope >= 0.0) {
                return zoom(cur, prev);
            }
            prev = std::move(cur);
            if (alpha >= kAlphaMax) break;
            alpha = std::min(2.0 * alpha, kAlphaMax);
        }
        return {};
    }

private:
    bool violates_decrease(const ProbePoint& p) const {
        if (!std::isfinite(p.value)) return true;
        return p.value > f0_ + wolfe_.c1 * p.alpha * slope0_;
    }

    ProbePoint probe_value(double alpha) {
        ProbePoint p;
        p.alpha = alpha;
        p.theta.resize(theta_.size());
        for (std::size_t i = 0; i < theta_.size(); ++i) {
            p.theta[i] = theta_[i] + alpha * dir_[i];
        }
        const double v = problem_.value(p.theta);
        p.value = std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
        return p;
    }

    void fill_slope(ProbePoint& p) {
        p.grad = problem_.gradient(p.theta);
        if (!all_finite(p.grad)) {
            p.value = std::numeric_limits<double>::infinity();
            p.slope = 0.0;
            p.has_grad = false;
            return;
        }
        p.slope = dot(p.grad, dir_);
        p.has_grad = true;
    }

    // lo always satisfies sufficient decrease with the lowest value seen.
    LineSearchResult zoom(ProbePoint lo, ProbePoint hi) {
        constexpr int kMaxZoom = 64;
        if (!lo.has_grad && lo.alpha > 0.0) fill_slope(lo);
        for (int i = 0; i < kMaxZoom; ++i) {
            const double alpha = 0.5 * (lo.alpha + hi.alpha);
            if (std::abs(hi.alpha - lo.alpha) <
                1e-16 * std::max(1.0, std::abs(lo.alpha))) {
                break;
            }
            ProbePoint cur = probe_value(alpha);
            if (violates_decrease(cur) || cur.value >= lo.value) {
                hi = std::move(cur);
                continue;
            }
            fill_slope(cur);
            if (!cur.has_grad) {
                hi = std::move(cur);
                continue;
            }
            if (std::abs(cur.slope) <= -wolfe_.c2 * slope0_) {
                return {true, std::move(cur)};
            }
            if (cur.slope * (hi.alpha - lo.alpha) >= 0.0) {
                hi = lo;
            }
            lo = std::move(cur);
        }
        // Fall back to the best bracketed point if it at least decreases.
        if (lo.alpha > 0.0 && std::isfinite(lo.value) && lo.value < f0_) {
            if (!lo.has_grad) fill_slope(lo);
            if (lo.has_grad) return {true, std::move(lo)};
        }
        return {};
    }

    const Problem& problem_;
    const std::vector<double>& theta_;
    const std::vector<double>& dir_;
    double f0_;
    double slope0_;
    const WolfeParams& wolfe_;
};

} // namespace

std::string opt_status_name(OptStatus s) {
    switch (s) {
    case OptStatus::Converged: return "converged";
    case OptStatus::MaxIterations: return "max_iterations";
    case OptStatus::LineSearchFailure: return "line_search_failure";
    }
    return "unknown";
}

Problem make_problem(const EnergyObjective& objective, const GradientSpec& spec) {
    Problem p;
    EnergyObjective value_copy = objective;
    p.value = [value_copy](const std::vector<double>& theta) {
        return value_copy(theta);
    };
    EnergyObjective grad_copy = objective;
    p.gradient = [grad_copy, spec](const std::vector<double>& theta) {
        return gradient(grad_copy, theta, spec);
    };
    EnergyObjective count_copy = objective;
    p.calls = [count_copy]() { return count_copy.evaluation_count(); };
    return p;
}

MinimizeResult minimize(const Problem& problem, const std::vector<double>& theta0,
                        const OptimizerConfig& config,
                        const std::vector<double>* initial_inverse_hessian) {
    const std::size_t d = theta0.size();
    if (d == 0) {
        throw std::invalid_argument("cannot minimize over zero parameters");
    }
    if (initial_inverse_hessian && initial_inverse_hessian->size() != d * d) {
        throw std::invalid_argument("seed inverse Hessian has wrong dimensions");
    }

    std::vector<double> theta = theta0;
    double f = problem.value(theta);
    std::vector<double> g = problem.gradient(theta);
    if (!std::isfinite(f) || !all_finite(g)) {
        throw std::runtime_error("objective is not finite at the starting point");
    }

    MinimizeResult result;
    result.trace.push_back({0, f, inf_norm(g), problem.calls ? problem.calls() : 0});

    std::vector<double> hmat(d * d, 0.0);
    bool scale_on_first_update = initial_inverse_hessian == nullptr;
    if (initial_inverse_hessian) {
        hmat = *initial_inverse_hessian;
    } else {
        for (std::size_t i = 0; i < d; ++i) hmat[i * d + i] = 1.0;
    }

    result.status = OptStatus::MaxIterations;
    std::vector<double> p(d), w(d), s(d), y(d);
    for (int iter = 1; iter <= config.max_iterations; ++iter) {
        if (inf_norm(g) <= config.gradient_tolerance) {
            result.status = OptStatus::Converged;
            break;
        }
        for (std::size_t i = 0; i < d; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < d; ++j) acc -= hmat[i * d + j] * g[j];
            p[i] = acc;
        }
        double slope = dot(p, g);
        if (!(slope < 0.0)) {
            // The model lost positive definiteness; restart from steepest
            // descent.
            std::fill(hmat.begin(), hmat.end(), 0.0);
            for (std::size_t i = 0; i < d; ++i) hmat[i * d + i] = 1.0;
            scale_on_first_update = true;
            for (std::size_t i = 0; i < d; ++i) p[i] = -g[i];
            slope = dot(p, g);
            if (!(slope < 0.0)) {
                result.status = OptStatus::Converged;
                break;
            }
        }

        LineSearch search(problem, theta, p, f, slope, config.wolfe);
        LineSearchResult ls = search.run();
        if (!ls.ok) {
            result.status = OptStatus::LineSearchFailure;
            break;
        }

        for (std::size_t i = 0; i < d; ++i) {
            s[i] = ls.point.theta[i] - theta[i];
            y[i] = ls.point.grad[i] - g[i];
        }
        const double sy = dot(s, y);
        const double ss = dot(s, s);
        const double yy = dot(y, y);
        if (sy > 1e-14 * std::sqrt(ss * yy) && sy > 0.0) {
            if (scale_on_first_update) {
                const double scale = sy / yy;
                std::fill(hmat.begin(), hmat.end(), 0.0);
                for (std::size_t i = 0; i < d; ++i) hmat[i * d + i] = scale;
                scale_on_first_update = false;
            }
            const double rho = 1.0 / sy;
            for (std::size_t i = 0; i < d; ++i) {
                double acc = 0.0;
                for (std::size_t j = 0; j < d; ++j) acc += hmat[i * d + j] * y[j];
                w[i] = acc;
            }
            const double yw = dot(y, w);
            const double coef = rho * rho * yw + rho;
            for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t j = 0; j < d; ++j) {
                    hmat[i * d + j] += coef * s[i] * s[j] -
                                       rho * (s[i] * w[j] + w[i] * s[j]);
                }
            }
        }

        theta = std::move(ls.point.theta);
        f = ls.point.value;
        g = std::move(ls.point.grad);
        result.trace.push_back(
            {iter, f, inf_norm(g), problem.calls ? problem.calls() : 0});
    }
    if (result.status == OptStatus::MaxIterations &&
        inf_norm(g) <= config.gradient_tolerance) {
        result.status = OptStatus::Converged;
    }

    result.theta = std::move(theta);
    result.energy = f;
    result.inverse_hessian = std::move(hmat);
    return result;
}

std::vector<double> random_initial_angles(std::size_t d, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    std::vector<double> out(d, 0.0);
    const double two_pi = 2.0 * std::numbers::pi;
    for (auto& x : out) {
        const std::uint64_t r = eng();
        x = two_pi * (static_cast<double>(r >> 11) * 0x1.0p-53);
    }
    return out;
}

} // namespace hsvqe
