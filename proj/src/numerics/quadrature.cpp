// SPDX-License-Identifier: Apache-2.0
//
// diamond-ib: rate bounds for the two-relay Rayleigh-fading diamond channel
// ------------------------------------------------------------------------

#include "dib/numerics/quadrature.hpp"
#include "dib/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace dib {

namespace {

constexpr int kMaxDoublings = 4;

// log |L_degree(x)| by the three-term recurrence, rescaled as it goes so large
// nodes do not overflow. degree >= 1.
double log_abs_laguerre(int degree, double x)
{
    double p0 = 1.0;       // L_0
    double p1 = 1.0 - x;   // L_1
    double log_scale = 0.0;
    for (int k = 1; k < degree; ++k)
    {
        const double p2 = ((2.0 * k + 1.0 - x) * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
        if (std::abs(p1) > 1e150)
        {
            p0 *= 1e-150;
            p1 *= 1e-150;
            log_scale += 150.0 * std::log(10.0);
        }
    }
    return std::log(std::abs(p1)) + log_scale;
}

std::unique_ptr<LaguerreRule> build_rule(int order)
{
    const int n = order;
    // Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix with
    // diagonal 2i+1 and off-diagonal i+1.
    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(n - 1);
    for (int i = 0; i < n; ++i)
        diag[i] = 2.0 * i + 1.0;
    for (int i = 0; i + 1 < n; ++i)
        sub[i] = i + 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NonConvergent("laguerre_rule: eigenvalue solver failed for order " +
                            std::to_string(n));

    auto rule = std::make_unique<LaguerreRule>();
    rule->nodes.resize(n);
    rule->weights.resize(n);
    const double log_np1_sq = 2.0 * std::log(n + 1.0);
    for (int i = 0; i < n; ++i)
    {
        double x = solver.eigenvalues()[i];
        // Newton polish on L_n; derivative from x L_n' = n (L_n - L_{n-1}).
        for (int step = 0; step < 3; ++step)
        {
            double q0 = 1.0, q1 = 1.0 - x;
            for (int k = 1; k < n; ++k)
            {
                const double q2 = ((2.0 * k + 1.0 - x) * q1 - k * q0) / (k + 1.0);
                q0 = q1;
                q1 = q2;
                if (std::abs(q1) > 1e150)
                {
                    q0 *= 1e-150;
                    q1 *= 1e-150;
                }
            }
            // q1 = L_n, q0 = L_{n-1} (same scale)
            const double deriv = n * (q1 - q0) / x;
            if (deriv == 0.0 || !std::isfinite(deriv))
                break;
            const double dx = q1 / deriv;
            x -= dx;
            if (std::abs(dx) <= 1e-16 * x)
                break;
        }
        // w_i = x_i / ((n+1)^2 L_{n+1}(x_i)^2); folded weight is w_i exp(x_i).
        const double log_w = std::log(x) - log_np1_sq - 2.0 * log_abs_laguerre(n + 1, x) + x;
        rule->nodes[i] = x;
        rule->weights[i] = std::exp(log_w);
    }
    return rule;
}

} // namespace

const LaguerreRule &laguerre_rule(int order)
{
    if (order < 2)
        throw InvalidArgument("laguerre_rule: order must be at least 2");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<LaguerreRule>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto &slot = cache[order];
    if (!slot)
        slot = build_rule(order);
    return *slot;
}

double integrate_semiinfinite(const std::function<double(double)> &f, double lower,
                              const SolverSettings &settings)
{
    if (!(lower >= 0.0) || !std::isfinite(lower))
        throw DomainError("integrate_semiinfinite: lower limit must be finite and >= 0");

    auto apply = [&](int order) {
        const LaguerreRule &rule = laguerre_rule(order);
        double sum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        {
            if (rule.weights[i] == 0.0)
                continue;
            const double v = f(lower + rule.nodes[i]);
            if (!std::isfinite(v))
                throw DomainError("integrate_semiinfinite: integrand is not finite at x = " +
                                  std::to_string(lower + rule.nodes[i]));
            sum += rule.weights[i] * v;
        }
        return sum;
    };

    int order = settings.quad_order;
    double previous = apply(order);
    for (int round = 0; round < kMaxDoublings; ++round)
    {
        order *= 2;
        const double current = apply(order);
        if (std::abs(current - previous) <= settings.abs_tol * std::max(1.0, std::abs(current)))
            return current;
        previous = current;
    }
    throw NonConvergent("integrate_semiinfinite: orders " + std::to_string(order / 2) + " and " +
                        std::to_string(order) + " still disagree");
}

} // namespace dib
