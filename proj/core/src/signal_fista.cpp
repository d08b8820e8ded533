#include "recsizer/signal/fista.hpp"

#include <cmath>

#include "recsizer/errors.hpp"

namespace recsizer {

double soft_threshold(double x, double tau) {
    if (tau < 0.0) throw DomainError("soft_threshold: tau must be >= 0");
    if (x > tau) return x - tau;
    if (x < -tau) return x + tau;
    return 0.0;
}

Eigen::VectorXd soft_threshold(const Eigen::VectorXd& x, double tau) {
    Eigen::VectorXd out(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) out[i] = soft_threshold(x[i], tau);
    return out;
}

double lasso_objective(const Eigen::MatrixXd& phi, const Eigen::VectorXd& y,
                       const Eigen::VectorXd& theta, double lambda) {
    const double n = static_cast<double>(phi.rows());
    return (phi * theta - y).squaredNorm() / n + lambda * theta.lpNorm<1>();
}

namespace {

// Largest eigenvalue of the PSD gram matrix by power iteration.
double gram_spectral_radius(const Eigen::MatrixXd& gram) {
    Eigen::VectorXd v = Eigen::VectorXd::Ones(gram.rows());
    v.normalize();
    double value = 0.0;
    for (int it = 0; it < 500; ++it) {
        Eigen::VectorXd w = gram * v;
        const double next = w.norm();
        if (next == 0.0) return 0.0;
        w /= next;
        if (std::abs(next - value) <= 1e-13 * std::max(1.0, next)) {
            value = next;
            break;
        }
        value = next;
        v = w;
    }
    return value;
}

} // namespace

FistaResult fista(const Eigen::MatrixXd& phi, const Eigen::VectorXd& y, double lambda,
                  const FistaOptions& options) {
    if (phi.rows() != y.size()) throw StructureError("fista: dimension mismatch");
    if (lambda < 0.0) throw DomainError("fista: lambda must be >= 0");
    if (!phi.allFinite() || !y.allFinite()) throw DomainError("fista: nonfinite input");

    const double n = static_cast<double>(phi.rows());
    const Eigen::Index m = phi.cols();

    // Gradient of the smooth part via the m x m gram matrix:
    // grad(theta) = (2/n) (Phi^T Phi theta - Phi^T y).
    const Eigen::MatrixXd gram = phi.transpose() * phi;
    const Eigen::VectorXd phi_t_y = phi.transpose() * y;
    const double lipschitz = 2.0 / n * gram_spectral_radius(gram);

    FistaResult result;
    result.theta = Eigen::VectorXd::Zero(m);
    if (lipschitz <= 0.0) { // all-zero design: theta = 0 is optimal
        result.converged = true;
        result.objective = lasso_objective(phi, y, result.theta, lambda);
        return result;
    }
    const double gamma = 1.0 / lipschitz;
    const double tau = gamma * lambda;

    Eigen::VectorXd theta_prev = result.theta;      // theta_{k-2}
    Eigen::VectorXd theta = result.theta;           // theta_{k-1}
    Eigen::VectorXd extrapolated = theta;           // momentum point
    double t_prev = 1.0;

    auto gradient_at = [&](const Eigen::VectorXd& point) -> Eigen::VectorXd {
        return 2.0 / n * (gram * point - phi_t_y);
    };

    for (int k = 1; k <= options.max_iter; ++k) {
        Eigen::VectorXd theta_next;
        const double t_next = (1.0 + std::sqrt(1.0 + 4.0 * t_prev * t_prev)) / 2.0;
        if (options.order == FistaOrder::ProxThenMomentum) {
            theta_next = soft_threshold(
                Eigen::VectorXd(extrapolated - gamma * gradient_at(extrapolated)), tau);
            extrapolated = theta_next + (t_prev - 1.0) / t_next * (theta_next - theta);
        } else {
            // Shrinkage applied to the extrapolated point instead.
            Eigen::VectorXd stepped = theta - gamma * gradient_at(theta);
            theta_next = soft_threshold(
                Eigen::VectorXd(stepped + (t_prev - 1.0) / t_next * (theta - theta_prev)), tau);
        }
        const double displacement = (theta_next - theta).norm();
        theta_prev = theta;
        theta = theta_next;
        t_prev = t_next;
        result.iterations = k;
        if (displacement <= options.tol) {
            result.converged = true;
            break;
        }
    }
    result.theta = theta;
    result.objective = lasso_objective(phi, y, theta, lambda);
    return result;
}

} // namespace recsizer
