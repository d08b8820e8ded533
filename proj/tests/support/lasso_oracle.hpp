#pragma once

#include <Eigen/Dense>
#include <cmath>

// Independent LASSO reference: plain cyclic coordinate descent on
//   (1/n) ||Phi theta - y||^2 + lambda ||theta||_1,
// run to a tiny displacement tolerance. Kept free of any solver code so it
// can arbitrate the production path.
namespace testsupport {

inline double shrink(double x, double tau) {
    if (x > tau) return x - tau;
    if (x < -tau) return x + tau;
    return 0.0;
}

inline Eigen::VectorXd lasso_coordinate_descent(const Eigen::MatrixXd& phi,
                                                const Eigen::VectorXd& y, double lambda,
                                                double tol = 1e-12, long max_sweeps = 500000) {
    const double n = static_cast<double>(phi.rows());
    const Eigen::Index m = phi.cols();
    Eigen::VectorXd theta = Eigen::VectorXd::Zero(m);
    Eigen::VectorXd residual = y; // y - phi*theta
    Eigen::VectorXd col_sq(m);
    for (Eigen::Index j = 0; j < m; ++j) col_sq[j] = phi.col(j).squaredNorm();

    for (long sweep = 0; sweep < max_sweeps; ++sweep) {
        double worst = 0.0;
        for (Eigen::Index j = 0; j < m; ++j) {
            if (col_sq[j] == 0.0) continue;
            const double old = theta[j];
            // Partial residual correlation with column j.
            const double rho = 2.0 / n * (phi.col(j).dot(residual) + col_sq[j] * old);
            const double next = shrink(rho, lambda) / (2.0 / n * col_sq[j]);
            if (next != old) {
                residual += phi.col(j) * (old - next);
                theta[j] = next;
                worst = std::max(worst, std::abs(next - old));
            }
        }
        if (worst <= tol) break;
    }
    return theta;
}

inline double lasso_objective_ref(const Eigen::MatrixXd& phi, const Eigen::VectorXd& y,
                                  const Eigen::VectorXd& theta, double lambda) {
    return (phi * theta - y).squaredNorm() / static_cast<double>(phi.rows()) +
           lambda * theta.lpNorm<1>();
}

} // namespace testsupport
