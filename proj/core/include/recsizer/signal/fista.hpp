#pragma once

#include <Eigen/Dense>

namespace recsizer {

/// Elementwise shrinkage: x-tau if x > tau, 0 if |x| <= tau, x+tau if x < -tau.
double soft_threshold(double x, double tau);
Eigen::VectorXd soft_threshold(const Eigen::VectorXd& x, double tau);

/// Order of the proximal step relative to the momentum extrapolation.
/// ProxThenMomentum is the canonical accelerated scheme; MomentumThenProx
/// applies the shrinkage to the extrapolated point instead and is kept
/// selectable for study (it can stall near the optimum).
enum class FistaOrder { ProxThenMomentum, MomentumThenProx };

struct FistaOptions {
    double tol = 1e-8;      // stop when ||theta_k - theta_{k-1}|| <= tol
    int max_iter = 50000;
    FistaOrder order = FistaOrder::ProxThenMomentum;
};

struct FistaResult {
    Eigen::VectorXd theta;
    int iterations = 0;
    bool converged = false;
    double objective = 0.0; // (1/n)||Phi theta - y||^2 + lambda ||theta||_1
};

double lasso_objective(const Eigen::MatrixXd& phi, const Eigen::VectorXd& y,
                       const Eigen::VectorXd& theta, double lambda);

/// Accelerated proximal-gradient minimization of
///   (1/n) ||Phi theta - y||^2 + lambda ||theta||_1
/// with step 1/L_f, L_f = (2/n) sigma_max(Phi)^2 estimated by power
/// iteration, and momentum t_k = (1 + sqrt(1 + 4 t_{k-1}^2)) / 2.
FistaResult fista(const Eigen::MatrixXd& phi, const Eigen::VectorXd& y, double lambda,
                  const FistaOptions& options = {});

} // namespace recsizer
