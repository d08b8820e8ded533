#pragma once

#include <Eigen/Dense>

namespace recsizer {

/// Harmonic counts and periods of the tensor-product Fourier basis. The
/// yearly x weekly product set has 2*n_weekly*(1 + 2*n_yearly) columns; the
/// optional plain daily set appends 2*n_daily more.
struct RegressorSpec {
    int n_yearly = 2;
    int n_weekly = 3;
    int n_daily = 4;
    double period_yearly_hours = 8760.0;
    double period_weekly_hours = 168.0;
    double period_daily_hours = 24.0;

    int product_columns() const { return 2 * n_weekly * (1 + 2 * n_yearly); }
    int daily_columns() const { return 2 * n_daily; }
    int total_columns() const { return product_columns() + daily_columns(); }
};

/// One regressor row evaluated at time t (hours since the series start).
Eigen::VectorXd regressor_row(double t_hours, const RegressorSpec& spec);

/// Full design matrix for samples t = t0, t0+dt, ..., (n_samples rows).
Eigen::MatrixXd build_regressors(int n_samples, const RegressorSpec& spec, double t0_hours = 0.0,
                                 double dt_hours = 1.0);

/// Smallest l1 weight for which the all-zero coefficient vector minimizes
/// (1/n)||Phi theta - y||^2 + lambda ||theta||_1: (2/n) max_i |phi_i^T y|.
double lambda_max(const Eigen::MatrixXd& phi, const Eigen::VectorXd& y);

} // namespace recsizer
