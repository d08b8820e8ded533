#include "recsizer/signal/fourier.hpp"

#include <cmath>
#include <numbers>

#include "recsizer/errors.hpp"

namespace recsizer {

namespace {

// Yearly factor set: cos(j Psi t) for j = 0..N_y, then sin(j Psi t) for
// j = 1..N_y.
void yearly_factors(double t, const RegressorSpec& spec, std::vector<double>& out) {
    const double psi = 2.0 * std::numbers::pi / spec.period_yearly_hours;
    out.clear();
    for (int j = 0; j <= spec.n_yearly; ++j) out.push_back(std::cos(j * psi * t));
    for (int j = 1; j <= spec.n_yearly; ++j) out.push_back(std::sin(j * psi * t));
}

// Weekly factor set: cos(k Omega t) for k = 0..N_w, then sin(k Omega t) for
// k = 1..N_w-1.
void weekly_factors(double t, const RegressorSpec& spec, std::vector<double>& out) {
    const double omega = 2.0 * std::numbers::pi / spec.period_weekly_hours;
    out.clear();
    for (int k = 0; k <= spec.n_weekly; ++k) out.push_back(std::cos(k * omega * t));
    for (int k = 1; k <= spec.n_weekly - 1; ++k) out.push_back(std::sin(k * omega * t));
}

} // namespace

Eigen::VectorXd regressor_row(double t_hours, const RegressorSpec& spec) {
    if (spec.n_yearly < 1 || spec.n_weekly < 1)
        throw DomainError("regressor_row: need at least one yearly and one weekly harmonic");
    if (spec.n_daily < 0) throw DomainError("regressor_row: negative daily harmonic count");

    std::vector<double> yearly, weekly;
    yearly_factors(t_hours, spec, yearly);
    weekly_factors(t_hours, spec, weekly);

    Eigen::VectorXd row(spec.total_columns());
    int col = 0;
    for (double w : weekly)
        for (double y : yearly) row[col++] = w * y;

    const double daily = 2.0 * std::numbers::pi / spec.period_daily_hours;
    for (int k = 1; k <= spec.n_daily; ++k) {
        row[col++] = std::cos(k * daily * t_hours);
        row[col++] = std::sin(k * daily * t_hours);
    }
    return row;
}

Eigen::MatrixXd build_regressors(int n_samples, const RegressorSpec& spec, double t0_hours,
                                 double dt_hours) {
    if (n_samples < 1) throw DomainError("build_regressors: need at least one sample");
    Eigen::MatrixXd phi(n_samples, spec.total_columns());
    for (int i = 0; i < n_samples; ++i)
        phi.row(i) = regressor_row(t0_hours + i * dt_hours, spec).transpose();
    return phi;
}

double lambda_max(const Eigen::MatrixXd& phi, const Eigen::VectorXd& y) {
    if (phi.rows() != y.size()) throw StructureError("lambda_max: dimension mismatch");
    if (phi.rows() == 0) return 0.0;
    return 2.0 / static_cast<double>(phi.rows()) *
           (phi.transpose() * y).cwiseAbs().maxCoeff();
}

} // namespace recsizer
