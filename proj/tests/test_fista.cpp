#include <doctest.h>

#include <random>

#include "recsizer/signal/fista.hpp"
#include "recsizer/signal/fourier.hpp"
#include "recsizer/signal/repdays.hpp"
#include "support/lasso_oracle.hpp"

using namespace recsizer;
using doctest::Approx;

namespace {

Eigen::MatrixXd random_matrix(std::mt19937& rng, int rows, int cols) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::MatrixXd m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = g(rng);
    return m;
}

Eigen::VectorXd random_vector(std::mt19937& rng, int n) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = g(rng);
    return v;
}

} // namespace

TEST_CASE("soft threshold branches and oddness") {
    CHECK(soft_threshold(2.0, 0.5) == Approx(1.5));
    CHECK(soft_threshold(0.3, 0.5) == 0.0);
    CHECK(soft_threshold(-2.0, 0.5) == Approx(-1.5));
    CHECK(soft_threshold(0.5, 0.5) == 0.0);
    CHECK(soft_threshold(-0.5, 0.5) == 0.0);
    CHECK_THROWS(soft_threshold(1.0, -0.1));

    std::mt19937 rng(23);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 100; ++i) {
        const double x = u(rng);
        const double tau = std::abs(u(rng));
        CHECK(soft_threshold(-x, tau) == Approx(-soft_threshold(x, tau)));
    }
}

TEST_CASE("unregularized fista solves square nonsingular systems") {
    std::mt19937 rng(41);
    const int n = 20;
    const Eigen::MatrixXd phi =
        Eigen::MatrixXd::Identity(n, n) + 0.1 * random_matrix(rng, n, n);
    const Eigen::VectorXd y = random_vector(rng, n);
    const Eigen::VectorXd direct = phi.fullPivLu().solve(y);

    FistaOptions options;
    options.tol = 1e-13;
    options.max_iter = 500000;
    const FistaResult fit = fista(phi, y, 0.0, options);
    CHECK(fit.converged);
    CHECK((fit.theta - direct).norm() <= 1e-8);
}

TEST_CASE("lambda at or above lambda_max returns the exact zero vector") {
    std::mt19937 rng(43);
    const Eigen::MatrixXd phi = random_matrix(rng, 40, 12);
    const Eigen::VectorXd y = random_vector(rng, 40);
    const double lmax = lambda_max(phi, y);
    for (double factor : {1.0, 1.5, 10.0}) {
        const FistaResult fit = fista(phi, y, factor * lmax);
        CHECK(fit.converged);
        for (int j = 0; j < fit.theta.size(); ++j) CHECK(fit.theta[j] == 0.0);
    }
    // Just below the threshold at least one coefficient activates.
    const FistaResult below = fista(phi, y, 0.5 * lmax);
    CHECK(below.theta.cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("orthonormal designs reduce to coordinatewise shrinkage") {
    std::mt19937 rng(47);
    const int n = 60, m = 40;
    const Eigen::MatrixXd q =
        Eigen::HouseholderQR<Eigen::MatrixXd>(random_matrix(rng, n, m)).householderQ() *
        Eigen::MatrixXd::Identity(n, m);
    const Eigen::VectorXd y = random_vector(rng, n);
    const double lambda = 0.05;

    FistaOptions options;
    options.tol = 1e-12;
    options.max_iter = 200000;
    const FistaResult fit = fista(q, y, lambda, options);

    const Eigen::VectorXd b = q.transpose() * y;
    for (int j = 0; j < m; ++j) {
        const double closed_form = testsupport::shrink(b[j], lambda * n / 2.0);
        CHECK(fit.theta[j] == Approx(closed_form).epsilon(1e-7).scale(1.0));
    }
    // And the coordinate-descent oracle agrees on the objective.
    const Eigen::VectorXd cd = testsupport::lasso_coordinate_descent(q, y, lambda);
    CHECK(lasso_objective(q, y, fit.theta, lambda) ==
          Approx(lasso_objective(q, y, cd, lambda)).epsilon(1e-8));
}

TEST_CASE("fista matches the coordinate-descent oracle on random instances") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 200, m = 50;
        const Eigen::MatrixXd phi = random_matrix(rng, n, m);
        Eigen::VectorXd sparse_truth = Eigen::VectorXd::Zero(m);
        for (int k = 0; k < 8; ++k)
            sparse_truth[static_cast<int>(rng() % m)] = random_vector(rng, 1)[0];
        const Eigen::VectorXd y = phi * sparse_truth + 0.1 * random_vector(rng, n);
        const double lambda = 0.1 * lambda_max(phi, y);

        FistaOptions options;
        options.tol = 1e-10;
        options.max_iter = 200000;
        const FistaResult fit = fista(phi, y, lambda, options);
        CHECK(fit.converged);
        const Eigen::VectorXd cd =
            testsupport::lasso_coordinate_descent(phi, y, lambda, 1e-12);
        const double obj_fista = lasso_objective(phi, y, fit.theta, lambda);
        const double obj_cd = testsupport::lasso_objective_ref(phi, y, cd, lambda);
        CHECK(std::abs(obj_fista - obj_cd) <= 1e-8);

        // The returned iterate beats both trivial candidates.
        CHECK(obj_fista <=
              lasso_objective(phi, y, Eigen::VectorXd::Zero(m), lambda) + 1e-12);
        const Eigen::VectorXd ls =
            (phi.transpose() * phi).ldlt().solve(phi.transpose() * y);
        CHECK(obj_fista <= lasso_objective(phi, y, ls, lambda) + 1e-12);
    }
}

TEST_CASE("doubling lambda never grows the oracle support") {
    std::mt19937 rng(313);
    const int n = 120, m = 30;
    const Eigen::MatrixXd phi = random_matrix(rng, n, m);
    const Eigen::VectorXd y = random_vector(rng, n);
    const double lmax = lambda_max(phi, y);
    int prev_support = 0;
    for (int k = 6; k >= 0; --k) { // descending lambda = lmax * 2^-k ascending... k descending gives ascending lambda
        const double lambda = lmax * std::pow(2.0, -k);
        const Eigen::VectorXd theta = testsupport::lasso_coordinate_descent(phi, y, lambda);
        int support = 0;
        for (int j = 0; j < m; ++j)
            if (std::abs(theta[j]) > 1e-10) ++support;
        if (k < 6) CHECK(support <= prev_support);
        prev_support = support;
    }
}

TEST_CASE("the alternative update order is available and sane on easy problems") {
    std::mt19937 rng(59);
    const Eigen::MatrixXd phi = random_matrix(rng, 50, 10);
    const Eigen::VectorXd y = random_vector(rng, 50);
    const double lambda = 0.2 * lambda_max(phi, y);

    FistaOptions alt;
    alt.order = FistaOrder::MomentumThenProx;
    alt.tol = 1e-10;
    alt.max_iter = 200000;
    const FistaResult fit_alt = fista(phi, y, lambda, alt);
    const FistaResult fit_std = fista(phi, y, lambda);
    // Both land within a small objective band of the oracle; the canonical
    // order is the default for a reason.
    const Eigen::VectorXd cd = testsupport::lasso_coordinate_descent(phi, y, lambda);
    const double obj_cd = testsupport::lasso_objective_ref(phi, y, cd, lambda);
    CHECK(lasso_objective(phi, y, fit_std.theta, lambda) == Approx(obj_cd).epsilon(1e-6));
    CHECK(lasso_objective(phi, y, fit_alt.theta, lambda) <=
          lasso_objective(phi, y, Eigen::VectorXd::Zero(10), lambda) + 1e-9);
}

TEST_CASE("iteration cap returns the best iterate with a flag") {
    std::mt19937 rng(61);
    const Eigen::MatrixXd phi = random_matrix(rng, 80, 20);
    const Eigen::VectorXd y = random_vector(rng, 80);
    FistaOptions options;
    options.tol = 1e-16;
    options.max_iter = 3;
    const FistaResult fit = fista(phi, y, 0.01, options);
    CHECK(!fit.converged);
    CHECK(fit.iterations == 3);
    CHECK(fit.theta.allFinite());
}
