#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace recsizer::lp {

enum class Sense { LE, EQ, GE };
enum class Status { Optimal, Infeasible, Unbounded };

const char* to_string(Status s);
const char* to_string(Sense s);

/// Dense maximization LP:
///   max c'x  s.t.  A x {<=,=,>=} b,  lower <= x <= upper
/// with +-infinity allowed in the bounds.
struct LinearProgram {
    Eigen::VectorXd c;
    Eigen::MatrixXd a;
    std::vector<Sense> senses;
    Eigen::VectorXd b;
    Eigen::VectorXd lower;
    Eigen::VectorXd upper;

    Eigen::Index rows() const { return a.rows(); }
    Eigen::Index cols() const { return a.cols(); }

    /// Throws StructureError on dimension mismatch or inverted bounds.
    void check() const;
};

struct LPSolution {
    Status status = Status::Infeasible;
    Eigen::VectorXd x;             // primal values (cols)
    Eigen::VectorXd y;             // row duals (rows)
    Eigen::VectorXd reduced_costs; // c - A'y (cols)
    double objective = 0.0;
    long iterations = 0;
};

struct SimplexOptions {
    double feas_tol = 1e-9;
    double opt_tol = 1e-9;
    /// 0 chooses an automatic cap from the instance size.
    long max_iter = 0;
};

/// Bounded-variable revised primal simplex with a dense explicit basis
/// inverse. Deterministic for identical input. Throws StructureError on
/// malformed input and NumericalError on basis breakdown.
LPSolution solve_lp(const LinearProgram& lp, const SimplexOptions& options = {});

/// |primal objective - dual objective| of an Optimal solution; throws
/// StateError for non-Optimal input.
double duality_gap(const LinearProgram& lp, const LPSolution& solution);

} // namespace recsizer::lp
