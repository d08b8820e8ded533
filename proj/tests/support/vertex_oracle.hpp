#pragma once

#include <Eigen/Dense>
#include <limits>
#include <optional>
#include <vector>

#include "recsizer/lp/problem.hpp"

// Exhaustive vertex enumeration for small LPs with finite variable bounds:
// every choice of n active constraints (rows as equalities, or a variable
// pinned to one of its bounds) yields a candidate point; the best feasible
// one is the optimum of a bounded feasible LP.
namespace testsupport {

struct VertexResult {
    bool feasible = false;
    double objective = -std::numeric_limits<double>::infinity();
    Eigen::VectorXd x;
};

inline bool vertex_feasible(const recsizer::lp::LinearProgram& lp, const Eigen::VectorXd& x,
                            double tol = 1e-7) {
    using recsizer::lp::Sense;
    for (Eigen::Index j = 0; j < lp.cols(); ++j)
        if (x[j] < lp.lower[j] - tol || x[j] > lp.upper[j] + tol) return false;
    const Eigen::VectorXd row = lp.a * x;
    for (Eigen::Index i = 0; i < lp.rows(); ++i) {
        const double r = row[i] - lp.b[i];
        if (lp.senses[i] == Sense::LE && r > tol) return false;
        if (lp.senses[i] == Sense::GE && r < -tol) return false;
        if (lp.senses[i] == Sense::EQ && std::abs(r) > tol) return false;
    }
    return true;
}

inline VertexResult vertex_enumeration(const recsizer::lp::LinearProgram& lp) {
    using recsizer::lp::Sense;
    const int n = static_cast<int>(lp.cols());
    const int m = static_cast<int>(lp.rows());

    // Candidate active constraints: each row (as equality) and each finite
    // variable bound.
    struct Active {
        Eigen::VectorXd normal;
        double rhs;
        bool mandatory; // equality rows must always be active
    };
    std::vector<Active> constraints;
    for (int i = 0; i < m; ++i)
        constraints.push_back({lp.a.row(i).transpose(), lp.b[i], lp.senses[i] == Sense::EQ});
    for (int j = 0; j < n; ++j) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
        e[j] = 1.0;
        if (std::isfinite(lp.lower[j])) constraints.push_back({e, lp.lower[j], false});
        if (std::isfinite(lp.upper[j])) constraints.push_back({e, lp.upper[j], false});
    }

    VertexResult best;
    const int total = static_cast<int>(constraints.size());
    std::vector<int> pick(n);
    // Iterate over all n-subsets of the constraint list.
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    while (true) {
        bool contains_all_eq = true;
        for (int i = 0; i < m; ++i) {
            if (!constraints[i].mandatory) continue;
            bool found = false;
            for (int k : idx)
                if (k == i) found = true;
            if (!found) contains_all_eq = false;
        }
        if (contains_all_eq) {
            Eigen::MatrixXd system(n, n);
            Eigen::VectorXd rhs(n);
            for (int r = 0; r < n; ++r) {
                system.row(r) = constraints[idx[r]].normal.transpose();
                rhs[r] = constraints[idx[r]].rhs;
            }
            const Eigen::FullPivLU<Eigen::MatrixXd> lu(system);
            if (lu.isInvertible()) {
                const Eigen::VectorXd x = lu.solve(rhs);
                if (vertex_feasible(lp, x)) {
                    const double obj = lp.c.dot(x);
                    if (obj > best.objective) {
                        best.feasible = true;
                        best.objective = obj;
                        best.x = x;
                    }
                }
            }
        }
        // next combination
        int i = n - 1;
        while (i >= 0 && idx[i] == total - n + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int k = i + 1; k < n; ++k) idx[k] = idx[k - 1] + 1;
    }
    return best;
}

} // namespace testsupport
