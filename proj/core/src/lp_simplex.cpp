#include "recsizer/lp/problem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "recsizer/errors.hpp"

namespace recsizer::lp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

enum class VarState : std::uint8_t { Basic, AtLower, AtUpper, FreeZero };

// Column ids: [0, n) structural, [n, n+m) row slacks (+1 coefficient),
// [n+m, n+2m) artificials (+-1 coefficient, created on demand).
class Columns {
public:
    Columns(const LinearProgram& lp)
        : n_(static_cast<int>(lp.cols())), m_(static_cast<int>(lp.rows())) {
        idx_.resize(n_);
        val_.resize(n_);
        for (int j = 0; j < n_; ++j) {
            for (int i = 0; i < m_; ++i) {
                const double v = lp.a(i, j);
                if (v != 0.0) {
                    idx_[j].push_back(i);
                    val_[j].push_back(v);
                }
            }
        }
        art_sign_.assign(m_, 0.0);
    }

    int n() const { return n_; }
    int m() const { return m_; }
    int total() const { return n_ + 2 * m_; }

    bool is_structural(int id) const { return id < n_; }
    bool is_slack(int id) const { return id >= n_ && id < n_ + m_; }
    bool is_artificial(int id) const { return id >= n_ + m_; }
    int slack_row(int id) const { return id - n_; }
    int artificial_row(int id) const { return id - n_ - m_; }

    void set_artificial(int row, double sign) { art_sign_[row] = sign; }
    double artificial_sign(int row) const { return art_sign_[row]; }

    template <typename Fn>
    void for_each_entry(int id, Fn&& fn) const {
        if (is_structural(id)) {
            const auto& rows = idx_[id];
            const auto& vals = val_[id];
            for (std::size_t k = 0; k < rows.size(); ++k) fn(rows[k], vals[k]);
        } else if (is_slack(id)) {
            fn(slack_row(id), 1.0);
        } else {
            fn(artificial_row(id), art_sign_[artificial_row(id)]);
        }
    }

    double dot_with(int id, const Eigen::VectorXd& pi) const {
        double sum = 0.0;
        for_each_entry(id, [&](int i, double v) { sum += v * pi[i]; });
        return sum;
    }

private:
    int n_, m_;
    std::vector<std::vector<int>> idx_;
    std::vector<std::vector<double>> val_;
    std::vector<double> art_sign_;
};

class Simplex {
public:
    Simplex(const LinearProgram& lp, const SimplexOptions& options)
        : lp_(lp), cols_(lp), options_(options) {
        m_ = cols_.m();
        n_ = cols_.n();
        max_iter_ = options.max_iter > 0 ? options.max_iter
                                         : 200L * (m_ + n_) + 20000L;
        lower_.assign(cols_.total(), 0.0);
        upper_.assign(cols_.total(), 0.0);
        state_.assign(cols_.total(), VarState::AtLower);
        for (int j = 0; j < n_; ++j) {
            lower_[j] = lp.lower[j];
            upper_[j] = lp.upper[j];
        }
        for (int i = 0; i < m_; ++i) {
            const int id = n_ + i;
            switch (lp.senses[i]) {
                case Sense::LE: lower_[id] = 0.0; upper_[id] = kInf; break;
                case Sense::GE: lower_[id] = -kInf; upper_[id] = 0.0; break;
                case Sense::EQ: lower_[id] = 0.0; upper_[id] = 0.0; break;
            }
        }
    }

    LPSolution run() {
        initialize_basis();
        if (need_phase1_) {
            set_phase(1);
            const bool ok = iterate();
            if (!ok) throw NumericalError("simplex: iteration limit hit in phase 1");
            if (infeasibility() > infeasibility_tol()) {
                LPSolution sol;
                sol.status = Status::Infeasible;
                sol.iterations = iterations_;
                return sol;
            }
            freeze_artificials();
        }
        set_phase(2);
        const bool ok = iterate();
        if (!ok) throw NumericalError("simplex: iteration limit hit in phase 2");
        LPSolution sol = extract(unbounded_ ? Status::Unbounded : Status::Optimal);
        if (sol.status == Status::Optimal && primal_residual(sol.x) > 5e-8) {
            // Accumulated rank-1 drift; rebuild the inverse and re-optimize.
            refactor_inverse();
            set_phase(2);
            if (!iterate()) throw NumericalError("simplex: iteration limit after refactorization");
            sol = extract(unbounded_ ? Status::Unbounded : Status::Optimal);
        }
        return sol;
    }

private:
    double cost_of(int id) const {
        if (phase_ == 1) return cols_.is_artificial(id) ? -1.0 : 0.0;
        return cols_.is_structural(id) ? lp_.c[id] : 0.0;
    }

    double nonbasic_value(int id) const {
        switch (state_[id]) {
            case VarState::AtLower: return lower_[id];
            case VarState::AtUpper: return upper_[id];
            default: return 0.0;
        }
    }

    void initialize_basis() {
        basic_.resize(m_);
        x_basic_.resize(m_);
        // Nonbasic start values: the finite bound closest to zero.
        for (int id = 0; id < cols_.total(); ++id) {
            const bool lo_fin = std::isfinite(lower_[id]);
            const bool hi_fin = std::isfinite(upper_[id]);
            if (lo_fin && hi_fin)
                state_[id] = std::abs(lower_[id]) <= std::abs(upper_[id]) ? VarState::AtLower
                                                                          : VarState::AtUpper;
            else if (lo_fin)
                state_[id] = VarState::AtLower;
            else if (hi_fin)
                state_[id] = VarState::AtUpper;
            else
                state_[id] = VarState::FreeZero;
        }

        // Row residuals with all structural variables at their start values.
        Eigen::VectorXd residual = lp_.b;
        for (int j = 0; j < n_; ++j) {
            const double v = nonbasic_value(j);
            if (v != 0.0)
                cols_.for_each_entry(j, [&](int i, double a) { residual[i] -= a * v; });
        }

        binv_ = RowMajor::Identity(m_, m_);
        need_phase1_ = false;
        for (int i = 0; i < m_; ++i) {
            const double v = residual[i];
            const bool slack_ok = v >= lower_[n_ + i] - options_.feas_tol &&
                                  v <= upper_[n_ + i] + options_.feas_tol;
            if (slack_ok) {
                basic_[i] = n_ + i;
                x_basic_[i] = v;
                state_[n_ + i] = VarState::Basic;
            } else {
                // Artificial with the residual's sign keeps the start feasible.
                const double sign = v >= 0.0 ? 1.0 : -1.0;
                cols_.set_artificial(i, sign);
                const int id = n_ + m_ + i;
                lower_[id] = 0.0;
                upper_[id] = kInf;
                basic_[i] = id;
                x_basic_[i] = std::abs(v);
                state_[id] = VarState::Basic;
                binv_(i, i) = sign; // basis column is sign * e_i
                need_phase1_ = true;
            }
        }
    }

    void set_phase(int phase) {
        phase_ = phase;
        refresh_duals();
        stall_ = 0;
        bland_ = false;
    }

    void freeze_artificials() {
        for (int i = 0; i < m_; ++i) {
            if (cols_.artificial_sign(i) == 0.0) continue;
            const int id = n_ + m_ + i;
            lower_[id] = 0.0;
            upper_[id] = 0.0;
            if (state_[id] != VarState::Basic) state_[id] = VarState::AtLower;
        }
    }

    double infeasibility() const {
        double total = 0.0;
        for (int i = 0; i < m_; ++i)
            if (cols_.is_artificial(basic_[i])) total += std::abs(x_basic_[i]);
        return total;
    }

    double infeasibility_tol() const {
        const double scale = lp_.b.size() ? lp_.b.cwiseAbs().maxCoeff() : 0.0;
        return 1e-8 * std::max(1.0, scale);
    }

    void refresh_duals() {
        pi_.setZero(m_);
        for (int i = 0; i < m_; ++i) {
            const double cb = cost_of(basic_[i]);
            if (cb != 0.0) pi_ += cb * binv_.row(i).transpose();
        }
    }

    void refresh_basics() {
        Eigen::VectorXd b_eff = lp_.b;
        for (int id = 0; id < cols_.total(); ++id) {
            if (state_[id] == VarState::Basic) continue;
            const double v = nonbasic_value(id);
            if (v != 0.0)
                cols_.for_each_entry(id, [&](int i, double a) { b_eff[i] -= a * v; });
        }
        x_basic_ = binv_ * b_eff;
    }

    Eigen::VectorXd ftran(int id) const {
        Eigen::VectorXd alpha = Eigen::VectorXd::Zero(m_);
        cols_.for_each_entry(id, [&](int i, double v) {
            alpha += v * binv_.col(i); // B^-1 e_i is column i
        });
        return alpha;
    }

    // Entering column by Dantzig (largest reduced-cost violation) or, in
    // anti-cycling mode, Bland (lowest eligible index).
    int price(double& direction) const {
        int best = -1;
        double best_score = options_.opt_tol;
        double best_dir = 1.0;
        for (int id = 0; id < cols_.total(); ++id) {
            const VarState st = state_[id];
            if (st == VarState::Basic) continue;
            if (cols_.is_artificial(id) && cols_.artificial_sign(cols_.artificial_row(id)) == 0.0)
                continue; // never created
            if (lower_[id] == upper_[id]) continue; // fixed, cannot move
            const double d = cost_of(id) - cols_.dot_with(id, pi_);
            double score = 0.0, dir = 1.0;
            if (st == VarState::AtLower && d > options_.opt_tol) {
                score = d;
                dir = 1.0;
            } else if (st == VarState::AtUpper && d < -options_.opt_tol) {
                score = -d;
                dir = -1.0;
            } else if (st == VarState::FreeZero && std::abs(d) > options_.opt_tol) {
                score = std::abs(d);
                dir = d > 0.0 ? 1.0 : -1.0;
            } else {
                continue;
            }
            if (bland_) { // first eligible index
                direction = dir;
                return id;
            }
            if (score > best_score) {
                best_score = score;
                best = id;
                best_dir = dir;
            }
        }
        direction = best_dir;
        return best;
    }

    bool iterate() {
        const long stall_limit = 5L * (m_ + n_);
        long since_refresh = 0;
        unbounded_ = false;
        while (iterations_ < max_iter_) {
            ++iterations_;
            if (++since_refresh >= 256) {
                refresh_duals();
                refresh_basics();
                since_refresh = 0;
            }

            double dir = 1.0;
            const int q = price(dir);
            if (q < 0) return true; // phase-optimal
            const double d_q = cost_of(q) - cols_.dot_with(q, pi_);
            const Eigen::VectorXd alpha = ftran(q);

            // Ratio test, pass 1: the smallest step at which a basic variable
            // or the entering variable's own opposite bound blocks.
            const double own_range = upper_[q] - lower_[q]; // inf when unbounded
            double step = std::isfinite(own_range) ? own_range : kInf;
            auto row_limit = [&](int i, bool& at_upper) -> double {
                const double a = alpha[i];
                if (std::abs(a) <= 1e-11) return kInf;
                const double rate = -dir * a; // d x_basic[i] / d step
                const int id = basic_[i];
                double limit = kInf;
                if (rate > 0.0) {
                    at_upper = true;
                    if (std::isfinite(upper_[id])) limit = (upper_[id] - x_basic_[i]) / rate;
                } else {
                    at_upper = false;
                    if (std::isfinite(lower_[id])) limit = (x_basic_[i] - lower_[id]) / -rate;
                }
                return std::max(limit, 0.0); // clamp degenerate overshoot
            };
            for (int i = 0; i < m_; ++i) {
                bool unused = false;
                step = std::min(step, row_limit(i, unused));
            }

            if (!std::isfinite(step)) {
                unbounded_ = true;
                return true;
            }

            const double move = dir * step;
            if (std::isfinite(own_range) && own_range <= step) {
                // Bound flip: the entering variable crosses to its other bound.
                apply_basic_move(alpha, move);
                state_[q] = state_[q] == VarState::AtLower ? VarState::AtUpper : VarState::AtLower;
                note_progress(d_q * move);
                continue;
            }

            // Pass 2: among the blocking rows, prefer the largest pivot for
            // stability (lowest basic index in anti-cycling mode).
            int leave = -1;
            bool leave_at_upper = false;
            for (int i = 0; i < m_; ++i) {
                bool at_upper = false;
                const double limit = row_limit(i, at_upper);
                if (limit > step + 1e-12) continue;
                const bool better =
                    leave < 0 || (bland_ ? basic_[i] < basic_[leave]
                                         : std::abs(alpha[i]) > std::abs(alpha[leave]));
                if (better) {
                    leave = i;
                    leave_at_upper = at_upper;
                }
            }
            if (leave < 0)
                throw NumericalError("simplex: ratio test found no blocking row");

            apply_basic_move(alpha, move);
            const int out = basic_[leave];
            state_[out] = leave_at_upper ? VarState::AtUpper : VarState::AtLower;
            const double entering_value = nonbasic_value(q) + move;
            basic_[leave] = q;
            state_[q] = VarState::Basic;
            x_basic_[leave] = entering_value;
            update_inverse(alpha, leave, d_q);
            note_progress(d_q * move);
        }
        return false;
    }

    void apply_basic_move(const Eigen::VectorXd& alpha, double move) {
        if (move == 0.0) return;
        x_basic_ -= move * alpha;
    }

    // Rank-1 update of the explicit inverse plus the incremental dual update
    // pi += d_q * (row r of the new inverse).
    void update_inverse(const Eigen::VectorXd& alpha, int r, double d_q) {
        const double pivot = alpha[r];
        if (std::abs(pivot) < 1e-12)
            throw NumericalError("simplex: pivot magnitude " + std::to_string(pivot) +
                                 " below tolerance (condition trouble)");
        row_buffer_ = binv_.row(r) / pivot;
        for (int i = 0; i < m_; ++i) {
            if (i == r) continue;
            const double a = alpha[i];
            if (a != 0.0) binv_.row(i) -= a * row_buffer_;
        }
        binv_.row(r) = row_buffer_;
        pi_ += d_q * row_buffer_.transpose();
    }

    double primal_residual(const Eigen::VectorXd& x) const {
        const Eigen::VectorXd row_value = lp_.a * x;
        double worst = 0.0;
        for (int i = 0; i < m_; ++i) {
            const double r = row_value[i] - lp_.b[i];
            double v = 0.0;
            switch (lp_.senses[i]) {
                case Sense::LE: v = std::max(0.0, r); break;
                case Sense::GE: v = std::max(0.0, -r); break;
                case Sense::EQ: v = std::abs(r); break;
            }
            worst = std::max(worst, v);
        }
        for (int j = 0; j < n_; ++j) {
            if (std::isfinite(lp_.lower[j])) worst = std::max(worst, lp_.lower[j] - x[j]);
            if (std::isfinite(lp_.upper[j])) worst = std::max(worst, x[j] - lp_.upper[j]);
        }
        return worst;
    }

    void refactor_inverse() {
        Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(m_, m_);
        for (int i = 0; i < m_; ++i)
            cols_.for_each_entry(basic_[i], [&](int row, double v) { basis(row, i) = v; });
        Eigen::PartialPivLU<Eigen::MatrixXd> lu(basis);
        const Eigen::MatrixXd inv = lu.inverse();
        if (!inv.allFinite())
            throw NumericalError("simplex: singular basis during refactorization (rcond ~ " +
                                 std::to_string(lu.rcond()) + ")");
        binv_ = inv;
        refresh_duals();
        refresh_basics();
    }

    void note_progress(double delta_obj) {
        if (std::abs(delta_obj) > 1e-13) {
            stall_ = 0;
            bland_ = false;
        } else if (++stall_ > 5L * (m_ + n_)) {
            bland_ = true;
        }
    }

    LPSolution extract(Status status) {
        LPSolution sol;
        sol.status = status;
        sol.iterations = iterations_;
        if (status != Status::Optimal) return sol;

        refresh_duals();
        refresh_basics();
        sol.x.resize(n_);
        for (int j = 0; j < n_; ++j) sol.x[j] = nonbasic_value(j);
        for (int i = 0; i < m_; ++i)
            if (cols_.is_structural(basic_[i])) sol.x[basic_[i]] = x_basic_[i];
        sol.y = pi_;
        sol.reduced_costs.resize(n_);
        for (int j = 0; j < n_; ++j) sol.reduced_costs[j] = lp_.c[j] - cols_.dot_with(j, pi_);
        sol.objective = lp_.c.dot(sol.x);
        if (!sol.x.allFinite())
            throw NumericalError("simplex: nonfinite primal values after solve");
        return sol;
    }

    const LinearProgram& lp_;
    Columns cols_;
    SimplexOptions options_;
    int m_ = 0, n_ = 0;
    long max_iter_ = 0;
    long iterations_ = 0;
    long stall_ = 0;
    bool bland_ = false;
    bool need_phase1_ = false;
    bool unbounded_ = false;
    int phase_ = 2;

    std::vector<double> lower_, upper_;
    std::vector<VarState> state_;
    std::vector<int> basic_;
    Eigen::VectorXd x_basic_;
    Eigen::VectorXd pi_;
    RowMajor binv_;
    Eigen::RowVectorXd row_buffer_;
};

} // namespace

const char* to_string(Status s) {
    switch (s) {
        case Status::Optimal: return "optimal";
        case Status::Infeasible: return "infeasible";
        case Status::Unbounded: return "unbounded";
    }
    return "?";
}

const char* to_string(Sense s) {
    switch (s) {
        case Sense::LE: return "<=";
        case Sense::EQ: return "=";
        case Sense::GE: return ">=";
    }
    return "?";
}

void LinearProgram::check() const {
    const Eigen::Index m = a.rows();
    const Eigen::Index n = a.cols();
    if (c.size() != n || b.size() != m || static_cast<Eigen::Index>(senses.size()) != m ||
        lower.size() != n || upper.size() != n)
        throw StructureError("LinearProgram: dimension mismatch");
    for (Eigen::Index j = 0; j < n; ++j) {
        if (lower[j] > upper[j])
            throw StructureError("LinearProgram: lower bound exceeds upper bound at column " +
                                 std::to_string(j));
        if (std::isnan(lower[j]) || std::isnan(upper[j]))
            throw StructureError("LinearProgram: NaN bound");
    }
    if (!c.allFinite() || !b.allFinite() || !a.allFinite())
        throw StructureError("LinearProgram: nonfinite data");
}

LPSolution solve_lp(const LinearProgram& lp, const SimplexOptions& options) {
    lp.check();
    Simplex simplex(lp, options);
    return simplex.run();
}

double duality_gap(const LinearProgram& lp, const LPSolution& solution) {
    if (solution.status != Status::Optimal)
        throw StateError("duality_gap: solution is not optimal");
    lp.check();
    const double primal = lp.c.dot(solution.x);
    // Dual objective: y'b plus the bound terms picked by the sign of the
    // reduced costs (complementary slackness).
    double dual = lp.b.dot(solution.y);
    const Eigen::VectorXd d = lp.c - lp.a.transpose() * solution.y;
    for (Eigen::Index j = 0; j < lp.cols(); ++j) {
        if (d[j] > 1e-11) {
            if (std::isfinite(lp.upper[j])) dual += d[j] * lp.upper[j];
        } else if (d[j] < -1e-11) {
            if (std::isfinite(lp.lower[j])) dual += d[j] * lp.lower[j];
        }
    }
    return std::abs(primal - dual);
}

} // namespace recsizer::lp
