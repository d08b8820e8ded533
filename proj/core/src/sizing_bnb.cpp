#include "recsizer/sizing/bnb.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <future>
#include <limits>
#include <queue>

#include "recsizer/errors.hpp"
#include "recsizer/log.hpp"

namespace recsizer::sizing {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kIntTol = 1e-7;   // integrality acceptance on counts
constexpr double kFlowTol = 1e-9;  // a flow below this is "off"

// Columns of the node relaxation (sell eliminated through the power
// balance, indicators replaced by their exact projection):
//   [np per participant][nb per participant]
//   [per participant, per hour: p_self, p_charge, p_discharge, soc]
//   [soc_start per participant][shared per hour]
class NodeIndex {
public:
    NodeIndex(int n, int t) : n_(n), t_(t) {}
    int np(int n) const { return n; }
    int nb(int n) const { return n_ + n; }
    int p_self(int n, int t) const { return 2 * n_ + (n * t_ + t) * 4 + 0; }
    int p_charge(int n, int t) const { return 2 * n_ + (n * t_ + t) * 4 + 1; }
    int p_discharge(int n, int t) const { return 2 * n_ + (n * t_ + t) * 4 + 2; }
    int soc(int n, int t) const { return 2 * n_ + (n * t_ + t) * 4 + 3; }
    int soc_start(int n) const { return 2 * n_ + 4 * n_ * t_ + n; }
    int shared(int t) const { return 2 * n_ + 4 * n_ * t_ + n_ + t; }
    int total() const { return 2 * n_ + 4 * n_ * t_ + n_ + t_; }

private:
    int n_, t_;
};

// The node relaxation. Exactly equivalent to build_full_lp with the
// indicator box relaxed: p_sell is substituted out via (16a) and the three
// indicator rows project onto p_c/cap_c + p_d/cap_d <= 1.
lp::LinearProgram build_node_lp(const SizingProblem& p) {
    const int n_part = p.n_participants();
    const int n_hours = p.n_hours();
    const NodeIndex vi(n_part, n_hours);
    const bool with_bess = p.bess.max_units > 0;
    const int rows_per_nt = with_bess ? 9 : 8;
    const int rows = n_part * n_hours * rows_per_nt + 2 * n_hours + n_part * p.n_days();
    const double charge_cap = p.bess.max_units * p.bess.p_charge_max_kw;
    const double discharge_cap = p.bess.max_units * p.bess.p_discharge_max_kw;
    const double scale = p.flow_scale();

    lp::LinearProgram lp;
    lp.c = Eigen::VectorXd::Zero(vi.total());
    lp.a = Eigen::MatrixXd::Zero(rows, vi.total());
    lp.b = Eigen::VectorXd::Zero(rows);
    lp.senses.assign(rows, lp::Sense::LE);
    lp.lower = Eigen::VectorXd::Zero(vi.total());
    lp.upper = Eigen::VectorXd::Constant(vi.total(), kInf);

    for (int n = 0; n < n_part; ++n) {
        double sell_value_per_panel = 0.0;
        for (int t = 0; t < n_hours; ++t)
            sell_value_per_panel += p.sell_rate[t] * p.pv_per_panel_kw[t] * scale;
        lp.c[vi.np(n)] =
            sell_value_per_panel - p.panel_cost_npv_eur - p.unit_tiebreak_penalty;
        lp.c[vi.nb(n)] = -p.bess_unit_cost_npv_eur - p.unit_tiebreak_penalty;
        lp.upper[vi.np(n)] = p.participants[n].max_panels;
        lp.upper[vi.nb(n)] = p.bess.max_units;
        lp.upper[vi.soc_start(n)] = p.bess.max_units * p.bess.soc_max_kwh;
        for (int t = 0; t < n_hours; ++t) {
            lp.c[vi.p_self(n, t)] = (p.buy_rate[t] - p.sell_rate[t]) * scale;
            lp.upper[vi.p_charge(n, t)] = charge_cap;
            lp.upper[vi.p_discharge(n, t)] = discharge_cap;
            lp.upper[vi.soc(n, t)] = p.bess.max_units * p.bess.soc_max_kwh;
        }
    }
    for (int t = 0; t < n_hours; ++t) lp.c[vi.shared(t)] = p.share_rate * scale;

    int row = 0;
    for (int n = 0; n < n_part; ++n) {
        for (int t = 0; t < n_hours; ++t) {
            const double gen = p.pv_per_panel_kw[t];
            // self <= gen*np  (doubles as sell >= 0)
            lp.a(row, vi.p_self(n, t)) = 1.0;
            lp.a(row, vi.np(n)) = -gen;
            ++row;
            // (16c)
            lp.b[row] = p.participants[n].demand_kw[t];
            lp.a(row, vi.p_self(n, t)) = 1.0;
            lp.a(row, vi.p_charge(n, t)) = -1.0;
            lp.a(row, vi.p_discharge(n, t)) = 1.0;
            ++row;
            // (16f)
            lp.a(row, vi.p_charge(n, t)) = 1.0;
            lp.a(row, vi.np(n)) = -gen;
            ++row;
            // SOC recursion
            lp.senses[row] = lp::Sense::EQ;
            lp.a(row, vi.soc(n, t)) = 1.0;
            lp.a(row, t == 0 ? vi.soc_start(n) : vi.soc(n, t - 1)) = -1.0;
            lp.a(row, vi.p_charge(n, t)) = -p.bess.eta_charge * p.dt_hours;
            lp.a(row, vi.p_discharge(n, t)) = p.dt_hours / p.bess.eta_discharge;
            ++row;
            // SOC within unit-scaled bounds
            lp.senses[row] = lp::Sense::GE;
            lp.a(row, vi.soc(n, t)) = 1.0;
            lp.a(row, vi.nb(n)) = -p.bess.soc_min_kwh;
            ++row;
            lp.a(row, vi.soc(n, t)) = 1.0;
            lp.a(row, vi.nb(n)) = -p.bess.soc_max_kwh;
            ++row;
            // per-unit power caps
            lp.a(row, vi.p_charge(n, t)) = 1.0;
            lp.a(row, vi.nb(n)) = -p.bess.p_charge_max_kw;
            ++row;
            lp.a(row, vi.p_discharge(n, t)) = 1.0;
            lp.a(row, vi.nb(n)) = -p.bess.p_discharge_max_kw;
            ++row;
            if (with_bess) {
                // exact projection of {p_c <= cap b_c, p_d <= cap b_d, b_c+b_d <= 1}
                lp.b[row] = 1.0;
                lp.a(row, vi.p_charge(n, t)) = 1.0 / charge_cap;
                lp.a(row, vi.p_discharge(n, t)) = 1.0 / discharge_cap;
                ++row;
            }
        }
    }
    for (int t = 0; t < n_hours; ++t) {
        double total_demand = 0.0;
        lp.a(row, vi.shared(t)) = 1.0;
        for (int n = 0; n < n_part; ++n) {
            total_demand += p.participants[n].demand_kw[t];
            lp.a(row, vi.p_self(n, t)) = 1.0;
            lp.a(row, vi.p_charge(n, t)) = -1.0;
            lp.a(row, vi.p_discharge(n, t)) = 1.0;
        }
        lp.b[row] = total_demand;
        ++row;
        // shared <= total sold = sum(gen*np - self)
        lp.a(row, vi.shared(t)) = 1.0;
        for (int n = 0; n < n_part; ++n) {
            lp.a(row, vi.p_self(n, t)) = 1.0;
            lp.a(row, vi.np(n)) -= p.pv_per_panel_kw[t];
        }
        ++row;
    }
    for (int n = 0; n < n_part; ++n) {
        for (int v = 1; v <= p.n_days(); ++v) {
            lp.senses[row] = lp::Sense::EQ;
            lp.a(row, vi.soc(n, v * p.hours_per_day - 1)) = 1.0;
            lp.a(row, v == 1 ? vi.soc_start(n)
                             : vi.soc(n, (v - 1) * p.hours_per_day - 1)) = -1.0;
            ++row;
        }
    }
    if (row != rows) throw StructureError("build_node_lp: row count mismatch");
    return lp;
}

struct Node {
    long id = 0;
    double bound = kInf;
    // Bound overrides along the path: (column, lower, upper).
    std::vector<std::array<double, 3>> overrides;
};

struct NodeOrder {
    bool operator()(const Node& a, const Node& b) const {
        if (a.bound != b.bound) return a.bound < b.bound; // max-heap on bound
        return a.id > b.id;                               // then oldest first
    }
};

struct NodeResult {
    lp::Status status = lp::Status::Infeasible;
    double objective = -kInf;
    Eigen::VectorXd x;
    long iterations = 0;
};

} // namespace

SizingSolution solve_bnb(const SizingProblem& problem, const SolveOptions& options) {
    problem.check();
    const auto t_start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    };

    const int n_part = problem.n_participants();
    const int n_hours = problem.n_hours();
    const NodeIndex vi(n_part, n_hours);
    const lp::LinearProgram prototype = build_node_lp(problem);
    const int threads = std::max(1, options.threads);

    SizingSolution best;
    best.feasible = false;
    best.stats.proven = false;
    double best_penalized = -kInf;

    auto solve_node = [&](const lp::LinearProgram& base, const Node& node) {
        lp::LinearProgram lp = base;
        for (const auto& ov : node.overrides) {
            const int col = static_cast<int>(ov[0]);
            lp.lower[col] = std::max(lp.lower[col], ov[1]);
            lp.upper[col] = std::min(lp.upper[col], ov[2]);
            if (lp.lower[col] > lp.upper[col]) {
                NodeResult r;
                r.status = lp::Status::Infeasible;
                return r;
            }
        }
        NodeResult r;
        const lp::LPSolution sol = lp::solve_lp(lp);
        r.status = sol.status;
        r.iterations = sol.iterations;
        if (sol.status == lp::Status::Optimal) {
            r.objective = sol.objective;
            r.x = sol.x;
        }
        return r;
    };

    // Evaluate a candidate sizing under the node's branching bounds. The
    // relaxation may still run charge and discharge in the same hour when
    // the buy rate exceeds the sell rate (a profitable but indicator-
    // infeasible loop); if it does, an hourly exclusivity pattern is read
    // off the relaxed dispatch and the LP is re-solved with the losing side
    // pinned to zero, making the incumbent feasible by construction.
    auto try_incumbent = [&](const std::vector<int>& np, const std::vector<int>& nb,
                             const std::vector<std::array<double, 3>>& overrides) {
        lp::LinearProgram fixed = prototype;
        for (const auto& ov : overrides) {
            const int col = static_cast<int>(ov[0]);
            fixed.lower[col] = std::max(fixed.lower[col], ov[1]);
            fixed.upper[col] = std::min(fixed.upper[col], ov[2]);
        }
        for (int n = 0; n < n_part; ++n) {
            if (np[n] < fixed.lower[vi.np(n)] - 0.5 || np[n] > fixed.upper[vi.np(n)] + 0.5 ||
                nb[n] < fixed.lower[vi.nb(n)] - 0.5 || nb[n] > fixed.upper[vi.nb(n)] + 0.5)
                return; // rounding left the node's box
            fixed.lower[vi.np(n)] = np[n];
            fixed.upper[vi.np(n)] = np[n];
            fixed.lower[vi.nb(n)] = nb[n];
            fixed.upper[vi.nb(n)] = nb[n];
        }
        lp::LPSolution sol = lp::solve_lp(fixed);
        best.stats.lp_iterations += sol.iterations;
        if (sol.status != lp::Status::Optimal) return;

        bool loops = false;
        for (int n = 0; n < n_part && !loops; ++n)
            for (int t = 0; t < n_hours && !loops; ++t)
                loops = std::min(sol.x[vi.p_charge(n, t)], sol.x[vi.p_discharge(n, t)]) >
                        kFlowTol;
        if (loops) {
            for (int n = 0; n < n_part; ++n) {
                for (int t = 0; t < n_hours; ++t) {
                    const int losing = sol.x[vi.p_charge(n, t)] >= sol.x[vi.p_discharge(n, t)]
                                           ? vi.p_discharge(n, t)
                                           : vi.p_charge(n, t);
                    fixed.upper[losing] = 0.0;
                }
            }
            sol = lp::solve_lp(fixed);
            best.stats.lp_iterations += sol.iterations;
            if (sol.status != lp::Status::Optimal) return;
        }

        const double scale = problem.flow_scale();
        DispatchSolution dispatch;
        dispatch.hours = problem.hours;
        dispatch.dt_hours = problem.dt_hours;
        dispatch.participants.assign(n_part, {});
        dispatch.shared_kw.assign(n_hours, 0.0);

        double economic = 0.0;
        int units_total = 0;
        for (int n = 0; n < n_part; ++n) {
            units_total += np[n] + nb[n];
            economic -= np[n] * problem.panel_cost_npv_eur;
            economic -= nb[n] * problem.bess_unit_cost_npv_eur;
            ParticipantDispatch& d = dispatch.participants[n];
            d.p_self_kw.resize(n_hours);
            d.p_sell_kw.resize(n_hours);
            d.p_charge_kw.resize(n_hours);
            d.p_discharge_kw.resize(n_hours);
            d.soc_kwh.resize(n_hours + 1);
            d.charge_on.resize(n_hours);
            d.discharge_on.resize(n_hours);
            d.soc_kwh[0] = sol.x[vi.soc_start(n)];
            for (int t = 0; t < n_hours; ++t) {
                double p_c = std::max(0.0, sol.x[vi.p_charge(n, t)]);
                double p_d = std::max(0.0, sol.x[vi.p_discharge(n, t)]);
                if (p_c < kFlowTol) p_c = 0.0;
                if (p_d < kFlowTol) p_d = 0.0;
                if (p_c > 0.0 && p_d > 0.0) return; // still loopy; not an incumbent
                const double gen = problem.pv_per_panel_kw[t] * np[n];
                const double self = std::max(0.0, std::min(sol.x[vi.p_self(n, t)], gen));
                d.p_self_kw[t] = self;
                d.p_sell_kw[t] = std::max(0.0, gen - self);
                d.p_charge_kw[t] = p_c;
                d.p_discharge_kw[t] = p_d;
                d.soc_kwh[t + 1] = sol.x[vi.soc(n, t)];
                d.charge_on[t] = p_c > 0.0 ? 1 : 0;
                d.discharge_on[t] = p_d > 0.0 ? 1 : 0;
                economic += (problem.sell_rate[t] * d.p_sell_kw[t] +
                             problem.buy_rate[t] * d.p_self_kw[t]) *
                            scale;
            }
        }
        for (int t = 0; t < n_hours; ++t) {
            dispatch.shared_kw[t] = std::max(0.0, sol.x[vi.shared(t)]);
            economic += problem.share_rate * dispatch.shared_kw[t] * scale;
        }

        const double penalized = economic - problem.unit_tiebreak_penalty * units_total;
        if (penalized <= best_penalized + 1e-12) return;
        best_penalized = penalized;
        best.feasible = true;
        best.n_panels = np;
        best.n_units = nb;
        best.objective_npv_eur = economic;
        best.dispatch = std::move(dispatch);
    };

    // Root node plus best-bound exploration in deterministic waves.
    std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
    long next_id = 0;
    open.push(Node{next_id++, kInf, {}});
    bool root_infeasible = false;
    long nodes_processed = 0;
    bool limits_hit = false;

    std::vector<lp::LinearProgram> worker_base(threads, prototype);

    while (!open.empty()) {
        const double global_bound = open.top().bound;
        const double gap =
            best.feasible
                ? std::max(0.0, (global_bound - best_penalized) / std::max(1.0, std::abs(best_penalized)))
                : kInf;
        if (best.feasible && (!std::isfinite(global_bound) ? false : gap <= options.gap_tol)) {
            best.stats.proven = true;
            break;
        }
        if ((options.node_limit > 0 && nodes_processed >= options.node_limit) ||
            (options.time_limit_s > 0.0 && elapsed() > options.time_limit_s)) {
            limits_hit = true;
            break;
        }

        // Pop a deterministic wave of the best nodes, discarding any whose
        // inherited bound can no longer beat the incumbent.
        std::vector<Node> wave;
        while (!open.empty() && static_cast<int>(wave.size()) < threads) {
            Node node = open.top();
            open.pop();
            if (best.feasible && node.bound <= best_penalized + 1e-12) {
                ++nodes_processed;
                continue;
            }
            wave.push_back(std::move(node));
        }
        if (wave.empty()) continue;
        std::vector<NodeResult> results(wave.size());
        if (wave.size() == 1) {
            results[0] = solve_node(worker_base[0], wave[0]);
        } else {
            std::vector<std::future<NodeResult>> futures;
            for (std::size_t w = 0; w < wave.size(); ++w)
                futures.push_back(std::async(std::launch::async, [&, w] {
                    return solve_node(worker_base[w], wave[w]);
                }));
            for (std::size_t w = 0; w < wave.size(); ++w) results[w] = futures[w].get();
        }

        // Process results in wave order (wave is sorted by the pop order,
        // which is deterministic), keeping the tree identical for any
        // thread count.
        for (std::size_t w = 0; w < wave.size(); ++w) {
            const Node& node = wave[w];
            const NodeResult& res = results[w];
            ++nodes_processed;
            best.stats.lp_iterations += res.iterations;
            if (res.status == lp::Status::Infeasible) {
                if (node.id == 0) root_infeasible = true;
                continue;
            }
            if (res.status == lp::Status::Unbounded)
                throw NumericalError("solve_bnb: relaxation unbounded (malformed economics)");
            if (best.feasible && res.objective <= best_penalized + 1e-12) continue; // pruned

            // Fractionality of the integer counts.
            int branch_col = -1;
            double branch_value = 0.0;
            double worst_frac = kIntTol;
            std::vector<int> np_round(n_part), nb_round(n_part);
            for (int n = 0; n < n_part; ++n) {
                for (const int col : {vi.np(n), vi.nb(n)}) {
                    const double v = res.x[col];
                    const double frac = std::abs(v - std::round(v));
                    if (frac > worst_frac) {
                        worst_frac = frac;
                        branch_col = col;
                        branch_value = v;
                    }
                }
                np_round[n] = static_cast<int>(std::round(res.x[vi.np(n)]));
                nb_round[n] = static_cast<int>(std::round(res.x[vi.nb(n)]));
            }

            if (branch_col >= 0) {
                // Counts fractional: dive on the most fractional one, and use
                // the rounding as a cheap incumbent candidate at the root.
                if (node.id == 0) try_incumbent(np_round, nb_round, node.overrides);
                Node down = node;
                down.id = next_id++;
                down.bound = res.objective;
                down.overrides.push_back(
                    {static_cast<double>(branch_col), -kInf, std::floor(branch_value)});
                Node up = node;
                up.id = next_id++;
                up.bound = res.objective;
                up.overrides.push_back(
                    {static_cast<double>(branch_col), std::ceil(branch_value), kInf});
                open.push(std::move(down));
                open.push(std::move(up));
                continue;
            }

            // Counts integral: enforce hourly exclusivity where the
            // relaxation still charges and discharges simultaneously.
            int viol_n = -1, viol_t = -1;
            double viol = kFlowTol;
            for (int n = 0; n < n_part; ++n) {
                for (int t = 0; t < n_hours; ++t) {
                    const double m =
                        std::min(res.x[vi.p_charge(n, t)], res.x[vi.p_discharge(n, t)]);
                    if (m > viol) {
                        viol = m;
                        viol_n = n;
                        viol_t = t;
                    }
                }
            }
            if (viol_n >= 0) {
                // A repaired incumbent keeps pruning effective while the
                // branching below restores exact exclusivity.
                try_incumbent(np_round, nb_round, node.overrides);
                Node off_charge = node;
                off_charge.id = next_id++;
                off_charge.bound = res.objective;
                off_charge.overrides.push_back(
                    {static_cast<double>(vi.p_charge(viol_n, viol_t)), -kInf, 0.0});
                Node off_discharge = node;
                off_discharge.id = next_id++;
                off_discharge.bound = res.objective;
                off_discharge.overrides.push_back(
                    {static_cast<double>(vi.p_discharge(viol_n, viol_t)), -kInf, 0.0});
                open.push(std::move(off_charge));
                open.push(std::move(off_discharge));
                continue;
            }

            try_incumbent(np_round, nb_round, node.overrides);
        }

        REC_LOG_INFO("node=" << nodes_processed << " bound="
                             << (open.empty() ? best_penalized : open.top().bound)
                             << " incumbent=" << (best.feasible ? best_penalized : -kInf)
                             << " gap="
                             << (best.feasible && !open.empty()
                                     ? std::max(0.0, (open.top().bound - best_penalized) /
                                                         std::max(1.0, std::abs(best_penalized)))
                                     : 0.0));
    }

    if (root_infeasible) {
        best.feasible = false;
        best.stats.nodes = nodes_processed;
        best.stats.wall_seconds = elapsed();
        return best;
    }

    if (open.empty() && best.feasible) best.stats.proven = true;
    best.gap = 0.0;
    if (!open.empty() && best.feasible)
        best.gap = std::max(0.0, (open.top().bound - best_penalized) /
                                     std::max(1.0, std::abs(best_penalized)));
    if (limits_hit) best.stats.proven = best.feasible && best.gap <= options.gap_tol;
    best.stats.nodes = nodes_processed;
    best.stats.wall_seconds = elapsed();
    return best;
}

} // namespace recsizer::sizing
