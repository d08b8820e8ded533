#include "recsizer/sizing/oracle.hpp"

#include <atomic>
#include <cmath>
#include <future>
#include <limits>

#include "recsizer/errors.hpp"

namespace recsizer::sizing {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Sizing {
    std::vector<int> np;
    std::vector<int> nb;
    std::vector<int> battery_owners;
    std::uint64_t patterns = 1; // 2^(owners * hours)
    std::uint64_t offset = 0;   // start of this sizing's slice of the index space
};

struct Candidate {
    double penalized = -kInf;
    std::uint64_t index = 0;
    std::vector<int> np, nb;
    std::uint64_t pattern = 0;
    Eigen::VectorXd x;
};

} // namespace

SizingSolution brute_force_oracle(const SizingProblem& problem, const OracleLimits& limits,
                                  int threads) {
    problem.check();
    const int n_part = problem.n_participants();
    const int n_hours = problem.n_hours();
    if (n_part > limits.max_participants || n_hours > limits.max_hours ||
        problem.bess.max_units > limits.max_units)
        throw OracleLimitError("brute_force_oracle: instance exceeds enumeration limits");
    for (const auto& p : problem.participants)
        if (p.max_panels > limits.max_panels)
            throw OracleLimitError("brute_force_oracle: panel bound exceeds enumeration limits");

    const VariableIndex vi = problem.index();
    const lp::LinearProgram prototype = build_full_lp(problem);
    const double penalty = problem.unit_tiebreak_penalty;

    // Integer sizing tuples; each owns a contiguous slice of the global
    // assignment index space, one index per indicator pattern. The both-off
    // hour pattern is dominated by charge-allowed and discharge-allowed, so
    // only those two are enumerated per battery hour.
    std::vector<Sizing> sizings;
    {
        Sizing base;
        base.np.assign(n_part, 0);
        base.nb.assign(n_part, 0);
        sizings.push_back(base);
        for (int n = 0; n < n_part; ++n) {
            std::vector<Sizing> expanded;
            for (const Sizing& s : sizings) {
                for (int np = 0; np <= problem.participants[n].max_panels; ++np) {
                    for (int nb = 0; nb <= problem.bess.max_units; ++nb) {
                        Sizing next = s;
                        next.np[n] = np;
                        next.nb[n] = nb;
                        expanded.push_back(std::move(next));
                    }
                }
            }
            sizings.swap(expanded);
        }
        std::uint64_t offset = 0;
        for (Sizing& s : sizings) {
            for (int n = 0; n < n_part; ++n)
                if (s.nb[n] > 0) s.battery_owners.push_back(n);
            s.patterns = std::uint64_t{1} << (s.battery_owners.size() * n_hours);
            s.offset = offset;
            offset += s.patterns;
        }
    }
    const std::uint64_t total = sizings.back().offset + sizings.back().patterns;

    auto evaluate = [&](lp::LinearProgram& lp, const Sizing& s, std::uint64_t pattern,
                        std::uint64_t index, Candidate& best, long& iterations) {
        for (int n = 0; n < n_part; ++n) {
            lp.lower[vi.n_panels(n)] = s.np[n];
            lp.upper[vi.n_panels(n)] = s.np[n];
            lp.lower[vi.n_units(n)] = s.nb[n];
            lp.upper[vi.n_units(n)] = s.nb[n];
            for (int t = 0; t < n_hours; ++t) {
                lp.lower[vi.b_charge(n, t)] = 0.0;
                lp.upper[vi.b_charge(n, t)] = 0.0;
                lp.lower[vi.b_discharge(n, t)] = 0.0;
                lp.upper[vi.b_discharge(n, t)] = 0.0;
            }
        }
        std::uint64_t bits = pattern;
        for (const int n : s.battery_owners) {
            for (int t = 0; t < n_hours; ++t) {
                const bool charge_allowed = bits & 1;
                bits >>= 1;
                const int col = charge_allowed ? vi.b_charge(n, t) : vi.b_discharge(n, t);
                lp.lower[col] = 1.0;
                lp.upper[col] = 1.0;
            }
        }
        const lp::LPSolution sol = lp::solve_lp(lp);
        iterations += sol.iterations;
        if (sol.status != lp::Status::Optimal) return;
        // Indices within a worker only grow, so keeping strict improvement
        // leaves the lowest index as the tie winner.
        if (sol.objective <= best.penalized + 1e-12) return;
        best.penalized = sol.objective;
        best.index = index;
        best.np = s.np;
        best.nb = s.nb;
        best.pattern = pattern;
        best.x = sol.x;
    };

    const int workers = std::max(1, threads);
    std::vector<Candidate> worker_best(workers);
    std::vector<long> worker_iters(workers, 0);
    auto run_worker = [&](int w) {
        lp::LinearProgram lp = prototype;
        std::size_t sizing_idx = 0;
        for (std::uint64_t index = w; index < total; index += workers) {
            while (sizing_idx + 1 < sizings.size() && index >= sizings[sizing_idx + 1].offset)
                ++sizing_idx;
            const Sizing& s = sizings[sizing_idx];
            evaluate(lp, s, index - s.offset, index, worker_best[w], worker_iters[w]);
        }
    };
    if (workers == 1) {
        run_worker(0);
    } else {
        std::vector<std::future<void>> futures;
        for (int w = 0; w < workers; ++w)
            futures.push_back(std::async(std::launch::async, run_worker, w));
        for (auto& f : futures) f.get();
    }

    // Deterministic reduce: best penalized objective, lowest index on ties.
    Candidate best;
    long total_iterations = 0;
    for (int w = 0; w < workers; ++w) {
        total_iterations += worker_iters[w];
        const Candidate& c = worker_best[w];
        if (c.penalized == -kInf) continue;
        const bool better = c.penalized > best.penalized + 1e-12 ||
                            (std::abs(c.penalized - best.penalized) <= 1e-12 &&
                             (best.penalized == -kInf || c.index < best.index));
        if (better) best = c;
    }
    if (!std::isfinite(best.penalized) || best.penalized == -kInf)
        throw NumericalError("brute_force_oracle: no feasible assignment (unexpected)");

    int units = 0;
    for (int n = 0; n < n_part; ++n) units += best.np[n] + best.nb[n];

    SizingSolution out;
    out.feasible = true;
    out.n_panels = best.np;
    out.n_units = best.nb;
    out.objective_npv_eur = best.penalized + penalty * units;
    out.gap = 0.0;
    out.stats.nodes = static_cast<long>(total);
    out.stats.lp_iterations = total_iterations;
    out.stats.proven = true;

    out.dispatch.hours = problem.hours;
    out.dispatch.dt_hours = problem.dt_hours;
    out.dispatch.shared_kw.assign(n_hours, 0.0);
    for (int t = 0; t < n_hours; ++t)
        out.dispatch.shared_kw[t] = std::max(0.0, best.x[vi.shared(t)]);
    out.dispatch.participants.assign(n_part, {});
    for (int n = 0; n < n_part; ++n) {
        ParticipantDispatch& d = out.dispatch.participants[n];
        d.p_self_kw.resize(n_hours);
        d.p_sell_kw.resize(n_hours);
        d.p_charge_kw.resize(n_hours);
        d.p_discharge_kw.resize(n_hours);
        d.soc_kwh.resize(n_hours + 1);
        d.charge_on.resize(n_hours);
        d.discharge_on.resize(n_hours);
        d.soc_kwh[0] = best.x[vi.soc_start(n)];
        for (int t = 0; t < n_hours; ++t) {
            double p_c = std::max(0.0, best.x[vi.p_charge(n, t)]);
            double p_d = std::max(0.0, best.x[vi.p_discharge(n, t)]);
            if (p_c < 1e-9) p_c = 0.0;
            if (p_d < 1e-9) p_d = 0.0;
            d.p_self_kw[t] = std::max(0.0, best.x[vi.p_self(n, t)]);
            d.p_sell_kw[t] = std::max(0.0, best.x[vi.p_sell(n, t)]);
            d.p_charge_kw[t] = p_c;
            d.p_discharge_kw[t] = p_d;
            d.soc_kwh[t + 1] = best.x[vi.soc(n, t)];
            d.charge_on[t] = p_c > 0.0 ? 1 : 0;
            d.discharge_on[t] = p_d > 0.0 ? 1 : 0;
        }
    }
    return out;
}

} // namespace recsizer::sizing
