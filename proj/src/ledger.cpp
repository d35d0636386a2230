#include "qcollide/ledger.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "qcollide/errors.hpp"

namespace qcollide {

namespace {

int sweep_worker_count(size_t jobs) {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("QCOLLIDE_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return static_cast<int>(std::min<size_t>(n, jobs));
}

SweepRecord evaluate_point(const RescaledSchedule& schedule, int qubits,
                           const SchemeSpec& spec, long steps,
                           const Eigen::VectorXcd& oracle_state) {
    PropagateOptions lean;
    lean.record_gates = false;
    lean.record_trajectory = false;
    const auto run = propagate(schedule, qubits, spec, steps, channel_one_state(qubits), lean);
    SweepRecord rec;
    rec.steps = steps;
    rec.dt = schedule.duration() / static_cast<double>(steps);
    rec.counts = run.counts;
    rec.error = error_metric(run.psi_final, oracle_state);
    return rec;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::vector<SweepRecord> sweep(const RescaledSchedule& schedule, int qubits,
                               const SchemeSpec& spec, const std::vector<long>& steps_list,
                               const Eigen::VectorXcd& oracle_state) {
    spec.validate();
    if (steps_list.empty()) throw user_error("sweep: N list must not be empty");
    for (size_t i = 1; i < steps_list.size(); ++i)
        if (steps_list[i] <= steps_list[i - 1])
            throw user_error("sweep: N list must be strictly increasing");

    std::vector<SweepRecord> records(steps_list.size());
    const int workers = sweep_worker_count(steps_list.size());
    if (workers <= 1) {
        for (size_t i = 0; i < steps_list.size(); ++i)
            records[i] = evaluate_point(schedule, qubits, spec, steps_list[i], oracle_state);
        return records;
    }

    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < steps_list.size(); i = next.fetch_add(1))
                records[i] =
                    evaluate_point(schedule, qubits, spec, steps_list[i], oracle_state);
        });
    for (auto& th : pool) th.join();
    return records;
}

std::string sweep_csv(const std::vector<SweepRecord>& records) {
    std::ostringstream out;
    out << "N,dt,n_1q,n_2q,n_3q,n_dense,error\n";
    for (const auto& r : records) {
        out << r.steps << ',' << format_double(r.dt) << ',' << r.counts.n_1q << ','
            << r.counts.n_2q << ',' << r.counts.n_3q << ',' << r.counts.n_dense << ','
            << format_double(r.error) << '\n';
    }
    return out.str();
}

FidelityResult min_gates_for_fidelity(const RescaledSchedule& schedule, int qubits,
                                      const SchemeSpec& spec,
                                      const Eigen::VectorXcd& oracle_state, double threshold,
                                      long n_cap) {
    spec.validate();
    FidelityResult res;
    res.spec = spec;

    const auto error_at = [&](long n) {
        return evaluate_point(schedule, qubits, spec, n, oracle_state);
    };

    // Doubling phase.
    long hi = 1;
    SweepRecord at_hi = error_at(hi);
    while (at_hi.error >= threshold) {
        if (hi >= n_cap) return res;  // infeasible below the cap
        hi *= 2;
        at_hi = error_at(hi);
    }
    // Bisection on (lo, hi] with E(hi) < threshold <= E(lo).
    long lo = hi / 2;
    while (hi - lo > 1 && lo >= 1) {
        const long mid = lo + (hi - lo) / 2;
        const SweepRecord at_mid = error_at(mid);
        if (at_mid.error < threshold) {
            hi = mid;
            at_hi = at_mid;
        } else {
            lo = mid;
        }
    }
    res.feasible = true;
    res.n_min = hi;
    res.counts = at_hi.counts;
    res.error = at_hi.error;
    return res;
}

std::string fidelity_table(const std::vector<FidelityResult>& rows) {
    std::ostringstream out;
    char line[160];
    std::snprintf(line, sizeof(line), "%-12s %8s %10s %10s %10s %10s %14s\n", "scheme", "N_min",
                  "n_1q", "n_2q", "n_3q", "n_dense", "error");
    out << line;
    for (const auto& r : rows) {
        if (!r.feasible) {
            std::snprintf(line, sizeof(line), "%-12s %8s %10s %10s %10s %10s %14s\n",
                          r.spec.name().c_str(), "-", "-", "-", "-", "-", "infeasible");
            out << line;
            continue;
        }
        std::snprintf(line, sizeof(line), "%-12s %8ld %10ld %10ld %10ld %10ld %14.6g\n",
                      r.spec.name().c_str(), r.n_min, r.counts.n_1q, r.counts.n_2q,
                      r.counts.n_3q, r.counts.n_dense, r.error);
        out << line;
    }
    return out.str();
}

}  // namespace qcollide
