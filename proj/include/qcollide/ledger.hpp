#pragma once

// Error-versus-gate-count sweeps and the 99%-fidelity minimal-gate search,
// plus their CSV and text-table renderings.

#include <string>
#include <vector>

#include "qcollide/gates.hpp"
#include "qcollide/propagators.hpp"
#include "qcollide/rescale.hpp"

namespace qcollide {

struct SweepRecord {
    long steps = 0;
    double dt = 0.0;  // seconds
    GateCounts counts;
    double error = 0.0;  // E against the converged oracle
};

// One record per N, evaluated against a converged oracle state. Entries are
// independent; QCOLLIDE_THREADS caps the worker count (default: hardware).
std::vector<SweepRecord> sweep(const RescaledSchedule& schedule, int qubits,
                               const SchemeSpec& spec, const std::vector<long>& steps_list,
                               const Eigen::VectorXcd& oracle_state);

// CSV body: header `N,dt,n_1q,n_2q,n_3q,n_dense,error` then one row per record.
std::string sweep_csv(const std::vector<SweepRecord>& records);

struct FidelityResult {
    SchemeSpec spec;
    bool feasible = false;
    long n_min = 0;
    GateCounts counts;
    double error = 0.0;  // E at n_min
};

// Smallest N with E(N) < threshold, found by doubling then bisection;
// infeasible when nothing below n_cap qualifies.
FidelityResult min_gates_for_fidelity(const RescaledSchedule& schedule, int qubits,
                                      const SchemeSpec& spec,
                                      const Eigen::VectorXcd& oracle_state,
                                      double threshold = 0.01, long n_cap = 1 << 16);

// Aligned text table, one row per scheme.
std::string fidelity_table(const std::vector<FidelityResult>& rows);

}  // namespace qcollide
