#pragma once

// Gate-level representation shared by the propagation schemes and the
// accounting layer, plus the error metric used to compare states.

#include <Eigen/Dense>
#include <variant>
#include <vector>

#include "qcollide/pauli.hpp"

namespace qcollide {

// exp(-i theta P)
struct PauliRotation {
    PauliString string;
    double theta = 0.0;
};

// Arbitrary dense unitary on the full register (b = 0 schemes).
struct DenseUnitary {
    Eigen::MatrixXcd matrix;
};

// Global phase exp(-i theta); bookkeeping only, never a gate.
struct PhaseRecord {
    double theta = 0.0;
};

using Gate = std::variant<PauliRotation, DenseUnitary, PhaseRecord>;

// Application order: the first element acts first on the state.
using GateSequence = std::vector<Gate>;

void apply_gate(const Gate& g, Eigen::VectorXcd& psi);

// Total operator of the sequence (first element rightmost).
Eigen::MatrixXcd sequence_unitary(const GateSequence& seq, Eigen::Index dim);

struct GateCounts {
    long n_1q = 0;
    long n_2q = 0;
    long n_3q = 0;
    long n_dense = 0;
    long phase_records = 0;

    long rotations() const { return n_1q + n_2q + n_3q; }
    GateCounts& operator+=(const GateCounts& o);
    bool operator==(const GateCounts&) const = default;
};

void count_gate(const Gate& g, GateCounts& counts);

// Raw factor counts partitioned by Pauli weight; dense unitaries in n_dense,
// weight-0 rotations and phase records in phase_records. No merging.
GateCounts count_gates(const GateSequence& seq);

// E = mean over components of |psi_sim_j - psi_exact_j|^2.
double error_metric(const Eigen::VectorXcd& psi_sim, const Eigen::VectorXcd& psi_exact);

}  // namespace qcollide
