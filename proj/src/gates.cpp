#include "qcollide/gates.hpp"

#include <cmath>
#include <complex>

#include "qcollide/errors.hpp"

namespace qcollide {

void apply_gate(const Gate& g, Eigen::VectorXcd& psi) {
    if (std::holds_alternative<PauliRotation>(g)) {
        const auto& rot = std::get<PauliRotation>(g);
        // P*P = I, so exp(-i theta P) = cos(theta) I - i sin(theta) P.
        const Eigen::VectorXcd px = apply_pauli(rot.string, psi);
        const std::complex<double> ms{0.0, -std::sin(rot.theta)};
        psi = std::cos(rot.theta) * psi + ms * px;
    } else if (std::holds_alternative<DenseUnitary>(g)) {
        const auto& u = std::get<DenseUnitary>(g).matrix;
        if (u.cols() != psi.size()) throw user_error("apply_gate: dimension mismatch");
        psi = u * psi;
    } else {
        const auto& ph = std::get<PhaseRecord>(g);
        psi *= std::exp(std::complex<double>{0.0, -ph.theta});
    }
}

Eigen::MatrixXcd sequence_unitary(const GateSequence& seq, Eigen::Index dim) {
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        Eigen::VectorXcd e = Eigen::VectorXcd::Zero(dim);
        e(col) = 1.0;
        for (const auto& g : seq) apply_gate(g, e);
        u.col(col) = e;
    }
    return u;
}

GateCounts& GateCounts::operator+=(const GateCounts& o) {
    n_1q += o.n_1q;
    n_2q += o.n_2q;
    n_3q += o.n_3q;
    n_dense += o.n_dense;
    phase_records += o.phase_records;
    return *this;
}

void count_gate(const Gate& g, GateCounts& counts) {
    if (std::holds_alternative<PauliRotation>(g)) {
        switch (std::get<PauliRotation>(g).string.weight()) {
            case 0: ++counts.phase_records; break;
            case 1: ++counts.n_1q; break;
            case 2: ++counts.n_2q; break;
            default: ++counts.n_3q; break;
        }
    } else if (std::holds_alternative<DenseUnitary>(g)) {
        ++counts.n_dense;
    } else {
        ++counts.phase_records;
    }
}

GateCounts count_gates(const GateSequence& seq) {
    GateCounts counts;
    for (const auto& g : seq) count_gate(g, counts);
    return counts;
}

double error_metric(const Eigen::VectorXcd& psi_sim, const Eigen::VectorXcd& psi_exact) {
    if (psi_sim.size() != psi_exact.size())
        throw user_error("error_metric: state dimension mismatch");
    return (psi_sim - psi_exact).squaredNorm() / static_cast<double>(psi_sim.size());
}

}  // namespace qcollide
