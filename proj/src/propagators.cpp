#include "qcollide/propagators.hpp"

#include <cmath>
#include <complex>

#include "qcollide/collision.hpp"
#include "qcollide/errors.hpp"

namespace qcollide {

namespace detail {
bool gadget_sign_flip_for_test = false;
}

void SchemeSpec::validate() const {
    const bool a_ok = magnus_order == 1 || magnus_order == 4;
    const bool b_ok = split_order == 0 || split_order == 1 || split_order == 2 ||
                      split_order == 4;
    if (!a_ok || !b_ok) throw user_error("invalid scheme " + name());
    if (magnus_order == 1 && split_order != 0)
        throw user_error("invalid scheme " + name() + ": first-order stepping is unsplit");
    if (split_order == 0 && gadget != GadgetOrder::none)
        throw user_error("invalid scheme " + name() +
                         ": unsplit schemes produce dense exponentials, never gadgets");
}

std::string SchemeSpec::name() const {
    std::string c = gadget == GadgetOrder::none       ? "0"
                    : gadget == GadgetOrder::three_half ? "3/2"
                                                        : "5/2";
    return "(" + std::to_string(magnus_order) + "," + std::to_string(split_order) + "," + c +
           ")";
}

SchemeSpec SchemeSpec::parse(const std::string& token) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : token) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3) throw user_error("scheme token must be 'a,b,c', got '" + token + "'");

    SchemeSpec spec;
    try {
        spec.magnus_order = std::stoi(parts[0]);
        spec.split_order = std::stoi(parts[1]);
    } catch (const std::exception&) {
        throw user_error("scheme token must be 'a,b,c', got '" + token + "'");
    }
    if (parts[2] == "0")
        spec.gadget = GadgetOrder::none;
    else if (parts[2] == "3/2" || parts[2] == "1.5")
        spec.gadget = GadgetOrder::three_half;
    else if (parts[2] == "5/2" || parts[2] == "2.5")
        spec.gadget = GadgetOrder::five_half;
    else
        throw user_error("scheme gadget order must be 0, 3/2 or 5/2, got '" + parts[2] + "'");
    spec.validate();
    return spec;
}

Eigen::MatrixXcd expm_unitary(const Eigen::MatrixXcd& hermitian) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hermitian);
    if (es.info() != Eigen::Success)
        throw numeric_error("expm_unitary: eigendecomposition failed");
    const Eigen::Index dim = hermitian.rows();
    Eigen::VectorXcd ph(dim);
    for (Eigen::Index k = 0; k < dim; ++k)
        ph(k) = std::exp(std::complex<double>{0.0, -es.eigenvalues()(k)});
    return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

DenseUnitary exact_step(const Eigen::MatrixXcd& h, double dt) {
    const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw user_error("exact_step: matrix not Hermitian");
    return DenseUnitary{expm_unitary(h * dt)};
}

namespace {

constexpr double kGaussOffset = 0.28867513459481288225;  // sqrt(3)/6
constexpr double kMagnusCommCoeff = 0.14433756729740644113;  // sqrt(3)/12

// Symmetrized Hermitian part; removes rounding asymmetry before expansion.
Eigen::MatrixXcd hermitize(const Eigen::MatrixXcd& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

Eigen::MatrixXcd magnus4_generator(const RescaledSchedule& schedule, double t_n, double dt) {
    const Eigen::MatrixXd h1 = schedule.h_at(t_n + (0.5 - kGaussOffset) * dt);
    const Eigen::MatrixXd h2 = schedule.h_at(t_n + (0.5 + kGaussOffset) * dt);
    const Eigen::MatrixXd comm = h1 * h2 - h2 * h1;
    Eigen::MatrixXcd omega =
        (0.5 * dt) * (h1 + h2).cast<std::complex<double>>() +
        std::complex<double>{0.0, kMagnusCommCoeff * dt * dt} * comm.cast<std::complex<double>>();
    return hermitize(omega);
}

namespace {

// One forward (or reversed) sweep over the expansion terms with time
// coefficient m*dt; identity terms become phase records.
void emit_sweep(const BasisExpansion& gen, double m_dt, bool reversed, GateSequence& out) {
    const auto emit = [&](const PauliTerm& term) {
        const double theta = term.coeff * m_dt;
        if (term.string.is_identity())
            out.push_back(PhaseRecord{theta});
        else
            out.push_back(PauliRotation{term.string, theta});
    };
    if (reversed) {
        for (auto it = gen.terms.rbegin(); it != gen.terms.rend(); ++it) emit(*it);
    } else {
        for (const auto& term : gen.terms) emit(term);
    }
}

}  // namespace

GateSequence split_step(const BasisExpansion& generator, double dt, int split_order) {
    GateSequence out;
    switch (split_order) {
        case 1:
            emit_sweep(generator, dt, false, out);
            break;
        case 2:
            emit_sweep(generator, 0.5 * dt, false, out);
            emit_sweep(generator, 0.5 * dt, true, out);
            break;
        case 4: {
            // 18-block composition; sweeps listed in application order, with
            // the transposed blocks reversed. Palindromic under the
            // transpose swap, so reading direction is immaterial.
            struct Block {
                double m;
                bool transposed;
            };
            static constexpr Block blocks[18] = {
                {1.0 / 12.0, false}, {1.0 / 12.0, true},  {1.0 / 12.0, false},
                {-1.0 / 6.0, true},  {1.0 / 12.0, false}, {1.0 / 12.0, false},
                {1.0 / 12.0, false}, {1.0 / 12.0, false}, {1.0 / 12.0, true},
                {1.0 / 12.0, false}, {1.0 / 12.0, true},  {1.0 / 12.0, true},
                {1.0 / 12.0, true},  {1.0 / 12.0, true},  {-1.0 / 6.0, false},
                {1.0 / 12.0, true},  {1.0 / 12.0, false}, {1.0 / 12.0, true},
            };
            for (const auto& blk : blocks) emit_sweep(generator, blk.m * dt, blk.transposed, out);
            break;
        }
        default:
            throw user_error("split order must be 1, 2 or 4, got " +
                             std::to_string(split_order));
    }
    return out;
}

namespace {

// Group commutator e^{-iA r} e^{-iB r} e^{iA r} e^{iB r} listed in
// application order; equals exp(-2i r^2 * target + O(r^3)) when
// [A, B] = 2i * target.
void emit_commutator_core(const PauliString& a, const PauliString& b, double r,
                          GateSequence& out) {
    out.push_back(PauliRotation{b, r});
    out.push_back(PauliRotation{a, r});
    out.push_back(PauliRotation{b, -r});
    out.push_back(PauliRotation{a, -r});
}

}  // namespace

GateSequence gadgetize(const PauliRotation& rotation, GadgetOrder order) {
    if (order == GadgetOrder::none)
        throw user_error("gadgetize: gadget order must be 3/2 or 5/2");
    if (rotation.string.weight() != 3)
        throw user_error("gadgetize: rotation weight must be 3, got " +
                         std::to_string(rotation.string.weight()));
    GateSequence out;
    if (rotation.theta == 0.0) return out;

    const GeneratingPair pair = find_generating_pair(rotation.string);
    // exp(-i theta P) = exp(w [-iA, -iB]) with w = theta / (2 sign); a
    // negative w swaps the pair so every square root stays real.
    double w = rotation.theta / (2.0 * pair.sign);
    PauliString a = pair.first;
    PauliString b = pair.second;
    bool swap = w < 0.0;
    if (detail::gadget_sign_flip_for_test) swap = !swap;
    if (swap) {
        std::swap(a, b);
        w = -w;
    }

    if (order == GadgetOrder::three_half) {
        emit_commutator_core(a, b, std::sqrt(std::abs(w)), out);
        return out;
    }

    // Order 5/2: 34 two-exponential tokens. Written as a matrix product the
    // composition reads
    //   (-2x)^T (2x)^T [(-x)(x)]^12 [(x)(-x)]^4,  x = sqrt(w/12),
    // where token (s) = e^{-iA s} e^{-iB s} and ^T reverses the two factors.
    // Gates are emitted in application order, i.e. the product read right to
    // left.
    const double x = std::sqrt(std::abs(w) / 12.0);
    const auto token = [&](double s, bool transposed) {
        if (transposed) {
            out.push_back(PauliRotation{a, s});
            out.push_back(PauliRotation{b, s});
        } else {
            out.push_back(PauliRotation{b, s});
            out.push_back(PauliRotation{a, s});
        }
    };
    for (int k = 0; k < 4; ++k) {
        token(-x, false);
        token(x, false);
    }
    for (int k = 0; k < 12; ++k) {
        token(x, false);
        token(-x, false);
    }
    token(2.0 * x, true);
    token(-2.0 * x, true);
    return out;
}

Eigen::VectorXcd channel_one_state(int qubits) {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(Eigen::Index{1} << qubits);
    psi(0) = 1.0;
    return psi;
}

namespace {

// Identity-padded dense step: exp(-i h dt) on the leading block, identity on
// the rest. Keeps b = 0 schemes exactly leakage-free.
DenseUnitary dense_step_embedded(const Eigen::MatrixXcd& h_block, double dt, Eigen::Index dim) {
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    u.topLeftCorner(h_block.rows(), h_block.cols()) = expm_unitary(h_block * dt);
    return DenseUnitary{std::move(u)};
}

}  // namespace

PropagationResult propagate(const RescaledSchedule& schedule, int qubits,
                            const SchemeSpec& spec, long steps, const Eigen::VectorXcd& psi0,
                            const PropagateOptions& options) {
    spec.validate();
    if (steps < 1) throw user_error("propagate: need at least one step");
    const Eigen::Index dim = Eigen::Index{1} << qubits;
    if (psi0.size() != dim) throw user_error("propagate: psi0 dimension mismatch");
    if (std::abs(psi0.norm() - 1.0) > 1e-12)
        throw user_error("propagate: psi0 must be unit norm");
    if (schedule.channels > dim)
        throw user_error("propagate: schedule channels exceed qubit space");

    PropagationResult result;
    result.psi_final = psi0;
    if (options.record_trajectory) result.trajectory.push_back(psi0);

    const double total = schedule.duration();
    const double dt = total / static_cast<double>(steps);

    GateSequence step_gates;
    for (long n = 0; n < steps; ++n) {
        const double t_n = total * static_cast<double>(n) / static_cast<double>(steps);
        step_gates.clear();

        if (spec.split_order == 0) {
            if (spec.magnus_order == 1) {
                const Eigen::MatrixXcd h = schedule.h_at(t_n).cast<std::complex<double>>();
                step_gates.push_back(dense_step_embedded(h, dt, dim));
            } else {
                const Eigen::MatrixXcd omega = magnus4_generator(schedule, t_n, dt);
                step_gates.push_back(dense_step_embedded(omega, 1.0, dim));
            }
        } else {
            const Eigen::MatrixXcd omega =
                embed(magnus4_generator(schedule, t_n, dt), qubits);
            // Exact-zero prune only: the emitted term set stays identical
            // across steps, so gate counts are exactly linear in N.
            const BasisExpansion gen = expand(omega / dt, 0.0);
            GateSequence split = split_step(gen, dt, spec.split_order);
            if (spec.gadget == GadgetOrder::none) {
                step_gates = std::move(split);
            } else {
                for (auto& g : split) {
                    if (std::holds_alternative<PauliRotation>(g) &&
                        std::get<PauliRotation>(g).string.weight() == 3) {
                        GateSequence expanded =
                            gadgetize(std::get<PauliRotation>(g), spec.gadget);
                        for (auto& gg : expanded) step_gates.push_back(std::move(gg));
                    } else {
                        step_gates.push_back(std::move(g));
                    }
                }
            }
        }

        for (const auto& g : step_gates) {
            apply_gate(g, result.psi_final);
            count_gate(g, result.counts);
        }
        if (options.record_trajectory) result.trajectory.push_back(result.psi_final);
        if (options.record_gates)
            for (auto& g : step_gates) result.gates.push_back(std::move(g));
    }
    return result;
}

PropagationResult crude_scheme(const RescaledSchedule& schedule, int qubits, long steps,
                               const Eigen::VectorXcd& psi0) {
    SchemeSpec spec;
    spec.magnus_order = 1;
    spec.split_order = 0;
    return propagate(schedule, qubits, spec, steps, psi0);
}

PropagationResult magnus4_scheme(const RescaledSchedule& schedule, int qubits, long steps,
                                 const Eigen::VectorXcd& psi0) {
    SchemeSpec spec;  // (4,0,0) by default
    return propagate(schedule, qubits, spec, steps, psi0);
}

Eigen::VectorXcd reference_oracle(const RescaledSchedule& schedule, int qubits, double tol) {
    return reference_oracle(schedule, qubits, tol, channel_one_state(qubits));
}

Eigen::VectorXcd reference_oracle(const RescaledSchedule& schedule, int qubits, double tol,
                                  const Eigen::VectorXcd& psi0) {
    if (tol <= 0.0) throw user_error("reference oracle: tol must be > 0");
    constexpr long kStart = 1024;
    constexpr long kCap = 1 << 20;
    SchemeSpec magnus;  // (4,0,0)
    PropagateOptions lean;
    lean.record_gates = false;
    lean.record_trajectory = false;

    Eigen::VectorXcd prev = propagate(schedule, qubits, magnus, kStart, psi0, lean).psi_final;
    double delta = 0.0;
    for (long n = 2 * kStart; n <= kCap; n *= 2) {
        Eigen::VectorXcd cur = propagate(schedule, qubits, magnus, n, psi0, lean).psi_final;
        delta = error_metric(prev, cur);
        if (delta < tol) return cur;
        prev = std::move(cur);
    }
    throw numeric_error("reference oracle did not converge below tol=" + std::to_string(tol) +
                        "; last successive delta " + std::to_string(delta));
}

}  // namespace qcollide
