#include "qcollide/pauli.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "qcollide/errors.hpp"

namespace qcollide {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

bool valid_letter(char c) { return c == 'I' || c == 'X' || c == 'Y' || c == 'Z'; }

int letter_code(char c) {
    switch (c) {
        case 'I': return 0;
        case 'X': return 1;
        case 'Y': return 2;
        default: return 3;
    }
}

constexpr char kLetters[4] = {'I', 'X', 'Y', 'Z'};

// Single-qubit product sigma_a * sigma_b = i^phase * sigma_c.
// Returns {c, phase mod 4}.
std::pair<char, int> mul_letter(char a, char b) {
    if (a == 'I') return {b, 0};
    if (b == 'I') return {a, 0};
    if (a == b) return {'I', 0};
    // Cyclic products: XY=iZ, YZ=iX, ZX=iY; reversed order picks up -i.
    static constexpr struct {
        char a, b, c;
        int phase;
    } table[] = {
        {'X', 'Y', 'Z', 1}, {'Y', 'X', 'Z', 3}, {'Y', 'Z', 'X', 1},
        {'Z', 'Y', 'X', 3}, {'Z', 'X', 'Y', 1}, {'X', 'Z', 'Y', 3},
    };
    for (const auto& row : table)
        if (row.a == a && row.b == b) return {row.c, row.phase};
    return {'I', 0};  // unreachable
}

// Product of two strings: P*R = i^phase * C.
std::pair<PauliString, int> mul_string(const PauliString& p, const PauliString& r) {
    std::string out(p.letters.size(), 'I');
    int phase = 0;
    for (size_t k = 0; k < p.letters.size(); ++k) {
        auto [c, ph] = mul_letter(p.letters[k], r.letters[k]);
        out[k] = c;
        phase = (phase + ph) % 4;
    }
    return {PauliString{std::move(out)}, phase};
}

// Row structure: every Pauli string has exactly one nonzero per row.
// For row index `row`, returns the column and the entry value.
std::pair<Eigen::Index, std::complex<double>> row_entry(const PauliString& p,
                                                        Eigen::Index row) {
    const int q = p.qubits();
    Eigen::Index col = row;
    std::complex<double> val{1.0, 0.0};
    for (int k = 0; k < q; ++k) {
        const int bitpos = q - 1 - k;
        const int b = static_cast<int>((row >> bitpos) & 1);
        switch (p.letters[static_cast<size_t>(k)]) {
            case 'I': break;
            case 'X': col ^= (Eigen::Index{1} << bitpos); break;
            case 'Y':
                col ^= (Eigen::Index{1} << bitpos);
                val *= (b == 0) ? -kI : kI;
                break;
            case 'Z':
                if (b == 1) val = -val;
                break;
            default: break;
        }
    }
    return {col, val};
}

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

PauliString::PauliString(std::string s) : letters(std::move(s)) {
    for (char c : letters)
        if (!valid_letter(c))
            throw user_error("pauli string letter must be one of I,X,Y,Z, got '" +
                             std::string(1, c) + "'");
}

int PauliString::weight() const {
    int w = 0;
    for (char c : letters)
        if (c != 'I') ++w;
    return w;
}

Eigen::MatrixXcd PauliString::dense() const {
    const Eigen::Index dim = Eigen::Index{1} << qubits();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index row = 0; row < dim; ++row) {
        auto [col, val] = row_entry(*this, row);
        m(row, col) = val;
    }
    return m;
}

PauliString pauli_from_index(int qubits, unsigned index) {
    std::string s(static_cast<size_t>(qubits), 'I');
    for (int k = qubits - 1; k >= 0; --k) {
        s[static_cast<size_t>(k)] = kLetters[index & 3u];
        index >>= 2;
    }
    return PauliString{std::move(s)};
}

unsigned pauli_index(const PauliString& p) {
    unsigned idx = 0;
    for (char c : p.letters) idx = (idx << 2) | static_cast<unsigned>(letter_code(c));
    return idx;
}

Eigen::VectorXcd apply_pauli(const PauliString& p, const Eigen::VectorXcd& x) {
    const Eigen::Index dim = Eigen::Index{1} << p.qubits();
    if (x.size() != dim) throw user_error("apply_pauli: state dimension mismatch");
    Eigen::VectorXcd y(dim);
    for (Eigen::Index row = 0; row < dim; ++row) {
        auto [col, val] = row_entry(p, row);
        y(row) = val * x(col);
    }
    return y;
}

BasisExpansion expand(const Eigen::MatrixXcd& h, double drop_tol) {
    const Eigen::Index dim = h.rows();
    if (h.cols() != dim || !is_power_of_two(dim))
        throw user_error("expand: matrix must be square with power-of-two dimension, got " +
                         std::to_string(h.rows()) + "x" + std::to_string(h.cols()));
    int q = 0;
    while ((Eigen::Index{1} << q) < dim) ++q;

    double asym = 0.0;
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j)
            asym = std::max(asym, std::abs(h(i, j) - std::conj(h(j, i))));
    const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    if (asym > 1e-12 * scale) {
        std::ostringstream msg;
        msg << "expand: matrix not Hermitian, max |H_ij - conj(H_ji)| = " << asym
            << " against scale " << scale;
        throw user_error(msg.str());
    }

    BasisExpansion e;
    e.qubits = q;
    const double norm = 1.0 / static_cast<double>(dim);
    for (unsigned idx = 0; idx < (1u << (2 * q)); ++idx) {
        PauliString p = pauli_from_index(q, idx);
        // Tr(P H) via the one-nonzero-per-row structure of P.
        std::complex<double> tr{0.0, 0.0};
        for (Eigen::Index row = 0; row < dim; ++row) {
            auto [col, val] = row_entry(p, row);
            tr += val * h(col, row);
        }
        const double coeff = tr.real() * norm;
        if (std::abs(coeff) > drop_tol) e.terms.push_back({std::move(p), coeff});
    }
    return e;
}

Eigen::MatrixXcd reconstruct(const BasisExpansion& e) {
    const Eigen::Index dim = Eigen::Index{1} << e.qubits;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& term : e.terms) {
        if (term.string.qubits() != e.qubits)
            throw user_error("reconstruct: term qubit count mismatch");
        for (Eigen::Index row = 0; row < dim; ++row) {
            auto [col, val] = row_entry(term.string, row);
            m(row, col) += term.coeff * val;
        }
    }
    return m;
}

std::optional<PauliTerm> commutator(const PauliString& p, const PauliString& r) {
    if (p.qubits() != r.qubits())
        throw user_error("commutator: qubit count mismatch (" +
                         std::to_string(p.qubits()) + " vs " + std::to_string(r.qubits()) + ")");
    auto [c_pr, phase_pr] = mul_string(p, r);
    auto [c_rp, phase_rp] = mul_string(r, p);
    (void)c_rp;  // same letters either way
    if (phase_pr == phase_rp) return std::nullopt;
    // Anticommuting strings: [P,R] = 2 i^phase_pr * C with i^phase_pr = ±i.
    const double coeff = (phase_pr == 1) ? 2.0 : -2.0;
    return PauliTerm{std::move(c_pr), coeff};
}

GeneratingPair find_generating_pair(const PauliString& target) {
    if (target.qubits() != 3 || target.weight() != 3)
        throw user_error("find_generating_pair: target must be a weight-3 string on 3 qubits");
    const char t0 = target.letters[0];
    const char t1 = target.letters[1];
    const char t2 = target.letters[2];
    // Bridge the middle qubit: [I(u)t2, t0(v)I] = t0 (u v) t2 with u,v the two
    // letters other than t1 ordered so that u*v = +i*t1.
    char u = 0, v = 0;
    for (char a : {'X', 'Y', 'Z'}) {
        for (char b : {'X', 'Y', 'Z'}) {
            auto [c, phase] = mul_letter(a, b);
            if (c == t1 && phase == 1) {
                u = a;
                v = b;
            }
        }
    }
    GeneratingPair pair;
    pair.first = PauliString{std::string{'I', u, t2}};
    pair.second = PauliString{std::string{t0, v, 'I'}};
    pair.sign = 1;
    return pair;
}

}  // namespace qcollide
