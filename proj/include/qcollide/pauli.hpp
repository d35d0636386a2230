#pragma once

// Orthogonal Pauli-string basis for su(2^q): expansion of Hermitian matrices,
// dense reconstruction, symbolic commutators, and generation of weight-3
// strings from commutators of weight-<=2 pairs.

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace qcollide {

// Tensor product of single-qubit Pauli matrices, written as a string over
// {I,X,Y,Z}. Qubit 0 is the leftmost letter and the most significant bit of
// a computational-basis index.
struct PauliString {
    std::string letters;

    PauliString() = default;
    explicit PauliString(std::string s);

    int qubits() const { return static_cast<int>(letters.size()); }
    // Number of non-identity letters; sets the gate arity of a rotation.
    int weight() const;
    bool is_identity() const { return weight() == 0; }
    Eigen::MatrixXcd dense() const;

    bool operator==(const PauliString&) const = default;
    bool operator<(const PauliString& o) const { return letters < o.letters; }
};

struct PauliTerm {
    PauliString string;
    double coeff = 0.0;
};

// H = sum_j coeff_j * P_j over distinct strings, coefficients against
// unnormalized strings: coeff = Tr(P H) / 2^q.
struct BasisExpansion {
    int qubits = 0;
    std::vector<PauliTerm> terms;
};

// Enumeration order used everywhere: base-4 digits with I<X<Y<Z, qubit 0 the
// most significant digit. Index 0 is the all-identity string.
PauliString pauli_from_index(int qubits, unsigned index);
unsigned pauli_index(const PauliString& p);

// y = P x without forming the dense matrix.
Eigen::VectorXcd apply_pauli(const PauliString& p, const Eigen::VectorXcd& x);

// Pauli coefficients of a Hermitian matrix; terms with |coeff| <= drop_tol
// are omitted. Rejects non-Hermitian input (tolerance relative to the matrix
// scale) and dimensions that are not a power of two.
BasisExpansion expand(const Eigen::MatrixXcd& h, double drop_tol = 1e-14);

Eigen::MatrixXcd reconstruct(const BasisExpansion& e);

// [p, r]. Empty when the strings commute; otherwise the result is a single
// string times a purely imaginary scalar, returned as the imaginary part:
// [p, r] = i * coeff * string with coeff in {+2, -2}.
std::optional<PauliTerm> commutator(const PauliString& p, const PauliString& r);

struct GeneratingPair {
    PauliString first;
    PauliString second;
    int sign = 1;  // [first, second] = 2i * sign * target
};

// For a weight-3 target returns a canonical pair of weight-2 strings whose
// commutator is 2i*target (sign always +1 by construction): first has the
// identity on qubit 0, second has it on qubit 2, and the middle letters are
// ordered so the product phase comes out positive.
GeneratingPair find_generating_pair(const PauliString& target);

}  // namespace qcollide
