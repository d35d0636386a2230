#pragma once

// Semiclassical n-channel scattering Hamiltonian H(t) built from a
// straight-line trajectory and a pluggable diabatic potential model.
// Atomic units throughout: energies in hartree, lengths in bohr, times in
// a.u., masses in electron masses.

#include <Eigen/Dense>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace qcollide {

struct Trajectory {
    double b = 0.0;    // impact parameter (bohr)
    double v0 = 1.0;   // initial relative velocity (a.u.)
    double t0 = 0.0;   // time of closest approach (a.u.)
    double mu = 1.0;   // reduced mass (electron masses)

    void validate() const;
};

// R(t) = sqrt(b^2 + v0^2 (t - t0)^2)
double separation(const Trajectory& traj, double t);

// E_cm = mu v0^2 / 2
double collision_energy(const Trajectory& traj);

// Diagonal: U_ii = delta + wall_a * exp(-wall_alpha R) + coulomb_zz / R.
struct AnalyticChannel {
    double delta = 0.0;
    double wall_a = 0.0;
    double wall_alpha = 1.0;
    double coulomb_zz = 0.0;
};

struct AnalyticPotential {
    std::vector<AnalyticChannel> channels;
    // Symmetric coupling parameters; U_ij = amp(i,j) * exp(-decay(i,j) R).
    Eigen::MatrixXd amp;
    Eigen::MatrixXd decay;

    int channels_count() const { return static_cast<int>(channels.size()); }
    void set_coupling(int i, int j, double a, double alpha);
    // Smallest R beyond which every off-diagonal magnitude is < eps.
    double coupling_cutoff_radius(double eps) const;
};

struct TabulatedPotential {
    enum class RangePolicy { clamp, strict };

    std::vector<double> r;             // strictly increasing
    std::vector<Eigen::MatrixXd> u;    // symmetric, one per grid node
    RangePolicy policy = RangePolicy::clamp;

    int channels_count() const { return u.empty() ? 0 : static_cast<int>(u.front().rows()); }
};

using PotentialModel = std::variant<AnalyticPotential, TabulatedPotential>;

int potential_channels(const PotentialModel& pot);

// U(R); piecewise linear in R for tabulated curves, with the beyond-range
// policy applied.
Eigen::MatrixXd potential_matrix(const PotentialModel& pot, double r);

struct CollisionSystem {
    int channels = 0;
    Trajectory trajectory;
    PotentialModel potential;
    std::string label;

    void validate() const;
    // Smallest qubit count whose Hilbert space holds all channels.
    int qubits() const;
};

// H_ii(t) = U_ii(R) + (mu/2)(b v0 / R)^2, H_ij = U_ij(R). Symmetric.
Eigen::MatrixXd hamiltonian(const CollisionSystem& sys, double t);

// Zero-pad into the top-left block of a 2^q x 2^q matrix.
Eigen::MatrixXd embed(const Eigen::MatrixXd& h, int qubits);
Eigen::MatrixXcd embed(const Eigen::MatrixXcd& h, int qubits);

// Half-width T/2 of the simulation window [t0 - T/2, t0 + T/2], chosen so
// every off-diagonal coupling at the endpoints is below eps (default 1e-6
// hartree). Tabulated models fall back to the tabulated range.
double auto_window_halfwidth(const CollisionSystem& sys, double eps = 1e-6);

// Curve file: '#' comments, a "channels n" header, then rows of
//   R  U11 .. Unn  U12 U13 .. U(n-1)n
// with R strictly increasing.
TabulatedPotential load_curve_file(const std::filesystem::path& path);

}  // namespace qcollide
