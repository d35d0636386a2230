#include "qcollide/collision.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qcollide/errors.hpp"

namespace qcollide {

void Trajectory::validate() const {
    if (b < 0.0) throw user_error("trajectory: impact parameter b must be >= 0");
    if (v0 <= 0.0) throw user_error("trajectory: velocity v0 must be > 0");
    if (mu <= 0.0) throw user_error("trajectory: reduced mass mu must be > 0");
}

double separation(const Trajectory& traj, double t) {
    const double s = traj.v0 * (t - traj.t0);
    return std::sqrt(traj.b * traj.b + s * s);
}

double collision_energy(const Trajectory& traj) {
    return 0.5 * traj.mu * traj.v0 * traj.v0;
}

void AnalyticPotential::set_coupling(int i, int j, double a, double alpha) {
    const int n = channels_count();
    if (amp.rows() != n) {
        amp = Eigen::MatrixXd::Zero(n, n);
        decay = Eigen::MatrixXd::Ones(n, n);
    }
    amp(i, j) = amp(j, i) = a;
    decay(i, j) = decay(j, i) = alpha;
}

double AnalyticPotential::coupling_cutoff_radius(double eps) const {
    const int n = channels_count();
    double r_cut = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double a = std::abs(amp(i, j));
            if (a <= eps) continue;
            r_cut = std::max(r_cut, std::log(a / eps) / decay(i, j));
        }
    return r_cut;
}

int potential_channels(const PotentialModel& pot) {
    return std::visit([](const auto& p) { return p.channels_count(); }, pot);
}

namespace {

Eigen::MatrixXd analytic_matrix(const AnalyticPotential& pot, double r) {
    const int n = pot.channels_count();
    Eigen::MatrixXd u = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const auto& ch = pot.channels[static_cast<size_t>(i)];
        double d = ch.delta + ch.wall_a * std::exp(-ch.wall_alpha * r);
        if (ch.coulomb_zz != 0.0) d += ch.coulomb_zz / r;
        u(i, i) = d;
    }
    if (pot.amp.rows() == n)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const double c = pot.amp(i, j) * std::exp(-pot.decay(i, j) * r);
                u(i, j) = u(j, i) = c;
            }
    return u;
}

Eigen::MatrixXd tabulated_matrix(const TabulatedPotential& pot, double r) {
    const auto& grid = pot.r;
    if (grid.empty()) throw user_error("tabulated potential has no grid points");
    if (r < grid.front() || r > grid.back()) {
        if (pot.policy == TabulatedPotential::RangePolicy::strict) {
            std::ostringstream msg;
            msg << "R = " << r << " outside tabulated range [" << grid.front() << ", "
                << grid.back() << "] with strict range policy";
            throw user_error(msg.str());
        }
        return r < grid.front() ? pot.u.front() : pot.u.back();
    }
    const auto it = std::upper_bound(grid.begin(), grid.end(), r);
    if (it == grid.begin()) return pot.u.front();
    if (it == grid.end()) return pot.u.back();
    const size_t hi = static_cast<size_t>(it - grid.begin());
    const size_t lo = hi - 1;
    const double w = (r - grid[lo]) / (grid[hi] - grid[lo]);
    return pot.u[lo] + w * (pot.u[hi] - pot.u[lo]);
}

}  // namespace

Eigen::MatrixXd potential_matrix(const PotentialModel& pot, double r) {
    if (std::holds_alternative<AnalyticPotential>(pot))
        return analytic_matrix(std::get<AnalyticPotential>(pot), r);
    return tabulated_matrix(std::get<TabulatedPotential>(pot), r);
}

void CollisionSystem::validate() const {
    trajectory.validate();
    if (channels < 2) throw user_error("collision system needs at least 2 channels");
    if (potential_channels(potential) != channels)
        throw user_error("potential dimension does not match channel count");
}

int CollisionSystem::qubits() const {
    int q = 1;
    while ((1 << q) < channels) ++q;
    return q;
}

Eigen::MatrixXd hamiltonian(const CollisionSystem& sys, double t) {
    const auto& traj = sys.trajectory;
    const double r = separation(traj, t);
    Eigen::MatrixXd h = potential_matrix(sys.potential, r);
    // Centrifugal term, identical in every channel. Vanishes for head-on
    // trajectories (b = 0) where b*v0/R -> 0.
    double cent = 0.0;
    if (traj.b > 0.0) {
        const double w = traj.b * traj.v0 / r;
        cent = 0.5 * traj.mu * w * w;
    }
    for (int i = 0; i < sys.channels; ++i) h(i, i) += cent;
    return h;
}

namespace {

template <typename Matrix>
Matrix embed_impl(const Matrix& h, int qubits) {
    const Eigen::Index n = h.rows();
    const Eigen::Index dim = Eigen::Index{1} << qubits;
    if (h.cols() != n) throw user_error("embed: matrix must be square");
    if (n > dim)
        throw user_error("embed: " + std::to_string(n) + " channels do not fit in " +
                         std::to_string(qubits) + " qubits");
    Matrix out = Matrix::Zero(dim, dim);
    out.topLeftCorner(n, n) = h;
    return out;
}

}  // namespace

Eigen::MatrixXd embed(const Eigen::MatrixXd& h, int qubits) { return embed_impl(h, qubits); }
Eigen::MatrixXcd embed(const Eigen::MatrixXcd& h, int qubits) { return embed_impl(h, qubits); }

double auto_window_halfwidth(const CollisionSystem& sys, double eps) {
    const auto& traj = sys.trajectory;
    double r_edge = 0.0;
    if (std::holds_alternative<AnalyticPotential>(sys.potential)) {
        r_edge = std::get<AnalyticPotential>(sys.potential).coupling_cutoff_radius(eps);
    } else {
        const auto& tab = std::get<TabulatedPotential>(sys.potential);
        // Walk inward from the outer edge until a coupling exceeds eps.
        r_edge = tab.r.back();
        for (size_t k = tab.r.size(); k-- > 0;) {
            double off = 0.0;
            const auto& u = tab.u[k];
            for (int i = 0; i < u.rows(); ++i)
                for (int j = i + 1; j < u.cols(); ++j)
                    off = std::max(off, std::abs(u(i, j)));
            if (off >= eps) break;
            r_edge = tab.r[k];
        }
    }
    if (r_edge <= traj.b) return std::max(1.0, traj.b / traj.v0);
    return std::sqrt(r_edge * r_edge - traj.b * traj.b) / traj.v0;
}

TabulatedPotential load_curve_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw user_error("cannot open curve file: " + path.string());

    TabulatedPotential pot;
    int n = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string first;
        if (!(ss >> first)) continue;  // blank or comment-only

        if (n == 0) {
            if (first != "channels")
                throw user_error(path.string() + ":" + std::to_string(lineno) +
                                 ": expected 'channels n' header before data rows");
            if (!(ss >> n) || n < 2)
                throw user_error(path.string() + ":" + std::to_string(lineno) +
                                 ": channel count must be an integer >= 2");
            continue;
        }

        double r = 0.0;
        try {
            r = std::stod(first);
        } catch (const std::exception&) {
            throw user_error(path.string() + ":" + std::to_string(lineno) +
                             ": expected numeric R value, got '" + first + "'");
        }
        if (!pot.r.empty() && r <= pot.r.back())
            throw user_error(path.string() + ":" + std::to_string(lineno) +
                             ": R values must be strictly increasing");

        Eigen::MatrixXd u = Eigen::MatrixXd::Zero(n, n);
        const int expected = n + n * (n - 1) / 2;
        std::vector<double> vals;
        double x = 0.0;
        while (ss >> x) vals.push_back(x);
        if (static_cast<int>(vals.size()) != expected)
            throw user_error(path.string() + ":" + std::to_string(lineno) + ": expected " +
                             std::to_string(expected) + " matrix entries, got " +
                             std::to_string(vals.size()));
        size_t k = 0;
        for (int i = 0; i < n; ++i) u(i, i) = vals[k++];
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                u(i, j) = u(j, i) = vals[k++];
            }
        pot.r.push_back(r);
        pot.u.push_back(std::move(u));
    }
    if (n == 0) throw user_error(path.string() + ": missing 'channels n' header");
    if (pot.r.empty()) throw user_error(path.string() + ": no data rows");
    return pot;
}

}  // namespace qcollide
