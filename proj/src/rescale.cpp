#include "qcollide/rescale.hpp"

#include <algorithm>
#include <cmath>

#include "qcollide/errors.hpp"

namespace qcollide {

void RescaleParams::validate() const {
    if (g_max <= 0.0) throw user_error("rescale: g_max must be > 0");
    if (lambda_floor <= 0.0) throw user_error("rescale: lambda_floor must be > 0");
    if (grid < 2) throw user_error("rescale: need at least 2 grid samples");
}

double phase_offset(const Eigen::MatrixXd& h) {
    return h.trace() / static_cast<double>(h.rows());
}

double lambda_scale(const Eigen::MatrixXd& h, const RescaleParams& p) {
    const double c = phase_offset(h);
    const Eigen::Index n = h.rows();
    double peak = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            const double v = (i == j) ? h(i, i) - c : h(i, j);
            peak = std::max(peak, std::abs(v));
        }
    return std::max(peak * kHartreeOmega / p.g_max, p.lambda_floor);
}

namespace {

// Index of the interval containing x in a strictly increasing grid;
// clamps to the ends.
size_t bracket(const std::vector<double>& grid, double x) {
    if (x <= grid.front()) return 0;
    if (x >= grid.back()) return grid.size() - 2;
    const auto it = std::upper_bound(grid.begin(), grid.end(), x);
    return static_cast<size_t>(it - grid.begin()) - 1;
}

double lerp_on(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
    const size_t k = bracket(xs, x);
    const double w = (x - xs[k]) / (xs[k + 1] - xs[k]);
    return ys[k] + w * (ys[k + 1] - ys[k]);
}

}  // namespace

Eigen::MatrixXd RescaledSchedule::h_at(double tau_query) const {
    const size_t k = bracket(tau, tau_query);
    const double w = (tau_query - tau[k]) / (tau[k + 1] - tau[k]);
    return h_qc[k] + w * (h_qc[k + 1] - h_qc[k]);
}

double RescaledSchedule::t_of_tau(double tau_query) const {
    return lerp_on(map_tau, map_t, tau_query);
}

double RescaledSchedule::tau_of_t(double t_query) const {
    return lerp_on(map_t, map_tau, t_query);
}

RescaledSchedule RescaledSchedule::from_samples(std::vector<double> tau_grid,
                                                std::vector<Eigen::MatrixXd> samples,
                                                double g_max) {
    if (tau_grid.size() < 2 || tau_grid.size() != samples.size())
        throw user_error("schedule samples: need matching grids with >= 2 points");
    RescaledSchedule s;
    s.channels = static_cast<int>(samples.front().rows());
    s.g_max = g_max;
    s.map_tau = tau_grid;
    s.map_t = tau_grid;
    s.t_phys = tau_grid;
    s.tau = std::move(tau_grid);
    s.h_qc = std::move(samples);
    s.lambda.assign(s.tau.size(), 1.0);
    s.phase_integral.assign(s.tau.size(), 0.0);
    return s;
}

RescaledSchedule build_schedule(const CollisionSystem& sys, double window_lo,
                                double window_hi, const RescaleParams& p) {
    p.validate();
    sys.validate();
    if (!(window_hi > window_lo)) throw user_error("rescale: empty time window");

    const int m = p.grid;
    const int n = sys.channels;
    const double dt = (window_hi - window_lo) / (m - 1);

    // Pass 1: physical grid. Cumulate the clock and the phase by trapezoid.
    std::vector<double> t_grid(static_cast<size_t>(m));
    std::vector<double> lam(static_cast<size_t>(m));
    std::vector<double> c_val(static_cast<size_t>(m));
    std::vector<double> tau_grid(static_cast<size_t>(m));
    std::vector<double> phase(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        const double t = window_lo + i * dt;
        const Eigen::MatrixXd h = hamiltonian(sys, t);
        t_grid[static_cast<size_t>(i)] = t;
        lam[static_cast<size_t>(i)] = lambda_scale(h, p);
        c_val[static_cast<size_t>(i)] = phase_offset(h);
    }
    tau_grid[0] = 0.0;
    phase[0] = 0.0;
    for (int i = 1; i < m; ++i) {
        const size_t k = static_cast<size_t>(i);
        tau_grid[k] = tau_grid[k - 1] + 0.5 * (lam[k - 1] + lam[k]) * dt * kAtomicTime;
        phase[k] = phase[k - 1] + 0.5 * (c_val[k - 1] + c_val[k]) * dt;
        if (!(tau_grid[k] > tau_grid[k - 1]))
            throw numeric_error("rescale: remapped clock is not strictly increasing");
    }

    // Pass 2: uniform tau grid; recompute the Hamiltonian exactly at the
    // inverted physical times so the per-sample bound and trace are exact.
    RescaledSchedule s;
    s.channels = n;
    s.g_max = p.g_max;
    s.map_t = t_grid;
    s.map_tau = tau_grid;
    const double tau_total = tau_grid.back();
    s.tau.resize(static_cast<size_t>(m));
    s.h_qc.resize(static_cast<size_t>(m));
    s.t_phys.resize(static_cast<size_t>(m));
    s.lambda.resize(static_cast<size_t>(m));
    s.phase_integral.resize(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) {
        const size_t i = static_cast<size_t>(k);
        const double tau_k = tau_total * k / (m - 1);
        const double t_k = (k == 0)       ? t_grid.front()
                           : (k == m - 1) ? t_grid.back()
                                          : lerp_on(tau_grid, t_grid, tau_k);
        const Eigen::MatrixXd h = hamiltonian(sys, t_k);
        const double c = phase_offset(h);
        const double l = lambda_scale(h, p);
        Eigen::MatrixXd hq = h;
        for (int d = 0; d < n; ++d) hq(d, d) -= c;
        hq *= kHartreeOmega / l;
        s.tau[i] = tau_k;
        s.h_qc[i] = std::move(hq);
        s.t_phys[i] = t_k;
        s.lambda[i] = l;
        s.phase_integral[i] = lerp_on(t_grid, phase, t_k);
    }
    return s;
}

}  // namespace qcollide
