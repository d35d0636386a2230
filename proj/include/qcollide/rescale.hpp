#pragma once

// Mapping of the physical Hamiltonian onto the quantum-computer energy
// scale: subtract the global phase c(t), bound every matrix element by
// g_max through lambda(t), and remap the clock to t_qc = integral of
// lambda dt. The schedule it produces carries the bounded traceless
// Hamiltonian sampled on a uniform remapped-time grid.

#include <Eigen/Dense>
#include <vector>

#include "qcollide/collision.hpp"

namespace qcollide {

// E_h / hbar in rad/s; one atomic time unit is its exact reciprocal.
inline constexpr double kHartreeOmega = 4.134137333518e16;
inline constexpr double kAtomicTime = 1.0 / kHartreeOmega;
inline constexpr double kTwoPi = 6.283185307179586476925286766559;

struct RescaleParams {
    double g_max = kTwoPi * 30e6;  // angular frequency bound (rad/s)
    double lambda_floor = 1e-30;   // minimum dimensionless clock rate
    int grid = 4096;               // physical-time samples M

    void validate() const;
};

// c(t): mean of the diagonal (hartree).
double phase_offset(const Eigen::MatrixXd& h);

// Dimensionless clock rate dtau/dt: the smallest positive lambda bounding
// every element of (H - cI)/lambda by g_max, floored by lambda_floor.
double lambda_scale(const Eigen::MatrixXd& h, const RescaleParams& p);

struct RescaledSchedule {
    int channels = 0;
    double g_max = 0.0;

    // Uniform remapped-time grid (seconds), tau[0] = 0.
    std::vector<double> tau;
    // Traceless real-symmetric n x n samples in rad/s, |entry| <= g_max.
    std::vector<Eigen::MatrixXd> h_qc;
    // Physical time (a.u.), clock rate, and cumulative phase integral
    // (radians) at each tau sample.
    std::vector<double> t_phys;
    std::vector<double> lambda;
    std::vector<double> phase_integral;
    // Monotone map samples on the physical grid, for tau_of_t.
    std::vector<double> map_t;
    std::vector<double> map_tau;

    double duration() const { return tau.back(); }
    // Piecewise-linear interpolation of the sampled Hamiltonian.
    Eigen::MatrixXd h_at(double tau_query) const;
    double t_of_tau(double tau_query) const;
    double tau_of_t(double t_query) const;

    // Minimal schedule over explicit samples; used by tests and by callers
    // that already have a bounded Hamiltonian on a uniform grid.
    static RescaledSchedule from_samples(std::vector<double> tau_grid,
                                         std::vector<Eigen::MatrixXd> samples,
                                         double g_max = 0.0);
};

// Sample H over [window_lo, window_hi] on p.grid points, build the remapped
// clock by trapezoidal cumulation of lambda, and resample everything on a
// uniform tau grid of the same size.
RescaledSchedule build_schedule(const CollisionSystem& sys, double window_lo,
                                double window_hi, const RescaleParams& p);

}  // namespace qcollide
