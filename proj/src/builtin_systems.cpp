#include "qcollide/builtin_systems.hpp"

#include <algorithm>

#include "qcollide/errors.hpp"

namespace qcollide {

namespace {

// Reduced masses in electron masses, from standard isotopic masses
// (23Na-4He, 28Si-4He, 16O-1H) at 1 u = 1822.888486 m_e.
constexpr double kMuNaHe = 6214.3;
constexpr double kMuSiHe = 6383.1;
constexpr double kMuOH = 1728.3;

Trajectory default_trajectory(double mu) {
    Trajectory traj;
    traj.v0 = 2.0;
    traj.b = 0.5;
    traj.t0 = 0.0;
    traj.mu = mu;
    return traj;
}

CollisionSystem na_he_3ch() {
    AnalyticPotential pot;
    pot.channels = {
        {0.0000, 18.0, 1.55, 0.0},   // Na(3s) + He
        {0.0773, 22.0, 1.50, 0.0},   // Na(3p) + He
        {0.1172, 25.0, 1.45, 0.0},   // Na(4s) + He
    };
    pot.set_coupling(0, 1, 0.35, 0.90);
    pot.set_coupling(0, 2, 0.12, 1.05);
    pot.set_coupling(1, 2, 0.28, 0.85);

    CollisionSystem sys;
    sys.channels = 3;
    sys.trajectory = default_trajectory(kMuNaHe);
    sys.potential = std::move(pot);
    sys.label = "na_he_3ch";
    return sys;
}

CollisionSystem si_he_4ch() {
    AnalyticPotential pot;
    pot.channels = {
        {0.000, 30.0, 1.80, 0.0},    // Si(3+) + He entrance
        {-0.282, 26.0, 1.70, 2.0},   // Si(2+) + He(+) exits, +2/R
        {-0.195, 24.0, 1.70, 2.0},
        {-0.121, 22.0, 1.60, 2.0},
    };
    pot.set_coupling(0, 1, 0.55, 0.70);
    pot.set_coupling(0, 2, 0.42, 0.75);
    pot.set_coupling(0, 3, 0.30, 0.80);
    pot.set_coupling(1, 2, 0.08, 0.90);
    pot.set_coupling(1, 3, 0.05, 0.95);
    pot.set_coupling(2, 3, 0.07, 0.90);

    CollisionSystem sys;
    sys.channels = 4;
    sys.trajectory = default_trajectory(kMuSiHe);
    sys.potential = std::move(pot);
    sys.label = "si_he_4ch";
    return sys;
}

CollisionSystem si_he_5ch() {
    AnalyticPotential pot;
    pot.channels = {
        {0.000, 30.0, 1.80, 0.0},
        {-0.282, 26.0, 1.70, 2.0},
        {-0.195, 24.0, 1.70, 2.0},
        {-0.121, 22.0, 1.60, 2.0},
        {-0.066, 20.0, 1.60, 2.0},
    };
    pot.set_coupling(0, 1, 0.55, 0.70);
    pot.set_coupling(0, 2, 0.42, 0.75);
    pot.set_coupling(0, 3, 0.30, 0.80);
    pot.set_coupling(0, 4, 0.22, 0.85);
    pot.set_coupling(1, 2, 0.08, 0.90);
    pot.set_coupling(1, 3, 0.05, 0.95);
    pot.set_coupling(1, 4, 0.04, 0.95);
    pot.set_coupling(2, 3, 0.07, 0.90);
    pot.set_coupling(2, 4, 0.05, 0.95);
    pot.set_coupling(3, 4, 0.06, 0.90);

    CollisionSystem sys;
    sys.channels = 5;
    sys.trajectory = default_trajectory(kMuSiHe);
    sys.potential = std::move(pot);
    sys.label = "si_he_5ch";
    return sys;
}

CollisionSystem o_h_8ch() {
    AnalyticPotential pot;
    pot.channels = {
        {0.000, 35.0, 1.90, 0.0},    // O(7+) + H entrance
        {-0.850, 30.0, 1.80, 6.0},   // O(6+) + H(+) exits, +6/R
        {-0.740, 28.0, 1.80, 6.0},
        {-0.620, 27.0, 1.75, 6.0},
        {-0.450, 26.0, 1.75, 6.0},
        {-0.380, 25.0, 1.70, 6.0},
        {-0.300, 24.0, 1.70, 6.0},
        {-0.240, 23.0, 1.65, 6.0},
    };
    pot.set_coupling(0, 1, 0.90, 0.55);
    pot.set_coupling(0, 2, 0.75, 0.60);
    pot.set_coupling(0, 3, 0.60, 0.62);
    pot.set_coupling(0, 4, 0.45, 0.68);
    pot.set_coupling(0, 5, 0.38, 0.70);
    pot.set_coupling(0, 6, 0.30, 0.72);
    pot.set_coupling(0, 7, 0.25, 0.75);
    for (int i = 1; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            pot.set_coupling(i, j, 0.04, 0.95);

    CollisionSystem sys;
    sys.channels = 8;
    sys.trajectory = default_trajectory(kMuOH);
    sys.potential = std::move(pot);
    sys.label = "o_h_8ch";
    return sys;
}

}  // namespace

std::vector<std::string> builtin_system_names() {
    return {"na_he_3ch", "si_he_4ch", "si_he_5ch", "o_h_8ch"};
}

bool is_builtin_system(const std::string& name) {
    const auto names = builtin_system_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

CollisionSystem make_builtin_system(const std::string& name) {
    if (name == "na_he_3ch") return na_he_3ch();
    if (name == "si_he_4ch") return si_he_4ch();
    if (name == "si_he_5ch") return si_he_5ch();
    if (name == "o_h_8ch") return o_h_8ch();
    throw user_error("unknown builtin system '" + name + "'");
}

}  // namespace qcollide
