#pragma once

// Self-contained synthetic collision systems with exponential radial
// couplings and, for the charge-exchange systems, Coulomb-repulsive product
// channels. Reduced masses come from standard isotopic masses.

#include <string>
#include <vector>

#include "qcollide/collision.hpp"

namespace qcollide {

// na_he_3ch, si_he_4ch, si_he_5ch, o_h_8ch
std::vector<std::string> builtin_system_names();

bool is_builtin_system(const std::string& name);

// Trajectory defaults to v0 = 2, b = 0.5, t0 = 0 and the system's reduced
// mass; callers override fields afterwards as needed.
CollisionSystem make_builtin_system(const std::string& name);

}  // namespace qcollide
