#pragma once

#include <vector>

#include "helly/geometry.hpp"

namespace helly {

// Fourier-Motzkin elimination as an independent feasibility oracle. Exact but
// exponential; meant for differential testing against the simplex path, not
// for production queries. Equalities are split into opposing inequalities.
bool fm_feasible(const std::vector<LinearConstraint>& constraints, int dim);

}  // namespace helly
