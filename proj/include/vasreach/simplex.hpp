#pragma once

#include <optional>
#include <set>
#include <vector>

#include "vasreach/intmat.hpp"

namespace vasreach {

// Exact rational simplex on standard form: maximize c*w subject to
// M w = r, w >= 0. Two-phase, Bland's rule, so it always terminates.
struct lp_problem {
  std::vector<rat_vec> m;  // rows
  rat_vec rhs;
  rat_vec obj;
};

enum class lp_status { optimal, infeasible, unbounded };

struct lp_solution {
  lp_status status;
  Rat value;
  rat_vec w;
};

lp_solution lp_maximize(const lp_problem& p);

// Rational solution of the homogeneous system A x = 0 with x[i] > 0 for i in
// strict and x[i] >= 0 for i in nonneg (other components unconstrained).
// Realized as: maximize t with x[i] >= t on strict indices and t <= 1; a
// strictly positive optimum yields the witness.
std::optional<rat_vec> rational_feasible_strict(const int_matrix& a,
                                                const std::set<int>& strict,
                                                const std::set<int>& nonneg);

}  // namespace vasreach
