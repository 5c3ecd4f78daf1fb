#pragma once

#include <optional>
#include <vector>

#include "vasreach/intmat.hpp"

namespace vasreach {

// Conjunction of integer-linear constraints over x in Z^n:
//   eq:   E x = e
//   le:   G x <= g
// Nonnegative variables are expressed by rows of `le`.
struct lin_system {
  int nvars = 0;
  std::vector<int_vec> eq_lhs;
  int_vec eq_rhs;
  std::vector<int_vec> le_lhs;
  int_vec le_rhs;

  void add_eq(int_vec lhs, Int rhs);
  void add_le(int_vec lhs, Int rhs);  // lhs * x <= rhs
};

// Complete decision for integer feasibility. Equalities are eliminated
// exactly over the integers first (Hermite form); the remaining inequality
// system is decided by branch-and-bound on the exact rational relaxation.
// Rows are gcd-tightened, and branching happens inside a finite box that is
// guaranteed to contain a solution whenever one exists, so the search always
// terminates.
std::optional<int_vec> integer_feasible(const lin_system& sys);

}  // namespace vasreach
