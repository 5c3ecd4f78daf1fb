#pragma once

#include <vector>

#include "vasreach/intmat.hpp"

namespace vasreach {

// Minimal nonzero solutions over N of the homogeneous system A x = 0,
// computed by Contejean-Devie completion: grow candidate vectors from the
// unit vectors, stepping along coordinate i only while the defect A t keeps a
// negative scalar product with column i, and prune anything dominated by an
// already found solution. Output is sorted lexicographically.
std::vector<int_vec> hilbert_basis(const int_matrix& a);

// Minimal solutions over N of the inhomogeneous system A x = b (the finite
// antichain min(X)). Computed on the homogenized system with a flag column
// and filtered to flag value one.
std::vector<int_vec> minimal_inhomogeneous(const int_matrix& a,
                                           const int_vec& b);

struct diophantine_split {
  std::vector<int_vec> minimal;   // min(X) of A x = b
  std::vector<int_vec> homogeneous;  // min of A x = 0, x != 0
};

// One completion run delivering both parts of the solution description
// X = minimal + homogeneous*.
diophantine_split solve_diophantine(const int_matrix& a, const int_vec& b);

}  // namespace vasreach
