#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vasreach/intmat.hpp"

namespace vasreach {

// b + P* for a finite period set P; vectors live in Z^n
struct linear_set {
  int_vec base;
  std::vector<int_vec> periods;
};

struct semilinear_set {
  std::vector<linear_set> parts;  // empty list denotes the empty set
};

// dimension marker: nullopt encodes minus infinity (empty set)
using sl_dim = std::optional<int>;

// v in b + P*: integer programming over the period coefficients
bool member_linear(const linear_set& l, const int_vec& v);
bool member_semilinear(const semilinear_set& s, const int_vec& v);

// v lies in the interior att(P*) of the monoid P*: v belongs to P* and is a
// strictly positive rational combination of all the periods. Empty P gives
// the singleton {0}.
bool interior_contains(const std::vector<int_vec>& periods, const int_vec& v);

// generators of the monoid P1* intersect P2* (projections of the Hilbert
// basis of the matching-combination system)
std::vector<int_vec> intersect_monoids(const std::vector<int_vec>& p1,
                                       const std::vector<int_vec>& p2,
                                       int dim);

// intersection of two linear sets as a semilinear set: one part per minimal
// matching of the bases, all sharing the intersected period monoid
semilinear_set intersect_linear(const linear_set& l1, const linear_set& l2,
                                int dim);

// rank over Q of the period list; empty linear set handled by the
// semilinear variant
int dim_linear(const linear_set& l);
sl_dim dim_semilinear(const semilinear_set& s);

std::string to_string(const linear_set& l);
std::string to_string(const semilinear_set& s);

}  // namespace vasreach
