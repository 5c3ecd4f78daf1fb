#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace vasreach {

// Exact arithmetic everywhere: counters and coefficients are mpz, simplex
// runs over mpq. No doubles anywhere in a decision path.
using Int = mpz_class;
using Rat = mpq_class;

using int_vec = std::vector<Int>;
using rat_vec = std::vector<Rat>;

inline Int int_of(long v) { return Int(v); }

// floor(a/b) and ceil(a/b); b != 0
Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

// a - floor(a/b)*b; always in [0, b) for b > 0
Int mod_floor(const Int& a, const Int& b);

// exact rational -> is integral?
bool is_integral(const Rat& r);
Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);

std::size_t hash_int(const Int& v);
std::size_t hash_int_vec(const int_vec& v);

struct int_vec_hash {
  std::size_t operator()(const int_vec& v) const { return hash_int_vec(v); }
};

std::string to_string(const int_vec& v);  // "(a,b,...)"

// component-wise x <= y
bool vec_le(const int_vec& x, const int_vec& y);

int_vec vec_add(const int_vec& x, const int_vec& y);
int_vec vec_sub(const int_vec& x, const int_vec& y);
int_vec vec_scale(const Int& c, const int_vec& x);

}  // namespace vasreach
