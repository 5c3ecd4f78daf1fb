#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vasreach/numeric.hpp"

namespace vasreach {

// One counter value over N extended with an absorbing top element.
// top + z = top for every integer z; a finite value only moves if the
// result stays nonnegative.
class ext_nat {
 public:
  ext_nat() : top_(false), v_(0) {}
  explicit ext_nat(Int v);    // throws std::invalid_argument if v < 0
  static ext_nat top();

  bool is_top() const { return top_; }
  const Int& value() const;   // throws std::logic_error on top

  // nothing when finite and v_ + z < 0
  std::optional<ext_nat> plus(const Int& z) const;

  bool operator==(const ext_nat& o) const;
  bool operator!=(const ext_nat& o) const { return !(*this == o); }

  std::string str() const;    // decimal or "T"

 private:
  bool top_;
  Int v_;
};

// order with top greatest: k <= top for every k, top <= top only via top
bool ext_le(const ext_nat& a, const ext_nat& b);

// sharper order used for marking: a [= b iff a == b or b is top
bool ext_unlhd(const ext_nat& a, const ext_nat& b);

using ext_config = std::vector<ext_nat>;

ext_config ext_of(const int_vec& v);
bool is_concrete(const ext_config& c);
int_vec concrete_of(const ext_config& c);   // throws if any component is top

bool ext_le(const ext_config& a, const ext_config& b);      // component-wise
bool ext_unlhd(const ext_config& a, const ext_config& b);   // component-wise

std::string to_string(const ext_config& c);

}  // namespace vasreach
