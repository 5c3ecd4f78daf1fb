#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vasreach/presburger.hpp"
#include "vasreach/system.hpp"

namespace vasreach {

// witness that an invariance check failed. Forward: `point` is in the set
// and its `action`-successor is not. Backward: `point` is outside the set
// and its `action`-successor is a member, exhibiting an escaping predecessor.
struct invariance_violation {
  int action;
  int_vec point;
};

// A set psi is forward invariant when every step from a member that stays in
// N^n lands in psi again. Returns the first violation in action order, or
// nothing when psi is invariant.
std::optional<invariance_violation> forward_invariance_violation(
    const formula_ptr& psi, const vas_system& sys);
bool is_forward_invariant(const formula_ptr& psi, const vas_system& sys);

// dual: closed under predecessors inside N^n
std::optional<invariance_violation> backward_invariance_violation(
    const formula_ptr& psi, const vas_system& sys);
bool is_backward_invariant(const formula_ptr& psi, const vas_system& sys);

// Non-reachability certificate: a forward invariant containing the source
// but not the target proves the target is unreachable from the source.
struct certificate {
  formula_ptr psi;
  int_vec source;
  int_vec target;
};

struct cert_result {
  bool source_in = false;    // eval(psi, source)
  bool target_out = false;   // !eval(psi, target)
  bool invariant = false;    // is_forward_invariant(psi)
  std::optional<invariance_violation> violation;

  bool valid() const { return source_in && target_out && invariant; }
  // comma-joined failed clauses, empty when valid
  std::string reason() const;
};

cert_result check_certificate(const certificate& cert, const vas_system& sys);

// (s, s') partitions N^n, s is forward invariant, s' is backward invariant
bool is_complete_separator(const formula_ptr& s, const formula_ptr& s_prime,
                           const vas_system& sys);

// alphabet extension with monoid periods: fresh letters that add a period
// (plus_period) or subtract one (minus_period)
enum class letter_tag { core, plus_period, minus_period };

struct extended_vas {
  vas_system sys;
  std::vector<letter_tag> tags;  // indexed by action
};

extended_vas extend_vas_with_periods(const vas_system& sys,
                                     const std::vector<int_vec>& forward_periods,
                                     const std::vector<int_vec>& backward_periods);

// stable partition: plus_period letters first, core letters, then
// minus_period letters; fireability from the same endpoints is preserved
std::vector<int> reorder_canonical(const std::vector<int>& word,
                                   const std::vector<letter_tag>& tags);

}  // namespace vasreach
