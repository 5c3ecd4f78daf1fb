#include "vasreach/invariant.hpp"

#include <algorithm>
#include <sstream>

namespace vasreach {

namespace {

// conjunction of x[i] >= -delta[i] for the coordinates delta pulls down;
// together with the NONNEG domain this pins x and x + delta inside N^n
formula_ptr stays_nonneg_after(const int_vec& delta) {
  formula_ptr f = f_true();
  for (std::size_t i = 0; i < delta.size(); ++i) {
    if (delta[i] >= 0) continue;
    int_vec unit(delta.size(), Int(0));
    unit[i] = 1;
    f = f_and(std::move(f), f_lin(std::move(unit), cmp_op::ge, Int(-delta[i])));
  }
  return f;
}

std::optional<invariance_violation> invariance_query(const formula_ptr& psi,
                                                     const vas_system& sys,
                                                     bool forward) {
  const int n = sys.dimension();
  if (psi->dims() > n)
    throw std::invalid_argument("invariance: formula dimension exceeds system");
  for (int a = 0; a < sys.num_actions(); ++a) {
    const int_vec& d = sys.displacement(a);
    // forward: x in psi, x + d >= 0, x + d not in psi
    // backward: x + d in psi, x + d >= 0, x not in psi
    formula_ptr inside = forward ? psi : subst_shift(psi, d);
    formula_ptr outside = forward ? subst_shift(f_not(psi), d) : f_not(psi);
    formula_ptr query =
        f_and(f_and(std::move(inside), std::move(outside)), stays_nonneg_after(d));
    auto model = satisfiable(query, n, var_domain::nonneg);
    if (model) return invariance_violation{a, *model};
  }
  return std::nullopt;
}

}  // namespace

std::optional<invariance_violation> forward_invariance_violation(
    const formula_ptr& psi, const vas_system& sys) {
  return invariance_query(psi, sys, true);
}

bool is_forward_invariant(const formula_ptr& psi, const vas_system& sys) {
  return !forward_invariance_violation(psi, sys).has_value();
}

std::optional<invariance_violation> backward_invariance_violation(
    const formula_ptr& psi, const vas_system& sys) {
  return invariance_query(psi, sys, false);
}

bool is_backward_invariant(const formula_ptr& psi, const vas_system& sys) {
  return !backward_invariance_violation(psi, sys).has_value();
}

std::string cert_result::reason() const {
  std::ostringstream os;
  const char* sep = "";
  if (!source_in) {
    os << "source-not-in-invariant";
    sep = ", ";
  }
  if (!target_out) {
    os << sep << "target-in-invariant";
    sep = ", ";
  }
  if (!invariant) {
    os << sep << "not-forward-invariant";
    if (violation)
      os << " (action " << violation->action << " at "
         << to_string(violation->point) << ")";
  }
  return os.str();
}

cert_result check_certificate(const certificate& cert, const vas_system& sys) {
  const int n = sys.dimension();
  if (static_cast<int>(cert.source.size()) != n ||
      static_cast<int>(cert.target.size()) != n)
    throw std::invalid_argument("check_certificate: configuration dimension");
  if (cert.psi->dims() > n)
    throw std::invalid_argument("check_certificate: formula dimension");
  cert_result r;
  r.source_in = eval(cert.psi, cert.source);
  r.target_out = !eval(cert.psi, cert.target);
  r.violation = forward_invariance_violation(cert.psi, sys);
  r.invariant = !r.violation.has_value();
  return r;
}

bool is_complete_separator(const formula_ptr& s, const formula_ptr& s_prime,
                           const vas_system& sys) {
  const int n = sys.dimension();
  if (satisfiable(f_and(s, s_prime), n, var_domain::nonneg)) return false;
  if (satisfiable(f_and(f_not(s), f_not(s_prime)), n, var_domain::nonneg))
    return false;
  return is_forward_invariant(s, sys) && is_backward_invariant(s_prime, sys);
}

extended_vas extend_vas_with_periods(const vas_system& sys,
                                     const std::vector<int_vec>& forward_periods,
                                     const std::vector<int_vec>& backward_periods) {
  const int n = sys.dimension();
  std::vector<std::string> names = sys.action_names();
  std::vector<int_vec> deltas;
  deltas.reserve(names.size());
  for (int a = 0; a < sys.num_actions(); ++a) deltas.push_back(sys.displacement(a));
  std::vector<letter_tag> tags(names.size(), letter_tag::core);

  auto fresh = [&](std::string base) {
    while (std::find(names.begin(), names.end(), base) != names.end())
      base = "_" + base;
    return base;
  };
  auto add = [&](const int_vec& period, bool forward, int seq) {
    if (static_cast<int>(period.size()) != n)
      throw std::invalid_argument("extend_vas_with_periods: period dimension");
    for (const Int& v : period)
      if (v < 0)
        throw std::invalid_argument(
            "extend_vas_with_periods: negative period vector");
    names.push_back(
        fresh((forward ? "p" : "q") + std::to_string(seq + 1)));
    deltas.push_back(forward ? period : vec_scale(Int(-1), period));
    tags.push_back(forward ? letter_tag::plus_period : letter_tag::minus_period);
  };
  for (std::size_t i = 0; i < forward_periods.size(); ++i)
    add(forward_periods[i], true, static_cast<int>(i));
  for (std::size_t i = 0; i < backward_periods.size(); ++i)
    add(backward_periods[i], false, static_cast<int>(i));

  return extended_vas{vas_system(names, n, deltas), std::move(tags)};
}

std::vector<int> reorder_canonical(const std::vector<int>& word,
                                   const std::vector<letter_tag>& tags) {
  std::vector<int> out;
  out.reserve(word.size());
  for (int a : word) {
    if (a < 0 || a >= static_cast<int>(tags.size()))
      throw std::invalid_argument("reorder_canonical: action out of range");
    if (tags[a] == letter_tag::plus_period) out.push_back(a);
  }
  for (int a : word)
    if (tags[a] == letter_tag::core) out.push_back(a);
  for (int a : word)
    if (tags[a] == letter_tag::minus_period) out.push_back(a);
  return out;
}

}  // namespace vasreach
