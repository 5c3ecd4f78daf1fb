#include <tuple>
#include <utility>

#include "vasreach/ilp.hpp"
#include "vasreach/presburger.hpp"

namespace vasreach {

namespace {

// One disjunct of the disjunctive normal form: a conjunction of
// non-strict inequalities, equalities, and congruences.
struct cube {
  std::vector<std::pair<int_vec, Int>> les;   // c . x <= k
  std::vector<std::pair<int_vec, Int>> eqs;   // c . x = k
  std::vector<std::tuple<int_vec, Int, Int>> divs;  // c . x = r (mod m)
};

int_vec pad(const int_vec& v, std::size_t n) {
  int_vec out(n, Int(0));
  for (std::size_t i = 0; i < v.size() && i < n; ++i) out[i] = v[i];
  return out;
}

int_vec negated(const int_vec& v) {
  int_vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

std::vector<cube> cross(const std::vector<cube>& as,
                        const std::vector<cube>& bs) {
  std::vector<cube> out;
  out.reserve(as.size() * bs.size());
  for (const cube& a : as)
    for (const cube& b : bs) {
      cube c = a;
      c.les.insert(c.les.end(), b.les.begin(), b.les.end());
      c.eqs.insert(c.eqs.end(), b.eqs.begin(), b.eqs.end());
      c.divs.insert(c.divs.end(), b.divs.begin(), b.divs.end());
      out.push_back(std::move(c));
    }
  return out;
}

cmp_op flip(cmp_op c) {
  switch (c) {
    case cmp_op::le: return cmp_op::gt;
    case cmp_op::lt: return cmp_op::ge;
    case cmp_op::eq: return cmp_op::ne;
    case cmp_op::ne: return cmp_op::eq;
    case cmp_op::ge: return cmp_op::lt;
    case cmp_op::gt: return cmp_op::le;
  }
  throw std::logic_error("flip");
}

std::vector<cube> lin_cubes(const int_vec& coeffs, cmp_op cmp, const Int& rhs,
                            std::size_t nvars) {
  int_vec c = pad(coeffs, nvars);
  cube one;
  switch (cmp) {
    case cmp_op::le:
      one.les.emplace_back(c, rhs);
      return {one};
    case cmp_op::lt:
      one.les.emplace_back(c, Int(rhs - 1));
      return {one};
    case cmp_op::ge:
      one.les.emplace_back(negated(c), Int(-rhs));
      return {one};
    case cmp_op::gt:
      one.les.emplace_back(negated(c), Int(-rhs - 1));
      return {one};
    case cmp_op::eq:
      one.eqs.emplace_back(c, rhs);
      return {one};
    case cmp_op::ne: {
      cube below, above;
      below.les.emplace_back(c, Int(rhs - 1));
      above.les.emplace_back(negated(c), Int(-rhs - 1));
      return {below, above};
    }
  }
  throw std::logic_error("lin_cubes");
}

// polarity-carrying DNF; negation is pushed into the atoms here
std::vector<cube> dnf(const formula_ptr& f, bool neg, std::size_t nvars) {
  switch (f->k) {
    case formula::kind::tt:
      if (neg) return {};
      return {cube{}};
    case formula::kind::ff:
      if (neg) return {cube{}};
      return {};
    case formula::kind::lin:
      return lin_cubes(f->coeffs, neg ? flip(f->cmp) : f->cmp, f->rhs, nvars);
    case formula::kind::divi: {
      int_vec c = pad(f->coeffs, nvars);
      if (!neg) {
        cube one;
        one.divs.emplace_back(c, f->residue, f->modulus);
        return {one};
      }
      // wrong residue: one disjunct per alternative
      std::vector<cube> out;
      for (Int r = 0; r < f->modulus; ++r) {
        if (r == f->residue) continue;
        cube one;
        one.divs.emplace_back(c, r, f->modulus);
        out.push_back(std::move(one));
      }
      return out;
    }
    case formula::kind::fnot:
      return dnf(f->a, !neg, nvars);
    case formula::kind::fand: {
      auto as = dnf(f->a, neg, nvars);
      auto bs = dnf(f->b, neg, nvars);
      if (neg) {
        as.insert(as.end(), bs.begin(), bs.end());
        return as;
      }
      return cross(as, bs);
    }
    case formula::kind::forr: {
      auto as = dnf(f->a, neg, nvars);
      auto bs = dnf(f->b, neg, nvars);
      if (neg) return cross(as, bs);
      as.insert(as.end(), bs.begin(), bs.end());
      return as;
    }
  }
  throw std::logic_error("dnf");
}

// Each congruence c.x = r (mod m) becomes c.x - m q = r with a fresh
// unconstrained quotient variable q.
std::optional<int_vec> solve_cube(const cube& cu, int nvars,
                                  var_domain domain) {
  const std::size_t nq = cu.divs.size();
  const std::size_t total = static_cast<std::size_t>(nvars) + nq;
  lin_system sys;
  sys.nvars = static_cast<int>(total);
  for (const auto& [c, k] : cu.eqs) sys.add_eq(pad(c, total), k);
  for (const auto& [c, k] : cu.les) sys.add_le(pad(c, total), k);
  for (std::size_t j = 0; j < nq; ++j) {
    const auto& [c, r, m] = cu.divs[j];
    int_vec row = pad(c, total);
    row[static_cast<std::size_t>(nvars) + j] = -m;
    sys.add_eq(std::move(row), r);
  }
  if (domain == var_domain::nonneg) {
    for (int i = 0; i < nvars; ++i) {
      int_vec row(total, Int(0));
      row[i] = -1;
      sys.add_le(std::move(row), Int(0));
    }
  }
  auto sol = integer_feasible(sys);
  if (!sol) return std::nullopt;
  return int_vec(sol->begin(), sol->begin() + nvars);
}

}  // namespace

std::optional<int_vec> satisfiable(const formula_ptr& f, int nvars,
                                   var_domain domain) {
  if (nvars < 0) throw std::invalid_argument("satisfiable: nvars < 0");
  if (f->dims() > nvars)
    throw std::invalid_argument("satisfiable: formula mentions x" +
                                std::to_string(f->dims()) + " but nvars = " +
                                std::to_string(nvars));
  if (nvars == 0) {
    if (eval(f, {})) return int_vec{};
    return std::nullopt;
  }
  const auto cubes = dnf(f, false, static_cast<std::size_t>(nvars));
  for (const cube& cu : cubes) {
    auto model = solve_cube(cu, nvars, domain);
    if (!model) continue;
    if (!eval(f, *model))
      throw std::logic_error("satisfiable: solver returned a non-model");
    if (domain == var_domain::nonneg)
      for (const Int& v : *model)
        if (v < 0) throw std::logic_error("satisfiable: negative coordinate");
    return model;
  }
  return std::nullopt;
}

}  // namespace vasreach
