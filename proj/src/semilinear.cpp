#include "vasreach/semilinear.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "vasreach/hilbert.hpp"
#include "vasreach/ilp.hpp"
#include "vasreach/simplex.hpp"

namespace vasreach {

namespace {

int require_dim(const linear_set& l) {
  const int n = static_cast<int>(l.base.size());
  for (const int_vec& p : l.periods)
    if (p.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("linear_set: period dimension mismatch");
  return n;
}

}  // namespace

bool member_linear(const linear_set& l, const int_vec& v) {
  const int n = require_dim(l);
  if (v.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("member_linear: dimension mismatch");
  const int k = static_cast<int>(l.periods.size());
  int_vec c = vec_sub(v, l.base);
  if (k == 0) {
    for (const Int& x : c)
      if (x != 0) return false;
    return true;
  }
  lin_system sys;
  sys.nvars = k;
  for (int i = 0; i < n; ++i) {
    int_vec row(k);
    for (int j = 0; j < k; ++j) row[j] = l.periods[j][i];
    sys.add_eq(std::move(row), c[i]);
  }
  for (int j = 0; j < k; ++j) {
    int_vec row(k, Int(0));
    row[j] = -1;
    sys.add_le(std::move(row), Int(0));  // lambda_j >= 0
  }
  return integer_feasible(sys).has_value();
}

bool member_semilinear(const semilinear_set& s, const int_vec& v) {
  for (const linear_set& l : s.parts)
    if (member_linear(l, v)) return true;
  return false;
}

bool interior_contains(const std::vector<int_vec>& periods, const int_vec& v) {
  const int n = static_cast<int>(v.size());
  if (periods.empty()) {
    for (const Int& x : v)
      if (x != 0) return false;
    return true;
  }
  linear_set cone{int_vec(n, Int(0)), periods};
  if (!member_linear(cone, v)) return false;
  // strictly positive rational combination, homogenized with a scale column
  const int k = static_cast<int>(periods.size());
  int_matrix a(n, k + 1);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) a.at(i, j) = periods[j][i];
  for (int i = 0; i < n; ++i) a.at(i, k) = -v[i];
  std::set<int> strict;
  for (int j = 0; j <= k; ++j) strict.insert(j);
  return rational_feasible_strict(a, strict, {}).has_value();
}

std::vector<int_vec> intersect_monoids(const std::vector<int_vec>& p1,
                                       const std::vector<int_vec>& p2,
                                       int dim) {
  const int k1 = static_cast<int>(p1.size());
  const int k2 = static_cast<int>(p2.size());
  int_matrix a(dim, k1 + k2);
  for (int j = 0; j < k1; ++j)
    for (int i = 0; i < dim; ++i) a.at(i, j) = p1[j][i];
  for (int j = 0; j < k2; ++j)
    for (int i = 0; i < dim; ++i) a.at(i, k1 + j) = -p2[j][i];
  std::vector<int_vec> basis = hilbert_basis(a);
  std::vector<int_vec> out;
  std::set<int_vec> seen;
  for (const int_vec& z : basis) {
    int_vec p(dim, Int(0));
    for (int j = 0; j < k1; ++j)
      if (z[j] != 0)
        for (int i = 0; i < dim; ++i) p[i] += z[j] * p1[j][i];
    bool zero = true;
    for (const Int& x : p)
      if (x != 0) zero = false;
    if (zero) continue;
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

semilinear_set intersect_linear(const linear_set& l1, const linear_set& l2,
                                int dim) {
  require_dim(l1);
  require_dim(l2);
  const int k1 = static_cast<int>(l1.periods.size());
  const int k2 = static_cast<int>(l2.periods.size());
  // b1 + P1 lam1 = b2 + P2 lam2, solved for (lam1, lam2) over N
  int_matrix a(dim, k1 + k2);
  for (int j = 0; j < k1; ++j)
    for (int i = 0; i < dim; ++i) a.at(i, j) = l1.periods[j][i];
  for (int j = 0; j < k2; ++j)
    for (int i = 0; i < dim; ++i) a.at(i, k1 + j) = -l2.periods[j][i];
  int_vec rhs = vec_sub(l2.base, l1.base);
  diophantine_split split = solve_diophantine(a, rhs);

  std::vector<int_vec> periods;
  {
    std::set<int_vec> seen;
    for (const int_vec& z : split.homogeneous) {
      int_vec p(dim, Int(0));
      for (int j = 0; j < k1; ++j)
        if (z[j] != 0)
          for (int i = 0; i < dim; ++i) p[i] += z[j] * l1.periods[j][i];
      bool zero = true;
      for (const Int& x : p)
        if (x != 0) zero = false;
      if (!zero && seen.insert(p).second) periods.push_back(std::move(p));
    }
  }
  semilinear_set out;
  std::set<int_vec> seen_bases;
  for (const int_vec& z : split.minimal) {
    int_vec b = l1.base;
    for (int j = 0; j < k1; ++j)
      if (z[j] != 0)
        for (int i = 0; i < dim; ++i) b[i] += z[j] * l1.periods[j][i];
    if (seen_bases.insert(b).second)
      out.parts.push_back(linear_set{std::move(b), periods});
  }
  return out;
}

int dim_linear(const linear_set& l) {
  const int n = require_dim(l);
  if (l.periods.empty()) return 0;
  std::vector<rat_vec> rows;
  for (std::size_t j = 0; j < l.periods.size(); ++j) {
    rat_vec r(n);
    for (int i = 0; i < n; ++i) r[i] = Rat(l.periods[j][i]);
    rows.push_back(std::move(r));
  }
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    int p = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[rank], rows[p]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const Rat f = rows[i][col] / rows[rank][col];
      for (int j = col; j < n; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

sl_dim dim_semilinear(const semilinear_set& s) {
  if (s.parts.empty()) return std::nullopt;
  int best = 0;
  for (const linear_set& l : s.parts) best = std::max(best, dim_linear(l));
  return best;
}

std::string to_string(const linear_set& l) {
  std::ostringstream os;
  os << "base " << to_string(l.base) << " periods {";
  for (std::size_t j = 0; j < l.periods.size(); ++j) {
    if (j) os << ',';
    os << to_string(l.periods[j]);
  }
  os << '}';
  return os.str();
}

std::string to_string(const semilinear_set& s) {
  if (s.parts.empty()) return "empty";
  std::ostringstream os;
  for (std::size_t i = 0; i < s.parts.size(); ++i) {
    if (i) os << " | ";
    os << to_string(s.parts[i]);
  }
  return os.str();
}

}  // namespace vasreach
