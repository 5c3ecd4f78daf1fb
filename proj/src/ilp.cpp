#include "vasreach/ilp.hpp"

#include <stdexcept>

#include "vasreach/simplex.hpp"

namespace vasreach {

void lin_system::add_eq(int_vec lhs, Int rhs) {
  if (lhs.size() != static_cast<std::size_t>(nvars))
    throw std::invalid_argument("lin_system: row size mismatch");
  eq_lhs.push_back(std::move(lhs));
  eq_rhs.push_back(std::move(rhs));
}

void lin_system::add_le(int_vec lhs, Int rhs) {
  if (lhs.size() != static_cast<std::size_t>(nvars))
    throw std::invalid_argument("lin_system: row size mismatch");
  le_lhs.push_back(std::move(lhs));
  le_rhs.push_back(std::move(rhs));
}

namespace {

struct ineq_system {
  std::vector<int_vec> lhs;  // rows over t
  int_vec rhs;
};

// divide each row by the gcd of its coefficients, flooring the bound; a row
// with zero coefficients either drops out or proves infeasibility
bool gcd_tighten(ineq_system& s) {
  std::vector<int_vec> lhs;
  int_vec rhs;
  for (std::size_t i = 0; i < s.lhs.size(); ++i) {
    Int g(0);
    for (const Int& c : s.lhs[i]) g = gcd(g, c);
    if (g == 0) {
      if (s.rhs[i] < 0) return false;
      continue;
    }
    int_vec row = s.lhs[i];
    for (Int& c : row) c /= g;
    lhs.push_back(std::move(row));
    rhs.push_back(floor_div(s.rhs[i], g));
  }
  s.lhs = std::move(lhs);
  s.rhs = std::move(rhs);
  return true;
}

// box radius that provably contains an integer point of G t <= h when one
// exists (standard small-solution bound for integer programs)
Int solution_box_radius(const ineq_system& s, int d) {
  const Int m(static_cast<long>(s.lhs.size()) + 1);
  Int amax(1);
  for (std::size_t i = 0; i < s.lhs.size(); ++i) {
    for (const Int& c : s.lhs[i])
      if (abs(c) > amax) amax = abs(c);
    if (abs(s.rhs[i]) > amax) amax = abs(s.rhs[i]);
  }
  const Int n(2L * d + static_cast<long>(s.lhs.size()) + 1);
  Int b = n;
  Int base = m * amax;
  unsigned long e = 2 * static_cast<unsigned long>(s.lhs.size()) + 1;
  Int p;
  mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), e);
  return b * p + 1;
}

struct branch_state {
  int_vec lo, hi;
};

// LP feasibility of G t <= h with lo <= t <= hi; also reports a relaxation
// point when feasible
bool lp_feasible(const ineq_system& s, const branch_state& bx, int d,
                 rat_vec* point) {
  // layout: t_j = u_j - v_j with u, v >= 0; slack per row
  lp_problem p;
  const std::size_t base_rows = s.lhs.size();
  const std::size_t bound_rows = 2 * static_cast<std::size_t>(d);
  const std::size_t ncols =
      2 * static_cast<std::size_t>(d) + base_rows + bound_rows;
  // minimize the L1 norm of t: keeps the relaxation vertex near the origin
  // instead of a far corner of the bounding box, so branching stays in the
  // region where small integer points live
  p.obj.assign(ncols, Rat(0));
  for (std::size_t j = 0; j < 2 * static_cast<std::size_t>(d); ++j)
    p.obj[j] = Rat(-1);
  std::size_t slack = 2 * static_cast<std::size_t>(d);
  auto add_le_row = [&](const int_vec& coeff, const Int& bound) {
    rat_vec row(ncols, Rat(0));
    for (int j = 0; j < d; ++j) {
      if (coeff[j] == 0) continue;
      row[2 * j] = Rat(coeff[j]);
      row[2 * j + 1] = -Rat(coeff[j]);
    }
    row[slack++] = 1;
    p.m.push_back(std::move(row));
    p.rhs.push_back(Rat(bound));
  };
  for (std::size_t i = 0; i < base_rows; ++i) add_le_row(s.lhs[i], s.rhs[i]);
  for (int j = 0; j < d; ++j) {
    int_vec up(d, Int(0));
    up[j] = 1;
    add_le_row(up, bx.hi[j]);
    int_vec dn(d, Int(0));
    dn[j] = -1;
    add_le_row(dn, -bx.lo[j]);
  }
  lp_solution sol = lp_maximize(p);
  if (sol.status == lp_status::infeasible) return false;
  if (point) {
    point->assign(d, Rat(0));
    for (int j = 0; j < d; ++j)
      (*point)[j] = sol.w[2 * j] - sol.w[2 * j + 1];
  }
  return true;
}

Int round_rat(const Rat& r) { return rat_floor(r + Rat(1, 2)); }

// Gram-Schmidt data for an integer row basis.
struct gso {
  std::vector<rat_vec> star;
  std::vector<std::vector<Rat>> mu;
  std::vector<Rat> norm2;
};

gso gram_schmidt(const std::vector<int_vec>& b) {
  const std::size_t d = b.size();
  const std::size_t n = d ? b[0].size() : 0;
  gso g;
  g.star.assign(d, rat_vec(n, Rat(0)));
  g.mu.assign(d, std::vector<Rat>(d, Rat(0)));
  g.norm2.assign(d, Rat(0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < n; ++j) g.star[i][j] = Rat(b[i][j]);
    for (std::size_t k = 0; k < i; ++k) {
      Rat dot(0);
      for (std::size_t j = 0; j < n; ++j) dot += Rat(b[i][j]) * g.star[k][j];
      g.mu[i][k] = dot / g.norm2[k];
      for (std::size_t j = 0; j < n; ++j)
        g.star[i][j] -= g.mu[i][k] * g.star[k][j];
    }
    for (std::size_t j = 0; j < n; ++j)
      g.norm2[i] += g.star[i][j] * g.star[i][j];
  }
  return g;
}

// The Hermite-form kernel basis can be badly skewed, which makes the
// substituted inequality system nearly degenerate and stalls the search.
// Standard LLL reduction (delta = 3/4) keeps the substitution well
// conditioned; basis dimensions here never exceed a few dozen.
void lll_reduce(std::vector<int_vec>& b) {
  const std::size_t d = b.size();
  if (d < 2) return;
  const Rat delta(3, 4);
  std::size_t k = 1;
  while (k < d) {
    gso g = gram_schmidt(b);
    for (std::size_t j = k; j-- > 0;) {
      Int q = round_rat(g.mu[k][j]);
      if (q != 0) {
        for (std::size_t i = 0; i < b[k].size(); ++i) b[k][i] -= q * b[j][i];
        g = gram_schmidt(b);
      }
    }
    Rat bound = (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.norm2[k - 1];
    if (g.norm2[k] >= bound) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      k = k > 1 ? k - 1 : 1;
    }
  }
}

// Shift the particular solution by lattice vectors (nearest-plane rounding)
// so it sits close to the origin in the reduced basis.
void babai_reduce(const std::vector<int_vec>& b, int_vec& base) {
  if (b.empty()) return;
  gso g = gram_schmidt(b);
  for (std::size_t i = b.size(); i-- > 0;) {
    Rat dot(0);
    for (std::size_t j = 0; j < base.size(); ++j)
      dot += Rat(base[j]) * g.star[i][j];
    Int q = round_rat(dot / g.norm2[i]);
    if (q != 0)
      for (std::size_t j = 0; j < base.size(); ++j) base[j] -= q * b[i][j];
  }
}

std::optional<int_vec> branch_and_bound(const ineq_system& s, int d) {
  if (d == 0) {
    for (std::size_t i = 0; i < s.lhs.size(); ++i)
      if (s.rhs[i] < 0) return std::nullopt;
    return int_vec{};
  }
  const Int radius = solution_box_radius(s, d);
  branch_state root;
  root.lo.assign(d, -radius);
  root.hi.assign(d, radius);
  std::vector<branch_state> stack{root};
  while (!stack.empty()) {
    branch_state bx = std::move(stack.back());
    stack.pop_back();
    bool empty = false;
    for (int j = 0; j < d; ++j)
      if (bx.lo[j] > bx.hi[j]) empty = true;
    if (empty) continue;
    rat_vec point;
    if (!lp_feasible(s, bx, d, &point)) continue;
    int frac = -1;
    for (int j = 0; j < d; ++j)
      if (!is_integral(point[j])) {
        frac = j;
        break;
      }
    if (frac < 0) {
      int_vec t(d);
      for (int j = 0; j < d; ++j) t[j] = rat_floor(point[j]);
      return t;
    }
    const Int fl = rat_floor(point[frac]);
    branch_state left = bx, right = bx;
    const Int width = bx.hi[frac] - bx.lo[frac];
    if (width <= 16) {
      // classic split at the fractional value
      if (left.hi[frac] > fl) left.hi[frac] = fl;
      if (right.lo[frac] < fl + 1) right.lo[frac] = fl + 1;
    } else {
      // bisect wide ranges: splitting at the vertex lets a sliding
      // relaxation optimum walk the whole range one unit per node
      const Int mid = floor_div(bx.lo[frac] + bx.hi[frac], Int(2));
      left.hi[frac] = mid;
      right.lo[frac] = mid + 1;
    }
    // explore the half holding the relaxation point first
    if (Rat(left.hi[frac]) >= point[frac]) {
      stack.push_back(std::move(right));
      stack.push_back(std::move(left));
    } else {
      stack.push_back(std::move(left));
      stack.push_back(std::move(right));
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<int_vec> integer_feasible(const lin_system& sys) {
  const int n = sys.nvars;
  // eliminate the equalities over Z
  int_vec base(n, Int(0));
  std::vector<int_vec> kernel;
  if (!sys.eq_lhs.empty()) {
    int_matrix e = int_matrix::from_rows(sys.eq_lhs);
    auto al = solve_integer_affine(e, sys.eq_rhs);
    if (!al) return std::nullopt;
    base = std::move(al->base);
    kernel = std::move(al->kernel);
    lll_reduce(kernel);
    babai_reduce(kernel, base);
  } else {
    kernel.reserve(n);
    for (int j = 0; j < n; ++j) {
      int_vec col(n, Int(0));
      col[j] = 1;
      kernel.push_back(std::move(col));
    }
  }
  const int d = static_cast<int>(kernel.size());
  // substitute x = base + K t into the inequalities
  ineq_system s;
  for (std::size_t i = 0; i < sys.le_lhs.size(); ++i) {
    int_vec row(d, Int(0));
    Int shift(0);
    for (int j = 0; j < n; ++j) {
      const Int& c = sys.le_lhs[i][j];
      if (c == 0) continue;
      shift += c * base[j];
      for (int k = 0; k < d; ++k) row[k] += c * kernel[k][j];
    }
    s.lhs.push_back(std::move(row));
    s.rhs.push_back(sys.le_rhs[i] - shift);
  }
  if (!gcd_tighten(s)) return std::nullopt;
  auto t = branch_and_bound(s, d);
  if (!t) return std::nullopt;
  int_vec x = base;
  for (int k = 0; k < d; ++k)
    if ((*t)[k] != 0)
      for (int j = 0; j < n; ++j) x[j] += (*t)[k] * kernel[k][j];
  return x;
}

}  // namespace vasreach
