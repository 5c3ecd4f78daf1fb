#include "vasreach/simplex.hpp"

#include <stdexcept>

namespace vasreach {

namespace {

// Dense tableau solver. Entering and leaving choices follow Bland's rule, so
// cycling is impossible. Artificial columns live at the tail and are barred
// from entering once phase 1 is done.
class tableau {
 public:
  explicit tableau(const lp_problem& p)
      : nvars_(p.obj.size()), nrows_(p.m.size()) {
    rows_.assign(nrows_, rat_vec(nvars_ + nrows_ + 1, Rat(0)));
    basis_.assign(nrows_, 0);
    for (std::size_t i = 0; i < nrows_; ++i) {
      Rat rhs = p.rhs[i];
      Rat sign(1);
      if (rhs < 0) {
        sign = -1;
        rhs = -rhs;
      }
      for (std::size_t j = 0; j < nvars_; ++j) rows_[i][j] = sign * p.m[i][j];
      rows_[i][nvars_ + i] = 1;
      rows_[i].back() = rhs;
      basis_[i] = static_cast<int>(nvars_ + i);
    }
  }

  bool phase1() {
    rat_vec cost(nvars_ + nrows_, Rat(0));
    for (std::size_t j = nvars_; j < nvars_ + nrows_; ++j) cost[j] = -1;
    price(cost);
    optimize(nvars_ + nrows_, nullptr);
    for (std::size_t i = 0; i < nrows_; ++i)
      if (basis_[i] >= static_cast<int>(nvars_) && rows_[i].back() != 0)
        return false;
    // swap zero artificials out of the basis where a real column allows it
    for (std::size_t i = 0; i < nrows_; ++i) {
      if (basis_[i] < static_cast<int>(nvars_)) continue;
      for (std::size_t j = 0; j < nvars_; ++j)
        if (rows_[i][j] != 0) {
          pivot(i, static_cast<int>(j));
          break;
        }
    }
    return true;
  }

  lp_status phase2(const rat_vec& objective, Rat* value, rat_vec* w) {
    rat_vec cost(nvars_ + nrows_, Rat(0));
    for (std::size_t j = 0; j < nvars_; ++j) cost[j] = objective[j];
    price(cost);
    bool unbounded = false;
    optimize(nvars_, &unbounded);
    if (unbounded) return lp_status::unbounded;
    if (w) {
      w->assign(nvars_, Rat(0));
      for (std::size_t i = 0; i < nrows_; ++i)
        if (basis_[i] < static_cast<int>(nvars_))
          (*w)[basis_[i]] = rows_[i].back();
    }
    if (value) {
      Rat v(0);
      for (std::size_t i = 0; i < nrows_; ++i)
        if (basis_[i] < static_cast<int>(nvars_))
          v += objective[basis_[i]] * rows_[i].back();
      *value = v;
    }
    return lp_status::optimal;
  }

 private:
  void price(const rat_vec& cost) {
    red_ = cost;
    for (std::size_t i = 0; i < nrows_; ++i) {
      const Rat cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < nvars_ + nrows_; ++j)
        red_[j] -= cb * rows_[i][j];
    }
  }

  void optimize(std::size_t enter_limit, bool* unbounded) {
    for (;;) {
      int enter = -1;
      for (std::size_t j = 0; j < enter_limit; ++j)
        if (red_[j] > 0) {
          enter = static_cast<int>(j);
          break;
        }
      if (enter < 0) return;
      int leave = -1;
      Rat best;
      for (std::size_t i = 0; i < nrows_; ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rat ratio = rows_[i].back() / rows_[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = static_cast<int>(i);
          best = ratio;
        }
      }
      if (leave < 0) {
        if (unbounded) *unbounded = true;
        return;
      }
      pivot(static_cast<std::size_t>(leave), enter);
    }
  }

  void pivot(std::size_t row, int col) {
    const Rat p = rows_[row][col];
    for (auto& x : rows_[row]) x /= p;
    for (std::size_t i = 0; i < nrows_; ++i) {
      if (i == row) continue;
      const Rat f = rows_[i][col];
      if (f == 0) continue;
      for (std::size_t j = 0; j < rows_[i].size(); ++j)
        rows_[i][j] -= f * rows_[row][j];
    }
    const Rat f = red_[col];
    if (f != 0)
      for (std::size_t j = 0; j < nvars_ + nrows_; ++j)
        red_[j] -= f * rows_[row][j];
    basis_[row] = col;
  }

  std::size_t nvars_, nrows_;
  std::vector<rat_vec> rows_;
  std::vector<int> basis_;
  rat_vec red_;
};

}  // namespace

lp_solution lp_maximize(const lp_problem& p) {
  if (p.rhs.size() != p.m.size())
    throw std::invalid_argument("lp: rhs size mismatch");
  for (const auto& r : p.m)
    if (r.size() != p.obj.size())
      throw std::invalid_argument("lp: row size mismatch");
  lp_solution out;
  out.value = 0;
  tableau t(p);
  if (!t.phase1()) {
    out.status = lp_status::infeasible;
    return out;
  }
  out.status = t.phase2(p.obj, &out.value, &out.w);
  return out;
}

std::optional<rat_vec> rational_feasible_strict(const int_matrix& a,
                                                const std::set<int>& strict,
                                                const std::set<int>& nonneg) {
  const int n = a.cols();
  for (int i : strict)
    if (i < 0 || i >= n) throw std::invalid_argument("strict index out of range");
  for (int i : nonneg)
    if (i < 0 || i >= n) throw std::invalid_argument("nonneg index out of range");

  // layout: per original x_j one nonnegative column (plus a negative part for
  // unconstrained components); then t, one slack per strict index, the t-cap
  std::vector<int> pos(n, -1), neg(n, -1);
  int w = 0;
  for (int j = 0; j < n; ++j) {
    pos[j] = w++;
    if (!strict.count(j) && !nonneg.count(j)) neg[j] = w++;
  }
  const int t_col = w++;
  std::vector<int> slack(n, -1);
  for (int j : strict) slack[j] = w++;
  const int cap_col = w++;

  lp_problem p;
  p.obj.assign(w, Rat(0));
  p.obj[t_col] = 1;
  for (int i = 0; i < a.rows(); ++i) {
    rat_vec row(w, Rat(0));
    for (int j = 0; j < n; ++j) {
      if (a.at(i, j) == 0) continue;
      row[pos[j]] += Rat(a.at(i, j));
      if (neg[j] >= 0) row[neg[j]] -= Rat(a.at(i, j));
    }
    p.m.push_back(std::move(row));
    p.rhs.push_back(Rat(0));
  }
  for (int j : strict) {
    rat_vec row(w, Rat(0));
    row[pos[j]] = 1;
    row[t_col] = -1;
    row[slack[j]] = -1;
    p.m.push_back(std::move(row));
    p.rhs.push_back(Rat(0));
  }
  {
    rat_vec row(w, Rat(0));
    row[t_col] = 1;
    row[cap_col] = 1;
    p.m.push_back(std::move(row));
    p.rhs.push_back(Rat(1));
  }

  lp_solution sol = lp_maximize(p);
  if (sol.status != lp_status::optimal || sol.value <= 0) return std::nullopt;
  rat_vec x(n, Rat(0));
  for (int j = 0; j < n; ++j) {
    x[j] = sol.w[pos[j]];
    if (neg[j] >= 0) x[j] -= sol.w[neg[j]];
  }
  return x;
}

}  // namespace vasreach
