#include "vasreach/hilbert.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace vasreach {

namespace {

// frontier completion for A x = 0 over N^n
std::vector<int_vec> complete(const int_matrix& a) {
  const int n = a.cols();
  const int m = a.rows();
  std::vector<int_vec> basis;
  auto dominated_by_basis = [&](const int_vec& t) {
    for (const int_vec& b : basis)
      if (vec_le(b, t)) return true;  // t >= some solution, never minimal
    return false;
  };
  // defect columns: A e_i
  std::vector<int_vec> col(n);
  for (int j = 0; j < n; ++j) {
    col[j].assign(m, Int(0));
    for (int i = 0; i < m; ++i) col[j][i] = a.at(i, j);
  }
  std::set<int_vec> frontier;
  for (int j = 0; j < n; ++j) {
    int_vec e(n, Int(0));
    e[j] = 1;
    frontier.insert(std::move(e));
  }
  while (!frontier.empty()) {
    std::set<int_vec> next;
    // harvest solutions first so domination pruning sees them
    std::vector<std::pair<int_vec, int_vec>> grow;  // (t, defect)
    for (const int_vec& t : frontier) {
      int_vec defect(m, Int(0));
      for (int j = 0; j < n; ++j)
        if (t[j] != 0)
          for (int i = 0; i < m; ++i) defect[i] += t[j] * col[j][i];
      bool zero = true;
      for (const Int& d : defect)
        if (d != 0) zero = false;
      if (zero) {
        if (!dominated_by_basis(t)) basis.push_back(t);
      } else {
        grow.emplace_back(t, std::move(defect));
      }
    }
    for (auto& [t, defect] : grow) {
      if (dominated_by_basis(t)) continue;
      for (int j = 0; j < n; ++j) {
        // step along coordinate j only when it fights the defect
        Int dot(0);
        for (int i = 0; i < m; ++i) dot += defect[i] * col[j][i];
        if (dot >= 0) continue;
        int_vec t2 = t;
        t2[j] += 1;
        if (!dominated_by_basis(t2)) next.insert(std::move(t2));
      }
    }
    frontier = std::move(next);
  }
  basis = min_elements(basis);
  std::sort(basis.begin(), basis.end());
  return basis;
}

}  // namespace

std::vector<int_vec> hilbert_basis(const int_matrix& a) {
  if (a.cols() == 0) return {};
  return complete(a);
}

diophantine_split solve_diophantine(const int_matrix& a, const int_vec& b) {
  if (b.size() != static_cast<std::size_t>(a.rows()))
    throw std::invalid_argument("solve_diophantine: rhs size mismatch");
  const int n = a.cols();
  // homogenize with a flag column carrying -b
  int_matrix ext = a;
  if (ext.rows() == 0) ext = int_matrix(0, n);
  int_vec flag(a.rows());
  for (int i = 0; i < a.rows(); ++i) flag[i] = -b[i];
  ext.append_col(flag);
  std::vector<int_vec> basis = complete(ext);
  diophantine_split out;
  for (const int_vec& v : basis) {
    const Int& z = v[n];
    int_vec x(v.begin(), v.begin() + n);
    if (z == 0)
      out.homogeneous.push_back(std::move(x));
    else if (z == 1)
      out.minimal.push_back(std::move(x));
    // flag >= 2 solves a multiple of b; irrelevant here
  }
  return out;
}

std::vector<int_vec> minimal_inhomogeneous(const int_matrix& a,
                                           const int_vec& b) {
  return solve_diophantine(a, b).minimal;
}

}  // namespace vasreach
