#include "vasreach/intmat.hpp"

#include <stdexcept>

namespace vasreach {

int_matrix int_matrix::identity(int n) {
  int_matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

int_matrix int_matrix::from_rows(std::vector<int_vec> rows) {
  int_matrix m;
  m.rows_ = static_cast<int>(rows.size());
  m.cols_ = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (const auto& r : rows)
    if (r.size() != static_cast<std::size_t>(m.cols_))
      throw std::invalid_argument("int_matrix: ragged rows");
  m.a_ = std::move(rows);
  return m;
}

int_vec int_matrix::mul(const int_vec& x) const {
  if (x.size() != static_cast<std::size_t>(cols_))
    throw std::invalid_argument("int_matrix::mul: size mismatch");
  int_vec r(rows_, Int(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (a_[i][j] != 0) r[i] += a_[i][j] * x[j];
  return r;
}

int_matrix int_matrix::mul(const int_matrix& b) const {
  if (cols_ != b.rows_)
    throw std::invalid_argument("int_matrix::mul: shape mismatch");
  int_matrix r(rows_, b.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k)
      if (a_[i][k] != 0)
        for (int j = 0; j < b.cols_; ++j)
          if (b.a_[k][j] != 0) r.a_[i][j] += a_[i][k] * b.a_[k][j];
  return r;
}

void int_matrix::append_row(int_vec r) {
  if (r.size() != static_cast<std::size_t>(cols_) && rows_ > 0)
    throw std::invalid_argument("append_row: size mismatch");
  if (rows_ == 0) cols_ = static_cast<int>(r.size());
  a_.push_back(std::move(r));
  ++rows_;
}

void int_matrix::append_col(const int_vec& c) {
  if (c.size() != static_cast<std::size_t>(rows_))
    throw std::invalid_argument("append_col: size mismatch");
  for (int i = 0; i < rows_; ++i) a_[i].push_back(c[i]);
  ++cols_;
}

Int int_matrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det: not square");
  const int n = rows_;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination
  std::vector<int_vec> m = a_;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

namespace {

// two-column unimodular gcd step on (H, U): zero H[i][j] into H[i][r]
void gcd_columns(int_matrix& h, int_matrix& u, int i, int r, int j) {
  const Int alpha = h.at(i, r);
  const Int beta = h.at(i, j);
  Int g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), alpha.get_mpz_t(),
             beta.get_mpz_t());
  const Int a_g = alpha / g;
  const Int b_g = beta / g;
  for (int k = 0; k < h.rows(); ++k) {
    const Int cr = h.at(k, r), cj = h.at(k, j);
    h.at(k, r) = x * cr + y * cj;
    h.at(k, j) = a_g * cj - b_g * cr;
  }
  for (int k = 0; k < u.rows(); ++k) {
    const Int cr = u.at(k, r), cj = u.at(k, j);
    u.at(k, r) = x * cr + y * cj;
    u.at(k, j) = a_g * cj - b_g * cr;
  }
}

void negate_column(int_matrix& h, int_matrix& u, int j) {
  for (int k = 0; k < h.rows(); ++k) h.at(k, j) = -h.at(k, j);
  for (int k = 0; k < u.rows(); ++k) u.at(k, j) = -u.at(k, j);
}

void add_column_multiple(int_matrix& h, int_matrix& u, int dst, int src,
                         const Int& q) {
  if (q == 0) return;
  for (int k = 0; k < h.rows(); ++k) h.at(k, dst) += q * h.at(k, src);
  for (int k = 0; k < u.rows(); ++k) u.at(k, dst) += q * u.at(k, src);
}

}  // namespace

hermite_result hermite_normal_form(const int_matrix& a) {
  hermite_result res;
  res.h = a;
  res.u = int_matrix::identity(a.cols());
  int r = 0;  // next pivot column
  for (int i = 0; i < a.rows() && r < a.cols(); ++i) {
    int nz = -1;
    for (int j = r; j < a.cols(); ++j)
      if (res.h.at(i, j) != 0) {
        nz = j;
        break;
      }
    if (nz < 0) continue;
    if (nz != r) {
      // swap columns to bring a nonzero into the pivot slot
      for (int k = 0; k < res.h.rows(); ++k)
        std::swap(res.h.at(k, r), res.h.at(k, nz));
      for (int k = 0; k < res.u.rows(); ++k)
        std::swap(res.u.at(k, r), res.u.at(k, nz));
    }
    for (int j = r + 1; j < a.cols(); ++j)
      if (res.h.at(i, j) != 0) gcd_columns(res.h, res.u, i, r, j);
    if (res.h.at(i, r) < 0) negate_column(res.h, res.u, r);
    // reduce the entries left of the pivot into [0, pivot)
    for (int j = 0; j < r; ++j) {
      const Int q = floor_div(res.h.at(i, j), res.h.at(i, r));
      add_column_multiple(res.h, res.u, j, r, -q);
    }
    res.pivot_row.push_back(i);
    ++r;
  }
  res.rank = r;
  return res;
}

std::optional<affine_lattice> solve_integer_affine(const int_matrix& a,
                                                   const int_vec& b) {
  if (b.size() != static_cast<std::size_t>(a.rows()))
    throw std::invalid_argument("solve_integer: rhs size mismatch");
  hermite_result hr = hermite_normal_form(a);
  const int n = a.cols();
  int_vec y(n, Int(0));
  // forward substitution over the pivot structure of H
  int piv = 0;
  for (int i = 0; i < a.rows(); ++i) {
    Int s(0);
    for (int j = 0; j < n; ++j)
      if (hr.h.at(i, j) != 0) s += hr.h.at(i, j) * y[j];
    if (piv < hr.rank && hr.pivot_row[piv] == i) {
      const Int rem = b[i] - s;
      const Int& p = hr.h.at(i, piv);
      if (rem % p != 0) return std::nullopt;
      y[piv] = rem / p;
      ++piv;
    } else if (s != b[i]) {
      return std::nullopt;
    }
  }
  affine_lattice out;
  out.base = hr.u.mul(y);
  for (int j = hr.rank; j < n; ++j) {
    int_vec col(n);
    for (int k = 0; k < n; ++k) col[k] = hr.u.at(k, j);
    out.kernel.push_back(std::move(col));
  }
  return out;
}

std::optional<int_vec> solve_integer(const int_matrix& a, const int_vec& b) {
  auto al = solve_integer_affine(a, b);
  if (!al) return std::nullopt;
  return al->base;
}

std::vector<int_vec> min_elements(const std::vector<int_vec>& xs) {
  std::vector<int_vec> out;
  for (const int_vec& x : xs) {
    bool keep = true;
    for (const int_vec& y : xs) {
      if (&x == &y) continue;
      if (vec_le(y, x) && y != x) {
        keep = false;
        break;
      }
    }
    if (!keep) continue;
    bool dup = false;
    for (const int_vec& o : out)
      if (o == x) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(x);
  }
  return out;
}

}  // namespace vasreach
