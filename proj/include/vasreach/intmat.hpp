#pragma once

#include <optional>
#include <vector>

#include "vasreach/numeric.hpp"

namespace vasreach {

// Dense row-major integer matrix. Kept deliberately small: the solvers in
// this project never go past a few dozen rows or columns.
class int_matrix {
 public:
  int_matrix() : rows_(0), cols_(0) {}
  int_matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows) {
    for (auto& r : a_) r.assign(cols, Int(0));
  }
  static int_matrix identity(int n);
  static int_matrix from_rows(std::vector<int_vec> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return a_[i][j]; }
  const Int& at(int i, int j) const { return a_[i][j]; }
  const int_vec& row(int i) const { return a_[i]; }

  int_vec mul(const int_vec& x) const;          // A * x
  int_matrix mul(const int_matrix& b) const;    // A * B
  void append_row(int_vec r);
  void append_col(const int_vec& c);

  Int det() const;  // Bareiss, square matrices only

  bool operator==(const int_matrix& o) const { return a_ == o.a_; }

 private:
  int rows_, cols_;
  std::vector<int_vec> a_;
};

struct hermite_result {
  int_matrix h;  // H = A * U, column-style form
  int_matrix u;  // unimodular
  int rank = 0;
  std::vector<int> pivot_row;  // pivot_row[j] for j < rank
};

// Column-operation Hermite form: pivots walk down-right, each pivot is
// positive, entries to its right in the same row are zero and entries to its
// left are reduced into [0, pivot).
hermite_result hermite_normal_form(const int_matrix& a);

// Some integer solution of A x = b, or nothing.
std::optional<int_vec> solve_integer(const int_matrix& a, const int_vec& b);

// General integer solution of A x = b: x = base + K * t, t ranging over Z.
// Kernel columns form a lattice basis of the integer null space.
struct affine_lattice {
  int_vec base;
  std::vector<int_vec> kernel;  // columns
};
std::optional<affine_lattice> solve_integer_affine(const int_matrix& a,
                                                   const int_vec& b);

// <=-minimal elements of a finite set of nonnegative vectors; duplicates
// collapse, order of first appearance is kept.
std::vector<int_vec> min_elements(const std::vector<int_vec>& xs);

}  // namespace vasreach
