#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vasreach/numeric.hpp"

namespace vasreach {

// Quantifier-free formulas over x1..xn:
//   linear atoms   sum c_i x_i  cmp  k        cmp in <= < = != >= >
//   divisibility   (sum c_i x_i) mod m = r    m >= 2, 0 <= r < m
//   true, false, !, &&, ||
enum class cmp_op { le, lt, eq, ne, ge, gt };

class formula;
using formula_ptr = std::shared_ptr<const formula>;

class formula {
 public:
  enum class kind { tt, ff, lin, divi, fnot, fand, forr };

  kind k;
  int_vec coeffs;  // lin, divi; index i is the coefficient of x_{i+1}
  cmp_op cmp = cmp_op::le;
  Int rhs;               // lin
  Int residue, modulus;  // divi
  formula_ptr a, b;

  // highest referenced variable index (1-based); 0 for closed formulas
  int dims() const;
};

formula_ptr f_true();
formula_ptr f_false();
formula_ptr f_lin(int_vec coeffs, cmp_op cmp, Int rhs);
formula_ptr f_div(int_vec coeffs, Int residue, Int modulus);
formula_ptr f_not(formula_ptr f);
formula_ptr f_and(formula_ptr a, formula_ptr b);
formula_ptr f_or(formula_ptr a, formula_ptr b);

bool eval(const formula_ptr& f, const int_vec& point);

// canonical printable form; parse(format(f)) reproduces the structure
std::string format(const formula_ptr& f);

struct parse_error : std::runtime_error {
  std::size_t offset;
  parse_error(const std::string& msg, std::size_t off)
      : std::runtime_error(msg), offset(off) {}
};

formula_ptr parse_formula(const std::string& text);

// substitute x := x + delta (atom constants shift)
formula_ptr subst_shift(const formula_ptr& f, const int_vec& delta);

enum class var_domain { nonneg, all_int };

// Complete and terminating satisfiability over nvars variables: DNF, residue
// elimination of divisibility literals, then exact integer feasibility.
// Returns a model on success, nothing when unsatisfiable.
std::optional<int_vec> satisfiable(const formula_ptr& f, int nvars,
                                   var_domain domain);

// true and false cost 0; a linear atom costs 1 plus the magnitudes of its
// coefficients and bound; a divisibility atom costs 1 plus its coefficient
// magnitudes plus the modulus; !, &&, || cost 1 plus their children.
Int formula_size(const formula_ptr& f);

// Deterministic enumeration of every formula of size <= k over n variables,
// duplicate-free by canonical string; the list for k is a prefix of the list
// for k+1 (formulas arrive in batches of equal size, each batch sorted by
// its canonical strings).
class formula_enumerator {
 public:
  explicit formula_enumerator(int nvars);

  // grow the enumeration so every formula of size <= k is present
  void extend_to(int k);

  const std::vector<formula_ptr>& items() const { return items_; }
  int current_size() const { return size_done_; }

 private:
  void emit_batch(int s);

  int nvars_;
  int size_done_ = -1;
  std::vector<formula_ptr> items_;
  std::vector<std::pair<std::size_t, std::size_t>> batch_range_;  // per size
};

std::vector<formula_ptr> enumerate_formulas(int nvars, int k);

}  // namespace vasreach
