#include "vasreach/presburger.hpp"

#include <sstream>

namespace vasreach {

namespace {

formula_ptr mk(formula f) { return std::make_shared<const formula>(std::move(f)); }

void strip_trailing_zeros(int_vec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

const char* cmp_str(cmp_op c) {
  switch (c) {
    case cmp_op::le: return "<=";
    case cmp_op::lt: return "<";
    case cmp_op::eq: return "=";
    case cmp_op::ne: return "!=";
    case cmp_op::ge: return ">=";
    case cmp_op::gt: return ">";
  }
  throw std::logic_error("cmp_str");
}

// prints sum c_i x_{i+1}; empty sum prints as 0
void print_combo(std::ostream& os, const int_vec& coeffs) {
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    Int c = coeffs[i];
    if (first) {
      if (c < 0) { os << "-"; c = -c; }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (c != 1) os << c.get_str() << "*";
    os << "x" << (i + 1);
    first = false;
  }
  if (first) os << "0";
}

void print(std::ostream& os, const formula_ptr& f, int parent_prec) {
  // precedence: or=1, and=2, not=3, atoms=4
  switch (f->k) {
    case formula::kind::tt: os << "true"; return;
    case formula::kind::ff: os << "false"; return;
    case formula::kind::lin:
      print_combo(os, f->coeffs);
      os << " " << cmp_str(f->cmp) << " " << f->rhs.get_str();
      return;
    case formula::kind::divi:
      os << "(";
      print_combo(os, f->coeffs);
      os << ") mod " << f->modulus.get_str() << " = " << f->residue.get_str();
      return;
    case formula::kind::fnot:
      os << "!";
      if (f->a->k == formula::kind::fand || f->a->k == formula::kind::forr ||
          f->a->k == formula::kind::lin || f->a->k == formula::kind::divi) {
        os << "(";
        print(os, f->a, 0);
        os << ")";
      } else {
        print(os, f->a, 3);
      }
      return;
    case formula::kind::fand: {
      bool paren = parent_prec > 2;
      if (paren) os << "(";
      print(os, f->a, 2);
      os << " && ";
      print(os, f->b, 2);
      if (paren) os << ")";
      return;
    }
    case formula::kind::forr: {
      bool paren = parent_prec > 1;
      if (paren) os << "(";
      print(os, f->a, 1);
      os << " || ";
      print(os, f->b, 1);
      if (paren) os << ")";
      return;
    }
  }
  throw std::logic_error("print: bad kind");
}

}  // namespace

formula_ptr f_true() {
  formula f;
  f.k = formula::kind::tt;
  return mk(std::move(f));
}

formula_ptr f_false() {
  formula f;
  f.k = formula::kind::ff;
  return mk(std::move(f));
}

formula_ptr f_lin(int_vec coeffs, cmp_op cmp, Int rhs) {
  strip_trailing_zeros(coeffs);
  formula f;
  f.k = formula::kind::lin;
  f.coeffs = std::move(coeffs);
  f.cmp = cmp;
  f.rhs = std::move(rhs);
  return mk(std::move(f));
}

formula_ptr f_div(int_vec coeffs, Int residue, Int modulus) {
  if (modulus < 2) throw std::invalid_argument("f_div: modulus must be >= 2");
  if (residue < 0 || residue >= modulus)
    throw std::invalid_argument("f_div: residue out of range");
  strip_trailing_zeros(coeffs);
  formula f;
  f.k = formula::kind::divi;
  f.coeffs = std::move(coeffs);
  f.residue = std::move(residue);
  f.modulus = std::move(modulus);
  return mk(std::move(f));
}

formula_ptr f_not(formula_ptr g) {
  formula f;
  f.k = formula::kind::fnot;
  f.a = std::move(g);
  return mk(std::move(f));
}

formula_ptr f_and(formula_ptr a, formula_ptr b) {
  formula f;
  f.k = formula::kind::fand;
  f.a = std::move(a);
  f.b = std::move(b);
  return mk(std::move(f));
}

formula_ptr f_or(formula_ptr a, formula_ptr b) {
  formula f;
  f.k = formula::kind::forr;
  f.a = std::move(a);
  f.b = std::move(b);
  return mk(std::move(f));
}

int formula::dims() const {
  switch (k) {
    case kind::tt:
    case kind::ff:
      return 0;
    case kind::lin:
    case kind::divi:
      return static_cast<int>(coeffs.size());
    case kind::fnot:
      return a->dims();
    case kind::fand:
    case kind::forr:
      return std::max(a->dims(), b->dims());
  }
  throw std::logic_error("dims: bad kind");
}

bool eval(const formula_ptr& f, const int_vec& point) {
  switch (f->k) {
    case formula::kind::tt: return true;
    case formula::kind::ff: return false;
    case formula::kind::lin: {
      Int s = 0;
      for (std::size_t i = 0; i < f->coeffs.size(); ++i) {
        if (i >= point.size())
          throw std::invalid_argument("eval: point has too few coordinates");
        s += f->coeffs[i] * point[i];
      }
      switch (f->cmp) {
        case cmp_op::le: return s <= f->rhs;
        case cmp_op::lt: return s < f->rhs;
        case cmp_op::eq: return s == f->rhs;
        case cmp_op::ne: return s != f->rhs;
        case cmp_op::ge: return s >= f->rhs;
        case cmp_op::gt: return s > f->rhs;
      }
      throw std::logic_error("eval: bad cmp");
    }
    case formula::kind::divi: {
      Int s = 0;
      for (std::size_t i = 0; i < f->coeffs.size(); ++i) {
        if (i >= point.size())
          throw std::invalid_argument("eval: point has too few coordinates");
        s += f->coeffs[i] * point[i];
      }
      Int m = mod_floor(s - f->residue, f->modulus);
      return m == 0;
    }
    case formula::kind::fnot: return !eval(f->a, point);
    case formula::kind::fand: return eval(f->a, point) && eval(f->b, point);
    case formula::kind::forr: return eval(f->a, point) || eval(f->b, point);
  }
  throw std::logic_error("eval: bad kind");
}

std::string format(const formula_ptr& f) {
  std::ostringstream os;
  print(os, f, 0);
  return os.str();
}

Int formula_size(const formula_ptr& f) {
  switch (f->k) {
    case formula::kind::tt:
    case formula::kind::ff:
      return 0;
    case formula::kind::lin: {
      Int s = 1 + abs(f->rhs);
      for (const Int& c : f->coeffs) s += abs(c);
      return s;
    }
    case formula::kind::divi: {
      Int s = 1 + f->modulus;
      for (const Int& c : f->coeffs) s += abs(c);
      return s;
    }
    case formula::kind::fnot:
      return 1 + formula_size(f->a);
    case formula::kind::fand:
    case formula::kind::forr:
      return 1 + formula_size(f->a) + formula_size(f->b);
  }
  throw std::logic_error("formula_size: bad kind");
}

formula_ptr subst_shift(const formula_ptr& f, const int_vec& delta) {
  switch (f->k) {
    case formula::kind::tt:
    case formula::kind::ff:
      return f;
    case formula::kind::lin: {
      // (c . (x + d)) cmp k  <=>  (c . x) cmp (k - c . d)
      Int shift = 0;
      for (std::size_t i = 0; i < f->coeffs.size(); ++i) {
        if (i >= delta.size())
          throw std::invalid_argument("subst_shift: delta has too few coordinates");
        shift += f->coeffs[i] * delta[i];
      }
      return f_lin(f->coeffs, f->cmp, f->rhs - shift);
    }
    case formula::kind::divi: {
      Int shift = 0;
      for (std::size_t i = 0; i < f->coeffs.size(); ++i) {
        if (i >= delta.size())
          throw std::invalid_argument("subst_shift: delta has too few coordinates");
        shift += f->coeffs[i] * delta[i];
      }
      return f_div(f->coeffs, mod_floor(f->residue - shift, f->modulus),
                   f->modulus);
    }
    case formula::kind::fnot:
      return f_not(subst_shift(f->a, delta));
    case formula::kind::fand:
      return f_and(subst_shift(f->a, delta), subst_shift(f->b, delta));
    case formula::kind::forr:
      return f_or(subst_shift(f->a, delta), subst_shift(f->b, delta));
  }
  throw std::logic_error("subst_shift: bad kind");
}

}  // namespace vasreach
