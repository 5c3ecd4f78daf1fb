#include <cctype>

#include "vasreach/presburger.hpp"

namespace vasreach {

namespace {

// Grammar (whitespace-insensitive):
//   formula := or
//   or      := and ("||" and)*
//   and     := unary ("&&" unary)*
//   unary   := "!" unary | "true" | "false" | "(" formula ")" | atom
//   atom    := combo cmp combo
//            | "(" combo ")" "mod" int "=" int
//   combo   := ["-"] term (("+"|"-") term)*
//   term    := int ["*" var] | var
//   var     := "x" digits        (1-based index)
// A leading "(" is resolved by backtracking: the divisibility reading is
// tried first, then the parenthesized-formula reading.
struct combo {
  int_vec coeffs;
  Int c0;
};

struct parser {
  const std::string& s;
  std::size_t pos = 0;

  explicit parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos == s.size();
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  char peek2() {
    skip_ws();
    return pos + 1 < s.size() ? s[pos + 1] : '\0';
  }

  bool eat(const char* tok) {
    skip_ws();
    std::size_t n = std::char_traits<char>::length(tok);
    if (s.compare(pos, n, tok) != 0) return false;
    pos += n;
    return true;
  }

  void expect(const char* tok) {
    if (!eat(tok))
      throw parse_error(std::string("expected '") + tok + "'", pos);
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }

  bool at_ident(const char* word) {
    skip_ws();
    std::size_t save = pos;
    std::string w = ident();
    pos = save;
    return w == word;
  }

  Int integer() {
    skip_ws();
    std::size_t start = pos;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
      neg = s[pos] == '-';
      ++pos;
      skip_ws();
    }
    std::size_t dstart = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == dstart) throw parse_error("expected integer", start);
    Int v(s.substr(dstart, pos - dstart));
    return neg ? Int(-v) : v;
  }

  // parses one signed term into acc
  void term(combo& acc, bool negate) {
    skip_ws();
    std::size_t start = pos;
    Int coeff = 1;
    bool have_coeff = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff = integer();
      have_coeff = true;
      skip_ws();
      if (!(pos < s.size() && s[pos] == '*')) {
        // bare constant
        acc.c0 += negate ? Int(-coeff) : coeff;
        return;
      }
      ++pos;  // consume '*'
      skip_ws();
    }
    if (!(pos < s.size() && s[pos] == 'x'))
      throw parse_error(have_coeff ? "expected variable after '*'"
                                   : "expected term",
                        have_coeff ? pos : start);
    ++pos;
    std::size_t dstart = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == dstart) throw parse_error("expected variable index", dstart);
    unsigned long idx = std::stoul(s.substr(dstart, pos - dstart));
    if (idx == 0) throw parse_error("variable indices start at 1", dstart);
    if (acc.coeffs.size() < idx) acc.coeffs.resize(idx, 0);
    acc.coeffs[idx - 1] += negate ? Int(-coeff) : coeff;
  }

  combo parse_combo() {
    combo acc;
    acc.c0 = 0;
    bool neg = false;
    skip_ws();
    if (pos < s.size() && s[pos] == '-') {
      neg = true;
      ++pos;
    }
    term(acc, neg);
    for (;;) {
      skip_ws();
      if (pos < s.size() && s[pos] == '+') {
        ++pos;
        term(acc, false);
      } else if (pos < s.size() && s[pos] == '-') {
        ++pos;
        term(acc, true);
      } else {
        break;
      }
    }
    return acc;
  }

  cmp_op comparison() {
    if (eat("<=")) return cmp_op::le;
    if (eat(">=")) return cmp_op::ge;
    if (eat("!=")) return cmp_op::ne;
    if (eat("<")) return cmp_op::lt;
    if (eat(">")) return cmp_op::gt;
    if (eat("=")) return cmp_op::eq;
    throw parse_error("expected comparison operator", pos);
  }

  formula_ptr div_atom_tail(combo c) {
    ident();  // consume 'mod'
    skip_ws();
    std::size_t mpos = pos;
    Int m = integer();
    if (m < 2) throw parse_error("modulus must be >= 2", mpos);
    expect("=");
    Int r = integer();
    return f_div(std::move(c.coeffs), mod_floor(r - c.c0, m), m);
  }

  formula_ptr linear_atom() {
    combo lhs = parse_combo();
    // "expr mod m = r" is accepted as an unparenthesized divisibility atom
    if (at_ident("mod")) return div_atom_tail(std::move(lhs));
    cmp_op op = comparison();
    combo rhs = parse_combo();
    std::size_t n = std::max(lhs.coeffs.size(), rhs.coeffs.size());
    int_vec coeffs(n, Int(0));
    for (std::size_t i = 0; i < lhs.coeffs.size(); ++i) coeffs[i] += lhs.coeffs[i];
    for (std::size_t i = 0; i < rhs.coeffs.size(); ++i) coeffs[i] -= rhs.coeffs[i];
    return f_lin(std::move(coeffs), op, rhs.c0 - lhs.c0);
  }

  formula_ptr div_atom_after_lparen() {
    combo c = parse_combo();
    expect(")");
    skip_ws();
    if (!at_ident("mod")) throw parse_error("expected 'mod'", pos);
    return div_atom_tail(std::move(c));
  }

  formula_ptr unary() {
    skip_ws();
    if (peek() == '!' && peek2() != '=') {
      ++pos;
      return f_not(unary());
    }
    if (at_ident("true")) {
      ident();
      return f_true();
    }
    if (at_ident("false")) {
      ident();
      return f_false();
    }
    if (peek() == '(') {
      ++pos;
      std::size_t save = pos;
      try {
        return div_atom_after_lparen();
      } catch (const parse_error&) {
        pos = save;
      }
      formula_ptr f = parse_or();
      expect(")");
      return f;
    }
    return linear_atom();
  }

  formula_ptr parse_and() {
    formula_ptr f = unary();
    while (eat("&&")) f = f_and(std::move(f), unary());
    return f;
  }

  formula_ptr parse_or() {
    formula_ptr f = parse_and();
    while (eat("||")) f = f_or(std::move(f), parse_and());
    return f;
  }
};

}  // namespace

formula_ptr parse_formula(const std::string& text) {
  parser p(text);
  formula_ptr f = p.parse_or();
  if (!p.at_end()) throw parse_error("trailing input", p.pos);
  return f;
}

}  // namespace vasreach
