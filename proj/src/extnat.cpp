#include "vasreach/extnat.hpp"

#include <sstream>
#include <stdexcept>

namespace vasreach {

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Int mod_floor(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool is_integral(const Rat& r) {
  return mpz_cmp_ui(mpq_denref(r.get_mpq_t()), 1) == 0;
}

Int rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), mpq_numref(r.get_mpq_t()),
             mpq_denref(r.get_mpq_t()));
  return q;
}

Int rat_ceil(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), mpq_numref(r.get_mpq_t()),
             mpq_denref(r.get_mpq_t()));
  return q;
}

std::size_t hash_int(const Int& v) {
  const mpz_srcptr z = v.get_mpz_t();
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z)) * 0x9e3779b97f4a7c15ULL;
  const std::size_t n = mpz_size(z);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(z, i)) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t hash_int_vec(const int_vec& v) {
  std::size_t h = v.size();
  for (const Int& x : v) {
    h ^= hash_int(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string to_string(const int_vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

bool vec_le(const int_vec& x, const int_vec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("vec_le: size mismatch");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

int_vec vec_add(const int_vec& x, const int_vec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("vec_add: size mismatch");
  int_vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

int_vec vec_sub(const int_vec& x, const int_vec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("vec_sub: size mismatch");
  int_vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

int_vec vec_scale(const Int& c, const int_vec& x) {
  int_vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
  return r;
}

ext_nat::ext_nat(Int v) : top_(false), v_(std::move(v)) {
  if (v_ < 0) throw std::invalid_argument("ext_nat: negative value");
}

ext_nat ext_nat::top() {
  ext_nat t;
  t.top_ = true;
  return t;
}

const Int& ext_nat::value() const {
  if (top_) throw std::logic_error("ext_nat::value on top");
  return v_;
}

std::optional<ext_nat> ext_nat::plus(const Int& z) const {
  if (top_) return *this;
  Int r = v_ + z;
  if (r < 0) return std::nullopt;
  return ext_nat(std::move(r));
}

bool ext_nat::operator==(const ext_nat& o) const {
  if (top_ != o.top_) return false;
  return top_ || v_ == o.v_;
}

std::string ext_nat::str() const { return top_ ? "T" : v_.get_str(); }

bool ext_le(const ext_nat& a, const ext_nat& b) {
  if (b.is_top()) return true;
  if (a.is_top()) return false;
  return a.value() <= b.value();
}

bool ext_unlhd(const ext_nat& a, const ext_nat& b) {
  return b.is_top() || a == b;
}

ext_config ext_of(const int_vec& v) {
  ext_config c;
  c.reserve(v.size());
  for (const Int& x : v) c.emplace_back(x);
  return c;
}

bool is_concrete(const ext_config& c) {
  for (const ext_nat& x : c)
    if (x.is_top()) return false;
  return true;
}

int_vec concrete_of(const ext_config& c) {
  int_vec v;
  v.reserve(c.size());
  for (const ext_nat& x : c) v.push_back(x.value());
  return v;
}

bool ext_le(const ext_config& a, const ext_config& b) {
  if (a.size() != b.size()) throw std::invalid_argument("ext_le: size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!ext_le(a[i], b[i])) return false;
  return true;
}

bool ext_unlhd(const ext_config& a, const ext_config& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("ext_unlhd: size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!ext_unlhd(a[i], b[i])) return false;
  return true;
}

std::string to_string(const ext_config& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i].str();
  }
  os << ')';
  return os.str();
}

}  // namespace vasreach
