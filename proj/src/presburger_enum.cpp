#include <algorithm>

#include "vasreach/presburger.hpp"

namespace vasreach {

namespace {

// every vector in Z^len with L1 norm exactly t, in a fixed order
void l1_vectors(int len, long t, int_vec& prefix,
                std::vector<int_vec>& out) {
  if (len == 0) {
    if (t == 0) out.push_back(prefix);
    return;
  }
  if (len == 1) {
    if (t == 0) {
      prefix.push_back(0);
      out.push_back(prefix);
      prefix.pop_back();
      return;
    }
    prefix.push_back(Int(-t));
    out.push_back(prefix);
    prefix.back() = Int(t);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (long v = -t; v <= t; ++v) {
    prefix.push_back(Int(v));
    l1_vectors(len - 1, t - std::labs(v), prefix, out);
    prefix.pop_back();
  }
}

std::vector<int_vec> l1_sphere(int len, long t) {
  std::vector<int_vec> out;
  int_vec prefix;
  l1_vectors(len, t, prefix, out);
  return out;
}

}  // namespace

formula_enumerator::formula_enumerator(int nvars) : nvars_(nvars) {
  if (nvars < 0)
    throw std::invalid_argument("formula_enumerator: nvars < 0");
}

void formula_enumerator::extend_to(int k) {
  while (size_done_ < k) emit_batch(size_done_ + 1);
}

void formula_enumerator::emit_batch(int s) {
  std::vector<formula_ptr> batch;
  if (s == 0) {
    batch.push_back(f_false());
    batch.push_back(f_true());
  } else {
    const long budget = s - 1;  // the node itself costs 1
    static const cmp_op all_ops[] = {cmp_op::le, cmp_op::lt, cmp_op::eq,
                                     cmp_op::ne, cmp_op::ge, cmp_op::gt};
    for (auto& v : l1_sphere(nvars_ + 1, budget)) {
      int_vec coeffs(v.begin(), v.end() - 1);
      Int rhs = v.back();
      for (cmp_op op : all_ops) batch.push_back(f_lin(coeffs, op, rhs));
    }
    for (long m = 2; m <= budget; ++m)
      for (long r = 0; r < m; ++r)
        for (auto& c : l1_sphere(nvars_, budget - m))
          batch.push_back(f_div(c, Int(r), Int(m)));
    const auto& [n0, n1] = batch_range_[static_cast<std::size_t>(s - 1)];
    for (std::size_t i = n0; i < n1; ++i)
      batch.push_back(f_not(items_[i]));
    for (int sa = 0; sa + sa <= budget; ++sa) {
      const int sb = static_cast<int>(budget) - sa;
      const auto& [a0, a1] = batch_range_[static_cast<std::size_t>(sa)];
      const auto& [b0, b1] = batch_range_[static_cast<std::size_t>(sb)];
      for (std::size_t i = a0; i < a1; ++i)
        for (std::size_t j = b0; j < b1; ++j) {
          batch.push_back(f_and(items_[i], items_[j]));
          batch.push_back(f_or(items_[i], items_[j]));
          if (sa != sb) {
            batch.push_back(f_and(items_[j], items_[i]));
            batch.push_back(f_or(items_[j], items_[i]));
          }
        }
    }
  }

  std::vector<std::pair<std::string, formula_ptr>> keyed;
  keyed.reserve(batch.size());
  for (auto& f : batch) keyed.emplace_back(format(f), std::move(f));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  // distinct structures have distinct canonical strings and a formula's size
  // is determined by its structure, so deduping inside the batch suffices
  std::size_t start = items_.size();
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i > 0 && keyed[i].first == keyed[i - 1].first) continue;
    items_.push_back(std::move(keyed[i].second));
  }
  batch_range_.emplace_back(start, items_.size());
  size_done_ = s;
}

std::vector<formula_ptr> enumerate_formulas(int nvars, int k) {
  formula_enumerator e(nvars);
  e.extend_to(k);
  return e.items();
}

}  // namespace vasreach
