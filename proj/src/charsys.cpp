#include <stdexcept>

#include "vasreach/mrgs.hpp"
#include "vasreach/simplex.hpp"

namespace vasreach {

// Variable layout per block j: s_j (n), mu_j (one per edge), s_j' (n).
// Rows: inter-block transfer s'_{j-1} - s_j = -delta(a_j); intra-block flow
// s_j + sum_t mu_j(t) delta(t) - s_j' = 0; pins s_j[i] = m_j[i] and
// s_j'[i] = m_j'[i] on finite coordinates; flow balance at every node p,
// in(p) - out(p) = e(p, x_j') - e(x_j, p). Zeroing the right-hand side
// yields exactly the homogeneous twin.
char_system build_characteristic(const mrgs& u) {
  const vas_system& sys = u.vas();
  int n = sys.dimension();
  int k = u.num_blocks();

  char_system cs;
  for (int j = 0; j < k; ++j) {
    cs.s_offset.push_back(cs.nvars);
    cs.nvars += n;
    cs.mu_offset.push_back(cs.nvars);
    cs.nvars += u.block(j).graph().num_edges();
    cs.s_prime_offset.push_back(cs.nvars);
    cs.nvars += n;
  }

  std::vector<int_vec> rows;
  int_vec rhs;
  auto new_row = [&]() -> int_vec& {
    rows.emplace_back(cs.nvars, 0);
    return rows.back();
  };

  for (int j = 1; j < k; ++j) {
    const int_vec& d = sys.displacement(u.join(j));
    for (int i = 0; i < n; ++i) {
      int_vec& r = new_row();
      r[cs.s_prime_offset[j - 1] + i] = 1;
      r[cs.s_offset[j] + i] = -1;
      rhs.push_back(-d[i]);
    }
  }

  for (int j = 0; j < k; ++j) {
    const reach_graph& g = u.block(j).graph();
    for (int i = 0; i < n; ++i) {
      int_vec& r = new_row();
      r[cs.s_offset[j] + i] = 1;
      for (int e = 0; e < g.num_edges(); ++e)
        r[cs.mu_offset[j] + e] += sys.displacement(g.edges()[e].action)[i];
      r[cs.s_prime_offset[j] + i] = -1;
      rhs.push_back(0);
    }
  }

  for (int j = 0; j < k; ++j) {
    const marked_reach_graph& b = u.block(j);
    for (int i = 0; i < n; ++i) {
      if (!b.input_constraint()[i].is_top()) {
        int_vec& r = new_row();
        r[cs.s_offset[j] + i] = 1;
        rhs.push_back(b.input_constraint()[i].value());
      }
      if (!b.output_constraint()[i].is_top()) {
        int_vec& r = new_row();
        r[cs.s_prime_offset[j] + i] = 1;
        rhs.push_back(b.output_constraint()[i].value());
      }
    }
  }

  for (int j = 0; j < k; ++j) {
    const marked_reach_graph& b = u.block(j);
    const reach_graph& g = b.graph();
    for (int p = 0; p < g.num_nodes(); ++p) {
      int_vec& r = new_row();
      for (int e = 0; e < g.num_edges(); ++e) {
        if (g.edges()[e].to == p) r[cs.mu_offset[j] + e] += 1;
        if (g.edges()[e].from == p) r[cs.mu_offset[j] + e] -= 1;
      }
      Int c = 0;
      if (p == b.output_state()) c += 1;
      if (p == b.input_state()) c -= 1;
      rhs.push_back(c);
    }
  }

  cs.lhs = int_matrix::from_rows(std::move(rows));
  cs.rhs = std::move(rhs);

  for (int j = 0; j < k; ++j) {
    const marked_reach_graph& b = u.block(j);
    for (int i = 0; i < n; ++i) {
      if (b.input_constraint()[i].is_top()) cs.strict.insert(cs.s_offset[j] + i);
      if (b.output_constraint()[i].is_top())
        cs.strict.insert(cs.s_prime_offset[j] + i);
    }
    for (int e = 0; e < b.graph().num_edges(); ++e)
      cs.strict.insert(cs.mu_offset[j] + e);
  }
  return cs;
}

bool large_solution_condition(const mrgs& u) {
  char_system cs = build_characteristic(u);
  if (!solve_integer(cs.lhs, cs.rhs)) return false;
  return rational_feasible_strict(cs.lhs, cs.strict, {}).has_value();
}

bool is_perfect(const mrgs& u) {
  if (!large_solution_condition(u)) return false;
  for (int j = 0; j < u.num_blocks(); ++j) {
    if (!input_loop_condition(u.vas(), u.block(j))) return false;
    if (!output_loop_condition(u.vas(), u.block(j))) return false;
  }
  return true;
}

}  // namespace vasreach
