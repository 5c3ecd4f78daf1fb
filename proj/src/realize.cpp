#include <algorithm>
#include <stdexcept>

#include "vasreach/mrgs.hpp"
#include "vasreach/simplex.hpp"

namespace vasreach {

namespace {

// scale factors in the realization double until a closure property holds;
// past this bound something upstream must be wrong
const long scale_cap = 1L << 30;

int_vec slice(const int_vec& xs, int off, int len) {
  return int_vec(xs.begin() + off, xs.begin() + off + len);
}

std::vector<int> actions_of(const reach_graph& g, const std::vector<int>& path) {
  std::vector<int> acts;
  for (int e : path) acts.push_back(g.edges()[e].action);
  return acts;
}

int_vec word_delta(const vas_system& sys, const std::vector<int>& acts) {
  int_vec d(sys.dimension(), 0);
  for (int a : acts) d = vec_add(d, sys.displacement(a));
  return d;
}

int_vec edge_counts(const reach_graph& g, const std::vector<int>& path) {
  int_vec counts(g.num_edges(), 0);
  for (int e : path) counts[e] += 1;
  return counts;
}

bool nonneg(const int_vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x >= 0; });
}

// concrete replay of an action word; false when a coordinate dips below zero
bool replay(const vas_system& sys, int_vec cur, const std::vector<int>& acts,
            int_vec* out = nullptr) {
  if (!nonneg(cur)) return false;
  for (int a : acts) {
    cur = vec_add(cur, sys.displacement(a));
    if (!nonneg(cur)) return false;
  }
  if (out) *out = std::move(cur);
  return true;
}

void repeat_into(std::vector<int>& dst, const std::vector<int>& part, long times) {
  for (long r = 0; r < times; ++r) dst.insert(dst.end(), part.begin(), part.end());
}

struct block_pieces {
  std::vector<int> theta_in;   // witness cycle on the input state
  std::vector<int> theta_out;  // witness cycle on the output state
  std::vector<int> pi0;        // all-edge cycle on the input state
  std::vector<int> sigma;      // connecting path input -> output
  int_vec s, s_prime;          // scaled base solution slices
  int_vec s0, s0_prime;        // scaled homogeneous slices
};

}  // namespace

bool validate_accepted(const mrgs& u, const accepted_sequence& seq, const Int& c) {
  const vas_system& sys = u.vas();
  int n = sys.dimension();
  if (static_cast<int>(seq.blocks.size()) != u.num_blocks()) return false;

  for (int j = 0; j < u.num_blocks(); ++j) {
    const marked_reach_graph& m = u.block(j);
    const reach_graph& g = m.graph();
    const accepted_block& b = seq.blocks[j];
    if (static_cast<int>(b.s.size()) != n ||
        static_cast<int>(b.s_prime.size()) != n)
      return false;
    if (!nonneg(b.s) || !nonneg(b.s_prime)) return false;
    if (!ext_unlhd(ext_of(b.s), m.input_constraint())) return false;
    if (!ext_unlhd(ext_of(b.s_prime), m.output_constraint())) return false;
    for (int i = 0; i < n; ++i) {
      if (m.input_constraint()[i].is_top() && b.s[i] < c) return false;
      if (m.output_constraint()[i].is_top() && b.s_prime[i] < c) return false;
    }

    if (b.prefix_len > b.path.size() || b.suffix_len > b.path.size())
      return false;
    int at = m.input_state();
    int_vec cur = b.s;
    int_vec r = b.s, r_prime = b.s;
    std::size_t suffix_start = b.path.size() - b.suffix_len;
    if (b.prefix_len == 0) r = cur;
    if (suffix_start == 0) {
      if (at != m.output_state()) return false;
      r_prime = cur;
    }
    for (std::size_t p = 0; p < b.path.size(); ++p) {
      int e = b.path[p];
      if (e < 0 || e >= g.num_edges()) return false;
      if (g.edges()[e].from != at) return false;
      at = g.edges()[e].to;
      cur = vec_add(cur, sys.displacement(g.edges()[e].action));
      if (!nonneg(cur)) return false;
      if (p + 1 == b.prefix_len) {
        if (at != m.input_state()) return false;
        r = cur;
      }
      if (p + 1 == suffix_start) {
        if (at != m.output_state()) return false;
        r_prime = cur;
      }
    }
    if (at != m.output_state()) return false;
    if (cur != b.s_prime) return false;

    for (int i = 0; i < n; ++i) {
      if (m.input_node()[i].is_top() && r[i] < c) return false;
      if (m.output_node()[i].is_top() && r_prime[i] < c) return false;
    }
    int_vec counts = edge_counts(g, b.path);
    for (const Int& v : counts)
      if (v < c) return false;
  }

  for (int j = 1; j < u.num_blocks(); ++j) {
    int_vec stepped =
        vec_add(seq.blocks[j - 1].s_prime, sys.displacement(u.join(j)));
    if (stepped != seq.blocks[j].s) return false;
  }
  if (!ext_unlhd(ext_of(seq.blocks.front().s), u.outer_input())) return false;
  if (!ext_unlhd(ext_of(seq.blocks.back().s_prime), u.outer_output()))
    return false;
  return true;
}

// Builds a witness at level c in three rounds of geometric scaling, each
// justified by an upward-closed property: first the homogeneous solution is
// scaled until it dominates the witness cycles, then the base solution is
// shifted into the feasible orthant until the cycles replay, finally the
// assembled path is repeated until it validates.
std::optional<accepted_sequence> realize_accepted(const mrgs& u, const Int& c) {
  if (c > (1L << 20))
    throw std::invalid_argument("realize: level too large to materialize");
  if (!is_perfect(u)) return std::nullopt;

  const vas_system& sys = u.vas();
  int n = sys.dimension();
  int k = u.num_blocks();

  char_system cs = build_characteristic(u);
  auto xi_int_opt = solve_integer(cs.lhs, cs.rhs);
  auto q0_opt = rational_feasible_strict(cs.lhs, cs.strict, {});
  if (!xi_int_opt || !q0_opt)
    throw std::logic_error("realize: perfect but characteristic system unsolved");
  const int_vec& xi_int = *xi_int_opt;

  Int den_lcm = 1;
  for (const Rat& q : *q0_opt) den_lcm = lcm(den_lcm, Int(q.get_den()));
  int_vec xi0(q0_opt->size());
  for (std::size_t v = 0; v < q0_opt->size(); ++v) {
    Rat scaled = (*q0_opt)[v] * Rat(den_lcm);
    xi0[v] = Int(scaled.get_num());
  }
  for (int v : cs.strict)
    if (xi0[v] < 1) throw std::logic_error("realize: strict component not positive");

  std::vector<block_pieces> pieces(k);
  std::vector<int_vec> theta_in_pk(k), theta_out_pk(k);
  for (int j = 0; j < k; ++j) {
    auto win = input_loop_witness(sys, u.block(j));
    auto wout = output_loop_witness(sys, u.block(j));
    if (!win || !wout)
      throw std::logic_error("realize: perfect but loop witness missing");
    pieces[j].theta_in = std::move(*win);
    pieces[j].theta_out = std::move(*wout);
    theta_in_pk[j] = edge_counts(u.block(j).graph(), pieces[j].theta_in);
    theta_out_pk[j] = edge_counts(u.block(j).graph(), pieces[j].theta_out);
  }

  // round one: scale the homogeneous solution until, per block, the input
  // cycle climbs into strict positivity on widened input coordinates, the
  // output cycle symmetrically, and every edge multiplicity clears the two
  // witness cycles with room for a full spare cycle
  long d = 1;
  while (true) {
    bool ok = true;
    for (int j = 0; j < k && ok; ++j) {
      const marked_reach_graph& m = u.block(j);
      const reach_graph& g = m.graph();
      int_vec s0 = vec_scale(d, slice(xi0, cs.s_offset[j], n));
      int_vec s0p = vec_scale(d, slice(xi0, cs.s_prime_offset[j], n));
      int_vec after_in = vec_add(s0, word_delta(sys, actions_of(g, pieces[j].theta_in)));
      int_vec before_out =
          vec_sub(s0p, word_delta(sys, actions_of(g, pieces[j].theta_out)));
      for (int i = 0; i < n; ++i) {
        if (m.input_node()[i].is_top()) {
          if (after_in[i] < 1) ok = false;
        } else if (after_in[i] != 0) {
          throw std::logic_error("realize: input cycle moves a tracked coordinate");
        }
        if (m.output_node()[i].is_top()) {
          if (before_out[i] < 1) ok = false;
        } else if (before_out[i] != 0) {
          throw std::logic_error("realize: output cycle moves a tracked coordinate");
        }
      }
      int_vec mu0 = vec_scale(d, slice(xi0, cs.mu_offset[j], g.num_edges()));
      for (int e = 0; e < g.num_edges(); ++e)
        if (mu0[e] < theta_in_pk[j][e] + theta_out_pk[j][e] + 1) ok = false;
    }
    if (ok) break;
    d *= 2;
    if (d > scale_cap) throw std::logic_error("realize: homogeneous scale diverges");
  }
  for (int j = 0; j < k; ++j) {
    const reach_graph& g = u.block(j).graph();
    pieces[j].s0 = vec_scale(d, slice(xi0, cs.s_offset[j], n));
    pieces[j].s0_prime = vec_scale(d, slice(xi0, cs.s_prime_offset[j], n));
    int_vec spare = vec_scale(d, slice(xi0, cs.mu_offset[j], g.num_edges()));
    spare = vec_sub(vec_sub(spare, theta_in_pk[j]), theta_out_pk[j]);
    auto pi0 = euler_path(g, u.block(j).input_state(), u.block(j).input_state(), spare);
    if (!pi0) throw std::logic_error("realize: spare cycle fails flow balance");
    pieces[j].pi0 = std::move(*pi0);
  }

  // round two: shift the base solution along the homogeneous ray until all
  // components are nonnegative and both witness cycles replay concretely
  auto block_mu = [&](int j, long s_scale) {
    const reach_graph& g = u.block(j).graph();
    return vec_add(slice(xi_int, cs.mu_offset[j], g.num_edges()),
                   vec_scale(Int(s_scale) * d,
                             slice(xi0, cs.mu_offset[j], g.num_edges())));
  };
  long s_scale = 1;
  while (true) {
    bool ok = true;
    for (int j = 0; j < k && ok; ++j) {
      const reach_graph& g = u.block(j).graph();
      int_vec s = vec_add(slice(xi_int, cs.s_offset[j], n),
                          vec_scale(s_scale, pieces[j].s0));
      int_vec sp = vec_add(slice(xi_int, cs.s_prime_offset[j], n),
                           vec_scale(s_scale, pieces[j].s0_prime));
      for (const Int& v : block_mu(j, s_scale))
        if (v < 1) ok = false;
      if (!replay(sys, s, actions_of(g, pieces[j].theta_in))) ok = false;
      int_vec before =
          vec_sub(sp, word_delta(sys, actions_of(g, pieces[j].theta_out)));
      if (!replay(sys, before, actions_of(g, pieces[j].theta_out))) ok = false;
      pieces[j].s = std::move(s);
      pieces[j].s_prime = std::move(sp);
    }
    if (ok) break;
    s_scale *= 2;
    if (s_scale > scale_cap) throw std::logic_error("realize: base scale diverges");
  }
  for (int j = 0; j < k; ++j) {
    auto sigma = euler_path(u.block(j).graph(), u.block(j).input_state(),
                            u.block(j).output_state(), block_mu(j, s_scale));
    if (!sigma)
      throw std::logic_error("realize: connecting path fails flow balance");
    pieces[j].sigma = std::move(*sigma);
  }

  // round three: repeat the witness cycles and the spare cycle until the
  // assembled sequence passes full validation at the requested level
  Int level = c < 1 ? Int(1) : c;
  while (true) {
    if (level > (1L << 26))
      throw std::logic_error("realize: repetition scale diverges");
    long reps = level.get_si();
    accepted_sequence seq;
    for (int j = 0; j < k; ++j) {
      accepted_block b;
      b.s = vec_add(pieces[j].s, vec_scale(reps, pieces[j].s0));
      b.s_prime = vec_add(pieces[j].s_prime, vec_scale(reps, pieces[j].s0_prime));
      repeat_into(b.path, pieces[j].theta_in, reps);
      repeat_into(b.path, pieces[j].pi0, reps);
      b.path.insert(b.path.end(), pieces[j].sigma.begin(), pieces[j].sigma.end());
      repeat_into(b.path, pieces[j].theta_out, reps);
      b.prefix_len = pieces[j].theta_in.size() * static_cast<std::size_t>(reps);
      b.suffix_len = pieces[j].theta_out.size() * static_cast<std::size_t>(reps);
      seq.blocks.push_back(std::move(b));
    }
    if (validate_accepted(u, seq, c)) return seq;
    level *= 2;
  }
}

}  // namespace vasreach
