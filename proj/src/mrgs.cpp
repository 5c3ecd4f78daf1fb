#include "vasreach/mrgs.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace vasreach {

namespace {

void bfs_mark(int num_nodes, const std::vector<std::vector<int>>& adj,
              int start, std::vector<char>& seen) {
  seen.assign(num_nodes, 0);
  std::queue<int> q;
  q.push(start);
  seen[start] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        q.push(w);
      }
    }
  }
}

}  // namespace

void validate_reach_graph(const vas_system& sys, const reach_graph& g) {
  int nn = g.num_nodes();
  if (nn == 0) throw std::invalid_argument("reach graph: no nodes");
  for (int q = 0; q < nn; ++q) {
    if (static_cast<int>(g.node(q).size()) != sys.dimension())
      throw std::invalid_argument("reach graph: node dimension mismatch");
  }
  std::vector<std::vector<int>> fwd(nn), bwd(nn);
  for (const graph_edge& e : g.edges()) {
    if (e.from < 0 || e.from >= nn || e.to < 0 || e.to >= nn)
      throw std::invalid_argument("reach graph: edge endpoint out of range");
    if (e.action < 0 || e.action >= sys.num_actions())
      throw std::invalid_argument("reach graph: edge action out of range");
    auto next = step(sys, g.node(e.from), e.action);
    if (!next || !(*next == g.node(e.to)))
      throw std::invalid_argument("reach graph: edge is not a valid step");
    fwd[e.from].push_back(e.to);
    bwd[e.to].push_back(e.from);
  }
  std::vector<char> seen;
  bfs_mark(nn, fwd, 0, seen);
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw std::invalid_argument("reach graph: not strongly connected");
  bfs_mark(nn, bwd, 0, seen);
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw std::invalid_argument("reach graph: not strongly connected");
}

reach_graph::reach_graph(const vas_system& sys, std::vector<ext_config> nodes,
                         std::vector<graph_edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  validate_reach_graph(sys, *this);
}

marked_reach_graph::marked_reach_graph(ext_config m, int input_state,
                                       reach_graph g, int output_state,
                                       ext_config m_prime)
    : m_(std::move(m)),
      x_(input_state),
      g_(std::move(g)),
      x_prime_(output_state),
      m_prime_(std::move(m_prime)) {
  if (x_ < 0 || x_ >= g_.num_nodes() || x_prime_ < 0 ||
      x_prime_ >= g_.num_nodes())
    throw std::invalid_argument("marked graph: state out of range");
  if (!ext_unlhd(m_, g_.node(x_)))
    throw std::invalid_argument("marked graph: input constraint not under input state");
  if (!ext_unlhd(m_prime_, g_.node(x_prime_)))
    throw std::invalid_argument("marked graph: output constraint not under output state");
}

mrgs::mrgs(vas_system sys, std::vector<marked_reach_graph> blocks,
           std::vector<int> joins, ext_config outer_m, ext_config outer_m_prime)
    : sys_(std::move(sys)),
      blocks_(std::move(blocks)),
      joins_(std::move(joins)),
      outer_m_(std::move(outer_m)),
      outer_m_prime_(std::move(outer_m_prime)) {
  if (blocks_.empty()) throw std::invalid_argument("mrgs: no blocks");
  if (joins_.size() + 1 != blocks_.size())
    throw std::invalid_argument("mrgs: block/join count mismatch");
  for (int a : joins_)
    if (a < 0 || a >= sys_.num_actions())
      throw std::invalid_argument("mrgs: join action out of range");
  for (const marked_reach_graph& b : blocks_)
    validate_reach_graph(sys_, b.graph());
  if (!ext_unlhd(blocks_.front().input_constraint(), outer_m_))
    throw std::invalid_argument("mrgs: first input constraint not under outer input");
  if (!ext_unlhd(blocks_.back().output_constraint(), outer_m_prime_))
    throw std::invalid_argument("mrgs: last output constraint not under outer output");
}

mrgs trivial_mrgs(const vas_system& sys, const int_vec& s,
                  const int_vec& s_prime) {
  int n = sys.dimension();
  if (static_cast<int>(s.size()) != n || static_cast<int>(s_prime.size()) != n)
    throw std::invalid_argument("trivial mrgs: dimension mismatch");
  ext_config top(n, ext_nat::top());
  std::vector<graph_edge> edges;
  for (int a = 0; a < sys.num_actions(); ++a) edges.push_back({0, a, 0});
  reach_graph g(sys, {top}, edges);
  marked_reach_graph block(ext_of(s), 0, g, 0, ext_of(s_prime));
  return mrgs(sys, {block}, {}, ext_of(s), ext_of(s_prime));
}

bool kirchhoff_check(const reach_graph& g, int q, int q_prime,
                     const int_vec& mu) {
  if (static_cast<int>(mu.size()) != g.num_edges())
    throw std::invalid_argument("kirchhoff: count vector size mismatch");
  if (q < 0 || q >= g.num_nodes() || q_prime < 0 || q_prime >= g.num_nodes())
    throw std::invalid_argument("kirchhoff: state out of range");
  // in(p) + [p == q] == out(p) + [p == q_prime] at every node p
  int_vec balance(g.num_nodes(), 0);
  for (int e = 0; e < g.num_edges(); ++e) {
    balance[g.edges()[e].to] += mu[e];
    balance[g.edges()[e].from] -= mu[e];
  }
  balance[q] += 1;
  balance[q_prime] -= 1;
  for (const Int& v : balance)
    if (v != 0) return false;
  return true;
}

std::optional<std::vector<int>> euler_path(const reach_graph& g, int q,
                                           int q_prime, const int_vec& mu) {
  for (const Int& v : mu)
    if (v < 1) throw std::invalid_argument("euler path: count below one");
  if (!kirchhoff_check(g, q, q_prime, mu)) return std::nullopt;

  // lowest edge index first at every node, so the result is deterministic
  std::vector<std::vector<int>> out(g.num_nodes());
  for (int e = 0; e < g.num_edges(); ++e) out[g.edges()[e].from].push_back(e);
  int_vec remaining = mu;

  // edge-labeled Hierholzer: dead-ended edges pop in reverse path order
  std::vector<std::pair<int, int>> stack;  // (node, incoming edge or -1)
  std::vector<int> rev;
  stack.emplace_back(q, -1);
  while (!stack.empty()) {
    auto [v, ein] = stack.back();
    int chosen = -1;
    for (int e : out[v]) {
      if (remaining[e] > 0) {
        chosen = e;
        break;
      }
    }
    if (chosen >= 0) {
      remaining[chosen] -= 1;
      stack.emplace_back(g.edges()[chosen].to, chosen);
    } else {
      stack.pop_back();
      if (ein >= 0) rev.push_back(ein);
    }
  }
  for (const Int& v : remaining)
    if (v != 0) throw std::logic_error("euler path: unconsumed edges");
  std::reverse(rev.begin(), rev.end());

  int at = q;
  for (int e : rev) {
    if (g.edges()[e].from != at) throw std::logic_error("euler path: broken chain");
    at = g.edges()[e].to;
  }
  if (at != q_prime) throw std::logic_error("euler path: wrong endpoint");
  return rev;
}

namespace {

// The loop conditions quantify over graph cycles replayed from the finite
// coordinates of a constraint. Both reduce to coverability in a product
// system: control states are the graph nodes, one action per edge, counters
// are the constraint's finite coordinates. The output side runs the
// edge-reversed, displacement-negated product, so a backward path from m'
// visits exactly the configurations of the forward path into m'.
struct loop_product {
  vass_system vass;
  int anchor;                      // graph state the cycle must return to
  int_vec start;                   // constraint restricted to finite coords
  std::vector<int> strict_coords;  // product coords that must strictly grow
};

loop_product build_loop_product(const vas_system& sys,
                                const marked_reach_graph& m, bool input_side) {
  const reach_graph& g = m.graph();
  const ext_config& con = input_side ? m.input_constraint() : m.output_constraint();
  const ext_config& anchor_node = input_side ? m.input_node() : m.output_node();

  std::vector<int> finite_coords;
  for (int i = 0; i < static_cast<int>(con.size()); ++i)
    if (!con[i].is_top()) finite_coords.push_back(i);
  int dim = static_cast<int>(finite_coords.size());

  int_vec start(dim, 0);
  for (int c = 0; c < dim; ++c) start[c] = con[finite_coords[c]].value();

  std::vector<std::string> names;
  std::vector<int_vec> disp;
  std::vector<vass_system::transition> trans;
  for (int e = 0; e < g.num_edges(); ++e) {
    const graph_edge& ge = g.edges()[e];
    int_vec d(dim);
    for (int c = 0; c < dim; ++c) {
      d[c] = sys.displacement(ge.action)[finite_coords[c]];
      if (!input_side) d[c] = -d[c];
    }
    names.push_back("e" + std::to_string(e));
    disp.push_back(std::move(d));
    if (input_side)
      trans.push_back({ge.from, e, ge.to});
    else
      trans.push_back({ge.to, e, ge.from});
  }
  // the alphabet may not be empty: an edgeless graph gets one unfireable
  // filler action (it would drop some counter below zero, or loops on a
  // zero-dimensional config where deduplication retires it)
  if (names.empty()) {
    int_vec d(dim);
    for (int c = 0; c < dim; ++c) d[c] = -(start[c] + 1);
    names.push_back("never");
    disp.push_back(std::move(d));
    trans.push_back({0, 0, 0});
  }

  std::vector<std::string> states;
  for (int v = 0; v < g.num_nodes(); ++v) states.push_back("n" + std::to_string(v));
  vass_system product(std::move(states),
                      vas_system(std::move(names), dim, std::move(disp)),
                      std::move(trans));

  int anchor = input_side ? m.input_state() : m.output_state();
  std::vector<int> strict_coords;
  for (int c = 0; c < dim; ++c)
    if (anchor_node[finite_coords[c]].is_top()) strict_coords.push_back(c);
  return {std::move(product), anchor, std::move(start), std::move(strict_coords)};
}

ext_vass_config loop_target(const loop_product& p) {
  ext_config t(p.start.size(), ext_nat::top());
  for (int c : p.strict_coords) t[c] = ext_nat(p.start[c] + 1);
  return {p.anchor, std::move(t)};
}

bool loop_condition(const vas_system& sys, const marked_reach_graph& m,
                    bool input_side) {
  loop_product p = build_loop_product(sys, m, input_side);
  return karp_miller_covers(p.vass, {p.anchor, ext_of(p.start)}, loop_target(p));
}

// Exact breadth-first search for a shortest covering cycle. Termination is
// guaranteed by the preceding coverability check: some witness path exists,
// and a shortest one never repeats a configuration.
std::optional<std::vector<int>> loop_witness(const vas_system& sys,
                                             const marked_reach_graph& m,
                                             bool input_side) {
  loop_product p = build_loop_product(sys, m, input_side);
  if (!karp_miller_covers(p.vass, {p.anchor, ext_of(p.start)}, loop_target(p)))
    return std::nullopt;

  struct node {
    int state;
    int_vec cfg;
    int parent;
    int via;
  };
  auto covered = [&](const node& nd) {
    if (nd.state != p.anchor) return false;
    for (int c : p.strict_coords)
      if (nd.cfg[c] <= p.start[c]) return false;
    return true;
  };

  std::vector<node> arena;
  std::unordered_map<std::size_t, std::vector<int>> visited;
  auto push_if_new = [&](node nd) {
    std::size_t h = hash_int_vec(nd.cfg) * 31 + static_cast<std::size_t>(nd.state);
    for (int idx : visited[h]) {
      if (arena[idx].state == nd.state && arena[idx].cfg == nd.cfg) return;
    }
    visited[h].push_back(static_cast<int>(arena.size()));
    arena.push_back(std::move(nd));
  };

  push_if_new({p.anchor, p.start, -1, -1});
  for (std::size_t cur = 0; cur < arena.size(); ++cur) {
    if (covered(arena[cur])) {
      // collected child-to-root; that is already the forward edge order for
      // the output side, whose product walks the cycle backwards
      std::vector<int> path;
      for (int at = static_cast<int>(cur); arena[at].via >= 0; at = arena[at].parent)
        path.push_back(arena[at].via);
      if (input_side) std::reverse(path.begin(), path.end());
      return path;
    }
    node base = arena[cur];  // arena may reallocate while expanding
    for (const auto& tr : p.vass.transitions()) {
      if (tr.from != base.state) continue;
      const int_vec& d = p.vass.vas().displacement(tr.action);
      int_vec next = base.cfg;
      bool ok = true;
      for (std::size_t c = 0; c < next.size(); ++c) {
        next[c] += d[c];
        if (next[c] < 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      push_if_new({tr.to, std::move(next), static_cast<int>(cur), tr.action});
    }
  }
  throw std::logic_error("loop witness: coverable but no path found");
}

}  // namespace

bool input_loop_condition(const vas_system& sys, const marked_reach_graph& m) {
  return loop_condition(sys, m, true);
}

bool output_loop_condition(const vas_system& sys, const marked_reach_graph& m) {
  return loop_condition(sys, m, false);
}

std::optional<std::vector<int>> input_loop_witness(const vas_system& sys,
                                                   const marked_reach_graph& m) {
  return loop_witness(sys, m, true);
}

std::optional<std::vector<int>> output_loop_witness(const vas_system& sys,
                                                    const marked_reach_graph& m) {
  return loop_witness(sys, m, false);
}

}  // namespace vasreach
