#pragma once

#include <optional>
#include <set>
#include <vector>

#include "vasreach/intmat.hpp"
#include "vasreach/semantics.hpp"
#include "vasreach/system.hpp"

namespace vasreach {

struct graph_edge {
  int from;
  int action;
  int to;
  bool operator==(const graph_edge& o) const = default;
};

// Strongly connected graph over extended configurations whose edges are
// valid extended steps of the underlying system. Within one strongly
// connected graph each coordinate is top on every node or on none.
class reach_graph {
 public:
  reach_graph(const vas_system& sys, std::vector<ext_config> nodes,
              std::vector<graph_edge> edges);

  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  const ext_config& node(int q) const { return nodes_.at(q); }
  const std::vector<graph_edge>& edges() const { return edges_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

 private:
  std::vector<ext_config> nodes_;
  std::vector<graph_edge> edges_;
};

// edge validity + strong connectivity; throws std::invalid_argument
void validate_reach_graph(const vas_system& sys, const reach_graph& g);

// A reach graph with designated input/output states and input/output
// constraints m (unlhd) x and m' (unlhd) x'.
class marked_reach_graph {
 public:
  marked_reach_graph(ext_config m, int input_state, reach_graph g,
                     int output_state, ext_config m_prime);

  const ext_config& input_constraint() const { return m_; }
  int input_state() const { return x_; }
  const reach_graph& graph() const { return g_; }
  int output_state() const { return x_prime_; }
  const ext_config& output_constraint() const { return m_prime_; }

  const ext_config& input_node() const { return g_.node(x_); }
  const ext_config& output_node() const { return g_.node(x_prime_); }

 private:
  ext_config m_;
  int x_;
  reach_graph g_;
  int x_prime_;
  ext_config m_prime_;
};

// Alternating sequence M_0 a_1 M_1 ... a_k M_k with outer constraints
// (m, m') looser than the first input and last output constraints.
class mrgs {
 public:
  mrgs(vas_system sys, std::vector<marked_reach_graph> blocks,
       std::vector<int> joins, ext_config outer_m, ext_config outer_m_prime);

  const vas_system& vas() const { return sys_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  const marked_reach_graph& block(int j) const { return blocks_.at(j); }
  // join(j) is the action between block j-1 and block j, 1 <= j <= k
  int join(int j) const { return joins_.at(j - 1); }
  const std::vector<int>& joins() const { return joins_; }
  const ext_config& outer_input() const { return outer_m_; }
  const ext_config& outer_output() const { return outer_m_prime_; }

 private:
  vas_system sys_;
  std::vector<marked_reach_graph> blocks_;
  std::vector<int> joins_;
  ext_config outer_m_;
  ext_config outer_m_prime_;
};

// single block on the all-top node carrying every self-loop; recognizes
// exactly the words firing s to s'
mrgs trivial_mrgs(const vas_system& sys, const int_vec& s, const int_vec& s_prime);

// flow balance of mu at every node, with one unit entering at q and leaving
// at q_prime; mu is indexed by edge position
bool kirchhoff_check(const reach_graph& g, int q, int q_prime, const int_vec& mu);

// Path from q to q_prime whose edge counts equal mu, by cycle splicing.
// Requires mu >= 1 on every edge (throws std::invalid_argument otherwise);
// returns nothing exactly when kirchhoff_check fails.
std::optional<std::vector<int>> euler_path(const reach_graph& g, int q,
                                           int q_prime, const int_vec& mu);

// cycle on the input state along which every constrained-but-widened
// coordinate strictly grows from m; decided by coverability
bool input_loop_condition(const vas_system& sys, const marked_reach_graph& m);
// symmetric condition on the output side, decided on the edge-reversed
// displacement-negated system
bool output_loop_condition(const vas_system& sys, const marked_reach_graph& m);

// concrete witness cycles (edge index paths in forward orientation); nothing
// exactly when the corresponding condition fails
std::optional<std::vector<int>> input_loop_witness(const vas_system& sys,
                                                   const marked_reach_graph& m);
std::optional<std::vector<int>> output_loop_witness(const vas_system& sys,
                                                    const marked_reach_graph& m);

// Joint equality system over the block variables (s_j, mu_j, s_j'):
// inter-block transfer, intra-block flow, pinned constrained coordinates,
// and the flow-balance block per graph. The homogeneous twin has the same
// matrix with a zero right-hand side.
struct char_system {
  int_matrix lhs;
  int_vec rhs;
  int nvars = 0;
  std::vector<int> s_offset;        // per block
  std::vector<int> mu_offset;       // per block
  std::vector<int> s_prime_offset;  // per block
  // components forced strictly positive in the homogeneous twin: widened
  // input/output coordinates and every edge count
  std::set<int> strict;
};

char_system build_characteristic(const mrgs& u);

// integer solvability of the characteristic system plus a strictly positive
// rational solution of its homogeneous twin
bool large_solution_condition(const mrgs& u);

bool is_perfect(const mrgs& u);

// One realized block: a concrete run s ->path s' whose first prefix_len
// edges form a cycle on the input state and last suffix_len edges a cycle on
// the output state.
struct accepted_block {
  int_vec s;
  std::vector<int> path;  // edge indices of the block graph
  int_vec s_prime;
  std::size_t prefix_len = 0;
  std::size_t suffix_len = 0;
};

struct accepted_sequence {
  std::vector<accepted_block> blocks;
};

// Every structural and replay requirement of an accepted sequence, plus the
// level-c largeness bullets: constrained-top coordinates of s_j and s_j' at
// least c, prefix/suffix cycle endpoints at least c on widened coordinates,
// every edge used at least c times.
bool validate_accepted(const mrgs& u, const accepted_sequence& seq, const Int& c);

// Constructive witness for a perfect MRGS at level c: loop-condition witness
// cycles plus scaled solutions of the characteristic system and its twin,
// assembled and replay-validated; nothing when the MRGS is not perfect.
std::optional<accepted_sequence> realize_accepted(const mrgs& u, const Int& c);

}  // namespace vasreach
