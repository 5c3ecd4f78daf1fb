#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "vasreach/intmat.hpp"
#include "vasreach/mrgs.hpp"

using namespace vasreach;

namespace {

vas_system fig1() {
  return vas_system({"a", "b"}, 2, {{Int(1), Int(1)}, {Int(-1), Int(-2)}});
}

int_vec iv(std::initializer_list<long> xs) {
  int_vec v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}

// -1 stands for top
ext_config ec(std::initializer_list<long> xs) {
  ext_config v;
  for (long x : xs) v.push_back(x < 0 ? ext_nat::top() : ext_nat(Int(x)));
  return v;
}

reach_graph top_loop_graph(const vas_system& sys) {
  ext_config top(sys.dimension(), ext_nat::top());
  std::vector<graph_edge> edges;
  for (int a = 0; a < sys.num_actions(); ++a) edges.push_back({0, a, 0});
  return reach_graph(sys, {top}, edges);
}

mrgs one_block(const vas_system& sys, ext_config m, ext_config m_prime) {
  marked_reach_graph blk(m, 0, top_loop_graph(sys), 0, m_prime);
  return mrgs(sys, {blk}, {}, m, m_prime);
}

int_vec edge_count_vec(const reach_graph& g, const std::vector<int>& path) {
  int_vec counts(g.num_edges(), Int(0));
  for (int e : path) counts[e] += 1;
  return counts;
}

// replay an edge path from a control state, summing displacements
struct replay_result {
  bool chain_ok;
  int end_state;
  int_vec delta;
};

replay_result replay_edges(const vas_system& sys, const reach_graph& g,
                           int start, const std::vector<int>& path) {
  replay_result r{true, start, int_vec(sys.dimension(), Int(0))};
  for (int e : path) {
    if (e < 0 || e >= g.num_edges() || g.edges()[e].from != r.end_state) {
      r.chain_ok = false;
      return r;
    }
    r.end_state = g.edges()[e].to;
    r.delta = vec_add(r.delta, sys.displacement(g.edges()[e].action));
  }
  return r;
}

}  // namespace

TEST_CASE("single block over the full loop graph") {
  vas_system sys = fig1();
  mrgs u = trivial_mrgs(sys, iv({0, 2}), iv({1, 0}));
  CHECK(u.num_blocks() == 1);
  CHECK(u.joins().empty());
  CHECK(u.outer_input() == ec({0, 2}));
  CHECK(u.outer_output() == ec({1, 0}));

  const marked_reach_graph& blk = u.block(0);
  CHECK(blk.graph().num_nodes() == 1);
  CHECK(blk.graph().num_edges() == 2);
  CHECK(blk.graph().node(0) == ec({-1, -1}));
  CHECK(blk.graph().edges()[0] == graph_edge{0, 0, 0});
  CHECK(blk.graph().edges()[1] == graph_edge{0, 1, 0});
  CHECK(blk.input_constraint() == ec({0, 2}));
  CHECK(blk.output_constraint() == ec({1, 0}));
  CHECK(blk.input_state() == 0);
  CHECK(blk.output_state() == 0);
}

TEST_CASE("graph validation") {
  vas_system sys = fig1();
  ext_config top2 = ec({-1, -1});

  // concrete edge must be a valid step
  CHECK_THROWS_AS(
      reach_graph(sys, {ec({0, 0}), ec({5, 5})}, {{0, 0, 1}, {1, 1, 0}}),
      std::invalid_argument);
  // strong connectivity
  CHECK_THROWS_AS(reach_graph(sys, {top2, top2}, {{0, 0, 1}}),
                  std::invalid_argument);
  // mixed top pattern inside one graph
  CHECK_THROWS_AS(
      reach_graph(sys, {top2, ec({3, -1})}, {{0, 0, 1}, {1, 1, 0}}),
      std::invalid_argument);
  // valid two node loop
  reach_graph g2(sys, {top2, top2}, {{0, 0, 1}, {1, 1, 0}});
  CHECK(g2.num_edges() == 2);
  validate_reach_graph(sys, g2);
}

TEST_CASE("flow balance") {
  vas_system sys = fig1();
  reach_graph g1 = top_loop_graph(sys);
  CHECK(kirchhoff_check(g1, 0, 0, iv({4, 3})));
  CHECK(kirchhoff_check(g1, 0, 0, iv({0, 0})));

  ext_config top2 = ec({-1, -1});
  reach_graph g2(sys, {top2, top2}, {{0, 0, 1}, {1, 1, 0}});
  CHECK(kirchhoff_check(g2, 0, 1, iv({1, 0})));
  CHECK_FALSE(kirchhoff_check(g2, 0, 0, iv({1, 0})));
  CHECK(kirchhoff_check(g2, 0, 0, iv({1, 1})));
  CHECK(kirchhoff_check(g2, 0, 1, iv({2, 1})));

  CHECK_THROWS_AS(kirchhoff_check(g2, 0, 0, iv({1})), std::invalid_argument);
  CHECK_THROWS_AS(kirchhoff_check(g2, 0, 5, iv({1, 1})), std::invalid_argument);
}

TEST_CASE("path assembly from edge counts") {
  vas_system sys = fig1();
  reach_graph g1 = top_loop_graph(sys);

  auto p = euler_path(g1, 0, 0, iv({4, 3}));
  REQUIRE(p);
  CHECK(p->size() == 7);
  CHECK(edge_count_vec(g1, *p) == iv({4, 3}));
  replay_result r = replay_edges(sys, g1, 0, *p);
  CHECK(r.chain_ok);
  CHECK(r.end_state == 0);

  ext_config top2 = ec({-1, -1});
  reach_graph g2(sys, {top2, top2}, {{0, 0, 1}, {1, 1, 0}});
  CHECK_FALSE(euler_path(g2, 0, 0, iv({2, 1})));

  auto q = euler_path(g2, 0, 1, iv({2, 1}));
  REQUIRE(q);
  CHECK(q->size() == 3);
  CHECK(edge_count_vec(g2, *q) == iv({2, 1}));
  replay_result rq = replay_edges(sys, g2, 0, *q);
  CHECK(rq.chain_ok);
  CHECK(rq.end_state == 1);
  CHECK(euler_path(g2, 0, 1, iv({2, 1})) == q);  // deterministic

  auto cyc = euler_path(g2, 0, 0, iv({1, 1}));
  REQUIRE(cyc);
  CHECK(cyc->size() == 2);

  CHECK_THROWS_AS(euler_path(g1, 0, 0, iv({1, 0})), std::invalid_argument);
}

TEST_CASE("growth cycles on the input side") {
  vas_system sys = fig1();
  mrgs u = trivial_mrgs(sys, iv({0, 2}), iv({1, 0}));
  const marked_reach_graph& blk = u.block(0);
  CHECK(input_loop_condition(sys, blk));
  auto w = input_loop_witness(sys, blk);
  REQUIRE(w);
  CHECK_FALSE(w->empty());
  replay_result r = replay_edges(sys, blk.graph(), blk.input_state(), *w);
  CHECK(r.chain_ok);
  CHECK(r.end_state == blk.input_state());
  // both coordinates are finite in the constraint and widened in the node
  CHECK(r.delta[0] > 0);
  CHECK(r.delta[1] > 0);

  vas_system drain({"b"}, 2, {iv({-1, -2})});
  mrgs v = one_block(drain, ec({0, 0}), ec({-1, -1}));
  CHECK_FALSE(input_loop_condition(drain, v.block(0)));
  CHECK_FALSE(input_loop_witness(drain, v.block(0)).has_value());

  // concrete node, nothing widened: the empty cycle suffices
  reach_graph frozen(sys, {ec({0, 2})}, {});
  marked_reach_graph fb(ec({0, 2}), 0, frozen, 0, ec({0, 2}));
  CHECK(input_loop_condition(sys, fb));
  auto fw = input_loop_witness(sys, fb);
  REQUIRE(fw);
  CHECK(fw->empty());
}

TEST_CASE("growth cycles on the output side") {
  vas_system sys = fig1();
  mrgs u = trivial_mrgs(sys, iv({0, 2}), iv({1, 0}));
  const marked_reach_graph& blk = u.block(0);
  CHECK(output_loop_condition(sys, blk));
  auto w = output_loop_witness(sys, blk);
  REQUIRE(w);
  CHECK_FALSE(w->empty());
  replay_result r = replay_edges(sys, blk.graph(), blk.output_state(), *w);
  CHECK(r.chain_ok);
  CHECK(r.end_state == blk.output_state());

  // firing the cycle forward from m' - delta lands exactly on m' and the
  // start sits strictly above m' on the widened coordinates
  int_vec m_prime = iv({1, 0});
  int_vec z = vec_sub(m_prime, r.delta);
  REQUIRE(z.size() == 2);
  CHECK(z[0] >= 0);
  CHECK(z[1] >= 0);
  CHECK(z[0] > m_prime[0]);
  CHECK(z[1] > m_prime[1]);
  int_vec cur = z;
  int at = blk.output_state();
  for (int e : *w) {
    const graph_edge& ge = blk.graph().edges()[e];
    cur = vec_add(cur, sys.displacement(ge.action));
    at = ge.to;
    CHECK(cur[0] >= 0);
    CHECK(cur[1] >= 0);
  }
  CHECK(cur == m_prime);
  CHECK(at == blk.output_state());

  // draining letters make fine output loops even from zero
  vas_system drain({"b"}, 2, {iv({-1, -2})});
  mrgs v = one_block(drain, ec({-1, -1}), ec({0, 0}));
  CHECK(output_loop_condition(drain, v.block(0)));
}

TEST_CASE("characteristic system layout") {
  vas_system sys = fig1();
  mrgs u = trivial_mrgs(sys, iv({0, 2}), iv({1, 0}));
  char_system cs = build_characteristic(u);
  CHECK(cs.nvars == 6);
  REQUIRE(cs.s_offset == std::vector<int>{0});
  REQUIRE(cs.mu_offset == std::vector<int>{2});
  REQUIRE(cs.s_prime_offset == std::vector<int>{4});
  // transfer 0 + flow 2 + four pins + one balance row
  CHECK(cs.lhs.rows() == 7);
  CHECK(cs.strict == std::set<int>{2, 3});

  // the canonical seven step run: s=(0,2), mu=(4,3), s'=(1,0)
  int_vec x = iv({0, 2, 4, 3, 1, 0});
  CHECK(cs.lhs.mul(x) == cs.rhs);
  CHECK(solve_integer(cs.lhs, cs.rhs).has_value());

  // a wrong flow count breaks an equation
  int_vec y = iv({0, 2, 4, 2, 1, 0});
  CHECK_FALSE(cs.lhs.mul(y) == cs.rhs);
}

TEST_CASE("characteristic system across blocks") {
  vas_system sys = fig1();
  ext_config top2 = ec({-1, -1});
  marked_reach_graph b0(top2, 0, top_loop_graph(sys), 0, top2);
  marked_reach_graph b1(top2, 0, top_loop_graph(sys), 0, top2);
  mrgs u(sys, {b0, b1}, {0}, top2, top2);  // joined by the first action
  CHECK(u.num_blocks() == 2);
  CHECK(u.join(1) == 0);

  char_system cs = build_characteristic(u);
  CHECK(cs.nvars == 12);
  CHECK(cs.s_offset == std::vector<int>{0, 6});
  CHECK(cs.mu_offset == std::vector<int>{2, 8});
  CHECK(cs.s_prime_offset == std::vector<int>{4, 10});
  CHECK(cs.strict.size() == 12);

  // hand checked: s0=(2,2), mu0=(2,1), s0'=(3,2); the join adds (1,1);
  // s1=(4,3), mu1=(2,1), s1'=(5,3)
  int_vec x = iv({2, 2, 2, 1, 3, 2, 4, 3, 2, 1, 5, 3});
  CHECK(cs.lhs.mul(x) == cs.rhs);
}

TEST_CASE("large solution condition") {
  vas_system sys = fig1();
  CHECK_FALSE(large_solution_condition(trivial_mrgs(sys, iv({0, 2}), iv({1, 0}))));
  CHECK(large_solution_condition(one_block(sys, ec({-1, -1}), ec({-1, -1}))));
  CHECK(large_solution_condition(one_block(sys, ec({0, 2}), ec({-1, -1}))));

  vas_system even({"c"}, 1, {iv({2})});
  CHECK_FALSE(large_solution_condition(one_block(even, ec({0}), ec({3}))));

  ext_config top2 = ec({-1, -1});
  marked_reach_graph b0(top2, 0, top_loop_graph(sys), 0, top2);
  marked_reach_graph b1(top2, 0, top_loop_graph(sys), 0, top2);
  CHECK(large_solution_condition(mrgs(sys, {b0, b1}, {0}, top2, top2)));
}

TEST_CASE("perfectness") {
  vas_system sys = fig1();
  CHECK(is_perfect(one_block(sys, ec({-1, -1}), ec({-1, -1}))));
  CHECK_FALSE(is_perfect(trivial_mrgs(sys, iv({0, 2}), iv({1, 0}))));
  CHECK(is_perfect(one_block(sys, ec({0, 2}), ec({-1, -1}))));

  vas_system down({"d"}, 1, {iv({-1})});
  CHECK(is_perfect(one_block(down, ec({-1}), ec({-1}))));
  CHECK_FALSE(is_perfect(one_block(down, ec({0}), ec({-1}))));

  vas_system even({"c"}, 1, {iv({2})});
  CHECK_FALSE(is_perfect(one_block(even, ec({0}), ec({3}))));

  ext_config top2 = ec({-1, -1});
  marked_reach_graph b0(top2, 0, top_loop_graph(sys), 0, top2);
  marked_reach_graph b1(top2, 0, top_loop_graph(sys), 0, top2);
  CHECK(is_perfect(mrgs(sys, {b0, b1}, {0}, top2, top2)));
}

TEST_CASE("accepted sequence validation") {
  vas_system sys = fig1();
  mrgs u = trivial_mrgs(sys, iv({0, 2}), iv({1, 0}));

  accepted_block blk;
  blk.s = iv({0, 2});
  blk.path = {0, 0, 0, 0, 1, 1, 1};  // four raises then three drops
  blk.s_prime = iv({1, 0});
  accepted_sequence seq{{blk}};
  CHECK(validate_accepted(u, seq, Int(0)));
  // level 1 needs the input side cycle endpoint above zero everywhere
  CHECK_FALSE(validate_accepted(u, seq, Int(1)));

  accepted_sequence bad_start = seq;
  bad_start.blocks[0].path = {1, 0, 0, 0, 0, 1, 1};  // dips below zero
  CHECK_FALSE(validate_accepted(u, bad_start, Int(0)));

  accepted_sequence bad_end = seq;
  bad_end.blocks[0].path = {0};
  CHECK_FALSE(validate_accepted(u, bad_end, Int(0)));

  accepted_sequence wrong_count;
  CHECK_FALSE(validate_accepted(u, wrong_count, Int(0)));

  accepted_sequence off_constraint = seq;
  off_constraint.blocks[0].s = iv({1, 3});
  CHECK_FALSE(validate_accepted(u, off_constraint, Int(0)));
}

TEST_CASE("realization of perfect instances") {
  vas_system sys = fig1();
  std::vector<mrgs> instances;
  instances.push_back(one_block(sys, ec({-1, -1}), ec({-1, -1})));
  instances.push_back(one_block(sys, ec({0, 2}), ec({-1, -1})));
  {
    ext_config top2 = ec({-1, -1});
    marked_reach_graph b0(top2, 0, top_loop_graph(sys), 0, top2);
    marked_reach_graph b1(top2, 0, top_loop_graph(sys), 0, top2);
    instances.push_back(mrgs(sys, {b0, b1}, {0}, top2, top2));
  }

  for (const mrgs& u : instances) {
    for (long c = 0; c <= 3; ++c) {
      auto seq = realize_accepted(u, Int(c));
      REQUIRE(seq);
      CHECK(seq->blocks.size() == static_cast<std::size_t>(u.num_blocks()));
      CHECK(validate_accepted(u, *seq, Int(c)));
    }
  }

  // a sequence built for a high level stays valid at every lower level
  auto seq3 = realize_accepted(instances[0], Int(3));
  REQUIRE(seq3);
  for (long c = 0; c <= 3; ++c) CHECK(validate_accepted(instances[0], *seq3, Int(c)));

  CHECK_FALSE(realize_accepted(trivial_mrgs(sys, iv({0, 2}), iv({1, 0})), Int(1))
                  .has_value());
  CHECK_THROWS_AS(realize_accepted(instances[0], Int(1) << 21),
                  std::invalid_argument);
}

TEST_CASE("realized sequences satisfy the characteristic system") {
  vas_system sys = fig1();
  ext_config top2 = ec({-1, -1});
  marked_reach_graph b0(top2, 0, top_loop_graph(sys), 0, top2);
  marked_reach_graph b1(top2, 0, top_loop_graph(sys), 0, top2);
  mrgs u(sys, {b0, b1}, {0}, top2, top2);

  auto seq = realize_accepted(u, Int(1));
  REQUIRE(seq);
  char_system cs = build_characteristic(u);
  int_vec x(cs.nvars, Int(0));
  for (int j = 0; j < u.num_blocks(); ++j) {
    const accepted_block& b = seq->blocks[j];
    for (int i = 0; i < sys.dimension(); ++i) {
      x[cs.s_offset[j] + i] = b.s[i];
      x[cs.s_prime_offset[j] + i] = b.s_prime[i];
    }
    int_vec counts = edge_count_vec(u.block(j).graph(), b.path);
    for (int e = 0; e < u.block(j).graph().num_edges(); ++e)
      x[cs.mu_offset[j] + e] = counts[e];
  }
  CHECK(cs.lhs.mul(x) == cs.rhs);
}
