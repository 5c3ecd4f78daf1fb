#pragma once

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "vasreach/extnat.hpp"
#include "vasreach/system.hpp"

namespace vasreach {

// One firing: nothing when a finite component would go negative.
std::optional<ext_config> step(const vas_system& sys, const ext_config& c,
                               int action);

std::optional<ext_config> run(const vas_system& sys, ext_config c,
                              std::span<const int> word);

struct vass_config {
  int state = 0;
  int_vec counters;
  bool operator==(const vass_config& o) const = default;
};

// Replay a transition sequence; checks source states match along the way.
std::optional<vass_config> vass_run(const vass_system& sys, vass_config c,
                                    std::span<const int> transitions);

struct bfs_stats {
  long expanded = 0;
  bool saturated = false;  // frontier emptied before the budget ran out
};

// Shortest witness by breadth-first search; deterministic expansion order
// (queue order, transitions in declaration order). budget counts node
// expansions and must be positive.
std::optional<std::vector<int>> bfs_reach(const vass_system& sys,
                                          const vass_config& source,
                                          const vass_config& target,
                                          long budget,
                                          bfs_stats* stats = nullptr);

// Resumable breadth-first search used by the decider rounds.
class bfs_engine {
 public:
  bfs_engine(const vass_system& sys, vass_config source, vass_config target);

  // Expand up to `steps` more nodes. Returns the transition witness when the
  // target shows up; nothing otherwise.
  std::optional<std::vector<int>> expand(long steps);

  bool saturated() const { return saturated_; }
  long expanded() const { return expanded_; }
  bool found() const { return found_node_ >= 0; }

 private:
  struct node {
    int state;
    int_vec cfg;
    int parent;
    int via;  // transition index
  };

  std::optional<std::vector<int>> witness_to(int idx) const;
  std::size_t key_hash(int state, const int_vec& cfg) const;
  bool seen_before(int state, const int_vec& cfg);

  const vass_system& sys_;
  vass_config target_;
  std::vector<node> arena_;
  std::size_t cursor_ = 0;  // next node to expand
  long expanded_ = 0;
  bool saturated_ = false;
  int found_node_ = -1;
  // visited set: hash -> node indices with that hash (cfgs compared exactly)
  std::unordered_map<std::size_t, std::vector<int>> visited_;
};

struct ext_vass_config {
  int state = 0;
  ext_config counters;
};

// Coverability check: builds the acceleration tree, widening a coordinate to
// top whenever a node strictly dominates an ancestor with the same state;
// nodes dominated by an already stored node with the same state are dropped.
// Top components of the target are unconstrained.
bool karp_miller_covers(const vass_system& sys, const ext_vass_config& init,
                        const ext_vass_config& target);

}  // namespace vasreach
