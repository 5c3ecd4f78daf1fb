#include "vasreach/semantics.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace vasreach {

std::optional<ext_config> step(const vas_system& sys, const ext_config& c,
                               int action) {
  if (action < 0 || action >= sys.num_actions())
    throw std::invalid_argument("step: action outside the alphabet");
  if (c.size() != static_cast<std::size_t>(sys.dimension()))
    throw std::invalid_argument("step: configuration dimension mismatch");
  const int_vec& d = sys.displacement(action);
  ext_config out;
  out.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto n = c[i].plus(d[i]);
    if (!n) return std::nullopt;
    out.push_back(std::move(*n));
  }
  return out;
}

std::optional<ext_config> run(const vas_system& sys, ext_config c,
                              std::span<const int> word) {
  for (int a : word) {
    auto n = step(sys, c, a);
    if (!n) return std::nullopt;
    c = std::move(*n);
  }
  return c;
}

std::optional<vass_config> vass_run(const vass_system& sys, vass_config c,
                                    std::span<const int> transitions) {
  for (int ti : transitions) {
    if (ti < 0 || ti >= static_cast<int>(sys.transitions().size()))
      throw std::invalid_argument("vass_run: transition index out of range");
    const auto& t = sys.transitions()[ti];
    if (t.from != c.state) return std::nullopt;
    const int_vec& d = sys.vas().displacement(t.action);
    for (std::size_t i = 0; i < c.counters.size(); ++i) {
      c.counters[i] += d[i];
      if (c.counters[i] < 0) return std::nullopt;
    }
    c.state = t.to;
  }
  return c;
}

bfs_engine::bfs_engine(const vass_system& sys, vass_config source,
                       vass_config target)
    : sys_(sys), target_(std::move(target)) {
  if (source.counters.size() != static_cast<std::size_t>(sys.vas().dimension()) ||
      target_.counters.size() != static_cast<std::size_t>(sys.vas().dimension()))
    throw std::invalid_argument("bfs: configuration dimension mismatch");
  for (const Int& x : source.counters)
    if (x < 0) throw std::invalid_argument("bfs: negative source counter");
  for (const Int& x : target_.counters)
    if (x < 0) throw std::invalid_argument("bfs: negative target counter");
  seen_before(source.state, source.counters);
  arena_.push_back({source.state, source.counters, -1, -1});
  visited_[key_hash(source.state, source.counters)].push_back(0);
  if (source == target_) found_node_ = 0;
}

std::size_t bfs_engine::key_hash(int state, const int_vec& cfg) const {
  std::size_t h = hash_int_vec(cfg);
  h ^= static_cast<std::size_t>(state) + 0x9e3779b97f4a7c15ULL + (h << 6) +
       (h >> 2);
  return h;
}

bool bfs_engine::seen_before(int state, const int_vec& cfg) {
  auto it = visited_.find(key_hash(state, cfg));
  if (it == visited_.end()) return false;
  for (int idx : it->second) {
    const node& n = arena_[idx];
    if (n.state == state && n.cfg == cfg) return true;
  }
  return false;
}

std::optional<std::vector<int>> bfs_engine::witness_to(int idx) const {
  std::vector<int> w;
  for (int cur = idx; arena_[cur].parent >= 0; cur = arena_[cur].parent)
    w.push_back(arena_[cur].via);
  std::reverse(w.begin(), w.end());
  return w;
}

std::optional<std::vector<int>> bfs_engine::expand(long steps) {
  if (found_node_ >= 0) return witness_to(found_node_);
  while (steps > 0) {
    if (cursor_ >= arena_.size()) {
      saturated_ = true;
      return std::nullopt;
    }
    const std::size_t me = cursor_++;
    ++expanded_;
    --steps;
    for (std::size_t ti = 0; ti < sys_.transitions().size(); ++ti) {
      const auto& t = sys_.transitions()[ti];
      if (t.from != arena_[me].state) continue;
      const int_vec& d = sys_.vas().displacement(t.action);
      int_vec next = arena_[me].cfg;
      bool ok = true;
      for (std::size_t i = 0; i < next.size(); ++i) {
        next[i] += d[i];
        if (next[i] < 0) {
          ok = false;
          break;
        }
      }
      if (!ok || seen_before(t.to, next)) continue;
      const int idx = static_cast<int>(arena_.size());
      visited_[key_hash(t.to, next)].push_back(idx);
      arena_.push_back({t.to, std::move(next), static_cast<int>(me),
                        static_cast<int>(ti)});
      if (arena_.back().state == target_.state &&
          arena_.back().cfg == target_.counters) {
        found_node_ = idx;
        return witness_to(idx);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<int>> bfs_reach(const vass_system& sys,
                                          const vass_config& source,
                                          const vass_config& target,
                                          long budget, bfs_stats* stats) {
  if (budget <= 0) throw std::invalid_argument("bfs_reach: budget must be positive");
  bfs_engine eng(sys, source, target);
  auto w = eng.expand(budget);
  if (stats) {
    stats->expanded = eng.expanded();
    stats->saturated = eng.saturated();
  }
  return w;
}

namespace {

struct km_node {
  int state;
  ext_config cfg;
  int parent;
};

bool km_covers_target(const km_node& n, const ext_vass_config& target) {
  if (n.state != target.state) return false;
  for (std::size_t i = 0; i < target.counters.size(); ++i) {
    if (target.counters[i].is_top()) continue;  // unconstrained
    if (n.cfg[i].is_top()) continue;
    if (n.cfg[i].value() < target.counters[i].value()) return false;
  }
  return true;
}

}  // namespace

bool karp_miller_covers(const vass_system& sys, const ext_vass_config& init,
                        const ext_vass_config& target) {
  const std::size_t dim = static_cast<std::size_t>(sys.vas().dimension());
  if (init.counters.size() != dim || target.counters.size() != dim)
    throw std::invalid_argument("karp_miller: dimension mismatch");
  std::vector<km_node> tree;
  tree.push_back({init.state, init.counters, -1});
  if (km_covers_target(tree[0], target)) return true;
  std::deque<int> work{0};
  // stored nodes per state for subsumption pruning
  std::vector<std::vector<int>> stored(sys.num_states());
  stored[init.state].push_back(0);

  while (!work.empty()) {
    const int me = work.front();
    work.pop_front();
    for (const auto& t : sys.transitions()) {
      if (t.from != tree[me].state) continue;
      const int_vec& d = sys.vas().displacement(t.action);
      ext_config next;
      next.reserve(dim);
      bool ok = true;
      for (std::size_t i = 0; i < dim; ++i) {
        auto v = tree[me].cfg[i].plus(d[i]);
        if (!v) {
          ok = false;
          break;
        }
        next.push_back(std::move(*v));
      }
      if (!ok) continue;
      // widen against ancestors with the same state
      for (int anc = me; anc >= 0; anc = tree[anc].parent) {
        if (tree[anc].state != t.to) continue;
        if (!ext_le(tree[anc].cfg, next)) continue;
        bool strict = false;
        for (std::size_t i = 0; i < dim; ++i)
          if (tree[anc].cfg[i] != next[i]) strict = true;
        if (!strict) continue;
        for (std::size_t i = 0; i < dim; ++i)
          if (!next[i].is_top() && ext_le(tree[anc].cfg[i], next[i]) &&
              tree[anc].cfg[i] != next[i])
            next[i] = ext_nat::top();
      }
      bool dominated = false;
      for (int idx : stored[t.to])
        if (ext_le(next, tree[idx].cfg)) {
          dominated = true;
          break;
        }
      if (dominated) continue;
      const int idx = static_cast<int>(tree.size());
      tree.push_back({t.to, std::move(next), me});
      stored[t.to].push_back(idx);
      if (km_covers_target(tree[idx], target)) return true;
      work.push_back(idx);
    }
  }
  return false;
}

}  // namespace vasreach
