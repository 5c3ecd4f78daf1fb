#include "vasreach/decider.hpp"

#include <stdexcept>
#include <string>

#include "vasreach/presburger.hpp"

namespace vasreach {

vas_system embed_vass(const vass_system& sys) {
  if (sys.num_states() == 1) return sys.vas();
  int n = sys.vas().dimension();
  std::vector<std::string> names;
  std::vector<int_vec> disp;
  for (std::size_t t = 0; t < sys.transitions().size(); ++t) {
    const auto& tr = sys.transitions()[t];
    names.push_back("t" + std::to_string(t) + "_" +
                    sys.vas().action_name(tr.action));
    int_vec d = sys.vas().displacement(tr.action);
    d.push_back(Int(tr.to) - Int(tr.from));
    disp.push_back(std::move(d));
  }
  return vas_system(std::move(names), n + 1, std::move(disp));
}

int_vec embed_config(const vass_system& sys, const vass_config& c) {
  int_vec v = c.counters;
  if (sys.num_states() > 1) v.push_back(c.state);
  return v;
}

std::optional<certificate> template_invariant_search(const vas_system& sys,
                                                     const int_vec& source,
                                                     const int_vec& target,
                                                     int bound) {
  int n = sys.dimension();
  if (static_cast<int>(source.size()) != n ||
      static_cast<int>(target.size()) != n)
    throw std::invalid_argument("template search: dimension mismatch");
  if (n == 0 || bound < 1) return std::nullopt;

  auto dot = [n](const int_vec& a, const int_vec& b) {
    Int s = 0;
    for (int i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
  };

  // smallest max-norm shell first, odometer order inside a shell
  for (int r = 1; r <= bound; ++r) {
    int_vec c(n, -r);
    while (true) {
      bool on_shell = false;
      for (const Int& v : c)
        if (v == r || v == -r) on_shell = true;
      if (on_shell) {
        bool closes = true;
        for (int a = 0; a < sys.num_actions() && closes; ++a)
          if (dot(c, sys.displacement(a)) > 0) closes = false;
        if (closes) {
          Int d = dot(c, source);
          if (dot(c, target) > d) {
            certificate cand{f_lin(c, cmp_op::le, d), source, target};
            if (check_certificate(cand, sys).valid()) return cand;
          }
        }
      }
      int i = n - 1;
      while (i >= 0 && c[i] == r) c[i--] = -r;
      if (i < 0) break;
      c[i] += 1;
    }
  }
  return std::nullopt;
}

verdict decide_reach(const vass_system& sys, const vass_config& source,
                     const vass_config& target, const decider_config& cfg) {
  int n = sys.vas().dimension();
  for (const vass_config* c : {&source, &target}) {
    if (static_cast<int>(c->counters.size()) != n)
      throw std::invalid_argument("decide: dimension mismatch");
    if (c->state < 0 || c->state >= sys.num_states())
      throw std::invalid_argument("decide: state out of range");
    for (const Int& v : c->counters)
      if (v < 0) throw std::invalid_argument("decide: negative counter");
  }
  if (cfg.steps_per_round < 1 || cfg.formulas_per_round < 1)
    throw std::invalid_argument("decide: budgets must be positive");
  if (cfg.max_rounds && *cfg.max_rounds < 0)
    throw std::invalid_argument("decide: negative round bound");

  vas_system esys = embed_vass(sys);
  int_vec es = embed_config(sys, source);
  int_vec et = embed_config(sys, target);

  bfs_engine engine(sys, source, target);
  formula_enumerator enumerator(esys.dimension());
  std::size_t cursor = 0;
  bool template_swept = false;
  decider_stats stats;

  auto certify = [&](certificate cert) {
    if (!check_certificate(cert, esys).valid())
      throw std::logic_error("decide: certificate failed revalidation");
    verdict v;
    v.kind = verdict_kind::unreachable;
    v.cert = std::move(cert);
    v.stats = stats;
    return v;
  };

  for (long round = 0; !cfg.max_rounds || round < *cfg.max_rounds; ++round) {
    stats.rounds = round + 1;

    if (!engine.saturated()) {
      auto w = engine.expand(cfg.steps_per_round);
      stats.expanded = engine.expanded();
      if (engine.saturated()) stats.search_saturated = true;
      if (w) {
        auto end = vass_run(sys, source, *w);
        if (!end || !(*end == target))
          throw std::logic_error("decide: witness failed replay");
        verdict v;
        v.kind = verdict_kind::reachable;
        v.witness = std::move(*w);
        v.stats = stats;
        return v;
      }
    }

    // the sweep is deterministic and budget-independent, so one pass serves
    // every round
    if (cfg.templates && !template_swept) {
      template_swept = true;
      if (auto cert = template_invariant_search(esys, es, et, cfg.template_bound))
        return certify(std::move(*cert));
    }

    long used = 0;
    while (used < cfg.formulas_per_round) {
      if (cursor == enumerator.items().size()) {
        // sizes up to the round index; later rounds raise the ceiling
        if (enumerator.current_size() >= round) break;
        enumerator.extend_to(enumerator.current_size() + 1);
        continue;
      }
      formula_ptr f = enumerator.items()[cursor];
      ++cursor;
      ++used;
      ++stats.formulas_tested;
      if (!eval(f, es) || eval(f, et)) continue;
      certificate cand{f, es, et};
      if (check_certificate(cand, esys).valid()) return certify(std::move(cand));
    }
  }

  verdict v;
  v.kind = verdict_kind::budget_exhausted;
  v.stats = stats;
  return v;
}

}  // namespace vasreach
