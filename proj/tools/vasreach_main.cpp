// command line front door: reach / check-cert / covers / semilinear /
// mrgs-check over the text formats in formats.hpp
//
// exit codes: 0 positive, 1 negative, 2 budget exhausted, 64 usage or
// malformed input, 70 internal fault

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vasreach/decider.hpp"
#include "vasreach/formats.hpp"
#include "vasreach/invariant.hpp"
#include "vasreach/mrgs.hpp"
#include "vasreach/semantics.hpp"
#include "vasreach/semilinear.hpp"

using nlohmann::json;
using namespace vasreach;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw format_error("cannot read '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw format_error("cannot write '" + path + "'", 0);
  out << text;
}

// point in Z^n, comma separated, negatives allowed
int_vec parse_point(const std::string& text) {
  int_vec v;
  std::istringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    std::istringstream ws(piece);
    std::string tok;
    if (!(ws >> tok) || (ws >> piece))
      throw format_error("bad point entry '" + piece + "'", 0);
    try {
      v.push_back(Int(tok));
    } catch (const std::invalid_argument&) {
      throw format_error("bad point entry '" + tok + "'", 0);
    }
  }
  if (v.empty()) throw format_error("empty point", 0);
  return v;
}

std::string witness_word(const vass_system& sys, const std::vector<int>& w) {
  std::vector<int> actions;
  for (int t : w) actions.push_back(sys.transitions().at(t).action);
  return word_str(sys.vas(), actions);
}

json stats_json(const decider_stats& st) {
  return {{"rounds", st.rounds},
          {"expanded", st.expanded},
          {"formulas_tested", st.formulas_tested},
          {"search_saturated", st.search_saturated}};
}

struct reach_args {
  std::string file, from, to, cert_out;
  long max_rounds = 64;
  long steps_per_round = 1000;
  long formulas_per_round = 2000;
  bool templates = false;
  int template_bound = 3;
  bool porcelain = false;
};

int run_reach(const reach_args& a) {
  system_file sf = parse_system_file(slurp(a.file));
  vass_config s = parse_config(a.from, sf.sys, sf.has_states);
  vass_config t = parse_config(a.to, sf.sys, sf.has_states);

  decider_config cfg;
  cfg.max_rounds = a.max_rounds == 0 ? std::nullopt
                                     : std::optional<long>(a.max_rounds);
  cfg.steps_per_round = a.steps_per_round;
  cfg.formulas_per_round = a.formulas_per_round;
  cfg.templates = a.templates;
  cfg.template_bound = a.template_bound;

  verdict v = decide_reach(sf.sys, s, t, cfg);

  if (v.kind == verdict_kind::reachable) {
    std::string word = witness_word(sf.sys, v.witness);
    if (a.porcelain) {
      json j = {{"verdict", "reachable"},
                {"witness", word},
                {"length", v.witness.size()},
                {"stats", stats_json(v.stats)}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "reachable\nwitness: " << word << "\n";
    }
    return 0;
  }
  if (v.kind == verdict_kind::unreachable) {
    std::string inv = format(v.cert->psi);
    std::string path = a.cert_out.empty() ? a.file + ".cert" : a.cert_out;
    spill(path, "# forward invariant separating source from target\n" + inv +
                    "\n");
    if (a.porcelain) {
      json j = {{"verdict", "unreachable"},
                {"invariant", inv},
                {"cert_file", path},
                {"stats", stats_json(v.stats)}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "unreachable\ninvariant: " << inv
                << "\ncertificate written to " << path << "\n";
    }
    return 1;
  }
  if (a.porcelain) {
    json j = {{"verdict", "budget_exhausted"}, {"stats", stats_json(v.stats)}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "budget exhausted after " << v.stats.rounds << " rounds\n";
  }
  return 2;
}

struct check_cert_args {
  std::string file, from, to, cert;
  bool porcelain = false;
};

int run_check_cert(const check_cert_args& a) {
  system_file sf = parse_system_file(slurp(a.file));
  vas_system esys = embed_vass(sf.sys);
  int_vec s = embed_config(sf.sys, parse_config(a.from, sf.sys, sf.has_states));
  int_vec t = embed_config(sf.sys, parse_config(a.to, sf.sys, sf.has_states));
  formula_ptr psi = [&] {
    try {
      return parse_formula_file(slurp(a.cert));
    } catch (const parse_error& e) {
      throw format_error(e.what(), 0);
    }
  }();

  cert_result r = check_certificate({psi, s, t}, esys);
  if (a.porcelain) {
    json j = {{"valid", r.valid()},
              {"source_in", r.source_in},
              {"target_out", r.target_out},
              {"invariant", r.invariant},
              {"reason", r.reason()}};
    std::cout << j.dump() << "\n";
  } else if (r.valid()) {
    std::cout << "valid\n";
  } else {
    std::cout << "invalid: " << r.reason() << "\n";
  }
  return r.valid() ? 0 : 1;
}

struct covers_args {
  std::string file, from, to;
  bool porcelain = false;
};

int run_covers(const covers_args& a) {
  system_file sf = parse_system_file(slurp(a.file));
  ext_vass_config init = parse_ext_config(a.from, sf.sys, sf.has_states);
  ext_vass_config target = parse_ext_config(a.to, sf.sys, sf.has_states);
  bool c = karp_miller_covers(sf.sys, init, target);
  if (a.porcelain)
    std::cout << json{{"covered", c}}.dump() << "\n";
  else
    std::cout << (c ? "covered\n" : "not covered\n");
  return c ? 0 : 1;
}

int run_sl_intersect(const std::string& fa, const std::string& fb,
                     bool porcelain) {
  semilinear_set sa = parse_semilinear(slurp(fa));
  semilinear_set sb = parse_semilinear(slurp(fb));
  semilinear_set out;
  int dim = sa.parts.empty() ? 0 : static_cast<int>(sa.parts[0].base.size());
  if (!sa.parts.empty() && !sb.parts.empty() &&
      sb.parts[0].base.size() != sa.parts[0].base.size())
    throw format_error("operands have different dimension", 0);
  for (const linear_set& la : sa.parts)
    for (const linear_set& lb : sb.parts) {
      semilinear_set piece = intersect_linear(la, lb, dim);
      out.parts.insert(out.parts.end(), piece.parts.begin(), piece.parts.end());
    }
  sl_dim d = dim_semilinear(out);
  if (porcelain) {
    json parts = json::array();
    for (const linear_set& l : out.parts) parts.push_back(write_linear(l));
    json j = {{"parts", parts},
              {"empty", out.parts.empty()},
              {"dim", d ? json(*d) : json(nullptr)}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << write_semilinear(out);
    if (out.parts.empty()) std::cout << "# empty\n";
  }
  return out.parts.empty() ? 1 : 0;
}

int run_sl_member(const std::string& file, const std::string& point,
                  bool porcelain) {
  semilinear_set s = parse_semilinear(slurp(file));
  int_vec v = parse_point(point);
  if (!s.parts.empty() && s.parts[0].base.size() != v.size())
    throw format_error("point dimension differs from set", 0);
  bool m = member_semilinear(s, v);
  if (porcelain)
    std::cout << json{{"member", m}}.dump() << "\n";
  else
    std::cout << (m ? "member\n" : "not a member\n");
  return m ? 0 : 1;
}

int run_sl_dim(const std::string& file, bool porcelain) {
  semilinear_set s = parse_semilinear(slurp(file));
  sl_dim d = dim_semilinear(s);
  if (porcelain)
    std::cout << json{{"dim", d ? json(*d) : json(nullptr)}}.dump() << "\n";
  else if (d)
    std::cout << "dim: " << *d << "\n";
  else
    std::cout << "dim: -inf\n";
  return 0;
}

struct mrgs_args {
  std::string file, sys_file;
  long realize_level = -1;
  bool porcelain = false;
};

int run_mrgs_check(const mrgs_args& a) {
  system_file sf = parse_system_file(slurp(a.sys_file));
  if (sf.sys.num_states() != 1)
    throw format_error("mrgs-check needs a plain counter system", 0);
  const vas_system& sys = sf.sys.vas();
  mrgs u = parse_mrgs(slurp(a.file), sys);

  bool large = large_solution_condition(u);
  bool perfect = is_perfect(u);

  std::optional<accepted_sequence> seq;
  if (a.realize_level >= 0) seq = realize_accepted(u, Int(a.realize_level));

  if (a.porcelain) {
    json j = {{"perfect", perfect}, {"large_solution", large}};
    if (a.realize_level >= 0) {
      j["realized"] = seq.has_value();
      if (seq) {
        json lens = json::array();
        for (const accepted_block& b : seq->blocks) lens.push_back(b.path.size());
        j["block_path_lengths"] = lens;
      }
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "perfect=" << (perfect ? "true" : "false") << "\n";
    std::cout << "large-solution=" << (large ? "true" : "false") << "\n";
    if (a.realize_level >= 0) {
      if (seq) {
        std::cout << "realized level " << a.realize_level << ", path lengths:";
        for (const accepted_block& b : seq->blocks)
          std::cout << " " << b.path.size();
        std::cout << "\n";
      } else {
        std::cout << "no accepted sequence materialized\n";
      }
    }
  }
  return perfect ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vector addition system reachability workbench"};
  app.require_subcommand(1);

  reach_args ra;
  auto* reach = app.add_subcommand("reach", "decide reachability");
  reach->add_option("file", ra.file, "system file (.vas or .vass)")->required();
  reach->add_option("--from", ra.from, "source configuration")->required();
  reach->add_option("--to", ra.to, "target configuration")->required();
  reach->add_option("--max-rounds", ra.max_rounds, "round budget, 0 unbounded");
  reach->add_option("--steps-per-round", ra.steps_per_round,
                    "search expansions per round");
  reach->add_option("--formulas-per-round", ra.formulas_per_round,
                    "certificate candidates per round");
  reach->add_flag("--templates", ra.templates, "half-space sweep first");
  reach->add_option("--template-bound", ra.template_bound,
                    "max abs template coefficient");
  reach->add_option("--cert-out", ra.cert_out,
                    "certificate path (default: <file>.cert)");
  reach->add_flag("--porcelain", ra.porcelain, "JSON output");

  check_cert_args ca;
  auto* ccert = app.add_subcommand("check-cert", "validate a certificate");
  ccert->add_option("file", ca.file, "system file")->required();
  ccert->add_option("--from", ca.from, "source configuration")->required();
  ccert->add_option("--to", ca.to, "target configuration")->required();
  ccert->add_option("--cert", ca.cert, "certificate formula file")->required();
  ccert->add_flag("--porcelain", ca.porcelain, "JSON output");

  covers_args va;
  auto* covers = app.add_subcommand("covers", "coverability check");
  covers->add_option("file", va.file, "system file")->required();
  covers->add_option("--from", va.from, "initial configuration")->required();
  covers->add_option("--to", va.to, "target, T entries unconstrained")
      ->required();
  covers->add_flag("--porcelain", va.porcelain, "JSON output");

  auto* sl = app.add_subcommand("semilinear", "semilinear set algebra");
  sl->require_subcommand(1);
  std::string sl_a, sl_b, sl_point;
  bool sl_porc = false;
  auto* sli = sl->add_subcommand("intersect", "intersect two sets");
  sli->add_option("a", sl_a, "first set file")->required();
  sli->add_option("b", sl_b, "second set file")->required();
  sli->add_flag("--porcelain", sl_porc, "JSON output");
  auto* slm = sl->add_subcommand("member", "membership test");
  slm->add_option("file", sl_a, "set file")->required();
  slm->add_option("--point", sl_point, "comma separated point")->required();
  slm->add_flag("--porcelain", sl_porc, "JSON output");
  auto* sld = sl->add_subcommand("dim", "dimension of a set");
  sld->add_option("file", sl_a, "set file")->required();
  sld->add_flag("--porcelain", sl_porc, "JSON output");

  mrgs_args ma;
  auto* mc = app.add_subcommand("mrgs-check", "perfect condition check");
  mc->add_option("file", ma.file, "marked reachability graph sequence file")
      ->required();
  mc->add_option("--sys", ma.sys_file, "counter system file")->required();
  mc->add_option("--realize", ma.realize_level,
                 "materialize an accepted sequence at this level");
  mc->add_flag("--porcelain", ma.porcelain, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 64;
  }

  try {
    if (*reach) return run_reach(ra);
    if (*ccert) return run_check_cert(ca);
    if (*covers) return run_covers(va);
    if (*sli) return run_sl_intersect(sl_a, sl_b, sl_porc);
    if (*slm) return run_sl_member(sl_a, sl_point, sl_porc);
    if (*sld) return run_sl_dim(sl_a, sl_porc);
    if (*mc) return run_mrgs_check(ma);
  } catch (const format_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
  return 64;
}
