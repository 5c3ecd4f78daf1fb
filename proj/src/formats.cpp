#include "vasreach/formats.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

namespace vasreach {

namespace {

struct line_tokens {
  int line;
  std::vector<std::string> toks;
};

std::vector<line_tokens> tokenize(const std::string& text) {
  std::vector<line_tokens> out;
  std::istringstream in(text);
  std::string raw;
  int ln = 0;
  while (std::getline(in, raw)) {
    ++ln;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    line_tokens lt{ln, {}};
    std::string tok;
    while (ls >> tok) lt.toks.push_back(tok);
    if (!lt.toks.empty()) out.push_back(std::move(lt));
  }
  return out;
}

bool int_shaped(const std::string& s) {
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Int parse_int_tok(const std::string& s, int ln) {
  if (s.empty() || !int_shaped(s)) throw format_error("expected integer, got '" + s + "'", ln);
  return Int(s);
}

int parse_index_tok(const std::string& s, int ln) {
  Int v = parse_int_tok(s, ln);
  if (v < 0 || !v.fits_sint_p()) throw format_error("index out of range: " + s, ln);
  return static_cast<int>(v.get_si());
}

ext_nat parse_ext_tok(const std::string& s, int ln) {
  if (s == "T") return ext_nat::top();
  Int v = parse_int_tok(s, ln);
  if (v < 0) throw format_error("negative counter value: " + s, ln);
  return ext_nat(v);
}

int_vec parse_int_tail(const line_tokens& lt, std::size_t from, int n) {
  if (lt.toks.size() != from + static_cast<std::size_t>(n))
    throw format_error("expected " + std::to_string(n) + " entries", lt.line);
  int_vec v;
  for (int i = 0; i < n; ++i) v.push_back(parse_int_tok(lt.toks[from + i], lt.line));
  return v;
}

int parse_dim_header(const std::vector<line_tokens>& lines, std::size_t& at,
                     const char* kind) {
  if (at >= lines.size() || lines[at].toks.size() != 1 || lines[at].toks[0] != kind)
    throw format_error(std::string("expected header '") + kind + "'",
                       at < lines.size() ? lines[at].line : 0);
  ++at;
  if (at >= lines.size() || lines[at].toks.size() != 2 || lines[at].toks[0] != "dim")
    throw format_error("expected 'dim <n>'", at < lines.size() ? lines[at].line : 0);
  int n = parse_index_tok(lines[at].toks[1], lines[at].line);
  ++at;
  return n;
}

}  // namespace

vas_system parse_vas(const std::string& text) {
  auto lines = tokenize(text);
  std::size_t at = 0;
  int n = parse_dim_header(lines, at, "vas");
  std::vector<std::string> names;
  std::vector<int_vec> disp;
  for (; at < lines.size(); ++at) {
    const line_tokens& lt = lines[at];
    if (lt.toks[0] != "action")
      throw format_error("expected 'action <name> d1 ... dn'", lt.line);
    if (lt.toks.size() < 2) throw format_error("action needs a name", lt.line);
    names.push_back(lt.toks[1]);
    disp.push_back(parse_int_tail(lt, 2, n));
  }
  try {
    return vas_system(std::move(names), n, std::move(disp));
  } catch (const std::invalid_argument& e) {
    throw format_error(e.what(), 0);
  }
}

vass_system parse_vass(const std::string& text) {
  auto lines = tokenize(text);
  std::size_t at = 0;
  int n = parse_dim_header(lines, at, "vass");
  if (at >= lines.size() || lines[at].toks[0] != "states" || lines[at].toks.size() < 2)
    throw format_error("expected 'states <name> ...'",
                       at < lines.size() ? lines[at].line : 0);
  std::vector<std::string> states(lines[at].toks.begin() + 1, lines[at].toks.end());
  ++at;

  std::map<std::string, int> state_index;
  for (std::size_t q = 0; q < states.size(); ++q) {
    if (!state_index.emplace(states[q], static_cast<int>(q)).second)
      throw format_error("duplicate state '" + states[q] + "'", lines[at - 1].line);
  }

  std::vector<std::string> names;
  std::vector<int_vec> disp;
  std::vector<vass_system::transition> trans;
  for (; at < lines.size(); ++at) {
    const line_tokens& lt = lines[at];
    if (lt.toks[0] != "trans")
      throw format_error("expected 'trans <name> <from> <to> d1 ... dn'", lt.line);
    if (lt.toks.size() < 4) throw format_error("trans needs name, from, to", lt.line);
    auto from = state_index.find(lt.toks[2]);
    auto to = state_index.find(lt.toks[3]);
    if (from == state_index.end() || to == state_index.end())
      throw format_error("unknown state in transition", lt.line);
    int a = static_cast<int>(names.size());
    names.push_back(lt.toks[1]);
    disp.push_back(parse_int_tail(lt, 4, n));
    trans.push_back({from->second, a, to->second});
  }
  try {
    return vass_system(std::move(states),
                       vas_system(std::move(names), n, std::move(disp)),
                       std::move(trans));
  } catch (const std::invalid_argument& e) {
    throw format_error(e.what(), 0);
  }
}

system_file parse_system_file(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw format_error("empty system file", 0);
  const std::string& head = lines[0].toks[0];
  if (head == "vas")
    return {vass_system::single_state(parse_vas(text)), false};
  if (head == "vass") return {parse_vass(text), true};
  throw format_error("unknown header '" + head + "'", lines[0].line);
}

std::string write_vas(const vas_system& sys) {
  std::ostringstream out;
  out << "vas\n" << "dim " << sys.dimension() << "\n";
  for (int a = 0; a < sys.num_actions(); ++a) {
    out << "action " << sys.action_name(a);
    for (const Int& d : sys.displacement(a)) out << " " << d;
    out << "\n";
  }
  return out.str();
}

std::string write_vass(const vass_system& sys) {
  std::ostringstream out;
  out << "vass\n" << "dim " << sys.vas().dimension() << "\n" << "states";
  for (int q = 0; q < sys.num_states(); ++q) out << " " << sys.state_name(q);
  out << "\n";
  for (const auto& tr : sys.transitions()) {
    out << "trans " << sys.vas().action_name(tr.action) << " "
        << sys.state_name(tr.from) << " " << sys.state_name(tr.to);
    for (const Int& d : sys.vas().displacement(tr.action)) out << " " << d;
    out << "\n";
  }
  return out.str();
}

namespace {

// character-level scanner for the linear-set line syntax
struct lin_scanner {
  const std::string& s;
  std::size_t at = 0;
  int line;

  void ws() {
    while (at < s.size() && std::isspace(static_cast<unsigned char>(s[at]))) ++at;
  }
  bool done() {
    ws();
    return at == s.size();
  }
  void expect(char c) {
    ws();
    if (at >= s.size() || s[at] != c)
      throw format_error(std::string("expected '") + c + "'", line);
    ++at;
  }
  bool peek(char c) {
    ws();
    return at < s.size() && s[at] == c;
  }
  void word(const char* w) {
    ws();
    std::size_t len = std::string(w).size();
    if (s.compare(at, len, w) != 0)
      throw format_error(std::string("expected '") + w + "'", line);
    at += len;
  }
  Int integer() {
    ws();
    std::size_t start = at;
    if (at < s.size() && (s[at] == '-' || s[at] == '+')) ++at;
    while (at < s.size() && std::isdigit(static_cast<unsigned char>(s[at]))) ++at;
    std::string tok = s.substr(start, at - start);
    if (tok.empty() || !int_shaped(tok))
      throw format_error("expected integer", line);
    return Int(tok);
  }
  int_vec vec() {
    expect('(');
    int_vec v;
    if (!peek(')')) {
      v.push_back(integer());
      while (peek(',')) {
        expect(',');
        v.push_back(integer());
      }
    }
    expect(')');
    return v;
  }
};

}  // namespace

linear_set parse_linear_line(const std::string& line) {
  lin_scanner sc{line, 0, 0};
  sc.word("base");
  linear_set l;
  l.base = sc.vec();
  sc.word("periods");
  sc.expect('{');
  if (!sc.peek('}')) {
    l.periods.push_back(sc.vec());
    while (sc.peek(',')) {
      sc.expect(',');
      l.periods.push_back(sc.vec());
    }
  }
  sc.expect('}');
  if (!sc.done()) throw format_error("trailing input after linear set", 0);
  for (const int_vec& p : l.periods)
    if (p.size() != l.base.size())
      throw format_error("period dimension differs from base", 0);
  return l;
}

semilinear_set parse_semilinear(const std::string& text) {
  semilinear_set s;
  std::istringstream in(text);
  std::string raw;
  int ln = 0;
  std::size_t dim = 0;
  while (std::getline(in, raw)) {
    ++ln;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      s.parts.push_back(parse_linear_line(raw));
    } catch (const format_error& e) {
      throw format_error(e.what(), ln);
    }
    if (s.parts.size() == 1)
      dim = s.parts[0].base.size();
    else if (s.parts.back().base.size() != dim)
      throw format_error("parts of different dimension", ln);
  }
  return s;
}

namespace {

std::string vec_str(const int_vec& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << v[i];
  }
  out << ")";
  return out.str();
}

}  // namespace

std::string write_linear(const linear_set& l) {
  std::ostringstream out;
  out << "base " << vec_str(l.base) << " periods {";
  for (std::size_t i = 0; i < l.periods.size(); ++i) {
    if (i) out << ",";
    out << vec_str(l.periods[i]);
  }
  out << "}";
  return out.str();
}

std::string write_semilinear(const semilinear_set& s) {
  std::ostringstream out;
  for (const linear_set& l : s.parts) out << write_linear(l) << "\n";
  return out.str();
}

namespace {

struct mrgs_block_draft {
  int header_line = 0;
  std::map<int, int> id_to_index;
  std::vector<ext_config> nodes;
  std::vector<graph_edge> edges;
  bool has_input = false, has_output = false;
  ext_config m, m_prime;
  int input_id = 0, output_id = 0;
  int input_line = 0, output_line = 0;
};

marked_reach_graph finalize_block(const mrgs_block_draft& d, const vas_system& sys) {
  if (d.nodes.empty()) throw format_error("block has no nodes", d.header_line);
  if (!d.has_input) throw format_error("block has no input line", d.header_line);
  if (!d.has_output) throw format_error("block has no output line", d.header_line);
  auto in_it = d.id_to_index.find(d.input_id);
  if (in_it == d.id_to_index.end())
    throw format_error("input refers to unknown node", d.input_line);
  auto out_it = d.id_to_index.find(d.output_id);
  if (out_it == d.id_to_index.end())
    throw format_error("output refers to unknown node", d.output_line);
  try {
    reach_graph g(sys, d.nodes, d.edges);
    return marked_reach_graph(d.m, in_it->second, std::move(g), out_it->second,
                              d.m_prime);
  } catch (const std::invalid_argument& e) {
    throw format_error(e.what(), d.header_line);
  }
}

}  // namespace

mrgs parse_mrgs(const std::string& text, const vas_system& sys) {
  int n = sys.dimension();
  auto lines = tokenize(text);

  std::vector<marked_reach_graph> blocks;
  std::vector<int> joins;
  std::optional<mrgs_block_draft> open;

  auto parse_ext_tail = [n](const line_tokens& lt, std::size_t from,
                            std::size_t count_after) {
    if (lt.toks.size() != from + static_cast<std::size_t>(n) + count_after)
      throw format_error("expected " + std::to_string(n) + " entries", lt.line);
    ext_config c;
    for (int i = 0; i < n; ++i) c.push_back(parse_ext_tok(lt.toks[from + i], lt.line));
    return c;
  };

  for (const line_tokens& lt : lines) {
    const std::string& kw = lt.toks[0];
    if (kw == "graph") {
      if (open)
        throw format_error("new block without a join in between", lt.line);
      if (lt.toks.size() != 2 ||
          parse_index_tok(lt.toks[1], lt.line) != static_cast<int>(blocks.size()))
        throw format_error("blocks must be numbered in order", lt.line);
      open.emplace();
      open->header_line = lt.line;
    } else if (kw == "join") {
      if (!open) throw format_error("join without a preceding block", lt.line);
      if (lt.toks.size() != 2) throw format_error("expected 'join <action>'", lt.line);
      int a = sys.find_action(lt.toks[1]);
      if (a < 0) throw format_error("unknown action '" + lt.toks[1] + "'", lt.line);
      blocks.push_back(finalize_block(*open, sys));
      open.reset();
      joins.push_back(a);
    } else if (!open) {
      throw format_error("expected 'graph <j>'", lt.line);
    } else if (kw == "node") {
      if (lt.toks.size() < 2) throw format_error("node needs an id", lt.line);
      int id = parse_index_tok(lt.toks[1], lt.line);
      if (!open->id_to_index.emplace(id, static_cast<int>(open->nodes.size())).second)
        throw format_error("duplicate node id", lt.line);
      open->nodes.push_back(parse_ext_tail(lt, 2, 0));
    } else if (kw == "edge") {
      if (lt.toks.size() != 4)
        throw format_error("expected 'edge <from> <action> <to>'", lt.line);
      auto from = open->id_to_index.find(parse_index_tok(lt.toks[1], lt.line));
      auto to = open->id_to_index.find(parse_index_tok(lt.toks[3], lt.line));
      if (from == open->id_to_index.end() || to == open->id_to_index.end())
        throw format_error("edge refers to unknown node", lt.line);
      int a = sys.find_action(lt.toks[2]);
      if (a < 0) throw format_error("unknown action '" + lt.toks[2] + "'", lt.line);
      open->edges.push_back({from->second, a, to->second});
    } else if (kw == "input") {
      // input m= v1 ... vn x= <node>
      if (lt.toks.size() < 2 || lt.toks[1] != "m=")
        throw format_error("expected 'input m= ... x= <node>'", lt.line);
      open->m = parse_ext_tail(lt, 2, 2);
      if (lt.toks[lt.toks.size() - 2] != "x=")
        throw format_error("expected 'x= <node>' at end of input line", lt.line);
      open->input_id = parse_index_tok(lt.toks.back(), lt.line);
      open->has_input = true;
      open->input_line = lt.line;
    } else if (kw == "output") {
      // output x'= <node> m'= v1 ... vn
      if (lt.toks.size() < 4 || lt.toks[1] != "x'=" || lt.toks[3] != "m'=")
        throw format_error("expected 'output x'= <node> m'= ...'", lt.line);
      open->output_id = parse_index_tok(lt.toks[2], lt.line);
      open->m_prime = parse_ext_tail(lt, 4, 0);
      open->has_output = true;
      open->output_line = lt.line;
    } else {
      throw format_error("unknown directive '" + kw + "'", lt.line);
    }
  }
  if (!open) throw format_error("file must end with a block", 0);
  blocks.push_back(finalize_block(*open, sys));

  try {
    ext_config outer_m = blocks.front().input_constraint();
    ext_config outer_mp = blocks.back().output_constraint();
    return mrgs(sys, std::move(blocks), std::move(joins), std::move(outer_m),
                std::move(outer_mp));
  } catch (const std::invalid_argument& e) {
    throw format_error(e.what(), 0);
  }
}

std::string write_mrgs(const mrgs& u) {
  std::ostringstream out;
  auto put_ext = [&](const ext_config& c) {
    for (const ext_nat& v : c) out << " " << v.str();
  };
  for (int j = 0; j < u.num_blocks(); ++j) {
    if (j > 0) out << "join " << u.vas().action_name(u.join(j)) << "\n";
    const marked_reach_graph& b = u.block(j);
    out << "graph " << j << "\n";
    for (int q = 0; q < b.graph().num_nodes(); ++q) {
      out << "node " << q;
      put_ext(b.graph().node(q));
      out << "\n";
    }
    for (const graph_edge& e : b.graph().edges())
      out << "edge " << e.from << " " << u.vas().action_name(e.action) << " "
          << e.to << "\n";
    out << "input m=";
    put_ext(b.input_constraint());
    out << " x= " << b.input_state() << "\n";
    out << "output x'= " << b.output_state() << " m'=";
    put_ext(b.output_constraint());
    out << "\n";
  }
  return out.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::pair<int, std::string> split_state(const std::string& text,
                                        const vass_system& sys,
                                        bool has_states) {
  if (!has_states) {
    if (text.find(':') != std::string::npos)
      throw format_error("system has no control states, drop the 'state:' prefix", 0);
    return {0, text};
  }
  std::size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw format_error("expected 'state:counters' for a stateful system", 0);
  std::string name = text.substr(0, colon);
  int q = sys.find_state(name);
  if (q < 0) throw format_error("unknown state '" + name + "'", 0);
  return {q, text.substr(colon + 1)};
}

}  // namespace

vass_config parse_config(const std::string& text, const vass_system& sys,
                         bool has_states) {
  auto [state, rest] = split_state(text, sys, has_states);
  vass_config c;
  c.state = state;
  int n = sys.vas().dimension();
  auto pieces = n == 0 && rest.empty() ? std::vector<std::string>{} : split(rest, ',');
  if (static_cast<int>(pieces.size()) != n)
    throw format_error("expected " + std::to_string(n) + " counters", 0);
  for (const std::string& p : pieces) {
    Int v = parse_int_tok(p, 0);
    if (v < 0) throw format_error("negative counter value", 0);
    c.counters.push_back(std::move(v));
  }
  return c;
}

ext_vass_config parse_ext_config(const std::string& text,
                                 const vass_system& sys, bool has_states) {
  auto [state, rest] = split_state(text, sys, has_states);
  ext_vass_config c;
  c.state = state;
  int n = sys.vas().dimension();
  auto pieces = n == 0 && rest.empty() ? std::vector<std::string>{} : split(rest, ',');
  if (static_cast<int>(pieces.size()) != n)
    throw format_error("expected " + std::to_string(n) + " counters", 0);
  for (const std::string& p : pieces) c.counters.push_back(parse_ext_tok(p, 0));
  return c;
}

formula_ptr parse_formula_file(const std::string& text) {
  std::istringstream in(text);
  std::string raw, joined;
  while (std::getline(in, raw)) {
    std::size_t first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos || raw[first] == '#') continue;
    if (!joined.empty()) joined += " ";
    joined += raw;
  }
  if (joined.find_first_not_of(" \t\r") == std::string::npos)
    throw format_error("no formula in file", 0);
  try {
    return parse_formula(joined);
  } catch (const parse_error& e) {
    throw format_error(std::string("bad formula: ") + e.what(), 0);
  }
}

}  // namespace vasreach
