#pragma once

#include <stdexcept>
#include <string>

#include "vasreach/mrgs.hpp"
#include "vasreach/presburger.hpp"
#include "vasreach/semantics.hpp"
#include "vasreach/semilinear.hpp"
#include "vasreach/system.hpp"

namespace vasreach {

struct format_error : std::runtime_error {
  int line;  // 1-based, 0 when not tied to a line
  format_error(const std::string& msg, int ln)
      : std::runtime_error(ln > 0 ? "line " + std::to_string(ln) + ": " + msg
                                  : msg),
        line(ln) {}
};

// System files: header `vas` or `vass`, then `dim n`; a vas lists
// `action <name> d1 ... dn`, a vass lists `states p q ...` and
// `trans <name> <from> <to> d1 ... dn` (one fresh action per transition).
// `#` starts a comment anywhere on a line.
struct system_file {
  vass_system sys;
  bool has_states;  // written with control states
};

system_file parse_system_file(const std::string& text);
vas_system parse_vas(const std::string& text);
vass_system parse_vass(const std::string& text);
std::string write_vas(const vas_system& sys);
std::string write_vass(const vass_system& sys);

// one linear set per line: `base (0,2) periods {(1,0),(1,1)}`; a file is the
// union of its lines, no lines at all denoting the empty set
linear_set parse_linear_line(const std::string& line);
semilinear_set parse_semilinear(const std::string& text);
std::string write_linear(const linear_set& l);
std::string write_semilinear(const semilinear_set& s);

// Block sections `graph <j>` carrying `node <id> v1 ... vn` (entry integer
// or `T`), `edge <from> <action> <to>`, `input m= v1 ... vn x= <node>` and
// `output x'= <node> m'= v1 ... vn`, glued by `join <action>` lines. The
// outer constraints are implicitly the first input and last output
// constraints.
mrgs parse_mrgs(const std::string& text, const vas_system& sys);
std::string write_mrgs(const mrgs& u);

// comma-separated counters, prefixed `state:` when the system has states
vass_config parse_config(const std::string& text, const vass_system& sys,
                         bool has_states);
// same, allowing `T` entries
ext_vass_config parse_ext_config(const std::string& text,
                                 const vass_system& sys, bool has_states);

// whole file is one formula; lines starting with `#` are skipped
formula_ptr parse_formula_file(const std::string& text);

}  // namespace vasreach
