#include "vasreach/system.hpp"

#include <stdexcept>

namespace vasreach {

vas_system::vas_system(std::vector<std::string> names, int dimension,
                       std::vector<int_vec> displacements)
    : names_(std::move(names)), dim_(dimension), delta_(std::move(displacements)) {
  if (names_.empty()) throw std::invalid_argument("vas_system: empty alphabet");
  if (dim_ < 0) throw std::invalid_argument("vas_system: negative dimension");
  if (delta_.size() != names_.size())
    throw std::invalid_argument("vas_system: one displacement per action");
  for (std::size_t a = 0; a < names_.size(); ++a) {
    if (names_[a].empty())
      throw std::invalid_argument("vas_system: empty action name");
    if (delta_[a].size() != static_cast<std::size_t>(dim_))
      throw std::invalid_argument("vas_system: displacement dimension mismatch");
    if (!index_.emplace(names_[a], static_cast<int>(a)).second)
      throw std::invalid_argument("vas_system: duplicate action " + names_[a]);
  }
}

int vas_system::action_index(std::string_view name) const {
  int a = find_action(name);
  if (a < 0)
    throw std::invalid_argument("unknown action " + std::string(name));
  return a;
}

int vas_system::find_action(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

vass_system::vass_system(std::vector<std::string> states, vas_system vas,
                         std::vector<transition> transitions)
    : states_(std::move(states)), vas_(std::move(vas)),
      transitions_(std::move(transitions)) {
  if (states_.empty()) throw std::invalid_argument("vass_system: no states");
  for (const transition& t : transitions_) {
    if (t.from < 0 || t.from >= num_states() || t.to < 0 || t.to >= num_states())
      throw std::invalid_argument("vass_system: transition state out of range");
    if (t.action < 0 || t.action >= vas_.num_actions())
      throw std::invalid_argument("vass_system: transition action out of range");
  }
}

vass_system vass_system::single_state(vas_system vas) {
  std::vector<transition> ts;
  for (int a = 0; a < vas.num_actions(); ++a) ts.push_back({0, a, 0});
  return vass_system({"*"}, std::move(vas), std::move(ts));
}

int vass_system::state_index(std::string_view name) const {
  int q = find_state(name);
  if (q < 0) throw std::invalid_argument("unknown state " + std::string(name));
  return q;
}

int vass_system::find_state(std::string_view name) const {
  for (std::size_t i = 0; i < states_.size(); ++i)
    if (states_[i] == name) return static_cast<int>(i);
  return -1;
}

std::vector<int> word_of_names(const vas_system& sys,
                               const std::vector<std::string>& names) {
  std::vector<int> w;
  w.reserve(names.size());
  for (const std::string& n : names) w.push_back(sys.action_index(n));
  return w;
}

std::vector<int> word_of_chars(const vas_system& sys, std::string_view chars) {
  std::vector<int> w;
  w.reserve(chars.size());
  for (char c : chars) w.push_back(sys.action_index(std::string_view(&c, 1)));
  return w;
}

std::string word_str(const vas_system& sys, const std::vector<int>& word) {
  bool single = true;
  for (int a = 0; a < sys.num_actions(); ++a)
    if (sys.action_name(a).size() != 1) single = false;
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!single && i) out += ' ';
    out += sys.action_name(word[i]);
  }
  return out;
}

std::map<std::string, Int> parikh(const vas_system& sys,
                                  const std::vector<int>& word) {
  std::map<std::string, Int> counts;
  for (int a = 0; a < sys.num_actions(); ++a) counts[sys.action_name(a)] = 0;
  for (int a : word) {
    if (a < 0 || a >= sys.num_actions())
      throw std::invalid_argument("parikh: action outside the alphabet");
    counts[sys.action_name(a)] += 1;
  }
  return counts;
}

}  // namespace vasreach
