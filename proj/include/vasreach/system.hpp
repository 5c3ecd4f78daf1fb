#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "vasreach/numeric.hpp"

namespace vasreach {

// Finite alphabet with an integer displacement per action. Dimension may be
// zero; the alphabet may not be empty. Action names are unique.
class vas_system {
 public:
  vas_system(std::vector<std::string> names, int dimension,
             std::vector<int_vec> displacements);

  int dimension() const { return dim_; }
  int num_actions() const { return static_cast<int>(names_.size()); }
  const std::string& action_name(int a) const { return names_.at(a); }
  const std::vector<std::string>& action_names() const { return names_; }
  const int_vec& displacement(int a) const { return delta_.at(a); }

  int action_index(std::string_view name) const;        // throws on unknown
  int find_action(std::string_view name) const;         // -1 on unknown

 private:
  std::vector<std::string> names_;
  int dim_;
  std::vector<int_vec> delta_;
  std::map<std::string, int, std::less<>> index_;
};

// Control states over a shared vas_system. A plain VAS is the one-state
// instance where every action self-loops.
class vass_system {
 public:
  struct transition {
    int from;
    int action;
    int to;
  };

  vass_system(std::vector<std::string> states, vas_system vas,
              std::vector<transition> transitions);

  static vass_system single_state(vas_system vas);

  const vas_system& vas() const { return vas_; }
  int num_states() const { return static_cast<int>(states_.size()); }
  const std::string& state_name(int q) const { return states_.at(q); }
  int state_index(std::string_view name) const;         // throws on unknown
  int find_state(std::string_view name) const;          // -1 on unknown
  const std::vector<transition>& transitions() const { return transitions_; }

 private:
  std::vector<std::string> states_;
  vas_system vas_;
  std::vector<transition> transitions_;
};

// word helpers: words are action index sequences
std::vector<int> word_of_names(const vas_system& sys,
                               const std::vector<std::string>& names);
// each character is one action name; convenient for single-letter alphabets
std::vector<int> word_of_chars(const vas_system& sys, std::string_view chars);
std::string word_str(const vas_system& sys, const std::vector<int>& word);

// occurrence counts per action, zeros included
std::map<std::string, Int> parikh(const vas_system& sys,
                                  const std::vector<int>& word);

}  // namespace vasreach
