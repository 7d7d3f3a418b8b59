#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tdes/automaton.hpp"
#include "tdes/witness.hpp"

namespace tdes {

inline const std::string default_tick = "tick";

std::vector<char> reachable_states(const TimedAutomaton& a);
std::vector<char> coreachable_states(const TimedAutomaton& a);

/// Keeps the flagged states (renumbered in original order) and the edges
/// between them. Returns the empty automaton when the initial state is dropped.
TimedAutomaton restrict_states(const TimedAutomaton& a, const std::vector<char>& keep);

/// Reachable and coreachable part.
TimedAutomaton trim(const TimedAutomaton& a);
bool is_nonblocking(const TimedAutomaton& a);

struct Product {
  TimedAutomaton automaton;
  /// Component states of every product state.
  std::vector<std::pair<StateId, StateId>> components;
};

/// Reachable synchronous product that remembers the component states.
Product product_with_components(const TimedAutomaton& a, const TimedAutomaton& b);

TimedAutomaton sync_product(const TimedAutomaton& a, const TimedAutomaton& b);
TimedAutomaton sync_product(std::span<const TimedAutomaton> operands);

/// Subset-construction helper for a natural projection that erases `erased`.
class ProjectionView {
 public:
  ProjectionView(const TimedAutomaton& a, const std::set<std::string>& erased);

  /// Closure of `states` under erased events (sorted, duplicate free result).
  std::vector<StateId> closure(std::vector<StateId> states) const;
  /// Closure of the `event`-successors of `states`; `event` is a kept event.
  std::vector<StateId> step(const std::vector<StateId>& states, EventIndex event) const;
  /// Closure of the successors of `states` under every kept event at once;
  /// entries are (kept event, successor subset), sorted by event.
  std::vector<std::pair<EventIndex, std::vector<StateId>>> successors(
      const std::vector<StateId>& states) const;
  bool any_marked(const std::vector<StateId>& states) const;

  const TimedAutomaton& automaton() const { return a_; }
  bool is_erased(EventIndex e) const { return erased_.at(e) != 0; }

 private:
  const std::vector<StateId>& state_closure(StateId x) const;

  const TimedAutomaton& a_;
  std::vector<char> erased_;
  bool any_erased_ = false;
  // Per-state closures, computed on demand.
  mutable std::vector<std::vector<StateId>> cache_;
  mutable std::vector<char> cached_;
  mutable std::vector<std::uint32_t> stamp_;
  mutable std::uint32_t generation_ = 0;
};

/// Natural projection onto `keep`: deterministic automaton with
/// L = P L(a) and Lm = P Lm(a). Subset states are numbered in breadth-first
/// order over sorted event ids.
TimedAutomaton project(const TimedAutomaton& a, const std::set<std::string>& keep);
/// Projection erasing `erased`, keeping every other event of a.
TimedAutomaton erase_events(const TimedAutomaton& a, const std::set<std::string>& erased);

/// Adds a selfloop for every event of `selfloop_events` at each state where it
/// is undefined; extends the alphabet.
TimedAutomaton lift(const TimedAutomaton& a, const std::set<std::string>& selfloop_events);

/// Renames transition labels. Throws AutomatonError if a key is outside the
/// alphabet or the renaming makes some state nondeterministic.
TimedAutomaton relabel(const TimedAutomaton& a, const std::map<std::string, std::string>& mapping);

enum class LanguageKind { closed, marked };
enum class LanguageRelation { equal, a_subset_b, b_subset_a, incomparable };

std::string to_string(LanguageRelation r);

struct LanguageComparison {
  LanguageRelation relation = LanguageRelation::equal;
  /// Shortest string of a - b, if any, else of b - a.
  std::optional<WitnessString> witness;
  std::optional<WitnessString> a_minus_b;
  std::optional<WitnessString> b_minus_a;

  bool a_included() const { return !a_minus_b.has_value(); }
  bool b_included() const { return !b_minus_a.has_value(); }
};

/// Decides inclusion both ways by exploring the product of the two automata,
/// each completed with a non-marker dump state.
LanguageComparison language_compare(const TimedAutomaton& a, const TimedAutomaton& b,
                                     LanguageKind kind, const std::string& tick = default_tick);

std::vector<std::string> eligible_events(const TimedAutomaton& a, StateId x);

}  // namespace tdes
