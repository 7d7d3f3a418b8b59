#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tdes {

using StateId = std::uint32_t;
using EventIndex = std::uint32_t;

class AutomatonError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Transition {
  StateId source = 0;
  std::string event;
  StateId target = 0;

  auto operator<=>(const Transition&) const = default;
};

/// Labeled edge; `event` indexes the owning automaton's alphabet.
struct Edge {
  EventIndex event = 0;
  StateId target = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Deterministic finite generator G = (Q, Sigma, delta, q0, Qm).
///
/// States are dense ids 0..n-1. The alphabet is kept sorted, so event indices
/// order events lexicographically by id. Instances are immutable; every
/// language operation returns a new automaton. An automaton with zero states
/// represents the empty language.
class TimedAutomaton {
 public:
  TimedAutomaton() = default;

  /// Validating constructor. Throws AutomatonError on out-of-range states,
  /// events outside the alphabet or two targets for one (state, event) pair.
  TimedAutomaton(std::string name, std::vector<std::string> alphabet, std::size_t num_states,
                 StateId initial, const std::vector<StateId>& marked,
                 const std::vector<Transition>& transitions);

  /// Builds from per-state edge lists whose labels index `alphabet` (which
  /// must already be sorted and duplicate free).
  static TimedAutomaton from_adjacency(std::string name, std::vector<std::string> alphabet,
                                       std::vector<std::vector<Edge>> adjacency, StateId initial,
                                       std::vector<char> marked);

  static TimedAutomaton empty_language(std::string name, std::vector<std::string> alphabet);

  const std::string& name() const { return name_; }
  TimedAutomaton renamed(std::string name) const;

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  std::optional<EventIndex> event_index(std::string_view id) const;
  bool has_event(std::string_view id) const { return event_index(id).has_value(); }
  const std::string& event_name(EventIndex e) const { return alphabet_.at(e); }

  std::size_t num_states() const { return marked_.size(); }
  bool empty() const { return marked_.empty(); }
  StateId initial() const { return initial_; }
  bool is_marked(StateId x) const { return marked_.at(x) != 0; }
  std::vector<StateId> marked_states() const;

  std::span<const Edge> edges(StateId x) const;
  std::optional<StateId> step(StateId x, EventIndex e) const;
  std::optional<StateId> step(StateId x, std::string_view event) const;
  /// Runs a word from the initial state; nullopt when undefined.
  std::optional<StateId> run(const std::vector<std::string>& word) const;
  bool accepts_closed(const std::vector<std::string>& word) const { return run(word).has_value(); }
  bool accepts_marked(const std::vector<std::string>& word) const;

  std::size_t num_transitions() const { return edges_.size(); }
  /// All transitions sorted by (source, event id, target).
  std::vector<Transition> transitions() const;

  /// Structural equality: same alphabet, state numbering, marking and edges.
  bool operator==(const TimedAutomaton& other) const;

 private:
  std::string name_;
  std::vector<std::string> alphabet_;
  StateId initial_ = 0;
  std::vector<char> marked_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Edge> edges_;
};

/// Sorted, duplicate-free union of event ids.
std::vector<std::string> alphabet_union(const std::vector<std::string>& a,
                                        const std::vector<std::string>& b);

}  // namespace tdes
