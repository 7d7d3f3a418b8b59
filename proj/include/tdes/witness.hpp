#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tdes/automaton.hpp"

namespace tdes {

/// A counterexample string together with the number of ticks it contains.
struct WitnessString {
  std::vector<std::string> events;
  std::size_t tick_count = 0;

  static WitnessString make(std::vector<std::string> events, const std::string& tick);

  /// Dot separated rendering, e.g. "11.10.tick.33"; the empty string is "ε".
  std::string to_string() const;
  WitnessString erase(const std::vector<std::string>& erased, const std::string& tick) const;

  bool operator==(const WitnessString&) const = default;
};

/// Explicit labeled graph used by the witness searches. Node edges must be
/// sorted by label, and labels must order events lexicographically.
struct SearchGraph {
  std::vector<std::vector<Edge>> adjacency;

  std::size_t size() const { return adjacency.size(); }
};

inline constexpr EventIndex no_label = std::numeric_limits<EventIndex>::max();

/// Finds the path from `start` to any node flagged in `target` that is
/// minimal by (length, number of `tick_label` edges, lexicographic labels).
/// The graph must be deterministic (one successor per label and node).
std::optional<std::vector<EventIndex>> shortest_labels(const SearchGraph& graph, StateId start,
                                                       const std::vector<char>& target,
                                                       EventIndex tick_label);

SearchGraph graph_of(const TimedAutomaton& a);

/// Minimal witness in `a` from `from` to any state flagged in `target`.
std::optional<WitnessString> shortest_word(const TimedAutomaton& a, StateId from,
                                           const std::vector<char>& target,
                                           const std::string& tick);

}  // namespace tdes
