#include "tdes/witness.hpp"

#include <algorithm>
#include <deque>

namespace tdes {

WitnessString WitnessString::make(std::vector<std::string> events, const std::string& tick) {
  WitnessString w;
  w.tick_count = static_cast<std::size_t>(std::count(events.begin(), events.end(), tick));
  w.events = std::move(events);
  return w;
}

std::string WitnessString::to_string() const {
  if (events.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < events.size(); ++i) {
    if (i) out += '.';
    out += events[i];
  }
  return out;
}

WitnessString WitnessString::erase(const std::vector<std::string>& erased,
                                   const std::string& tick) const {
  std::vector<std::string> kept;
  for (const auto& e : events)
    if (std::find(erased.begin(), erased.end(), e) == erased.end()) kept.push_back(e);
  return make(std::move(kept), tick);
}

std::optional<std::vector<EventIndex>> shortest_labels(const SearchGraph& graph, StateId start,
                                                       const std::vector<char>& target,
                                                       EventIndex tick_label) {
  constexpr std::uint32_t unseen = std::numeric_limits<std::uint32_t>::max();
  const std::size_t n = graph.size();
  if (start >= n) return std::nullopt;
  if (target[start]) return std::vector<EventIndex>{};

  // Forward BFS layer by layer until the first layer holding a target.
  std::vector<std::uint32_t> dist(n, unseen);
  std::vector<StateId> order{start};
  dist[start] = 0;
  std::uint32_t depth = unseen;
  for (std::size_t head = 0; head < order.size(); ++head) {
    StateId u = order[head];
    if (depth != unseen && dist[u] >= depth) break;
    for (const Edge& e : graph.adjacency[u]) {
      if (dist[e.target] != unseen) continue;
      dist[e.target] = dist[u] + 1;
      order.push_back(e.target);
      if (target[e.target] && depth == unseen) depth = dist[e.target];
    }
  }
  if (depth == unseen) return std::nullopt;

  // Fewest remaining ticks to a target on the shortest-path DAG.
  constexpr std::uint32_t inf = unseen;
  std::vector<std::uint32_t> rem(n, inf);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    StateId u = *it;
    if (dist[u] > depth) continue;
    if (dist[u] == depth) {
      rem[u] = target[u] ? 0 : inf;
      continue;
    }
    for (const Edge& e : graph.adjacency[u]) {
      if (dist[e.target] != dist[u] + 1 || rem[e.target] == inf) continue;
      rem[u] = std::min(rem[u], rem[e.target] + (e.event == tick_label ? 1u : 0u));
    }
  }

  // Greedy lexicographic descent along optimal edges.
  std::vector<EventIndex> labels;
  StateId u = start;
  while (dist[u] < depth) {
    for (const Edge& e : graph.adjacency[u]) {
      if (dist[e.target] != dist[u] + 1 || rem[e.target] == inf) continue;
      if (rem[e.target] + (e.event == tick_label ? 1u : 0u) != rem[u]) continue;
      labels.push_back(e.event);
      u = e.target;
      break;
    }
  }
  return labels;
}

SearchGraph graph_of(const TimedAutomaton& a) {
  SearchGraph g;
  g.adjacency.resize(a.num_states());
  for (StateId x = 0; x < a.num_states(); ++x) {
    auto row = a.edges(x);
    g.adjacency[x].assign(row.begin(), row.end());
  }
  return g;
}

std::optional<WitnessString> shortest_word(const TimedAutomaton& a, StateId from,
                                           const std::vector<char>& target,
                                           const std::string& tick) {
  if (a.empty()) return std::nullopt;
  auto tick_index = a.event_index(tick);
  auto labels = shortest_labels(graph_of(a), from, target, tick_index.value_or(no_label));
  if (!labels) return std::nullopt;
  std::vector<std::string> events;
  for (EventIndex e : *labels) events.push_back(a.event_name(e));
  return WitnessString::make(std::move(events), tick);
}

}  // namespace tdes
