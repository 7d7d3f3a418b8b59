#include "tdes/automaton.hpp"

#include <algorithm>

namespace tdes {

namespace {

void require_sorted_unique(const std::vector<std::string>& alphabet) {
  for (std::size_t i = 1; i < alphabet.size(); ++i)
    if (!(alphabet[i - 1] < alphabet[i]))
      throw AutomatonError("alphabet must be sorted and duplicate free near '" + alphabet[i] + "'");
}

}  // namespace

TimedAutomaton::TimedAutomaton(std::string name, std::vector<std::string> alphabet,
                               std::size_t num_states, StateId initial,
                               const std::vector<StateId>& marked,
                               const std::vector<Transition>& transitions)
    : name_(std::move(name)) {
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  alphabet_ = std::move(alphabet);
  if (num_states == 0) {
    if (!marked.empty() || !transitions.empty())
      throw AutomatonError(name_ + ": empty automaton cannot have marked states or transitions");
    return;
  }
  if (initial >= num_states)
    throw AutomatonError(name_ + ": initial state " + std::to_string(initial) + " out of range");
  initial_ = initial;
  marked_.assign(num_states, 0);
  for (StateId m : marked) {
    if (m >= num_states)
      throw AutomatonError(name_ + ": marked state " + std::to_string(m) + " out of range");
    marked_[m] = 1;
  }
  std::vector<std::vector<Edge>> adjacency(num_states);
  for (const auto& t : transitions) {
    if (t.source >= num_states || t.target >= num_states)
      throw AutomatonError(name_ + ": transition (" + std::to_string(t.source) + ", " + t.event +
                           ", " + std::to_string(t.target) + ") references a state out of range");
    auto e = event_index(t.event);
    if (!e) throw AutomatonError(name_ + ": event '" + t.event + "' is not in the alphabet");
    adjacency[t.source].push_back(Edge{*e, t.target});
  }
  *this = from_adjacency(name_, alphabet_, std::move(adjacency), initial_, marked_);
}

TimedAutomaton TimedAutomaton::from_adjacency(std::string name, std::vector<std::string> alphabet,
                                              std::vector<std::vector<Edge>> adjacency,
                                              StateId initial, std::vector<char> marked) {
  require_sorted_unique(alphabet);
  if (adjacency.size() != marked.size())
    throw AutomatonError(name + ": adjacency and marking sizes differ");
  TimedAutomaton a;
  a.name_ = std::move(name);
  a.alphabet_ = std::move(alphabet);
  if (adjacency.empty()) return a;
  if (initial >= adjacency.size()) throw AutomatonError(a.name_ + ": initial state out of range");
  a.initial_ = initial;
  a.marked_ = std::move(marked);
  a.offsets_.clear();
  a.offsets_.reserve(adjacency.size() + 1);
  a.offsets_.push_back(0);
  for (StateId x = 0; x < adjacency.size(); ++x) {
    auto& row = adjacency[x];
    std::sort(row.begin(), row.end());
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k].event >= a.alphabet_.size())
        throw AutomatonError(a.name_ + ": event index out of range");
      if (row[k].target >= adjacency.size())
        throw AutomatonError(a.name_ + ": target state out of range");
      if (k > 0 && row[k].event == row[k - 1].event) {
        if (row[k].target == row[k - 1].target) continue;
        throw AutomatonError(a.name_ + ": nondeterministic transitions at (" + std::to_string(x) +
                             ", " + a.alphabet_[row[k].event] + ")");
      }
      a.edges_.push_back(row[k]);
    }
    a.offsets_.push_back(a.edges_.size());
  }
  return a;
}

TimedAutomaton TimedAutomaton::empty_language(std::string name, std::vector<std::string> alphabet) {
  return TimedAutomaton(std::move(name), std::move(alphabet), 0, 0, {}, {});
}

TimedAutomaton TimedAutomaton::renamed(std::string name) const {
  TimedAutomaton copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

std::optional<EventIndex> TimedAutomaton::event_index(std::string_view id) const {
  auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), id,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == alphabet_.end() || *it != id) return std::nullopt;
  return static_cast<EventIndex>(it - alphabet_.begin());
}

std::vector<StateId> TimedAutomaton::marked_states() const {
  std::vector<StateId> out;
  for (StateId x = 0; x < marked_.size(); ++x)
    if (marked_[x]) out.push_back(x);
  return out;
}

std::span<const Edge> TimedAutomaton::edges(StateId x) const {
  return std::span<const Edge>(edges_.data() + offsets_.at(x), offsets_.at(x + 1) - offsets_[x]);
}

std::optional<StateId> TimedAutomaton::step(StateId x, EventIndex e) const {
  auto row = edges(x);
  auto it = std::lower_bound(row.begin(), row.end(), e,
                             [](const Edge& edge, EventIndex ev) { return edge.event < ev; });
  if (it == row.end() || it->event != e) return std::nullopt;
  return it->target;
}

std::optional<StateId> TimedAutomaton::step(StateId x, std::string_view event) const {
  auto e = event_index(event);
  if (!e) return std::nullopt;
  return step(x, *e);
}

std::optional<StateId> TimedAutomaton::run(const std::vector<std::string>& word) const {
  if (empty()) return std::nullopt;
  StateId x = initial_;
  for (const auto& ev : word) {
    auto next = step(x, ev);
    if (!next) return std::nullopt;
    x = *next;
  }
  return x;
}

bool TimedAutomaton::accepts_marked(const std::vector<std::string>& word) const {
  auto x = run(word);
  return x && is_marked(*x);
}

std::vector<Transition> TimedAutomaton::transitions() const {
  std::vector<Transition> out;
  out.reserve(edges_.size());
  for (StateId x = 0; x < num_states(); ++x)
    for (const Edge& e : edges(x)) out.push_back(Transition{x, alphabet_[e.event], e.target});
  return out;
}

bool TimedAutomaton::operator==(const TimedAutomaton& other) const {
  if (alphabet_ != other.alphabet_ || marked_ != other.marked_ || edges_ != other.edges_ ||
      offsets_ != other.offsets_)
    return false;
  return empty() || initial_ == other.initial_;
}

std::vector<std::string> alphabet_union(const std::vector<std::string>& a,
                                        const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace tdes
