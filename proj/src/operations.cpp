#include "tdes/operations.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "detail/hashing.hpp"

namespace tdes {

std::vector<char> reachable_states(const TimedAutomaton& a) {
  std::vector<char> seen(a.num_states(), 0);
  if (a.empty()) return seen;
  std::vector<StateId> stack{a.initial()};
  seen[a.initial()] = 1;
  while (!stack.empty()) {
    StateId x = stack.back();
    stack.pop_back();
    for (const Edge& e : a.edges(x))
      if (!seen[e.target]) {
        seen[e.target] = 1;
        stack.push_back(e.target);
      }
  }
  return seen;
}

std::vector<char> coreachable_states(const TimedAutomaton& a) {
  const std::size_t n = a.num_states();
  std::vector<std::vector<StateId>> reverse(n);
  for (StateId x = 0; x < n; ++x)
    for (const Edge& e : a.edges(x)) reverse[e.target].push_back(x);
  std::vector<char> seen(n, 0);
  std::vector<StateId> stack;
  for (StateId x = 0; x < n; ++x)
    if (a.is_marked(x)) {
      seen[x] = 1;
      stack.push_back(x);
    }
  while (!stack.empty()) {
    StateId x = stack.back();
    stack.pop_back();
    for (StateId p : reverse[x])
      if (!seen[p]) {
        seen[p] = 1;
        stack.push_back(p);
      }
  }
  return seen;
}

TimedAutomaton restrict_states(const TimedAutomaton& a, const std::vector<char>& keep) {
  if (a.empty() || !keep.at(a.initial()))
    return TimedAutomaton::empty_language(a.name(), a.alphabet());
  constexpr StateId dropped = static_cast<StateId>(-1);
  std::vector<StateId> renumber(a.num_states(), dropped);
  StateId next = 0;
  for (StateId x = 0; x < a.num_states(); ++x)
    if (keep[x]) renumber[x] = next++;
  std::vector<std::vector<Edge>> adjacency(next);
  std::vector<char> marked(next, 0);
  for (StateId x = 0; x < a.num_states(); ++x) {
    if (renumber[x] == dropped) continue;
    marked[renumber[x]] = a.is_marked(x) ? 1 : 0;
    for (const Edge& e : a.edges(x))
      if (renumber[e.target] != dropped)
        adjacency[renumber[x]].push_back(Edge{e.event, renumber[e.target]});
  }
  return TimedAutomaton::from_adjacency(a.name(), a.alphabet(), std::move(adjacency),
                                        renumber[a.initial()], std::move(marked));
}

TimedAutomaton trim(const TimedAutomaton& a) {
  auto reach = reachable_states(a);
  auto coreach = coreachable_states(a);
  std::vector<char> keep(a.num_states());
  for (std::size_t x = 0; x < keep.size(); ++x) keep[x] = reach[x] && coreach[x];
  return restrict_states(a, keep);
}

bool is_nonblocking(const TimedAutomaton& a) {
  auto reach = reachable_states(a);
  auto coreach = coreachable_states(a);
  for (std::size_t x = 0; x < reach.size(); ++x)
    if (reach[x] && !coreach[x]) return false;
  return true;
}

Product product_with_components(const TimedAutomaton& a, const TimedAutomaton& b) {
  std::vector<std::string> alphabet = alphabet_union(a.alphabet(), b.alphabet());
  std::string name = a.name() + "||" + b.name();
  Product result;
  if (a.empty() || b.empty()) {
    result.automaton = TimedAutomaton::empty_language(name, alphabet);
    return result;
  }
  constexpr EventIndex none = no_label;
  std::vector<EventIndex> in_a(alphabet.size(), none), in_b(alphabet.size(), none);
  for (EventIndex u = 0; u < alphabet.size(); ++u) {
    if (auto e = a.event_index(alphabet[u])) in_a[u] = *e;
    if (auto e = b.event_index(alphabet[u])) in_b[u] = *e;
  }

  std::unordered_map<std::uint64_t, StateId> index;
  auto& comps = result.components;
  std::vector<std::vector<Edge>> adjacency;
  auto intern = [&](StateId xa, StateId xb) {
    std::uint64_t key = (std::uint64_t{xa} << 32) | xb;
    auto [it, inserted] = index.emplace(key, static_cast<StateId>(comps.size()));
    if (inserted) {
      comps.emplace_back(xa, xb);
      adjacency.emplace_back();
    }
    return it->second;
  };
  intern(a.initial(), b.initial());
  for (StateId x = 0; x < comps.size(); ++x) {
    auto [xa, xb] = comps[x];
    // Walk both sorted edge rows against the union alphabet.
    for (EventIndex u = 0; u < alphabet.size(); ++u) {
      StateId ta = xa, tb = xb;
      if (in_a[u] != none) {
        auto t = a.step(xa, in_a[u]);
        if (!t) continue;
        ta = *t;
      }
      if (in_b[u] != none) {
        auto t = b.step(xb, in_b[u]);
        if (!t) continue;
        tb = *t;
      }
      StateId target = intern(ta, tb);
      adjacency[x].push_back(Edge{u, target});
    }
  }
  std::vector<char> marked(comps.size());
  for (std::size_t x = 0; x < comps.size(); ++x)
    marked[x] = a.is_marked(comps[x].first) && b.is_marked(comps[x].second);
  result.automaton = TimedAutomaton::from_adjacency(std::move(name), std::move(alphabet),
                                                    std::move(adjacency), 0, std::move(marked));
  return result;
}

TimedAutomaton sync_product(const TimedAutomaton& a, const TimedAutomaton& b) {
  return product_with_components(a, b).automaton;
}

TimedAutomaton sync_product(std::span<const TimedAutomaton> operands) {
  if (operands.empty()) throw AutomatonError("sync_product needs at least one operand");
  TimedAutomaton acc = operands.front();
  for (std::size_t k = 1; k < operands.size(); ++k) acc = sync_product(acc, operands[k]);
  return acc;
}

ProjectionView::ProjectionView(const TimedAutomaton& a, const std::set<std::string>& erased)
    : a_(a),
      erased_(a.alphabet().size(), 0),
      cache_(a.num_states()),
      cached_(a.num_states(), 0),
      stamp_(a.num_states(), 0) {
  for (EventIndex e = 0; e < a.alphabet().size(); ++e) {
    erased_[e] = erased.count(a.alphabet()[e]) ? 1 : 0;
    any_erased_ = any_erased_ || erased_[e];
  }
}

const std::vector<StateId>& ProjectionView::state_closure(StateId x) const {
  if (cached_[x]) return cache_[x];
  std::vector<StateId> out{x};
  if (any_erased_) {
    ++generation_;
    stamp_[x] = generation_;
    for (std::size_t k = 0; k < out.size(); ++k)
      for (const Edge& e : a_.edges(out[k]))
        if (erased_[e.event] && stamp_[e.target] != generation_) {
          stamp_[e.target] = generation_;
          out.push_back(e.target);
        }
    std::sort(out.begin(), out.end());
  }
  cached_[x] = 1;
  cache_[x] = std::move(out);
  return cache_[x];
}

std::vector<StateId> ProjectionView::closure(std::vector<StateId> states) const {
  if (states.size() == 1) return state_closure(states[0]);
  std::vector<StateId> out;
  for (StateId x : states) {
    const auto& c = state_closure(x);
    out.insert(out.end(), c.begin(), c.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<StateId> ProjectionView::step(const std::vector<StateId>& states,
                                          EventIndex event) const {
  std::vector<StateId> moved;
  for (StateId x : states)
    if (auto t = a_.step(x, event)) moved.push_back(*t);
  if (moved.empty()) return moved;
  return closure(std::move(moved));
}

std::vector<std::pair<EventIndex, std::vector<StateId>>> ProjectionView::successors(
    const std::vector<StateId>& states) const {
  std::vector<std::pair<EventIndex, StateId>> moves;
  for (StateId x : states)
    for (const Edge& e : a_.edges(x))
      if (!erased_[e.event]) moves.emplace_back(e.event, e.target);
  std::sort(moves.begin(), moves.end());
  std::vector<std::pair<EventIndex, std::vector<StateId>>> out;
  for (std::size_t k = 0; k < moves.size();) {
    std::size_t j = k;
    std::vector<StateId> targets;
    while (j < moves.size() && moves[j].first == moves[k].first) {
      if (targets.empty() || targets.back() != moves[j].second) targets.push_back(moves[j].second);
      ++j;
    }
    out.emplace_back(moves[k].first, closure(std::move(targets)));
    k = j;
  }
  return out;
}

bool ProjectionView::any_marked(const std::vector<StateId>& states) const {
  return std::any_of(states.begin(), states.end(), [&](StateId x) { return a_.is_marked(x); });
}

TimedAutomaton project(const TimedAutomaton& a, const std::set<std::string>& keep) {
  std::set<std::string> erased;
  for (const auto& e : a.alphabet())
    if (!keep.count(e)) erased.insert(e);
  for (const auto& k : keep)
    if (!a.has_event(k))
      throw AutomatonError(a.name() + ": projection keeps '" + k + "' outside the alphabet");
  std::vector<std::string> alphabet(keep.begin(), keep.end());
  std::string name = "P(" + a.name() + ")";
  if (a.empty()) return TimedAutomaton::empty_language(name, alphabet);

  ProjectionView view(a, erased);
  // Source event index -> projected event index (alphabets are both sorted).
  std::vector<EventIndex> target_index(a.alphabet().size(), no_label);
  for (EventIndex k = 0; k < alphabet.size(); ++k) target_index[*a.event_index(alphabet[k])] = k;

  std::unordered_map<std::vector<StateId>, StateId, detail::VectorHash> index;
  std::vector<std::vector<StateId>> subsets;
  std::vector<std::vector<Edge>> adjacency;
  auto intern = [&](std::vector<StateId> s) {
    auto [it, inserted] = index.emplace(s, static_cast<StateId>(subsets.size()));
    if (inserted) {
      subsets.push_back(std::move(s));
      adjacency.emplace_back();
    }
    return it->second;
  };
  intern(view.closure({a.initial()}));
  for (StateId x = 0; x < subsets.size(); ++x) {
    for (auto& [event, next] : view.successors(subsets[x])) {
      StateId t = intern(std::move(next));
      adjacency[x].push_back(Edge{target_index[event], t});
    }
  }
  std::vector<char> marked(subsets.size());
  for (std::size_t x = 0; x < subsets.size(); ++x) marked[x] = view.any_marked(subsets[x]);
  return TimedAutomaton::from_adjacency(std::move(name), std::move(alphabet), std::move(adjacency),
                                        0, std::move(marked));
}

TimedAutomaton erase_events(const TimedAutomaton& a, const std::set<std::string>& erased) {
  std::set<std::string> keep;
  for (const auto& e : a.alphabet())
    if (!erased.count(e)) keep.insert(e);
  return project(a, keep);
}

TimedAutomaton lift(const TimedAutomaton& a, const std::set<std::string>& selfloop_events) {
  std::vector<std::string> extra(selfloop_events.begin(), selfloop_events.end());
  std::vector<std::string> alphabet = alphabet_union(a.alphabet(), extra);
  if (a.empty()) return TimedAutomaton::empty_language(a.name(), alphabet);
  std::vector<std::vector<Edge>> adjacency(a.num_states());
  std::vector<char> marked(a.num_states());
  std::vector<EventIndex> loop_index;
  for (const auto& e : extra)
    loop_index.push_back(static_cast<EventIndex>(
        std::lower_bound(alphabet.begin(), alphabet.end(), e) - alphabet.begin()));
  for (StateId x = 0; x < a.num_states(); ++x) {
    marked[x] = a.is_marked(x);
    for (const Edge& e : a.edges(x)) {
      EventIndex u = static_cast<EventIndex>(
          std::lower_bound(alphabet.begin(), alphabet.end(), a.event_name(e.event)) -
          alphabet.begin());
      adjacency[x].push_back(Edge{u, e.target});
    }
    for (std::size_t k = 0; k < extra.size(); ++k)
      if (!a.step(x, std::string_view(extra[k]))) adjacency[x].push_back(Edge{loop_index[k], x});
  }
  return TimedAutomaton::from_adjacency(a.name(), std::move(alphabet), std::move(adjacency),
                                        a.initial(), std::move(marked));
}

TimedAutomaton relabel(const TimedAutomaton& a, const std::map<std::string, std::string>& mapping) {
  for (const auto& [from, to] : mapping)
    if (!a.has_event(from))
      throw AutomatonError(a.name() + ": relabel key '" + from + "' is not in the alphabet");
  auto rename = [&](const std::string& e) {
    auto it = mapping.find(e);
    return it == mapping.end() ? e : it->second;
  };
  std::vector<std::string> alphabet;
  for (const auto& e : a.alphabet()) alphabet.push_back(rename(e));
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  if (a.empty()) return TimedAutomaton::empty_language(a.name(), alphabet);
  std::vector<EventIndex> new_index(a.alphabet().size());
  for (EventIndex e = 0; e < a.alphabet().size(); ++e)
    new_index[e] = static_cast<EventIndex>(
        std::lower_bound(alphabet.begin(), alphabet.end(), rename(a.alphabet()[e])) -
        alphabet.begin());
  std::vector<std::vector<Edge>> adjacency(a.num_states());
  std::vector<char> marked(a.num_states());
  for (StateId x = 0; x < a.num_states(); ++x) {
    marked[x] = a.is_marked(x);
    for (const Edge& e : a.edges(x)) adjacency[x].push_back(Edge{new_index[e.event], e.target});
  }
  try {
    return TimedAutomaton::from_adjacency(a.name(), std::move(alphabet), std::move(adjacency),
                                          a.initial(), std::move(marked));
  } catch (const AutomatonError& err) {
    throw AutomatonError("relabel would break determinism: " + std::string(err.what()));
  }
}

std::string to_string(LanguageRelation r) {
  switch (r) {
    case LanguageRelation::equal:
      return "equal";
    case LanguageRelation::a_subset_b:
      return "a_subset_b";
    case LanguageRelation::b_subset_a:
      return "b_subset_a";
    case LanguageRelation::incomparable:
      return "incomparable";
  }
  return "incomparable";
}

LanguageComparison language_compare(const TimedAutomaton& a, const TimedAutomaton& b,
                                     LanguageKind kind, const std::string& tick) {
  std::vector<std::string> alphabet = alphabet_union(a.alphabet(), b.alphabet());
  constexpr EventIndex none = no_label;
  std::vector<EventIndex> in_a(alphabet.size(), none), in_b(alphabet.size(), none);
  for (EventIndex u = 0; u < alphabet.size(); ++u) {
    if (auto e = a.event_index(alphabet[u])) in_a[u] = *e;
    if (auto e = b.event_index(alphabet[u])) in_b[u] = *e;
  }
  // Dump states sit one past each automaton's last state.
  const StateId dump_a = static_cast<StateId>(a.num_states());
  const StateId dump_b = static_cast<StateId>(b.num_states());

  std::unordered_map<std::uint64_t, StateId> index;
  std::vector<std::pair<StateId, StateId>> nodes;
  SearchGraph graph;
  auto intern = [&](StateId xa, StateId xb) {
    std::uint64_t key = (std::uint64_t{xa} << 32) | xb;
    auto [it, inserted] = index.emplace(key, static_cast<StateId>(nodes.size()));
    if (inserted) {
      nodes.emplace_back(xa, xb);
      graph.adjacency.emplace_back();
    }
    return it->second;
  };
  auto advance = [&](const TimedAutomaton& m, StateId x, StateId dump, EventIndex e) {
    if (x == dump || e == none) return dump;
    auto t = m.step(x, e);
    return t ? *t : dump;
  };
  intern(a.empty() ? dump_a : a.initial(), b.empty() ? dump_b : b.initial());
  for (StateId n = 0; n < nodes.size(); ++n) {
    auto [xa, xb] = nodes[n];
    if (xa == dump_a && xb == dump_b) continue;
    for (EventIndex u = 0; u < alphabet.size(); ++u) {
      StateId ta = advance(a, xa, dump_a, in_a[u]);
      StateId tb = advance(b, xb, dump_b, in_b[u]);
      if (ta == dump_a && tb == dump_b) continue;
      StateId t = intern(ta, tb);
      graph.adjacency[n].push_back(Edge{u, t});
    }
  }
  auto in_language = [&](const TimedAutomaton& m, StateId x, StateId dump) {
    if (x == dump) return false;
    return kind == LanguageKind::closed || m.is_marked(x);
  };
  std::vector<char> a_only(nodes.size()), b_only(nodes.size());
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    bool ia = in_language(a, nodes[n].first, dump_a);
    bool ib = in_language(b, nodes[n].second, dump_b);
    a_only[n] = ia && !ib;
    b_only[n] = ib && !ia;
  }
  auto tick_it = std::lower_bound(alphabet.begin(), alphabet.end(), tick);
  EventIndex tick_label = (tick_it != alphabet.end() && *tick_it == tick)
                              ? static_cast<EventIndex>(tick_it - alphabet.begin())
                              : none;
  auto witness_for = [&](const std::vector<char>& target) -> std::optional<WitnessString> {
    auto labels = shortest_labels(graph, 0, target, tick_label);
    if (!labels) return std::nullopt;
    std::vector<std::string> events;
    for (EventIndex u : *labels) events.push_back(alphabet[u]);
    return WitnessString::make(std::move(events), tick);
  };
  LanguageComparison out;
  out.a_minus_b = witness_for(a_only);
  out.b_minus_a = witness_for(b_only);
  if (!out.a_minus_b && !out.b_minus_a)
    out.relation = LanguageRelation::equal;
  else if (!out.a_minus_b)
    out.relation = LanguageRelation::a_subset_b;
  else if (!out.b_minus_a)
    out.relation = LanguageRelation::b_subset_a;
  else
    out.relation = LanguageRelation::incomparable;
  out.witness = out.a_minus_b ? out.a_minus_b : out.b_minus_a;
  return out;
}

std::vector<std::string> eligible_events(const TimedAutomaton& a, StateId x) {
  if (x >= a.num_states()) throw AutomatonError(a.name() + ": state out of range");
  std::vector<std::string> out;
  for (const Edge& e : a.edges(x)) out.push_back(a.event_name(e.event));
  return out;
}

}  // namespace tdes
