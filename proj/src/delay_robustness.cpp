#include "tdes/delay_robustness.hpp"

#include <algorithm>
#include <climits>
#include <unordered_map>

#include "detail/hashing.hpp"

namespace tdes {

std::string to_string(FailedCondition c) {
  switch (c) {
    case FailedCondition::observer:
      return "observer";
    case FailedCondition::correctness:
      return "correctness";
    case FailedCondition::completeness:
      return "completeness";
    case FailedCondition::channel_controllability:
      return "channel_controllability";
  }
  return "observer";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::delay_robust:
      return "delay_robust";
    case Verdict::bounded:
      return "bounded";
    case Verdict::zero_tolerance:
      return "zero_tolerance";
    case Verdict::cap_exceeded:
      return "cap_exceeded";
  }
  return "delay_robust";
}

long long theoretical_delay_cap(std::size_t m) {
  if (m == 0) return 0;
  // 2^m * m, saturated.
  if (m >= 31) return INT_MAX;
  long long v = (1LL << m) * static_cast<long long>(m);
  return std::min<long long>(v, INT_MAX);
}

ConditionCheck check_correct_complete(const ChanneledSystem& cs, const TimedAutomaton& sup) {
  ConditionCheck out;
  const TimedAutomaton& y = cs.sup_prime;
  out.sup_prime_states = y.num_states();

  // Joint subset exploration of P L(SUP') against L(SUP). Only nodes where
  // both sides are alive are expanded: every shortest discrepancy of the
  // closed languages ends one step past such a node, and the marked
  // languages are only compared once the closed ones agree.
  std::vector<std::string> kept;
  for (const auto& e : y.alphabet())
    if (!cs.erased_events.count(e)) kept.push_back(e);
  std::vector<std::string> alphabet = alphabet_union(kept, sup.alphabet());
  std::vector<EventIndex> label_of_y(y.alphabet().size(), no_label);
  std::vector<EventIndex> label_of_sup(sup.alphabet().size(), no_label);
  for (EventIndex u = 0; u < alphabet.size(); ++u) {
    if (auto e = y.event_index(alphabet[u]); e && !cs.erased_events.count(alphabet[u]))
      label_of_y[*e] = u;
    if (auto e = sup.event_index(alphabet[u])) label_of_sup[*e] = u;
  }
  const StateId dump = no_label;
  constexpr StateId empty_subset = 0;

  ProjectionView view(y, cs.erased_events);
  std::unordered_map<std::vector<StateId>, StateId, detail::VectorHash> subset_index;
  std::vector<std::vector<StateId>> subsets;
  auto intern_subset = [&](std::vector<StateId> u) {
    auto [it, inserted] = subset_index.emplace(std::move(u), static_cast<StateId>(subsets.size()));
    if (inserted) subsets.push_back(it->first);
    return it->second;
  };
  intern_subset({});
  std::unordered_map<std::uint64_t, StateId> node_index;
  std::vector<std::pair<StateId, StateId>> nodes;  // (SUP state or dump, subset id)
  SearchGraph graph;
  auto intern_node = [&](StateId x, StateId sid) {
    std::uint64_t key = (std::uint64_t{x} << 32) | sid;
    auto [it, inserted] = node_index.emplace(key, static_cast<StateId>(nodes.size()));
    if (inserted) {
      nodes.emplace_back(x, sid);
      graph.adjacency.emplace_back();
    }
    return it->second;
  };
  intern_node(sup.empty() ? dump : sup.initial(),
              y.empty() ? empty_subset : intern_subset(view.closure({y.initial()})));
  for (StateId n = 0; n < nodes.size(); ++n) {
    auto [x, sid] = nodes[n];
    if (x == dump || sid == empty_subset) continue;
    std::vector<std::pair<EventIndex, StateId>> moves;  // (label, subset id)
    for (auto& [e, next] : view.successors(subsets[sid]))
      moves.emplace_back(label_of_y[e], intern_subset(std::move(next)));
    std::sort(moves.begin(), moves.end());
    std::vector<std::pair<EventIndex, StateId>> sup_moves;
    for (const Edge& e : sup.edges(x)) sup_moves.emplace_back(label_of_sup[e.event], e.target);
    std::sort(sup_moves.begin(), sup_moves.end());
    std::size_t i = 0, j = 0;
    while (i < moves.size() || j < sup_moves.size()) {
      EventIndex u;
      StateId tx = dump, tsid = empty_subset;
      if (j == sup_moves.size() || (i < moves.size() && moves[i].first < sup_moves[j].first)) {
        u = moves[i].first;
        tsid = moves[i++].second;
      } else if (i == moves.size() || sup_moves[j].first < moves[i].first) {
        u = sup_moves[j].first;
        tx = sup_moves[j++].second;
      } else {
        u = moves[i].first;
        tsid = moves[i++].second;
        tx = sup_moves[j++].second;
      }
      StateId target = intern_node(tx, tsid);
      graph.adjacency[n].push_back(Edge{u, target});
    }
  }

  std::vector<char> closed_extra(nodes.size()), closed_missing(nodes.size());
  std::vector<char> marked_extra(nodes.size()), marked_missing(nodes.size());
  bool included = true;
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    auto [x, sid] = nodes[n];
    bool in_y = sid != empty_subset;
    bool in_sup = x != dump;
    bool my = in_y && view.any_marked(subsets[sid]);
    bool mx = in_sup && sup.is_marked(x);
    closed_extra[n] = in_y && !in_sup;
    closed_missing[n] = in_sup && !in_y;
    marked_extra[n] = my && !mx;
    marked_missing[n] = mx && !my;
    if (closed_missing[n] || marked_missing[n]) included = false;
  }
  out.inclusion_holds = included;

  auto tick_it = std::lower_bound(alphabet.begin(), alphabet.end(), cs.tick);
  EventIndex tick_label = (tick_it != alphabet.end() && *tick_it == cs.tick)
                              ? static_cast<EventIndex>(tick_it - alphabet.begin())
                              : no_label;
  auto try_fail = [&](FailedCondition c, const std::vector<char>& target) {
    auto labels = shortest_labels(graph, 0, target, tick_label);
    if (!labels) return false;
    std::vector<std::string> events;
    for (EventIndex u : *labels) events.push_back(alphabet[u]);
    out.passed = false;
    out.failed = c;
    out.witness = WitnessString::make(std::move(events), cs.tick);
    return true;
  };
  try_fail(FailedCondition::correctness, closed_extra) ||
      try_fail(FailedCondition::completeness, closed_missing) ||
      try_fail(FailedCondition::correctness, marked_extra) ||
      try_fail(FailedCondition::completeness, marked_missing);
  return out;
}

ConditionCheck check_observer(const ChanneledSystem& cs, const TimedAutomaton& sup) {
  ConditionCheck out;
  const TimedAutomaton& y = cs.sup_prime;
  out.sup_prime_states = y.num_states();
  if (y.empty() || sup.empty()) return out;

  constexpr EventIndex none = no_label;
  constexpr EventIndex erased = no_label - 1;
  // SUP' event -> SUP event (or erased / none when SUP lacks the event).
  std::vector<EventIndex> to_sup(y.alphabet().size(), none);
  for (EventIndex e = 0; e < y.alphabet().size(); ++e) {
    const std::string& name = y.event_name(e);
    if (cs.erased_events.count(name))
      to_sup[e] = erased;
    else if (auto u = sup.event_index(name))
      to_sup[e] = *u;
  }
  std::vector<EventIndex> to_y(sup.alphabet().size(), none);
  for (EventIndex u = 0; u < sup.alphabet().size(); ++u)
    if (auto e = y.event_index(sup.event_name(u))) to_y[u] = *e;

  // Reachable pairs (SUP' state after s, SUP state after Ps).
  std::unordered_map<std::uint64_t, StateId> pair_index;
  std::vector<std::pair<StateId, StateId>> pairs;
  SearchGraph pair_graph;
  auto intern_pair = [&](StateId yy, StateId xx) {
    std::uint64_t key = (std::uint64_t{yy} << 32) | xx;
    auto [it, inserted] = pair_index.emplace(key, static_cast<StateId>(pairs.size()));
    if (inserted) {
      pairs.emplace_back(yy, xx);
      pair_graph.adjacency.emplace_back();
    }
    return it->second;
  };
  intern_pair(y.initial(), sup.initial());
  for (StateId n = 0; n < pairs.size(); ++n) {
    auto [yy, xx] = pairs[n];
    for (const Edge& e : y.edges(yy)) {
      StateId xt = xx;
      if (to_sup[e.event] == none) continue;
      if (to_sup[e.event] != erased) {
        auto t = sup.step(xx, to_sup[e.event]);
        if (!t) continue;  // Ps leaves L(SUP): the condition holds vacuously
        xt = *t;
      }
      StateId target = intern_pair(e.target, xt);
      pair_graph.adjacency[n].push_back(Edge{e.event, target});
    }
  }

  // Nodes (x, U): U is the set of SUP' states reachable from y by strings
  // whose projection equals the SUP string leading from the start x to here.
  ProjectionView view(y, cs.erased_events);
  auto coreach = coreachable_states(sup);
  std::unordered_map<std::vector<StateId>, StateId, detail::VectorHash> subset_index;
  std::vector<std::vector<StateId>> subsets;
  auto intern_subset = [&](std::vector<StateId> s) {
    auto [it, inserted] = subset_index.emplace(std::move(s), static_cast<StateId>(subsets.size()));
    if (inserted) subsets.push_back(it->first);
    return it->second;
  };
  std::unordered_map<std::uint64_t, StateId> node_index;
  std::vector<std::pair<StateId, StateId>> nodes;  // (x, subset id)
  SearchGraph node_graph;
  auto intern_node = [&](StateId xx, StateId sid) {
    std::uint64_t key = (std::uint64_t{xx} << 32) | sid;
    auto [it, inserted] = node_index.emplace(key, static_cast<StateId>(nodes.size()));
    if (inserted) {
      nodes.emplace_back(xx, sid);
      node_graph.adjacency.emplace_back();
    }
    return it->second;
  };
  std::vector<StateId> start_of_pair(pairs.size(), no_label);
  for (StateId n = 0; n < pairs.size(); ++n) {
    auto [yy, xx] = pairs[n];
    if (!coreach[xx]) continue;
    start_of_pair[n] = intern_node(xx, intern_subset(view.closure({yy})));
  }
  for (StateId k = 0; k < nodes.size(); ++k) {
    auto [xx, sid] = nodes[k];
    for (const Edge& e : sup.edges(xx)) {
      if (!coreach[e.target]) continue;
      std::vector<StateId> next;
      if (to_y[e.event] != none) next = view.step(subsets[sid], to_y[e.event]);
      StateId target = intern_node(e.target, intern_subset(std::move(next)));
      node_graph.adjacency[k].push_back(Edge{e.event, target});
    }
  }
  std::vector<char> unmatched(nodes.size(), 0);
  for (StateId k = 0; k < nodes.size(); ++k)
    unmatched[k] = sup.is_marked(nodes[k].first) && !view.any_marked(subsets[nodes[k].second]);

  // Nodes that can reach an unmatched marked node.
  std::vector<std::vector<StateId>> reverse(nodes.size());
  for (StateId k = 0; k < nodes.size(); ++k)
    for (const Edge& e : node_graph.adjacency[k]) reverse[e.target].push_back(k);
  std::vector<char> failing = unmatched;
  std::vector<StateId> stack;
  for (StateId k = 0; k < nodes.size(); ++k)
    if (failing[k]) stack.push_back(k);
  while (!stack.empty()) {
    StateId k = stack.back();
    stack.pop_back();
    for (StateId p : reverse[k])
      if (!failing[p]) {
        failing[p] = 1;
        stack.push_back(p);
      }
  }

  std::vector<char> bad_pair(pairs.size(), 0);
  bool any = false;
  for (StateId n = 0; n < pairs.size(); ++n)
    if (start_of_pair[n] != no_label && failing[start_of_pair[n]]) bad_pair[n] = any = true;
  if (!any) return out;

  out.passed = false;
  out.failed = FailedCondition::observer;
  auto y_tick = y.event_index(cs.tick).value_or(no_label);
  auto s_labels = shortest_labels(pair_graph, 0, bad_pair, y_tick);
  std::vector<std::string> s_events;
  StateId at = 0;
  for (EventIndex e : *s_labels) {
    s_events.push_back(y.event_name(e));
    for (const Edge& edge : pair_graph.adjacency[at])
      if (edge.event == e) {
        at = edge.target;
        break;
      }
  }
  out.witness = WitnessString::make(std::move(s_events), cs.tick);
  auto x_tick = sup.event_index(cs.tick).value_or(no_label);
  auto w_labels = shortest_labels(node_graph, start_of_pair[at], unmatched, x_tick);
  std::vector<std::string> w_events;
  for (EventIndex u : *w_labels) w_events.push_back(sup.event_name(u));
  out.continuation = WitnessString::make(std::move(w_events), cs.tick);
  return out;
}

ConditionCheck check_channel_controllability(const ChanneledSystem& cs) {
  ConditionCheck out;
  Product p = product_with_components(cs.nsup, cs.channel);
  const TimedAutomaton& a = p.automaton;
  out.sup_prime_states = a.num_states();
  const std::string& sigma = cs.spec.event;
  std::vector<char> bad(a.num_states(), 0);
  bool any = false;
  for (StateId x = 0; x < a.num_states(); ++x) {
    auto [xn, xc] = p.components[x];
    if (cs.nsup.step(xn, std::string_view(sigma)) && !cs.channel.step(xc, std::string_view(sigma)))
      bad[x] = any = true;
  }
  if (!any) return out;
  out.passed = false;
  out.failed = FailedCondition::channel_controllability;
  auto w = shortest_word(a, a.initial(), bad, cs.tick);
  w->events.push_back(sigma);
  out.witness = WitnessString::make(std::move(w->events), cs.tick);
  return out;
}

DelayAnalyzer::DelayAnalyzer(const DistributedProject& project,
                             std::vector<ChannelSpec> chosen_channels)
    : project_(&project),
      chosen_(std::move(chosen_channels)),
      sup_(project.supervisor_or_synthesize()),
      tick_(project.event_table.tick()) {
  for (const auto& a : project.agents) sup_k_.emplace(a.id, project.local_behavior(a.id));
}

DelayAnalyzer DelayAnalyzer::extended(const ChannelSpec& chosen) const {
  DelayAnalyzer copy = *this;
  copy.chosen_.push_back(chosen);
  return copy;
}

void DelayAnalyzer::validate_channel(const ChannelSpec& spec) const {
  if (!project_->has_agent(spec.sender) || !project_->has_agent(spec.receiver))
    throw ProjectError("channel " + spec.label() + " names an unknown agent");
  if (spec.sender == spec.receiver)
    throw ProjectError("channel " + spec.label() + " connects an agent to itself");
  auto comm = communication_events(*project_);
  if (!comm[{spec.sender, spec.receiver}].count(spec.event))
    throw ProjectError("event '" + spec.event + "' is not sent by " + spec.sender + " to " +
                       spec.receiver);
  if (const auto* b = std::get_if<Bounded>(&spec.regime); b && b->delay < 1)
    throw ProjectError("delay bound must be at least 1");
  if (const auto* c = std::get_if<Capacity>(&spec.regime); c && c->capacity < 1)
    throw ProjectError("channel capacity must be at least 1");
  if (spec.signal.empty() || sup_.has_event(spec.signal))
    throw ProjectError("signal event '" + spec.signal + "' clashes with the system alphabet");
  for (const auto& c : chosen_) {
    if (c.sender == spec.sender && c.event == spec.event && c.receiver == spec.receiver)
      throw ProjectError("channel " + spec.label() + " is already in the system");
    if (c.signal == spec.signal)
      throw ProjectError("signal event '" + spec.signal + "' is already used by " + c.label());
  }
}

ChanneledSystem DelayAnalyzer::assemble(const std::vector<ChannelSpec>& channels,
                                        std::size_t focus) const {
  ChanneledSystem cs;
  cs.spec = channels.at(focus);
  cs.sup_k = sup_k_;
  cs.tick = tick_;
  std::vector<TimedAutomaton> parts;
  for (const auto& agent : project_->agents) {
    std::map<std::string, std::string> mapping;
    for (const auto& c : channels)
      if (c.receiver == agent.id) mapping[c.event] = c.signal;
    parts.push_back(relabel(sup_k_.at(agent.id), mapping));
  }
  for (std::size_t k = 0; k < channels.size(); ++k) {
    cs.erased_events.insert(channels[k].signal);
    if (k != focus) parts.push_back(channel_automaton(channels[k], tick_));
  }
  cs.nsup = sync_product(parts).renamed("NSUP");
  cs.channel = channel_automaton(cs.spec, tick_);
  cs.sup_prime = sync_product(cs.nsup, cs.channel).renamed("SUP'");
  return cs;
}

ChanneledSystem DelayAnalyzer::build(const ChannelSpec& spec) const {
  validate_channel(spec);
  std::vector<ChannelSpec> channels = chosen_;
  channels.push_back(spec);
  return assemble(channels, channels.size() - 1);
}

ConditionCheck DelayAnalyzer::check_correct_complete(const ChanneledSystem& cs) const {
  return tdes::check_correct_complete(cs, sup_);
}

ConditionCheck DelayAnalyzer::check_observer(const ChanneledSystem& cs) const {
  return tdes::check_observer(cs, sup_);
}

ConditionCheck DelayAnalyzer::check_channel_controllability(const ChanneledSystem& cs) const {
  return tdes::check_channel_controllability(cs);
}

ConditionCheck DelayAnalyzer::check_all(const ChanneledSystem& cs) const {
  ConditionCheck equalities = check_correct_complete(cs);
  ConditionCheck result = check_observer(cs);
  if (result.passed) result = equalities;
  if (result.passed) result = check_channel_controllability(cs);
  result.inclusion_holds = equalities.inclusion_holds;
  result.sup_prime_states = cs.sup_prime.num_states();
  return result;
}

ConditionCheck DelayAnalyzer::verify(const ChannelSpec& spec) const {
  return check_all(build(spec));
}

VerificationReport DelayAnalyzer::max_delay_bound(const ChannelSpec& unbounded_spec,
                                                  const DelayOptions& options) const {
  ChannelSpec base = unbounded_spec;
  base.regime = Unbounded{};
  VerificationReport report;
  report.triple = base;
  std::size_t m = build(base).sup_prime.num_states();
  long long limit = theoretical_delay_cap(m);
  if (!options.theoretical_cap) limit = std::min<long long>(limit, options.cap);
  report.cap_used = static_cast<int>(limit);
  for (int d = 1; d <= limit; ++d) {
    ChannelSpec bounded = base;
    bounded.regime = Bounded{d};
    ConditionCheck check = verify(bounded);
    ++report.systems_built;
    if (!check.inclusion_holds) ++report.inclusion_violations;
    if (!check.passed) {
      report.d_max = d - 1;
      report.verdict = d > 1 ? Verdict::bounded : Verdict::zero_tolerance;
      report.failed_condition = check.failed;
      report.witness = check.witness;
      report.continuation = check.continuation;
      return report;
    }
  }
  report.verdict = Verdict::cap_exceeded;
  return report;
}

VerificationReport DelayAnalyzer::classify(const ChannelSpec& unbounded_spec,
                                           const DelayOptions& options) const {
  ChannelSpec base = unbounded_spec;
  base.regime = Unbounded{};
  ConditionCheck unbounded = verify(base);
  if (unbounded.passed) {
    VerificationReport report;
    report.triple = base;
    report.verdict = Verdict::delay_robust;
    report.systems_built = 1;
    report.inclusion_violations = unbounded.inclusion_holds ? 0 : 1;
    report.cap_used = options.theoretical_cap
                          ? static_cast<int>(theoretical_delay_cap(unbounded.sup_prime_states))
                          : options.cap;
    return report;
  }
  VerificationReport report = max_delay_bound(base, options);
  ++report.systems_built;
  if (!unbounded.inclusion_holds) ++report.inclusion_violations;
  return report;
}

ConditionCheck DelayAnalyzer::verify_composition() const {
  if (chosen_.empty()) {
    ConditionCheck out;
    auto eq = control_equivalent(*project_);
    out.passed = eq.equivalent;
    if (!eq.equivalent) {
      out.failed = FailedCondition::correctness;
      out.witness = eq.witness;
    }
    return out;
  }
  ChanneledSystem whole = assemble(chosen_, 0);
  ConditionCheck equalities = check_correct_complete(whole);
  ConditionCheck result = check_observer(whole);
  if (result.passed) result = equalities;
  for (std::size_t k = 0; k < chosen_.size() && result.passed; ++k)
    result = check_channel_controllability(assemble(chosen_, k));
  result.inclusion_holds = equalities.inclusion_holds;
  result.sup_prime_states = whole.sup_prime.num_states();
  return result;
}

ChannelSpec channel_spec(const DistributedProject& project, const std::string& sender,
                         const std::string& event, const std::string& receiver,
                         ChannelRegime regime) {
  std::string signal = project.event_table.signal_of(event).value_or(event + "'");
  return ChannelSpec{sender, event, receiver, signal, regime};
}

ChanneledSystem build_channeled(const DistributedProject& project, const ChannelSpec& spec) {
  return DelayAnalyzer(project).build(spec);
}

ConditionCheck verify_delay_robust(const DistributedProject& project, const ChannelSpec& spec) {
  ChannelSpec s = spec;
  s.regime = Unbounded{};
  return DelayAnalyzer(project).verify(s);
}

ConditionCheck verify_bounded(const DistributedProject& project, const ChannelSpec& spec, int d) {
  if (d < 1) throw ProjectError("delay bound must be at least 1");
  ChannelSpec s = spec;
  s.regime = Bounded{d};
  return DelayAnalyzer(project).verify(s);
}

VerificationReport max_delay_bound(const DistributedProject& project, const ChannelSpec& spec,
                                   const DelayOptions& options) {
  return DelayAnalyzer(project).max_delay_bound(spec, options);
}

VerificationReport classify_event(const DistributedProject& project, const ChannelSpec& spec,
                                  const DelayOptions& options) {
  return DelayAnalyzer(project).classify(spec, options);
}

std::vector<AgentPair> default_pair_order(const DistributedProject& project) {
  auto comm = communication_events(project);
  std::vector<AgentPair> out;
  for (const auto& j : project.agents)
    for (const auto& i : project.agents) {
      if (i.id == j.id) continue;
      if (!comm[{j.id, i.id}].empty()) out.emplace_back(j.id, i.id);
    }
  return out;
}

EventOrder default_event_order(const DistributedProject& project) {
  EventOrder out;
  for (const auto& [pair, events] : communication_events(project))
    if (!events.empty()) out[pair] = std::vector<std::string>(events.begin(), events.end());
  return out;
}

ChannelPlan plan_channels(const DistributedProject& project, const std::vector<AgentPair>& pair_order,
                          const EventOrder& event_order, const DelayOptions& options) {
  auto comm = communication_events(project);
  std::set<AgentPair> listed;
  for (const auto& pair : pair_order) {
    if (!listed.insert(pair).second)
      throw ProjectError("pair (" + pair.first + "," + pair.second + ") is listed twice");
    auto it = comm.find(pair);
    if (it == comm.end()) throw ProjectError("unknown agent pair in ordering");
    auto ev = event_order.find(pair);
    std::set<std::string> ordered;
    if (ev != event_order.end()) ordered.insert(ev->second.begin(), ev->second.end());
    if (ordered != it->second || (ev != event_order.end() && ev->second.size() != ordered.size()))
      throw ProjectError("event order for (" + pair.first + "," + pair.second +
                         ") must list exactly its communication events");
  }
  for (const auto& [pair, events] : comm)
    if (!events.empty() && !listed.count(pair))
      throw ProjectError("pair order omits (" + pair.first + "," + pair.second + ")");

  ChannelPlan plan;
  DelayAnalyzer analyzer(project);
  for (const auto& pair : pair_order) {
    auto ev = event_order.find(pair);
    if (ev == event_order.end()) continue;
    for (const auto& event : ev->second) {
      ChannelSpec spec = channel_spec(project, pair.first, event, pair.second);
      // A second receiver of the same event needs its own signal event.
      auto clashes = [&](const std::string& s) {
        return std::any_of(plan.chosen.begin(), plan.chosen.end(),
                           [&](const ChannelSpec& c) { return c.signal == s; });
      };
      if (clashes(spec.signal)) {
        std::string fresh = spec.signal + pair.second;
        while (clashes(fresh) || analyzer.supervisor().has_event(fresh)) fresh += "'";
        spec.signal = fresh;
      }
      PlanEntry entry;
      entry.report = analyzer.classify(spec, options);
      entry.channel = spec;
      if (entry.report.verdict == Verdict::delay_robust) {
        entry.chosen = true;
      } else if (entry.report.verdict == Verdict::bounded) {
        entry.channel.regime = Bounded{*entry.report.d_max};
        entry.chosen = true;
      }
      if (entry.chosen) {
        plan.chosen.push_back(entry.channel);
        analyzer = analyzer.extended(entry.channel);
      }
      plan.entries.push_back(std::move(entry));
    }
  }
  plan.composition = analyzer.verify_composition();
  return plan;
}

}  // namespace tdes
