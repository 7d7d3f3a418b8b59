#include "tdes/supervisory.hpp"

#include <algorithm>

namespace tdes {

namespace {

struct EventFlags {
  std::vector<char> uncontrollable;
  std::vector<char> forcible;
  EventIndex tick = no_label;
};

EventFlags flags_for(const std::vector<std::string>& alphabet, const EventTable& table) {
  EventFlags f;
  f.uncontrollable.resize(alphabet.size());
  f.forcible.resize(alphabet.size());
  for (EventIndex u = 0; u < alphabet.size(); ++u) {
    const EventInfo& info = table.info(alphabet[u]);
    f.uncontrollable[u] = info.cls == EventClass::uncontrollable;
    f.forcible[u] = info.forcible;
    if (info.cls == EventClass::tick) f.tick = u;
  }
  return f;
}

}  // namespace

ControllabilityResult is_controllable(const TimedAutomaton& f, const TimedAutomaton& g,
                                      const EventTable& table) {
  if (f.alphabet() != g.alphabet())
    throw AutomatonError("is_controllable: alphabets of '" + f.name() + "' and '" + g.name() +
                         "' differ");
  const std::string& tick = table.tick();
  ControllabilityResult result;
  auto inclusion = language_compare(f, g, LanguageKind::closed, tick);
  if (inclusion.a_minus_b) {
    result.status = ControllabilityStatus::not_sublanguage;
    result.witness = inclusion.a_minus_b;
    return result;
  }
  if (f.empty()) return result;

  Product p = product_with_components(f, g);
  const TimedAutomaton& a = p.automaton;
  EventFlags flags = flags_for(a.alphabet(), table);
  std::vector<char> bad(a.num_states(), 0);
  std::vector<EventIndex> offending(a.num_states(), no_label);
  for (StateId x = 0; x < a.num_states(); ++x) {
    auto [xf, xg] = p.components[x];
    bool forced = false;
    for (const Edge& e : f.edges(xf))
      if (flags.forcible[e.event]) forced = true;
    for (const Edge& e : g.edges(xg)) {
      bool required = flags.uncontrollable[e.event] || (e.event == flags.tick && !forced);
      if (required && !f.step(xf, e.event)) {
        bad[x] = 1;
        offending[x] = e.event;
        break;
      }
    }
  }
  auto witness = shortest_word(a, 0, bad, tick);
  if (!witness) return result;
  StateId at = *a.run(witness->events);
  result.status = ControllabilityStatus::uncontrollable;
  result.event = a.event_name(offending[at]);
  witness->events.push_back(*result.event);
  result.witness = WitnessString::make(std::move(witness->events), tick);
  return result;
}

TimedAutomaton supcon(const TimedAutomaton& g, const TimedAutomaton& e, const EventTable& table) {
  for (const auto& ev : e.alphabet())
    if (!g.has_event(ev))
      throw AutomatonError("supcon: spec event '" + ev + "' is not in the plant alphabet");
  Product p = product_with_components(g, e);
  const TimedAutomaton& a = p.automaton;
  if (a.empty()) return TimedAutomaton::empty_language("SUP", g.alphabet());
  EventFlags flags = flags_for(a.alphabet(), table);
  const std::size_t n = a.num_states();

  // The product alphabet equals g's alphabet, so event indices coincide.
  std::vector<char> alive(n, 1);
  auto trim_alive = [&]() {
    bool changed = false;
    std::vector<char> reach(n, 0);
    std::vector<StateId> stack;
    if (alive[0]) {
      reach[0] = 1;
      stack.push_back(0);
    }
    while (!stack.empty()) {
      StateId x = stack.back();
      stack.pop_back();
      for (const Edge& ed : a.edges(x))
        if (alive[ed.target] && !reach[ed.target]) {
          reach[ed.target] = 1;
          stack.push_back(ed.target);
        }
    }
    std::vector<std::vector<StateId>> reverse(n);
    for (StateId x = 0; x < n; ++x)
      if (reach[x])
        for (const Edge& ed : a.edges(x))
          if (reach[ed.target]) reverse[ed.target].push_back(x);
    std::vector<char> coreach(n, 0);
    for (StateId x = 0; x < n; ++x)
      if (reach[x] && a.is_marked(x)) {
        coreach[x] = 1;
        stack.push_back(x);
      }
    while (!stack.empty()) {
      StateId x = stack.back();
      stack.pop_back();
      for (StateId q : reverse[x])
        if (!coreach[q]) {
          coreach[q] = 1;
          stack.push_back(q);
        }
    }
    for (StateId x = 0; x < n; ++x)
      if (alive[x] && !(reach[x] && coreach[x])) {
        alive[x] = 0;
        changed = true;
      }
    return changed;
  };
  auto remove_bad = [&]() {
    bool changed = false;
    for (StateId x = 0; x < n; ++x) {
      if (!alive[x]) continue;
      StateId xg = p.components[x].first;
      bool forced = false;
      for (const Edge& ed : a.edges(x))
        if (flags.forcible[ed.event] && alive[ed.target]) forced = true;
      for (const Edge& ed : g.edges(xg)) {
        bool required = flags.uncontrollable[ed.event] || (ed.event == flags.tick && !forced);
        if (!required) continue;
        auto t = a.step(x, ed.event);
        if (!t || !alive[*t]) {
          alive[x] = 0;
          changed = true;
          break;
        }
      }
    }
    return changed;
  };
  bool changed = true;
  while (changed) {
    changed = remove_bad();
    changed = trim_alive() || changed;
  }
  return restrict_states(a, alive).renamed("SUP");
}

std::set<std::string> AgentSpec::alphabet() const {
  return std::set<std::string>(model.alphabet().begin(), model.alphabet().end());
}

AgentSpec make_agent(std::string id, TimedAutomaton model, const EventTable& table,
                     std::vector<LocalController> controllers,
                     std::vector<LocalController> preemptors) {
  AgentSpec agent;
  agent.id = std::move(id);
  for (const auto& e : model.alphabet()) {
    if (table.is_prohibitible(e)) agent.hib_events.insert(e);
    if (table.is_forcible(e)) agent.for_events.insert(e);
  }
  agent.model = std::move(model);
  agent.controllers = std::move(controllers);
  agent.preemptors = std::move(preemptors);
  return agent;
}

const AgentSpec& DistributedProject::agent(const std::string& id) const {
  for (const auto& a : agents)
    if (a.id == id) return a;
  throw ProjectError("unknown agent '" + id + "'");
}

bool DistributedProject::has_agent(const std::string& id) const {
  return std::any_of(agents.begin(), agents.end(), [&](const AgentSpec& a) { return a.id == id; });
}

TimedAutomaton DistributedProject::plant() const {
  if (agents.empty()) throw ProjectError("project has no agents");
  std::vector<TimedAutomaton> models;
  for (const auto& a : agents) models.push_back(a.model);
  return sync_product(models).renamed("PLANT");
}

TimedAutomaton DistributedProject::local_behavior(const std::string& agent_id) const {
  const AgentSpec& a = agent(agent_id);
  std::vector<TimedAutomaton> parts{a.model};
  for (const auto& c : a.controllers) parts.push_back(c.automaton);
  for (const auto& c : a.preemptors) parts.push_back(c.automaton);
  return sync_product(parts).renamed("SUP_" + a.id);
}

TimedAutomaton DistributedProject::supervisor_or_synthesize() const {
  if (supervisor) return *supervisor;
  return synthesize(*this);
}

void DistributedProject::validate() const {
  event_table.validate();
  auto check_events = [&](const TimedAutomaton& m) {
    for (const auto& e : m.alphabet())
      if (!event_table.contains(e))
        throw ProjectError("automaton '" + m.name() + "' uses undeclared event '" + e + "'");
  };
  const std::string& tick = event_table.tick();
  for (std::size_t k = 0; k < agents.size(); ++k) {
    const AgentSpec& a = agents[k];
    check_events(a.model);
    if (!a.model.has_event(tick))
      throw ProjectError("agent '" + a.id + "' model lacks the tick event");
    for (const auto& e : a.hib_events)
      if (!a.model.has_event(e) || !event_table.is_prohibitible(e))
        throw ProjectError("agent '" + a.id + "': '" + e + "' is not a prohibitible agent event");
    for (const auto& e : a.for_events)
      if (!a.model.has_event(e) || !event_table.is_forcible(e))
        throw ProjectError("agent '" + a.id + "': '" + e + "' is not a forcible agent event");
    for (const auto& c : a.controllers) {
      check_events(c.automaton);
      if (!a.hib_events.count(c.event))
        throw ProjectError("controller for '" + c.event + "' is not owned by agent '" + a.id + "'");
    }
    for (const auto& c : a.preemptors) {
      check_events(c.automaton);
      if (!a.for_events.count(c.event))
        throw ProjectError("preemptor for '" + c.event + "' is not owned by agent '" + a.id + "'");
    }
    for (std::size_t m = k + 1; m < agents.size(); ++m) {
      if (agents[m].id == a.id) throw ProjectError("duplicate agent id '" + a.id + "'");
      for (const auto& e : agents[m].model.alphabet())
        if (e != tick && a.model.has_event(e))
          throw ProjectError("agents '" + a.id + "' and '" + agents[m].id + "' share event '" +
                             e + "'");
    }
  }
  for (const auto& s : spec_models) check_events(s);
  if (supervisor) check_events(*supervisor);
}

TimedAutomaton apply_communication_selfloops(const TimedAutomaton& controller,
                                             const std::set<std::string>& agent_alphabet) {
  std::set<std::string> foreign;
  for (const auto& e : controller.alphabet())
    if (!agent_alphabet.count(e)) foreign.insert(e);
  return lift(controller, foreign);
}

TimedAutomaton synthesize(const DistributedProject& project) {
  TimedAutomaton plant = project.plant();
  if (project.spec_models.empty()) return trim(plant).renamed("SUP");
  TimedAutomaton spec = sync_product(project.spec_models);
  return supcon(plant, spec, project.event_table);
}

EquivalenceResult control_equivalent(const DistributedProject& project) {
  TimedAutomaton sup = project.supervisor_or_synthesize();
  std::vector<TimedAutomaton> parts;
  for (const auto& a : project.agents) {
    parts.push_back(a.model);
    for (const auto& c : a.controllers) parts.push_back(c.automaton);
    for (const auto& c : a.preemptors) parts.push_back(c.automaton);
  }
  TimedAutomaton joint = sync_product(parts);
  const std::string& tick = project.event_table.tick();
  EquivalenceResult result;
  for (LanguageKind kind : {LanguageKind::closed, LanguageKind::marked}) {
    auto cmp = language_compare(joint, sup, kind, tick);
    if (cmp.relation != LanguageRelation::equal) {
      result.equivalent = false;
      result.failed = kind;
      result.witness = cmp.witness;
      return result;
    }
  }
  return result;
}

std::set<std::string> imported_events(const DistributedProject& project,
                                      const std::string& receiver) {
  const AgentSpec& a = project.agent(receiver);
  std::set<std::string> own = a.alphabet();
  std::set<std::string> out;
  auto collect = [&](const std::vector<LocalController>& list, const std::set<std::string>& owned) {
    for (const auto& c : list) {
      if (!owned.count(c.event)) continue;
      for (const auto& e : c.automaton.alphabet())
        if (!own.count(e)) out.insert(e);
    }
  };
  collect(a.controllers, a.hib_events);
  collect(a.preemptors, a.for_events);
  return out;
}

std::map<AgentPair, std::set<std::string>> communication_events(
    const DistributedProject& project) {
  std::map<AgentPair, std::set<std::string>> out;
  const std::string& tick = project.event_table.tick();
  for (const auto& receiver : project.agents) {
    std::set<std::string> imported = imported_events(project, receiver.id);
    for (const auto& sender : project.agents) {
      if (sender.id == receiver.id) continue;
      std::set<std::string>& events = out[{sender.id, receiver.id}];
      for (const auto& e : imported)
        if (e != tick && sender.model.has_event(e)) events.insert(e);
    }
  }
  return out;
}

}  // namespace tdes
