#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tdes/automaton.hpp"
#include "tdes/event_table.hpp"
#include "tdes/operations.hpp"
#include "tdes/witness.hpp"

namespace tdes {

class ProjectError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ControllabilityStatus { controllable, uncontrollable, not_sublanguage };

struct ControllabilityResult {
  ControllabilityStatus status = ControllabilityStatus::controllable;
  /// For `uncontrollable`: shortest string reaching the violation followed by
  /// the offending event. For `not_sublanguage`: shortest string of L(f)-L(g).
  std::optional<WitnessString> witness;
  std::optional<std::string> event;

  bool controllable() const { return status == ControllabilityStatus::controllable; }
};

/// Timed controllability of L(f) with respect to g: uncontrollable events
/// eligible in g stay eligible in f, and tick may be disabled only where f
/// keeps some forcible event eligible.
ControllabilityResult is_controllable(const TimedAutomaton& f, const TimedAutomaton& g,
                                      const EventTable& table);

/// Supremal controllable and nonblocking sublanguage of Lm(e) ∩ Lm(g).
/// Events of g absent from e are treated as selflooped in e.
TimedAutomaton supcon(const TimedAutomaton& g, const TimedAutomaton& e, const EventTable& table);

/// A local controller (for a prohibitible event) or local preemptor (for a
/// forcible event), given with its communication selfloops already applied.
struct LocalController {
  std::string event;
  TimedAutomaton automaton;
};

struct AgentSpec {
  std::string id;
  TimedAutomaton model;
  std::set<std::string> hib_events;
  std::set<std::string> for_events;
  std::vector<LocalController> controllers;
  std::vector<LocalController> preemptors;

  std::set<std::string> alphabet() const;
};

/// Builds an agent and derives its prohibitible and forcible sets from the table.
AgentSpec make_agent(std::string id, TimedAutomaton model, const EventTable& table,
                     std::vector<LocalController> controllers = {},
                     std::vector<LocalController> preemptors = {});

struct DistributedProject {
  std::string name;
  std::vector<AgentSpec> agents;
  EventTable event_table;
  std::vector<TimedAutomaton> spec_models;
  std::optional<TimedAutomaton> supervisor;

  const AgentSpec& agent(const std::string& id) const;
  bool has_agent(const std::string& id) const;
  TimedAutomaton plant() const;
  /// Agent models composed with their controllers and preemptors (SUP_k).
  TimedAutomaton local_behavior(const std::string& agent_id) const;
  /// The supervisor, synthesized from the plant and specs when absent.
  TimedAutomaton supervisor_or_synthesize() const;
  /// Checks the structural invariants; throws ProjectError.
  void validate() const;
};

/// Adds, at each controller state, a selfloop for every communication event
/// (controller events outside the owning agent's alphabet) left undefined.
TimedAutomaton apply_communication_selfloops(const TimedAutomaton& controller,
                                             const std::set<std::string>& agent_alphabet);

/// Monolithic supervisor of the project: supcon(plant, || specs).
TimedAutomaton synthesize(const DistributedProject& project);

struct EquivalenceResult {
  bool equivalent = true;
  std::optional<LanguageKind> failed;
  std::optional<WitnessString> witness;
};

/// Control equivalence of the distributed controllers and preemptors with
/// the monolithic supervisor, on closed and marked behavior.
EquivalenceResult control_equivalent(const DistributedProject& project);

using AgentPair = std::pair<std::string, std::string>;  // (sender j, receiver i)

/// Events each sender j must send to each receiver i, for every ordered pair
/// of distinct agents (empty sets included).
std::map<AgentPair, std::set<std::string>> communication_events(const DistributedProject& project);

/// Events receiver i imports from other agents.
std::set<std::string> imported_events(const DistributedProject& project, const std::string& receiver);

}  // namespace tdes
