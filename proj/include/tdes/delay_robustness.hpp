#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tdes/automaton.hpp"
#include "tdes/channels.hpp"
#include "tdes/supervisory.hpp"
#include "tdes/witness.hpp"

namespace tdes {

enum class FailedCondition { observer, correctness, completeness, channel_controllability };
std::string to_string(FailedCondition c);

/// The system with one channel inserted between sender and receiver.
struct ChanneledSystem {
  ChannelSpec spec;
  std::map<std::string, TimedAutomaton> sup_k;  // local behavior per agent
  TimedAutomaton nsup;                          // receiver relabeled, previous channels composed
  TimedAutomaton channel;
  TimedAutomaton sup_prime;                     // nsup || channel
  std::set<std::string> erased_events;          // signal events hidden by P
  std::string tick = "tick";
};

/// Outcome of one run of the four delay-robustness conditions.
struct ConditionCheck {
  bool passed = true;
  std::optional<FailedCondition> failed;
  /// Observer failures: the channeled string s. Other failures: the
  /// offending string (projected for correctness/completeness).
  std::optional<WitnessString> witness;
  /// Observer failures only: the continuation w that SUP completes but the
  /// channeled system cannot.
  std::optional<WitnessString> continuation;
  /// L(SUP) ⊆ P L(SUP') and Lm(SUP) ⊆ P Lm(SUP'); expected to always hold.
  bool inclusion_holds = true;
  std::size_t sup_prime_states = 0;
};

enum class Verdict { delay_robust, bounded, zero_tolerance, cap_exceeded };
std::string to_string(Verdict v);

struct VerificationReport {
  ChannelSpec triple;
  Verdict verdict = Verdict::delay_robust;
  /// Empty for delay_robust (infinite) and cap_exceeded.
  std::optional<int> d_max;
  std::optional<FailedCondition> failed_condition;
  std::optional<WitnessString> witness;
  std::optional<WitnessString> continuation;
  int cap_used = 0;
  /// Channeled systems built while producing this report, and how many of
  /// them violated L(SUP) ⊆ P L(SUP').
  int systems_built = 0;
  int inclusion_violations = 0;
};

struct DelayOptions {
  /// Largest bound tried by the maximal-delay search.
  int cap = 64;
  /// Use the 2^m * m termination bound (m = states of the unbounded SUP')
  /// instead of `cap`.
  bool theoretical_cap = false;
};

/// Bound at which the maximal-delay search stops: 2^m * m saturated to int.
long long theoretical_delay_cap(std::size_t sup_prime_states);

/// Caches the local behaviors of a project and evaluates the channel
/// conditions, optionally on top of previously chosen channels.
class DelayAnalyzer {
 public:
  explicit DelayAnalyzer(const DistributedProject& project,
                         std::vector<ChannelSpec> chosen_channels = {});

  /// Copy with one more channel composed into the system.
  DelayAnalyzer extended(const ChannelSpec& chosen) const;

  const TimedAutomaton& supervisor() const { return sup_; }
  const DistributedProject& project() const { return *project_; }
  const std::vector<ChannelSpec>& chosen_channels() const { return chosen_; }

  /// Throws ProjectError when the triple is not a communication event or the
  /// regime parameters are invalid.
  void validate_channel(const ChannelSpec& spec) const;

  ChanneledSystem build(const ChannelSpec& spec) const;

  ConditionCheck check_correct_complete(const ChanneledSystem& cs) const;
  ConditionCheck check_observer(const ChanneledSystem& cs) const;
  ConditionCheck check_channel_controllability(const ChanneledSystem& cs) const;
  /// Observer, then the two equalities, then channel controllability.
  ConditionCheck verify(const ChannelSpec& spec) const;

  VerificationReport max_delay_bound(const ChannelSpec& unbounded_spec,
                                     const DelayOptions& options = {}) const;
  VerificationReport classify(const ChannelSpec& unbounded_spec,
                              const DelayOptions& options = {}) const;

  /// The full composed system with every chosen channel: correctness,
  /// completeness, observer and the controllability of each channel.
  ConditionCheck verify_composition() const;

 private:
  /// Relabels every receiver for all `channels`; composes all channel
  /// automata except `focus` into NSUP and `focus` as the channel.
  ChanneledSystem assemble(const std::vector<ChannelSpec>& channels, std::size_t focus) const;
  ConditionCheck check_all(const ChanneledSystem& cs) const;

  const DistributedProject* project_;
  std::vector<ChannelSpec> chosen_;
  TimedAutomaton sup_;
  std::map<std::string, TimedAutomaton> sup_k_;
  std::string tick_;
};

/// Resolves the signal event from the project's table ("<event>'" when the
/// table declares none).
ChannelSpec channel_spec(const DistributedProject& project, const std::string& sender,
                         const std::string& event, const std::string& receiver,
                         ChannelRegime regime = Unbounded{});

ChanneledSystem build_channeled(const DistributedProject& project, const ChannelSpec& spec);
ConditionCheck check_correct_complete(const ChanneledSystem& cs, const TimedAutomaton& sup);
ConditionCheck check_observer(const ChanneledSystem& cs, const TimedAutomaton& sup);
ConditionCheck check_channel_controllability(const ChanneledSystem& cs);

/// Unbounded delay-robustness of the supervisor for one triple.
ConditionCheck verify_delay_robust(const DistributedProject& project, const ChannelSpec& spec);
/// d-bounded delay-robustness.
ConditionCheck verify_bounded(const DistributedProject& project, const ChannelSpec& spec, int d);
/// Largest d for which verify_bounded passes (searching upward from 1).
VerificationReport max_delay_bound(const DistributedProject& project, const ChannelSpec& spec,
                                   const DelayOptions& options = {});
/// Infinite when delay-robust, else the maximal bound, else zero tolerance.
VerificationReport classify_event(const DistributedProject& project, const ChannelSpec& spec,
                                  const DelayOptions& options = {});

struct PlanEntry {
  ChannelSpec channel;  // regime reflects the chosen channel, if any
  VerificationReport report;
  bool chosen = false;
};

struct ChannelPlan {
  std::vector<PlanEntry> entries;
  std::vector<ChannelSpec> chosen;
  ConditionCheck composition;
};

using EventOrder = std::map<AgentPair, std::vector<std::string>>;

/// Pairs ordered first on the sender, then on the receiver (agent
/// declaration order); only pairs with communication events.
std::vector<AgentPair> default_pair_order(const DistributedProject& project);
/// Each pair's events in ascending id order.
EventOrder default_event_order(const DistributedProject& project);

/// Classifies every channeled event sequentially, composing each chosen
/// channel into the system before the next event is evaluated.
ChannelPlan plan_channels(const DistributedProject& project, const std::vector<AgentPair>& pair_order,
                          const EventOrder& event_order, const DelayOptions& options = {});

}  // namespace tdes
