#pragma once

#include <string>
#include <variant>

#include "tdes/automaton.hpp"
#include "tdes/event_table.hpp"

namespace tdes {

struct Unbounded {
  bool operator==(const Unbounded&) const = default;
};
struct Bounded {
  int delay = 1;
  bool operator==(const Bounded&) const = default;
};
struct Capacity {
  int capacity = 1;
  bool operator==(const Capacity&) const = default;
};

using ChannelRegime = std::variant<Unbounded, Bounded, Capacity>;

/// Channel for event `event` sent by agent `sender` to agent `receiver`.
/// `signal` is the receive-side event sigma'.
struct ChannelSpec {
  std::string sender;
  std::string event;
  std::string receiver;
  std::string signal;
  ChannelRegime regime = Unbounded{};

  /// "CH(j,sigma,i)", "CH_4(j,sigma,i)" or "NCH_2(j,sigma,i)".
  std::string label() const;
  bool operator==(const ChannelSpec&) const = default;
};

ChannelSpec unbounded_channel(std::string sender, std::string event, std::string receiver,
                              std::string signal);
ChannelSpec bounded_channel(std::string sender, std::string event, std::string receiver,
                            std::string signal, int delay);

/// Two states: sigma 0->1, sigma' 1->0, tick selfloops at both; state 0
/// initial and the only marked state.
TimedAutomaton make_channel(const ChannelSpec& spec, const std::string& tick = "tick");

/// States 0..d+1: tick selfloop at 0, sigma 0->1, tick k->k+1 for k=1..d,
/// sigma' k->0 for k=1..d+1. At state d+1 only sigma' is eligible.
TimedAutomaton make_channel_bounded(const ChannelSpec& spec, const std::string& tick = "tick");

/// States 0..C count the instances in flight: sigma k->k+1 (k<C), sigma'
/// k->k-1 (k>=1), tick selfloop everywhere.
TimedAutomaton make_channel_capacity(const ChannelSpec& spec, const std::string& tick = "tick");

/// Dispatches on the spec's regime.
TimedAutomaton channel_automaton(const ChannelSpec& spec, const std::string& tick = "tick");

}  // namespace tdes
