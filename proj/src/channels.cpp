#include "tdes/channels.hpp"

#include <stdexcept>

namespace tdes {

namespace {

void check_events(const ChannelSpec& spec, const std::string& tick) {
  if (spec.event.empty() || spec.signal.empty())
    throw std::invalid_argument("channel needs both an event and a signal event");
  if (spec.event == spec.signal || spec.event == tick || spec.signal == tick)
    throw std::invalid_argument("channel events must be distinct from each other and from tick");
}

std::string args(const ChannelSpec& spec) {
  return "(" + spec.sender + "," + spec.event + "," + spec.receiver + ")";
}

}  // namespace

std::string ChannelSpec::label() const {
  if (const auto* b = std::get_if<Bounded>(&regime)) return "CH_" + std::to_string(b->delay) + args(*this);
  if (const auto* c = std::get_if<Capacity>(&regime))
    return "NCH_" + std::to_string(c->capacity) + args(*this);
  return "CH" + args(*this);
}

ChannelSpec unbounded_channel(std::string sender, std::string event, std::string receiver,
                              std::string signal) {
  return ChannelSpec{std::move(sender), std::move(event), std::move(receiver), std::move(signal),
                     Unbounded{}};
}

ChannelSpec bounded_channel(std::string sender, std::string event, std::string receiver,
                            std::string signal, int delay) {
  return ChannelSpec{std::move(sender), std::move(event), std::move(receiver), std::move(signal),
                     Bounded{delay}};
}

TimedAutomaton make_channel(const ChannelSpec& spec, const std::string& tick) {
  check_events(spec, tick);
  return TimedAutomaton(spec.label(), {spec.event, spec.signal, tick}, 2, 0, {0},
                        {{0, tick, 0}, {0, spec.event, 1}, {1, tick, 1}, {1, spec.signal, 0}});
}

TimedAutomaton make_channel_bounded(const ChannelSpec& spec, const std::string& tick) {
  check_events(spec, tick);
  const auto* bounded = std::get_if<Bounded>(&spec.regime);
  int d = bounded ? bounded->delay : 0;
  if (d < 1) throw std::invalid_argument("bounded channel needs a delay bound d >= 1");
  const auto last = static_cast<StateId>(d + 1);
  std::vector<Transition> ts{{0, tick, 0}, {0, spec.event, 1}};
  for (StateId k = 1; k <= last; ++k) {
    if (k < last) ts.push_back({k, tick, k + 1});
    ts.push_back({k, spec.signal, 0});
  }
  return TimedAutomaton(spec.label(), {spec.event, spec.signal, tick}, last + 1, 0, {0}, ts);
}

TimedAutomaton make_channel_capacity(const ChannelSpec& spec, const std::string& tick) {
  check_events(spec, tick);
  const auto* cap = std::get_if<Capacity>(&spec.regime);
  int c = cap ? cap->capacity : 0;
  if (c < 1) throw std::invalid_argument("capacity channel needs a capacity C >= 1");
  const auto top = static_cast<StateId>(c);
  std::vector<Transition> ts;
  for (StateId k = 0; k <= top; ++k) {
    ts.push_back({k, tick, k});
    if (k < top) ts.push_back({k, spec.event, k + 1});
    if (k >= 1) ts.push_back({k, spec.signal, k - 1});
  }
  return TimedAutomaton(spec.label(), {spec.event, spec.signal, tick}, top + 1, 0, {0}, ts);
}

TimedAutomaton channel_automaton(const ChannelSpec& spec, const std::string& tick) {
  if (std::holds_alternative<Bounded>(spec.regime)) return make_channel_bounded(spec, tick);
  if (std::holds_alternative<Capacity>(spec.regime)) return make_channel_capacity(spec, tick);
  return make_channel(spec, tick);
}

}  // namespace tdes
