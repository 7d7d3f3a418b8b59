#include "tdes/event_table.hpp"

#include <set>

namespace tdes {

std::string to_string(EventClass cls) {
  switch (cls) {
    case EventClass::prohibitible:
      return "prohibitible";
    case EventClass::uncontrollable:
      return "uncontrollable";
    case EventClass::tick:
      return "tick";
  }
  return "uncontrollable";
}

EventClass event_class_from_string(const std::string& text) {
  if (text == "prohibitible" || text == "hib") return EventClass::prohibitible;
  if (text == "uncontrollable" || text == "unc") return EventClass::uncontrollable;
  if (text == "tick") return EventClass::tick;
  throw EventTableError("unknown event class '" + text + "'");
}

void EventTable::add(const std::string& id, EventClass cls, bool forcible) {
  if (id.empty()) throw EventTableError("empty event id");
  if (contains(id)) throw EventTableError("duplicate event '" + id + "'");
  if (cls == EventClass::tick) {
    if (tick_) throw EventTableError("second tick event '" + id + "' (tick is '" + *tick_ + "')");
    if (forcible) throw EventTableError("tick event '" + id + "' cannot be forcible");
    tick_ = id;
  }
  index_.emplace(id, events_.size());
  events_.push_back(EventInfo{id, cls, forcible});
}

void EventTable::add_signal(const std::string& base, const std::string& signal) {
  if (!contains(base)) throw EventTableError("signal base '" + base + "' is not declared");
  if (base == signal) throw EventTableError("event '" + base + "' cannot be its own signal");
  const EventInfo& b = info(base);
  if (b.cls == EventClass::tick) throw EventTableError("tick cannot have a signal event");
  if (signal_of_.count(base) != 0) {
    if (signal_of_.at(base) == signal) return;
    throw EventTableError("event '" + base + "' already has signal '" + signal_of_.at(base) + "'");
  }
  if (base_of_.count(signal) != 0)
    throw EventTableError("signal '" + signal + "' already pairs with '" + base_of_.at(signal) + "'");
  if (contains(signal)) {
    const EventInfo& s = info(signal);
    if (s.cls != b.cls || s.forcible != b.forcible)
      throw EventTableError("signal '" + signal + "' must share the class of '" + base + "'");
  } else {
    EventInfo copy = b;
    add(signal, copy.cls, copy.forcible);
  }
  signal_of_[base] = signal;
  base_of_[signal] = base;
}

std::string EventTable::ensure_signal(const std::string& base) {
  if (auto s = signal_of(base)) return *s;
  std::string candidate = base + "'";
  while (contains(candidate)) candidate += "'";
  add_signal(base, candidate);
  return candidate;
}

const EventInfo& EventTable::info(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw EventTableError("undeclared event '" + id + "'");
  return events_[it->second];
}

const std::string& EventTable::tick() const {
  if (!tick_) throw EventTableError("event table has no tick event");
  return *tick_;
}

bool EventTable::is_prohibitible(const std::string& id) const {
  return info(id).cls == EventClass::prohibitible;
}

bool EventTable::is_forcible(const std::string& id) const { return info(id).forcible; }

bool EventTable::is_controllable(const std::string& id) const {
  return info(id).cls != EventClass::uncontrollable;
}

std::optional<std::string> EventTable::signal_of(const std::string& base) const {
  auto it = signal_of_.find(base);
  if (it == signal_of_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> EventTable::base_of(const std::string& signal) const {
  auto it = base_of_.find(signal);
  if (it == base_of_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> EventTable::controllable_events() const {
  std::vector<std::string> out;
  for (const auto& e : events_)
    if (e.cls != EventClass::uncontrollable) out.push_back(e.id);
  return out;
}

std::vector<std::string> EventTable::uncontrollable_events() const {
  std::vector<std::string> out;
  for (const auto& e : events_)
    if (e.cls == EventClass::uncontrollable) out.push_back(e.id);
  return out;
}

void EventTable::validate() const {
  std::size_t ticks = 0;
  for (const auto& e : events_) {
    if (e.cls == EventClass::tick) {
      ++ticks;
      if (e.forcible) throw EventTableError("tick is forcible");
    }
  }
  if (ticks != 1) throw EventTableError("event table must declare exactly one tick event");
  std::set<std::string> seen;
  for (const auto& [base, signal] : signal_of_) {
    if (base == signal) throw EventTableError("event '" + base + "' is its own signal");
    if (!seen.insert(signal).second) throw EventTableError("signal '" + signal + "' is shared");
    const EventInfo& b = info(base);
    const EventInfo& s = info(signal);
    if (b.cls != s.cls || b.forcible != s.forcible)
      throw EventTableError("signal '" + signal + "' differs in class from '" + base + "'");
  }
}

}  // namespace tdes
