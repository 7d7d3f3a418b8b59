#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tdes {

enum class EventClass { prohibitible, uncontrollable, tick };

std::string to_string(EventClass cls);
EventClass event_class_from_string(const std::string& text);

struct EventInfo {
  std::string id;
  EventClass cls = EventClass::uncontrollable;
  bool forcible = false;
};

class EventTableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Global event universe: per-event class, forcible flag and the pairing of
/// channeled events with their signal events (sigma -> sigma').
class EventTable {
 public:
  EventTable() = default;

  /// Adds a base event. Throws on duplicates, on a second tick, or on a
  /// forcible/prohibitible tick.
  void add(const std::string& id, EventClass cls, bool forcible = false);

  /// Declares `signal` as the signal event of `base`. The signal event is
  /// created with the class and forcible flag of its base.
  void add_signal(const std::string& base, const std::string& signal);

  /// Returns the registered signal of `base`, creating "<base>'" on demand.
  std::string ensure_signal(const std::string& base);

  bool contains(const std::string& id) const { return index_.count(id) != 0; }
  const EventInfo& info(const std::string& id) const;
  const std::vector<EventInfo>& events() const { return events_; }

  const std::string& tick() const;
  bool has_tick() const { return tick_.has_value(); }

  bool is_prohibitible(const std::string& id) const;
  bool is_forcible(const std::string& id) const;
  /// Sigma_c = Sigma_hib + {tick}.
  bool is_controllable(const std::string& id) const;
  bool is_uncontrollable(const std::string& id) const { return !is_controllable(id); }

  std::optional<std::string> signal_of(const std::string& base) const;
  std::optional<std::string> base_of(const std::string& signal) const;
  bool is_signal(const std::string& id) const { return base_of_.count(id) != 0; }
  const std::map<std::string, std::string>& signal_pairs() const { return signal_of_; }

  std::vector<std::string> controllable_events() const;
  std::vector<std::string> uncontrollable_events() const;

  /// Re-checks every table invariant; throws EventTableError on violation.
  void validate() const;

 private:
  std::vector<EventInfo> events_;
  std::map<std::string, std::size_t> index_;
  std::optional<std::string> tick_;
  std::map<std::string, std::string> signal_of_;  // base -> signal
  std::map<std::string, std::string> base_of_;    // signal -> base
};

}  // namespace tdes
