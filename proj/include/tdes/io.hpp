#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tdes/automaton.hpp"
#include "tdes/delay_robustness.hpp"
#include "tdes/event_table.hpp"
#include "tdes/supervisory.hpp"

namespace tdes {

/// Malformed input. The message carries "source:line:column" when known.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParsedAutomaton {
  TimedAutomaton automaton;
  std::vector<EventInfo> events;  // as declared in the file
  std::string tick;
};

/// Reads the automaton schema. With a table, every event must be declared
/// there with the same class and forcible flag.
ParsedAutomaton parse_automaton(std::string_view text, const EventTable* table = nullptr,
                                std::string_view source = "<input>");

/// Canonical form: keys sorted, one event and one transition per line,
/// transitions sorted by (src, event, dst).
std::string serialize_automaton(const TimedAutomaton& a, const EventTable& table);

EventTable parse_event_table(std::string_view text, std::string_view source = "<input>");
std::string serialize_event_table(const EventTable& table);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

TimedAutomaton load_automaton(const std::filesystem::path& path, const EventTable& table);

struct ProjectOptions {
  int cap = 64;
  std::vector<AgentPair> pair_order;  // empty: default order
  EventOrder event_order;             // missing pairs: default order
};

struct LoadedProject {
  DistributedProject project;
  ProjectOptions options;
  std::filesystem::path file;
};

/// Loads a project file; paths inside are relative to the file. The
/// project is validated before it is returned.
LoadedProject load_project(const std::filesystem::path& path);

/// "ultc" names the bundled fixture; anything else is a path to a project
/// file or to a directory containing project.json.
std::filesystem::path resolve_project(const std::string& name_or_path);

/// Directory holding the bundled fixtures.
std::filesystem::path fixture_dir();

/// Parses "T:V,O:V" into pairs and "T:V=30,31;O:V=41" into event orders.
std::vector<AgentPair> parse_pair_order(const std::string& text);
EventOrder parse_event_order(const std::string& text);

std::string export_dot(const TimedAutomaton& a);

nlohmann::json witness_json(const WitnessString& w);
nlohmann::json report_json(const VerificationReport& report);
/// Report for a single condition run. `bound` is empty
/// for the unbounded channel.
nlohmann::json check_json(const ChannelSpec& triple, const ConditionCheck& check,
                          std::optional<int> bound, int cap);
nlohmann::json plan_json(const ChannelPlan& plan, int cap);

std::string report_text(const VerificationReport& report);
std::string check_text(const ChannelSpec& triple, const ConditionCheck& check);
std::string plan_text(const ChannelPlan& plan);

}  // namespace tdes
