#include "tdes/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace tdes {

using nlohmann::json;

namespace {

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

Position position_of(std::string_view text, std::size_t offset) {
  Position p;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

// Offsets of the elements of the array stored under a top-level key, used
// only to point diagnostics at the right line.
std::vector<std::size_t> element_offsets(std::string_view text, std::string_view key) {
  std::vector<std::size_t> out;
  int depth = 0;
  bool want_value = false;
  bool in_array = false;
  std::size_t i = 0;
  auto skip_string = [&] {
    std::size_t start = ++i;
    while (i < text.size() && text[i] != '"') i += text[i] == '\\' ? 2 : 1;
    return text.substr(start, std::min(i, text.size()) - start);
  };
  bool expect_element = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (in_array && depth == 2 && expect_element && c != ']') {
      out.push_back(i);
      expect_element = false;
    }
    if (c == '"') {
      std::string_view s = skip_string();
      if (depth == 1 && !in_array && s == key) want_value = true;
      continue;
    }
    if (c == '[' || c == '{') {
      ++depth;
      if (want_value && depth == 2 && c == '[') {
        in_array = true;
        expect_element = true;
      }
      want_value = false;
    } else if (c == ']' || c == '}') {
      if (in_array && depth == 2) return out;
      --depth;
    } else if (c == ',') {
      if (in_array && depth == 2) expect_element = true;
      if (depth == 1) want_value = false;
    }
  }
  return out;
}

class Diagnostics {
 public:
  Diagnostics(std::string_view text, std::string_view source) : text_(text), source_(source) {}

  [[noreturn]] void fail(const std::string& message) const {
    throw IoError(std::string(source_) + ": " + message);
  }
  [[noreturn]] void fail_at(std::string_view key, std::size_t element, const std::string& message) const {
    auto offsets = element_offsets(text_, key);
    if (element < offsets.size()) {
      Position p = position_of(text_, offsets[element]);
      throw IoError(std::string(source_) + ":" + std::to_string(p.line) + ":" +
                    std::to_string(p.column) + ": " + message);
    }
    fail(std::string(key) + "[" + std::to_string(element) + "]: " + message);
  }

 private:
  std::string_view text_;
  std::string_view source_;
};

json parse_json(std::string_view text, std::string_view source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    Position p = position_of(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    auto cut = what.find("parse error");
    throw IoError(std::string(source) + ":" + std::to_string(p.line) + ":" + std::to_string(p.column) +
                  ": " + (cut == std::string::npos ? what : what.substr(cut)));
  }
}

void require_keys(const json& j, const Diagnostics& d, const std::set<std::string>& required,
                  const std::set<std::string>& optional, const std::string& what) {
  if (!j.is_object()) d.fail(what + " must be a JSON object");
  for (const auto& k : required)
    if (!j.contains(k)) d.fail(what + " is missing the \"" + k + "\" field");
  for (const auto& [k, v] : j.items())
    if (!required.count(k) && !optional.count(k)) d.fail(what + " has unknown field \"" + k + "\"");
}

std::string class_token(EventClass c) {
  switch (c) {
    case EventClass::prohibitible:
      return "hib";
    case EventClass::uncontrollable:
      return "unc";
    case EventClass::tick:
      return "tick";
  }
  return "unc";
}

EventInfo parse_event(const json& e, const Diagnostics& d, std::string_view key, std::size_t k) {
  if (!e.is_object() || !e.contains("id") || !e.contains("class") || !e["id"].is_string() ||
      !e["class"].is_string())
    d.fail_at(key, k, "event entries need string \"id\" and \"class\" fields");
  for (const auto& [field, v] : e.items())
    if (field != "id" && field != "class" && field != "forcible")
      d.fail_at(key, k, "event has unknown field \"" + field + "\"");
  EventInfo info;
  info.id = e["id"].get<std::string>();
  if (info.id.empty()) d.fail_at(key, k, "empty event id");
  try {
    info.cls = event_class_from_string(e["class"].get<std::string>());
  } catch (const EventTableError& err) {
    d.fail_at(key, k, err.what());
  }
  if (e.contains("forcible")) {
    if (!e["forcible"].is_boolean()) d.fail_at(key, k, "\"forcible\" must be true or false");
    info.forcible = e["forcible"].get<bool>();
  }
  return info;
}

std::string event_line(const EventInfo& info) {
  json e = {{"class", class_token(info.cls)}, {"forcible", info.forcible}, {"id", info.id}};
  return e.dump();
}

}  // namespace

ParsedAutomaton parse_automaton(std::string_view text, const EventTable* table, std::string_view source) {
  Diagnostics d(text, source);
  json j = parse_json(text, source);
  require_keys(j, d, {"name", "events", "tick", "states", "initial", "marked", "transitions"}, {},
               "automaton");
  if (!j["name"].is_string()) d.fail("\"name\" must be a string");
  if (!j["tick"].is_string()) d.fail("\"tick\" must be a string");
  if (!j["states"].is_number_unsigned()) d.fail("\"states\" must be a non-negative integer");
  if (!j["events"].is_array()) d.fail("\"events\" must be an array");
  if (!j["marked"].is_array()) d.fail("\"marked\" must be an array");
  if (!j["transitions"].is_array()) d.fail("\"transitions\" must be an array");

  ParsedAutomaton out;
  out.tick = j["tick"].get<std::string>();
  std::map<std::string, EventInfo> declared;
  for (std::size_t k = 0; k < j["events"].size(); ++k) {
    EventInfo info = parse_event(j["events"][k], d, "events", k);
    if (declared.count(info.id)) d.fail_at("events", k, "duplicate event '" + info.id + "'");
    if (table) {
      if (!table->contains(info.id))
        d.fail_at("events", k, "event '" + info.id + "' is not in the event table");
      const EventInfo& t = table->info(info.id);
      if (t.cls != info.cls || t.forcible != info.forcible)
        d.fail_at("events", k, "event '" + info.id + "' disagrees with the event table");
    }
    declared.emplace(info.id, info);
    out.events.push_back(info);
  }
  auto tick_it = declared.find(out.tick);
  if (tick_it == declared.end() || tick_it->second.cls != EventClass::tick)
    d.fail("tick event '" + out.tick + "' must be declared with class \"tick\"");
  for (const auto& [id, info] : declared)
    if (info.cls == EventClass::tick && id != out.tick) d.fail("second tick event '" + id + "'");

  const std::size_t n = j["states"].get<std::size_t>();
  std::vector<std::string> alphabet;
  for (const auto& [id, info] : declared) alphabet.push_back(id);
  if (n == 0) {
    if (!j["marked"].empty() || !j["transitions"].empty())
      d.fail("an automaton with no states has no marked states or transitions");
    out.automaton = TimedAutomaton::empty_language(j["name"].get<std::string>(), alphabet);
    return out;
  }
  if (!j["initial"].is_number_unsigned() || j["initial"].get<std::size_t>() >= n)
    d.fail("\"initial\" must be a state in 0.." + std::to_string(n - 1));
  std::vector<StateId> marked;
  std::set<std::size_t> marked_seen;
  for (std::size_t k = 0; k < j["marked"].size(); ++k) {
    const json& m = j["marked"][k];
    if (!m.is_number_unsigned() || m.get<std::size_t>() >= n)
      d.fail_at("marked", k, "marked state out of range 0.." + std::to_string(n - 1));
    if (!marked_seen.insert(m.get<std::size_t>()).second)
      d.fail_at("marked", k, "state " + std::to_string(m.get<std::size_t>()) + " is marked twice");
    marked.push_back(m.get<StateId>());
  }
  std::vector<Transition> transitions;
  std::map<std::pair<StateId, std::string>, std::size_t> seen;
  for (std::size_t k = 0; k < j["transitions"].size(); ++k) {
    const json& t = j["transitions"][k];
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_unsigned() || !t[1].is_string() ||
        !t[2].is_number_unsigned())
      d.fail_at("transitions", k, "a transition is [source, event, target]");
    std::size_t src = t[0].get<std::size_t>();
    std::size_t dst = t[2].get<std::size_t>();
    std::string ev = t[1].get<std::string>();
    if (src >= n) d.fail_at("transitions", k, "source state " + std::to_string(src) + " out of range");
    if (dst >= n) d.fail_at("transitions", k, "target state " + std::to_string(dst) + " out of range");
    if (!declared.count(ev)) d.fail_at("transitions", k, "unknown event '" + ev + "'");
    auto [it, fresh] = seen.emplace(std::make_pair(static_cast<StateId>(src), ev), k);
    if (!fresh)
      d.fail_at("transitions", k,
                "duplicate transition for (state " + std::to_string(src) + ", event " + ev +
                    "), first given as transition " + std::to_string(it->second));
    transitions.push_back(Transition{static_cast<StateId>(src), ev, static_cast<StateId>(dst)});
  }
  try {
    out.automaton = TimedAutomaton(j["name"].get<std::string>(), alphabet, n,
                                   j["initial"].get<StateId>(), marked, transitions);
  } catch (const std::exception& e) {
    d.fail(e.what());
  }
  return out;
}

std::string serialize_automaton(const TimedAutomaton& a, const EventTable& table) {
  std::ostringstream out;
  out << "{\n  \"events\": [";
  const auto& alphabet = a.alphabet();
  for (std::size_t k = 0; k < alphabet.size(); ++k) {
    if (!table.contains(alphabet[k]))
      throw IoError("event '" + alphabet[k] + "' of " + a.name() + " is not in the event table");
    out << (k ? ",\n    " : "\n    ") << event_line(table.info(alphabet[k]));
  }
  out << (alphabet.empty() ? "],\n" : "\n  ],\n");
  out << "  \"initial\": " << a.initial() << ",\n";
  out << "  \"marked\": " << json(a.marked_states()).dump() << ",\n";
  out << "  \"name\": " << json(a.name()).dump() << ",\n";
  out << "  \"states\": " << a.num_states() << ",\n";
  out << "  \"tick\": " << json(table.tick()).dump() << ",\n";
  out << "  \"transitions\": [";
  const auto ts = a.transitions();
  for (std::size_t k = 0; k < ts.size(); ++k) {
    json t = json::array({ts[k].source, ts[k].event, ts[k].target});
    out << (k ? ",\n    " : "\n    ") << t.dump();
  }
  out << (ts.empty() ? "]\n" : "\n  ]\n") << "}\n";
  return out.str();
}

EventTable parse_event_table(std::string_view text, std::string_view source) {
  Diagnostics d(text, source);
  json j = parse_json(text, source);
  require_keys(j, d, {"events", "tick"}, {"signal_of"}, "event table");
  if (!j["events"].is_array()) d.fail("\"events\" must be an array");
  if (!j["tick"].is_string()) d.fail("\"tick\" must be a string");
  EventTable table;
  for (std::size_t k = 0; k < j["events"].size(); ++k) {
    EventInfo info = parse_event(j["events"][k], d, "events", k);
    try {
      table.add(info.id, info.cls, info.forcible);
    } catch (const EventTableError& e) {
      d.fail_at("events", k, e.what());
    }
  }
  if (!table.has_tick() || table.tick() != j["tick"].get<std::string>())
    d.fail("tick event '" + j["tick"].get<std::string>() + "' must be declared with class \"tick\"");
  if (j.contains("signal_of")) {
    if (!j["signal_of"].is_object()) d.fail("\"signal_of\" must map events to signal events");
    for (const auto& [base, signal] : j["signal_of"].items()) {
      if (!signal.is_string()) d.fail("signal of '" + base + "' must be a string");
      try {
        table.add_signal(base, signal.get<std::string>());
      } catch (const EventTableError& e) {
        d.fail(e.what());
      }
    }
  }
  try {
    table.validate();
  } catch (const EventTableError& e) {
    d.fail(e.what());
  }
  return table;
}

std::string serialize_event_table(const EventTable& table) {
  std::vector<EventInfo> events = table.events();
  std::sort(events.begin(), events.end(), [](const EventInfo& a, const EventInfo& b) { return a.id < b.id; });
  std::ostringstream out;
  out << "{\n  \"events\": [";
  for (std::size_t k = 0; k < events.size(); ++k)
    out << (k ? ",\n    " : "\n    ") << event_line(events[k]);
  out << (events.empty() ? "],\n" : "\n  ],\n");
  out << "  \"signal_of\": " << json(table.signal_pairs()).dump() << ",\n";
  out << "  \"tick\": " << json(table.has_tick() ? table.tick() : std::string()).dump() << "\n}\n";
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string() + ": cannot open file");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path.string() + ": cannot write file");
  out << contents;
}

TimedAutomaton load_automaton(const std::filesystem::path& path, const EventTable& table) {
  return parse_automaton(read_file(path), &table, path.string()).automaton;
}

namespace {

AgentPair parse_pair(const std::string& text, const std::string& what) {
  auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size() ||
      text.find(':', colon + 1) != std::string::npos)
    throw IoError(what + ": expected SENDER:RECEIVER, got '" + text + "'");
  return {text.substr(0, colon), text.substr(colon + 1)};
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<LocalController> load_controllers(const json& list, const std::filesystem::path& root,
                                               const EventTable& table, const Diagnostics& d,
                                               const std::string& what) {
  std::vector<LocalController> out;
  if (!list.is_array()) d.fail(what + " must be an array");
  for (const auto& c : list) {
    require_keys(c, d, {"event", "file"}, {}, what + " entry");
    if (!c["event"].is_string() || !c["file"].is_string())
      d.fail(what + " entries need string \"event\" and \"file\"");
    out.push_back(LocalController{c["event"].get<std::string>(),
                                  load_automaton(root / c["file"].get<std::string>(), table)});
  }
  return out;
}

}  // namespace

std::vector<AgentPair> parse_pair_order(const std::string& text) {
  std::vector<AgentPair> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_pair(item, "--order-pairs"));
  return out;
}

EventOrder parse_event_order(const std::string& text) {
  EventOrder out;
  for (const auto& group : split(text, ';')) {
    auto eq = group.find('=');
    if (eq == std::string::npos) throw IoError("--order-events: expected SENDER:RECEIVER=e1,e2 in '" + group + "'");
    AgentPair pair = parse_pair(group.substr(0, eq), "--order-events");
    if (out.count(pair)) throw IoError("--order-events: pair listed twice");
    out[pair] = split(group.substr(eq + 1), ',');
  }
  return out;
}

LoadedProject load_project(const std::filesystem::path& path) {
  std::string text = read_file(path);
  Diagnostics d(text, path.string());
  json j = parse_json(text, path.string());
  require_keys(j, d, {"name", "event_table", "agents", "specs"}, {"supervisor", "options"}, "project");
  const std::filesystem::path root = path.parent_path();
  LoadedProject out;
  out.file = path;
  DistributedProject& p = out.project;
  if (!j["name"].is_string() || !j["event_table"].is_string()) d.fail("\"name\" and \"event_table\" must be strings");
  p.name = j["name"].get<std::string>();
  std::filesystem::path table_path = root / j["event_table"].get<std::string>();
  p.event_table = parse_event_table(read_file(table_path), table_path.string());

  if (!j["agents"].is_array() || j["agents"].empty()) d.fail("\"agents\" must be a non-empty array");
  for (const auto& a : j["agents"]) {
    require_keys(a, d, {"id", "model"}, {"controllers", "preemptors"}, "agent");
    if (!a["id"].is_string() || !a["model"].is_string()) d.fail("agent \"id\" and \"model\" must be strings");
    TimedAutomaton model = load_automaton(root / a["model"].get<std::string>(), p.event_table);
    auto controllers = a.contains("controllers")
                           ? load_controllers(a["controllers"], root, p.event_table, d, "controllers")
                           : std::vector<LocalController>{};
    auto preemptors = a.contains("preemptors")
                          ? load_controllers(a["preemptors"], root, p.event_table, d, "preemptors")
                          : std::vector<LocalController>{};
    p.agents.push_back(make_agent(a["id"].get<std::string>(), std::move(model), p.event_table,
                                  std::move(controllers), std::move(preemptors)));
  }
  if (!j["specs"].is_array()) d.fail("\"specs\" must be an array of files");
  for (const auto& s : j["specs"]) {
    if (!s.is_string()) d.fail("\"specs\" entries must be file names");
    p.spec_models.push_back(load_automaton(root / s.get<std::string>(), p.event_table));
  }
  if (j.contains("supervisor")) {
    if (!j["supervisor"].is_string()) d.fail("\"supervisor\" must be a file name");
    p.supervisor = load_automaton(root / j["supervisor"].get<std::string>(), p.event_table);
  }
  if (j.contains("options")) {
    const json& o = j["options"];
    require_keys(o, d, {}, {"cap", "pair_order", "event_order"}, "options");
    if (o.contains("cap")) {
      if (!o["cap"].is_number_integer() || o["cap"].get<long long>() < 1) d.fail("\"cap\" must be a positive integer");
      out.options.cap = o["cap"].get<int>();
    }
    if (o.contains("pair_order")) {
      if (!o["pair_order"].is_array()) d.fail("\"pair_order\" must be an array of \"SENDER:RECEIVER\"");
      for (const auto& s : o["pair_order"]) {
        if (!s.is_string()) d.fail("\"pair_order\" entries must be strings");
        out.options.pair_order.push_back(parse_pair(s.get<std::string>(), path.string()));
      }
    }
    if (o.contains("event_order")) {
      if (!o["event_order"].is_object()) d.fail("\"event_order\" must map \"SENDER:RECEIVER\" to event lists");
      for (const auto& [k, v] : o["event_order"].items()) {
        if (!v.is_array()) d.fail("event order of " + k + " must be an array");
        auto& list = out.options.event_order[parse_pair(k, path.string())];
        for (const auto& e : v) {
          if (!e.is_string()) d.fail("event order of " + k + " must list event ids");
          list.push_back(e.get<std::string>());
        }
      }
    }
  }
  try {
    p.validate();
  } catch (const std::exception& e) {
    d.fail(e.what());
  }
  return out;
}

std::filesystem::path fixture_dir() {
  if (const char* env = std::getenv("TDES_FIXTURE_DIR")) return env;
#ifdef TDES_FIXTURE_DIR
  return TDES_FIXTURE_DIR;
#else
  return "fixtures";
#endif
}

std::filesystem::path resolve_project(const std::string& name_or_path) {
  if (name_or_path == "ultc") return fixture_dir() / "ultc" / "project.json";
  std::filesystem::path p(name_or_path);
  if (std::filesystem::is_directory(p)) return p / "project.json";
  return p;
}

std::string export_dot(const TimedAutomaton& a) {
  std::ostringstream out;
  out << "digraph " << json(a.name()).dump() << " {\n";
  if (a.empty()) {
    out << "}\n";
    return out.str();
  }
  out << "  rankdir=LR;\n  node [shape=circle];\n  __start [shape=point];\n";
  for (StateId x = 0; x < a.num_states(); ++x)
    out << "  " << x << (a.is_marked(x) ? " [shape=doublecircle];\n" : ";\n");
  out << "  __start -> " << a.initial() << ";\n";
  for (const Transition& t : a.transitions())
    out << "  " << t.source << " -> " << t.target << " [label=" << json(t.event).dump()
        << "];\n";
  out << "}\n";
  return out.str();
}

nlohmann::json witness_json(const WitnessString& w) { return json(w.events); }

namespace {

json triple_json(const ChannelSpec& c) {
  return {{"sender", c.sender}, {"event", c.event}, {"receiver", c.receiver}, {"signal", c.signal},
          {"channel", c.label()}};
}

void put_witness(json& j, const std::optional<WitnessString>& w,
                 const std::optional<WitnessString>& continuation) {
  j["witness"] = w ? witness_json(*w) : json(nullptr);
  j["tick_count"] = w ? json(w->tick_count) : json(nullptr);
  if (continuation) j["continuation"] = witness_json(*continuation);
}

std::string witness_line(const std::optional<WitnessString>& w, const std::optional<WitnessString>& c) {
  std::string out;
  if (w) out += "  witness: " + w->to_string() + " (" + std::to_string(w->tick_count) + " ticks)\n";
  if (c) out += "  continuation: " + c->to_string() + "\n";
  return out;
}

}  // namespace

nlohmann::json report_json(const VerificationReport& r) {
  json j;
  j["triple"] = triple_json(r.triple);
  j["verdict"] = to_string(r.verdict);
  if (r.verdict == Verdict::delay_robust)
    j["d_max"] = "infinite";
  else if (r.d_max)
    j["d_max"] = *r.d_max;
  else
    j["d_max"] = nullptr;
  j["failed_condition"] = r.failed_condition ? json(to_string(*r.failed_condition)) : json(nullptr);
  put_witness(j, r.witness, r.continuation);
  j["cap_used"] = r.cap_used;
  return j;
}

nlohmann::json check_json(const ChannelSpec& triple, const ConditionCheck& check, std::optional<int> bound,
                          int cap) {
  json j;
  j["triple"] = triple_json(triple);
  std::string base = bound ? "bounded_delay_robust" : "delay_robust";
  j["verdict"] = check.passed ? base : "not_" + base;
  if (check.passed && !bound)
    j["d_max"] = "infinite";
  else
    j["d_max"] = nullptr;
  j["failed_condition"] = check.failed ? json(to_string(*check.failed)) : json(nullptr);
  put_witness(j, check.witness, check.continuation);
  j["cap_used"] = cap;
  return j;
}

nlohmann::json plan_json(const ChannelPlan& plan, int cap) {
  json entries = json::array();
  for (const auto& e : plan.entries) {
    json r = report_json(e.report);
    r["chosen"] = e.chosen;
    r["channel"] = e.chosen ? json(e.channel.label()) : json(nullptr);
    entries.push_back(std::move(r));
  }
  json chosen = json::array();
  for (const auto& c : plan.chosen) chosen.push_back(c.label());
  json comp = {{"passed", plan.composition.passed},
               {"failed_condition", plan.composition.failed ? json(to_string(*plan.composition.failed))
                                                            : json(nullptr)}};
  put_witness(comp, plan.composition.witness, plan.composition.continuation);
  return {{"entries", entries}, {"chosen", chosen}, {"composition", comp}, {"cap_used", cap}};
}

std::string report_text(const VerificationReport& r) {
  std::string out = r.triple.label() + ": " + to_string(r.verdict);
  if (r.verdict == Verdict::delay_robust)
    out += ", d_max = infinite";
  else if (r.d_max)
    out += ", d_max = " + std::to_string(*r.d_max);
  else
    out += ", no failure up to d = " + std::to_string(r.cap_used);
  out += "\n";
  if (r.failed_condition) out += "  failed condition: " + to_string(*r.failed_condition) + "\n";
  return out + witness_line(r.witness, r.continuation);
}

std::string check_text(const ChannelSpec& triple, const ConditionCheck& check) {
  std::string out = triple.label() + ": " + (check.passed ? "passed" : "failed") + "\n";
  if (check.failed) out += "  failed condition: " + to_string(*check.failed) + "\n";
  return out + witness_line(check.witness, check.continuation);
}

std::string plan_text(const ChannelPlan& plan) {
  std::string out;
  for (const auto& e : plan.entries) out += report_text(e.report);
  out += "chosen channels:";
  for (const auto& c : plan.chosen) out += " " + c.label();
  out += plan.chosen.empty() ? " none\n" : "\n";
  out += std::string("composed system: ") + (plan.composition.passed ? "passed" : "failed") + "\n";
  if (plan.composition.failed) out += "  failed condition: " + to_string(*plan.composition.failed) + "\n";
  return out + witness_line(plan.composition.witness, plan.composition.continuation);
}

}  // namespace tdes
