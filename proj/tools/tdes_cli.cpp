// Command-line front end: synthesis, control equivalence and the
// delay-robustness algorithms over a project file.
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tdes/delay_robustness.hpp"
#include "tdes/io.hpp"
#include "tdes/supervisory.hpp"

namespace {

using nlohmann::json;

enum class Format { text, machine };

struct Common {
  std::string project = "ultc";
  std::string output;
  Format format = Format::text;
};

struct Triple {
  std::string sender, event, receiver;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Common& c, const json& machine, const std::string& text) {
  if (!c.output.empty()) tdes::write_file(c.output, machine.dump(2) + "\n");
  if (c.format == Format::machine)
    std::cout << machine.dump(2) << "\n";
  else
    std::cout << text;
}

tdes::LoadedProject load(const Common& c) { return tdes::load_project(tdes::resolve_project(c.project)); }

tdes::DelayOptions delay_options(const tdes::LoadedProject& lp, std::optional<int> cap, bool theoretical) {
  tdes::DelayOptions o;
  o.cap = cap.value_or(lp.options.cap);
  if (o.cap < 1) throw InputError("--cap must be at least 1");
  o.theoretical_cap = theoretical;
  return o;
}

void warn_cap(const tdes::VerificationReport& r) {
  if (r.verdict == tdes::Verdict::cap_exceeded)
    std::cerr << "warning: " << r.triple.label() << " passed every bound up to the cap "
              << r.cap_used << "; d_max may be larger (raise --cap or use --theoretical-cap)\n";
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--project", c.project, "Project file, directory, or \"ultc\"");
  sub->add_option("-o,--output", c.output, "Write the machine-readable result to a file");
  sub->add_option("--format", c.format, "Report format on stdout")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"text", Format::text},
                                                                        {"machine", Format::machine}}));
}

void add_triple(CLI::App* sub, Triple& t) {
  sub->add_option("--sender", t.sender, "Sending agent j")->required();
  sub->add_option("--event", t.event, "Communication event sigma")->required();
  sub->add_option("--receiver", t.receiver, "Receiving agent i")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Timed DES supervisor synthesis and communication-delay analysis"};
  app.require_subcommand(1);

  Common common;
  Triple triple;
  std::optional<int> bound;
  std::optional<int> cap;
  bool theoretical = false;
  std::string order_pairs, order_events;
  std::string input, target = "SUP";

  auto* synth = app.add_subcommand("synth", "Synthesize the monolithic supervisor");
  add_common(synth, common);
  auto* check_eq = app.add_subcommand("check-eq", "Check control equivalence of the local controllers");
  add_common(check_eq, common);

  auto* verify = app.add_subcommand("verify-dr", "Check (bounded) delay-robustness for one channel");
  add_common(verify, common);
  add_triple(verify, triple);
  verify->add_option("--bound", bound, "Delay bound d; omit for an unbounded channel");

  auto* max_delay = app.add_subcommand("max-delay", "Find the maximal delay bound of one channel");
  auto* classify = app.add_subcommand("classify", "Classify one channel as infinite, bounded or zero");
  for (auto* sub : {max_delay, classify}) {
    add_common(sub, common);
    add_triple(sub, triple);
    sub->add_option("--cap", cap, "Largest bound tried (default 64 or the project option)");
    sub->add_flag("--theoretical-cap", theoretical, "Search up to the 2^m*m termination bound");
  }

  auto* plan = app.add_subcommand("plan-channels", "Classify every communication event in sequence");
  add_common(plan, common);
  plan->add_option("--cap", cap, "Largest bound tried per event");
  plan->add_flag("--theoretical-cap", theoretical, "Search up to the 2^m*m termination bound");
  plan->add_option("--order-pairs", order_pairs, "Pair order, e.g. T:V,O:V,V:T");
  plan->add_option("--order-events", order_events, "Event order per pair, e.g. \"T:V=30,31;V:O=10\"");

  auto* dot = app.add_subcommand("export-dot", "Export an automaton as a directed graph");
  add_common(dot, common);
  dot->add_option("--input", input, "Automaton file (its own event declarations are used)");
  dot->add_option("--target", target, "SUP, PLANT, SPEC, SUP_<agent> or an agent id");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*synth) {
      auto lp = load(common);
      tdes::TimedAutomaton sup = tdes::synthesize(lp.project);
      if (!common.output.empty())
        tdes::write_file(common.output, tdes::serialize_automaton(sup, lp.project.event_table));
      json j = {{"name", sup.name()}, {"states", sup.num_states()}, {"transitions", sup.num_transitions()}};
      if (common.format == Format::machine)
        std::cout << j.dump(2) << "\n";
      else
        std::cout << sup.name() << ": " << sup.num_states() << " states, " << sup.num_transitions()
                  << " transitions\n";
      return 0;
    }
    if (*check_eq) {
      auto lp = load(common);
      auto eq = tdes::control_equivalent(lp.project);
      json j = {{"equivalent", eq.equivalent},
                {"failed", eq.failed ? json(eq.failed == tdes::LanguageKind::closed ? "closed" : "marked")
                                     : json(nullptr)},
                {"witness", eq.witness ? tdes::witness_json(*eq.witness) : json(nullptr)}};
      std::string text = eq.equivalent ? "control equivalent\n"
                                       : "not control equivalent; witness " + eq.witness->to_string() + "\n";
      emit(common, j, text);
      return eq.equivalent ? 0 : 1;
    }
    if (*verify) {
      auto lp = load(common);
      if (bound && *bound < 1) throw InputError("--bound must be at least 1");
      tdes::ChannelRegime regime = bound ? tdes::ChannelRegime(tdes::Bounded{*bound}) : tdes::Unbounded{};
      auto spec = tdes::channel_spec(lp.project, triple.sender, triple.event, triple.receiver, regime);
      tdes::DelayAnalyzer analyzer(lp.project);
      auto check = analyzer.verify(spec);
      emit(common, tdes::check_json(spec, check, bound, lp.options.cap), tdes::check_text(spec, check));
      return check.passed ? 0 : 1;
    }
    if (*max_delay || *classify) {
      auto lp = load(common);
      auto options = delay_options(lp, cap, theoretical);
      auto spec = tdes::channel_spec(lp.project, triple.sender, triple.event, triple.receiver);
      tdes::DelayAnalyzer analyzer(lp.project);
      auto report = *classify ? analyzer.classify(spec, options) : analyzer.max_delay_bound(spec, options);
      warn_cap(report);
      emit(common, tdes::report_json(report), tdes::report_text(report));
      return report.verdict == tdes::Verdict::delay_robust ? 0 : 1;
    }
    if (*plan) {
      auto lp = load(common);
      auto options = delay_options(lp, cap, theoretical);
      auto pairs = order_pairs.empty() ? lp.options.pair_order : tdes::parse_pair_order(order_pairs);
      if (pairs.empty()) pairs = tdes::default_pair_order(lp.project);
      auto events = tdes::default_event_order(lp.project);
      for (const auto& [k, v] : lp.options.event_order) events[k] = v;
      if (!order_events.empty())
        for (const auto& [k, v] : tdes::parse_event_order(order_events)) events[k] = v;
      auto result = tdes::plan_channels(lp.project, pairs, events, options);
      for (const auto& e : result.entries) warn_cap(e.report);
      emit(common, tdes::plan_json(result, options.cap), tdes::plan_text(result));
      return result.composition.passed ? 0 : 1;
    }
    if (*dot) {
      std::string graph;
      if (!input.empty()) {
        graph = tdes::export_dot(tdes::parse_automaton(tdes::read_file(input), nullptr, input).automaton);
      } else {
        auto lp = load(common);
        const auto& p = lp.project;
        tdes::TimedAutomaton a;
        if (target == "SUP")
          a = p.supervisor_or_synthesize();
        else if (target == "PLANT")
          a = p.plant();
        else if (target == "SPEC")
          a = tdes::sync_product(p.spec_models);
        else if (target.rfind("SUP_", 0) == 0 && p.has_agent(target.substr(4)))
          a = p.local_behavior(target.substr(4));
        else if (p.has_agent(target))
          a = p.agent(target).model;
        else
          throw InputError("unknown --target '" + target + "'");
        graph = tdes::export_dot(a);
      }
      if (!common.output.empty())
        tdes::write_file(common.output, graph);
      else
        std::cout << graph;
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
