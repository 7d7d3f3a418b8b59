// One PASS/FAIL line per acceptance criterion; nonzero exit on any FAIL.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "support/oracles.hpp"
#include "tdes/channels.hpp"
#include "tdes/delay_robustness.hpp"
#include "tdes/io.hpp"

using namespace tdes;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

ChannelSpec with(ChannelSpec s, ChannelRegime r) {
  s.regime = r;
  return s;
}

// Every channeled system built here is recorded for the inclusion criterion.
struct InclusionLedger {
  std::size_t systems = 0, violations = 0;
  void add(const ConditionCheck& c) {
    ++systems;
    violations += !c.inclusion_holds;
  }
  void add(const VerificationReport& r) {
    systems += r.systems_built;
    violations += r.inclusion_violations;
  }
} inclusion;

const DistributedProject& ultc() {
  static const DistributedProject p = load_project(resolve_project("ultc")).project;
  return p;
}

oracle::TwoAgentInstance draw(std::mt19937& rng, int k) {
  oracle::InstanceOptions o;
  o.shape = static_cast<oracle::Shape>(k % 3);
  o.max_agent_states = 8;
  o.agent = {2, 8, 0.45, 0.4, true};
  return oracle::random_two_agent(rng, o);
}

bool acyclic(const TimedAutomaton& a) {
  try {
    oracle::enumerate(a);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

Outcome synthesis() {
  auto sup = synthesize(ultc());
  std::ostringstream d;
  d << sup.num_states() << " states, " << sup.num_transitions() << " transitions (expected 231, 543)";
  return {sup.num_states() == 231 && sup.num_transitions() == 543, d.str()};
}

Outcome delay_bounds() {
  DelayAnalyzer an(ultc());
  int wrong = 0, triples = 0;
  std::ostringstream d;
  for (const auto& [pair, events] : communication_events(ultc()))
    for (const auto& e : events) {
      auto r = an.classify(channel_spec(ultc(), pair.first, e, pair.second), DelayOptions{64, false});
      inclusion.add(r);
      ++triples;
      Verdict want = Verdict::zero_tolerance;
      std::optional<int> bound = 0;
      if (pair == AgentPair{"T", "O"} && e == "30") {
        want = Verdict::delay_robust;
        bound.reset();
      } else if (pair == AgentPair{"V", "O"} && (e == "10" || e == "14")) {
        want = Verdict::bounded;
        bound = 4;
      }
      if (r.verdict != want || r.d_max != bound) {
        ++wrong;
        d << " " << r.triple.label() << "=" << to_string(r.verdict);
      }
    }
  return {wrong == 0 && triples == 23, std::to_string(triples) + " triples, " + std::to_string(wrong) + " wrong" + d.str()};
}

Outcome observer_witness() {
  DelayAnalyzer an(ultc());
  auto cs = an.build(channel_spec(ultc(), "V", "10", "O"));
  auto c = an.check_observer(cs);
  inclusion.add(an.check_correct_complete(cs));
  if (c.passed || !c.witness) return {false, "observer condition holds"};
  auto projected = c.witness->erase({cs.erased_events.begin(), cs.erased_events.end()}, "tick").to_string();
  return {projected == "11.10.tick.tick.tick.tick.tick.33", "projected witness " + projected};
}

Outcome channel_shapes() {
  auto spec = unbounded_channel("T", "30", "O", "30'");
  auto ch = make_channel(spec);
  auto ch4 = make_channel_bounded(with(spec, Bounded{4}));
  auto n1 = make_channel_capacity(with(spec, Capacity{1}));
  bool eq = language_compare(n1, ch, LanguageKind::closed).relation == LanguageRelation::equal &&
            language_compare(n1, ch, LanguageKind::marked).relation == LanguageRelation::equal;
  std::ostringstream d;
  d << "CH " << ch.num_states() << "/" << ch.num_transitions() << ", CH_4 " << ch4.num_states() << "/"
    << ch4.num_transitions() << ", NCH_1 " << (eq ? "equal" : "differs");
  return {ch.num_states() == 2 && ch.num_transitions() == 4 && ch4.num_states() == 6 && ch4.num_transitions() == 11 && eq,
          d.str()};
}

Outcome monotonicity() {
  std::mt19937 rng(101);
  int violations = 0, failing = 0;
  const int n = 200;
  for (int k = 0; k < n; ++k) {
    auto inst = draw(rng, k);
    DelayAnalyzer an(inst.project);
    bool failed = false;
    for (int d = 1; d <= 5; ++d) {
      auto c = an.verify(with(inst.spec, Bounded{d}));
      inclusion.add(c);
      if (failed && c.passed) ++violations;
      failed = failed || !c.passed;
    }
    failing += failed;
  }
  return {violations == 0, std::to_string(n) + " instances, " + std::to_string(failing) + " failing at some d, " +
                               std::to_string(violations) + " violations"};
}

Outcome oracle_equivalence() {
  std::mt19937 rng(103);
  int instances = 0, checks = 0, disagreements = 0;
  for (int k = 0; k < 600 && instances < 40; ++k) {
    auto inst = draw(rng, k);
    DelayAnalyzer an(inst.project);
    auto cs = an.build(inst.spec);
    if (cs.sup_prime.num_states() > 12 || !acyclic(cs.sup_prime)) continue;
    ++instances;
    for (ChannelRegime r : {ChannelRegime{Unbounded{}}, ChannelRegime{Bounded{1}}, ChannelRegime{Bounded{2}}}) {
      auto spec = with(inst.spec, r);
      auto verdict = an.verify(spec);
      inclusion.add(verdict);
      ++checks;
      disagreements += verdict.passed != oracle::evaluate_definition(an.build(spec), an.supervisor()).holds();
    }
  }
  return {instances >= 20 && disagreements == 0, std::to_string(instances) + " instances, " + std::to_string(checks) +
                                                     " verdicts, " + std::to_string(disagreements) + " disagreements"};
}

Outcome inclusion_everywhere() {
  // Adds capacity channels and the plan composition to what the other
  // criteria already built.
  std::mt19937 rng(107);
  for (int k = 0; k < 60; ++k) {
    auto inst = draw(rng, k);
    DelayAnalyzer an(inst.project);
    for (ChannelRegime r : {ChannelRegime{Unbounded{}}, ChannelRegime{Capacity{2}}, ChannelRegime{Bounded{3}}})
      inclusion.add(an.verify(with(inst.spec, r)));
    inclusion.add(an.classify(inst.spec, DelayOptions{8, false}));
  }
  auto plan = plan_channels(ultc(), default_pair_order(ultc()), default_event_order(ultc()));
  for (const auto& e : plan.entries) inclusion.add(e.report);
  inclusion.add(plan.composition);
  return {inclusion.violations == 0 && inclusion.systems > 0,
          std::to_string(inclusion.systems) + " systems, " + std::to_string(inclusion.violations) + " violations"};
}

Outcome reorder() {
  std::mt19937 rng(109);
  int systems = 0, violations = 0, robust = 0, robust_violations = 0;
  std::string first;
  for (int k = 0; k < 300 && systems < 300; ++k) {
    auto inst = draw(rng, k);
    DelayAnalyzer an(inst.project);
    for (ChannelRegime r : {ChannelRegime{Unbounded{}}, ChannelRegime{Bounded{1}}, ChannelRegime{Bounded{2}},
                            ChannelRegime{Bounded{3}}}) {
      auto cs = an.build(with(inst.spec, r));
      if (cs.sup_prime.num_states() > 40 || !acyclic(cs.sup_prime)) continue;
      ++systems;
      auto check = an.verify(with(inst.spec, r));
      inclusion.add(check);
      robust += check.passed;
      if (auto v = oracle::reorder_violation(cs)) {
        if (first.empty()) first = "; first " + oracle::join(v->original) + " -> " + oracle::join(v->reordered);
        ++violations;
        robust_violations += check.passed;
      }
    }
  }
  return {systems > 0 && violations == 0,
          std::to_string(systems) + " acyclic systems, " + std::to_string(violations) + " violations (" +
              std::to_string(robust_violations) + " among " + std::to_string(robust) + " delay-robust ones)" + first};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit;  // seconds
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"ultc-synthesis", 5, synthesis},
      {"ultc-delay-bounds", 60, delay_bounds},
      {"ultc-observer-witness", 60, observer_witness},
      {"channel-shapes", 1, channel_shapes},
      {"monotonicity", 600, monotonicity},
      {"oracle-equivalence", 300, oracle_equivalence},
      {"reorder", 600, reorder},
      // Last, so that it covers every system the others built.
      {"inclusion", 600, inclusion_everywhere},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = o.pass && secs < c.limit;
    failures += !pass;
    std::cout << (pass ? "PASS " : "FAIL ") << std::left << std::setw(22) << c.name << std::right << std::fixed
              << std::setprecision(2) << std::setw(8) << secs << "s  " << o.detail
              << (secs < c.limit ? "" : " (over the time limit)") << "\n";
  }
  return failures == 0 ? 0 : 1;
}
