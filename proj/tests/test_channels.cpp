#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/oracles.hpp"
#include "tdes/channels.hpp"
#include "tdes/operations.hpp"

using namespace tdes;
using oracle::Word;

namespace {

ChannelSpec spec_for(ChannelRegime regime) {
  ChannelSpec s = unbounded_channel("T", "30", "O", "30'");
  s.regime = regime;
  return s;
}

Word send_wait_receive(int ticks) {
  Word w{"30"};
  for (int k = 0; k < ticks; ++k) w.push_back("tick");
  w.push_back("30'");
  return w;
}

/// Counter simulation: in-flight count stays in [0, capacity].
bool counter_accepts(const Word& w, int capacity) {
  int n = 0;
  for (const auto& e : w) {
    if (e == "30") ++n;
    if (e == "30'") --n;
    if (n < 0 || n > capacity) return false;
  }
  return true;
}

std::vector<Word> words(std::size_t n) {
  std::vector<Word> out{{}}, layer{{}};
  for (std::size_t len = 1; len <= n; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (const char* e : {"30", "30'", "tick"}) {
        Word v = w;
        v.push_back(e);
        next.push_back(v);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("labels") {
  CHECK(unbounded_channel("T", "30", "O", "30'").label() == "CH(T,30,O)");
  CHECK(spec_for(Bounded{4}).label() == "CH_4(T,30,O)");
  CHECK(spec_for(Capacity{2}).label() == "NCH_2(T,30,O)");
  CHECK(bounded_channel("T", "30", "O", "30'", 4) == spec_for(Bounded{4}));
}

TEST_CASE("unbounded channel shape") {
  auto ch = make_channel(unbounded_channel("T", "30", "O", "30'"));
  CHECK(ch.num_states() == 2);
  CHECK(ch.num_transitions() == 4);
  CHECK(ch.marked_states() == std::vector<StateId>{0});
  CHECK(ch.alphabet() == std::vector<std::string>{"30", "30'", "tick"});
  CHECK(eligible_events(ch, 0) == std::vector<std::string>{"30", "tick"});
  CHECK(eligible_events(ch, 1) == std::vector<std::string>{"30'", "tick"});
  for (int n = 0; n <= 10; ++n) {
    Word w = send_wait_receive(n);
    CHECK(ch.accepts_marked(w));
    w.pop_back();
    CHECK(ch.accepts_closed(w));
    CHECK_FALSE(ch.accepts_marked(w));
  }
  CHECK_FALSE(ch.accepts_closed({"30", "30"}));
  CHECK_FALSE(ch.accepts_closed({"30'"}));
}

TEST_CASE("bounded channel shape") {
  for (int d = 1; d <= 8; ++d) {
    auto ch = make_channel_bounded(spec_for(Bounded{d}));
    CHECK(ch.num_states() == static_cast<std::size_t>(d + 2));
    CHECK(ch.num_transitions() == static_cast<std::size_t>(2 * d + 3));
    CHECK(ch.marked_states() == std::vector<StateId>{0});
    CHECK(eligible_events(ch, d + 1) == std::vector<std::string>{"30'"});
    for (StateId x = 0; x <= static_cast<StateId>(d); ++x) CHECK(ch.step(x, std::string_view("tick")));
    for (int n = 0; n <= d; ++n) CHECK(ch.accepts_marked(send_wait_receive(n)));
    Word late{"30"};
    for (int n = 0; n <= d; ++n) late.push_back("tick");
    CHECK_FALSE(ch.accepts_closed(late));
    CHECK(is_nonblocking(ch));
    CHECK(trim(ch) == ch);
  }
  auto ch4 = make_channel_bounded(spec_for(Bounded{4}));
  CHECK(ch4.num_states() == 6);
  CHECK(ch4.num_transitions() == 11);
  auto ch1 = make_channel_bounded(spec_for(Bounded{1}));
  CHECK_FALSE(ch1.accepts_closed({"30", "tick", "tick"}));
  CHECK(ch1.accepts_closed({"30", "tick", "30'"}));
}

TEST_CASE("capacity channel") {
  auto ch = make_channel(spec_for(Unbounded{}));
  auto n1 = make_channel_capacity(spec_for(Capacity{1}));
  CHECK(language_compare(n1, ch, LanguageKind::closed).relation == LanguageRelation::equal);
  CHECK(language_compare(n1, ch, LanguageKind::marked).relation == LanguageRelation::equal);

  auto n2 = make_channel_capacity(spec_for(Capacity{2}));
  CHECK(n2.accepts_closed({"30", "30"}));
  CHECK_FALSE(n2.accepts_closed({"30", "30", "30"}));

  auto n3 = make_channel_capacity(spec_for(Capacity{3}));
  CHECK(n3.accepts_marked({"30", "30'", "30", "30", "30'", "30'"}));

  for (int c = 1; c <= 3; ++c) {
    auto n = make_channel_capacity(spec_for(Capacity{c}));
    CHECK(n.num_states() == static_cast<std::size_t>(c + 1));
    for (StateId x = 0; x < n.num_states(); ++x) CHECK(n.step(x, std::string_view("tick")));
    for (const Word& w : words(7)) {
      CHECK(n.accepts_closed(w) == counter_accepts(w, c));
      bool balanced = counter_accepts(w, c) &&
                      std::count(w.begin(), w.end(), "30") == std::count(w.begin(), w.end(), "30'");
      CHECK(n.accepts_marked(w) == balanced);
    }
  }
}

TEST_CASE("channel dispatch") {
  CHECK(channel_automaton(spec_for(Unbounded{})) == make_channel(spec_for(Unbounded{})));
  CHECK(channel_automaton(spec_for(Bounded{3})) == make_channel_bounded(spec_for(Bounded{3})));
  CHECK(channel_automaton(spec_for(Capacity{2})) == make_channel_capacity(spec_for(Capacity{2})));
}

TEST_CASE("bounded channels nest") {
  auto ch = make_channel(spec_for(Unbounded{}));
  for (int d = 1; d <= 8; ++d) {
    auto a = make_channel_bounded(spec_for(Bounded{d}));
    auto b = make_channel_bounded(spec_for(Bounded{d + 1}));
    for (auto kind : {LanguageKind::closed, LanguageKind::marked}) {
      CHECK(language_compare(a, b, kind).relation == LanguageRelation::a_subset_b);
      CHECK(language_compare(b, ch, kind).relation == LanguageRelation::a_subset_b);
    }
  }
}

TEST_CASE("one signal between consecutive sends") {
  for (ChannelRegime r : {ChannelRegime{Unbounded{}}, ChannelRegime{Bounded{1}}, ChannelRegime{Bounded{3}}}) {
    auto ch = channel_automaton(spec_for(r));
    for (const Word& w : words(7)) {
      if (!ch.accepts_closed(w)) continue;
      CHECK(counter_accepts(w, 1));
    }
  }
}
