#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "raagfix/freesub.hpp"

using namespace raagfix;

namespace {

const Alphabet& ac_alphabet() {
  static Alphabet a({"a", "c"});
  return a;
}

Word W(const std::string& text) { return parse_word(ac_alphabet(), text); }

std::string S(const Word& w) { return format_word(ac_alphabet(), w); }

std::vector<std::string> accepted_strings(const Nfa& a, int max_len) {
  std::vector<std::string> out;
  for (const Word& w : enumerate_accepted(a, max_len)) out.push_back(S(w));
  return out;
}

// All freely reduced words of length exactly len over rank-2 letters.
void reduced_words(int len, const std::function<void(const Word&)>& visit) {
  Word w;
  std::function<void()> rec = [&] {
    if (static_cast<int>(w.size()) == len) {
      visit(w);
      return;
    }
    for (int code = 0; code < 4; ++code) {
      Letter l = code_letter(code);
      if (!w.empty() && l == inverse(w.back())) continue;
      w.push_back(l);
      rec();
      w.pop_back();
    }
  };
  rec();
}

Nfa random_nfa(std::mt19937& rng) {
  Nfa a;
  a.rank = 2;
  int states = 2 + rng() % 4;
  for (int s = 0; s < states; ++s) a.add_state();
  int edge_count = states + rng() % (2 * states);
  for (int e = 0; e < edge_count; ++e)
    a.add_edge(rng() % states, rng() % 4, rng() % states);
  a.initial = {0};
  a.accepting = {static_cast<int>(rng() % states)};
  if (rng() % 2) a.accepting.push_back(static_cast<int>(rng() % states));
  std::sort(a.accepting.begin(), a.accepting.end());
  a.accepting.erase(std::unique(a.accepting.begin(), a.accepting.end()), a.accepting.end());
  return a;
}

// Reductions of every accepted word of length <= max_len, collected by a
// word-tree walk that keeps the reduction stack incrementally.
std::set<std::string> reductions_of_accepted(const Nfa& a, int max_len) {
  std::set<std::string> out;
  std::vector<char> initial(a.state_count, 0);
  for (int s : a.initial) initial[s] = 1;
  std::vector<char> acc(a.state_count, 0);
  for (int s : a.accepting) acc[s] = 1;

  Word stack;
  std::function<void(const std::vector<char>&, int)> rec = [&](const std::vector<char>& mask,
                                                               int depth) {
    bool accepted = false;
    for (int s = 0; s < a.state_count; ++s) accepted = accepted || (mask[s] && acc[s]);
    if (accepted) out.insert(S(stack));
    if (depth == max_len) return;
    for (int code = 0; code < 4; ++code) {
      std::vector<char> next(a.state_count, 0);
      bool any = false;
      for (int s = 0; s < a.state_count; ++s) {
        if (!mask[s]) continue;
        for (auto [c, t] : a.edges[s])
          if (c == code) {
            next[t] = 1;
            any = true;
          }
      }
      if (!any) continue;
      Letter l = code_letter(code);
      bool cancelled = !stack.empty() && stack.back() == inverse(l);
      if (cancelled)
        stack.pop_back();
      else
        stack.push_back(l);
      rec(next, depth + 1);
      if (cancelled)
        stack.push_back(inverse(l));
      else
        stack.pop_back();
    }
  };
  rec(initial, 0);
  return out;
}

} // namespace

TEST_CASE("free reduction") {
  CHECK(free_reduce(W("a a^-1")).empty());
  CHECK(S(free_reduce(W("a c c^-1 a"))) == "a a");
  CHECK(is_freely_reduced(W("a c a^-1")));
  CHECK(!is_freely_reduced(W("a a^-1")));
}

TEST_CASE("folding the worked subgroups") {
  FoldedGraph one = FoldedGraph::fold(2, {W("a")});
  CHECK(one.state_count() == 1);
  CHECK(one.member(W("a")));
  CHECK(one.member(W("a a")));
  CHECK(!one.member(W("c")));

  FoldedGraph stair = FoldedGraph::fold(2, {W("a c"), W("a a c c")});
  CHECK(stair.state_count() == 3);
  CHECK(stair.member(W("a c")));
  CHECK(stair.member(W("a a c c")));
  CHECK(!stair.member(W("a a a c c c")));
  CHECK(!stair.member(W("a")));
  // no third consecutive a-step from the base
  auto s1 = stair.step(stair.base(), Letter{0, +1});
  REQUIRE(s1.has_value());
  auto s2 = stair.step(*s1, Letter{0, +1});
  REQUIRE(s2.has_value());
  CHECK(!stair.step(*s2, Letter{0, +1}).has_value());

  FoldedGraph whole = FoldedGraph::fold(2, {W("a"), W("c")});
  CHECK(whole.state_count() == 1);
  CHECK(whole.member(W("a c^-1 a c")));

  FoldedGraph trivial = FoldedGraph::fold(2, {});
  CHECK(trivial.state_count() == 1);
  CHECK(trivial.member(Word{}));
  CHECK(!trivial.member(W("a")));

  CHECK(stair.member(Word{}));
  CHECK_THROWS_AS(stair.member(W("a a^-1")), Error); // unreduced query
}

TEST_CASE("folding is confluent under generator permutations") {
  std::vector<std::vector<Word>> generator_sets{
      {W("a c"), W("a a c c"), W("a a a c c c")},
      {W("a c a^-1"), W("c c"), W("a a")},
      {W("a"), W("c a c^-1")},
      {W("a c"), W("c a")},
  };
  std::mt19937 rng(5);
  for (const auto& gens : generator_sets) {
    FoldedGraph reference = FoldedGraph::fold(2, gens);
    std::vector<Word> shuffled = gens;
    for (int trial = 0; trial < 6; ++trial) {
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      REQUIRE(FoldedGraph::fold(2, shuffled).signature() == reference.signature());
    }
  }
}

TEST_CASE("membership accepts every bounded product of generators") {
  std::vector<std::vector<Word>> generator_sets{
      {W("a c"), W("a a c c")},
      {W("a c a^-1"), W("c c")},
      {W("a a"), W("c")},
  };
  for (const auto& gens : generator_sets) {
    FoldedGraph g = FoldedGraph::fold(2, gens);
    int n = static_cast<int>(gens.size());
    std::function<void(const Word&, int)> rec = [&](const Word& prefix, int factors) {
      if (factors > 0) {
        Word reduced = free_reduce(prefix);
        REQUIRE(g.member(reduced));
      }
      if (factors == 6) return;
      for (int i = 0; i < n; ++i) {
        for (int sign : {+1, -1}) {
          Word next = prefix;
          const Word& gen = gens[i];
          if (sign > 0)
            next.insert(next.end(), gen.begin(), gen.end());
          else
            for (auto it = gen.rbegin(); it != gen.rend(); ++it) next.push_back(inverse(*it));
          rec(next, factors + 1);
        }
      }
    };
    rec({}, 0);
  }
}

TEST_CASE("reduction closure on the worked examples") {
  // {a a^-1} reduces to the empty word
  Nfa aa = Nfa::single_word(2, W("a a^-1"));
  CHECK(accepted_strings(benois_closure(aa), 3) == std::vector<std::string>{""});

  // a* a^-1: reductions are a^-1 and every a^k
  Nfa star;
  star.rank = 2;
  star.add_state();
  star.add_state();
  star.add_edge(0, 0, 0);
  star.add_edge(0, 1, 1);
  star.initial = {0};
  star.accepting = {1};
  CHECK(accepted_strings(benois_closure(star), 3) ==
        std::vector<std::string>{"", "a", "a^-1", "a a", "a a a"});

  // (a c^-1)* is already reduced: the closure leaves the language alone
  Nfa alt;
  alt.rank = 2;
  alt.add_state();
  alt.add_state();
  alt.add_edge(0, 0, 1); // a
  alt.add_edge(1, 3, 0); // c^-1
  alt.initial = {0};
  alt.accepting = {0};
  CHECK(accepted_strings(benois_closure(alt), 6) == accepted_strings(alt, 6));

  // epsilon transitions in the input participate in the saturation:
  // a -eps-> (c c^-1) a^-1 reduces into {epsilon}
  Nfa eps;
  eps.rank = 2;
  for (int s = 0; s < 5; ++s) eps.add_state();
  eps.add_edge(0, 0, 1);  // a
  eps.add_eps(1, 2);
  eps.add_edge(2, 2, 3);  // c
  eps.add_edge(3, 3, 4);  // c^-1
  eps.add_edge(4, 1, 0);  // a^-1 back to the start
  eps.initial = {0};
  eps.accepting = {0};
  CHECK(accepted_strings(benois_closure(eps), 4) == std::vector<std::string>{""});
}

TEST_CASE("reduction closure is reduction-correct on random automata") {
  std::mt19937 rng(20250403);
  for (int trial = 0; trial < 8; ++trial) {
    Nfa a = random_nfa(rng);
    ReductionAutomaton closed = benois_closure(a);

    // every accepted word's reduction is accepted by the closure, and the
    // closure accepts reduced words only
    std::set<std::string> reductions8 = reductions_of_accepted(a, 8);
    for (const std::string& r : reductions8) {
      Word w = parse_word(ac_alphabet(), r);
      REQUIRE(is_freely_reduced(w));
      REQUIRE(closed.accepts(w));
    }

    // every closure word of length <= 4 arises as the reduction of some
    // accepted word; the shortest preimage can be much longer than the word
    // itself (cancelling excursions), so search with a growing bound
    std::set<std::string> reductions16;
    bool have16 = false;
    for (const Word& v : enumerate_accepted(closed, 4)) {
      REQUIRE(is_freely_reduced(v));
      if (reductions8.count(S(v))) continue;
      if (!have16) {
        reductions16 = reductions_of_accepted(a, 16);
        have16 = true;
      }
      REQUIRE(reductions16.count(S(v)) == 1);
    }
  }
}

TEST_CASE("boolean operations") {
  FoldedGraph stair = FoldedGraph::fold(2, {W("a c"), W("a a c c")});
  ReductionAutomaton lang = subgroup_language(stair);

  // positive cone a* c*
  Nfa cone;
  cone.rank = 2;
  cone.add_state();
  cone.add_state();
  cone.add_edge(0, 0, 0);
  cone.add_edge(0, 2, 1);
  cone.add_edge(1, 2, 1);
  cone.initial = {0};
  cone.accepting = {0, 1};

  Nfa meet = nfa_intersect(lang, cone);
  CHECK(meet.accepts(W("a c")));
  CHECK(meet.accepts(W("a a c c")));
  CHECK(!meet.accepts(W("a a a c c c")));
  CHECK(accepted_strings(meet, 6) == std::vector<std::string>{"", "a c", "a a c c"});

  // X with its complement within the reduced words
  Nfa comp = nfa_complement_in_reduced(lang);
  CHECK(enumerate_accepted(nfa_intersect(lang, comp), 5).empty());
  for (int len = 0; len <= 4; ++len)
    reduced_words(len, [&](const Word& w) { REQUIRE(lang.accepts(w) != comp.accepts(w)); });

  // union with the empty language changes nothing
  Nfa empty = Nfa::empty_language(2);
  Nfa joined = nfa_union(lang, empty);
  for (int len = 0; len <= 5; ++len)
    reduced_words(len, [&](const Word& w) { REQUIRE(lang.accepts(w) == joined.accepts(w)); });
}

TEST_CASE("subgroup language") {
  // <a^2>: even powers of a, both signs
  FoldedGraph even = FoldedGraph::fold(2, {W("a a")});
  CHECK(accepted_strings(subgroup_language(even), 4) ==
        std::vector<std::string>{"", "a a", "a^-1 a^-1", "a a a a", "a^-1 a^-1 a^-1 a^-1"});

  FoldedGraph trivial = FoldedGraph::fold(2, {});
  CHECK(accepted_strings(subgroup_language(trivial), 4) == std::vector<std::string>{""});

  // agreement with folded-graph membership on all reduced words
  FoldedGraph stair = FoldedGraph::fold(2, {W("a c"), W("a a c c")});
  ReductionAutomaton lang = subgroup_language(stair);
  for (int len = 0; len <= 8; ++len)
    reduced_words(len, [&](const Word& w) { REQUIRE(lang.accepts(w) == stair.member(w)); });
}

TEST_CASE("dot output") {
  FoldedGraph stair = FoldedGraph::fold(2, {W("a c")});
  std::string dot = stair.to_dot({"a", "c"});
  CHECK(dot.find("digraph") != std::string::npos);
  Nfa a = Nfa::single_word(2, W("a c^-1"));
  CHECK(a.to_dot({"a", "c"}).find("c^-1") != std::string::npos);
}
