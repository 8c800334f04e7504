#pragma once

#include <optional>
#include <string>
#include <vector>

#include "raagfix/trace.hpp"

namespace raagfix {

// Letters over a rank-n free alphabet are encoded 0..2n-1:
// code 2g is generator g, code 2g+1 its inverse.
inline int letter_code(const Letter& l) { return 2 * l.gen + (l.sign < 0 ? 1 : 0); }
inline int inverse_code(int code) { return code ^ 1; }
inline Letter code_letter(int code) { return Letter{code / 2, (code % 2) ? -1 : +1}; }

bool is_freely_reduced(const Word& w);

// Stallings-folded core graph of a finitely generated subgroup of a free
// group. Membership of reduced words is exact.
class FoldedGraph {
public:
  // Generators are free words; they are freely reduced here, empty ones
  // dropped. The empty list gives the trivial subgroup.
  static FoldedGraph fold(int rank, const std::vector<Word>& generators);

  int rank() const { return rank_; }
  int state_count() const { return static_cast<int>(fwd_.size()); }
  int base() const { return 0; }
  const std::vector<Word>& generators() const { return generators_; }

  // State reached by one letter, or nullopt when the edge is absent.
  std::optional<int> step(int state, const Letter& l) const;

  // True iff the freely reduced word labels a base-to-base path.
  bool member(const Word& reduced_word) const;

  // Canonical serialization; isomorphic folded graphs (same base) agree.
  std::string signature() const;
  std::string to_dot(const std::vector<std::string>& generator_names) const;

private:
  int rank_ = 0;
  std::vector<std::vector<int>> fwd_; // fwd_[state][gen] = target or -1
  std::vector<std::vector<int>> bwd_; // bwd_[state][gen] = source or -1
  std::vector<Word> generators_;
};

// Nondeterministic automaton over the symmetrized alphabet of a rank-n free
// group, with optional epsilon transitions.
struct Nfa {
  int rank = 0;
  int state_count = 0;
  std::vector<std::vector<std::pair<int, int>>> edges; // per state: (letter code, target)
  std::vector<std::vector<int>> eps;                   // per state: epsilon targets
  std::vector<int> initial;
  std::vector<int> accepting;

  static Nfa empty_language(int rank);
  static Nfa single_word(int rank, const Word& w);

  void add_state();
  void add_edge(int from, int code, int to);
  void add_eps(int from, int to);
  bool accepts(const Word& w) const;
  std::string to_dot(const std::vector<std::string>& generator_names) const;
};

// After closure the automaton is epsilon-free and accepts exactly
// { reduced(w) : w accepted by the input }, all words freely reduced.
using ReductionAutomaton = Nfa;

ReductionAutomaton benois_closure(const Nfa& a);

// Boolean operations on reduced-word languages. Complement is taken within
// the reduced words, never within the whole free monoid.
Nfa nfa_union(const Nfa& x, const Nfa& y);
Nfa nfa_intersect(const Nfa& x, const Nfa& y);
Nfa nfa_complement_in_reduced(const Nfa& x);

// Reduced language of the subgroup: flower automaton on the stored
// generators, then reduction closure. Agrees with FoldedGraph::member.
ReductionAutomaton subgroup_language(const FoldedGraph& g);

// Accepted words of length <= max_len, in shortlex order.
std::vector<Word> enumerate_accepted(const Nfa& a, int max_len);

} // namespace raagfix
