#include "raagfix/freesub.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace raagfix {

bool is_freely_reduced(const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i + 1] == inverse(w[i])) return false;
  return true;
}

namespace {

struct EdgeRec {
  int from;
  int gen;
  int to;
};

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

} // namespace

FoldedGraph FoldedGraph::fold(int rank, const std::vector<Word>& generators) {
  if (rank < 0) throw Error("negative free rank");
  std::vector<Word> reduced;
  for (const Word& g : generators) {
    for (const Letter& l : g)
      if (l.gen < 0 || l.gen >= rank) throw Error("generator letter outside the free alphabet");
    Word r = free_reduce(g);
    if (!r.empty()) reduced.push_back(std::move(r));
  }

  // Bouquet of petals, one per generator word.
  int states = 1; // 0 = base
  std::vector<EdgeRec> all_edges;
  for (const Word& g : reduced) {
    int cur = 0;
    for (size_t i = 0; i < g.size(); ++i) {
      int next = (i + 1 == g.size()) ? 0 : states++;
      if (g[i].sign > 0)
        all_edges.push_back({cur, g[i].gen, next});
      else
        all_edges.push_back({next, g[i].gen, cur});
      cur = next;
    }
  }

  // Fold: merge the targets of equally-labeled edges leaving (or entering)
  // the same state, until no pair is left.
  std::vector<int> parent(states);
  std::iota(parent.begin(), parent.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<int, int>, int> out_target, in_source;
    for (const EdgeRec& e : all_edges) {
      int from = find_root(parent, e.from);
      int to = find_root(parent, e.to);
      auto [it_out, fresh_out] = out_target.emplace(std::make_pair(from, e.gen), to);
      if (!fresh_out && it_out->second != to) {
        int x = find_root(parent, it_out->second);
        int y = find_root(parent, to);
        if (x != y) {
          parent[std::max(x, y)] = std::min(x, y);
          changed = true;
          break;
        }
      }
      auto [it_in, fresh_in] = in_source.emplace(std::make_pair(to, e.gen), from);
      if (!fresh_in && it_in->second != from) {
        int x = find_root(parent, it_in->second);
        int y = find_root(parent, from);
        if (x != y) {
          parent[std::max(x, y)] = std::min(x, y);
          changed = true;
          break;
        }
      }
    }
  }

  // Resolve to a deduplicated edge set on root states.
  std::set<std::tuple<int, int, int>> folded_edges;
  for (const EdgeRec& e : all_edges)
    folded_edges.emplace(find_root(parent, e.from), e.gen, find_root(parent, e.to));
  int base_root = find_root(parent, 0);

  // Prune to the core: repeatedly drop non-base states of degree <= 1.
  std::map<int, int> degree;
  for (auto [f, g, t] : folded_edges) {
    ++degree[f];
    ++degree[t];
  }
  std::set<int> removed;
  bool pruned = true;
  while (pruned) {
    pruned = false;
    for (auto [state, deg] : degree) {
      if (state == base_root || removed.count(state) || deg > 1) continue;
      removed.insert(state);
      for (auto it = folded_edges.begin(); it != folded_edges.end();) {
        auto [f, g, t] = *it;
        if (f == state || t == state) {
          --degree[f];
          --degree[t];
          it = folded_edges.erase(it);
        } else {
          ++it;
        }
      }
      pruned = true;
      break;
    }
  }

  // Canonical compaction: breadth-first from the base, letters in order,
  // forward direction before backward.
  std::map<int, std::map<int, int>> fwd, bwd;
  for (auto [f, g, t] : folded_edges) {
    fwd[f][g] = t;
    bwd[t][g] = f;
  }
  std::map<int, int> id;
  std::deque<int> queue{base_root};
  id[base_root] = 0;
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (int g = 0; g < rank; ++g) {
      for (int dir = 0; dir < 2; ++dir) {
        const auto& adj = dir == 0 ? fwd : bwd;
        auto sit = adj.find(s);
        if (sit == adj.end()) continue;
        auto git = sit->second.find(g);
        if (git == sit->second.end()) continue;
        if (!id.count(git->second)) {
          id[git->second] = static_cast<int>(id.size());
          queue.push_back(git->second);
        }
      }
    }
  }

  FoldedGraph out;
  out.rank_ = rank;
  out.generators_ = std::move(reduced);
  out.fwd_.assign(id.size(), std::vector<int>(rank, -1));
  out.bwd_.assign(id.size(), std::vector<int>(rank, -1));
  for (auto [f, g, t] : folded_edges) {
    out.fwd_[id.at(f)][g] = id.at(t);
    out.bwd_[id.at(t)][g] = id.at(f);
  }
  return out;
}

std::optional<int> FoldedGraph::step(int state, const Letter& l) const {
  int target = l.sign > 0 ? fwd_.at(state).at(l.gen) : bwd_.at(state).at(l.gen);
  if (target < 0) return std::nullopt;
  return target;
}

bool FoldedGraph::member(const Word& reduced_word) const {
  if (!is_freely_reduced(reduced_word)) throw Error("membership query must be freely reduced");
  int cur = base();
  for (const Letter& l : reduced_word) {
    auto next = step(cur, l);
    if (!next) return false;
    cur = *next;
  }
  return cur == base();
}

std::string FoldedGraph::signature() const {
  std::ostringstream out;
  out << state_count() << ';';
  for (int s = 0; s < state_count(); ++s)
    for (int g = 0; g < rank_; ++g)
      if (fwd_[s][g] >= 0) out << s << '-' << g << '>' << fwd_[s][g] << ';';
  return out.str();
}

std::string FoldedGraph::to_dot(const std::vector<std::string>& names) const {
  std::ostringstream out;
  out << "digraph folded {\n  rankdir=LR;\n  node [shape=circle];\n";
  out << "  0 [shape=doublecircle];\n";
  for (int s = 0; s < state_count(); ++s)
    for (int g = 0; g < rank_; ++g)
      if (fwd_[s][g] >= 0)
        out << "  " << s << " -> " << fwd_[s][g] << " [label=\"" << names.at(g) << "\"];\n";
  out << "}\n";
  return out.str();
}

Nfa Nfa::empty_language(int rank) {
  Nfa a;
  a.rank = rank;
  a.add_state();
  a.initial = {0};
  return a;
}

Nfa Nfa::single_word(int rank, const Word& w) {
  Nfa a;
  a.rank = rank;
  a.add_state();
  a.initial = {0};
  int cur = 0;
  for (const Letter& l : w) {
    a.add_state();
    a.add_edge(cur, letter_code(l), a.state_count - 1);
    cur = a.state_count - 1;
  }
  a.accepting = {cur};
  return a;
}

void Nfa::add_state() {
  ++state_count;
  edges.emplace_back();
  eps.emplace_back();
}

void Nfa::add_edge(int from, int code, int to) {
  if (from < 0 || from >= state_count || to < 0 || to >= state_count)
    throw Error("automaton edge state out of range");
  if (code < 0 || code >= 2 * rank) throw Error("automaton letter code out of range");
  auto& row = edges[from];
  if (std::find(row.begin(), row.end(), std::make_pair(code, to)) == row.end())
    row.emplace_back(code, to);
}

void Nfa::add_eps(int from, int to) {
  auto& row = eps[from];
  if (std::find(row.begin(), row.end(), to) == row.end()) row.push_back(to);
}

namespace {

std::vector<char> eps_reach(const Nfa& a, const std::vector<char>& start) {
  std::vector<char> seen = start;
  std::deque<int> queue;
  for (int s = 0; s < a.state_count; ++s)
    if (seen[s]) queue.push_back(s);
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (int t : a.eps[s])
      if (!seen[t]) {
        seen[t] = 1;
        queue.push_back(t);
      }
  }
  return seen;
}

std::vector<char> state_mask(const Nfa& a, const std::vector<int>& states) {
  std::vector<char> mask(a.state_count, 0);
  for (int s : states) mask[s] = 1;
  return mask;
}

} // namespace

bool Nfa::accepts(const Word& w) const {
  std::vector<char> cur = eps_reach(*this, state_mask(*this, initial));
  for (const Letter& l : w) {
    std::vector<char> next(state_count, 0);
    int code = letter_code(l);
    for (int s = 0; s < state_count; ++s) {
      if (!cur[s]) continue;
      for (auto [c, t] : edges[s])
        if (c == code) next[t] = 1;
    }
    cur = eps_reach(*this, next);
  }
  for (int s : accepting)
    if (cur[s]) return true;
  return false;
}

std::string Nfa::to_dot(const std::vector<std::string>& names) const {
  auto label = [&](int code) {
    std::string s = names.at(code / 2);
    if (code % 2) s += "^-1";
    return s;
  };
  std::ostringstream out;
  out << "digraph nfa {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (int s : accepting) out << "  " << s << " [shape=doublecircle];\n";
  for (int s : initial) out << "  start" << s << " [shape=none,label=\"\"];\n  start" << s
                            << " -> " << s << ";\n";
  for (int s = 0; s < state_count; ++s) {
    for (auto [c, t] : edges[s])
      out << "  " << s << " -> " << t << " [label=\"" << label(c) << "\"];\n";
    for (int t : eps[s]) out << "  " << s << " -> " << t << " [label=\"eps\"];\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

// Epsilon-free automaton with the same language.
Nfa eliminate_eps(const Nfa& a) {
  bool has_eps = false;
  for (const auto& row : a.eps) has_eps = has_eps || !row.empty();

  std::vector<char> accepting_mask = state_mask(a, a.accepting);
  Nfa out;
  out.rank = a.rank;
  out.state_count = a.state_count;
  out.edges.assign(a.state_count, {});
  out.eps.assign(a.state_count, {});
  out.initial = a.initial;

  for (int s = 0; s < a.state_count; ++s) {
    std::vector<char> start(a.state_count, 0);
    start[s] = 1;
    std::vector<char> reach = has_eps ? eps_reach(a, start) : start;
    bool acc = false;
    for (int t = 0; t < a.state_count; ++t) {
      if (!reach[t]) continue;
      acc = acc || accepting_mask[t];
      for (auto [c, u] : a.edges[t]) out.add_edge(s, c, u);
    }
    if (acc) out.accepting.push_back(s);
  }
  return out;
}

// Forbidden-bigram automaton for reduced words: state 0 is the start, state
// 1+code remembers the last letter; a letter may not follow its inverse.
Nfa reduced_words_automaton(int rank) {
  Nfa r;
  r.rank = rank;
  for (int s = 0; s < 2 * rank + 1; ++s) r.add_state();
  r.initial = {0};
  for (int s = 0; s < r.state_count; ++s) {
    r.accepting.push_back(s);
    for (int c = 0; c < 2 * rank; ++c) {
      if (s > 0 && inverse_code(s - 1) == c) continue;
      r.add_edge(s, c, 1 + c);
    }
  }
  return r;
}

// Product of two epsilon-free automata, restricted to reachable pairs and
// renumbered in discovery order.
Nfa product(const Nfa& x, const Nfa& y) {
  if (x.rank != y.rank) throw Error("automata over different free alphabets");
  Nfa out;
  out.rank = x.rank;
  std::map<std::pair<int, int>, int> id;
  std::deque<std::pair<int, int>> queue;
  auto intern = [&](int sx, int sy) {
    auto [it, fresh] = id.emplace(std::make_pair(sx, sy), static_cast<int>(id.size()));
    if (fresh) {
      out.add_state();
      queue.emplace_back(sx, sy);
    }
    return it->second;
  };
  for (int sx : x.initial)
    for (int sy : y.initial) out.initial.push_back(intern(sx, sy));

  std::vector<char> xacc = state_mask(x, x.accepting);
  std::vector<char> yacc = state_mask(y, y.accepting);
  while (!queue.empty()) {
    auto [sx, sy] = queue.front();
    queue.pop_front();
    int s = id.at({sx, sy});
    if (xacc[sx] && yacc[sy]) out.accepting.push_back(s);
    for (auto [cx, tx] : x.edges[sx])
      for (auto [cy, ty] : y.edges[sy])
        if (cx == cy) out.add_edge(s, cx, intern(tx, ty));
  }
  std::sort(out.accepting.begin(), out.accepting.end());
  return out;
}

} // namespace

ReductionAutomaton benois_closure(const Nfa& input) {
  Nfa a = input;
  // Saturate: p -x-> p', p' eps-reaches q', q' -x^-1-> q adds eps p -> q.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int p = 0; p < a.state_count && !changed; ++p) {
      for (auto [code, p2] : a.edges[p]) {
        std::vector<char> start(a.state_count, 0);
        start[p2] = 1;
        std::vector<char> reach = eps_reach(a, start);
        for (int q2 = 0; q2 < a.state_count; ++q2) {
          if (!reach[q2]) continue;
          for (auto [code2, q] : a.edges[q2]) {
            if (code2 != inverse_code(code)) continue;
            auto& row = a.eps[p];
            if (std::find(row.begin(), row.end(), q) == row.end()) {
              row.push_back(q);
              changed = true;
            }
          }
        }
        if (changed) break;
      }
    }
  }
  return product(eliminate_eps(a), reduced_words_automaton(a.rank));
}

Nfa nfa_union(const Nfa& x0, const Nfa& y0) {
  Nfa x = eliminate_eps(x0);
  Nfa y = eliminate_eps(y0);
  if (x.rank != y.rank) throw Error("automata over different free alphabets");
  Nfa out;
  out.rank = x.rank;
  for (int s = 0; s < x.state_count + y.state_count; ++s) out.add_state();
  int off = x.state_count;
  for (int s = 0; s < x.state_count; ++s)
    for (auto [c, t] : x.edges[s]) out.add_edge(s, c, t);
  for (int s = 0; s < y.state_count; ++s)
    for (auto [c, t] : y.edges[s]) out.add_edge(off + s, c, off + t);
  out.initial = x.initial;
  for (int s : y.initial) out.initial.push_back(off + s);
  out.accepting = x.accepting;
  for (int s : y.accepting) out.accepting.push_back(off + s);
  return out;
}

Nfa nfa_intersect(const Nfa& x, const Nfa& y) {
  return product(eliminate_eps(x), eliminate_eps(y));
}

Nfa nfa_complement_in_reduced(const Nfa& x0) {
  Nfa x = eliminate_eps(x0);
  // Subset construction with an explicit dead state, then flip.
  std::map<std::set<int>, int> id;
  std::deque<std::set<int>> queue;
  Nfa det;
  det.rank = x.rank;
  auto intern = [&](const std::set<int>& states) {
    auto [it, fresh] = id.emplace(states, static_cast<int>(id.size()));
    if (fresh) {
      det.add_state();
      queue.push_back(states);
    }
    return it->second;
  };
  std::set<int> start(x.initial.begin(), x.initial.end());
  det.initial = {intern(start)};
  std::vector<char> xacc = state_mask(x, x.accepting);
  while (!queue.empty()) {
    std::set<int> cur = queue.front();
    queue.pop_front();
    int s = id.at(cur);
    bool acc = std::any_of(cur.begin(), cur.end(), [&](int q) { return xacc[q]; });
    if (!acc) det.accepting.push_back(s); // flipped acceptance
    for (int c = 0; c < 2 * x.rank; ++c) {
      std::set<int> next;
      for (int q : cur)
        for (auto [cc, t] : x.edges[q])
          if (cc == c) next.insert(t);
      det.add_edge(s, c, intern(next)); // empty set doubles as the dead state
    }
  }
  std::sort(det.accepting.begin(), det.accepting.end());
  return product(det, reduced_words_automaton(x.rank));
}

ReductionAutomaton subgroup_language(const FoldedGraph& g) {
  Nfa flower;
  flower.rank = g.rank();
  flower.add_state(); // base
  flower.initial = {0};
  flower.accepting = {0};
  for (const Word& w : g.generators()) {
    int cur = 0;
    for (size_t i = 0; i < w.size(); ++i) {
      int next = 0;
      if (i + 1 < w.size()) {
        flower.add_state();
        next = flower.state_count - 1;
      }
      flower.add_edge(cur, letter_code(w[i]), next);
      flower.add_edge(next, inverse_code(letter_code(w[i])), cur);
      cur = next;
    }
  }
  return benois_closure(flower);
}

std::vector<Word> enumerate_accepted(const Nfa& a0, int max_len) {
  if (max_len < 0) throw Error("negative enumeration bound");
  Nfa a = eliminate_eps(a0);
  std::vector<char> acc = state_mask(a, a.accepting);

  std::vector<Word> out;
  struct Item {
    Word w;
    std::vector<char> states;
  };
  std::deque<Item> queue;
  queue.push_back({{}, state_mask(a, a.initial)});
  while (!queue.empty()) {
    Item item = std::move(queue.front());
    queue.pop_front();
    bool accepted = false;
    for (int s = 0; s < a.state_count; ++s) accepted = accepted || (item.states[s] && acc[s]);
    if (accepted) out.push_back(item.w);
    if (static_cast<int>(item.w.size()) == max_len) continue;
    for (int c = 0; c < 2 * a.rank; ++c) {
      std::vector<char> next(a.state_count, 0);
      bool any = false;
      for (int s = 0; s < a.state_count; ++s) {
        if (!item.states[s]) continue;
        for (auto [cc, t] : a.edges[s])
          if (cc == c) {
            next[t] = 1;
            any = true;
          }
      }
      if (!any) continue;
      Word w = item.w;
      w.push_back(code_letter(c));
      queue.push_back({std::move(w), std::move(next)});
    }
  }
  return out; // breadth-first in letter-code order = shortlex
}

} // namespace raagfix
