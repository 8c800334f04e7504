#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "raagfix/error.hpp"

namespace raagfix {

// Finite ordered set of generator names. The list order is the total order
// used for every lexicographic choice in the library, so it is fixed at
// construction.
class Alphabet {
public:
  explicit Alphabet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  // Index of a generator name, or -1 when absent.
  int find(std::string_view name) const;
  // Index of a generator name; throws on unknown names.
  int index(std::string_view name) const;

  friend bool operator==(const Alphabet& x, const Alphabet& y) {
    return x.names_ == y.names_;
  }

private:
  std::vector<std::string> names_;
  std::map<std::string, int, std::less<>> by_name_;
};

// Symmetric irreflexive relation on generator indices, i.e. a finite simple
// graph on the alphabet. Pairs are stored smaller-index-first.
class IndependenceRelation {
public:
  IndependenceRelation(int vertex_count, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  bool related(int x, int y) const;
  const std::set<std::pair<int, int>>& edges() const { return edges_; }

  friend bool operator==(const IndependenceRelation& x, const IndependenceRelation& y) {
    return x.n_ == y.n_ && x.edges_ == y.edges_;
  }

private:
  int n_ = 0;
  std::set<std::pair<int, int>> edges_;
  std::vector<char> adj_; // n*n matrix
};

struct WitnessTriple {
  int a = -1;
  int b = -1;
  int c = -1;
  friend bool operator==(const WitnessTriple&, const WitnessTriple&) = default;
};

enum class ForbiddenKind { Path4, Cycle4 };

// Four vertices inducing a path (listed end to end) or a square (listed in
// cycle order).
struct ForbiddenSubgraph {
  ForbiddenKind kind = ForbiddenKind::Path4;
  std::array<int, 4> vertices{};
};

struct Classification {
  bool is_clique_union = false;
  std::optional<WitnessTriple> witness_triple;
  bool is_transitive_forest = false;
  std::optional<ForbiddenSubgraph> forbidden_witness;
  std::vector<std::vector<int>> factors; // connected components, least index first
};

// Reads a graph document: {"generators": ["a","b"], "edges": [["a","b"]]}.
std::pair<Alphabet, IndependenceRelation> parse_alphabet(const std::string& text);

// True iff every connected component is a clique. On false also returns the
// lexicographically least triple (a,b,c) with (a,b),(b,c) related,
// (a,c) unrelated and a,b,c pairwise distinct.
std::pair<bool, std::optional<WitnessTriple>> is_union_of_cliques(const IndependenceRelation& rel);

// True iff the graph has no induced path and no induced cycle on 4 vertices.
// On false also returns the first offending 4-subset in index order.
std::pair<bool, std::optional<ForbiddenSubgraph>> is_transitive_forest(const IndependenceRelation& rel);

// Connected components of a clique union, least generator index first.
// Throws when some component is not a clique.
std::vector<std::vector<int>> decompose(const IndependenceRelation& rel);

// Connected components of an arbitrary relation (no clique precondition).
std::vector<std::vector<int>> connected_components(const IndependenceRelation& rel);

Classification classify_alphabet(const IndependenceRelation& rel);

} // namespace raagfix
