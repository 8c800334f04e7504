#include "raagfix/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include <json.hpp>

namespace raagfix {

namespace {

bool valid_generator_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '^') return false;
  }
  return true;
}

// Disjoint-set forest over generator indices.
class UnionFind {
public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent_[std::max(x, y)] = std::min(x, y);
  }

private:
  std::vector<int> parent_;
};

} // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    const std::string& s = names_[i];
    if (!valid_generator_name(s))
      throw Error("invalid generator name '" + s + "' (empty, whitespace or '^')");
    if (!by_name_.emplace(s, i).second)
      throw Error("duplicate generator name '" + s + "'");
  }
}

int Alphabet::find(std::string_view name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? -1 : it->second;
}

int Alphabet::index(std::string_view name) const {
  int i = find(name);
  if (i < 0) throw Error("unknown generator name '" + std::string(name) + "'");
  return i;
}

IndependenceRelation::IndependenceRelation(int vertex_count,
                                           const std::vector<std::pair<int, int>>& edges)
    : n_(vertex_count), adj_(static_cast<size_t>(vertex_count) * vertex_count, 0) {
  if (vertex_count < 0) throw Error("negative vertex count");
  for (auto [x, y] : edges) {
    if (x < 0 || x >= n_ || y < 0 || y >= n_)
      throw Error("edge endpoint out of range");
    if (x == y) throw Error("self-loop edge on generator index " + std::to_string(x));
    edges_.emplace(std::min(x, y), std::max(x, y));
    adj_[static_cast<size_t>(x) * n_ + y] = 1;
    adj_[static_cast<size_t>(y) * n_ + x] = 1;
  }
}

bool IndependenceRelation::related(int x, int y) const {
  if (x < 0 || x >= n_ || y < 0 || y >= n_) throw Error("generator index out of range");
  return adj_[static_cast<size_t>(x) * n_ + y] != 0;
}

std::pair<Alphabet, IndependenceRelation> parse_alphabet(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("graph document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("generators") || !doc["generators"].is_array())
    throw Error("graph document needs a \"generators\" array");

  std::vector<std::string> names;
  for (const auto& g : doc["generators"]) {
    if (!g.is_string()) throw Error("generator entries must be strings");
    names.push_back(g.get<std::string>());
  }
  Alphabet alphabet(std::move(names));

  std::vector<std::pair<int, int>> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw Error("\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        throw Error("each edge must be a pair of generator names");
      int x = alphabet.index(e[0].get<std::string>());
      int y = alphabet.index(e[1].get<std::string>());
      if (x == y)
        throw Error("self-loop edge on generator '" + alphabet.name(x) + "'");
      edges.emplace_back(x, y);
    }
  }
  IndependenceRelation rel(alphabet.size(), edges);
  return {std::move(alphabet), std::move(rel)};
}

std::vector<std::vector<int>> connected_components(const IndependenceRelation& rel) {
  UnionFind uf(rel.vertex_count());
  for (auto [x, y] : rel.edges()) uf.unite(x, y);
  std::map<int, std::vector<int>> buckets;
  for (int v = 0; v < rel.vertex_count(); ++v) buckets[uf.find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : buckets) out.push_back(std::move(members));
  return out; // map key = least member, so factor order follows least index
}

std::pair<bool, std::optional<WitnessTriple>> is_union_of_cliques(const IndependenceRelation& rel) {
  bool clique_union = true;
  for (const auto& comp : connected_components(rel)) {
    for (size_t i = 0; i < comp.size() && clique_union; ++i)
      for (size_t j = i + 1; j < comp.size() && clique_union; ++j)
        if (!rel.related(comp[i], comp[j])) clique_union = false;
    if (!clique_union) break;
  }
  if (clique_union) return {true, std::nullopt};

  // Non-transitivity witness, lexicographically least under generator order.
  int n = rel.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (b == a || !rel.related(a, b)) continue;
      for (int c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        if (rel.related(b, c) && !rel.related(a, c))
          return {false, WitnessTriple{a, b, c}};
      }
    }
  throw Error("internal: component is not a clique but no witness triple exists");
}

namespace {

// Orders the 4 cited vertices: path end-to-end, cycle in rotation order.
ForbiddenSubgraph make_certificate(const IndependenceRelation& rel, const std::array<int, 4>& vs,
                                   int edge_count) {
  ForbiddenSubgraph cert;
  auto deg = [&](int v) {
    int d = 0;
    for (int u : vs)
      if (u != v && rel.related(u, v)) ++d;
    return d;
  };
  if (edge_count == 3) {
    cert.kind = ForbiddenKind::Path4;
    int end = -1;
    for (int v : vs)
      if (deg(v) == 1 && (end < 0 || v < end)) end = v;
    std::array<int, 4> order{end, -1, -1, -1};
    for (int k = 1; k < 4; ++k) {
      for (int v : vs) {
        bool used = false;
        for (int t = 0; t < k; ++t) used = used || order[t] == v;
        if (!used && rel.related(order[k - 1], v)) {
          order[k] = v;
          break;
        }
      }
    }
    cert.vertices = order;
  } else {
    cert.kind = ForbiddenKind::Cycle4;
    int start = *std::min_element(vs.begin(), vs.end());
    int nb1 = -1, nb2 = -1;
    for (int v : vs)
      if (v != start && rel.related(start, v)) (nb1 < 0 ? nb1 : nb2) = v;
    int second = std::min(nb1, nb2);
    int last = std::max(nb1, nb2);
    int third = -1;
    for (int v : vs)
      if (v != start && v != second && v != last) third = v;
    cert.vertices = {start, second, third, last};
  }
  return cert;
}

} // namespace

std::pair<bool, std::optional<ForbiddenSubgraph>> is_transitive_forest(const IndependenceRelation& rel) {
  int n = rel.vertex_count();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          std::array<int, 4> vs{i, j, k, l};
          int edge_count = 0;
          for (int s = 0; s < 4; ++s)
            for (int t = s + 1; t < 4; ++t)
              if (rel.related(vs[s], vs[t])) ++edge_count;
          std::array<int, 4> degs{};
          for (int s = 0; s < 4; ++s)
            for (int t = 0; t < 4; ++t)
              if (t != s && rel.related(vs[s], vs[t])) ++degs[s];
          std::sort(degs.begin(), degs.end());
          bool path4 = edge_count == 3 && degs == std::array<int, 4>{1, 1, 2, 2};
          bool cycle4 = edge_count == 4 && degs == std::array<int, 4>{2, 2, 2, 2};
          if (path4 || cycle4)
            return {false, make_certificate(rel, vs, edge_count)};
        }
  return {true, std::nullopt};
}

std::vector<std::vector<int>> decompose(const IndependenceRelation& rel) {
  auto [ok, witness] = is_union_of_cliques(rel);
  if (!ok)
    throw Error("relation is not a union of cliques; free-abelian factorization undefined");
  return connected_components(rel);
}

Classification classify_alphabet(const IndependenceRelation& rel) {
  Classification cls;
  auto [cliques, triple] = is_union_of_cliques(rel);
  cls.is_clique_union = cliques;
  cls.witness_triple = triple;
  auto [forest, cert] = is_transitive_forest(rel);
  cls.is_transitive_forest = forest;
  cls.forbidden_witness = cert;
  cls.factors = connected_components(rel);
  return cls;
}

} // namespace raagfix
