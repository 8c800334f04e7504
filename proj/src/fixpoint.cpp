#include "raagfix/fixpoint.hpp"

#include <algorithm>

namespace raagfix {

std::string to_string(Scope s) {
  return s == Scope::Endomorphisms ? "endomorphisms" : "automorphisms";
}

std::string to_string(Answer a) {
  switch (a) {
    case Answer::AllFinitelyGenerated: return "AllFinitelyGenerated";
    case Answer::NotAllFinitelyGenerated: return "NotAllFinitelyGenerated";
    case Answer::OutsideTheoremScope: return "OutsideTheoremScope";
  }
  return "OutsideTheoremScope";
}

std::string to_string(ProductType t) {
  switch (t) {
    case ProductType::TypeI: return "TypeI";
    case ProductType::TypeII: return "TypeII";
    case ProductType::NotRecognized: return "NotRecognized";
  }
  return "NotRecognized";
}

Verdict classify_group(const ContextPtr& ctx, Scope scope) {
  Verdict v;
  v.scope = scope;
  v.classification = classify_alphabet(ctx->relation());
  if (scope == Scope::Endomorphisms) {
    if (v.classification.is_clique_union) {
      v.answer = Answer::AllFinitelyGenerated;
    } else {
      v.answer = Answer::NotAllFinitelyGenerated;
      v.witness = witness_endomorphism(ctx, *v.classification.witness_triple);
    }
  } else {
    if (!v.classification.is_transitive_forest) {
      v.answer = Answer::OutsideTheoremScope;
    } else if (v.classification.is_clique_union) {
      v.answer = Answer::AllFinitelyGenerated;
    } else {
      v.answer = Answer::NotAllFinitelyGenerated;
      v.witness = witness_automorphism(ctx, *v.classification.witness_triple);
    }
  }
  return v;
}

std::vector<GroupElement> fix_in_ball(const Morphism& phi, int radius) {
  std::vector<GroupElement> out;
  for (const GroupElement& u : enumerate_ball(phi.context(), radius))
    if (phi.apply(u) == u) out.push_back(u);
  return out;
}

std::vector<std::pair<GroupElement, int>> per_in_ball(const Morphism& phi, int radius, int kmax) {
  if (kmax < 1) throw Error("kmax must be at least 1");
  std::vector<std::pair<GroupElement, int>> out;
  for (const GroupElement& u : enumerate_ball(phi.context(), radius)) {
    GroupElement v = u;
    for (int k = 1; k <= kmax; ++k) {
      v = phi.apply(v);
      if (v == u) {
        out.emplace_back(u, k);
        break;
      }
    }
  }
  return out;
}

ProjectionReport projection_invariant_check(const Morphism& phi, const std::vector<int>& generators,
                                            int radius) {
  if (generators.size() < 2) throw Error("projection check needs at least two generators");
  for (int g : generators)
    if (g < 0 || g >= phi.context()->generators()) throw Error("projection generator out of range");
  ProjectionReport rep;
  rep.generators = generators;
  rep.radius = radius;
  for (const GroupElement& u : fix_in_ball(phi, radius)) {
    ++rep.checked;
    long long first = exponent_sum(u, generators[0]);
    for (size_t i = 1; i < generators.size(); ++i)
      if (exponent_sum(u, generators[i]) != first) {
        rep.violations.push_back(u);
        break;
      }
  }
  return rep;
}

ChainReport chain_experiment(const Morphism& phi, std::pair<int, int> pair, int levels,
                             const std::vector<GroupElement>& family_in) {
  const ContextPtr& ctx = phi.context();
  auto [x, y] = pair;
  if (x < 0 || x >= ctx->generators() || y < 0 || y >= ctx->generators() || x == y)
    throw Error("chain experiment needs two distinct generators");
  if (ctx->relation().related(x, y))
    throw Error("chain experiment pair must be unrelated (independent in the graph)");
  if (levels < 1) throw Error("chain experiment needs at least one level");

  std::vector<GroupElement> family = family_in;
  if (family.empty()) {
    for (int i = 1; i <= levels + 1; ++i) {
      Word w;
      for (int k = 0; k < i; ++k) w.push_back(Letter{x, +1});
      for (int k = 0; k < i; ++k) w.push_back(Letter{y, +1});
      family.push_back(normal_form(ctx, w));
    }
  }
  if (static_cast<int>(family.size()) < levels + 1)
    throw Error("chain experiment family must supply levels+1 elements");
  family.resize(levels + 1);

  ChainReport rep;
  rep.x = x;
  rep.y = y;
  rep.family = family;
  for (size_t i = 0; i < family.size(); ++i) {
    if (!same_context(family[i].context(), ctx))
      throw Error("chain family element from a different alphabet");
    if (!(phi.apply(family[i]) == family[i]))
      throw Error("chain family element " + std::to_string(i + 1) + " ('" +
                  format_word(ctx->alphabet(), family[i].word()) +
                  "') is not fixed by the morphism; experiment aborted");
    Word proj = free_projection(family[i], {x, y});
    Word coded;
    for (const Letter& l : proj) coded.push_back(Letter{l.gen == x ? 0 : 1, l.sign});
    rep.projections.push_back(std::move(coded));
  }

  for (int n = 1; n <= levels; ++n) {
    std::vector<Word> gens(rep.projections.begin(), rep.projections.begin() + n);
    FoldedGraph h = FoldedGraph::fold(2, gens);
    const Word& probe = rep.projections[n];
    rep.levels.push_back(ChainLevel{n, n, h.state_count(), probe, h.member(probe)});
  }
  for (size_t i = 0; i < rep.levels.size() && !rep.stabilized; ++i) {
    bool from_here = true;
    for (size_t j = i; j < rep.levels.size(); ++j) from_here = from_here && rep.levels[j].probe_member;
    rep.stabilized = from_here;
  }
  return rep;
}

PerPowerReport per_equals_fix_of_power_check(const Morphism& phi, int radius, int kmax) {
  PerPowerReport rep;
  rep.radius = radius;
  rep.kmax = kmax;
  rep.kmax_half = (kmax + 1) / 2;
  auto p1 = per_in_ball(phi, radius, kmax);
  auto p2 = per_in_ball(phi.power(2), radius, rep.kmax_half);
  rep.count_phi = p1.size();
  rep.count_phi_squared = p2.size();
  rep.equal = p1.size() == p2.size();
  for (size_t i = 0; rep.equal && i < p1.size(); ++i)
    rep.equal = p1[i].first == p2[i].first; // both shortlex-ordered
  return rep;
}

// ---- F_2 x F_2 analysis ----

ContextPtr square_context() {
  Alphabet alphabet({"a", "b", "c", "d"});
  std::vector<std::pair<int, int>> edges{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  return make_context(std::move(alphabet), IndependenceRelation(4, edges));
}

ContextPtr free_context(const std::vector<std::string>& names) {
  Alphabet alphabet(names);
  int n = alphabet.size();
  return make_context(std::move(alphabet), IndependenceRelation(n, {}));
}

namespace {

Word substitute_free(const std::array<Word, 2>& images, const Word& w) {
  Word out;
  for (const Letter& l : w) {
    if (l.gen < 0 || l.gen > 1) throw Error("rank-2 word letter out of range");
    const Word& img = images[l.gen];
    if (l.sign > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) out.push_back(inverse(*it));
    }
  }
  return free_reduce(out);
}

bool is_signed_permutation(const std::array<Word, 2>& images) {
  if (images[0].size() != 1 || images[1].size() != 1) return false;
  return images[0][0].gen != images[1][0].gen;
}

std::vector<int> fixed_letters(const std::array<Word, 2>& images) {
  std::vector<int> out;
  for (int g = 0; g < 2; ++g)
    if (images[g] == Word{Letter{g, +1}}) out.push_back(g);
  return out;
}

// Embeds a rank-2 coded word into the square group: offset 0 = left factor
// {a,b}, offset 2 = right factor {c,d}.
Word embed_pair_word(const Word& w, int offset) {
  Word out;
  for (const Letter& l : w) out.push_back(Letter{l.gen + offset, l.sign});
  return out;
}

AutoVerdict certify_rank2(const std::array<Word, 2>& images) {
  ContextPtr f2 = free_context({"g1", "g2"});
  std::vector<GroupElement> imgs{normal_form(f2, images[0]), normal_form(f2, images[1])};
  return certify_automorphism(Morphism::make(f2, std::move(imgs)), 4).verdict;
}

enum class Side { Trivial, Left, Right, Mixed };

Side word_side(const std::pair<Word, Word>& image) {
  bool left = !image.first.empty();
  bool right = !image.second.empty();
  if (left && right) return Side::Mixed;
  if (left) return Side::Left;
  if (right) return Side::Right;
  return Side::Trivial;
}

const char* kSquareNames[4] = {"a", "b", "c", "d"};

} // namespace

Morphism product_morphism(const ContextPtr& square, const ProductImages& images) {
  std::vector<GroupElement> imgs;
  for (int g = 0; g < 4; ++g) {
    Word w = embed_pair_word(free_reduce(images[g].first), 0);
    Word r = embed_pair_word(free_reduce(images[g].second), 2);
    w.insert(w.end(), r.begin(), r.end());
    imgs.push_back(normal_form(square, w));
  }
  return Morphism::make(square, std::move(imgs));
}

ProductClassification fgyes_classify(const ProductImages& images_in) {
  ProductClassification cls;
  cls.images = images_in;
  for (auto& [left, right] : cls.images) {
    left = free_reduce(left);
    right = free_reduce(right);
    for (const Letter& l : left)
      if (l.gen < 0 || l.gen > 1) throw Error("left component letter out of range");
    for (const Letter& l : right)
      if (l.gen < 0 || l.gen > 1) throw Error("right component letter out of range");
  }

  std::array<Side, 4> sides{};
  for (int g = 0; g < 4; ++g) sides[g] = word_side(cls.images[g]);
  for (int g = 0; g < 4; ++g) {
    if (sides[g] == Side::Mixed) {
      cls.diagnostic = std::string("image of '") + kSquareNames[g] +
                       "' has letters in both factors; no automorphism of the product does this";
      return cls;
    }
    if (sides[g] == Side::Trivial) {
      cls.diagnostic = std::string("image of '") + kSquareNames[g] +
                       "' is trivial; the map cannot be injective";
      return cls;
    }
  }

  bool type1 = sides[0] == Side::Left && sides[1] == Side::Left && sides[2] == Side::Right &&
               sides[3] == Side::Right;
  bool type2 = sides[0] == Side::Right && sides[1] == Side::Right && sides[2] == Side::Left &&
               sides[3] == Side::Left;
  if (!type1 && !type2) {
    cls.diagnostic = "images do not preserve or swap the two factors consistently";
    return cls;
  }

  if (type1) {
    cls.comp_left = {cls.images[0].first, cls.images[1].first};
    cls.comp_right = {cls.images[2].second, cls.images[3].second};
  } else {
    // The renaming isomorphism is index-preserving, so the component maps
    // read off directly from the opposite-factor words.
    cls.comp_left = {cls.images[0].second, cls.images[1].second};
    cls.comp_right = {cls.images[2].first, cls.images[3].first};
  }

  AutoVerdict v1 = certify_rank2(cls.comp_left);
  if (v1 != AutoVerdict::Verified) {
    cls.diagnostic = "left component map not certified as an automorphism (" + to_string(v1) + ")";
    return cls;
  }
  AutoVerdict v2 = certify_rank2(cls.comp_right);
  if (v2 != AutoVerdict::Verified) {
    cls.diagnostic = "right component map not certified as an automorphism (" + to_string(v2) + ")";
    return cls;
  }
  cls.type = type1 ? ProductType::TypeI : ProductType::TypeII;
  return cls;
}

namespace {

std::vector<Word> component_fix_generators(const std::array<Word, 2>& images,
                                           const std::vector<Word>& supplied, const char* which,
                                           std::string& source) {
  if (supplied.empty()) {
    if (!is_signed_permutation(images))
      throw Error(std::string("fixed-subgroup generators of the ") + which +
                  " component must be supplied; internal computation covers only "
                  "letter-permutation-with-inversion maps");
    source = "internal";
    std::vector<Word> out;
    for (int g : fixed_letters(images)) out.push_back(Word{Letter{g, +1}});
    return out;
  }
  source = "supplied";
  std::vector<Word> out;
  for (const Word& z : supplied) {
    Word r = free_reduce(z);
    if (!(substitute_free(images, r) == r))
      throw Error(std::string("a supplied generator for the ") + which +
                  " component is not fixed by it; rejected");
    out.push_back(std::move(r));
  }
  return out;
}

} // namespace

ProductFixReport fgyes_fix(const ContextPtr& square, const ProductClassification& cls,
                           const std::vector<Word>& left_fix_gens,
                           const std::vector<Word>& right_fix_gens) {
  if (cls.type == ProductType::NotRecognized)
    throw Error("fixed-subgroup construction needs a recognized TypeI or TypeII automorphism");
  Morphism phi = product_morphism(square, cls.images);

  ProductFixReport rep;
  if (cls.type == ProductType::TypeI) {
    std::string src_left, src_right;
    auto zs = component_fix_generators(cls.comp_left, left_fix_gens, "left", src_left);
    auto ws = component_fix_generators(cls.comp_right, right_fix_gens, "right", src_right);
    rep.source = src_left == "internal" && src_right == "internal" ? "internal" : "supplied";
    for (const Word& z : zs) rep.generators.push_back(normal_form(square, embed_pair_word(z, 0)));
    for (const Word& w : ws) rep.generators.push_back(normal_form(square, embed_pair_word(w, 2)));
  } else {
    // Fixed points are the pairs (u, u phi1 renamed); u ranges over the fixed
    // subgroup of the composite left-factor map.
    std::array<Word, 2> composite{
        substitute_free(cls.comp_right, cls.comp_left[0]),
        substitute_free(cls.comp_right, cls.comp_left[1]),
    };
    std::string src;
    auto zs = component_fix_generators(composite, left_fix_gens, "composite", src);
    rep.source = src;
    for (const Word& z : zs) {
      Word pair_word = embed_pair_word(z, 0);
      Word mirror = embed_pair_word(substitute_free(cls.comp_left, z), 2);
      pair_word.insert(pair_word.end(), mirror.begin(), mirror.end());
      rep.generators.push_back(normal_form(square, pair_word));
    }
  }

  for (const GroupElement& g : rep.generators)
    if (!(phi.apply(g) == g))
      throw Error("constructed fixed-subgroup generator failed re-verification: " +
                  format_word(square->alphabet(), g.word()));
  return rep;
}

} // namespace raagfix
