#include "raagfix/morphism.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include <json.hpp>

namespace raagfix {

Morphism::Morphism(ContextPtr ctx, std::vector<GroupElement> images)
    : ctx_(std::move(ctx)), images_(std::move(images)) {
  inverse_images_.reserve(images_.size());
  for (const GroupElement& g : images_) inverse_images_.push_back(invert(g));
  int n = ctx_->generators();
  matrix_ = IntMatrix(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) matrix_.at(x, y) = exponent_sum(images_[x], y);
}

Morphism Morphism::make(ContextPtr ctx, std::vector<GroupElement> images) {
  if (!ctx) throw Error("null group context");
  if (static_cast<int>(images.size()) != ctx->generators())
    throw Error("expected one image per generator");
  for (const GroupElement& g : images)
    if (!same_context(g.context(), ctx)) throw Error("image from a different alphabet");
  for (auto [x, y] : ctx->relation().edges()) {
    if (!commutes(images[x], images[y]))
      throw WellDefinednessViolation(
          x, y,
          "images of related generators '" + ctx->alphabet().name(x) + "' and '" +
              ctx->alphabet().name(y) + "' do not commute; the map is not well defined");
  }
  return Morphism(std::move(ctx), std::move(images));
}

Morphism Morphism::identity_morphism(const ContextPtr& ctx) {
  std::vector<GroupElement> images;
  for (int g = 0; g < ctx->generators(); ++g) images.push_back(generator_element(ctx, g));
  return make(ctx, std::move(images));
}

GroupElement Morphism::apply(const GroupElement& u) const {
  if (!same_context(u.context(), ctx_)) throw Error("alphabet mismatch in morphism application");
  Word w;
  for (const Letter& l : u.word()) {
    const Word& img = (l.sign > 0 ? images_[l.gen] : inverse_images_[l.gen]).word();
    w.insert(w.end(), img.begin(), img.end());
  }
  return normal_form(ctx_, w);
}

Morphism Morphism::power(int n) const {
  if (n < 1) throw Error("morphism power needs n >= 1");
  std::vector<GroupElement> images = images_;
  for (int step = 1; step < n; ++step)
    for (GroupElement& g : images) g = apply(g);
  return Morphism(ctx_, std::move(images));
}

namespace {

void check_witness_triple(const ContextPtr& ctx, const WitnessTriple& t) {
  int n = ctx->generators();
  if (t.a < 0 || t.a >= n || t.b < 0 || t.b >= n || t.c < 0 || t.c >= n)
    throw Error("witness triple index out of range");
  if (t.a == t.b || t.b == t.c || t.a == t.c)
    throw Error("witness triple entries must be pairwise distinct");
  const IndependenceRelation& rel = ctx->relation();
  if (!rel.related(t.a, t.b) || !rel.related(t.b, t.c))
    throw Error("witness triple needs (a,b) and (b,c) related");
  if (rel.related(t.a, t.c))
    throw Error("witness triple needs (a,c) unrelated");
}

} // namespace

Morphism witness_endomorphism(const ContextPtr& ctx, const WitnessTriple& t) {
  check_witness_triple(ctx, t);
  std::vector<GroupElement> images;
  for (int g = 0; g < ctx->generators(); ++g) {
    if (g == t.a)
      images.push_back(normal_form(ctx, {Letter{t.a, +1}, Letter{t.b, +1}}));
    else if (g == t.b)
      images.push_back(generator_element(ctx, t.b));
    else if (g == t.c)
      images.push_back(normal_form(ctx, {Letter{t.b, -1}, Letter{t.c, +1}}));
    else
      images.push_back(identity_element(ctx));
  }
  return Morphism::make(ctx, std::move(images));
}

Morphism witness_automorphism(const ContextPtr& ctx, const WitnessTriple& t) {
  check_witness_triple(ctx, t);
  if (!is_transitive_forest(ctx->relation()).first)
    throw Error("witness automorphism requires a transitive forest");
  std::vector<GroupElement> images;
  for (int g = 0; g < ctx->generators(); ++g) {
    if (g == t.a)
      images.push_back(normal_form(ctx, {Letter{t.a, +1}, Letter{t.b, +1}}));
    else if (g == t.c)
      images.push_back(normal_form(ctx, {Letter{t.b, -1}, Letter{t.c, +1}}));
    else
      images.push_back(generator_element(ctx, g));
  }
  return Morphism::make(ctx, std::move(images));
}

BundledAutomorphism fgno_example() {
  Alphabet alphabet({"a", "b", "c", "d", "e"});
  std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 3}, {2, 4}, {1, 4}};
  ContextPtr ctx = make_context(alphabet, IndependenceRelation(5, edges));
  auto word = [&](const std::string& s) { return normal_form(ctx, parse_word(ctx->alphabet(), s)); };
  std::vector<GroupElement> images{
      word("a b^-1"), word("b"), word("c"), word("d c^-1"), word("e b c"),
  };
  return {ctx, Morphism::make(ctx, std::move(images))};
}

std::string to_string(AutoVerdict v) {
  switch (v) {
    case AutoVerdict::Verified: return "Verified";
    case AutoVerdict::Refuted: return "Refuted";
    case AutoVerdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

AutoCertificate certify_automorphism(const Morphism& phi, int depth) {
  if (depth < 1) throw Error("certificate search depth must be at least 1");
  AutoCertificate cert;
  cert.depth = depth;
  cert.det = determinant(phi.abelianization());
  if (abs(cert.det) != 1) {
    cert.verdict = AutoVerdict::Refuted;
    return cert;
  }

  const ContextPtr& ctx = phi.context();
  int n = ctx->generators();

  // Breadth-first products of images and inverse images; the witness word in
  // the generators maps through phi onto the product.
  std::unordered_map<GroupElement, Word, GroupElementHash> found;
  std::vector<GroupElement> frontier;
  auto discover = [&](const GroupElement& g, const Word& witness) {
    if (found.emplace(g, witness).second) frontier.push_back(g);
  };
  discover(identity_element(ctx), {});

  for (int level = 1; level <= depth; ++level) {
    std::vector<GroupElement> previous = std::move(frontier);
    frontier.clear();
    for (const GroupElement& g : previous) {
      const Word& base = found.at(g);
      for (int x = 0; x < n; ++x) {
        for (int sign : {+1, -1}) {
          GroupElement next =
              multiply(g, sign > 0 ? phi.image(x) : invert(phi.image(x)));
          Word witness = base;
          witness.push_back(Letter{x, sign});
          discover(next, witness);
        }
      }
    }
  }

  std::vector<Word> preimages;
  for (int g = 0; g < n; ++g) {
    auto it = found.find(generator_element(ctx, g));
    if (it == found.end()) {
      cert.verdict = AutoVerdict::Unknown;
      return cert;
    }
    // Soundness gate: the witness word must actually map onto the generator.
    if (!(phi.apply(normal_form(ctx, it->second)) == generator_element(ctx, g)))
      throw Error("internal: surjectivity witness failed re-verification");
    preimages.push_back(it->second);
  }
  cert.verdict = AutoVerdict::Verified;
  cert.preimages = std::move(preimages);
  return cert;
}

Morphism parse_morphism(const ContextPtr& ctx, const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("morphism document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("images") || !doc["images"].is_object())
    throw Error("morphism document needs an \"images\" object");

  std::vector<GroupElement> images;
  for (int g = 0; g < ctx->generators(); ++g)
    images.push_back(generator_element(ctx, g)); // default: fixed
  for (const auto& [name, value] : doc["images"].items()) {
    int g = ctx->alphabet().index(name);
    if (!value.is_string()) throw Error("image of '" + name + "' must be a word string");
    images[g] = normal_form(ctx, parse_word(ctx->alphabet(), value.get<std::string>()));
  }
  return Morphism::make(ctx, std::move(images));
}

} // namespace raagfix
