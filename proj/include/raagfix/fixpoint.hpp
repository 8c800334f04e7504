#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "raagfix/freesub.hpp"
#include "raagfix/morphism.hpp"

namespace raagfix {

enum class Scope { Endomorphisms, Automorphisms };
enum class Answer { AllFinitelyGenerated, NotAllFinitelyGenerated, OutsideTheoremScope };

std::string to_string(Scope s);
std::string to_string(Answer a);

// Headline verdict: whether every endomorphism (or automorphism) of the
// graph group has finitely generated fixed and periodic subgroups. The
// automorphism question is only classified over transitive forests; outside
// them both outcomes occur (see the bundled demos ex-fgyes and ex-fgno), so
// the verdict is OutsideTheoremScope.
struct Verdict {
  Scope scope = Scope::Endomorphisms;
  Answer answer = Answer::AllFinitelyGenerated;
  Classification classification;
  std::optional<Morphism> witness;
};

Verdict classify_group(const ContextPtr& ctx, Scope scope);

// Exactly the ball elements fixed by phi, in shortlex order.
std::vector<GroupElement> fix_in_ball(const Morphism& phi, int radius);

// Ball elements with least period <= kmax, paired with that period.
std::vector<std::pair<GroupElement, int>> per_in_ball(const Morphism& phi, int radius, int kmax);

struct ProjectionReport {
  std::vector<int> generators;
  int radius = 0;
  int checked = 0;
  std::vector<GroupElement> violations;
  bool passed() const { return violations.empty(); }
};

// Verifies that every fixed point in the ball has equal exponent sums on the
// listed generators.
ProjectionReport projection_invariant_check(const Morphism& phi, const std::vector<int>& generators,
                                            int radius);

struct ChainLevel {
  int level = 0;
  int generator_count = 0;
  int states = 0;
  Word probe;        // rank-2 coded word over the projection pair
  bool probe_member = false;
};

// Ascending-subgroup experiment: project a family of verified fixed points
// onto an unrelated generator pair, fold each prefix of the projected family
// into a subgroup of F_2, and probe the next projection for membership. A
// probe failing at every level exhibits a strictly ascending chain inside
// the projected fixed subgroup.
struct ChainReport {
  int x = -1;                        // projection pair, generator indices
  int y = -1;
  std::vector<GroupElement> family;  // w_1 .. w_{N+1}, each verified fixed
  std::vector<Word> projections;     // rank-2 coded projections of the family
  std::vector<ChainLevel> levels;
  bool stabilized = false;           // probe true at some level and thereafter
};

// The default family is x^i y^i (i = 1..levels+1) as elements of the ambient
// group; a caller-supplied family replaces it, e.g. when the fixed points
// projecting onto the pair involve further generators.
ChainReport chain_experiment(const Morphism& phi, std::pair<int, int> pair, int levels,
                             const std::vector<GroupElement>& family = {});

struct PerPowerReport {
  int radius = 0;
  int kmax = 0;
  int kmax_half = 0;
  size_t count_phi = 0;
  size_t count_phi_squared = 0;
  bool equal = false;
};

// Compares the periodic points of phi (periods <= kmax) with those of phi^2
// (periods <= ceil(kmax/2)) over the same ball, as sets of elements.
PerPowerReport per_equals_fix_of_power_check(const Morphism& phi, int radius, int kmax);

// ---- Direct-product analysis for the 4-cycle graph (F_2 x F_2) ----

// Images of the four generators, each split into its two components:
// a word over the left factor and a word over the right factor, both in
// rank-2 coded letters.
using ProductImages = std::array<std::pair<Word, Word>, 4>;

enum class ProductType { TypeI, TypeII, NotRecognized };

std::string to_string(ProductType t);

// TypeI: both factors preserved, phi = (phi1, phi2).
// TypeII: factors swapped through the letter-renaming isomorphism,
//         (u,v) -> (v renamed left) phi2', (u renamed right) phi1'.
struct ProductClassification {
  ProductType type = ProductType::NotRecognized;
  std::string diagnostic;
  ProductImages images{};
  std::array<Word, 2> comp_left{};  // phi1 images (left-factor coding)
  std::array<Word, 2> comp_right{}; // phi2 images (right-factor coding)
};

// The 4-cycle group as a context: generators a,b,c,d with a,b the left free
// factor, c,d the right one, and every cross pair related.
ContextPtr square_context();

// Free group context (empty relation).
ContextPtr free_context(const std::vector<std::string>& names);

// The corresponding endomorphism of the 4-cycle group.
Morphism product_morphism(const ContextPtr& square, const ProductImages& images);

ProductClassification fgyes_classify(const ProductImages& images);

struct ProductFixReport {
  std::vector<GroupElement> generators; // verified fixed, on the square context
  std::string source;                   // "internal" or "supplied"
};

// Fixed-subgroup generators for a recognized automorphism.
// TypeI: embeds generators of the two component fixed subgroups; TypeII:
// pairs the fixed points of the composite left-factor map with their mirror.
// Component fixed subgroups are computed internally only for
// letter-permutation-with-inversion maps (the fixed letters generate); any
// other component map needs caller-supplied generators, which are verified
// and rejected when not fixed.
ProductFixReport fgyes_fix(const ContextPtr& square, const ProductClassification& cls,
                           const std::vector<Word>& left_fix_gens = {},
                           const std::vector<Word>& right_fix_gens = {});

} // namespace raagfix
