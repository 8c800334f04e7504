#pragma once

#include <string>
#include <vector>

#include "raagfix/abelian.hpp"
#include "raagfix/trace.hpp"

namespace raagfix {

class WellDefinednessViolation : public Error {
public:
  WellDefinednessViolation(int x, int y, std::string message)
      : Error(std::move(message)), x(x), y(y) {}
  int x;
  int y;
};

// Endomorphism given by generator images. Construction verifies the
// commutation obligations, so a Morphism value is always well defined.
class Morphism {
public:
  static Morphism make(ContextPtr ctx, std::vector<GroupElement> images);
  static Morphism identity_morphism(const ContextPtr& ctx);

  const ContextPtr& context() const { return ctx_; }
  const GroupElement& image(int gen) const { return images_.at(gen); }
  const std::vector<GroupElement>& images() const { return images_; }

  GroupElement apply(const GroupElement& u) const;
  Morphism power(int n) const; // n >= 1

  // M[x][y] = exponent sum of y in the image of x; exponent vectors act on
  // the right: vec(apply(u)) = vec(u) * M.
  const IntMatrix& abelianization() const { return matrix_; }

  friend bool operator==(const Morphism& f, const Morphism& g) {
    return f.images_ == g.images_;
  }

private:
  Morphism(ContextPtr ctx, std::vector<GroupElement> images);

  ContextPtr ctx_;
  std::vector<GroupElement> images_;
  std::vector<GroupElement> inverse_images_;
  IntMatrix matrix_;
};

// The endomorphism a -> ab, b -> b, c -> b^-1 c, everything else -> 1, for a
// non-transitivity witness triple (a,b,c). Its fixed subgroup is the
// library's standard non-finitely-generated example.
Morphism witness_endomorphism(const ContextPtr& ctx, const WitnessTriple& triple);

// The automorphism a -> ab, c -> b^-1 c, everything else fixed. Requires a
// transitive forest, which is what makes the images commute where they must.
Morphism witness_automorphism(const ContextPtr& ctx, const WitnessTriple& triple);

// Bundled 5-generator example: edges a-b, b-c, c-d, c-e, b-e with
// a -> a b^-1, d -> d c^-1, e -> e b c. An automorphism whose fixed and
// periodic subgroups are not finitely generated.
struct BundledAutomorphism {
  ContextPtr ctx;
  Morphism phi;
};
BundledAutomorphism fgno_example();

enum class AutoVerdict { Verified, Refuted, Unknown };

std::string to_string(AutoVerdict v);

struct AutoCertificate {
  AutoVerdict verdict = AutoVerdict::Unknown;
  Int det;                      // determinant of the abelianization
  std::vector<Word> preimages;  // per generator, word w with apply(w) = generator (Verified only)
  int depth = 0;                // search depth used
};

// Certificate procedure, not a decision procedure: Refuted iff |det| != 1;
// Verified iff every generator is a product of at most `depth` images and
// inverse images (surjectivity, which suffices because graph groups are
// hopfian); Unknown otherwise.
AutoCertificate certify_automorphism(const Morphism& phi, int depth = 4);

// Reads a morphism document {"images": {"a": "a b"}}. A missing generator
// maps to itself; an explicit empty string maps to the identity.
Morphism parse_morphism(const ContextPtr& ctx, const std::string& text);

} // namespace raagfix
