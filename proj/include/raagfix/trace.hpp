#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "raagfix/alphabet.hpp"

namespace raagfix {

struct Letter {
  int gen = 0;
  int sign = +1; // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

// A raw, possibly unreduced word over the symmetrized alphabet.
using Word = std::vector<Letter>;

inline Letter inverse(Letter l) { return {l.gen, -l.sign}; }

// Letter order: generator order first, positive sign before negative.
inline bool letter_less(const Letter& x, const Letter& y) {
  if (x.gen != y.gen) return x.gen < y.gen;
  return x.sign > y.sign;
}

bool word_less(const Word& x, const Word& y);        // lexicographic, same length assumed or not
bool word_shortlex_less(const Word& x, const Word& y); // length, then lexicographic

struct WordHash {
  size_t operator()(const Word& w) const;
};

// Alphabet together with its independence relation: the ambient group every
// element of this library lives in.
class GroupContext {
public:
  GroupContext(Alphabet alphabet, IndependenceRelation relation);

  const Alphabet& alphabet() const { return alphabet_; }
  const IndependenceRelation& relation() const { return relation_; }
  int generators() const { return alphabet_.size(); }

  // Distinct generators related by I; same-generator letters never commute
  // as letters (they are dependent even though their images commute).
  bool letters_commute(const Letter& x, const Letter& y) const {
    return x.gen != y.gen && relation_.related(x.gen, y.gen);
  }

private:
  Alphabet alphabet_;
  IndependenceRelation relation_;
};

using ContextPtr = std::shared_ptr<const GroupContext>;

ContextPtr make_context(Alphabet alphabet, IndependenceRelation relation);
ContextPtr parse_context(const std::string& graph_json);
bool same_context(const ContextPtr& x, const ContextPtr& y);

// Group element in canonical normal form: fully reduced, and
// lexicographically least in its commutation class.
class GroupElement {
public:
  GroupElement() = default;

  const Word& word() const { return word_; }
  const ContextPtr& context() const { return ctx_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }

  friend bool operator==(const GroupElement& u, const GroupElement& v) {
    return u.word_ == v.word_;
  }
  // Deterministic order used for report output: length, then lexicographic.
  friend bool operator<(const GroupElement& u, const GroupElement& v) {
    return word_shortlex_less(u.word_, v.word_);
  }

private:
  friend GroupElement normal_form(const ContextPtr&, const Word&);
  GroupElement(ContextPtr ctx, Word w) : ctx_(std::move(ctx)), word_(std::move(w)) {}

  ContextPtr ctx_;
  Word word_;
};

struct GroupElementHash {
  size_t operator()(const GroupElement& u) const { return WordHash{}(u.word()); }
};

GroupElement normal_form(const ContextPtr& ctx, const Word& w);
GroupElement identity_element(const ContextPtr& ctx);
GroupElement generator_element(const ContextPtr& ctx, int gen, int sign = +1);

GroupElement multiply(const GroupElement& u, const GroupElement& v);
GroupElement invert(const GroupElement& u);
GroupElement power_element(const GroupElement& u, int n); // n may be negative
bool commutes(const GroupElement& u, const GroupElement& v);

// Signed exponent sum of one generator (projection onto its Z factor).
long long exponent_sum(const GroupElement& u, int gen);

// Deletes letters outside `targets` and freely reduces. `targets` must be an
// independent set (pairwise unrelated), which makes this a homomorphism onto
// the free group on the kept generators.
Word free_projection(const GroupElement& u, const std::vector<int>& targets);

// All distinct elements of normal-form length <= radius, in shortlex order.
std::vector<GroupElement> enumerate_ball(const ContextPtr& ctx, int radius);

// Word syntax: whitespace-separated tokens, each `name` or `name^-1`;
// the empty string is the identity.
Word parse_word(const Alphabet& alphabet, const std::string& text);
std::string format_word(const Alphabet& alphabet, const Word& w);

// Free reduction of a raw word (adjacent inverse pairs only; no commutation).
Word free_reduce(const Word& w);

} // namespace raagfix
