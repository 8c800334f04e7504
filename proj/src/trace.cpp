#include "raagfix/trace.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace raagfix {

bool word_less(const Word& x, const Word& y) {
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), letter_less);
}

bool word_shortlex_less(const Word& x, const Word& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return word_less(x, y);
}

size_t WordHash::operator()(const Word& w) const {
  size_t h = 1469598103934665603ull;
  for (const Letter& l : w) {
    size_t v = (static_cast<size_t>(l.gen) << 1) | (l.sign < 0 ? 1u : 0u);
    h = (h ^ v) * 1099511628211ull;
  }
  return h;
}

GroupContext::GroupContext(Alphabet alphabet, IndependenceRelation relation)
    : alphabet_(std::move(alphabet)), relation_(std::move(relation)) {
  if (alphabet_.size() != relation_.vertex_count())
    throw Error("independence relation size does not match alphabet size");
}

ContextPtr make_context(Alphabet alphabet, IndependenceRelation relation) {
  return std::make_shared<const GroupContext>(std::move(alphabet), std::move(relation));
}

ContextPtr parse_context(const std::string& graph_json) {
  auto [alphabet, relation] = parse_alphabet(graph_json);
  return make_context(std::move(alphabet), std::move(relation));
}

bool same_context(const ContextPtr& x, const ContextPtr& y) {
  if (x == y) return true;
  if (!x || !y) return false;
  return x->alphabet() == y->alphabet() && x->relation() == y->relation();
}

namespace {

void check_letters(const GroupContext& ctx, const Word& w) {
  for (const Letter& l : w) {
    if (l.gen < 0 || l.gen >= ctx.generators() || (l.sign != 1 && l.sign != -1))
      throw Error("letter outside the ambient alphabet");
  }
}

// Deletes cancellable pairs (positions i<j, w[j] = w[i]^-1, every letter
// strictly between commuting with w[i]), innermost-leftmost first, until the
// word is reduced.
void reduce_word(const GroupContext& ctx, Word& w) {
  for (;;) {
    int best_i = -1, best_j = -1;
    const int n = static_cast<int>(w.size());
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (w[j] == inverse(w[i])) {
          if (best_i < 0 || j - i < best_j - best_i ||
              (j - i == best_j - best_i && i < best_i)) {
            best_i = i;
            best_j = j;
          }
          break; // nearest partner for this i; farther ones are never needed
        }
        if (!ctx.letters_commute(w[j], w[i])) break;
      }
    }
    if (best_i < 0) return;
    w.erase(w.begin() + best_j);
    w.erase(w.begin() + best_i);
  }
}

// Greedy linear extension: repeatedly emit the least letter whose earlier
// residual letters all commute with it. On a reduced word this yields the
// lexicographically least member of its commutation class.
Word canonicalize_word(const GroupContext& ctx, const Word& w) {
  Word out;
  out.reserve(w.size());
  std::vector<char> used(w.size(), 0);
  for (size_t emitted = 0; emitted < w.size(); ++emitted) {
    int best = -1;
    for (int p = 0; p < static_cast<int>(w.size()); ++p) {
      if (used[p]) continue;
      bool available = true;
      for (int q = 0; q < p && available; ++q)
        if (!used[q] && !ctx.letters_commute(w[q], w[p])) available = false;
      if (available && (best < 0 || letter_less(w[p], w[best]))) best = p;
    }
    out.push_back(w[best]);
    used[best] = 1;
  }
  return out;
}

} // namespace

GroupElement normal_form(const ContextPtr& ctx, const Word& w) {
  if (!ctx) throw Error("null group context");
  check_letters(*ctx, w);
  Word reduced = w;
  reduce_word(*ctx, reduced);
  return GroupElement(ctx, canonicalize_word(*ctx, reduced));
}

GroupElement identity_element(const ContextPtr& ctx) { return normal_form(ctx, {}); }

GroupElement generator_element(const ContextPtr& ctx, int gen, int sign) {
  return normal_form(ctx, {Letter{gen, sign}});
}

namespace {

const ContextPtr& common_context(const GroupElement& u, const GroupElement& v) {
  if (!same_context(u.context(), v.context()))
    throw Error("alphabet mismatch between group elements");
  return u.context() ? u.context() : v.context();
}

} // namespace

GroupElement multiply(const GroupElement& u, const GroupElement& v) {
  const ContextPtr& ctx = common_context(u, v);
  Word w = u.word();
  w.insert(w.end(), v.word().begin(), v.word().end());
  return normal_form(ctx, w);
}

GroupElement invert(const GroupElement& u) {
  Word w;
  w.reserve(u.word().size());
  for (auto it = u.word().rbegin(); it != u.word().rend(); ++it) w.push_back(inverse(*it));
  return normal_form(u.context(), w);
}

GroupElement power_element(const GroupElement& u, int n) {
  GroupElement base = n < 0 ? invert(u) : u;
  int reps = n < 0 ? -n : n;
  Word w;
  w.reserve(base.word().size() * reps);
  for (int i = 0; i < reps; ++i)
    w.insert(w.end(), base.word().begin(), base.word().end());
  return normal_form(u.context(), w);
}

bool commutes(const GroupElement& u, const GroupElement& v) {
  return multiply(u, v) == multiply(v, u);
}

long long exponent_sum(const GroupElement& u, int gen) {
  long long s = 0;
  for (const Letter& l : u.word())
    if (l.gen == gen) s += l.sign;
  return s;
}

Word free_reduce(const Word& w) {
  Word out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back() == inverse(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word free_projection(const GroupElement& u, const std::vector<int>& targets) {
  const ContextPtr& ctx = u.context();
  if (!ctx) throw Error("null group context");
  for (size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0 || targets[i] >= ctx->generators())
      throw Error("projection target out of range");
    for (size_t j = i + 1; j < targets.size(); ++j) {
      if (targets[i] == targets[j]) throw Error("duplicate projection target");
      if (ctx->relation().related(targets[i], targets[j]))
        throw Error("projection targets '" + ctx->alphabet().name(targets[i]) + "' and '" +
                    ctx->alphabet().name(targets[j]) +
                    "' are related; the projection is not a homomorphism to a free group");
    }
  }
  Word kept;
  for (const Letter& l : u.word())
    if (std::find(targets.begin(), targets.end(), l.gen) != targets.end()) kept.push_back(l);
  return free_reduce(kept);
}

std::vector<GroupElement> enumerate_ball(const ContextPtr& ctx, int radius) {
  if (radius < 0) throw Error("negative ball radius");
  std::vector<GroupElement> all;
  std::vector<GroupElement> frontier;
  std::unordered_set<Word, WordHash> seen;

  GroupElement id = identity_element(ctx);
  all.push_back(id);
  frontier.push_back(id);
  seen.insert(id.word());

  for (int len = 1; len <= radius; ++len) {
    std::vector<GroupElement> next;
    for (const GroupElement& u : frontier) {
      for (int g = 0; g < ctx->generators(); ++g) {
        for (int sign : {+1, -1}) {
          Word w = u.word();
          w.push_back(Letter{g, sign});
          GroupElement v = normal_form(ctx, w);
          if (v.length() == len && seen.insert(v.word()).second) next.push_back(v);
        }
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return all;
}

Word parse_word(const Alphabet& alphabet, const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    int sign = +1;
    std::string name = token;
    if (auto pos = token.find('^'); pos != std::string::npos) {
      if (token.substr(pos) != "^-1")
        throw Error("bad word token '" + token + "' (expected name or name^-1)");
      name = token.substr(0, pos);
      sign = -1;
    }
    w.push_back(Letter{alphabet.index(name), sign});
  }
  return w;
}

std::string format_word(const Alphabet& alphabet, const Word& w) {
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    out += alphabet.name(l.gen);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

} // namespace raagfix
