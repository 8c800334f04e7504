#include "raagfix/report.hpp"

#include <algorithm>
#include <limits>

namespace raagfix {

namespace {

std::string pair_word_string(const std::string& xname, const std::string& yname, const Word& w) {
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    out += l.gen == 0 ? xname : yname;
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

} // namespace

Json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

Json graph_to_json(const ContextPtr& ctx) {
  Json j;
  j["generators"] = ctx->alphabet().names();
  Json edges = Json::array();
  for (auto [x, y] : ctx->relation().edges())
    edges.push_back({ctx->alphabet().name(x), ctx->alphabet().name(y)});
  j["edges"] = edges;
  return j;
}

Json classification_to_json(const ContextPtr& ctx, const Classification& cls) {
  const Alphabet& a = ctx->alphabet();
  Json j;
  j["is_clique_union"] = cls.is_clique_union;
  j["is_transitive_forest"] = cls.is_transitive_forest;
  if (cls.witness_triple) {
    j["witness_triple"] = {a.name(cls.witness_triple->a), a.name(cls.witness_triple->b),
                           a.name(cls.witness_triple->c)};
  }
  if (cls.forbidden_witness) {
    Json fw;
    fw["kind"] = cls.forbidden_witness->kind == ForbiddenKind::Path4 ? "path4" : "cycle4";
    Json vs = Json::array();
    for (int v : cls.forbidden_witness->vertices) vs.push_back(a.name(v));
    fw["vertices"] = vs;
    j["forbidden_witness"] = fw;
  }
  Json factors = Json::array();
  for (const auto& comp : cls.factors) {
    Json f;
    Json gens = Json::array();
    for (int g : comp) gens.push_back(a.name(g));
    f["generators"] = gens;
    f["rank"] = static_cast<int>(comp.size());
    factors.push_back(f);
  }
  j["factors"] = factors;
  return j;
}

Json morphism_to_json(const Morphism& phi) {
  const Alphabet& a = phi.context()->alphabet();
  Json images;
  for (int g = 0; g < phi.context()->generators(); ++g)
    images[a.name(g)] = format_word(a, phi.image(g).word());
  Json j;
  j["images"] = images;
  return j;
}

Json verdict_to_json(const ContextPtr& ctx, const Verdict& v) {
  Json j;
  j["scope"] = to_string(v.scope);
  j["answer"] = to_string(v.answer);
  j["classification"] = classification_to_json(ctx, v.classification);
  if (v.witness) j["witness"] = morphism_to_json(*v.witness);
  if (v.answer == Answer::OutsideTheoremScope)
    j["note"] =
        "the graph is not a transitive forest, so the automorphism question is not settled "
        "by the classification; both outcomes occur on such graphs (demos ex-fgyes and ex-fgno)";
  return j;
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json lattice_to_json(const Lattice& l) {
  Json j;
  j["ambient"] = l.ambient();
  j["rank"] = l.rank();
  Json basis = Json::array();
  for (const auto& row : l.basis()) {
    Json r = Json::array();
    for (const Int& v : row) r.push_back(int_to_json(v));
    basis.push_back(r);
  }
  j["basis"] = basis;
  return j;
}

Json certificate_to_json(const ContextPtr& ctx, const AutoCertificate& cert) {
  Json j;
  j["verdict"] = to_string(cert.verdict);
  j["determinant"] = int_to_json(cert.det);
  j["depth"] = cert.depth;
  if (cert.verdict == AutoVerdict::Verified) {
    Json pre;
    for (int g = 0; g < ctx->generators(); ++g)
      pre[ctx->alphabet().name(g)] = format_word(ctx->alphabet(), cert.preimages[g]);
    j["preimages"] = pre;
  }
  return j;
}

Json projection_report_to_json(const ContextPtr& ctx, const ProjectionReport& rep) {
  Json j;
  Json gens = Json::array();
  for (int g : rep.generators) gens.push_back(ctx->alphabet().name(g));
  j["generators"] = gens;
  j["radius"] = rep.radius;
  j["fixed_points_checked"] = rep.checked;
  Json viol = Json::array();
  for (const GroupElement& u : rep.violations)
    viol.push_back(format_word(ctx->alphabet(), u.word()));
  j["violations"] = viol;
  j["passed"] = rep.passed();
  return j;
}

Json chain_report_to_json(const ContextPtr& ctx, const ChainReport& rep) {
  const Alphabet& a = ctx->alphabet();
  Json j;
  j["pair"] = {a.name(rep.x), a.name(rep.y)};
  Json family = Json::array();
  for (const GroupElement& u : rep.family) family.push_back(format_word(a, u.word()));
  j["family"] = family;
  Json levels = Json::array();
  for (const ChainLevel& lv : rep.levels) {
    Json l;
    l["level"] = lv.level;
    l["generators"] = lv.generator_count;
    l["states"] = lv.states;
    l["probe"] = pair_word_string(a.name(rep.x), a.name(rep.y), lv.probe);
    l["probe_member"] = lv.probe_member;
    levels.push_back(l);
  }
  j["levels"] = levels;
  j["stabilized"] = rep.stabilized;
  j["note"] = rep.stabilized
                  ? "the probe eventually stays inside: the folded chain stabilizes at this horizon"
                  : "every probe fails: the projected subgroup chain is strictly ascending through "
                    "the computed horizon, finite evidence that the fixed subgroup is not finitely "
                    "generated";
  return j;
}

Json per_power_report_to_json(const PerPowerReport& rep) {
  Json j;
  j["radius"] = rep.radius;
  j["kmax"] = rep.kmax;
  j["kmax_half"] = rep.kmax_half;
  j["periodic_count"] = rep.count_phi;
  j["periodic_count_of_square"] = rep.count_phi_squared;
  j["equal"] = rep.equal;
  return j;
}

namespace {

ContextPtr path3_context() {
  return make_context(Alphabet({"a", "b", "c"}), IndependenceRelation(3, {{0, 1}, {1, 2}}));
}

ContextPtr star4_context() {
  return make_context(Alphabet({"a", "b", "c", "d"}),
                      IndependenceRelation(4, {{0, 1}, {1, 2}, {1, 3}}));
}

Json fixed_family_json(const ContextPtr& ctx, const Morphism& phi,
                       const std::vector<GroupElement>& family) {
  Json j;
  Json elems = Json::array();
  bool all_fixed = true;
  for (const GroupElement& u : family) {
    bool fixed = phi.apply(u) == u;
    all_fixed = all_fixed && fixed;
    Json e;
    e["word"] = format_word(ctx->alphabet(), u.word());
    e["fixed"] = fixed;
    elems.push_back(e);
  }
  j["elements"] = elems;
  j["all_fixed"] = all_fixed;
  return j;
}

std::vector<GroupElement> power_pair_family(const ContextPtr& ctx, int x, int y, int count) {
  std::vector<GroupElement> family;
  for (int i = 1; i <= count; ++i) {
    Word w;
    for (int k = 0; k < i; ++k) w.push_back(Letter{x, +1});
    for (int k = 0; k < i; ++k) w.push_back(Letter{y, +1});
    family.push_back(normal_form(ctx, w));
  }
  return family;
}

Json demo_witness_scenario(const char* name, const ContextPtr& ctx, Scope scope, int chain_levels,
                           int projection_radius) {
  Verdict verdict = classify_group(ctx, scope);
  const Morphism& phi = *verdict.witness;
  const WitnessTriple& t = *verdict.classification.witness_triple;

  Json j;
  j["demo"] = name;
  j["graph"] = graph_to_json(ctx);
  j["verdict"] = verdict_to_json(ctx, verdict);
  j["abelianization"] = matrix_to_json(phi.abelianization());
  j["abelianization_fixed_lattice"] = lattice_to_json(fixed_lattice(phi.abelianization()));
  j["projection_check"] =
      projection_report_to_json(ctx, projection_invariant_check(phi, {t.a, t.c}, projection_radius));

  auto family = power_pair_family(ctx, t.a, t.c, chain_levels + 1);
  j["fixed_family"] = fixed_family_json(ctx, phi, family);

  Json probes = Json::array();
  auto probe = [&](const GroupElement& u) {
    Json p;
    p["word"] = format_word(ctx->alphabet(), u.word());
    p["image"] = format_word(ctx->alphabet(), phi.apply(u).word());
    p["fixed"] = phi.apply(u) == u;
    probes.push_back(p);
  };
  probe(generator_element(ctx, t.a));
  probe(generator_element(ctx, t.c));
  probe(multiply(power_element(generator_element(ctx, t.a), 2), generator_element(ctx, t.c)));
  j["non_fixed_probes"] = probes;

  j["chain"] = chain_report_to_json(ctx, chain_experiment(phi, {t.a, t.c}, chain_levels));

  if (scope == Scope::Automorphisms)
    j["certificate"] = certificate_to_json(ctx, certify_automorphism(phi, 2));
  return j;
}

Json demo_thm_endo() {
  ContextPtr ctx = path3_context();
  Json j = demo_witness_scenario("thm-endo", ctx, Scope::Endomorphisms, 6, 4);

  // Reduced language of the level-2 subgroup intersected with a* c*.
  Verdict verdict = classify_group(ctx, Scope::Endomorphisms);
  const WitnessTriple& t = *verdict.classification.witness_triple;
  auto family = power_pair_family(ctx, t.a, t.c, 2);
  std::vector<Word> gens;
  for (const GroupElement& u : family) {
    Word proj = free_projection(u, {t.a, t.c});
    Word coded;
    for (const Letter& l : proj) coded.push_back(Letter{l.gen == t.a ? 0 : 1, l.sign});
    gens.push_back(coded);
  }
  FoldedGraph level2 = FoldedGraph::fold(2, gens);

  Nfa star;
  star.rank = 2;
  star.add_state();
  star.add_state();
  star.add_edge(0, 0, 0); // x*
  star.add_edge(0, 2, 1); // then y+
  star.add_edge(1, 2, 1);
  star.initial = {0};
  star.accepting = {0, 1};

  Nfa meet = nfa_intersect(subgroup_language(level2), star);
  Json sample = Json::array();
  for (const Word& w : enumerate_accepted(meet, 8))
    sample.push_back(pair_word_string(ctx->alphabet().name(t.a), ctx->alphabet().name(t.c), w));
  j["level2_language_in_positive_cone"] = sample;
  return j;
}

Json demo_thm_auto() {
  return demo_witness_scenario("thm-auto", star4_context(), Scope::Automorphisms, 6, 4);
}

Json demo_ex_fgyes() {
  ContextPtr square = square_context();
  Json j;
  j["demo"] = "ex-fgyes";
  j["graph"] = graph_to_json(square);
  j["verdict"] = verdict_to_json(square, classify_group(square, Scope::Automorphisms));

  Json analysis;

  // Factor-swapping automorphism: a <-> c, b <-> d through the renaming map.
  ProductImages swap_images{{
      {Word{}, Word{Letter{0, +1}}},
      {Word{}, Word{Letter{1, +1}}},
      {Word{Letter{0, +1}}, Word{}},
      {Word{Letter{1, +1}}, Word{}},
  }};
  ProductClassification swap_cls = fgyes_classify(swap_images);
  Morphism swap_phi = product_morphism(square, swap_images);
  ProductFixReport swap_fix = fgyes_fix(square, swap_cls);
  Json swap_json;
  swap_json["morphism"] = morphism_to_json(swap_phi);
  swap_json["type"] = to_string(swap_cls.type);
  swap_json["certificate"] = certificate_to_json(square, certify_automorphism(swap_phi, 2));
  Json swap_gens = Json::array();
  for (const GroupElement& g : swap_fix.generators)
    swap_gens.push_back(format_word(square->alphabet(), g.word()));
  swap_json["fix_generators"] = swap_gens;
  swap_json["fix_generator_source"] = swap_fix.source;
  swap_json["fix_generators_verified"] = true; // fgyes_fix throws otherwise
  swap_json["per_power_check"] =
      per_power_report_to_json(per_equals_fix_of_power_check(swap_phi, 3, 4));
  analysis["swap"] = swap_json;

  // Factor-preserving sample with letter-permutation components:
  // left factor inverts b, right factor is the identity.
  ProductImages type1_images{{
      {Word{Letter{0, +1}}, Word{}},
      {Word{Letter{1, -1}}, Word{}},
      {Word{}, Word{Letter{0, +1}}},
      {Word{}, Word{Letter{1, +1}}},
  }};
  ProductClassification type1_cls = fgyes_classify(type1_images);
  Morphism type1_phi = product_morphism(square, type1_images);
  ProductFixReport type1_fix = fgyes_fix(square, type1_cls);
  Json t1;
  t1["morphism"] = morphism_to_json(type1_phi);
  t1["type"] = to_string(type1_cls.type);
  Json t1_gens = Json::array();
  for (const GroupElement& g : type1_fix.generators)
    t1_gens.push_back(format_word(square->alphabet(), g.word()));
  t1["fix_generators"] = t1_gens;
  t1["fix_generator_source"] = type1_fix.source;
  t1["fix_generators_verified"] = true;
  analysis["sampled_type_one"] = t1;

  // Mixed-support image: recognized as impossible for an automorphism.
  ProductImages mixed_images{{
      {Word{Letter{0, +1}}, Word{Letter{0, +1}}},
      {Word{Letter{1, +1}}, Word{}},
      {Word{}, Word{Letter{0, +1}}},
      {Word{}, Word{Letter{1, +1}}},
  }};
  ProductClassification mixed_cls = fgyes_classify(mixed_images);
  Json mixed;
  mixed["type"] = to_string(mixed_cls.type);
  mixed["diagnostic"] = mixed_cls.diagnostic;
  analysis["mixed_example"] = mixed;

  j["product_analysis"] = analysis;
  return j;
}

Json demo_ex_fgno() {
  BundledAutomorphism ex = fgno_example();
  const ContextPtr& ctx = ex.ctx;
  const Morphism& phi = ex.phi;
  const Alphabet& a = ctx->alphabet();

  Json j;
  j["demo"] = "ex-fgno";
  j["graph"] = graph_to_json(ctx);
  j["verdict"] = verdict_to_json(ctx, classify_group(ctx, Scope::Automorphisms));
  j["morphism"] = morphism_to_json(phi);
  j["certificate"] = certificate_to_json(ctx, certify_automorphism(phi, 3));
  j["abelianization"] = matrix_to_json(phi.abelianization());
  j["abelianization_determinant"] = int_to_json(determinant(phi.abelianization()));
  j["abelianization_fixed_lattice"] = lattice_to_json(fixed_lattice(phi.abelianization()));

  int ga = a.index("a"), gd = a.index("d"), ge = a.index("e");
  j["projection_check"] =
      projection_report_to_json(ctx, projection_invariant_check(phi, {ga, gd, ge}, 4));

  std::vector<GroupElement> family;
  for (int i = 1; i <= 5; ++i) {
    Word w;
    for (int k = 0; k < i; ++k) w.push_back(Letter{ga, +1});
    for (int k = 0; k < i; ++k) w.push_back(Letter{ge, +1});
    for (int k = 0; k < i; ++k) w.push_back(Letter{gd, +1});
    family.push_back(normal_form(ctx, w));
  }
  j["fixed_family"] = fixed_family_json(ctx, phi, family);
  j["chain"] = chain_report_to_json(ctx, chain_experiment(phi, {ga, gd}, 4, family));
  return j;
}

} // namespace

Json demo_report(const std::string& name) {
  if (name == "thm-endo") return demo_thm_endo();
  if (name == "thm-auto") return demo_thm_auto();
  if (name == "ex-fgyes") return demo_ex_fgyes();
  if (name == "ex-fgno") return demo_ex_fgno();
  throw Error("unknown demo '" + name + "' (expected thm-endo, thm-auto, ex-fgyes or ex-fgno)");
}

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

namespace {

bool is_scalar(const Json& j) {
  return j.is_primitive();
}

bool is_scalar_array(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& e) { return is_scalar(e); });
}

bool is_inline(const Json& j) { return is_scalar(j) || is_scalar_array(j); }

std::string scalar_string(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

std::string inline_string(const Json& j) {
  if (is_scalar(j)) return scalar_string(j);
  std::string out = "[";
  for (size_t i = 0; i < j.size(); ++i) {
    if (i) out += ", ";
    out += scalar_string(j[i]);
  }
  return out + "]";
}

void render_node(const Json& j, int indent, std::string& out) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_inline(value)) {
        out += pad + key + ": " + inline_string(value) + "\n";
      } else {
        out += pad + key + ":\n";
        render_node(value, indent + 2, out);
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (is_inline(item)) {
        out += pad + "- " + inline_string(item) + "\n";
      } else {
        out += pad + "-\n";
        render_node(item, indent + 2, out);
      }
    }
  } else {
    out += pad + scalar_string(j) + "\n";
  }
}

} // namespace

std::string render_text(const Json& report) {
  std::string out;
  render_node(report, 0, out);
  return out;
}

} // namespace raagfix
