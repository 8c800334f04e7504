#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "raagfix/report.hpp"

namespace {

using raagfix::Json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw raagfix::Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct OutputOptions {
  std::string format = "text";
  std::string output_path;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("-o,--output", opts.output_path, "Write the report to a file instead of stdout");
}

void emit(const Json& report, const OutputOptions& opts) {
  std::string body =
      opts.format == "json" ? raagfix::dump_report(report) : raagfix::render_text(report);
  if (opts.output_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(opts.output_path);
    if (!out) throw raagfix::Error("cannot write '" + opts.output_path + "'");
    out << body;
  }
}

raagfix::ContextPtr load_context(const std::string& path) {
  return raagfix::parse_context(read_file(path));
}

raagfix::Morphism load_morphism(const raagfix::ContextPtr& ctx, const std::string& path) {
  return raagfix::parse_morphism(ctx, read_file(path));
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph group fixed-point toolkit: classification verdicts, witness morphisms,\n"
               "fixed/periodic point enumeration, folded-subgroup chains and abelianized lattices"};
  app.require_subcommand(1);

  std::string graph_path, morphism_path, word_text, scope = "endo", pair_text, demo_name;
  int radius = 3, kmax = 4, levels = 4, depth = 4;

  auto* classify = app.add_subcommand("classify", "Classify a graph group by its independence graph");
  classify->add_option("graph", graph_path, "Graph document (JSON)")->required();
  classify->add_option("--scope", scope, "endo or auto")
      ->check(CLI::IsMember({"endo", "auto"}))
      ->capture_default_str();
  OutputOptions classify_out;
  add_output_options(classify, classify_out);

  auto* demo = app.add_subcommand("demo", "Run a bundled end-to-end scenario");
  demo->add_option("name", demo_name, "thm-endo | thm-auto | ex-fgyes | ex-fgno")->required();
  OutputOptions demo_out;
  add_output_options(demo, demo_out);

  auto* nf = app.add_subcommand("nf", "Normal form of a word");
  nf->add_option("graph", graph_path)->required();
  nf->add_option("word", word_text, "Word, e.g. \"c b a\"")->required();
  OutputOptions nf_out;
  add_output_options(nf, nf_out);

  auto* apply = app.add_subcommand("apply", "Apply a morphism to a word");
  apply->add_option("graph", graph_path)->required();
  apply->add_option("morphism", morphism_path)->required();
  apply->add_option("word", word_text)->required();
  OutputOptions apply_out;
  add_output_options(apply, apply_out);

  auto* fix = app.add_subcommand("fix", "Fixed points of a morphism within a ball");
  fix->add_option("graph", graph_path)->required();
  fix->add_option("morphism", morphism_path)->required();
  fix->add_option("-r,--radius", radius, "Ball radius")->capture_default_str();
  OutputOptions fix_out;
  add_output_options(fix, fix_out);

  auto* per = app.add_subcommand("per", "Periodic points of a morphism within a ball");
  per->add_option("graph", graph_path)->required();
  per->add_option("morphism", morphism_path)->required();
  per->add_option("-r,--radius", radius)->capture_default_str();
  per->add_option("--kmax", kmax, "Largest period tried")->capture_default_str();
  OutputOptions per_out;
  add_output_options(per, per_out);

  auto* chain = app.add_subcommand("chain", "Ascending folded-subgroup chain experiment");
  chain->add_option("graph", graph_path)->required();
  chain->add_option("morphism", morphism_path)->required();
  chain->add_option("--pair", pair_text, "Unrelated generator pair, e.g. a,c")->required();
  chain->add_option("-N,--levels", levels, "Chain depth")->capture_default_str();
  OutputOptions chain_out;
  add_output_options(chain, chain_out);

  auto* auto_check = app.add_subcommand("auto-check", "Automorphism certificate for a morphism");
  auto_check->add_option("graph", graph_path)->required();
  auto_check->add_option("morphism", morphism_path)->required();
  auto_check->add_option("-d,--depth", depth, "Surjectivity search depth")->capture_default_str();
  OutputOptions auto_out;
  add_output_options(auto_check, auto_out);

  auto* abelian_fix = app.add_subcommand("abelian-fix", "Fixed lattice of the abelianized morphism");
  abelian_fix->add_option("graph", graph_path)->required();
  abelian_fix->add_option("morphism", morphism_path)->required();
  OutputOptions abelian_out;
  add_output_options(abelian_fix, abelian_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify) {
      auto ctx = load_context(graph_path);
      auto scope_value =
          scope == "endo" ? raagfix::Scope::Endomorphisms : raagfix::Scope::Automorphisms;
      Json j;
      j["command"] = "classify";
      j["graph"] = raagfix::graph_to_json(ctx);
      j["verdict"] = raagfix::verdict_to_json(ctx, raagfix::classify_group(ctx, scope_value));
      emit(j, classify_out);
    } else if (*demo) {
      emit(raagfix::demo_report(demo_name), demo_out);
    } else if (*nf) {
      auto ctx = load_context(graph_path);
      auto u = raagfix::normal_form(ctx, raagfix::parse_word(ctx->alphabet(), word_text));
      Json j;
      j["command"] = "nf";
      j["input"] = word_text;
      j["normal_form"] = raagfix::format_word(ctx->alphabet(), u.word());
      emit(j, nf_out);
    } else if (*apply) {
      auto ctx = load_context(graph_path);
      auto phi = load_morphism(ctx, morphism_path);
      auto u = raagfix::normal_form(ctx, raagfix::parse_word(ctx->alphabet(), word_text));
      Json j;
      j["command"] = "apply";
      j["input"] = word_text;
      j["image"] = raagfix::format_word(ctx->alphabet(), phi.apply(u).word());
      emit(j, apply_out);
    } else if (*fix) {
      auto ctx = load_context(graph_path);
      auto phi = load_morphism(ctx, morphism_path);
      auto fixed = raagfix::fix_in_ball(phi, radius);
      Json j;
      j["command"] = "fix";
      j["radius"] = radius;
      j["count"] = fixed.size();
      Json elems = Json::array();
      for (const auto& u : fixed) elems.push_back(raagfix::format_word(ctx->alphabet(), u.word()));
      j["elements"] = elems;
      emit(j, fix_out);
    } else if (*per) {
      auto ctx = load_context(graph_path);
      auto phi = load_morphism(ctx, morphism_path);
      auto periodic = raagfix::per_in_ball(phi, radius, kmax);
      Json j;
      j["command"] = "per";
      j["radius"] = radius;
      j["kmax"] = kmax;
      j["count"] = periodic.size();
      Json elems = Json::array();
      for (const auto& [u, period] : periodic) {
        Json e;
        e["word"] = raagfix::format_word(ctx->alphabet(), u.word());
        e["period"] = period;
        elems.push_back(e);
      }
      j["elements"] = elems;
      emit(j, per_out);
    } else if (*chain) {
      auto ctx = load_context(graph_path);
      auto phi = load_morphism(ctx, morphism_path);
      auto comma = pair_text.find(',');
      if (comma == std::string::npos)
        throw raagfix::Error("--pair expects two generator names separated by a comma");
      int x = ctx->alphabet().index(pair_text.substr(0, comma));
      int y = ctx->alphabet().index(pair_text.substr(comma + 1));
      Json j;
      j["command"] = "chain";
      j["chain"] =
          raagfix::chain_report_to_json(ctx, raagfix::chain_experiment(phi, {x, y}, levels));
      emit(j, chain_out);
    } else if (*auto_check) {
      auto ctx = load_context(graph_path);
      auto phi = load_morphism(ctx, morphism_path);
      Json j;
      j["command"] = "auto-check";
      j["certificate"] =
          raagfix::certificate_to_json(ctx, raagfix::certify_automorphism(phi, depth));
      emit(j, auto_out);
    } else if (*abelian_fix) {
      auto ctx = load_context(graph_path);
      auto phi = load_morphism(ctx, morphism_path);
      Json j;
      j["command"] = "abelian-fix";
      j["abelianization"] = raagfix::matrix_to_json(phi.abelianization());
      j["fixed_lattice"] = raagfix::lattice_to_json(raagfix::fixed_lattice(phi.abelianization()));
      emit(j, abelian_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
