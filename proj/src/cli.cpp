#include "lowindex/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "lowindex/json_io.hpp"
#include "lowindex/render.hpp"

namespace lowindex {

namespace {

constexpr int kUsage = 2;

HeckeParam param(const std::optional<int>& p) { return p ? HeckeParam{*p} : HeckeParam{}; }

PresentationPtr presentation_named(const std::string& family, const std::optional<int>& p) {
  if (family == "tetrahedral" || family == "tetrahedral_coxeter") {
    if (p) throw UsageError("tetrahedral_coxeter has no parameter");
    return std::make_shared<const Presentation>(tetrahedral_coxeter());
  }
  return shared_presentation(parse_family(family), param(p));
}

struct Options {
  std::string family;
  std::optional<int> p;
  int index = 2;
  std::string mode = "classes";
  std::string assignment;
  std::vector<std::string> words;
  std::size_t cap = kDefaultMaxCosets;
  std::string word;
  int depth = 7;
  std::string out_file;
  std::vector<std::string> palette;
  bool highlight = false;
  std::string allowlist;
  bool text = false;
};

int cmd_census(const Options& o, std::ostream& out) {
  const auto entry = census(parse_family(o.family), o.index, parse_mode(o.mode), param(o.p));
  out << census_json(entry).dump(2) << "\n";
  return 0;
}

int cmd_subgroup(const Options& o, std::ostream& out) {
  const auto pres = shared_presentation(parse_family(o.family), param(o.p));
  const Homomorphism hom = parse_assignment(o.assignment, pres);
  if (!is_valid(hom)) throw UsageError("assignment is not a valid transitive coloring");
  SubgroupRecord record = make_subgroup_record(hom);
  const bool concrete = std::all_of(pres->relators.begin(), pres->relators.end(),
                                    [](const Relator& r) { return r.order.value.has_value(); });
  if (concrete) verify_index(record, *pres);
  out << subgroup_json(record).dump(2) << "\n";
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const int p = o.p.value_or(12);
  if (p < 3) throw UsageError("p must be at least 3");
  const auto allow =
      load_allowlist(o.allowlist.empty() ? default_allowlist_path() : o.allowlist);
  const Report report = verify_all(p);
  if (o.text) {
    out << report_text(report);
  } else {
    out << report_json(report).dump(2) << "\n";
  }
  for (const auto& c : report.census) {
    if (!c.match()) {
      err << "warning: " << family_name(c.family) << " index " << c.index << " "
          << mode_name(c.mode) << ": printed " << c.printed << ", computed " << c.computed << "\n";
    }
  }
  const auto outside = outside_allowlist(report, allow);
  for (const auto& d : outside) {
    err << "table " << d.table << " row " << d.row << ": " << kind_name(d.kind) << ": "
        << d.detail << "\n";
  }
  return outside.empty() ? 0 : 1;
}

int cmd_tc(const Options& o, std::ostream& out) {
  const auto pres = presentation_named(o.family, o.p);
  std::vector<Word> words;
  for (const auto& w : o.words) words.push_back(pres->parse(w));
  out << enumeration_json(todd_coxeter(*pres, words, o.cap)).dump(2) << "\n";
  return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const int p = o.p.value_or(3);
  const auto pres = shared_presentation(Family::ExtendedHecke, p);
  const Word w = pres->parse(o.word);
  Json j{{"word", o.word}, {"p", p}};
  j.update(isometry_json(classify(eval_word(w, p), p)));
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_render(const Options& o, std::ostream& out) {
  if (!o.p) throw UsageError("render needs a concrete --p");
  RenderScene scene;
  scene.hom = parse_assignment(o.assignment, shared_presentation(parse_family(o.family), o.p));
  if (!is_valid(scene.hom)) throw UsageError("assignment is not a valid transitive coloring");
  scene.p = *o.p;
  scene.depth = o.depth;
  scene.highlight = o.highlight;
  if (!o.palette.empty()) scene.palette = o.palette;
  const std::string svg = render_coloring(scene);
  if (o.out_file.empty() || o.out_file == "-") {
    out << svg;
  } else {
    std::ofstream f(o.out_file, std::ios::binary);
    if (!f) throw UsageError("cannot write " + o.out_file);
    f << svg;
  }
  return 0;
}

int cmd_signature(const Options& o, std::ostream& out) {
  const Family family = o.family.empty() ? Family::Hecke : parse_family(o.family);
  Homomorphism hom = parse_assignment(o.assignment, shared_presentation(family, param(o.p)));
  if (!is_valid(hom)) throw UsageError("assignment is not a valid transitive coloring");
  if (family == Family::ExtendedHecke) hom = k_restriction(hom);
  out << signature_json(signature_from_hom(hom)).dump(2) << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Low-index subgroups of Hecke, modular and Picard groups"};
  app.require_subcommand(1);
  Options o;

  auto* census_cmd = app.add_subcommand("census", "count subgroups or conjugacy classes");
  census_cmd->add_option("--family", o.family)->required();
  census_cmd->add_option("--index", o.index)->required()->check(CLI::Range(1, kMaxDegree));
  census_cmd->add_option("--mode", o.mode)->check(CLI::IsMember({"subgroups", "classes"}));
  census_cmd->add_option("--p", o.p);

  auto* subgroup_cmd = app.add_subcommand("subgroup", "transversal and generators of a stabilizer");
  subgroup_cmd->add_option("--family", o.family)->required();
  subgroup_cmd->add_option("--row-assignment,--assignment", o.assignment)->required();
  subgroup_cmd->add_option("--p", o.p);

  auto* verify_cmd = app.add_subcommand("verify", "check the printed tables");
  verify_cmd->add_option("--p", o.p);
  verify_cmd->add_option("--allowlist", o.allowlist);
  verify_cmd->add_flag("--text", o.text, "human-readable report");

  auto* tc_cmd = app.add_subcommand("tc", "Todd-Coxeter coset enumeration");
  tc_cmd->add_option("--family", o.family)->required();
  tc_cmd->add_option("--p", o.p);
  tc_cmd->add_option("--words", o.words);
  tc_cmd->add_option("--cap", o.cap);

  auto* classify_cmd = app.add_subcommand("classify", "classify a word over P, Q, R");
  classify_cmd->add_option("--word", o.word)->required();
  classify_cmd->add_option("--p", o.p)->required();

  auto* render_cmd = app.add_subcommand("render", "SVG of a colored tiling");
  render_cmd->add_option("--family", o.family)->required();
  render_cmd->add_option("--assignment", o.assignment)->required();
  render_cmd->add_option("--p", o.p)->required();
  render_cmd->add_option("--depth", o.depth);
  render_cmd->add_option("--out", o.out_file);
  render_cmd->add_option("--palette", o.palette)->delimiter(',');
  render_cmd->add_flag("--highlight", o.highlight, "outline a fundamental region");

  auto* signature_cmd = app.add_subcommand("signature", "orbifold signature of a Hecke stabilizer");
  signature_cmd->add_option("--assignment", o.assignment)->required();
  signature_cmd->add_option("--p", o.p);
  signature_cmd->add_option("--family", o.family);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*census_cmd) return cmd_census(o, out);
    if (*subgroup_cmd) return cmd_subgroup(o, out);
    if (*verify_cmd) return cmd_verify(o, out, err);
    if (*tc_cmd) return cmd_tc(o, out);
    if (*classify_cmd) return cmd_classify(o, out);
    if (*render_cmd) return cmd_render(o, out);
    if (*signature_cmd) return cmd_signature(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidHom& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return kUsage;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace lowindex
