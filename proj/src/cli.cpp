#include "lcr/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>

#include "lcr/constructions.hpp"
#include "lcr/crossing.hpp"
#include "lcr/error.hpp"
#include "lcr/formula.hpp"
#include "lcr/io.hpp"
#include "lcr/search.hpp"
#include "lcr/separation.hpp"

namespace lcr::cli {

namespace {

void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

std::string form_or_dash(const LcrValue& v, std::int64_t form) {
  return v.n < 3 ? "-" : std::to_string(form);
}

struct FormulaArgs {
  std::optional<std::int64_t> n;
  std::vector<std::int64_t> table;
};

int cmd_formula(const FormulaArgs& a, std::ostream& out) {
  if (!a.table.empty()) {
    const auto lo = a.table[0];
    const auto hi = a.table[1];
    if (lo > hi) throw Error("table range is empty");
    out << "n\tlcr\tclass\tceiling_form\tpiecewise_form\texceptional\n";
    for (auto n = lo; n <= hi; ++n) {
      const auto v = lcr_formula(n);
      out << n << '\t' << v.value << '\t' << v.residue << '\t' << form_or_dash(v, v.ceiling_form)
          << '\t' << form_or_dash(v, v.piecewise_form) << '\t' << (v.exceptional ? "yes" : "no")
          << '\n';
    }
    return kExitOk;
  }
  const auto v = lcr_formula(*a.n);
  out << v.value << (v.exceptional ? " (exceptional)" : "") << '\n';
  out << "n: " << v.n << '\n';
  out << "class: " << v.residue << " mod 3\n";
  out << "ceiling_form: " << form_or_dash(v, v.ceiling_form) << '\n';
  out << "piecewise_form: " << form_or_dash(v, v.piecewise_form) << '\n';
  return kExitOk;
}

struct AnalyzeArgs {
  std::string file;
  bool profile = false;
  bool witness = false;
  bool certificate = false;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  const auto points = read_pointset_file(a.file);
  print_json(out, build_report(points, {a.profile, a.witness, a.certificate}));
  return kExitOk;
}

struct ConstructArgs {
  std::string kind;
  int parameter = 0;
  std::optional<int> eps_exponent;
  std::string out_file;
  std::string svg_file;
  bool report = false;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
  ConstructionKind kind;
  if (a.kind == "three-arcs") {
    kind = ConstructionKind::ThreeArcs;
  } else if (a.kind == "five-part") {
    kind = ConstructionKind::FivePart;
  } else {
    throw CLI::ValidationError("construct", "kind must be three-arcs or five-part");
  }
  PartitionedPointSet set;
  if (a.eps_exponent) {
    set = generate(kind, a.parameter, *a.eps_exponent);
    if (auto bad = general_position_violation(set.points)) {
      throw Error("eps exponent " + std::to_string(*a.eps_exponent) + " gives " + *bad);
    }
  } else {
    set = kind == ConstructionKind::ThreeArcs ? construct_three_arcs(a.parameter)
                                              : construct_five_part(a.parameter);
  }
  std::vector<std::string> labels;
  for (Part p : set.labels) labels.push_back(to_string(p));

  if (!a.out_file.empty()) write_text_file(a.out_file, serialize_pointset(set.points, &labels));
  if (!a.svg_file.empty()) {
    SvgOptions opts{labels, a.kind + " " + std::to_string(a.parameter)};
    write_text_file(a.svg_file, emit_svg(set.points, crossing_profile(set.points), opts));
  }
  if (a.report) {
    auto j = build_report(set.points);
    j["construction"] = {{"kind", a.kind},
                         {"parameter", a.parameter},
                         {"eps_exponent", set.eps_exponent},
                         {"target", construction_target(kind, a.parameter)}};
    j["separation_verified"] = kind == ConstructionKind::ThreeArcs
                                   ? verify_secant_separation(set)
                                   : verify_cluster_separation(set);
    j["parts"] = labels;
    nlohmann::json cases = nlohmann::json::object();
    for (const auto& [pair, value] : case_maxima_report(set)) {
      cases[to_string(pair.first) + "," + to_string(pair.second)] = value;
    }
    j["case_maxima"] = std::move(cases);
    print_json(out, j);
  } else if (a.out_file.empty() && a.svg_file.empty()) {
    out << serialize_pointset(set.points, &labels);
  }
  return kExitOk;
}

struct LemmaArgs {
  std::string file;
  int fuzz = 0;
  std::uint64_t seed = kDefaultSeed;
  std::vector<int> n_range{3, 15};
};

int cmd_lemma(const LemmaArgs& a, std::ostream& out) {
  if (a.fuzz > 0) {
    const auto summary = run_lemma_fuzz(a.fuzz, a.seed, a.n_range[0], a.n_range[1]);
    print_json(out, to_json(summary));
    return summary.ok() ? kExitOk : kExitDomainError;
  }
  if (a.file.empty()) throw CLI::ValidationError("lemma", "needs a point-set file or --fuzz N");
  const auto points = read_pointset_file(a.file);
  const auto witness = find_separation_witness(points);
  const auto cert = lemma_lower_bound(points);
  print_json(out, {{"n", points.size()},
                   {"hull", convex_hull(points)},
                   {"witness", to_json(witness)},
                   {"certificate", to_json(cert)},
                   {"class_lower_bound", lower_bound_class(points.size())}});
  return kExitOk;
}

struct SearchArgs {
  SearchConfig config;
  std::optional<int> target;
  std::string out_file;
  std::string log_file;
};

int cmd_search(SearchArgs a, std::ostream& out) {
  a.config.target = a.target ? *a.target : static_cast<int>(lcr_formula(a.config.n).value);
  const auto result = search_witness(a.config);
  auto log = to_json(a.config, result);
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : result.best) pts.push_back({to_string(p.x), to_string(p.y)});
  log["points"] = std::move(pts);
  if (!a.out_file.empty()) write_text_file(a.out_file, serialize_pointset(result.best));
  if (!a.log_file.empty()) {
    write_text_file(a.log_file, log.dump(2) + "\n");
  } else {
    print_json(out, log);
  }
  return kExitOk;
}

struct SvgArgs {
  std::string file;
  std::string out_file;
};

int cmd_svg(const SvgArgs& a, std::ostream& out) {
  const auto points = read_pointset_file(a.file);
  const auto svg = emit_svg(points, crossing_profile(points), {{}, a.file});
  if (a.out_file.empty()) {
    out << svg;
  } else {
    write_text_file(a.out_file, svg);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local crossing numbers of straight-line drawings of complete graphs", "lcr"};
  app.require_subcommand(1);

  FormulaArgs formula;
  auto* f = app.add_subcommand("formula", "Closed-form lcr(K_n) with both formula forms");
  auto* f_n = f->add_option("n", formula.n, "number of vertices");
  auto* f_table = f->add_option("--table", formula.table, "print a TSV table for n in [a, b]")
                      ->expected(2);
  f_n->excludes(f_table);

  AnalyzeArgs analyze;
  auto* an = app.add_subcommand("analyze", "Crossing report for a point-set file");
  an->add_option("file", analyze.file)->required();
  an->add_flag("--profile", analyze.profile, "include the per-edge profile");
  an->add_flag("--witness", analyze.witness, "include a separation witness");
  an->add_flag("--certificate", analyze.certificate, "include the lower-bound certificate");

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Generate a three-arcs (n) or five-part (k) set");
  c->add_option("kind", construct.kind, "three-arcs | five-part")->required();
  c->add_option("parameter", construct.parameter, "n for three-arcs, k for five-part")->required();
  c->add_option("--eps-exponent", construct.eps_exponent, "use eps = 1/2^t, skip calibration");
  c->add_option("--out", construct.out_file, "write the point set here");
  c->add_option("--svg", construct.svg_file, "write an SVG rendering here");
  c->add_flag("--report", construct.report, "print a JSON report");

  LemmaArgs lemma;
  auto* l = app.add_subcommand("lemma", "Separation witness and lower-bound certificate");
  auto* l_file = l->add_option("file", lemma.file);
  auto* l_fuzz = l->add_option("--fuzz", lemma.fuzz, "run the randomized suite on N sets");
  l->add_option("--seed", lemma.seed, "RNG seed")->capture_default_str();
  l->add_option("--n-range", lemma.n_range, "inclusive n range")->expected(2)->capture_default_str();
  l_file->excludes(l_fuzz);

  SearchArgs search;
  auto* s = app.add_subcommand("search", "Randomized search for a low-lcr drawing");
  s->add_option("n", search.config.n)->required();
  s->add_option("--target", search.target, "stop at this lcr (default: closed-form value)");
  s->add_option("--seed", search.config.seed)->capture_default_str();
  s->add_option("--restarts", search.config.restarts)->capture_default_str();
  s->add_option("--moves", search.config.moves_per_restart, "moves per restart")
      ->capture_default_str();
  s->add_option("--grid", search.config.grid_bound, "coordinate bound")->capture_default_str();
  s->add_option("--out", search.out_file, "write the best point set here");
  s->add_option("--log", search.log_file, "write the JSON run log here instead of stdout");

  SvgArgs svg;
  auto* v = app.add_subcommand("svg", "Render a point-set file as SVG");
  v->add_option("file", svg.file)->required();
  v->add_option("--out", svg.out_file);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (f->parsed() && !formula.n && formula.table.empty()) {
      throw CLI::ValidationError("formula", "needs n or --table a b");
    }
    if (f->parsed()) return cmd_formula(formula, out);
    if (an->parsed()) return cmd_analyze(analyze, out);
    if (c->parsed()) return cmd_construct(construct, out);
    if (l->parsed()) return cmd_lemma(lemma, out);
    if (s->parsed()) return cmd_search(search, out);
    if (v->parsed()) return cmd_svg(svg, out);
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
}

}  // namespace lcr::cli
