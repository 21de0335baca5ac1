#include "report.hpp"
#include "svg.hpp"

#include "pshnd/error.hpp"
#include "pshnd/parser.hpp"
#include "pshnd/version.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

using nlohmann::json;

namespace pshnd {
namespace {

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int run_expand(const std::string& expr) {
  const MixedPolynomial p = parse(expr);
  emit(report::envelope("expand", {{"expr", expr}},
                        {{"expansion", report::mixed_json(p)}}));
  return 0;
}

int run_diagram(const std::string& expr, const std::string& svg_path) {
  const MixedPolynomial p = parse(expr);
  const NewtonDiagram nd = newton_diagram(p);
  json inputs = {{"expr", expr}};
  if (!svg_path.empty()) {
    inputs["svg"] = svg_path;
    std::ofstream out(svg_path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot open SVG output path " + svg_path);
    out << svg_diagram(nd, extreme_sets(nd));
    if (!out.flush()) throw InvalidArgument("failed writing SVG to " + svg_path);
  }
  emit(report::envelope("diagram", std::move(inputs),
                        {{"diagram", report::points_json(nd)}}));
  return 0;
}

int run_extreme(const std::string& expr) {
  const MixedPolynomial p = parse(expr);
  json records = json::array();
  for (const auto& r : extreme_sets(newton_diagram(p)))
    records.push_back(report::record_json(r));
  emit(report::envelope("extreme", {{"expr", expr}},
                        {{"records", std::move(records)}}));
  return 0;
}

int run_restrict(const std::string& expr, const std::string& points_text,
                 const std::string& hull_text) {
  const MixedPolynomial p = parse(expr);
  std::vector<LatticePoint> pts;
  json inputs = {{"expr", expr}};
  if (!points_text.empty()) {
    inputs["points"] = points_text;
    pts = report::parse_points_json(points_text);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  } else {
    inputs["hull-of"] = hull_text;
    pts = hull_lattice_points(report::parse_points_json(hull_text));
  }
  emit(report::envelope("restrict", std::move(inputs),
                        {{"points_used", report::points_json(pts)},
                         {"restriction", report::mixed_json(restrict_to(p, pts))}}));
  return 0;
}

int run_levi(const std::string& expr) {
  const LeviMatrix h = levi_matrix(parse(expr));
  emit(report::envelope("levi", {{"expr", expr}},
                        {{"levi",
                          {{"zz", report::mixed_json(h.zz)},
                           {"wz", report::mixed_json(h.wz)},
                           {"zw", report::mixed_json(h.zw)},
                           {"ww", report::mixed_json(h.ww)}}}}));
  return 0;
}

int run_det(const std::string& expr, bool formula) {
  json inputs = {{"expr", expr}, {"formula", formula}};
  json results;
  if (formula) {
    const ModulusCombination mc = parse_modulus_combination(expr);
    const DetDecomposition d = hessian_det_formula(mc);
    json terms = json::array();
    for (const auto& t : d.terms)
      terms.push_back({{"sign", t.sign}, {"cross", report::holo_json(t.cross)}});
    results = {{"det", report::mixed_json(decomposition_expand(d))},
               {"terms", std::move(terms)}};
  } else {
    results = {{"det", report::mixed_json(hessian_det_direct(parse(expr)))}};
  }
  emit(report::envelope("det", std::move(inputs), std::move(results)));
  return 0;
}

int run_transform(const std::string& expr, const std::string& weights_text) {
  unsigned long long wp = 0, wq = 0;
  char extra = 0;
  if (std::sscanf(weights_text.c_str(), "%llu,%llu%c", &wp, &wq, &extra) != 2 ||
      wp == 0 || wq == 0)
    throw InvalidArgument("--weights needs two positive integers, as in 4,1");
  const MixedPolynomial p = parse(expr);
  const MixedPolynomial sub =
      p.substitute_powers(static_cast<unsigned>(wp), static_cast<unsigned>(wq));
  emit(report::envelope(
      "transform", {{"expr", expr}, {"weights", weights_text}},
      {{"substituted", report::mixed_json(sub)},
       {"lowest_order_part", report::mixed_json(sub.lowest_order_part())}}));
  return 0;
}

int run_psh_check(const std::string& expr, double radius, std::uint64_t samples,
                  std::uint64_t seed, double tol) {
  SampleConfig cfg;
  cfg.radius = radius;
  cfg.samples = samples;
  cfg.seed = seed;
  cfg.tolerance = tol;
  const PshReport rep = psh_sample_check(parse(expr), cfg);
  emit(report::envelope("psh-check",
                        {{"expr", expr},
                         {"radius", radius},
                         {"samples", samples},
                         {"seed", seed},
                         {"tol", tol}},
                        {{"report", report::psh_report_json(rep)}}));
  return rep.verdict == Verdict::violated ? 2 : 0;
}

int run_witness(const std::string& expr, const std::string& curve_text,
                double radius) {
  const MixedPolynomial p = parse(expr);
  const HolomorphicPolynomial q = HolomorphicPolynomial::from_mixed(parse(curve_text));
  const double tol = 1e-10;  // relative residual gate, see docs/format.md
  json inputs = {{"expr", expr}, {"curve", curve_text}, {"radius", radius}};
  try {
    const Violation v = curve_witness(q, p, radius, tol);
    emit(report::envelope("witness", std::move(inputs),
                          {{"verdict", "violated"},
                           {"violation", report::violation_json(v)}}));
    return 2;
  } catch (const WitnessNotFound& e) {
    emit(report::envelope("witness", std::move(inputs),
                          {{"verdict", "no-violation-found"},
                           {"violation", nullptr},
                           {"detail", e.what()}}));
    return 0;
  }
}

int run_verify_paper() {
  json checks = json::array();
  std::size_t failed = 0;
  for (const auto& c : verify_all()) {
    checks.push_back(report::check_json(c));
    if (!c.pass) ++failed;
  }
  const std::size_t total = checks.size();
  emit(report::envelope("verify-paper", json::object(),
                        {{"checks", std::move(checks)},
                         {"total", total},
                         {"failed", failed}}));
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace pshnd

int main(int argc, char** argv) {
  CLI::App app{"Newton diagram analysis of real polynomials on C^2: expansion, "
               "extreme sets, Levi determinants, and plurisubharmonicity probes"};
  app.set_version_flag("--version", std::string(pshnd::kVersion));
  app.require_subcommand(1);

  std::string expr, svg_path, points_text, hull_text, curve_text, weights_text;
  double radius = 0.0, tol = 0.0;
  std::uint64_t samples = 0, seed = 0;
  bool formula = false;

  static constexpr const char* kExprHelp =
      "expression in z, zb, w, wb (also Re, Im, conj, abs2, nsq, i)";

  auto* c_expand = app.add_subcommand("expand", "expand an expression into monomials");
  c_expand->add_option("EXPR", expr, kExprHelp)->required();

  auto* c_diagram = app.add_subcommand("diagram", "bidegree support of an expression");
  c_diagram->add_option("EXPR", expr, kExprHelp)->required();
  c_diagram->add_option("--svg", svg_path, "also render the diagram to this file");

  auto* c_extreme =
      app.add_subcommand("extreme", "extreme points and edges of the diagram");
  c_extreme->add_option("EXPR", expr, kExprHelp)->required();

  auto* c_restrict = app.add_subcommand(
      "restrict", "keep only the terms whose bidegree lies in a given set");
  c_restrict->add_option("EXPR", expr, kExprHelp)->required();
  auto* opt_points = c_restrict->add_option(
      "--points", points_text, "JSON array of [A,B] bidegrees to keep");
  auto* opt_hull = c_restrict->add_option(
      "--hull-of", hull_text,
      "JSON array of [A,B] bidegrees; keep their full convex hull");
  opt_points->excludes(opt_hull);
  opt_hull->excludes(opt_points);

  auto* c_levi = app.add_subcommand("levi", "complex Hessian entries");
  c_levi->add_option("EXPR", expr, kExprHelp)->required();

  auto* c_det = app.add_subcommand("det", "determinant of the complex Hessian");
  c_det->add_option("EXPR", expr, kExprHelp)->required();
  c_det->add_flag("--formula", formula,
                  "use the pairwise cross-term decomposition; EXPR must be a "
                  "combination of abs2(...) summands");

  auto* c_transform =
      app.add_subcommand("transform", "substitute z -> z^p, w -> w^q");
  c_transform->add_option("EXPR", expr, kExprHelp)->required();
  c_transform->add_option("--weights", weights_text, "substitution powers, as in 4,1")
      ->required();

  auto* c_psh = app.add_subcommand(
      "psh-check", "sample the least Levi eigenvalue over a polydisc");
  c_psh->add_option("EXPR", expr, kExprHelp)->required();
  c_psh->add_option("--radius", radius, "polydisc radius")->required();
  c_psh->add_option("--samples", samples, "number of sample points")->required();
  c_psh->add_option("--seed", seed, "RNG seed (see docs/rng.md)")->required();
  c_psh->add_option("--tol", tol, "relative eigenvalue tolerance")->required();

  auto* c_witness = app.add_subcommand(
      "witness", "verified negative-eigenvalue point near a holomorphic curve");
  c_witness->add_option("EXPR", expr, kExprHelp)->required();
  c_witness
      ->add_option("--curve", curve_text,
                   "holomorphic curve polynomial to search along")
      ->required();
  c_witness->add_option("--radius", radius, "polydisc radius")->required();

  app.add_subcommand("verify-paper",
                     "run the built-in verification suite and report one "
                     "result line per check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    using namespace pshnd;
    if (*c_expand) return run_expand(expr);
    if (*c_diagram) return run_diagram(expr, svg_path);
    if (*c_extreme) return run_extreme(expr);
    if (*c_restrict) {
      if (points_text.empty() == hull_text.empty()) {
        std::cerr << "restrict needs exactly one of --points or --hull-of\n";
        return 1;
      }
      return run_restrict(expr, points_text, hull_text);
    }
    if (*c_levi) return run_levi(expr);
    if (*c_det) return run_det(expr, formula);
    if (*c_transform) return run_transform(expr, weights_text);
    if (*c_psh) return run_psh_check(expr, radius, samples, seed, tol);
    if (*c_witness) return run_witness(expr, curve_text, radius);
    return pshnd::run_verify_paper();
  } catch (const pshnd::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const pshnd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
