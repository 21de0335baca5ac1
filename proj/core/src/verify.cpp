#include "pshnd/verify.hpp"

#include "pshnd/error.hpp"
#include "pshnd/levi.hpp"
#include "pshnd/parser.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <sstream>
#include <utility>

namespace pshnd {

namespace {

HolomorphicPolynomial holo(const char* src) {
  return HolomorphicPolynomial::from_mixed(parse(src));
}

std::string points_string(std::span<const LatticePoint> pts) {
  std::ostringstream os;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) os << " ";
    os << "(" << pts[i].A << "," << pts[i].B << ")";
  }
  return os.str();
}

std::string mismatch_detail(const MixedPolynomial& got, const MixedPolynomial& want) {
  const MixedPolynomial diff = got - want;
  if (diff.is_zero()) return "exact match";
  const auto& e = diff.terms().begin()->first;
  std::ostringstream os;
  os << "differs at bidegree (" << e.bidegree_z() << ", " << e.bidegree_w() << ")";
  return os.str();
}

CheckResult identity_check(std::string name, const MixedPolynomial& got,
                           const MixedPolynomial& want) {
  CheckResult c;
  c.name = std::move(name);
  c.pass = got == want;
  c.detail = mismatch_detail(got, want);
  return c;
}

bool up_to_sign(const HolomorphicPolynomial& a, const HolomorphicPolynomial& b) {
  return a == b || a == -b;
}

MixedPolynomial modulus_square(const HolomorphicPolynomial& f) {
  const MixedPolynomial m = f.to_mixed();
  return m * m.conjugated();
}

}  // namespace

Counterexample build_counterexample() {
  Counterexample cx;
  cx.corner = holo("z^2*w^2");
  cx.z_heavy = holo("z^10*w");
  cx.w_heavy = holo("z*w^10");
  cx.filler = holo("z^4*w^2");
  cx.outlier = holo("z^4*w^8");
  cx.combination.summands = {{1, cx.corner + cx.z_heavy + cx.w_heavy},
                             {1, cx.filler + cx.outlier}};
  cx.poly = expand_modulus_combination(cx.combination);
  cx.steep_edge = {{2, 20}, {3, 12}, {4, 4}};
  cx.shallow_edge = {{4, 4}, {12, 3}, {20, 2}};
  cx.edge_union = {{2, 20}, {3, 12}, {4, 4}, {12, 3}, {20, 2}};
  cx.union_curve = holo("99*z^8*w^8 + 18*z^9 + 18*w^9");
  cx.hull_curve = holo("16*w^15 - 38*z^9*w^6 + 19*w^9 - 8*z^9 - 4*z*w^7 + 2*z*w");
  return cx;
}

MixedPolynomial Counterexample::union_restriction() const {
  return restrict_to(poly, edge_union);
}

MixedPolynomial Counterexample::hull_restriction() const {
  return restrict_to(poly, hull_lattice_points(edge_union));
}

std::vector<CheckResult> verify_diagram_and_restrictions() {
  return verify_diagram_and_restrictions(build_counterexample().poly);
}

std::vector<CheckResult> verify_diagram_and_restrictions(const MixedPolynomial& candidate) {
  std::vector<CheckResult> out;
  const Counterexample ref = build_counterexample();
  const MixedPolynomial& P = candidate;

  {
    CheckResult c;
    c.name = "expansion-shape";
    const bool real = P.is_real_valued();
    c.pass = real && P.term_count() == 13;
    std::ostringstream os;
    os << P.term_count() << " monomials, "
       << (real ? "real-valued" : "not real-valued");
    c.detail = os.str();
    out.push_back(std::move(c));
  }
  {
    CheckResult c;
    c.name = "expansion-value-at-one";
    const GaussianRational one{Rational(1), Rational(0)};
    const GaussianRational v = P.evaluate_exact(one, one);
    c.pass = v.re == 13 && v.im == 0;
    c.detail = "value at (1,1) is " + to_string(v.re) +
               (v.im == 0 ? "" : " plus a nonreal part");
    out.push_back(std::move(c));
  }

  const NewtonDiagram nd = newton_diagram(P);
  {
    const NewtonDiagram want = {{2, 20}, {3, 12},  {4, 4},  {8, 4}, {8, 10},
                                {8, 16}, {11, 11}, {12, 3}, {20, 2}};
    CheckResult c;
    c.name = "diagram-bidegrees";
    c.pass = nd == want;
    c.detail = c.pass ? "nine bidegrees as pinned" : "got " + points_string(nd);
    out.push_back(std::move(c));
  }

  const std::vector<ExtremeSetRecord> records = extreme_sets(nd);
  {
    std::vector<const ExtremeSetRecord*> edges;
    for (const auto& r : records)
      if (r.kind == ExtremeKind::edge) edges.push_back(&r);
    const SupportLine steep_line{Rational(-8), Rational(36)};
    const SupportLine shallow_line{Rational(-1, 8), Rational(9, 2)};
    CheckResult c;
    c.name = "extreme-edges";
    c.pass = edges.size() == 2 && edges[0]->points == ref.steep_edge &&
             edges[0]->line == steep_line &&
             edges[1]->points == ref.shallow_edge &&
             edges[1]->line == shallow_line;
    std::ostringstream os;
    os << edges.size() << " edge records";
    if (c.pass) os << "; lines B = -8A + 36 and B = -A/8 + 9/2";
    c.detail = os.str();
    out.push_back(std::move(c));
  }
  {
    CheckResult c;
    c.name = "extreme-records";
    const Rational slopes[5] = {Rational(-9), Rational(-8), Rational(-1),
                                Rational(-1, 8), Rational(-1, 9)};
    const ExtremeKind kinds[5] = {ExtremeKind::point, ExtremeKind::edge,
                                  ExtremeKind::point, ExtremeKind::edge,
                                  ExtremeKind::point};
    bool ok = records.size() == 5;
    for (std::size_t i = 0; ok && i < 5; ++i)
      ok = records[i].kind == kinds[i] && records[i].line.slope == slopes[i];
    if (ok)
      ok = records[0].points == std::vector<LatticePoint>{{2, 20}} &&
           records[2].points == std::vector<LatticePoint>{{4, 4}} &&
           records[4].points == std::vector<LatticePoint>{{20, 2}};
    c.pass = ok;
    std::ostringstream os;
    os << records.size() << " records";
    if (ok) {
      os << "; representative slopes";
      for (const auto& r : records) os << " " << to_string(r.line.slope);
    }
    c.detail = os.str();
    out.push_back(std::move(c));
  }
  {
    std::vector<std::vector<LatticePoint>> a, b;
    for (const auto& r : records) a.push_back(r.points);
    for (const auto& r : extreme_sets_bruteforce(nd)) b.push_back(r.points);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CheckResult c;
    c.name = "extreme-oracle-agreement";
    c.pass = a == b;
    std::ostringstream os;
    os << "enumeration " << a.size() << " sets, oracle " << b.size() << " sets";
    c.detail = os.str();
    out.push_back(std::move(c));
  }
  {
    ModulusCombination rhs;
    rhs.summands = {{1, ref.corner + ref.w_heavy},
                    {1, ref.corner + ref.z_heavy},
                    {-1, ref.corner}};
    out.push_back(identity_check("union-restriction-identity",
                                 restrict_to(P, ref.edge_union),
                                 expand_modulus_combination(rhs)));
  }

  const std::vector<LatticePoint> hull = hull_lattice_points(ref.edge_union);
  {
    auto has = [&](LatticePoint p) {
      return std::binary_search(hull.begin(), hull.end(), p);
    };
    CheckResult c;
    c.name = "hull-lattice-points";
    c.pass = hull.size() == 138 && has({11, 11}) && has({8, 4}) &&
             has({8, 10}) && !has({8, 16});
    std::ostringstream os;
    os << hull.size() << " lattice points; (11,11) " << (has({11, 11}) ? "in" : "OUT")
       << ", (8,4) " << (has({8, 4}) ? "in" : "OUT") << ", (8,10) "
       << (has({8, 10}) ? "in" : "OUT") << ", (8,16) "
       << (has({8, 16}) ? "IN" : "out");
    c.detail = os.str();
    out.push_back(std::move(c));
  }
  out.push_back(identity_check("hull-restriction-identity", restrict_to(P, hull),
                               P - modulus_square(ref.outlier)));
  {
    CheckResult c;
    c.name = "weighted-restriction-per-record";
    c.pass = true;
    c.detail = "holds for every extreme set";
    for (const auto& r : records) {
      const WeightPair wt = edge_weights(r);
      const unsigned wp = static_cast<unsigned>(wt.p);
      const unsigned wq = static_cast<unsigned>(wt.q);
      const MixedPolynomial lhs = P.substitute_powers(wp, wq).lowest_order_part();
      const MixedPolynomial rhs = restrict_to(P, r.points).substitute_powers(wp, wq);
      if (lhs != rhs) {
        c.pass = false;
        c.detail = "fails for " + points_string(r.points);
        break;
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CheckResult> verify_det_decomposition() {
  std::vector<CheckResult> out;
  const Counterexample cx = build_counterexample();

  ModulusCombination union_mc;
  union_mc.summands = {{1, cx.corner + cx.w_heavy},
                       {1, cx.corner + cx.z_heavy},
                       {-1, cx.corner}};
  ModulusCombination hull_mc;
  hull_mc.summands = {{1, cx.corner + cx.z_heavy + cx.w_heavy},
                      {1, cx.filler + cx.outlier},
                      {-1, cx.outlier}};

  const DetDecomposition du = hessian_det_formula(union_mc);
  const DetDecomposition dh = hessian_det_formula(hull_mc);

  auto shape_ok = [](const DetDecomposition& d) {
    return d.terms.size() == 3 && d.terms[0].sign == 1 &&
           d.terms[1].sign == -1 && d.terms[2].sign == -1;
  };
  auto shape_detail = [](const DetDecomposition& d) {
    std::ostringstream os;
    os << d.terms.size() << " terms, signs";
    for (const auto& t : d.terms) os << (t.sign > 0 ? " +" : " -");
    return os.str();
  };
  auto cross_pair_ok = [&](const DetDecomposition& d, const HolomorphicPolynomial& a,
                           const HolomorphicPolynomial& b) {
    if (d.terms.size() != 3) return false;
    return (up_to_sign(d.terms[1].cross, a) && up_to_sign(d.terms[2].cross, b)) ||
           (up_to_sign(d.terms[1].cross, b) && up_to_sign(d.terms[2].cross, a));
  };

  {
    CheckResult c;
    c.name = "union-decomposition-shape";
    c.pass = shape_ok(du);
    c.detail = shape_detail(du);
    out.push_back(std::move(c));
  }
  {
    CheckResult c;
    c.name = "union-positive-cross";
    const HolomorphicPolynomial want = holo("z^2*w^2") * cx.union_curve;
    c.pass = shape_ok(du) && up_to_sign(du.terms[0].cross, want);
    c.detail = c.pass ? "equals z^2 w^2 times the union curve, up to sign"
                      : "positive cross term differs";
    out.push_back(std::move(c));
  }
  {
    CheckResult c;
    c.name = "union-negative-crosses";
    c.pass = cross_pair_ok(du, holo("18*z^2*w^11"), holo("18*z^11*w^2"));
    c.detail = c.pass ? "18 z^2 w^11 and 18 z^11 w^2, up to sign"
                      : "negative cross terms differ";
    out.push_back(std::move(c));
  }
  {
    CheckResult c;
    c.name = "hull-decomposition-shape";
    c.pass = shape_ok(dh);
    c.detail = shape_detail(dh);
    out.push_back(std::move(c));
  }
  {
    CheckResult c;
    c.name = "hull-positive-cross";
    const HolomorphicPolynomial want = holo("2*z^4*w^2") * cx.hull_curve;
    c.pass = shape_ok(dh) && up_to_sign(dh.terms[0].cross, want);
    c.detail = c.pass ? "equals 2 z^4 w^2 times the hull curve, up to sign"
                      : "positive cross term differs";
    out.push_back(std::move(c));
  }
  {
    CheckResult c;
    c.name = "hull-negative-crosses";
    c.pass = cross_pair_ok(dh, holo("24*z^7*w^9"),
                           holo("8*z^5*w^9 + 76*z^13*w^8 - 32*z^4*w^17"));
    c.detail = c.pass ? "24 z^7 w^9 and the derived three-term cross, up to sign"
                      : "negative cross terms differ";
    out.push_back(std::move(c));
  }

  auto equal_routes = [](const char* name, const ModulusCombination& mc) {
    return identity_check(name, decomposition_expand(hessian_det_formula(mc)),
                          hessian_det_direct(expand_modulus_combination(mc)));
  };
  out.push_back(equal_routes("union-formula-equals-direct", union_mc));
  out.push_back(equal_routes("hull-formula-equals-direct", hull_mc));
  out.push_back(equal_routes("full-formula-equals-direct", cx.combination));
  return out;
}

RefuteOutcome refute_psh(RefuteTarget target) {
  const Counterexample cx = build_counterexample();
  const bool is_union = target == RefuteTarget::union_restriction;
  const MixedPolynomial restricted =
      is_union ? cx.union_restriction() : cx.hull_restriction();
  const HolomorphicPolynomial& curve = is_union ? cx.union_curve : cx.hull_curve;
  // margin checks evaluate the expanded determinant polynomial: computing
  // det from the four evaluated entries would lose the whole signal to
  // cancellation this close to the curve
  const MixedPolynomial det_poly = hessian_det_direct(restricted);

  RefuteOutcome out;
  out.check.name = is_union ? "refute-union-restriction" : "refute-hull-restriction";
  bool ok = true;
  std::ostringstream detail;
  const double tol = 1e-10;
  const double radii[2] = {0.1, 0.01};
  for (int i = 0; i < 2; ++i) {
    const double radius = radii[i];
    if (i) detail << "; ";
    try {
      const Violation v = curve_witness(curve, restricted, radius, tol);
      bool point_ok = std::abs(v.z) > 0.0 && std::abs(v.w) > 0.0 &&
                      std::abs(v.z) <= radius && std::abs(v.w) <= radius &&
                      v.lambda_min < 0.0;
      if (is_union) {
        // det H <= -0.5 |18 z^2 w^11|^2 = -162 |z|^4 |w|^22 at every witness
        const double dval = det_poly.evaluate(v.z, v.w).real();
        const double margin =
            -162.0 * std::pow(std::abs(v.z), 4.0) * std::pow(std::abs(v.w), 22.0);
        point_ok = point_ok && dval <= margin;
      }
      detail << "radius " << radius << ": witness z = (" << v.z.real() << ", "
             << v.z.imag() << "), w = (" << v.w.real() << ", " << v.w.imag()
             << "), lambda_min = " << v.lambda_min
             << (point_ok ? "" : " [range or margin check failed]");
      ok = ok && point_ok;
      out.witnesses.push_back(v);
    } catch (const WitnessNotFound& e) {
      ok = false;
      detail << "radius " << radius << ": " << e.what();
    }
  }
  out.check.pass = ok;
  out.check.detail = detail.str();
  return out;
}

WorkedExample build_four_piece_example() {
  WorkedExample ex;
  ex.name = "four-piece";
  ex.displayed = parse(
      "abs2(z)^3*abs2(w)^4 - 2*Re(z^3*w^4*conj(z^5*w^3)) + abs2(z)^2*abs2(w)^6"
      " + abs2(z)^5*abs2(w)^3 - 2*Re(z*w^10*conj(z^2*w^6)) + abs2(z)^9*abs2(w)^2"
      " + abs2(z)*abs2(w)^10 - 2*Re(z^9*w^2*conj(z^17*w)) + abs2(z)^17*abs2(w)"
      " + nsq^500");
  auto piece = [](const char* inner, std::vector<LatticePoint> edge, WeightPair wt,
                  const char* lowest) {
    ExamplePiece p;
    p.inner = holo(inner);
    p.edge = std::move(edge);
    p.weights = wt;
    p.edge_component = modulus_square(p.inner);
    p.substituted_lowest = parse(lowest);
    return p;
  };
  ex.pieces = {
      piece("z*w^10 - z^2*w^6", {{2, 20}, {3, 16}, {4, 12}}, {4, 1},
            "abs2(z^4*w^10 - z^8*w^6)"),
      piece("z^3*w^4 - z^5*w^3", {{6, 8}, {8, 7}, {10, 6}}, {1, 2},
            "abs2(z^3*w^8 - z^5*w^6)"),
      piece("z^9*w^2 - z^17*w", {{18, 4}, {26, 3}, {34, 2}}, {1, 8},
            "abs2(z^9*w^16 - z^17*w^8)"),
  };
  MixedPolynomial sum = norm_power(500);
  for (const auto& p : ex.pieces) sum += p.edge_component;
  ex.poly = std::move(sum);
  ex.core_diagram = {{2, 20}, {3, 16}, {4, 12}, {6, 8},  {8, 7},
                     {10, 6}, {18, 4}, {26, 3}, {34, 2}};
  return ex;
}

WorkedExample build_shared_summand_example() {
  WorkedExample ex;
  ex.name = "shared-summand";
  ex.displayed = parse(
      "abs2(z)^3 - 2*Re(z^3*conj(z^2*w^2)) + 2*abs2(z)^2*abs2(w)^2"
      " - 2*Re(z^2*w^2*conj(w^10)) + abs2(w)^10 + nsq^500");
  ExamplePiece p1;
  p1.inner = holo("z^3 - z^2*w^2");
  p1.edge = {{4, 4}, {5, 2}, {6, 0}};
  p1.weights = {2, 1};
  p1.edge_component =
      parse("abs2(z)^3 - 2*Re(z^3*conj(z^2*w^2)) + 2*abs2(z)^2*abs2(w)^2");
  p1.substituted_lowest =
      parse("abs2(z)^6 - 2*Re(z^6*conj(z^4*w^2)) + 2*abs2(z)^4*abs2(w)^2");
  ExamplePiece p2;
  p2.inner = holo("z^2*w^2 - w^10");
  p2.edge = {{0, 20}, {2, 12}, {4, 4}};
  p2.weights = {4, 1};
  p2.edge_component =
      parse("2*abs2(z)^2*abs2(w)^2 - 2*Re(z^2*w^2*conj(w^10)) + abs2(w)^10");
  p2.substituted_lowest =
      parse("2*abs2(z)^8*abs2(w)^2 - 2*Re(z^8*w^2*conj(w^10)) + abs2(w)^10");
  ex.pieces = {std::move(p1), std::move(p2)};
  MixedPolynomial sum = norm_power(500);
  for (const auto& p : ex.pieces) sum += modulus_square(p.inner);
  ex.poly = std::move(sum);
  ex.core_diagram = {{0, 20}, {2, 12}, {4, 4}, {5, 2}, {6, 0}};
  return ex;
}

namespace {

void example_checks(const WorkedExample& ex, std::vector<CheckResult>& out) {
  out.push_back(identity_check(ex.name + "-identity", ex.poly, ex.displayed));
  {
    CheckResult c;
    c.name = ex.name + "-core-diagram";
    const NewtonDiagram core = newton_diagram(ex.poly - norm_power(500));
    c.pass = core == ex.core_diagram;
    c.detail = c.pass ? "matches the displayed support" : "got " + points_string(core);
    out.push_back(std::move(c));
  }
  const std::vector<ExtremeSetRecord> records = extreme_sets(newton_diagram(ex.poly));
  {
    CheckResult c;
    c.name = ex.name + "-edges";
    c.pass = true;
    c.detail = "every named edge enumerated with its pinned weights";
    for (const auto& p : ex.pieces) {
      const ExtremeSetRecord* found = nullptr;
      for (const auto& r : records)
        if (r.kind == ExtremeKind::edge && r.points == p.edge) {
          found = &r;
          break;
        }
      if (found == nullptr || !(edge_weights(*found) == p.weights)) {
        c.pass = false;
        c.detail = "missing or mis-weighted edge " + points_string(p.edge);
        break;
      }
    }
    out.push_back(std::move(c));
  }
  {
    CheckResult c;
    c.name = ex.name + "-restrictions";
    c.pass = true;
    c.detail = "exact match";
    for (const auto& p : ex.pieces) {
      const MixedPolynomial got = restrict_to(ex.poly, p.edge);
      if (got != p.edge_component) {
        c.pass = false;
        c.detail = mismatch_detail(got, p.edge_component) + " for edge " +
                   points_string(p.edge);
        break;
      }
    }
    out.push_back(std::move(c));
  }
  {
    CheckResult c;
    c.name = ex.name + "-lowest-parts";
    c.pass = true;
    c.detail = "exact match under every displayed substitution";
    for (const auto& p : ex.pieces) {
      const unsigned wp = static_cast<unsigned>(p.weights.p);
      const unsigned wq = static_cast<unsigned>(p.weights.q);
      const MixedPolynomial got =
          ex.poly.substitute_powers(wp, wq).lowest_order_part();
      if (got != p.substituted_lowest) {
        c.pass = false;
        c.detail = mismatch_detail(got, p.substituted_lowest) + " for weights (" +
                   std::to_string(wp) + "," + std::to_string(wq) + ")";
        break;
      }
    }
    out.push_back(std::move(c));
  }
  {
    CheckResult c;
    c.name = ex.name + "-psh-samples";
    c.pass = true;
    SampleConfig cfg;
    cfg.radius = 1.0;
    cfg.samples = 10000;
    cfg.seed = 0;
    cfg.tolerance = 1e-9;
    unsigned ran = 0;
    for (const auto& p : ex.pieces) {
      std::vector<MixedPolynomial> targets;
      targets.push_back(modulus_square(p.inner));
      if (!(p.edge_component == targets.front()))
        targets.push_back(p.edge_component);
      for (const auto& t : targets) {
        ++ran;
        const PshReport rep = psh_sample_check(t, cfg);
        if (rep.verdict != Verdict::no_violation_found) {
          c.pass = false;
          c.detail = "violation reported for a displayed piece: " +
                     (rep.violation ? rep.violation->context : std::string("?"));
        }
      }
      if (!c.pass) break;
    }
    if (c.pass) {
      std::ostringstream os;
      os << ran << " pieces sampled at radius 1, 10000 points each, no violation";
      c.detail = os.str();
    }
    out.push_back(std::move(c));
  }
}

}  // namespace

std::vector<CheckResult> verify_examples() {
  std::vector<CheckResult> out;
  example_checks(build_four_piece_example(), out);
  example_checks(build_shared_summand_example(), out);
  return out;
}

std::vector<CheckResult> verify_all() {
  std::vector<CheckResult> out = verify_diagram_and_restrictions();
  for (auto& c : verify_det_decomposition()) out.push_back(std::move(c));
  out.push_back(refute_psh(RefuteTarget::union_restriction).check);
  out.push_back(refute_psh(RefuteTarget::hull_restriction).check);
  for (auto& c : verify_examples()) out.push_back(std::move(c));
  return out;
}

}  // namespace pshnd
