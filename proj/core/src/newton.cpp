#include "pshnd/newton.hpp"

#include "pshnd/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pshnd {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

// > 0 for a counterclockwise (left) turn o -> a -> b.
Int cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return Int(a.A - o.A) * Int(b.B - o.B) - Int(a.B - o.B) * Int(b.A - o.A);
}

// Lower hull of a sorted, deduplicated point list; strict turns only, so
// collinear interior points drop out.
std::vector<LatticePoint> lower_hull(const std::vector<LatticePoint>& pts) {
  std::vector<LatticePoint> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2], hull[hull.size() - 1], p) <= 0)
      hull.pop_back();
    hull.push_back(p);
  }
  return hull;
}

Rational slope_between(const LatticePoint& a, const LatticePoint& b) {
  return Rational(Int(b.B - a.B), Int(b.A - a.A));
}

Rational mediant_with_zero(const Rational& s) {
  return Rational(numerator(s), denominator(s) + 1);
}

Rational mediant(const Rational& a, const Rational& b) {
  return Rational(numerator(a) + numerator(b), denominator(a) + denominator(b));
}

SupportLine line_through(const Rational& slope, const LatticePoint& pt) {
  return SupportLine{slope, Rational(Int(pt.B)) - slope * Rational(Int(pt.A))};
}

// Simplest rational in the open interval (x, y), 0 <= x < y, by
// Stern-Brocot descent. Runs of same-direction steps are taken in one
// jump, so the walk is logarithmic.
Rational simplest_positive(const Rational& x, const Rational& y) {
  const Int px = numerator(x), qx = denominator(x);
  const Int py = numerator(y), qy = denominator(y);
  Int a = 0, b = 1, c = 1, d = 0;
  for (;;) {
    const Int mn = a + c, md = b + d;
    if (mn * qx <= px * md) {
      // mediant <= x: advance the left bound as far as it goes
      const Int k = (px * b - a * qx) / (c * qx - px * d);
      a += k * c;
      b += k * d;
    } else if (mn * qy >= py * md) {
      const Int k = (c * qy - py * d) / (py * b - a * qy);
      c += k * a;
      d += k * b;
    } else {
      return Rational(mn, md);
    }
  }
}

}  // namespace

Rational simplest_in_interval(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw InvalidArgument("interval is empty");
  if (lo < 0 && hi > 0) return Rational(0);
  if (lo >= 0) return simplest_positive(lo, hi);
  return -simplest_positive(-hi, -lo);
}

std::map<LatticePoint, MixedPolynomial> bidegree_decompose(const MixedPolynomial& p) {
  std::map<LatticePoint, MixedPolynomial> out;
  for (const auto& [e, v] : p.terms()) {
    const LatticePoint key{e.bidegree_z(), e.bidegree_w()};
    out[key] += MixedPolynomial::monomial(e, v);
  }
  return out;
}

NewtonDiagram newton_diagram(const MixedPolynomial& p) {
  NewtonDiagram d;
  for (const auto& [e, v] : p.terms()) {
    const LatticePoint pt{e.bidegree_z(), e.bidegree_w()};
    if (d.empty() || d.back() != pt) d.push_back(pt);
  }
  // term order is lexicographic on (a,b,c,d), which does not sort
  // bidegrees; normalize here
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

std::vector<ExtremeSetRecord> extreme_sets(const NewtonDiagram& diagram) {
  std::vector<ExtremeSetRecord> out;
  if (diagram.empty()) return out;

  NewtonDiagram pts = diagram;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  const auto hull = lower_hull(pts);

  // Keep the maximal prefix of the hull whose edges have negative slope:
  // those are exactly the faces supported by lines B = a*A + b, a < 0.
  std::vector<LatticePoint> chain{hull[0]};
  std::vector<Rational> edge_slopes;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    if (hull[i].A == hull[i - 1].A) break;  // vertical: only 2-point hulls
    const Rational s = slope_between(hull[i - 1], hull[i]);
    if (!(s < 0)) break;
    chain.push_back(hull[i]);
    edge_slopes.push_back(s);
  }

  auto point_record = [&](std::size_t i) {
    Rational rep;
    const bool has_left = i > 0;
    const bool has_right = i < edge_slopes.size();
    if (!has_left && !has_right)
      rep = Rational(-1);
    else if (!has_left)
      rep = edge_slopes[0] - 1;
    else if (!has_right)
      rep = mediant_with_zero(edge_slopes.back());
    else
      rep = simplest_in_interval(edge_slopes[i - 1], edge_slopes[i]);
    return ExtremeSetRecord{ExtremeKind::point, {chain[i]}, line_through(rep, chain[i])};
  };

  auto edge_record = [&](std::size_t i) {
    const SupportLine line = line_through(edge_slopes[i], chain[i]);
    std::vector<LatticePoint> members;
    for (const auto& p : pts)
      if (cross(chain[i], chain[i + 1], p) == 0) members.push_back(p);
    return ExtremeSetRecord{ExtremeKind::edge, std::move(members), line};
  };

  // Walking the chain interleaves vertices and edges in increasing slope
  // order, i.e. steepest representative first.
  for (std::size_t i = 0; i < chain.size(); ++i) {
    out.push_back(point_record(i));
    if (i < edge_slopes.size()) out.push_back(edge_record(i));
  }
  return out;
}

std::vector<ExtremeSetRecord> extreme_sets_bruteforce(const NewtonDiagram& diagram) {
  if (diagram.size() > 200)
    throw InvalidArgument("brute-force enumeration capped at 200 points");
  std::vector<ExtremeSetRecord> out;
  if (diagram.empty()) return out;

  NewtonDiagram pts = diagram;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::vector<Rational> candidates;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i].A != pts[j].A) candidates.push_back(slope_between(pts[i], pts[j]));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  std::vector<Rational> probes = candidates;
  for (std::size_t i = 0; i + 1 < candidates.size(); ++i)
    probes.push_back(mediant(candidates[i], candidates[i + 1]));
  if (!candidates.empty()) {
    probes.push_back(candidates.front() - 1);
    // one probe shallower than every negative candidate but still negative
    for (auto it = candidates.rbegin(); it != candidates.rend(); ++it)
      if (*it < 0) {
        probes.push_back(mediant_with_zero(*it));
        break;
      }
  }
  probes.push_back(Rational(-1));

  std::set<std::vector<LatticePoint>> seen;
  std::vector<std::pair<Rational, std::vector<LatticePoint>>> found;
  for (const auto& a : probes) {
    if (!(a < 0)) continue;
    // minimize B - a*A exactly; with a = n/d, d > 0, compare B*d - n*A
    const Int n = numerator(a), d = denominator(a);
    Int best = 0;
    std::vector<LatticePoint> argmin;
    for (const auto& p : pts) {
      const Int v = Int(p.B) * d - n * Int(p.A);
      if (argmin.empty() || v < best) {
        best = v;
        argmin.assign(1, p);
      } else if (v == best) {
        argmin.push_back(p);
      }
    }
    if (seen.insert(argmin).second) found.emplace_back(a, std::move(argmin));
  }

  std::sort(found.begin(), found.end());
  for (auto& [a, members] : found) {
    const ExtremeKind kind =
        members.size() == 1 ? ExtremeKind::point : ExtremeKind::edge;
    out.push_back(ExtremeSetRecord{kind, members, line_through(a, members.front())});
  }
  return out;
}

MixedPolynomial restrict_to(const MixedPolynomial& p,
                            std::span<const LatticePoint> points) {
  const std::set<LatticePoint> keep(points.begin(), points.end());
  MixedPolynomial out;
  for (const auto& [e, v] : p.terms()) {
    if (keep.count(LatticePoint{e.bidegree_z(), e.bidegree_w()}))
      out += MixedPolynomial::monomial(e, v);
  }
  return out;
}

std::vector<LatticePoint> hull_lattice_points(std::span<const LatticePoint> points) {
  std::vector<LatticePoint> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) return {};
  if (pts.size() == 1) return pts;

  // full hull, counterclockwise: lower chain plus reversed upper chain
  std::vector<LatticePoint> lo = lower_hull(pts);
  std::vector<LatticePoint> hi;
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (hi.size() >= 2 && cross(hi[hi.size() - 2], hi[hi.size() - 1], *it) <= 0)
      hi.pop_back();
    hi.push_back(*it);
  }

  if (lo.size() == 2 && hi.size() == 2) {
    // all input points collinear: walk the primitive step along the segment
    const LatticePoint a = lo.front(), b = lo.back();
    const long long dx = b.A - a.A, dy = b.B - a.B;
    const long long g = std::gcd(dx < 0 ? -dx : dx, dy < 0 ? -dy : dy);
    std::vector<LatticePoint> seg;
    for (long long i = 0; i <= g; ++i)
      seg.push_back(LatticePoint{a.A + i * (dx / g), a.B + i * (dy / g)});
    std::sort(seg.begin(), seg.end());
    return seg;
  }

  std::vector<LatticePoint> poly(lo.begin(), lo.end() - 1);
  poly.insert(poly.end(), hi.begin(), hi.end() - 1);

  long long minA = pts.front().A, maxA = pts.back().A;
  long long minB = pts.front().B, maxB = pts.front().B;
  for (const auto& p : pts) {
    minB = std::min(minB, p.B);
    maxB = std::max(maxB, p.B);
  }
  const long long cells = (maxA - minA + 1) * (maxB - minB + 1);
  if (cells > 4'000'000)
    throw InvalidArgument("hull bounding box too large to enumerate");

  std::vector<LatticePoint> out;
  for (long long A = minA; A <= maxA; ++A) {
    for (long long B = minB; B <= maxB; ++B) {
      const LatticePoint p{A, B};
      bool inside = true;
      for (std::size_t i = 0; i < poly.size() && inside; ++i) {
        const auto& u = poly[i];
        const auto& v = poly[(i + 1) % poly.size()];
        if (cross(u, v, p) < 0) inside = false;
      }
      if (inside) out.push_back(p);
    }
  }
  return out;
}

WeightPair edge_weights(const ExtremeSetRecord& record) {
  const Rational& s = record.line.slope;
  if (!(s < 0)) throw InvalidArgument("support line slope must be negative");
  const Int p = -numerator(s);
  const Int q = denominator(s);
  return WeightPair{p.convert_to<unsigned long long>(),
                    q.convert_to<unsigned long long>()};
}

}  // namespace pshnd
