#pragma once

#include "pshnd/polynomial.hpp"
#include "pshnd/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace pshnd {

// Bidegree lattice point: A counts z/zbar exponents, B counts w/wbar.
struct LatticePoint {
  long long A = 0;
  long long B = 0;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// Strictly increasing (lexicographic) list of bidegrees with nonzero
// component. Kept sorted so diagram equality is vector equality.
using NewtonDiagram = std::vector<LatticePoint>;

// Splits p into its bidegree components: p = Σ components[(A,B)].
std::map<LatticePoint, MixedPolynomial> bidegree_decompose(const MixedPolynomial& p);

NewtonDiagram newton_diagram(const MixedPolynomial& p);

// Line B = slope * A + intercept, slope < 0 in every record we emit.
struct SupportLine {
  Rational slope;
  Rational intercept;
  friend bool operator==(const SupportLine&, const SupportLine&) = default;
};

enum class ExtremeKind : std::uint8_t { point, edge };

// A subset of the diagram lying on a negative-slope line with every other
// diagram point strictly above it. `points` is sorted and includes the
// collinear interior diagram points of an edge. For a point record the
// stored line is one representative out of the open interval of valid
// slopes; the choice is a convention (see extreme_sets).
struct ExtremeSetRecord {
  ExtremeKind kind = ExtremeKind::point;
  std::vector<LatticePoint> points;
  SupportLine line;
};

// All extreme sets of the diagram, steepest representative slope first.
// Edges carry their unique support line. Point records carry the simplest
// slope (Stern-Brocot: minimal denominator, then minimal numerator) in the
// open interval of strictly supporting slopes; the half-infinite interval
// of the steepest vertex uses (first edge slope - 1), the interval ending
// at 0 of the shallowest vertex uses the mediant of the last edge slope
// and 0, and a single-vertex diagram uses -1. Those three choices are
// conventions, not forced by the definition.
std::vector<ExtremeSetRecord> extreme_sets(const NewtonDiagram& diagram);

// Independent enumeration by exhaustive candidate slopes: every pairwise
// slope, mediants of consecutive candidates, and sentinels past both ends.
// For each negative candidate the exact minimizing set of B - a*A is an
// extreme set; results are deduplicated by point set. Support lines are
// whatever candidate found the set first, not canonical. Rejects diagrams
// with more than 200 points.
std::vector<ExtremeSetRecord> extreme_sets_bruteforce(const NewtonDiagram& diagram);

// Terms of p whose bidegree lies in `points`.
MixedPolynomial restrict_to(const MixedPolynomial& p,
                            std::span<const LatticePoint> points);

// Every lattice point inside or on the convex hull of `points`, sorted.
// Handles degenerate hulls (point, segment). Rejects inputs whose bounding
// box exceeds 4e6 cells.
std::vector<LatticePoint> hull_lattice_points(std::span<const LatticePoint> points);

// Weights (p, q) of the substitution (z, w) -> (z^p, w^q) attached to a
// record whose line has slope -p/q in lowest terms: p*A + q*B is constant
// on the record's points and strictly larger on the rest of the diagram.
struct WeightPair {
  unsigned long long p = 0;
  unsigned long long q = 0;
  friend bool operator==(const WeightPair&, const WeightPair&) = default;
};

WeightPair edge_weights(const ExtremeSetRecord& record);

// Simplest rational in the open interval (lo, hi): minimal denominator,
// then minimal absolute numerator. Stern-Brocot descent with run-length
// acceleration. Requires lo < hi.
Rational simplest_in_interval(const Rational& lo, const Rational& hi);

}  // namespace pshnd
