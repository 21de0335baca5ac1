#pragma once

#include "pshnd/newton.hpp"
#include "pshnd/polynomial.hpp"
#include "pshnd/pshtest.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pshnd {

// One named exact or numeric condition. `detail` carries evidence on pass
// and the first mismatch on failure (for polynomial identities, the first
// differing bidegree).
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The library's stock counterexample: a sum of two squared moduli whose
// extreme-edge restrictions fail to be plurisubharmonic near the origin.
// The five holomorphic ingredients are named by their role in the diagram
// geometry.
struct Counterexample {
  HolomorphicPolynomial corner;    // z^2 w^2: the vertex shared by both edges
  HolomorphicPolynomial z_heavy;   // z^10 w: far end of the shallow edge side
  HolomorphicPolynomial w_heavy;   // z w^10: far end of the steep edge side
  HolomorphicPolynomial filler;    // z^4 w^2: bidegree strictly inside the hull
  HolomorphicPolynomial outlier;   // z^4 w^8: the one bidegree outside the hull

  // |corner + z_heavy + w_heavy|^2 + |filler + outlier|^2 and its expansion
  // (13 monomials over 9 bidegrees).
  ModulusCombination combination;
  MixedPolynomial poly;

  std::vector<LatticePoint> steep_edge;    // {(2,20),(3,12),(4,4)}, B = -8A + 36
  std::vector<LatticePoint> shallow_edge;  // {(4,4),(12,3),(20,2)}, B = -A/8 + 9/2
  std::vector<LatticePoint> edge_union;    // the five points above

  // Restriction to the edge union, equal to
  // |corner + w_heavy|^2 + |corner + z_heavy|^2 - |corner|^2.
  MixedPolynomial union_restriction() const;
  // Restriction to the lattice points of the hull of the edge union,
  // equal to poly - |outlier|^2.
  MixedPolynomial hull_restriction() const;

  // Vanishing curves carrying the refutation witnesses. The positive
  // Wronskian of the union decomposition is (up to sign) z^2 w^2 times
  // union_curve; the hull one is 2 z^4 w^2 times hull_curve.
  HolomorphicPolynomial union_curve;  // 99 z^8 w^8 + 18 z^9 + 18 w^9
  HolomorphicPolynomial hull_curve;   // 16 w^15 - 38 z^9 w^6 + 19 w^9 - 8 z^9 - 4 z w^7 + 2 z w
};

Counterexample build_counterexample();

// Exact checks on the candidate polynomial against the pinned reference
// data: expansion shape, Newton diagram, the two extreme edges plus the
// oracle agreement, both restriction identities, and the weighted
// restriction identity for every extreme set. The no-argument overload
// checks the stock expansion itself.
std::vector<CheckResult> verify_diagram_and_restrictions();
std::vector<CheckResult> verify_diagram_and_restrictions(const MixedPolynomial& candidate);

// Exact checks of the pairwise-Wronskian determinant decompositions of the
// union and hull restrictions: term counts and signs, the displayed cross
// terms (up to sign), and formula-versus-direct equality, also for the
// full combination.
std::vector<CheckResult> verify_det_decomposition();

enum class RefuteTarget : std::uint8_t { union_restriction, hull_restriction };

struct RefuteOutcome {
  CheckResult check;
  std::vector<Violation> witnesses;  // one per radius when found, 0.1 first
};

// Runs the witness search on the target restriction along its curve at
// radii 0.1 and 0.01. Passes only if both radii produce exactly verified
// violations with z != 0 and w != 0; for the union target each witness
// must additionally satisfy the determinant margin
// det H <= -0.5 |18 z^2 w^11|^2 under the expanded determinant polynomial.
RefuteOutcome refute_psh(RefuteTarget target);

// One weighted-homogeneous piece of a worked decomposition. The piece
// contributes |inner|^2 to the sum; its diagram support is `edge` with
// substitution weights `weights`; `edge_component` is the displayed
// restriction of the full polynomial to that edge (equal to |inner|^2
// when no bidegree is shared); `substituted_lowest` is the displayed
// lowest-order part of the full polynomial after (z,w) -> (z^p, w^q).
struct ExamplePiece {
  HolomorphicPolynomial inner;
  std::vector<LatticePoint> edge;
  WeightPair weights;
  MixedPolynomial edge_component;
  MixedPolynomial substituted_lowest;
};

struct WorkedExample {
  std::string name;                        // "four-piece" or "shared-summand"
  MixedPolynomial displayed;               // the decorated sum, parsed as displayed
  std::vector<ExamplePiece> pieces;        // in display order
  MixedPolynomial poly;                    // sum of |inner|^2 plus norm_power(500)
  std::vector<LatticePoint> core_diagram;  // diagram of poly minus the norm tail
};

// Three edge pieces with pairwise disjoint supports plus the norm tail.
WorkedExample build_four_piece_example();
// Two edge pieces sharing the bidegree (4,4) summand; the displayed edge
// components overlap there, the |inner|^2 split resolves the overlap.
WorkedExample build_shared_summand_example();

// Exact and sampled checks for both worked examples: the displayed sum
// identity, the core diagram, edge membership with weights, restriction
// components, lowest-order parts under the displayed substitutions, and
// no-violation sampling on every displayed piece.
std::vector<CheckResult> verify_examples();

// The whole battery: diagram and restrictions, determinant decomposition,
// both refutations (witness data folded into the check detail), worked
// examples. Deterministic and self-contained.
std::vector<CheckResult> verify_all();

}  // namespace pshnd
