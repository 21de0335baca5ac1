#pragma once

#include "pshnd/polynomial.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pshnd {

// Deterministic sampling parameters. Radius and samples have no invented
// defaults; psh_sample_check rejects a config that leaves them zero. The
// tolerance is relative: a point only counts as a violation when
// lambda_min < -tolerance * scale, where scale is the Frobenius norm of
// the evaluated Levi matrix there.
struct SampleConfig {
  double radius = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
};

// A point where the Levi form has a negative eigenvalue, with the evidence
// and a note on how the point was found. Every Violation this module emits
// has survived an exact re-check: at the reported (z, w), which are dyadic
// rationals, the rational determinant or trace of the Levi matrix is
// negative. Float-only artifacts are filtered out, never reported.
struct Violation {
  std::complex<double> z;
  std::complex<double> w;
  double lambda_min = 0.0;
  double scale = 0.0;
  std::string context;
};

enum class Verdict : std::uint8_t { no_violation_found, violated };

// "no-violation-found" or "violated".
std::string_view verdict_name(Verdict v);

struct PshReport {
  Verdict verdict = Verdict::no_violation_found;
  std::optional<Violation> violation;  // present iff verdict == violated
  std::uint64_t samples_used = 0;
};

struct EigenEstimate {
  double lambda_min = 0.0;
  double scale = 0.0;  // Frobenius norm
};

// Minimal eigenvalue of the Hermitian Levi matrix of p at (z, w), in
// floating point, plus the Frobenius norm. The small eigenvalue comes from
// det / lambda_max (when lambda_max > 0) instead of (tr - sqrt(disc))/2,
// which cancels badly near singular matrices. Rejects non-real-valued p;
// non-finite evaluation raises NumericError.
EigenEstimate levi_eigen_min(const MixedPolynomial& p, std::complex<double> z,
                             std::complex<double> w);

// Value `index` of the sampling stream `seed`: uniform in [0, 1) with 53
// bits. A counter-mode splitmix64 hash, spelled out in docs/rng.md and
// fixed for all time so that reports reproduce anywhere.
double unit_sample(std::uint64_t seed, std::uint64_t index);

// Sample point number `index`: z uses stream values 4*index and 4*index+1
// (uniform modulus in [0, radius), uniform phase), w uses 4*index+2 and
// 4*index+3.
void polydisc_sample(std::uint64_t seed, std::uint64_t index, double radius,
                     std::complex<double>& z, std::complex<double>& w);

// Scans cfg.samples stream points and reports the lowest-index violation,
// if any. A float-level hit must also pass the exact rational check
// (det < 0 or tr < 0 at the same dyadic point) before it is believed;
// unconfirmed hits are skipped. Honors PSHND_THREADS (default 1; the
// result never depends on the thread count). samples_used is the winning
// index + 1, or cfg.samples when nothing was found.
PshReport psh_sample_check(const MixedPolynomial& p, const SampleConfig& cfg);

// All complex roots, with multiplicity, of c[0] + c[1] w + ... + c[n] w^n,
// sorted by (re, im). Aberth-Ehrlich iteration started on a circle of the
// Cauchy root bound, then Newton-polished. Exact-zero leading coefficients
// are trimmed; exact-zero trailing coefficients become roots at 0. The
// degree after trimming must be at least 1. Every returned root r passes
// the backward-error test |q(r)| <= tol * sum_k |c[k]| |r|^k; if any root
// fails, NumericError reports the offender and the best iterates.
std::vector<std::complex<double>> univariate_roots(
    std::vector<std::complex<double>> coeffs, double tol);

// Hunts the curve q(z, w) = 0 for a point with 0 < |z| <= radius and
// 0 < |w| <= radius where the Levi form of p has a negative eigenvalue.
// Slices z = t over the schedule t = radius * 2^-j * exp(i pi m / 4) with
// j = 1..64, m = 0..7, solves q(t, w) = 0 for w, and filters candidates by
// the relative root residual (below tol) followed by the exact rational
// det/trace sign test at the dyadic point. The float lambda_min is never
// used as a filter: near these curves it is cancellation noise. Reported
// lambda_min and scale are derived from the exact determinant and trace.
// Throws WitnessNotFound when the schedule runs out.
Violation curve_witness(const HolomorphicPolynomial& q, const MixedPolynomial& p,
                        double radius, double tol);

}  // namespace pshnd
