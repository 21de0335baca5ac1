#pragma once

#include "pshnd/newton.hpp"
#include "pshnd/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

// Test-side randomness and oracles. The generator is a sequential
// splitmix64, on purpose not the library's counter-mode sampler, so the
// two cannot share a bug.
namespace testsupport {

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t x = state;
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  long long int_in(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

// nonzero, small, occasionally imaginary
inline pshnd::GaussianRational small_coeff(Rng& g) {
  pshnd::Rational re(g.int_in(-5, 5));
  pshnd::Rational im(0);
  if (g.below(4) == 0) im = pshnd::Rational(g.int_in(-3, 3));
  if (re == 0 && im == 0) re = pshnd::Rational(1);
  return {re, im};
}

inline pshnd::HolomorphicPolynomial random_holo(Rng& g, int max_terms,
                                                unsigned max_degree) {
  pshnd::HolomorphicPolynomial out;
  const int n = 1 + static_cast<int>(g.below(static_cast<std::uint64_t>(max_terms)));
  for (int i = 0; i < n; ++i) {
    const unsigned a = static_cast<unsigned>(g.below(max_degree + 1));
    const unsigned c = static_cast<unsigned>(g.below(max_degree + 1 - a));
    out += pshnd::HolomorphicPolynomial::monomial({a, c}, small_coeff(g));
  }
  if (out.is_zero())
    out += pshnd::HolomorphicPolynomial::monomial({1, 0}, pshnd::GaussianRational(1));
  return out;
}

inline pshnd::MixedPolynomial random_mixed(Rng& g, int max_terms, unsigned max_exp) {
  pshnd::MixedPolynomial out;
  const int n = 1 + static_cast<int>(g.below(static_cast<std::uint64_t>(max_terms)));
  for (int i = 0; i < n; ++i) {
    const pshnd::ExponentQuad e{static_cast<unsigned>(g.below(max_exp + 1)),
                                static_cast<unsigned>(g.below(max_exp + 1)),
                                static_cast<unsigned>(g.below(max_exp + 1)),
                                static_cast<unsigned>(g.below(max_exp + 1))};
    out += pshnd::MixedPolynomial::monomial(e, small_coeff(g));
  }
  if (out.is_zero()) out += pshnd::MixedPolynomial::constant(pshnd::GaussianRational(1));
  return out;
}

inline pshnd::NewtonDiagram random_diagram(Rng& g, int max_points,
                                           long long max_coord) {
  std::set<pshnd::LatticePoint> pts;
  const int n = 1 + static_cast<int>(g.below(static_cast<std::uint64_t>(max_points)));
  for (int i = 0; i < n; ++i)
    pts.insert({g.int_in(0, max_coord), g.int_in(0, max_coord)});
  return {pts.begin(), pts.end()};
}

inline pshnd::ModulusCombination random_combination(Rng& g, int max_summands,
                                                    unsigned max_degree) {
  pshnd::ModulusCombination mc;
  const int n = 1 + static_cast<int>(g.below(static_cast<std::uint64_t>(max_summands)));
  for (int i = 0; i < n; ++i) {
    const int sign = (i > 0 && g.below(3) == 0) ? -1 : 1;
    mc.summands.push_back({sign, random_holo(g, 3, max_degree)});
  }
  return mc;
}

// Exact convex-hull membership by Caratheodory: a lattice point is in the
// hull iff it coincides with an input point, sits on a segment between
// two, or lies in a triangle of three. Quadratic and slow, which is fine
// for an oracle.
inline long long cross(pshnd::LatticePoint o, pshnd::LatticePoint u,
                       pshnd::LatticePoint v) {
  return (u.A - o.A) * (v.B - o.B) - (u.B - o.B) * (v.A - o.A);
}

inline bool between(long long x, long long lo, long long hi) {
  return std::min(lo, hi) <= x && x <= std::max(lo, hi);
}

inline bool on_segment(pshnd::LatticePoint p, pshnd::LatticePoint a,
                       pshnd::LatticePoint b) {
  return cross(a, b, p) == 0 && between(p.A, a.A, b.A) && between(p.B, a.B, b.B);
}

inline bool in_triangle(pshnd::LatticePoint p, pshnd::LatticePoint a,
                        pshnd::LatticePoint b, pshnd::LatticePoint c) {
  const long long d1 = cross(a, b, p);
  const long long d2 = cross(b, c, p);
  const long long d3 = cross(c, a, p);
  if (d1 == 0 && d2 == 0 && d3 == 0)
    return on_segment(p, a, b) || on_segment(p, b, c) || on_segment(p, a, c);
  const bool neg = d1 < 0 || d2 < 0 || d3 < 0;
  const bool pos = d1 > 0 || d2 > 0 || d3 > 0;
  return !(neg && pos);
}

inline bool in_hull(pshnd::LatticePoint p,
                    const std::vector<pshnd::LatticePoint>& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (p == s[i]) return true;
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (on_segment(p, s[i], s[j])) return true;
      for (std::size_t k = j + 1; k < s.size(); ++k)
        if (in_triangle(p, s[i], s[j], s[k])) return true;
    }
  }
  return false;
}

inline std::vector<pshnd::LatticePoint> hull_points_oracle(
    const std::vector<pshnd::LatticePoint>& s) {
  long long lo_a = s.front().A, hi_a = s.front().A;
  long long lo_b = s.front().B, hi_b = s.front().B;
  for (const auto& p : s) {
    lo_a = std::min(lo_a, p.A);
    hi_a = std::max(hi_a, p.A);
    lo_b = std::min(lo_b, p.B);
    hi_b = std::max(hi_b, p.B);
  }
  std::vector<pshnd::LatticePoint> out;
  for (long long a = lo_a; a <= hi_a; ++a)
    for (long long b = lo_b; b <= hi_b; ++b)
      if (in_hull({a, b}, s)) out.push_back({a, b});
  return out;
}

}  // namespace testsupport
