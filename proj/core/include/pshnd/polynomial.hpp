#pragma once

#include "pshnd/rational.hpp"

#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

namespace pshnd {

// The four formal variables. Conjugates are independent symbols until a
// point evaluation substitutes them.
enum class Var : std::uint8_t { z, zbar, w, wbar };

// Monomial exponents for z^a zbar^b w^c wbar^d. Ordering is lexicographic
// on (a, b, c, d); the term maps below inherit it as the canonical term
// order.
struct ExponentQuad {
  unsigned a = 0;
  unsigned b = 0;
  unsigned c = 0;
  unsigned d = 0;

  friend auto operator<=>(const ExponentQuad&, const ExponentQuad&) = default;

  unsigned total_degree() const { return a + b + c + d; }
  // Bidegree (A, B) = (a + b, c + d): z-weight and w-weight of the monomial.
  unsigned bidegree_z() const { return a + b; }
  unsigned bidegree_w() const { return c + d; }
};

// Sparse polynomial in z, zbar, w, wbar over the Gaussian rationals.
// Invariants: no explicit zero coefficients, terms stored in canonical
// (lexicographic) order. Equality is therefore structural equality.
class MixedPolynomial {
 public:
  using TermMap = std::map<ExponentQuad, GaussianRational>;

  MixedPolynomial() = default;

  static MixedPolynomial constant(GaussianRational v);
  static MixedPolynomial monomial(ExponentQuad e, GaussianRational v);
  static MixedPolynomial variable(Var v);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  GaussianRational coeff(const ExponentQuad& e) const;

  MixedPolynomial& operator+=(const MixedPolynomial& o);
  MixedPolynomial& operator-=(const MixedPolynomial& o);
  friend MixedPolynomial operator+(MixedPolynomial a, const MixedPolynomial& b) {
    return a += b;
  }
  friend MixedPolynomial operator-(MixedPolynomial a, const MixedPolynomial& b) {
    return a -= b;
  }
  friend MixedPolynomial operator*(const MixedPolynomial& a, const MixedPolynomial& b);
  friend MixedPolynomial operator-(const MixedPolynomial& a);
  friend bool operator==(const MixedPolynomial&, const MixedPolynomial&) = default;

  MixedPolynomial scaled(const GaussianRational& v) const;
  MixedPolynomial pow(unsigned n) const;

  // Swaps z<->zbar and w<->wbar and conjugates coefficients; an involution.
  MixedPolynomial conjugated() const;

  // True iff the polynomial equals its own conjugate, i.e. it takes real
  // values at every point. Checked coefficientwise.
  bool is_real_valued() const;

  // Formal partial derivative in one of the four variables.
  MixedPolynomial wirtinger(Var v) const;

  // z -> z^k, w -> w^l (conjugates follow suit). Rejects k == 0 or l == 0.
  MixedPolynomial substitute_powers(unsigned k, unsigned l) const;

  // Terms of minimal total degree. Rejects the zero polynomial.
  MixedPolynomial lowest_order_part() const;
  unsigned min_total_degree() const;  // rejects zero polynomial

  // Point evaluation with zbar/wbar bound to the conjugates of z/w.
  // Coefficients are rounded to nearest double; accumulation follows the
  // canonical term order, so results are reproducible bit for bit.
  std::complex<double> evaluate(std::complex<double> z, std::complex<double> w) const;

  // Same substitution carried out entirely in exact arithmetic.
  GaussianRational evaluate_exact(const GaussianRational& z,
                                  const GaussianRational& w) const;

 private:
  void add_term(const ExponentQuad& e, const GaussianRational& v);
  TermMap terms_;
};

// (z zbar + w wbar)^n expanded with exact binomials.
MixedPolynomial norm_power(unsigned n);

// Exponents for z^a w^c, ordered lexicographically.
struct ExponentPair {
  unsigned a = 0;
  unsigned c = 0;
  friend auto operator<=>(const ExponentPair&, const ExponentPair&) = default;
};

// Sparse polynomial in z, w alone. Same invariants as MixedPolynomial.
class HolomorphicPolynomial {
 public:
  using TermMap = std::map<ExponentPair, GaussianRational>;

  HolomorphicPolynomial() = default;

  static HolomorphicPolynomial monomial(ExponentPair e, GaussianRational v);
  // Rejects inputs with any zbar/wbar exponent.
  static HolomorphicPolynomial from_mixed(const MixedPolynomial& p);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  MixedPolynomial to_mixed() const;

  HolomorphicPolynomial& operator+=(const HolomorphicPolynomial& o);
  HolomorphicPolynomial& operator-=(const HolomorphicPolynomial& o);
  friend HolomorphicPolynomial operator+(HolomorphicPolynomial a,
                                         const HolomorphicPolynomial& b) {
    return a += b;
  }
  friend HolomorphicPolynomial operator-(HolomorphicPolynomial a,
                                         const HolomorphicPolynomial& b) {
    return a -= b;
  }
  friend HolomorphicPolynomial operator*(const HolomorphicPolynomial& a,
                                         const HolomorphicPolynomial& b);
  friend HolomorphicPolynomial operator-(const HolomorphicPolynomial& a);
  friend bool operator==(const HolomorphicPolynomial&,
                         const HolomorphicPolynomial&) = default;

  HolomorphicPolynomial derivative_z() const;
  HolomorphicPolynomial derivative_w() const;

  unsigned degree_w() const;  // max w exponent, 0 for the zero polynomial

  std::complex<double> evaluate(std::complex<double> z, std::complex<double> w) const;

  // Coefficients of w^0..w^deg once z is pinned to t. Ascending order.
  std::vector<std::complex<double>> coefficients_in_w(std::complex<double> t) const;

 private:
  void add_term(const ExponentPair& e, const GaussianRational& v);
  TermMap terms_;
};

// Signed sum of squared moduli: sum_i sign_i * |part_i|^2 with sign in
// {+1, -1}. The building block the determinant decomposition works on.
struct ModulusCombination {
  struct Summand {
    int sign = 1;
    HolomorphicPolynomial part;
  };
  std::vector<Summand> summands;
};

// Expands the combination into the mixed ring. Rejects signs outside
// {+1, -1}. The result is real-valued by construction.
MixedPolynomial expand_modulus_combination(const ModulusCombination& mc);

}  // namespace pshnd
