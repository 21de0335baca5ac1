#include "pshnd/polynomial.hpp"

#include "pshnd/error.hpp"

#include <algorithm>
#include <limits>

namespace pshnd {

namespace {

constexpr unsigned kMaxExponent = 1u << 24;

unsigned checked_exp_mul(unsigned e, unsigned k) {
  const std::uint64_t v = static_cast<std::uint64_t>(e) * k;
  if (v > kMaxExponent)
    throw InvalidArgument("exponent overflow in power substitution");
  return static_cast<unsigned>(v);
}

// Power table up to and including `max_exp`, memoized per evaluation.
std::vector<std::complex<double>> power_table(std::complex<double> base,
                                              unsigned max_exp) {
  std::vector<std::complex<double>> t(max_exp + 1);
  t[0] = {1.0, 0.0};
  for (unsigned i = 1; i <= max_exp; ++i) t[i] = t[i - 1] * base;
  return t;
}

std::vector<GaussianRational> power_table_exact(const GaussianRational& base,
                                                unsigned max_exp) {
  std::vector<GaussianRational> t(max_exp + 1);
  t[0] = GaussianRational(1);
  for (unsigned i = 1; i <= max_exp; ++i) t[i] = t[i - 1] * base;
  return t;
}

}  // namespace

MixedPolynomial MixedPolynomial::constant(GaussianRational v) {
  return monomial(ExponentQuad{}, std::move(v));
}

MixedPolynomial MixedPolynomial::monomial(ExponentQuad e, GaussianRational v) {
  MixedPolynomial p;
  if (!v.is_zero()) p.terms_.emplace(e, std::move(v));
  return p;
}

MixedPolynomial MixedPolynomial::variable(Var v) {
  ExponentQuad e;
  switch (v) {
    case Var::z: e.a = 1; break;
    case Var::zbar: e.b = 1; break;
    case Var::w: e.c = 1; break;
    case Var::wbar: e.d = 1; break;
  }
  return monomial(e, GaussianRational(1));
}

GaussianRational MixedPolynomial::coeff(const ExponentQuad& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void MixedPolynomial::add_term(const ExponentQuad& e, const GaussianRational& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MixedPolynomial& MixedPolynomial::operator+=(const MixedPolynomial& o) {
  for (const auto& [e, v] : o.terms_) add_term(e, v);
  return *this;
}

MixedPolynomial& MixedPolynomial::operator-=(const MixedPolynomial& o) {
  for (const auto& [e, v] : o.terms_) add_term(e, -v);
  return *this;
}

MixedPolynomial operator*(const MixedPolynomial& a, const MixedPolynomial& b) {
  MixedPolynomial out;
  for (const auto& [ea, va] : a.terms_) {
    for (const auto& [eb, vb] : b.terms_) {
      ExponentQuad e{ea.a + eb.a, ea.b + eb.b, ea.c + eb.c, ea.d + eb.d};
      out.add_term(e, va * vb);
    }
  }
  return out;
}

MixedPolynomial operator-(const MixedPolynomial& a) {
  MixedPolynomial out;
  for (const auto& [e, v] : a.terms_) out.terms_.emplace(e, -v);
  return out;
}

MixedPolynomial MixedPolynomial::scaled(const GaussianRational& v) const {
  MixedPolynomial out;
  if (v.is_zero()) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * v);
  return out;
}

MixedPolynomial MixedPolynomial::pow(unsigned n) const {
  MixedPolynomial result = constant(GaussianRational(1));
  MixedPolynomial base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

MixedPolynomial MixedPolynomial::conjugated() const {
  MixedPolynomial out;
  for (const auto& [e, v] : terms_)
    out.terms_.emplace(ExponentQuad{e.b, e.a, e.d, e.c}, v.conj());
  return out;
}

bool MixedPolynomial::is_real_valued() const {
  for (const auto& [e, v] : terms_) {
    const ExponentQuad mirror{e.b, e.a, e.d, e.c};
    if (coeff(mirror) != v.conj()) return false;
  }
  return true;
}

MixedPolynomial MixedPolynomial::wirtinger(Var v) const {
  MixedPolynomial out;
  for (const auto& [e, c] : terms_) {
    ExponentQuad d = e;
    unsigned exp = 0;
    switch (v) {
      case Var::z: exp = e.a; if (exp) --d.a; break;
      case Var::zbar: exp = e.b; if (exp) --d.b; break;
      case Var::w: exp = e.c; if (exp) --d.c; break;
      case Var::wbar: exp = e.d; if (exp) --d.d; break;
    }
    if (exp == 0) continue;
    out.add_term(d, c * GaussianRational(Rational(exp)));
  }
  return out;
}

MixedPolynomial MixedPolynomial::substitute_powers(unsigned k, unsigned l) const {
  if (k == 0 || l == 0)
    throw InvalidArgument("power substitution requires positive exponents");
  MixedPolynomial out;
  for (const auto& [e, v] : terms_) {
    ExponentQuad ne{checked_exp_mul(e.a, k), checked_exp_mul(e.b, k),
                    checked_exp_mul(e.c, l), checked_exp_mul(e.d, l)};
    out.terms_.emplace(ne, v);
  }
  return out;
}

unsigned MixedPolynomial::min_total_degree() const {
  if (terms_.empty())
    throw InvalidArgument("zero polynomial has no lowest-order part");
  unsigned best = std::numeric_limits<unsigned>::max();
  for (const auto& [e, v] : terms_) best = std::min(best, e.total_degree());
  return best;
}

MixedPolynomial MixedPolynomial::lowest_order_part() const {
  const unsigned low = min_total_degree();
  MixedPolynomial out;
  for (const auto& [e, v] : terms_)
    if (e.total_degree() == low) out.terms_.emplace(e, v);
  return out;
}

std::complex<double> MixedPolynomial::evaluate(std::complex<double> z,
                                               std::complex<double> w) const {
  unsigned ma = 0, mb = 0, mc = 0, md = 0;
  for (const auto& [e, v] : terms_) {
    ma = std::max(ma, e.a);
    mb = std::max(mb, e.b);
    mc = std::max(mc, e.c);
    md = std::max(md, e.d);
  }
  const auto pz = power_table(z, ma);
  const auto pzb = power_table(std::conj(z), mb);
  const auto pw = power_table(w, mc);
  const auto pwb = power_table(std::conj(w), md);
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [e, v] : terms_) {
    const std::complex<double> c{to_double(v.re), to_double(v.im)};
    acc += c * pz[e.a] * pzb[e.b] * pw[e.c] * pwb[e.d];
  }
  return acc;
}

GaussianRational MixedPolynomial::evaluate_exact(const GaussianRational& z,
                                                 const GaussianRational& w) const {
  unsigned ma = 0, mb = 0, mc = 0, md = 0;
  for (const auto& [e, v] : terms_) {
    ma = std::max(ma, e.a);
    mb = std::max(mb, e.b);
    mc = std::max(mc, e.c);
    md = std::max(md, e.d);
  }
  const auto pz = power_table_exact(z, ma);
  const auto pzb = power_table_exact(z.conj(), mb);
  const auto pw = power_table_exact(w, mc);
  const auto pwb = power_table_exact(w.conj(), md);
  GaussianRational acc;
  for (const auto& [e, v] : terms_)
    acc += v * pz[e.a] * pzb[e.b] * pw[e.c] * pwb[e.d];
  return acc;
}

MixedPolynomial norm_power(unsigned n) {
  MixedPolynomial out;
  for (unsigned k = 0; k <= n; ++k) {
    // Σ_k C(n,k) (z zbar)^k (w wbar)^(n-k)
    out += MixedPolynomial::monomial(ExponentQuad{k, k, n - k, n - k},
                                     GaussianRational(Rational(binomial(n, k))));
  }
  return out;
}

HolomorphicPolynomial HolomorphicPolynomial::monomial(ExponentPair e,
                                                      GaussianRational v) {
  HolomorphicPolynomial p;
  if (!v.is_zero()) p.terms_.emplace(e, std::move(v));
  return p;
}

HolomorphicPolynomial HolomorphicPolynomial::from_mixed(const MixedPolynomial& p) {
  HolomorphicPolynomial out;
  for (const auto& [e, v] : p.terms()) {
    if (e.b != 0 || e.d != 0)
      throw InvalidArgument("polynomial depends on conjugate variables");
    out.terms_.emplace(ExponentPair{e.a, e.c}, v);
  }
  return out;
}

MixedPolynomial HolomorphicPolynomial::to_mixed() const {
  MixedPolynomial out;
  for (const auto& [e, v] : terms_)
    out += MixedPolynomial::monomial(ExponentQuad{e.a, 0, e.c, 0}, v);
  return out;
}

void HolomorphicPolynomial::add_term(const ExponentPair& e,
                                     const GaussianRational& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HolomorphicPolynomial& HolomorphicPolynomial::operator+=(
    const HolomorphicPolynomial& o) {
  for (const auto& [e, v] : o.terms_) add_term(e, v);
  return *this;
}

HolomorphicPolynomial& HolomorphicPolynomial::operator-=(
    const HolomorphicPolynomial& o) {
  for (const auto& [e, v] : o.terms_) add_term(e, -v);
  return *this;
}

HolomorphicPolynomial operator*(const HolomorphicPolynomial& a,
                                const HolomorphicPolynomial& b) {
  HolomorphicPolynomial out;
  for (const auto& [ea, va] : a.terms_)
    for (const auto& [eb, vb] : b.terms_)
      out.add_term(ExponentPair{ea.a + eb.a, ea.c + eb.c}, va * vb);
  return out;
}

HolomorphicPolynomial operator-(const HolomorphicPolynomial& a) {
  HolomorphicPolynomial out;
  for (const auto& [e, v] : a.terms_) out.terms_.emplace(e, -v);
  return out;
}

HolomorphicPolynomial HolomorphicPolynomial::derivative_z() const {
  HolomorphicPolynomial out;
  for (const auto& [e, v] : terms_) {
    if (e.a == 0) continue;
    out.add_term(ExponentPair{e.a - 1, e.c}, v * GaussianRational(Rational(e.a)));
  }
  return out;
}

HolomorphicPolynomial HolomorphicPolynomial::derivative_w() const {
  HolomorphicPolynomial out;
  for (const auto& [e, v] : terms_) {
    if (e.c == 0) continue;
    out.add_term(ExponentPair{e.a, e.c - 1}, v * GaussianRational(Rational(e.c)));
  }
  return out;
}

unsigned HolomorphicPolynomial::degree_w() const {
  unsigned deg = 0;
  for (const auto& [e, v] : terms_) deg = std::max(deg, e.c);
  return deg;
}

std::complex<double> HolomorphicPolynomial::evaluate(std::complex<double> z,
                                                     std::complex<double> w) const {
  unsigned ma = 0, mc = 0;
  for (const auto& [e, v] : terms_) {
    ma = std::max(ma, e.a);
    mc = std::max(mc, e.c);
  }
  const auto pz = power_table(z, ma);
  const auto pw = power_table(w, mc);
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [e, v] : terms_) {
    const std::complex<double> c{to_double(v.re), to_double(v.im)};
    acc += c * pz[e.a] * pw[e.c];
  }
  return acc;
}

std::vector<std::complex<double>> HolomorphicPolynomial::coefficients_in_w(
    std::complex<double> t) const {
  unsigned ma = 0;
  for (const auto& [e, v] : terms_) ma = std::max(ma, e.a);
  const auto pt = power_table(t, ma);
  std::vector<std::complex<double>> coeffs(degree_w() + 1, {0.0, 0.0});
  for (const auto& [e, v] : terms_) {
    const std::complex<double> c{to_double(v.re), to_double(v.im)};
    coeffs[e.c] += c * pt[e.a];
  }
  return coeffs;
}

MixedPolynomial expand_modulus_combination(const ModulusCombination& mc) {
  MixedPolynomial out;
  for (const auto& s : mc.summands) {
    if (s.sign != 1 && s.sign != -1)
      throw InvalidArgument("modulus combination signs must be +1 or -1");
    const MixedPolynomial f = s.part.to_mixed();
    MixedPolynomial sq = f * f.conjugated();
    out += (s.sign == 1) ? sq : -sq;
  }
  return out;
}

}  // namespace pshnd
