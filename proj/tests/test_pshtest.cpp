#include "support.hpp"

#include "pshnd/error.hpp"
#include "pshnd/levi.hpp"
#include "pshnd/parser.hpp"
#include "pshnd/pshtest.hpp"
#include "pshnd/rational.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <string>
#include <vector>

using namespace pshnd;
using testsupport::Rng;

namespace {

struct EnvGuard {
  std::string name;
  explicit EnvGuard(const char* n, const char* value) : name(n) {
    setenv(n, value, 1);
  }
  ~EnvGuard() { unsetenv(name.c_str()); }
};

bool same_report(const PshReport& a, const PshReport& b) {
  if (a.verdict != b.verdict || a.samples_used != b.samples_used) return false;
  if (a.violation.has_value() != b.violation.has_value()) return false;
  if (!a.violation) return true;
  return a.violation->z == b.violation->z && a.violation->w == b.violation->w &&
         a.violation->lambda_min == b.violation->lambda_min &&
         a.violation->scale == b.violation->scale &&
         a.violation->context == b.violation->context;
}

const char* kUnionRestriction =
    "abs2(z^2*w^2 + z*w^10) + abs2(z^2*w^2 + z^10*w) - abs2(z^2*w^2)";

}  // namespace

TEST_CASE("eigenvalue fixtures") {
  {
    const EigenEstimate e = levi_eigen_min(parse("nsq"), {0.3, 0.1}, {-0.2, 0.5});
    CHECK(e.lambda_min == doctest::Approx(1.0));
    CHECK(e.scale == doctest::Approx(std::sqrt(2.0)));
  }
  {
    const EigenEstimate e = levi_eigen_min(parse("0 - abs2(z)"), {0.1, 0.0}, {0.0, 0.0});
    CHECK(e.lambda_min == doctest::Approx(-1.0));
    CHECK(e.scale == doctest::Approx(1.0));
  }
  {
    const EigenEstimate e = levi_eigen_min(parse("abs2(z)"), {0.5, 0.5}, {0.25, 0.0});
    CHECK(e.lambda_min == doctest::Approx(0.0));
    CHECK(e.scale == doctest::Approx(1.0));
  }
  {
    // H = [[1, 1], [1, 1]] for |z + w|^2: eigenvalues 0 and 2
    const EigenEstimate e = levi_eigen_min(parse("abs2(z + w)"), {0.1, 0.2}, {0.3, 0.0});
    CHECK(e.lambda_min == doctest::Approx(0.0));
    CHECK(e.scale == doctest::Approx(2.0));
  }
  CHECK_THROWS_AS(levi_eigen_min(parse("z"), {0, 0}, {0, 0}), InvalidArgument);
  CHECK_THROWS_AS(levi_eigen_min(parse("abs2(z)^20"), {1e300, 0.0}, {0.0, 0.0}),
                  NumericError);
}

TEST_CASE("unit_sample is deterministic and uniform-ish") {
  for (std::uint64_t k = 0; k < 50; ++k) {
    const double u = unit_sample(12345, k);
    CHECK(u == unit_sample(12345, k));
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK(unit_sample(1, 0) != unit_sample(2, 0));
  CHECK(unit_sample(1, 0) != unit_sample(1, 1));
  double mean = 0.0;
  for (std::uint64_t k = 0; k < 4000; ++k) mean += unit_sample(7, k);
  mean /= 4000.0;
  CHECK(mean > 0.45);
  CHECK(mean < 0.55);
}

TEST_CASE("polydisc samples stay inside and reproduce") {
  std::complex<double> z1, w1, z2, w2;
  for (std::uint64_t i = 0; i < 200; ++i) {
    polydisc_sample(99, i, 0.25, z1, w1);
    polydisc_sample(99, i, 0.25, z2, w2);
    CHECK(z1 == z2);
    CHECK(w1 == w2);
    CHECK(std::abs(z1) < 0.25 * (1.0 + 1e-15));
    CHECK(std::abs(w1) < 0.25 * (1.0 + 1e-15));
  }
  // the modulus comes from stream slot 4i, the w modulus from slot 4i+2
  polydisc_sample(99, 7, 1.0, z1, w1);
  CHECK(std::abs(z1) == doctest::Approx(unit_sample(99, 28)).epsilon(1e-12));
  CHECK(std::abs(w1) == doctest::Approx(unit_sample(99, 30)).epsilon(1e-12));
}

TEST_CASE("psh_sample_check validates its config") {
  SampleConfig cfg;
  CHECK_THROWS_AS(psh_sample_check(parse("nsq"), cfg), InvalidArgument);
  cfg.radius = 1.0;
  CHECK_THROWS_AS(psh_sample_check(parse("nsq"), cfg), InvalidArgument);
  cfg.samples = 10;
  cfg.tolerance = -1.0;
  CHECK_THROWS_AS(psh_sample_check(parse("nsq"), cfg), InvalidArgument);
  cfg.tolerance = 0.0;
  CHECK(psh_sample_check(parse("nsq"), cfg).verdict == Verdict::no_violation_found);
  CHECK_THROWS_AS(psh_sample_check(parse("z"), cfg), InvalidArgument);
}

TEST_CASE("clean positives report no violation") {
  SampleConfig cfg;
  cfg.radius = 1.0;
  cfg.samples = 10000;
  cfg.seed = 0;
  cfg.tolerance = 1e-9;
  const MixedPolynomial stock = parse(
      "abs2(z^2*w^2 + z^10*w + z*w^10) + abs2(z^4*w^2 + z^4*w^8)");
  const PshReport rep = psh_sample_check(stock, cfg);
  CHECK(rep.verdict == Verdict::no_violation_found);
  CHECK(rep.samples_used == 10000);
  CHECK(!rep.violation.has_value());
}

TEST_CASE("definite negatives are caught at the first sample") {
  SampleConfig cfg;
  cfg.radius = 0.5;
  cfg.samples = 100;
  cfg.seed = 3;
  cfg.tolerance = 1e-9;
  const PshReport rep = psh_sample_check(parse("0 - abs2(z) - abs2(w)"), cfg);
  REQUIRE(rep.verdict == Verdict::violated);
  CHECK(rep.samples_used == 1);
  REQUIRE(rep.violation.has_value());
  CHECK(rep.violation->lambda_min < 0.0);
  CHECK(rep.violation->context.find("sample 0") != std::string::npos);
  CHECK(rep.violation->context.find("exact") != std::string::npos);
  CHECK(std::string(verdict_name(rep.verdict)) == "violated");
  CHECK(std::string(verdict_name(Verdict::no_violation_found)) ==
        "no-violation-found");
}

TEST_CASE("sampling misses the thin violation region of the union restriction") {
  // frozen behavior: the region where the union restriction loses
  // positivity near 0 is far too thin for polydisc sampling to hit; the
  // curve hunter below is the tool that finds it
  SampleConfig cfg;
  cfg.radius = 0.1;
  cfg.samples = 2000;
  cfg.seed = 7;
  cfg.tolerance = 1e-9;
  const PshReport rep = psh_sample_check(parse(kUnionRestriction), cfg);
  CHECK(rep.verdict == Verdict::no_violation_found);
  CHECK(rep.samples_used == 2000);
}

TEST_CASE("reported violations survive an exact recheck") {
  Rng g(501);
  SampleConfig cfg;
  cfg.radius = 1.0;
  cfg.samples = 150;
  cfg.tolerance = 1e-9;
  int violated = 0;
  for (int it = 0; it < 40; ++it) {
    const MixedPolynomial m = testsupport::random_mixed(g, 4, 3);
    const MixedPolynomial p = m + m.conjugated();  // real, usually indefinite
    cfg.seed = static_cast<std::uint64_t>(it);
    const PshReport rep = psh_sample_check(p, cfg);
    if (rep.verdict != Verdict::violated) continue;
    ++violated;
    const Violation& v = *rep.violation;
    CHECK(v.lambda_min < 0.0);
    const GaussianRational z{rational_from_double(v.z.real()),
                             rational_from_double(v.z.imag())};
    const GaussianRational w{rational_from_double(v.w.real()),
                             rational_from_double(v.w.imag())};
    const LeviMatrix h = levi_matrix(p);
    const GaussianRational a = h.zz.evaluate_exact(z, w);
    const GaussianRational d = h.ww.evaluate_exact(z, w);
    const GaussianRational b = h.wz.evaluate_exact(z, w);
    CHECK(a.im == 0);
    CHECK(d.im == 0);
    const Rational det = a.re * d.re - b.norm_sq();
    const Rational tr = a.re + d.re;
    CHECK((det < 0 || tr < 0));
  }
  CHECK(violated > 5);  // the family is rich enough to exercise the path
}

TEST_CASE("thread count does not change the report") {
  SampleConfig cfg;
  cfg.radius = 0.8;
  cfg.samples = 3000;
  cfg.seed = 11;
  cfg.tolerance = 1e-9;
  // negative trace only on |w| < 1/(4 sqrt(10)), about a tenth of the
  // samples: late first hit, so the threads genuinely race for the winner
  const MixedPolynomial p = parse("abs2(w)^2 - 1/40*abs2(w)");
  const PshReport solo = psh_sample_check(p, cfg);
  {
    EnvGuard env("PSHND_THREADS", "3");
    CHECK(same_report(solo, psh_sample_check(p, cfg)));
  }
  {
    EnvGuard env("PSHND_THREADS", "8");
    CHECK(same_report(solo, psh_sample_check(p, cfg)));
  }
  for (const char* bad : {"0", "-2", "abc", "1025", "3x"}) {
    EnvGuard env("PSHND_THREADS", bad);
    CHECK_THROWS_AS(psh_sample_check(p, cfg), InvalidArgument);
  }
}

TEST_CASE("univariate root finding") {
  using C = std::complex<double>;
  {
    const auto roots = univariate_roots({C(2), C(-3), C(1)}, 1e-10);
    REQUIRE(roots.size() == 2);
    CHECK(std::abs(roots[0] - C(1)) < 1e-9);
    CHECK(std::abs(roots[1] - C(2)) < 1e-9);
  }
  {
    const auto roots = univariate_roots({C(-3), C(2)}, 1e-10);
    REQUIRE(roots.size() == 1);
    CHECK(std::abs(roots[0] - C(1.5)) < 1e-12);
  }
  {
    // trailing zeros become roots at the origin
    const auto roots = univariate_roots({C(0), C(0), C(2), C(-3), C(1)}, 1e-10);
    REQUIRE(roots.size() == 4);
    CHECK(roots[0] == C(0));
    CHECK(roots[1] == C(0));
  }
  {
    // exact-zero leading coefficients are trimmed
    const auto roots = univariate_roots({C(2), C(-3), C(1), C(0), C(0)}, 1e-10);
    CHECK(roots.size() == 2);
  }
  {
    std::vector<C> coeffs(10, C(0));
    coeffs[0] = C(1);
    coeffs[9] = C(1);  // w^9 + 1
    const auto roots = univariate_roots(coeffs, 1e-10);
    REQUIRE(roots.size() == 9);
    for (const auto& r : roots) CHECK(std::abs(r) == doctest::Approx(1.0).epsilon(1e-10));
    for (std::size_t i = 1; i < roots.size(); ++i) {
      const bool ordered = roots[i - 1].real() < roots[i].real() ||
                           (roots[i - 1].real() == roots[i].real() &&
                            roots[i - 1].imag() <= roots[i].imag());
      CHECK(ordered);
    }
  }
  {
    // triple root: backward error still certified
    const auto roots = univariate_roots({C(-1), C(3), C(-3), C(1)}, 1e-10);
    REQUIRE(roots.size() == 3);
    for (const auto& r : roots) CHECK(std::abs(r - C(1)) < 1e-3);
  }
  {
    const auto a = univariate_roots({C(1), C(0), C(1)}, 1e-10);
    const auto b = univariate_roots({C(1), C(0), C(1)}, 1e-10);
    CHECK(a == b);
  }
  CHECK_THROWS_AS(univariate_roots({C(5)}, 1e-10), InvalidArgument);
  CHECK_THROWS_AS(univariate_roots({}, 1e-10), InvalidArgument);
  CHECK_THROWS_AS(univariate_roots({C(0), C(0)}, 1e-10), InvalidArgument);
  CHECK_THROWS_AS(
      univariate_roots({C(std::nan("")), C(1)}, 1e-10), InvalidArgument);
}

TEST_CASE("root residuals on a refutation slice") {
  // union curve pinned at z = 0.05: 18 w^9 + 99 (0.05)^8 w^8 + 18 (0.05)^9
  using C = std::complex<double>;
  const double t = 0.05;
  std::vector<C> coeffs(10, C(0));
  coeffs[0] = C(18.0 * std::pow(t, 9.0));
  coeffs[8] = C(99.0 * std::pow(t, 8.0));
  coeffs[9] = C(18.0);
  const auto roots = univariate_roots(coeffs, 1e-10);
  REQUIRE(roots.size() == 9);
  for (const auto& r : roots) {
    C val(0);
    for (std::size_t k = coeffs.size(); k-- > 0;) val = val * r + coeffs[k];
    double scale = 0.0, pw = 1.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      scale += std::abs(coeffs[k]) * pw;
      pw *= std::abs(r);
    }
    CHECK(std::abs(val) <= 1e-10 * scale);
  }
}

TEST_CASE("curve_witness finds and certifies refutation points") {
  const MixedPolynomial p = parse(kUnionRestriction);
  const HolomorphicPolynomial q =
      HolomorphicPolynomial::from_mixed(parse("99*z^8*w^8 + 18*z^9 + 18*w^9"));
  const Violation v = curve_witness(q, p, 0.1, 1e-10);
  CHECK(std::abs(v.z) > 0.0);
  CHECK(std::abs(v.w) > 0.0);
  CHECK(std::abs(v.z) <= 0.1);
  CHECK(std::abs(v.w) <= 0.1);
  CHECK(v.lambda_min < 0.0);
  CHECK(v.context.find("exact") != std::string::npos);
  CHECK(v.context.find("residual") != std::string::npos);

  const Violation again = curve_witness(q, p, 0.1, 1e-10);
  CHECK(v.z == again.z);
  CHECK(v.w == again.w);
  CHECK(v.lambda_min == again.lambda_min);
  CHECK(v.context == again.context);
}

TEST_CASE("curve_witness input validation and honest misses") {
  const MixedPolynomial paraboloid = parse("nsq");
  CHECK_THROWS_AS(
      curve_witness(HolomorphicPolynomial::from_mixed(parse("3")), paraboloid,
                    0.5, 1e-10),
      InvalidArgument);
  CHECK_THROWS_AS(
      curve_witness(HolomorphicPolynomial{}, paraboloid, 0.5, 1e-10),
      InvalidArgument);
  CHECK_THROWS_AS(curve_witness(HolomorphicPolynomial::from_mixed(parse("w")),
                                paraboloid, -1.0, 1e-10),
                  InvalidArgument);
  // w = 0 solutions violate the w != 0 requirement: an honest miss
  CHECK_THROWS_AS(curve_witness(HolomorphicPolynomial::from_mixed(parse("w")),
                                paraboloid, 0.5, 1e-10),
                  WitnessNotFound);
}

TEST_CASE("the full stock polynomial refuses to incriminate itself") {
  // psh everywhere, so every candidate root along the same curve must be
  // rejected by the exact determinant/trace test
  const MixedPolynomial stock = parse(
      "abs2(z^2*w^2 + z^10*w + z*w^10) + abs2(z^4*w^2 + z^4*w^8)");
  const HolomorphicPolynomial q =
      HolomorphicPolynomial::from_mixed(parse("99*z^8*w^8 + 18*z^9 + 18*w^9"));
  CHECK_THROWS_AS(curve_witness(q, stock, 0.1, 1e-10), WitnessNotFound);
}
