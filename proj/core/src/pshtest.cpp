#include "pshnd/pshtest.hpp"

#include "pshnd/error.hpp"
#include "pshnd/levi.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <numbers>
#include <sstream>
#include <thread>
#include <utility>

namespace pshnd {

std::string_view verdict_name(Verdict v) {
  return v == Verdict::violated ? "violated" : "no-violation-found";
}

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

void require_real(const MixedPolynomial& p, const char* who) {
  if (!p.is_real_valued())
    throw InvalidArgument(std::string(who) + " needs a real-valued polynomial");
}

// Evaluated Hermitian Levi matrix [[a, b], [conj(b), d]].
struct LeviEval {
  double a = 0.0;
  double d = 0.0;
  std::complex<double> b;
};

LeviEval eval_levi(const LeviMatrix& m, std::complex<double> z,
                   std::complex<double> w) {
  const std::complex<double> h11 = m.zz.evaluate(z, w);
  const std::complex<double> h12 = m.wz.evaluate(z, w);
  const std::complex<double> h21 = m.zw.evaluate(z, w);
  const std::complex<double> h22 = m.ww.evaluate(z, w);
  LeviEval e;
  e.a = h11.real();
  e.d = h22.real();
  // the two off-diagonal evaluations are conjugates up to rounding;
  // averaging symmetrizes the rounding
  e.b = 0.5 * (h12 + std::conj(h21));
  if (!std::isfinite(e.a) || !std::isfinite(e.d) ||
      !std::isfinite(e.b.real()) || !std::isfinite(e.b.imag()))
    throw NumericError("Levi matrix evaluation is not finite");
  return e;
}

EigenEstimate eigen_from(const LeviEval& e) {
  const double bsq = std::norm(e.b);
  const double tr = e.a + e.d;
  const double det = e.a * e.d - bsq;
  const double disc = (e.a - e.d) * (e.a - e.d) + 4.0 * bsq;
  const double sq = std::sqrt(disc);
  const double hi = 0.5 * (tr + sq);
  EigenEstimate out;
  out.lambda_min = hi > 0.0 ? det / hi : 0.5 * (tr - sq);
  out.scale = std::sqrt(e.a * e.a + e.d * e.d + 2.0 * bsq);
  if (!std::isfinite(out.lambda_min) || !std::isfinite(out.scale))
    throw NumericError("eigenvalue computation is not finite");
  return out;
}

// Exact entries at a dyadic point. For real-valued p the diagonal is
// exactly real and h21 = conj(h12), so three evaluations suffice.
struct ExactLevi {
  Rational a;
  Rational d;
  GaussianRational b;

  Rational det() const { return a * d - b.norm_sq(); }
  Rational tr() const { return a + d; }
};

ExactLevi eval_levi_exact(const LeviMatrix& m, const GaussianRational& z,
                          const GaussianRational& w) {
  ExactLevi e;
  e.a = m.zz.evaluate_exact(z, w).re;
  e.d = m.ww.evaluate_exact(z, w).re;
  e.b = m.wz.evaluate_exact(z, w);
  return e;
}

// Same Viete trick as eigen_from but with the cancellation-prone parts
// (det, disc) computed exactly first.
EigenEstimate eigen_from_exact(const ExactLevi& e) {
  const Rational bsq = e.b.norm_sq();
  const Rational diff = e.a - e.d;
  const double tr = to_double(e.a + e.d);
  const double det = to_double(e.a * e.d - bsq);
  const double sq = std::sqrt(to_double(diff * diff + 4 * bsq));
  const double hi = 0.5 * (tr + sq);
  EigenEstimate out;
  out.lambda_min = hi > 0.0 ? det / hi : 0.5 * (tr - sq);
  out.scale = std::sqrt(to_double(e.a * e.a + e.d * e.d + 2 * bsq));
  return out;
}

unsigned thread_count() {
  const char* env = std::getenv("PSHND_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (end == env || *end != '\0' || v == 0 || v > 1024)
    throw InvalidArgument("PSHND_THREADS must be an integer in [1, 1024]");
  return static_cast<unsigned>(v);
}

}  // namespace

double unit_sample(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t x = mix64(seed + (index + 1) * 0x9E3779B97F4A7C15ull);
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

void polydisc_sample(std::uint64_t seed, std::uint64_t index, double radius,
                     std::complex<double>& z, std::complex<double>& w) {
  const double two_pi = 2.0 * std::numbers::pi;
  z = std::polar(radius * unit_sample(seed, 4 * index),
                 two_pi * unit_sample(seed, 4 * index + 1));
  w = std::polar(radius * unit_sample(seed, 4 * index + 2),
                 two_pi * unit_sample(seed, 4 * index + 3));
}

EigenEstimate levi_eigen_min(const MixedPolynomial& p, std::complex<double> z,
                             std::complex<double> w) {
  require_real(p, "levi_eigen_min");
  return eigen_from(eval_levi(levi_matrix(p), z, w));
}

PshReport psh_sample_check(const MixedPolynomial& p, const SampleConfig& cfg) {
  require_real(p, "psh_sample_check");
  if (!(cfg.radius > 0.0) || !std::isfinite(cfg.radius))
    throw InvalidArgument("radius must be positive and finite");
  if (cfg.samples == 0) throw InvalidArgument("samples must be positive");
  if (!(cfg.tolerance >= 0.0) || !std::isfinite(cfg.tolerance))
    throw InvalidArgument("tolerance must be non-negative and finite");

  const LeviMatrix levi = levi_matrix(p);
  const unsigned threads =
      static_cast<unsigned>(std::min<std::uint64_t>(thread_count(), cfg.samples));

  struct Hit {
    std::uint64_t index;
    Violation violation;
  };
  std::vector<std::optional<Hit>> hits(threads);
  std::vector<std::exception_ptr> errors(threads);
  std::atomic<std::uint64_t> best{cfg.samples};

  auto scan = [&](unsigned who, std::uint64_t lo, std::uint64_t hi) {
    try {
      for (std::uint64_t i = lo; i < hi; ++i) {
        if (i >= best.load(std::memory_order_relaxed)) break;
        std::complex<double> z, w;
        polydisc_sample(cfg.seed, i, cfg.radius, z, w);
        const EigenEstimate ee = eigen_from(eval_levi(levi, z, w));
        if (!(ee.lambda_min < -cfg.tolerance * ee.scale)) continue;
        const ExactLevi ex =
            eval_levi_exact(levi, gaussian_from_complex(z), gaussian_from_complex(w));
        const bool det_neg = ex.det() < 0;
        if (!det_neg && !(ex.tr() < 0)) continue;  // float artifact, skip
        Hit hit;
        hit.index = i;
        hit.violation.z = z;
        hit.violation.w = w;
        hit.violation.lambda_min = ee.lambda_min;
        hit.violation.scale = ee.scale;
        {
          std::ostringstream os;
          os << "sample " << i << "; exact " << (det_neg ? "det" : "trace")
             << " < 0";
          hit.violation.context = os.str();
        }
        hits[who] = std::move(hit);
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (i < cur &&
               !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
        }
        break;
      }
    } catch (...) {
      errors[who] = std::current_exception();
    }
  };

  if (threads <= 1) {
    scan(0, 0, cfg.samples);
  } else {
    const std::uint64_t chunk = (cfg.samples + threads - 1) / threads;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned k = 0; k < threads; ++k) {
      const std::uint64_t lo = k * chunk;
      const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, cfg.samples);
      if (lo >= hi) break;
      pool.emplace_back(scan, k, lo, hi);
    }
    for (auto& t : pool) t.join();
  }
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);

  PshReport report;
  const Hit* winner = nullptr;
  for (const auto& h : hits)
    if (h && (winner == nullptr || h->index < winner->index)) winner = &*h;
  if (winner != nullptr) {
    report.verdict = Verdict::violated;
    report.violation = winner->violation;
    report.samples_used = winner->index + 1;
  } else {
    report.verdict = Verdict::no_violation_found;
    report.samples_used = cfg.samples;
  }
  return report;
}

namespace {

void horner(const std::vector<std::complex<double>>& c, std::complex<double> t,
            std::complex<double>& val, std::complex<double>& der) {
  val = c.back();
  der = 0.0;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    der = der * t + val;
    val = val * t + c[i];
  }
}

double residual_scale(const std::vector<std::complex<double>>& c, double r) {
  double scale = 0.0, pw = 1.0;
  for (const auto& ck : c) {
    scale += std::abs(ck) * pw;
    pw *= r;
  }
  return scale;
}

std::string iterate_list(const std::vector<std::complex<double>>& xs) {
  std::ostringstream os;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) os << ", ";
    os << "(" << xs[k].real() << "," << xs[k].imag() << ")";
  }
  return os.str();
}

}  // namespace

std::vector<std::complex<double>> univariate_roots(
    std::vector<std::complex<double>> coeffs, double tol) {
  for (const auto& c : coeffs)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw InvalidArgument("coefficients must be finite");
  if (!(tol >= 0.0) || !std::isfinite(tol))
    throw InvalidArgument("tolerance must be non-negative and finite");
  while (coeffs.size() > 1 && coeffs.back() == 0.0) coeffs.pop_back();
  if (coeffs.size() <= 1)
    throw InvalidArgument("degree must be at least 1 after trimming");

  const std::vector<std::complex<double>> poly = coeffs;  // for residuals

  std::vector<std::complex<double>> roots;
  std::size_t at_zero = 0;
  while (at_zero + 1 < coeffs.size() && coeffs[at_zero] == 0.0) ++at_zero;
  roots.assign(at_zero, std::complex<double>(0.0, 0.0));
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(at_zero));

  const std::size_t deg = coeffs.size() - 1;
  if (deg == 1) {
    roots.push_back(-coeffs[0] / coeffs[1]);
  } else if (deg >= 2) {
    // Aberth-Ehrlich from a Cauchy-bound circle; offset angle so no start
    // sits on an axis of symmetry
    double worst = 0.0;
    for (std::size_t k = 0; k < deg; ++k)
      worst = std::max(worst, std::abs(coeffs[k] / coeffs[deg]));
    const double start_radius = 1.0 + worst;
    std::vector<std::complex<double>> x(deg);
    for (std::size_t k = 0; k < deg; ++k)
      x[k] = std::polar(start_radius,
                        2.0 * std::numbers::pi * static_cast<double>(k) /
                                static_cast<double>(deg) +
                            0.4);

    for (int iter = 0; iter < 400; ++iter) {
      double moved = 0.0;
      for (std::size_t k = 0; k < deg; ++k) {
        std::complex<double> val, der;
        horner(coeffs, x[k], val, der);
        if (val == 0.0) continue;
        if (der == 0.0) {
          x[k] += (1e-8 * (1.0 + std::abs(x[k]))) * std::complex<double>(1.0, 1.0);
          moved = 1.0;
          continue;
        }
        const std::complex<double> newton = val / der;
        std::complex<double> repel = 0.0;
        for (std::size_t j = 0; j < deg; ++j) {
          if (j == k) continue;
          std::complex<double> diff = x[k] - x[j];
          if (diff == 0.0) diff = 1e-12 * (1.0 + std::abs(x[k]));
          repel += 1.0 / diff;
        }
        std::complex<double> den = 1.0 - newton * repel;
        if (den == 0.0) den = 1.0;  // fall back to a plain Newton step
        const std::complex<double> step = newton / den;
        x[k] -= step;
        moved = std::max(moved, std::abs(step) / (1.0 + std::abs(x[k])));
      }
      if (moved < 1e-14) break;
    }
    for (auto& r : x)
      for (int polish = 0; polish < 3; ++polish) {
        std::complex<double> val, der;
        horner(coeffs, r, val, der);
        if (val == 0.0 || der == 0.0) break;
        r -= val / der;
      }
    roots.insert(roots.end(), x.begin(), x.end());
  }

  for (const auto& r : roots) {
    std::complex<double> val, der;
    horner(poly, r, val, der);
    const double bound = tol * residual_scale(poly, std::abs(r));
    if (!(std::abs(val) <= bound)) {
      std::ostringstream os;
      os << "root finding did not converge: |q(r)| = " << std::abs(val)
         << " > " << bound << " at r = (" << r.real() << "," << r.imag()
         << "); best iterates: " << iterate_list(roots);
      throw NumericError(os.str());
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const std::complex<double>& lhs, const std::complex<double>& rhs) {
              if (lhs.real() != rhs.real()) return lhs.real() < rhs.real();
              return lhs.imag() < rhs.imag();
            });
  return roots;
}

Violation curve_witness(const HolomorphicPolynomial& q, const MixedPolynomial& p,
                        double radius, double tol) {
  require_real(p, "curve_witness");
  if (q.is_zero() ||
      (q.terms().size() == 1 && q.terms().begin()->first == ExponentPair{}))
    throw InvalidArgument("curve polynomial must be non-constant");
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw InvalidArgument("radius must be positive and finite");
  if (!(tol >= 0.0) || !std::isfinite(tol))
    throw InvalidArgument("tolerance must be non-negative and finite");

  const LeviMatrix levi = levi_matrix(p);

  for (int j = 1; j <= 64; ++j) {
    const double tmod = std::ldexp(radius, -j);
    if (tmod == 0.0) break;
    for (int m = 0; m < 8; ++m) {
      const std::complex<double> t =
          std::polar(tmod, std::numbers::pi * static_cast<double>(m) / 4.0);
      const std::vector<std::complex<double>> slice = q.coefficients_in_w(t);
      std::vector<std::complex<double>> roots;
      try {
        roots = univariate_roots(slice, tol);
      } catch (const InvalidArgument&) {
        continue;  // slice degenerated to a constant
      } catch (const NumericError&) {
        continue;  // solver failed here; later slices may still work
      }
      for (const auto& w0 : roots) {
        const double wmod = std::abs(w0);
        if (!(wmod > 0.0) || wmod > radius) continue;
        std::complex<double> val, der;
        horner(slice, w0, val, der);
        const double res = std::abs(val);
        if (!(res <= tol * residual_scale(slice, wmod))) continue;
        const ExactLevi ex =
            eval_levi_exact(levi, gaussian_from_complex(t), gaussian_from_complex(w0));
        const bool det_neg = ex.det() < 0;
        if (!det_neg && !(ex.tr() < 0)) continue;
        const EigenEstimate ee = eigen_from_exact(ex);
        Violation v;
        v.z = t;
        v.w = w0;
        v.lambda_min = ee.lambda_min;
        v.scale = ee.scale;
        {
          std::ostringstream os;
          os << "slice j=" << j << " m=" << m << "; root residual " << res
             << "; exact " << (det_neg ? "det" : "trace") << " < 0";
          v.context = os.str();
        }
        return v;
      }
    }
  }
  std::ostringstream os;
  os << "no violation verified on the curve within radius " << radius
     << " (512 slices tried)";
  throw WitnessNotFound(os.str());
}

}  // namespace pshnd
