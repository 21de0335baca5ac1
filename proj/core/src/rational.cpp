#include "pshnd/rational.hpp"

#include "pshnd/error.hpp"

#include <cmath>
#include <limits>

namespace pshnd {

double to_double(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::msb;
  using boost::multiprecision::numerator;

  Int num = numerator(r);
  if (num == 0) return 0.0;
  const bool neg = num < 0;
  if (neg) num = -num;
  Int den = denominator(r);

  // Shift so the integer quotient carries 55 significant bits, two more
  // than a double mantissa; the spare bits plus the division remainder
  // decide the rounding.
  const long nb = static_cast<long>(msb(num));
  const long db = static_cast<long>(msb(den));
  long k = 55 - (nb - db);
  if (k > 0)
    num <<= k;
  else if (k < 0)
    den <<= -k;

  Int q, rem;
  boost::multiprecision::divide_qr(num, den, q, rem);
  long qb = static_cast<long>(msb(q));  // 54..56
  const long drop = qb - 52;            // > 0 by construction
  const Int half = Int(1) << (drop - 1);
  const Int low = q & ((Int(1) << drop) - 1);
  Int mant = q >> drop;
  bool round_up;
  if (low > half)
    round_up = true;
  else if (low < half)
    round_up = false;
  else
    round_up = (rem != 0) ? true : boost::multiprecision::bit_test(mant, 0);
  if (round_up) {
    ++mant;
    if (boost::multiprecision::msb(mant) > 52) {  // carried into a new bit
      mant >>= 1;
      ++qb;  // value doubled; fold into the exponent below
    }
  }
  const double m = mant.convert_to<double>();  // <= 2^53, exact
  const long exp2 = drop - k + (qb - static_cast<long>(msb(q)));
  double value = std::ldexp(m, static_cast<int>(exp2));
  return neg ? -value : value;
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x))
    throw InvalidArgument("cannot convert non-finite double to rational");
  if (x == 0.0) return Rational(0);
  int e = 0;
  double m = std::frexp(x, &e);  // x = m * 2^e, |m| in [0.5, 1)
  // 53 mantissa bits make m * 2^53 integral.
  auto mi = static_cast<long long>(std::ldexp(m, 53));
  e -= 53;
  Rational r(mi);
  if (e > 0)
    r *= Rational(Int(1) << e);
  else if (e < 0)
    r /= Rational(Int(1) << -e);
  return r;
}

Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (unsigned j = 1; j <= k; ++j) {
    result *= n - k + j;
    result /= j;  // exact: product of j consecutive integers
  }
  return result;
}

std::string to_string(const Rational& r) {
  const Int den = boost::multiprecision::denominator(r);
  std::string s = boost::multiprecision::numerator(r).str();
  if (den != 1) s += "/" + den.str();
  return s;
}

std::string to_fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

std::complex<double> to_complex(const GaussianRational& v) {
  return {to_double(v.re), to_double(v.im)};
}

GaussianRational gaussian_from_complex(std::complex<double> v) {
  return {rational_from_double(v.real()), rational_from_double(v.imag())};
}

}  // namespace pshnd
