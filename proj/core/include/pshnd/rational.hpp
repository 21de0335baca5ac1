#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>

namespace pshnd {

using Int = boost::multiprecision::cpp_int;
// cpp_rational keeps the canonical form we rely on everywhere:
// gcd-reduced, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;

// Nearest double (round half to even). Written out manually because the
// generic convert_to<double> path goes through num/den doubles and loses
// the last bit for wide operands.
double to_double(const Rational& r);

// Exact conversion back; every finite double is dyadic.
Rational rational_from_double(double x);

Int binomial(unsigned n, unsigned k);

std::string to_string(const Rational& r);       // "p/q" only when q != 1
std::string to_fraction_string(const Rational& r);  // always "p/q"

// Complex number with exact rational parts. Value type, always normalized
// because the parts are.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational real, Rational imag = Rational(0))
      : re(std::move(real)), im(std::move(imag)) {}
  GaussianRational(int real) : re(real), im(0) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, -im}; }

  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational nre = re * o.re - im * o.im;
    Rational nim = re * o.im + im * o.re;
    re = std::move(nre);
    im = std::move(nim);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
    return a += b;
  }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
    return a -= b;
  }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) {
    return a *= b;
  }
  friend GaussianRational operator-(const GaussianRational& a) {
    return {-a.re, -a.im};
  }

  // |v|^2 as an exact rational.
  Rational norm_sq() const { return re * re + im * im; }
};

std::complex<double> to_complex(const GaussianRational& v);
GaussianRational gaussian_from_complex(std::complex<double> v);

}  // namespace pshnd
