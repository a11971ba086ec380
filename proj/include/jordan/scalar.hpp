#pragma once

#include <gmpxx.h>

#include <complex>
#include <map>
#include <string>
#include <utility>

#include "jordan/errors.hpp"

namespace jordan {

using Int = mpz_class;
using Rat = mpq_class;

// n = square * squarefree; returns (sqrt of square part, squarefree part). n > 0.
std::pair<Int, Int> squarefree_split(const Int& n);

// Full factorization, trial division then Pollard rho. n > 0.
void factorize(Int n, std::map<Int, int>& out);

Rat make_rat(const Int& num, const Int& den);

// Exact conversion of a decimal string ("1.25", "-3e2", "4/7") to a rational.
Rat rat_from_string(const std::string& s);

std::string rat_str(const Rat& q);

// Finite sum of rational multiples of square roots of distinct square-free
// positive integers; the radicand 1 carries the rational part.
class Radical {
 public:
  Radical() = default;
  Radical(const Rat& q);
  Radical(long v);

  // Exact square root of q >= 0 as a single-term radical.
  static Radical sqrt_rational(const Rat& q);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rat as_rational() const;  // Internal error if irrational

  const std::map<Int, Rat>& terms() const { return terms_; }

  Radical operator-() const;
  Radical& operator+=(const Radical& o);
  Radical& operator-=(const Radical& o);
  friend Radical operator+(Radical a, const Radical& b) { return a += b; }
  friend Radical operator-(Radical a, const Radical& b) { return a -= b; }
  friend Radical operator*(const Radical& a, const Radical& b);

  Radical inverse() const;  // DegenerateInput on zero
  int sign() const;         // exact: -1, 0, +1
  double to_double() const;

  bool operator==(const Radical& o) const { return terms_ == o.terms_; }

  std::string str() const;

 private:
  void set_term(const Int& radicand, const Rat& coeff);
  std::map<Int, Rat> terms_;
};

enum class Ring { Rational, Gaussian, Radical, GaussianRadical, ComplexFloat };

const char* ring_name(Ring r);

// Tower member: exact values are re + im*i with re, im radical-rationals;
// float values are complex doubles (53-bit numeric mode).
class Scalar {
 public:
  Scalar() : is_float_(false) {}
  Scalar(long v) : is_float_(false), re_(v) {}
  Scalar(int v) : is_float_(false), re_(long(v)) {}
  Scalar(const Rat& q) : is_float_(false), re_(q) {}
  Scalar(const Radical& re) : is_float_(false), re_(re) {}
  Scalar(Radical re, Radical im) : is_float_(false), re_(std::move(re)), im_(std::move(im)) {}

  static Scalar gaussian(const Rat& re, const Rat& im) { return Scalar(Radical(re), Radical(im)); }
  static Scalar i() { return Scalar(Radical(), Radical(Rat(1))); }
  static Scalar from_complex(std::complex<double> z);
  static Scalar sqrt_rational(const Rat& q) { return Scalar(Radical::sqrt_rational(q)); }

  bool is_float() const { return is_float_; }
  Ring ring() const;

  bool is_zero() const;
  bool is_one() const { return *this == Scalar(1L); }
  bool is_real() const;      // float: im == 0.0
  bool is_rational() const;  // exact and in Q

  Rat as_rational() const;
  const Radical& real_radical() const;
  const Radical& imag_radical() const;
  std::complex<double> to_complex() const;

  Scalar conj() const;
  Scalar operator-() const;
  Scalar inverse() const;  // DegenerateInput on zero
  Scalar abs_sq() const;   // re^2 + im^2 (exact) or |z|^2 (float)

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  int sign_real() const;  // exact real values only
  static int compare_real(const Scalar& a, const Scalar& b);
  // Total order on scalars of one mode: (re, im) lexicographic.
  static int compare_canonical(const Scalar& a, const Scalar& b);

  std::string str() const;
  static Scalar parse(const std::string& s);

 private:
  bool is_float_ = false;
  Radical re_, im_;
  std::complex<double> f_{0.0, 0.0};
};

inline Scalar widen_to_float(const Scalar& s) { return Scalar::from_complex(s.to_complex()); }

}  // namespace jordan
