#pragma once

#include <climits>
#include <utility>
#include <vector>

#include "jordan/scalar.hpp"

namespace jordan {

// Dense univariate polynomial, coefficients lowest degree first, no trailing
// zeros. The zero polynomial is the empty sequence and reports kNegInfDegree.
class Poly {
 public:
  static constexpr int kNegInfDegree = INT_MIN;

  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(const Scalar& constant) : c_{constant} { trim(); }

  static Poly x() { return Poly({Scalar(0L), Scalar(1L)}); }
  static Poly monomial(int deg, const Scalar& coeff);

  int degree() const { return c_.empty() ? kNegInfDegree : int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(int i) const { return i >= 0 && i < int(c_.size()) ? c_[i] : Scalar(); }
  Scalar leading() const { return c_.empty() ? Scalar() : c_.back(); }

  bool is_real() const;
  bool is_rational() const;
  bool is_float() const;
  Ring ring() const;  // widest coefficient ring

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Scalar& s, const Poly& p);
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly derivative() const;
  Scalar eval(const Scalar& x) const;
  Poly monic() const;  // DegenerateInput on zero

  std::string str(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

Poly pow(const Poly& p, int e);

// Quotient and remainder; b nonzero, coefficients in a field.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

// Monic gcd; inputs exact, not both zero.
Poly poly_gcd(const Poly& a, const Poly& b);

struct Xgcd {
  Poly g, s, t;  // s*a + t*b = g, g monic, deg(s) minimal
};
Xgcd poly_extended_gcd(const Poly& a, const Poly& b);

// Yun's algorithm; p nonzero with exact coefficients.
// p = lc(p) * prod factor_i^mult_i, factors monic squarefree pairwise coprime.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

Poly conjugate_poly(const Poly& p);

// Remainder of p modulo m; m nonzero.
Poly mod_reduce(const Poly& p, const Poly& m);

// Coefficients of p in the basis (x - at)^i, low order first (length deg+1).
std::vector<Scalar> local_coefficients(const Poly& p, const Scalar& at);

// Polynomial a of degree < order with a*q == 1 mod (x - at)^order.
// q(at) == 0 raises SingularLocalInverse.
Poly series_inverse_at(const Poly& q, const Scalar& at, int order);

inline Poly from_root(const Scalar& r) { return Poly({-r, Scalar(1L)}); }

Poly to_float(const Poly& p);

}  // namespace jordan
