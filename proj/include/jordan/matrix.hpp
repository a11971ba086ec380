#pragma once

#include <vector>

#include "jordan/poly.hpp"
#include "jordan/scalar.hpp"

namespace jordan {

class SquareMatrix {
 public:
  SquareMatrix() : n_(0) {}
  explicit SquareMatrix(int n) : n_(n), e_(size_t(n) * n) {
    if (n < 1) fail(ErrorKind::ShapeError, "matrix dimension must be >= 1");
  }

  static SquareMatrix identity(int n);
  static SquareMatrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  int dim() const { return n_; }
  Scalar& at(int i, int j) { return e_[size_t(i) * n_ + j]; }
  const Scalar& at(int i, int j) const { return e_[size_t(i) * n_ + j]; }
  const std::vector<Scalar>& entries() const { return e_; }

  bool is_zero() const;
  bool is_float() const;
  bool is_rational() const;
  Ring ring() const;

  SquareMatrix operator-() const;
  friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b);
  friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b);
  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
  friend SquareMatrix operator*(const Scalar& s, const SquareMatrix& m);
  SquareMatrix& operator+=(const SquareMatrix& o) { return *this = *this + o; }
  SquareMatrix& operator-=(const SquareMatrix& o) { return *this = *this - o; }
  SquareMatrix& operator*=(const SquareMatrix& o) { return *this = *this * o; }

  bool operator==(const SquareMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }
  bool operator!=(const SquareMatrix& o) const { return !(*this == o); }

  SquareMatrix transpose() const;
  SquareMatrix conj() const;
  Scalar trace() const;

  std::string str() const;

 private:
  int n_;
  std::vector<Scalar> e_;
};

// Serial reference product, kept alongside the OpenMP path for testing.
SquareMatrix mul_serial(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix mul_parallel(const SquareMatrix& a, const SquareMatrix& b);

std::vector<Scalar> matvec(const SquareMatrix& m, const std::vector<Scalar>& v);

SquareMatrix pow(const SquareMatrix& m, int e);
SquareMatrix to_float(const SquareMatrix& m);
double frobenius_norm(const SquareMatrix& m);
bool approx_equal(const SquareMatrix& a, const SquareMatrix& b, double tol);
// Exact equality for exact matrices, Frobenius residual for float ones.
bool same_matrix(const SquareMatrix& a, const SquareMatrix& b, double tol);

// Monic annihilator of least degree, by per-basis-vector Krylov chains
// combined with lcm. Exact entries only.
Poly minimal_polynomial(const SquareMatrix& m);

// Faddeev-LeVerrier; exact entries only.
Poly characteristic_polynomial(const SquareMatrix& m);

SquareMatrix eval_poly_at_matrix(const Poly& p, const SquareMatrix& m);

bool is_nilpotent(const SquareMatrix& m);
SquareMatrix matrix_exp_nilpotent(const SquareMatrix& n);   // NotNilpotent
SquareMatrix matrix_log_unipotent(const SquareMatrix& u);   // NotUnipotent

bool commutes(const SquareMatrix& a, const SquareMatrix& b, double tol = 1e-9);
double commutator_residual(const SquareMatrix& a, const SquareMatrix& b);

Scalar det(const SquareMatrix& m);
int rank(const SquareMatrix& m);  // exact entries only
SquareMatrix inverse(const SquareMatrix& m);  // NotInvertible

// Dense double exponential by scaling and squaring.
SquareMatrix expm_double(const SquareMatrix& m);

// Spectral form of the hyperbolic logarithm: value = sum over terms of
// (1/2) ln(modulus_sq) * projector. Kept spectral because the logs are
// transcendental; dense rendering is an explicit conversion.
struct SpectralLog {
  struct Term {
    Scalar modulus_sq;       // exact positive real
    SquareMatrix projector;  // real exact idempotent
  };
  int n = 0;
  std::vector<Term> terms;

  SquareMatrix dense_double() const;  // float entries
};

}  // namespace jordan
