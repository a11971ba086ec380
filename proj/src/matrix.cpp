#include "jordan/matrix.hpp"

#include <cmath>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace jordan {

namespace {
constexpr int kParallelDim = 16;  // below this the omp fork costs more than the work
}

SquareMatrix SquareMatrix::identity(int n) {
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1L);
  return m;
}

SquareMatrix SquareMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  int n = int(rows.size());
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (int(rows[i].size()) != n) fail(ErrorKind::ShapeError, "ragged matrix rows");
    for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

bool SquareMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool SquareMatrix::is_float() const {
  for (const auto& x : e_)
    if (x.is_float()) return true;
  return false;
}

bool SquareMatrix::is_rational() const {
  for (const auto& x : e_)
    if (!x.is_rational()) return false;
  return true;
}

Ring SquareMatrix::ring() const {
  bool has_im = false, has_rad = false;
  for (const auto& c : e_) {
    switch (c.ring()) {
      case Ring::ComplexFloat: return Ring::ComplexFloat;
      case Ring::Rational: break;
      case Ring::Gaussian: has_im = true; break;
      case Ring::Radical: has_rad = true; break;
      case Ring::GaussianRadical: has_im = has_rad = true; break;
    }
  }
  if (has_im && has_rad) return Ring::GaussianRadical;
  if (has_im) return Ring::Gaussian;
  if (has_rad) return Ring::Radical;
  return Ring::Rational;
}

SquareMatrix SquareMatrix::operator-() const {
  SquareMatrix r = *this;
  for (auto& x : r.e_) x = -x;
  return r;
}

SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.n_ != b.n_) fail(ErrorKind::ShapeError, "dimension mismatch in +");
  SquareMatrix r = a;
  for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
  return r;
}

SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.n_ != b.n_) fail(ErrorKind::ShapeError, "dimension mismatch in -");
  SquareMatrix r = a;
  for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
  return r;
}

SquareMatrix operator*(const Scalar& s, const SquareMatrix& m) {
  SquareMatrix r = m;
  for (auto& x : r.e_) x = s * x;
  return r;
}

SquareMatrix mul_serial(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.dim() != b.dim()) fail(ErrorKind::ShapeError, "dimension mismatch in *");
  int n = a.dim();
  SquareMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar acc;
      for (int k = 0; k < n; ++k) acc += a.at(i, k) * b.at(k, j);
      r.at(i, j) = acc;
    }
  return r;
}

SquareMatrix mul_parallel(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.dim() != b.dim()) fail(ErrorKind::ShapeError, "dimension mismatch in *");
  int n = a.dim();
  SquareMatrix r(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar acc;
      for (int k = 0; k < n; ++k) acc += a.at(i, k) * b.at(k, j);
      r.at(i, j) = acc;
    }
  return r;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  return a.dim() >= kParallelDim ? mul_parallel(a, b) : mul_serial(a, b);
}

std::vector<Scalar> matvec(const SquareMatrix& m, const std::vector<Scalar>& v) {
  int n = m.dim();
  if (int(v.size()) != n) fail(ErrorKind::ShapeError, "dimension mismatch in matvec");
  std::vector<Scalar> r(n);
  for (int i = 0; i < n; ++i) {
    Scalar acc;
    for (int j = 0; j < n; ++j) acc += m.at(i, j) * v[j];
    r[i] = acc;
  }
  return r;
}

SquareMatrix SquareMatrix::transpose() const {
  SquareMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
  return r;
}

SquareMatrix SquareMatrix::conj() const {
  SquareMatrix r = *this;
  for (auto& x : r.e_) x = x.conj();
  return r;
}

Scalar SquareMatrix::trace() const {
  Scalar t;
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

std::string SquareMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < n_; ++j) os << (j ? ", " : "") << at(i, j).str();
    os << "]";
  }
  os << "]";
  return os.str();
}

SquareMatrix pow(const SquareMatrix& m, int e) {
  SquareMatrix r = SquareMatrix::identity(m.dim());
  SquareMatrix base = m;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

SquareMatrix to_float(const SquareMatrix& m) {
  SquareMatrix r(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r.at(i, j) = widen_to_float(m.at(i, j));
  return r;
}

double frobenius_norm(const SquareMatrix& m) {
  double s = 0;
  for (const auto& x : m.entries()) s += std::norm(x.to_complex());
  return std::sqrt(s);
}

bool approx_equal(const SquareMatrix& a, const SquareMatrix& b, double tol) {
  if (a.dim() != b.dim()) return false;
  return frobenius_norm(a - b) <= tol;
}

bool same_matrix(const SquareMatrix& a, const SquareMatrix& b, double tol) {
  if (a.dim() != b.dim()) return false;
  if (!a.is_float() && !b.is_float()) return a == b;
  return approx_equal(a, b, tol);
}

Poly minimal_polynomial(const SquareMatrix& m) {
  if (m.is_float()) fail(ErrorKind::DegenerateInput, "minimal polynomial needs exact entries");
  int n = m.dim();
  Poly p(Scalar(1L));
  // reduced rows with pivot position and the combination over Krylov powers
  struct Row {
    std::vector<Scalar> vec;
    std::vector<Scalar> comb;
    int pivot;
  };
  for (int j = 0; j < n && p.degree() < n; ++j) {
    std::vector<Row> rows;
    std::vector<Scalar> krylov(n);
    krylov[j] = Scalar(1L);
    for (int step = 0;; ++step) {
      std::vector<Scalar> w = krylov;
      std::vector<Scalar> comb(step + 1);
      comb[step] = Scalar(1L);
      for (const Row& r : rows) {
        const Scalar& f = w[r.pivot];
        if (f.is_zero()) continue;
        Scalar fac = f;  // rows are pivot-normalized
        for (int k = 0; k < n; ++k) w[k] -= fac * r.vec[k];
        for (size_t k = 0; k < r.comb.size(); ++k) comb[k] -= fac * r.comb[k];
      }
      int pivot = -1;
      for (int k = 0; k < n; ++k)
        if (!w[k].is_zero()) {
          pivot = k;
          break;
        }
      if (pivot < 0) {
        Poly annihilator(std::move(comb));
        p = p * poly_divmod(annihilator, poly_gcd(p, annihilator)).first;
        break;
      }
      Scalar inv = w[pivot].inverse();
      for (auto& x : w) x = inv * x;
      std::vector<Scalar> cn = comb;
      for (auto& x : cn) x = inv * x;
      rows.push_back({std::move(w), std::move(cn), pivot});
      krylov = matvec(m, krylov);
    }
  }
  return p.monic();
}

Poly characteristic_polynomial(const SquareMatrix& m) {
  if (m.is_float())
    fail(ErrorKind::DegenerateInput, "characteristic polynomial needs exact entries");
  int n = m.dim();
  std::vector<Scalar> c(n + 1);
  c[n] = Scalar(1L);
  SquareMatrix acc = SquareMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    acc = m * acc;
    Scalar ck = -(acc.trace() / Scalar(long(k)));
    c[n - k] = ck;
    for (int i = 0; i < n; ++i) acc.at(i, i) += ck;
  }
  return Poly(std::move(c));
}

SquareMatrix eval_poly_at_matrix(const Poly& p, const SquareMatrix& m) {
  int n = m.dim();
  SquareMatrix r(n);
  for (int i = p.degree(); i >= 0; --i) {
    r = r * m;
    const Scalar& c = p.coeff(i);
    if (!c.is_zero())
      for (int d = 0; d < n; ++d) r.at(d, d) += c;
  }
  return r;
}

bool is_nilpotent(const SquareMatrix& m) {
  SquareMatrix acc = m;
  int covered = 1;
  while (true) {
    if (acc.is_zero()) return true;
    if (covered >= m.dim()) return false;
    acc = acc * acc;
    covered *= 2;
  }
}

SquareMatrix matrix_exp_nilpotent(const SquareMatrix& n) {
  if (!is_nilpotent(n)) fail(ErrorKind::NotNilpotent, "exp series needs a nilpotent argument");
  SquareMatrix r = SquareMatrix::identity(n.dim());
  SquareMatrix term = SquareMatrix::identity(n.dim());
  for (int j = 1; j < n.dim(); ++j) {
    term = Scalar(make_rat(1, j)) * (term * n);
    if (term.is_zero()) break;
    r += term;
  }
  return r;
}

SquareMatrix matrix_log_unipotent(const SquareMatrix& u) {
  SquareMatrix m = u - SquareMatrix::identity(u.dim());
  if (!is_nilpotent(m)) fail(ErrorKind::NotUnipotent, "log series needs a unipotent argument");
  SquareMatrix r(u.dim());
  SquareMatrix p = SquareMatrix::identity(u.dim());
  for (int j = 1; j < u.dim(); ++j) {
    p = p * m;
    if (p.is_zero()) break;
    Scalar c = Scalar(make_rat(j % 2 ? 1 : -1, j));
    r += c * p;
  }
  return r;
}

double commutator_residual(const SquareMatrix& a, const SquareMatrix& b) {
  return frobenius_norm(a * b - b * a);
}

bool commutes(const SquareMatrix& a, const SquareMatrix& b, double tol) {
  if (a.dim() != b.dim()) fail(ErrorKind::ShapeError, "dimension mismatch in commutes");
  SquareMatrix c = a * b - b * a;
  if (!c.is_float()) return c.is_zero();
  return frobenius_norm(c) <= tol;
}

namespace {

// Gaussian elimination; returns (echelon matrix, rank, det, swaps are folded
// into det). Works over exact fields; float matrices pivot by magnitude.
struct Elim {
  SquareMatrix m;
  int rank = 0;
  Scalar det;
};

Elim eliminate(SquareMatrix m) {
  int n = m.dim();
  bool fl = m.is_float();
  Elim out{m, 0, Scalar(1L)};
  SquareMatrix& a = out.m;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int piv = -1;
    if (fl) {
      double best = 0;
      for (int i = row; i < n; ++i) {
        double mag = std::abs(a.at(i, col).to_complex());
        if (mag > best) {
          best = mag;
          piv = i;
        }
      }
      if (best < 1e-300) piv = -1;
    } else {
      for (int i = row; i < n; ++i)
        if (!a.at(i, col).is_zero()) {
          piv = i;
          break;
        }
    }
    if (piv < 0) {
      out.det = Scalar();
      continue;
    }
    if (piv != row) {
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(row, j));
      out.det = -out.det;
    }
    out.det *= a.at(row, col);
    Scalar inv = a.at(row, col).inverse();
    for (int i = row + 1; i < n; ++i) {
      Scalar f = a.at(i, col) * inv;
      if (f.is_zero()) continue;
      for (int j = col; j < n; ++j) a.at(i, j) -= f * a.at(row, j);
    }
    ++row;
    ++out.rank;
  }
  if (out.rank < n) out.det = Scalar();
  return out;
}

}  // namespace

Scalar det(const SquareMatrix& m) { return eliminate(m).det; }

int rank(const SquareMatrix& m) {
  if (m.is_float()) fail(ErrorKind::DegenerateInput, "rank needs exact entries");
  return eliminate(m).rank;
}

SquareMatrix inverse(const SquareMatrix& m) {
  int n = m.dim();
  bool fl = m.is_float();
  SquareMatrix a = m;
  SquareMatrix inv = SquareMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    if (fl) {
      double best = 0;
      for (int i = col; i < n; ++i) {
        double mag = std::abs(a.at(i, col).to_complex());
        if (mag > best) {
          best = mag;
          piv = i;
        }
      }
    } else {
      for (int i = col; i < n; ++i)
        if (!a.at(i, col).is_zero()) {
          piv = i;
          break;
        }
    }
    if (piv < 0) fail(ErrorKind::NotInvertible, "singular matrix");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    Scalar d = a.at(col, col);
    if (d.is_zero()) fail(ErrorKind::NotInvertible, "singular matrix");
    Scalar di = d.inverse();
    for (int j = 0; j < n; ++j) {
      a.at(col, j) = di * a.at(col, j);
      inv.at(col, j) = di * inv.at(col, j);
    }
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      Scalar f = a.at(i, col);
      if (f.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

SquareMatrix expm_double(const SquareMatrix& m) {
  int n = m.dim();
  SquareMatrix a = to_float(m);
  double norm = frobenius_norm(a);
  // fewer squarings keep the rounding amplification down; the longer Taylor
  // run at norm <= 2 is cheap at desk scale
  int squarings = 0;
  while (norm > 2.0) {
    norm /= 2;
    ++squarings;
  }
  double scale = std::pow(2.0, -squarings);
  a = Scalar::from_complex(scale) * a;
  SquareMatrix r = to_float(SquareMatrix::identity(n));
  SquareMatrix term = r;
  for (int k = 1; k <= 60; ++k) {
    term = Scalar::from_complex(1.0 / k) * (term * a);
    r += term;
    if (frobenius_norm(term) < 1e-22 * (1.0 + frobenius_norm(r))) break;
  }
  for (int s = 0; s < squarings; ++s) r = r * r;
  return r;
}

SquareMatrix SpectralLog::dense_double() const {
  SquareMatrix r(n);
  r = to_float(r);
  for (const auto& t : terms) {
    double c = 0.5 * std::log(t.modulus_sq.to_complex().real());
    r += Scalar::from_complex(c) * to_float(t.projector);
  }
  return r;
}

}  // namespace jordan
