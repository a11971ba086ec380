#include "jordan/poly.hpp"

#include <sstream>

namespace jordan {

Poly Poly::monomial(int deg, const Scalar& coeff) {
  if (coeff.is_zero() || deg < 0) return Poly();
  std::vector<Scalar> c(deg + 1);
  c[deg] = coeff;
  return Poly(std::move(c));
}

bool Poly::is_real() const {
  for (const auto& c : c_)
    if (!c.is_real()) return false;
  return true;
}

bool Poly::is_rational() const {
  for (const auto& c : c_)
    if (!c.is_rational()) return false;
  return true;
}

bool Poly::is_float() const {
  for (const auto& c : c_)
    if (c.is_float()) return true;
  return false;
}

Ring Poly::ring() const {
  bool has_im = false, has_rad = false;
  for (const auto& c : c_) {
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

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.c_.size()) c[i] += a.c_[i];
    if (i < b.c_.size()) c[i] += b.c_[i];
  }
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

Poly operator*(const Scalar& s, const Poly& p) {
  Poly r = p;
  for (auto& c : r.c_) c = s * c;
  return Poly(std::move(r.c_));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Scalar> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Scalar(long(i)) * c_[i];
  return Poly(std::move(d));
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar acc;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) fail(ErrorKind::DegenerateInput, "monic of zero polynomial");
  Scalar inv = leading().inverse();
  return inv * *this;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& c = c_[i];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    bool wrap = i > 0 && cs.find_first_of("+-", 1) != std::string::npos;
    if (!first && (wrap || cs[0] != '-')) os << "+";
    first = false;
    bool is_unit = cs == "1", is_neg_unit = cs == "-1";
    if (i == 0) {
      os << cs;
    } else {
      if (is_neg_unit)
        os << "-";
      else if (!is_unit)
        os << (wrap ? "(" + cs + ")" : cs) << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Poly pow(const Poly& p, int e) {
  Poly r(Scalar(1L));
  Poly base = p;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(ErrorKind::DegenerateInput, "division by zero polynomial");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Scalar> rem(a.coeffs());
  std::vector<Scalar> quo(a.degree() - b.degree() + 1);
  Scalar lead_inv = b.leading().inverse();
  for (int i = a.degree(); i >= b.degree(); --i) {
    Scalar f = rem[i] * lead_inv;
    if (f.is_zero()) continue;
    quo[i - b.degree()] = f;
    for (int j = 0; j <= b.degree(); ++j) rem[i - b.degree() + j] -= f * b.coeff(j);
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero())
    fail(ErrorKind::DegenerateInput, "gcd of two zero polynomials");
  if (a.is_float() || b.is_float())
    fail(ErrorKind::DegenerateInput, "gcd requires exact coefficients");
  Poly u = a, v = b;
  while (!v.is_zero()) {
    Poly r = poly_divmod(u, v).second;
    u = std::move(v);
    v = std::move(r);
  }
  return u.monic();
}

Xgcd poly_extended_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero())
    fail(ErrorKind::DegenerateInput, "extended gcd of two zero polynomials");
  if (a.is_float() || b.is_float())
    fail(ErrorKind::DegenerateInput, "extended gcd requires exact coefficients");
  Poly r0 = a, r1 = b;
  Poly s0(Scalar(1L)), s1;
  while (!r1.is_zero()) {
    auto [q, r2] = poly_divmod(r0, r1);
    Poly s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = s0*a + t0*b. Reduce s0 modulo b/g for minimal-degree cofactors.
  Poly g = r0, s = s0;
  if (!b.is_zero()) {
    Poly bg = poly_divmod(b, g).first;
    if (bg.degree() > 0) s = poly_divmod(s, bg).second;
  }
  Poly t = b.is_zero() ? Poly() : poly_divmod(g - s * a, b).first;
  Scalar inv = g.leading().inverse();
  return {inv * g, inv * s, inv * t};
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) fail(ErrorKind::DegenerateInput, "squarefree decomposition of zero");
  if (p.is_float())
    fail(ErrorKind::DegenerateInput, "squarefree decomposition requires exact coefficients");
  std::vector<std::pair<Poly, int>> out;
  Poly w = p.monic();
  if (w.degree() == 0) return out;
  Poly g = poly_gcd(w, w.derivative());
  if (g.degree() == 0) {
    out.emplace_back(w, 1);
    return out;
  }
  // Yun
  Poly a = poly_divmod(w, g).first;
  Poly b = poly_divmod(w.derivative(), g).first;
  Poly c = b - a.derivative();
  int mult = 1;
  while (a.degree() > 0) {
    Poly f = poly_gcd(a, c);
    if (f.degree() > 0) out.emplace_back(f, mult);
    a = poly_divmod(a, f).first;
    b = poly_divmod(c, f).first;
    c = b - a.derivative();
    ++mult;
  }
  return out;
}

Poly conjugate_poly(const Poly& p) {
  std::vector<Scalar> c(p.coeffs());
  for (auto& x : c) x = x.conj();
  return Poly(std::move(c));
}

Poly mod_reduce(const Poly& p, const Poly& m) {
  if (m.is_zero()) fail(ErrorKind::DegenerateInput, "reduction modulo zero polynomial");
  return poly_divmod(p, m).second;
}

std::vector<Scalar> local_coefficients(const Poly& p, const Scalar& at) {
  // repeated synthetic division by (x - at); remainders are the local coefficients
  std::vector<Scalar> cur(p.coeffs());
  std::vector<Scalar> out;
  if (cur.empty()) return {Scalar()};
  while (!cur.empty()) {
    std::vector<Scalar> quo(cur.size() > 1 ? cur.size() - 1 : 0);
    Scalar rem, acc;
    for (size_t i = cur.size(); i-- > 0;) {
      Scalar v = cur[i] + acc * at;
      if (i > 0)
        quo[i - 1] = v;
      else
        rem = v;
      acc = v;
    }
    out.push_back(rem);
    cur = std::move(quo);
  }
  return out;
}

Poly series_inverse_at(const Poly& q, const Scalar& at, int order) {
  if (order <= 0) fail(ErrorKind::DegenerateInput, "series inverse needs positive order");
  std::vector<Scalar> d = local_coefficients(q, at);
  d.resize(std::max<size_t>(d.size(), order), Scalar());
  if (d[0].is_zero()) fail(ErrorKind::SingularLocalInverse, "q(at) = 0 in series inverse");
  std::vector<Scalar> b(order);
  Scalar inv0 = d[0].inverse();
  b[0] = inv0;
  for (int j = 1; j < order; ++j) {
    Scalar acc;
    for (int i = 1; i <= j; ++i) acc += d[i] * b[j - i];
    b[j] = -acc * inv0;
  }
  // expand sum b_j (x - at)^j by Horner
  Poly shift({-at, Scalar(1L)});
  Poly res;
  for (int j = order; j-- > 0;) res = res * shift + Poly(b[j]);
  return res;
}

Poly to_float(const Poly& p) {
  std::vector<Scalar> c(p.coeffs());
  for (auto& x : c) x = widen_to_float(x);
  return Poly(std::move(c));
}

}  // namespace jordan
