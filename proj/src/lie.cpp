#include "jordan/lie.hpp"

#include <algorithm>
#include <cmath>

namespace jordan {

namespace {
constexpr int kAdSizeLimit = 8;
}

LieStructure LieStructure::sl(int n) {
  if (n < 2) fail(ErrorKind::ShapeError, "sl(n) needs n >= 2");
  LieStructure L;
  L.family = Family::SL;
  L.n = n;
  return L;
}

LieStructure LieStructure::so(int p, int q) {
  if (p < 0 || q < 0 || p + q < 2) fail(ErrorKind::ShapeError, "so(p,q) needs p+q >= 2");
  LieStructure L;
  L.family = Family::SO;
  L.p = p;
  L.q = q;
  L.n = p + q;
  L.form = SquareMatrix(L.n);
  for (int i = 0; i < L.n; ++i) L.form.at(i, i) = Scalar(i < p ? 1L : -1L);
  return L;
}

LieStructure LieStructure::sp(int n) {
  if (n < 2 || n % 2) fail(ErrorKind::ShapeError, "sp(n) needs even n >= 2");
  LieStructure L;
  L.family = Family::SP;
  L.n = n;
  L.form = SquareMatrix(n);
  int half = n / 2;
  for (int i = 0; i < half; ++i) {
    L.form.at(i, half + i) = Scalar(1L);
    L.form.at(half + i, i) = Scalar(-1L);
  }
  return L;
}

std::string LieStructure::name() const {
  switch (family) {
    case Family::SL: return "sl(" + std::to_string(n) + ")";
    case Family::SO: return "so(" + std::to_string(p) + "," + std::to_string(q) + ")";
    case Family::SP: return "sp(" + std::to_string(n) + ")";
  }
  return "?";
}

MembershipResult algebra_membership(const SquareMatrix& X, const LieStructure& L, double tol) {
  if (X.dim() != L.n) fail(ErrorKind::ShapeError, "operator size does not match " + L.name());
  bool fl = X.is_float();
  if (L.family == LieStructure::Family::SL) {
    Scalar t = X.trace();
    double res = std::abs(t.to_complex());
    return {fl ? res <= tol : t.is_zero(), res};
  }
  SquareMatrix dev = X.transpose() * L.form + L.form * X;
  double res = frobenius_norm(dev);
  return {fl ? res <= tol : dev.is_zero(), res};
}

MembershipResult group_membership(const SquareMatrix& g, const LieStructure& L, double tol) {
  if (g.dim() != L.n) fail(ErrorKind::ShapeError, "operator size does not match " + L.name());
  bool fl = g.is_float();
  Scalar d = det(g);
  Scalar ddev = d - Scalar(1L);
  double res = std::abs(ddev.to_complex());
  bool ok = fl ? res <= tol : ddev.is_zero();
  if (L.has_form()) {
    SquareMatrix fdev = g.transpose() * L.form * g - L.form;
    double fres = frobenius_norm(fdev);
    ok = ok && (fl ? fres <= tol : fdev.is_zero());
    res = std::max(res, fres);
  }
  return {ok, res};
}

SquareMatrix ad_operator(const SquareMatrix& X) {
  int n = X.dim();
  if (n > kAdSizeLimit)
    fail(ErrorKind::SizeLimit, "ad operator capped at dimension " + std::to_string(kAdSizeLimit));
  SquareMatrix m(n * n);
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Scalar v;
          if (l == s) v += X.at(r, k);
          if (r == k) v -= X.at(l, s);
          if (!v.is_zero()) m.at(r * n + s, k * n + l) = v;
        }
  return m;
}

SquareMatrix Ad_operator(const SquareMatrix& g) {
  int n = g.dim();
  if (n > kAdSizeLimit)
    fail(ErrorKind::SizeLimit, "Ad operator capped at dimension " + std::to_string(kAdSizeLimit));
  SquareMatrix gi = inverse(g);
  SquareMatrix m(n * n);
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Scalar v = g.at(r, k) * gi.at(l, s);
          if (!v.is_zero()) m.at(r * n + s, k * n + l) = v;
        }
  return m;
}

namespace {

std::vector<Scalar> expand_roots(const SpectralData& s) {
  std::vector<Scalar> out;
  for (const auto& [lambda, mult] : s.all_roots())
    for (int i = 0; i < mult; ++i) out.push_back(lambda);
  return out;
}

bool equal_multisets(std::vector<Scalar> a, std::vector<Scalar> b, bool exact, double tol,
                     double* distance) {
  *distance = 0;
  if (a.size() != b.size()) {
    *distance = 1e300;
    return false;
  }
  auto lt = [](const Scalar& x, const Scalar& y) { return Scalar::compare_canonical(x, y) < 0; };
  std::sort(a.begin(), a.end(), lt);
  std::sort(b.begin(), b.end(), lt);
  if (exact) {
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return false;
    return true;
  }
  double worst = 0;
  for (size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i].to_complex() - b[i].to_complex()));
  *distance = worst;
  return worst <= tol;
}

}  // namespace

VerificationReport ad_spectrum_check(const SquareMatrix& S, ModeRequest mode,
                                     const NumericOptions& opts) {
  ClassificationReport cls = classify_operator(S, mode, opts);
  if (!cls.semisimple)
    fail(ErrorKind::NotSemisimple, "ad spectrum relation needs a semisimple operator");
  SpectralData spec_s = factor_minimal_polynomial(characteristic_polynomial(S), mode, opts);
  std::vector<Scalar> eigs = expand_roots(spec_s);

  std::vector<Scalar> expected;
  for (const auto& a : eigs)
    for (const auto& b : eigs) expected.push_back(a - b);

  SquareMatrix ad = ad_operator(S);
  SpectralData spec_ad = factor_minimal_polynomial(characteristic_polynomial(ad), mode, opts);
  std::vector<Scalar> actual = expand_roots(spec_ad);

  bool exact = spec_s.mode == Mode::Exact && spec_ad.mode == Mode::Exact;
  VerificationReport report;
  double dist = 0;
  bool match = equal_multisets(expected, actual, exact, 1e-8, &dist);
  report.add("spectrum_differences_match", match, dist);

  // minimal-polynomial multiplicities, not characteristic ones, decide
  // semisimplicity
  ClassificationReport ad_cls = classify_operator(ad, mode, opts);
  if (cls.elliptic_add) report.add("elliptic_inherited_by_ad", ad_cls.elliptic_add);
  if (cls.hyperbolic_add) report.add("hyperbolic_inherited_by_ad", ad_cls.hyperbolic_add);
  return report;
}

VerificationReport Ad_spectrum_check(const SquareMatrix& s, ModeRequest mode,
                                     const NumericOptions& opts) {
  Poly p = minimal_polynomial(s);
  if (p.coeff(0).is_zero()) fail(ErrorKind::NotInvertible, "Ad needs an invertible operator");
  ClassificationReport cls = classify_operator(s, mode, opts);
  VerificationReport report;
  if (cls.unipotent) {
    SquareMatrix ad_g = Ad_operator(s);
    SquareMatrix dev = ad_g - SquareMatrix::identity(ad_g.dim());
    report.add("Ad_unipotent", is_nilpotent(dev));
    return report;
  }
  if (!cls.semisimple)
    fail(ErrorKind::NotSemisimple, "Ad spectrum relation needs semisimple or unipotent input");
  SpectralData spec_s = factor_minimal_polynomial(characteristic_polynomial(s), mode, opts);
  std::vector<Scalar> eigs = expand_roots(spec_s);

  std::vector<Scalar> expected;
  for (const auto& a : eigs)
    for (const auto& b : eigs) expected.push_back(a * b.inverse());

  SquareMatrix ad_g = Ad_operator(s);
  SpectralData spec_ad = factor_minimal_polynomial(characteristic_polynomial(ad_g), mode, opts);
  std::vector<Scalar> actual = expand_roots(spec_ad);

  bool exact = spec_s.mode == Mode::Exact && spec_ad.mode == Mode::Exact;
  double dist = 0;
  bool match = equal_multisets(expected, actual, exact, 1e-8, &dist);
  report.add("spectrum_ratios_match", match, dist);

  ClassificationReport ad_cls = classify_operator(ad_g, mode, opts);
  if (cls.elliptic_mult) report.add("elliptic_inherited_by_Ad", ad_cls.elliptic_mult);
  if (cls.hyperbolic_mult) report.add("hyperbolic_inherited_by_Ad", ad_cls.hyperbolic_mult);
  return report;
}

VerificationReport closure_check_algebra(const SquareMatrix& X, const LieStructure& L,
                                         ModeRequest mode, double tol) {
  MembershipResult pre = algebra_membership(X, L, tol);
  if (!pre.member) fail(ErrorKind::NotMember, "input is not in " + L.name());
  AdditiveDecomposition d = additive_jordan(X, mode);
  VerificationReport report;
  MembershipResult me = algebra_membership(d.elliptic, L, tol);
  report.add("elliptic_in_algebra", me.member, me.residual);
  MembershipResult mh = algebra_membership(d.hyperbolic, L, tol);
  report.add("hyperbolic_in_algebra", mh.member, mh.residual);
  MembershipResult mn = algebra_membership(d.nilpotent, L, tol);
  report.add("nilpotent_in_algebra", mn.member, mn.residual);

  // trace bookkeeping of the closure proof on the defining representation
  bool fl = d.elliptic.is_float();
  auto trace_zero = [&](const SquareMatrix& m, const char* name) {
    Scalar t = m.trace();
    double res = std::abs(t.to_complex());
    report.add(name, fl ? res <= tol : t.is_zero(), res);
  };
  trace_zero(d.nilpotent, "trace_nilpotent_zero");
  trace_zero(d.elliptic, "trace_elliptic_zero");
  trace_zero(d.hyperbolic, "trace_hyperbolic_zero");
  return report;
}

VerificationReport closure_check_group(const SquareMatrix& g, const LieStructure& L,
                                       ModeRequest mode, double tol) {
  MembershipResult pre = group_membership(g, L, tol);
  if (!pre.member) fail(ErrorKind::NotMember, "input is not in the group of " + L.name());
  MultiplicativeDecomposition d = multiplicative_jordan(g, mode);
  VerificationReport report;
  MembershipResult me = group_membership(d.elliptic, L, tol);
  report.add("elliptic_in_group", me.member, me.residual);
  MembershipResult mh = group_membership(d.hyperbolic, L, tol);
  report.add("hyperbolic_in_group", mh.member, mh.residual);
  MembershipResult mu = group_membership(d.unipotent, L, tol);
  report.add("unipotent_in_group", mu.member, mu.residual);

  bool fl = d.elliptic.is_float();
  auto det_one = [&](const SquareMatrix& m, const char* name) {
    Scalar dev = det(m) - Scalar(1L);
    double res = std::abs(dev.to_complex());
    report.add(name, fl ? res <= tol : dev.is_zero(), res);
  };
  det_one(d.elliptic, "det_elliptic_one");
  det_one(d.hyperbolic, "det_hyperbolic_one");
  return report;
}

}  // namespace jordan
