#include "jordan/decompose.hpp"

#include <algorithm>
#include <cmath>

namespace jordan {

namespace {

struct WitnessBundle {
  Poly semisimple, elliptic, hyperbolic, nilpotent;
};

Poly enforce_real(Poly p, bool exact, const char* what) {
  if (!p.is_float()) {
    if (!p.is_real())
      fail(ErrorKind::Internal, std::string(what) + " witness has non-real coefficients");
    return p;
  }
  double scale = 0;
  for (const auto& c : p.coeffs()) scale = std::max(scale, std::abs(c.to_complex()));
  std::vector<Scalar> out;
  for (const auto& c : p.coeffs()) {
    auto z = c.to_complex();
    if (std::abs(z.imag()) > 1e-12 * (1.0 + scale))
      fail(ErrorKind::Internal,
           std::string(what) + " witness imaginary part did not cancel (conjugate pairing bug)");
    out.push_back(Scalar::from_complex(z.real()));
  }
  (void)exact;
  return Poly(std::move(out));
}

WitnessBundle additive_witnesses(const ProjectorSet& ps) {
  const SpectralData& spec = ps.source;
  const Poly& pm = spec.p_min;
  bool exact = spec.mode == Mode::Exact;
  Poly x = Poly::x();
  Poly ws, we, wh, wn;
  for (size_t k = 0; k < spec.pairs.size(); ++k) {
    const auto& pr = spec.pairs[k];
    const Poly& pi = ps.pair_projectors[k];
    Poly t = pr.lambda * pi;
    ws += t + conjugate_poly(t);
    Poly te = (Scalar::i() * pr.im) * pi;
    we += te + conjugate_poly(te);
    wh += pr.re * (pi + conjugate_poly(pi));
    Poly tn = (x - Poly(pr.lambda)) * pi;
    wn += tn + conjugate_poly(tn);
  }
  for (size_t k = 0; k < spec.reals.size(); ++k) {
    const auto& rr = spec.reals[k];
    const Poly& pi = ps.real_projectors[k];
    ws += rr.lambda * pi;
    wh += rr.lambda * pi;
    wn += (x - Poly(rr.lambda)) * pi;
  }
  WitnessBundle b;
  b.semisimple = enforce_real(mod_reduce(ws, pm), exact, "semisimple");
  b.elliptic = enforce_real(mod_reduce(we, pm), exact, "elliptic");
  b.hyperbolic = enforce_real(mod_reduce(wh, pm), exact, "hyperbolic");
  b.nilpotent = enforce_real(mod_reduce(wn, pm), exact, "nilpotent");
  return b;
}

}  // namespace

AdditiveDecomposition additive_jordan_with_spectrum(const SquareMatrix& X,
                                                    const SpectralData& spec) {
  ProjectorSet ps = build_projectors(spec);
  WitnessBundle b = additive_witnesses(ps);
  AdditiveDecomposition d;
  d.witness_elliptic = b.elliptic;
  d.witness_hyperbolic = b.hyperbolic;
  d.witness_nilpotent = b.nilpotent;
  d.elliptic = eval_poly_at_matrix(b.elliptic, X);
  d.hyperbolic = eval_poly_at_matrix(b.hyperbolic, X);
  d.nilpotent = eval_poly_at_matrix(b.nilpotent, X);
  d.source = spec;
  return d;
}

AdditiveDecomposition additive_jordan(const SquareMatrix& X, ModeRequest mode,
                                      const NumericOptions& opts) {
  Poly p = minimal_polynomial(X);
  SpectralData spec = factor_minimal_polynomial(p, mode, opts);
  return additive_jordan_with_spectrum(X, spec);
}

std::vector<Scalar> elliptic_mult_eigenvalues(const SpectralData& spec) {
  std::vector<Scalar> out;
  for (const auto& pr : spec.pairs) {
    Scalar mod = Scalar::sqrt_rational(pr.modulus_sq.as_rational());
    out.push_back(pr.lambda * mod.inverse());
  }
  for (const auto& rr : spec.reals) out.push_back(Scalar(long(rr.lambda.sign_real())));
  return out;
}

std::vector<Scalar> hyperbolic_mult_eigenvalues(const SpectralData& spec) {
  std::vector<Scalar> out;
  for (const auto& pr : spec.pairs)
    out.push_back(Scalar::sqrt_rational(pr.modulus_sq.as_rational()));
  for (const auto& rr : spec.reals)
    out.push_back(rr.lambda.sign_real() > 0 ? rr.lambda : -rr.lambda);
  return out;
}

MultiplicativeDecomposition multiplicative_jordan_with_spectrum(const SquareMatrix& g,
                                                                const SpectralData& spec) {
  const Poly& pm = spec.p_min;
  if (pm.coeff(0).is_zero())
    fail(ErrorKind::NotInvertible, "zero is an eigenvalue; no multiplicative decomposition");
  ProjectorSet ps = build_projectors(spec);
  WitnessBundle add = additive_witnesses(ps);

  bool exact = spec.mode == Mode::Exact;
  bool fallback = false;
  if (exact)
    for (const auto& pr : spec.pairs)
      if (!pr.modulus_sq.is_rational()) fallback = true;

  MultiplicativeDecomposition d;
  d.source = spec;
  d.numeric_fallback = fallback;

  // inverse-semisimple witness: exact whenever the spectrum is exact
  Poly winv;
  for (size_t k = 0; k < spec.pairs.size(); ++k) {
    Poly t = spec.pairs[k].lambda.inverse() * ps.pair_projectors[k];
    winv += t + conjugate_poly(t);
  }
  for (size_t k = 0; k < spec.reals.size(); ++k)
    winv += spec.reals[k].lambda.inverse() * ps.real_projectors[k];
  winv = enforce_real(mod_reduce(winv, pm), exact, "inverse-semisimple");
  Poly wu = enforce_real(mod_reduce(Poly(Scalar(1L)) + add.nilpotent * winv, pm), exact,
                         "unipotent");
  d.witness_unipotent = wu;
  d.unipotent = eval_poly_at_matrix(wu, g);

  // elliptic and hyperbolic witnesses need |lambda|
  Poly we, wh;
  if (!fallback) {
    for (size_t k = 0; k < spec.pairs.size(); ++k) {
      const auto& pr = spec.pairs[k];
      const Poly& pi = ps.pair_projectors[k];
      Scalar mod = exact ? Scalar::sqrt_rational(pr.modulus_sq.as_rational())
                         : Scalar::from_complex(
                               std::sqrt(std::abs(pr.modulus_sq.to_complex().real())));
      Poly te = (pr.lambda * mod.inverse()) * pi;
      we += te + conjugate_poly(te);
      wh += mod * (pi + conjugate_poly(pi));
    }
    for (size_t k = 0; k < spec.reals.size(); ++k) {
      const auto& rr = spec.reals[k];
      const Poly& pi = ps.real_projectors[k];
      Scalar mod, unit;
      if (exact) {
        int s = rr.lambda.sign_real();
        mod = s > 0 ? rr.lambda : -rr.lambda;
        unit = Scalar(long(s));
      } else {
        double v = rr.lambda.to_complex().real();
        mod = Scalar::from_complex(std::abs(v));
        unit = Scalar::from_complex(v >= 0 ? 1.0 : -1.0);
      }
      we += unit * pi;
      wh += mod * pi;
    }
  } else {
    // nested-radical moduli: render elliptic/hyperbolic parts numerically
    for (size_t k = 0; k < spec.pairs.size(); ++k) {
      const auto& pr = spec.pairs[k];
      Poly pi = to_float(ps.pair_projectors[k]);
      std::complex<double> lam = pr.lambda.to_complex();
      double mod = std::abs(lam);
      Poly te = Scalar::from_complex(lam / mod) * pi;
      we += te + conjugate_poly(te);
      wh += Scalar::from_complex(mod) * (pi + conjugate_poly(pi));
    }
    for (size_t k = 0; k < spec.reals.size(); ++k) {
      Poly pi = to_float(ps.real_projectors[k]);
      double v = spec.reals[k].lambda.to_complex().real();
      we += Scalar::from_complex(v >= 0 ? 1.0 : -1.0) * pi;
      wh += Scalar::from_complex(std::abs(v)) * pi;
    }
  }
  bool exact_eh = exact && !fallback;
  d.witness_elliptic = enforce_real(mod_reduce(we, pm), exact_eh, "elliptic");
  d.witness_hyperbolic = enforce_real(mod_reduce(wh, pm), exact_eh, "hyperbolic");
  d.elliptic = eval_poly_at_matrix(d.witness_elliptic, g);
  d.hyperbolic = eval_poly_at_matrix(d.witness_hyperbolic, g);

  // spectral logarithm of the hyperbolic part
  d.log_hyperbolic.n = g.dim();
  for (size_t k = 0; k < spec.pairs.size(); ++k) {
    const Poly& pi = ps.pair_projectors[k];
    SquareMatrix proj = eval_poly_at_matrix(
        enforce_real(pi + conjugate_poly(pi), exact, "pair projector sum"), g);
    d.log_hyperbolic.terms.push_back({spec.pairs[k].modulus_sq, proj});
  }
  for (size_t k = 0; k < spec.reals.size(); ++k) {
    SquareMatrix proj = eval_poly_at_matrix(ps.real_projectors[k], g);
    d.log_hyperbolic.terms.push_back({spec.reals[k].modulus_sq, proj});
  }

  if (exact) {
    // Theorem formula for u agrees with I + N S^{-1}
    SquareMatrix s_mat = eval_poly_at_matrix(add.semisimple, g);
    SquareMatrix n_mat = eval_poly_at_matrix(add.nilpotent, g);
    SquareMatrix u2 = SquareMatrix::identity(g.dim()) + n_mat * inverse(s_mat);
    if (d.unipotent != u2)
      fail(ErrorKind::Internal, "unipotent witness disagrees with I + N*S^{-1}");
  }
  return d;
}

MultiplicativeDecomposition multiplicative_jordan(const SquareMatrix& g, ModeRequest mode,
                                                  const NumericOptions& opts) {
  Poly p = minimal_polynomial(g);
  if (p.coeff(0).is_zero())
    fail(ErrorKind::NotInvertible, "zero is an eigenvalue; no multiplicative decomposition");
  SpectralData spec = factor_minimal_polynomial(p, mode, opts);
  return multiplicative_jordan_with_spectrum(g, spec);
}

// ----------------------------------------------------------- verification

namespace {

// residual of prod over mu of (M - mu I); float path of the classification checks
double annihilation_residual(const SquareMatrix& m, const std::vector<Scalar>& eigs) {
  SquareMatrix acc = to_float(SquareMatrix::identity(m.dim()));
  SquareMatrix mf = to_float(m);
  for (const auto& mu : eigs) {
    std::complex<double> z = mu.to_complex();
    acc = acc * (mf - Scalar::from_complex(z) * to_float(SquareMatrix::identity(m.dim())));
    if (z.imag() != 0.0)
      acc = acc * (mf - Scalar::from_complex(std::conj(z)) * to_float(SquareMatrix::identity(m.dim())));
  }
  return frobenius_norm(acc);
}

std::vector<Scalar> dedupe(std::vector<Scalar> v) {
  std::vector<Scalar> out;
  for (const auto& s : v) {
    bool seen = false;
    for (const auto& t : out) seen = seen || t == s;
    if (!seen) out.push_back(s);
  }
  return out;
}

bool classify_component(const SquareMatrix& m, const std::vector<Scalar>& hint_eigs,
                        bool want_elliptic_add, bool want_hyperbolic_add, bool want_elliptic_mult,
                        bool want_hyperbolic_mult, double tol, double* residual) {
  *residual = 0;
  if (m.is_float()) {
    double r = annihilation_residual(m, dedupe(hint_eigs));
    *residual = r;
    double scale = std::pow(1.0 + frobenius_norm(m), hint_eigs.size() + 1);
    return r <= tol * scale;
  }
  ClassificationReport c = m.is_rational() ? classify_operator(m, ModeRequest::Exact)
                                           : classify_with_hints(m, hint_eigs);
  bool ok = true;
  if (want_elliptic_add) ok = ok && c.elliptic_add;
  if (want_hyperbolic_add) ok = ok && c.hyperbolic_add;
  if (want_elliptic_mult) ok = ok && c.elliptic_mult;
  if (want_hyperbolic_mult) ok = ok && c.hyperbolic_mult;
  return ok;
}

bool nilpotency_check(const SquareMatrix& m, double tol, double* residual) {
  *residual = 0;
  if (!m.is_float()) return is_nilpotent(m);
  double r = frobenius_norm(pow(m, m.dim()));
  *residual = r;
  return r <= tol * std::pow(1.0 + frobenius_norm(m), m.dim());
}

std::vector<Scalar> elliptic_add_eigenvalues(const SpectralData& spec) {
  std::vector<Scalar> out;
  for (const auto& pr : spec.pairs) out.push_back(Scalar::i() * pr.im);
  if (!spec.reals.empty() || spec.pairs.empty()) out.push_back(Scalar());
  return out;
}

std::vector<Scalar> hyperbolic_add_eigenvalues(const SpectralData& spec) {
  std::vector<Scalar> out;
  for (const auto& pr : spec.pairs) out.push_back(pr.re);
  for (const auto& rr : spec.reals) out.push_back(rr.lambda);
  return out;
}

}  // namespace

VerificationReport verify_additive(const SquareMatrix& X, const AdditiveDecomposition& d,
                                   double tol) {
  if (d.elliptic.dim() != X.dim() || d.hyperbolic.dim() != X.dim() ||
      d.nilpotent.dim() != X.dim())
    fail(ErrorKind::ShapeError, "decomposition dimension does not match the operator");
  VerificationReport report;
  bool exact = !X.is_float() && !d.elliptic.is_float() && d.source.mode == Mode::Exact;
  // numeric checks run at tol * n * ||X||_F
  double eff = tol * X.dim() * std::max(1.0, frobenius_norm(to_float(X)));

  SquareMatrix sum = d.elliptic + d.hyperbolic + d.nilpotent;
  report.add("sum_reconstruction", same_matrix(sum, X, eff), frobenius_norm(sum - X));

  double cres = std::max({commutator_residual(d.elliptic, d.hyperbolic),
                          commutator_residual(d.elliptic, d.nilpotent),
                          commutator_residual(d.hyperbolic, d.nilpotent)});
  bool commuting = commutes(d.elliptic, d.hyperbolic, eff) &&
                   commutes(d.elliptic, d.nilpotent, eff) &&
                   commutes(d.hyperbolic, d.nilpotent, eff);
  report.add("pairwise_commuting", commuting, cres);

  double r = 0;
  bool ok = classify_component(d.elliptic, elliptic_add_eigenvalues(d.source), true, false, false,
                               false, eff, &r);
  report.add("elliptic_classified", ok, r);
  ok = classify_component(d.hyperbolic, hyperbolic_add_eigenvalues(d.source), false, true, false,
                          false, eff, &r);
  report.add("hyperbolic_classified", ok, r);
  ok = nilpotency_check(d.nilpotent, eff, &r);
  report.add("nilpotent_classified", ok, r);

  if (exact) {
    AdditiveDecomposition de = additive_jordan(d.elliptic, ModeRequest::Exact);
    bool probe_e = de.elliptic == d.elliptic && de.hyperbolic.is_zero() && de.nilpotent.is_zero();
    report.add("probe_elliptic_redecomposition", probe_e);
    AdditiveDecomposition dh = additive_jordan(d.hyperbolic, ModeRequest::Exact);
    bool probe_h = dh.hyperbolic == d.hyperbolic && dh.elliptic.is_zero() && dh.nilpotent.is_zero();
    report.add("probe_hyperbolic_redecomposition", probe_h);
    AdditiveDecomposition dn = additive_jordan(d.nilpotent, ModeRequest::Exact);
    bool probe_n = dn.nilpotent == d.nilpotent && dn.elliptic.is_zero() && dn.hyperbolic.is_zero();
    report.add("probe_nilpotent_redecomposition", probe_n);
    AdditiveDecomposition ds = additive_jordan(d.elliptic + d.hyperbolic, ModeRequest::Exact);
    report.add("probe_semisimple_no_nilpotent", ds.nilpotent.is_zero());
  }
  return report;
}

VerificationReport verify_multiplicative(const SquareMatrix& g,
                                         const MultiplicativeDecomposition& d, double tol) {
  if (d.elliptic.dim() != g.dim() || d.hyperbolic.dim() != g.dim() ||
      d.unipotent.dim() != g.dim())
    fail(ErrorKind::ShapeError, "decomposition dimension does not match the operator");
  VerificationReport report;
  bool exact = !g.is_float() && d.source.mode == Mode::Exact && !d.numeric_fallback;
  // numeric checks run at tol * n * ||g||_F
  double eff = tol * g.dim() * std::max(1.0, frobenius_norm(to_float(g)));

  SquareMatrix prod = d.elliptic * d.hyperbolic * d.unipotent;
  report.add("product_reconstruction", same_matrix(prod, g, eff), frobenius_norm(prod - g));

  double cres = std::max({commutator_residual(d.elliptic, d.hyperbolic),
                          commutator_residual(d.elliptic, d.unipotent),
                          commutator_residual(d.hyperbolic, d.unipotent)});
  bool commuting = commutes(d.elliptic, d.hyperbolic, eff) &&
                   commutes(d.elliptic, d.unipotent, eff) &&
                   commutes(d.hyperbolic, d.unipotent, eff);
  report.add("pairwise_commuting", commuting, cres);

  double r = 0;
  bool ok;
  if (exact) {
    ok = classify_component(d.elliptic, elliptic_mult_eigenvalues(d.source), false, false, true,
                            false, eff, &r);
  } else {
    std::vector<Scalar> eigs;
    for (const auto& pr : d.source.pairs) {
      std::complex<double> lam = pr.lambda.to_complex();
      eigs.push_back(Scalar::from_complex(lam / std::abs(lam)));
    }
    for (const auto& rr : d.source.reals)
      eigs.push_back(Scalar::from_complex(rr.lambda.to_complex().real() >= 0 ? 1.0 : -1.0));
    ok = classify_component(d.elliptic, eigs, false, false, true, false, eff, &r);
  }
  report.add("elliptic_classified", ok, r);

  if (exact) {
    ok = classify_component(d.hyperbolic, hyperbolic_mult_eigenvalues(d.source), false, false,
                            false, true, eff, &r);
  } else {
    std::vector<Scalar> eigs;
    for (const auto& pr : d.source.pairs)
      eigs.push_back(Scalar::from_complex(std::abs(pr.lambda.to_complex())));
    for (const auto& rr : d.source.reals)
      eigs.push_back(Scalar::from_complex(std::abs(rr.lambda.to_complex().real())));
    ok = classify_component(d.hyperbolic, eigs, false, false, false, true, eff, &r);
  }
  report.add("hyperbolic_classified", ok, r);

  ok = nilpotency_check(d.unipotent - SquareMatrix::identity(g.dim()), eff, &r);
  report.add("unipotent_classified", ok, r);

  double exp_res =
      frobenius_norm(to_float(d.hyperbolic) - expm_double(d.log_hyperbolic.dense_double()));
  report.add("exp_log_consistency", exp_res <= tol * g.dim(), exp_res);

  if (exact) {
    std::vector<Scalar> he = elliptic_mult_eigenvalues(d.source);
    SpectralData spec_e = factor_with_hints(minimal_polynomial(d.elliptic), he);
    MultiplicativeDecomposition de = multiplicative_jordan_with_spectrum(d.elliptic, spec_e);
    SquareMatrix id = SquareMatrix::identity(g.dim());
    report.add("probe_elliptic_redecomposition",
               de.elliptic == d.elliptic && de.hyperbolic == id && de.unipotent == id);
    std::vector<Scalar> hh = hyperbolic_mult_eigenvalues(d.source);
    SpectralData spec_h = factor_with_hints(minimal_polynomial(d.hyperbolic), hh);
    MultiplicativeDecomposition dh = multiplicative_jordan_with_spectrum(d.hyperbolic, spec_h);
    report.add("probe_hyperbolic_redecomposition",
               dh.hyperbolic == d.hyperbolic && dh.elliptic == id && dh.unipotent == id);
    SpectralData spec_u = factor_with_hints(minimal_polynomial(d.unipotent), {Scalar(1L)});
    MultiplicativeDecomposition du = multiplicative_jordan_with_spectrum(d.unipotent, spec_u);
    report.add("probe_unipotent_redecomposition",
               du.unipotent == d.unipotent && du.elliptic == id && du.hyperbolic == id);
  }
  return report;
}

}  // namespace jordan
