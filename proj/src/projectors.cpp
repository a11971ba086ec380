#include "jordan/projectors.hpp"

#include <algorithm>

namespace jordan {

namespace {

Poly projector_for_root(const Poly& p_min, const Scalar& lambda, int mult) {
  Poly local = pow(from_root(lambda), mult);
  auto [complement, rem] = poly_divmod(p_min, local);
  if (!rem.is_zero()) {
    if (!local.is_float() && !p_min.is_float())
      fail(ErrorKind::Internal, "stored root does not divide the minimal polynomial");
    double rnorm = 0, pnorm = 0;
    for (const auto& c : rem.coeffs()) rnorm = std::max(rnorm, std::abs(c.to_complex()));
    for (const auto& c : p_min.coeffs()) pnorm = std::max(pnorm, std::abs(c.to_complex()));
    if (rnorm > 1e-8 * (1.0 + pnorm))
      fail(ErrorKind::Internal, "numeric local-factor division residual too large");
  }
  Poly cofactor = series_inverse_at(complement, lambda, mult);
  return mod_reduce(cofactor * complement, p_min);
}

}  // namespace

ProjectorSet build_projectors(const SpectralData& spec) {
  ProjectorSet ps;
  ps.source = spec;
  for (const auto& pr : spec.pairs)
    ps.pair_projectors.push_back(projector_for_root(spec.p_min, pr.lambda, pr.mult));
  for (const auto& rr : spec.reals) {
    Poly pi = projector_for_root(spec.p_min, rr.lambda, rr.mult);
    if (spec.mode == Mode::Exact && !pi.is_real())
      fail(ErrorKind::Internal, "real-root projector has non-real coefficients");
    ps.real_projectors.push_back(pi);
  }
  return ps;
}

std::vector<SquareMatrix> evaluate_projectors(const ProjectorSet& ps, const SquareMatrix& T) {
  std::vector<SquareMatrix> out;
  for (const auto& pi : ps.pair_projectors) out.push_back(eval_poly_at_matrix(pi, T));
  for (const auto& pi : ps.pair_projectors)
    out.push_back(eval_poly_at_matrix(conjugate_poly(pi), T));
  for (const auto& pi : ps.real_projectors) out.push_back(eval_poly_at_matrix(pi, T));
  return out;
}

VerificationReport verify_projector_identities(const ProjectorSet& ps, const SquareMatrix& T,
                                               double tol) {
  if (!T.is_float()) {
    Poly p = minimal_polynomial(T);
    if (p != ps.source.p_min)
      fail(ErrorKind::InconsistentInput,
           "projector set was built for a different minimal polynomial");
  }
  int n = T.dim();
  bool exact = ps.source.mode == Mode::Exact && !T.is_float();
  double eff = tol * n;  // residual tolerance scales with the dimension
  auto ok = [&](const SquareMatrix& dev) {
    return exact ? dev.is_zero() : frobenius_norm(dev) <= eff;
  };

  VerificationReport report;
  std::vector<SquareMatrix> evals = evaluate_projectors(ps, T);
  size_t np = ps.pair_projectors.size();

  SquareMatrix sum(n);
  for (const auto& m : evals) sum += m;
  SquareMatrix partition_dev = sum - SquareMatrix::identity(n);
  report.add("partition_of_identity", ok(partition_dev), frobenius_norm(partition_dev));

  bool annihilate = true;
  double residual = 0;
  for (size_t a = 0; a < evals.size(); ++a)
    for (size_t b = 0; b < evals.size(); ++b) {
      if (a == b) continue;
      // conjugate partners at indices k and k+np annihilate as well (Lemma item ii)
      SquareMatrix prod = evals[a] * evals[b];
      annihilate = annihilate && ok(prod);
      residual = std::max(residual, frobenius_norm(prod));
    }
  report.add("pairwise_annihilation", annihilate, residual);

  bool idem = true;
  residual = 0;
  for (const auto& m : evals) {
    SquareMatrix dev = m * m - m;
    idem = idem && ok(dev);
    residual = std::max(residual, frobenius_norm(dev));
  }
  report.add("idempotence", idem, residual);

  bool local = true;
  residual = 0;
  auto check_local = [&](const Scalar& lambda, int mult, const SquareMatrix& proj) {
    SquareMatrix shifted = T - lambda * SquareMatrix::identity(n);
    SquareMatrix dev = pow(shifted, mult) * proj;
    local = local && ok(dev);
    residual = std::max(residual, frobenius_norm(dev));
  };
  for (size_t k = 0; k < np; ++k) {
    check_local(ps.source.pairs[k].lambda, ps.source.pairs[k].mult, evals[k]);
    check_local(ps.source.pairs[k].lambda.conj(), ps.source.pairs[k].mult, evals[k + np]);
  }
  for (size_t k = 0; k < ps.real_projectors.size(); ++k)
    check_local(ps.source.reals[k].lambda, ps.source.reals[k].mult, evals[2 * np + k]);
  report.add("local_nilpotency", local, residual);

  return report;
}

}  // namespace jordan
