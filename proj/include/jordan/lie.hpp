#pragma once

#include "jordan/decompose.hpp"
#include "jordan/report.hpp"

namespace jordan {

// Classical linear families over the rationals: sl(n) (trace zero / det one),
// so(p,q) with the diagonal signature form, sp(n) with the standard
// antisymmetric form (n even).
struct LieStructure {
  enum class Family { SL, SO, SP };

  Family family = Family::SL;
  int n = 0;       // matrix size
  int p = 0, q = 0;  // signature for SO
  SquareMatrix form;  // J (SO) or Omega (SP); unused for SL

  static LieStructure sl(int n);
  static LieStructure so(int p, int q);
  static LieStructure sp(int n);

  std::string name() const;
  bool has_form() const { return family != Family::SL; }
};

struct MembershipResult {
  bool member = false;
  double residual = 0.0;
};

// sl: tr X = 0; so/sp: X^T J + J X = 0. Exact for exact entries.
MembershipResult algebra_membership(const SquareMatrix& X, const LieStructure& L,
                                    double tol = 1e-9);
// sl: det g = 1; so/sp: g^T J g = J and det g = 1.
MembershipResult group_membership(const SquareMatrix& g, const LieStructure& L, double tol = 1e-9);

// Matrix of Y -> XY - YX on the standard basis E_rs, row-major. n <= 8.
SquareMatrix ad_operator(const SquareMatrix& X);
// Matrix of Y -> g Y g^{-1}. n <= 8.
SquareMatrix Ad_operator(const SquareMatrix& g);

// Eigenvalue multiset of ad(S) equals all differences of eigenvalues of S
// (characteristic-polynomial multiplicities); elliptic/hyperbolic inherit.
VerificationReport ad_spectrum_check(const SquareMatrix& S, ModeRequest mode = ModeRequest::Auto,
                                     const NumericOptions& opts = {});
// Ratios for Ad(s); a unipotent argument takes the Ad(u)-unipotent path.
VerificationReport Ad_spectrum_check(const SquareMatrix& s, ModeRequest mode = ModeRequest::Auto,
                                     const NumericOptions& opts = {});

// Additive components of a member stay in the algebra, with the trace
// bookkeeping sub-checks on the defining representation.
VerificationReport closure_check_algebra(const SquareMatrix& X, const LieStructure& L,
                                         ModeRequest mode = ModeRequest::Exact, double tol = 1e-9);
// Multiplicative components of a member stay in the group.
VerificationReport closure_check_group(const SquareMatrix& g, const LieStructure& L,
                                       ModeRequest mode = ModeRequest::Exact, double tol = 1e-9);

}  // namespace jordan
