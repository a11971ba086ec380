#pragma once

#include "jordan/projectors.hpp"
#include "jordan/report.hpp"

namespace jordan {

// X = elliptic + hyperbolic + nilpotent, all polynomials in X.
struct AdditiveDecomposition {
  SquareMatrix elliptic, hyperbolic, nilpotent;
  Poly witness_elliptic, witness_hyperbolic, witness_nilpotent;
  SpectralData source;
};

// g = elliptic * hyperbolic * unipotent, all polynomials in g. The hyperbolic
// logarithm keeps its spectral form. numeric_fallback marks elliptic and
// hyperbolic parts that had to be rendered numerically because |lambda| does
// not live in the radical-rational ring (nested radical).
struct MultiplicativeDecomposition {
  SquareMatrix elliptic, hyperbolic, unipotent;
  Poly witness_elliptic, witness_hyperbolic, witness_unipotent;
  SpectralLog log_hyperbolic;
  SpectralData source;
  bool numeric_fallback = false;
};

AdditiveDecomposition additive_jordan(const SquareMatrix& X,
                                      ModeRequest mode = ModeRequest::Auto,
                                      const NumericOptions& opts = {});
AdditiveDecomposition additive_jordan_with_spectrum(const SquareMatrix& X,
                                                    const SpectralData& spec);

MultiplicativeDecomposition multiplicative_jordan(const SquareMatrix& g,
                                                  ModeRequest mode = ModeRequest::Auto,
                                                  const NumericOptions& opts = {});
MultiplicativeDecomposition multiplicative_jordan_with_spectrum(const SquareMatrix& g,
                                                                const SpectralData& spec);

VerificationReport verify_additive(const SquareMatrix& X, const AdditiveDecomposition& d,
                                   double tol = 1e-9);
VerificationReport verify_multiplicative(const SquareMatrix& g,
                                         const MultiplicativeDecomposition& d, double tol = 1e-9);

// Candidate eigenvalues of the components, used to re-factor their minimal
// polynomials exactly when their entries leave the rationals.
std::vector<Scalar> elliptic_mult_eigenvalues(const SpectralData& spec);
std::vector<Scalar> hyperbolic_mult_eigenvalues(const SpectralData& spec);

}  // namespace jordan
