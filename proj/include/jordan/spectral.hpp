#pragma once

#include <vector>

#include "jordan/matrix.hpp"
#include "jordan/poly.hpp"

namespace jordan {

enum class Mode { Exact, Numeric };
enum class ModeRequest { Exact, Numeric, Auto };

const char* mode_name(Mode m);

// One representative per conjugate pair, imaginary part positive.
struct ComplexPair {
  Scalar lambda;
  int mult = 1;
  Scalar re, im;       // lambda = re + im*i, im > 0
  Scalar modulus_sq;   // re^2 + im^2
};

struct RealRoot {
  Scalar lambda;
  int mult = 1;
  Scalar modulus_sq;  // lambda^2
};

struct SpectralData {
  Mode mode = Mode::Exact;
  std::vector<ComplexPair> pairs;
  std::vector<RealRoot> reals;
  Poly p_min;

  int root_degree() const;                            // sum of mult * (pair ? 2 : 1)
  std::vector<std::pair<Scalar, int>> all_roots() const;  // pairs, conjugates, reals
  Poly reconstruct() const;
};

struct NumericOptions {
  double tolerance = 1e-10;
};

// Multiplicities always come from exact squarefree decomposition; roots are
// exact (rational / quadratic-irrational) or numeric per the requested mode.
SpectralData factor_minimal_polynomial(const Poly& p_min, ModeRequest mode,
                                       const NumericOptions& opts = {});

// Split p_min completely using candidate root values (used when decomposing
// matrices over radical entries, where the candidates are known from the
// parent decomposition). Division by each verified root is exact; a candidate
// that is not a root is ignored; an incomplete split is an error.
SpectralData factor_with_hints(const Poly& p_min, const std::vector<Scalar>& hints);

struct ClassificationReport {
  bool semisimple = false;
  bool nilpotent = false;
  bool elliptic_add = false;
  bool hyperbolic_add = false;
  bool elliptic_mult = false;
  bool hyperbolic_mult = false;
  bool unipotent = false;
  Mode mode = Mode::Exact;
  SpectralData spectrum;
};

ClassificationReport classify_spectrum(const SpectralData& s, double tol = 1e-10);
ClassificationReport classify_operator(const SquareMatrix& T, ModeRequest mode = ModeRequest::Auto,
                                       const NumericOptions& opts = {});
// Classification over exact non-rational entries, with candidate eigenvalues.
ClassificationReport classify_with_hints(const SquareMatrix& T, const std::vector<Scalar>& hints);

// Simultaneous (Aberth) iteration on a squarefree polynomial; deterministic
// initial configuration, double precision.
std::vector<std::complex<double>> aberth_roots(const Poly& squarefree, double tol = 1e-13);

}  // namespace jordan
