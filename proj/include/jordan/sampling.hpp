#pragma once

#include <cstdint>

#include "jordan/lie.hpp"

namespace jordan {

// splitmix64; deterministic across platforms, one instance per sample
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long uniform(long lo, long hi) {  // inclusive bounds
    return lo + long(next() % uint64_t(hi - lo + 1));
  }
  Rat rat(long max_abs_num, long max_den) {
    long num = uniform(-max_abs_num, max_abs_num);
    long den = uniform(1, max_den);
    return make_rat(num, den);
  }
  bool coin() { return next() & 1; }
};

// Product of integer shears I + a E_ij; determinant +1, exact rational
// inverse. Unit amplitude keeps the conjugated entries at desk scale so the
// dense-double comparisons stay far from their tolerances.
SquareMatrix random_unimodular(Rng& rng, int n, int shears = 0, long amplitude = 1);

// Conjugated block spectral form with the directly constructed components.
struct SpectralSample {
  SquareMatrix matrix;
  SquareMatrix elliptic, hyperbolic, nilpotent;  // oracle components
  bool invertible = false;
};
SpectralSample random_block_spectral(Rng& rng, int n);

// Semisimple with tower-exact spectrum (block diagonal of rotation blocks and
// distinct scalars, conjugated); optionally with all eigenvalues nonzero.
SquareMatrix random_semisimple(Rng& rng, int n, bool invertible);

// Generic member of the algebra.
SquareMatrix algebra_sample(const LieStructure& L, Rng& rng);
// Rejection-sampled member whose spectrum splits in the scalar tower.
SquareMatrix algebra_sample_exact(const LieStructure& L, Rng& rng, int max_tries = 500,
                                  int* tries = nullptr);

// Identity-component member from rational one-parameter generators
// (shears / symplectic transvections / Givens + hyperbolic rotations).
SquareMatrix group_sample(const LieStructure& L, Rng& rng, int factors = 4);
SquareMatrix group_sample_exact(const LieStructure& L, Rng& rng, int factors = 4,
                                int max_tries = 500, int* tries = nullptr);

}  // namespace jordan
