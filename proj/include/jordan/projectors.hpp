#pragma once

#include "jordan/report.hpp"
#include "jordan/spectral.hpp"

namespace jordan {

// Spectral projector polynomials, one per stored root, reduced mod p_min.
// pair_projectors[k] belongs to source.pairs[k] (positive-imaginary
// representative; the conjugate projector is its coefficient conjugate),
// real_projectors[k] to source.reals[k].
struct ProjectorSet {
  std::vector<Poly> pair_projectors;
  std::vector<Poly> real_projectors;
  SpectralData source;
};

ProjectorSet build_projectors(const SpectralData& spec);

// Lemma identities evaluated at T: partition of identity, pairwise
// annihilation (conjugates included), idempotence, local nilpotency
// (T - lambda)^mult * projector(T) = 0.
VerificationReport verify_projector_identities(const ProjectorSet& ps, const SquareMatrix& T,
                                               double tol = 1e-9);

// All projector evaluations at T: pairs first (same order), then conjugates,
// then real roots.
std::vector<SquareMatrix> evaluate_projectors(const ProjectorSet& ps, const SquareMatrix& T);

}  // namespace jordan
