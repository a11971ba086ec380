#include <doctest.h>

#include "jordan/projectors.hpp"
#include "jordan/sampling.hpp"
#include "test_util.hpp"

using namespace jordan;
using jordan::testutil::mat;
using jordan::testutil::poly;
using jordan::testutil::sc;

namespace {

ProjectorSet example_projectors() {
  return build_projectors(
      factor_minimal_polynomial(jordan::testutil::example_min_poly(), ModeRequest::Exact));
}

}  // namespace

TEST_SUITE("projectors") {
  TEST_CASE("single root gives the constant projector") {
    SpectralData s = factor_minimal_polynomial(poly({"0", "1"}), ModeRequest::Exact);
    ProjectorSet ps = build_projectors(s);
    REQUIRE(ps.real_projectors.size() == 1);
    CHECK(ps.real_projectors[0] == poly({"1"}));
  }

  TEST_CASE("example projectors match the known factored forms") {
    ProjectorSet ps = example_projectors();
    REQUIRE(ps.pair_projectors.size() == 1);
    REQUIRE(ps.real_projectors.size() == 1);
    // (1/4)(x-1+i)(x-2)^2 expanded
    CHECK(ps.pair_projectors[0] == poly({"-1+1i", "2-1i", "-5/4+1/4i", "1/4"}));
    // -(1/2)(x-3)(x^2-2x+2) expanded
    CHECK(ps.real_projectors[0] == poly({"3", "-4", "5/2", "-1/2"}));
    // partition of identity as polynomials mod p_T
    Poly sum = ps.pair_projectors[0] + conjugate_poly(ps.pair_projectors[0]) +
               ps.real_projectors[0];
    CHECK(sum == poly({"1"}));
  }

  TEST_CASE("two simple real roots give the Lagrange pair") {
    Poly p = poly({"-1", "1"}) * poly({"-2", "1"});
    ProjectorSet ps = build_projectors(factor_minimal_polynomial(p, ModeRequest::Exact));
    REQUIRE(ps.real_projectors.size() == 2);
    CHECK(ps.real_projectors[0] == poly({"2", "-1"}));  // -(x-2) for root 1
    CHECK(ps.real_projectors[1] == poly({"-1", "1"}));  // x-1 for root 2
    CHECK(ps.real_projectors[0] + ps.real_projectors[1] == poly({"1"}));
  }

  TEST_CASE("degrees stay below the minimal polynomial") {
    ProjectorSet ps = example_projectors();
    for (const auto& pi : ps.pair_projectors) CHECK(pi.degree() < ps.source.p_min.degree());
    for (const auto& pi : ps.real_projectors) CHECK(pi.degree() < ps.source.p_min.degree());
  }

  TEST_CASE("polynomial-level multiples of the minimal polynomial") {
    ProjectorSet ps = example_projectors();
    const Poly& pm = ps.source.p_min;
    const Poly& pi1 = ps.pair_projectors[0];
    const Poly& pi2 = ps.real_projectors[0];
    CHECK(mod_reduce(pi1 * pi2, pm).is_zero());
    CHECK(mod_reduce(conjugate_poly(pi1) * pi2, pm).is_zero());
    CHECK(mod_reduce(conjugate_poly(pi1) * pi1, pm).is_zero());
    CHECK(mod_reduce(pow(from_root(sc("1+1i")), 1) * pi1, pm).is_zero());
    CHECK(mod_reduce(pow(from_root(Scalar(2)), 2) * pi2, pm).is_zero());
  }

  TEST_CASE("identities hold at the example operator") {
    ProjectorSet ps = example_projectors();
    VerificationReport r = verify_projector_identities(ps, jordan::testutil::example_operator());
    CHECK(r.all_pass());
    REQUIRE(r.checks.size() == 4);
    for (const auto& c : r.checks) CHECK(c.residual == 0.0);
  }

  TEST_CASE("identities hold trivially for the identity matrix") {
    SpectralData s = factor_minimal_polynomial(poly({"-1", "1"}), ModeRequest::Exact);
    ProjectorSet ps = build_projectors(s);
    CHECK(verify_projector_identities(ps, SquareMatrix::identity(4)).all_pass());
  }

  TEST_CASE("scaled projector is caught as a negative control") {
    ProjectorSet ps = example_projectors();
    ps.pair_projectors[0] = Scalar(2) * ps.pair_projectors[0];
    VerificationReport r = verify_projector_identities(ps, jordan::testutil::example_operator());
    CHECK_FALSE(r.all_pass());
    CHECK_FALSE(r.find("partition_of_identity")->pass);
    CHECK(r.find("partition_of_identity")->residual > 0);
    CHECK_FALSE(r.find("idempotence")->pass);
    CHECK(r.find("idempotence")->residual > 0);
  }

  TEST_CASE("mismatched operator is rejected") {
    ProjectorSet ps = example_projectors();
    CHECK_THROWS_AS(verify_projector_identities(ps, SquareMatrix::identity(4)), Error);
  }

  TEST_CASE("any Bezout cofactor family gives the same projectors") {
    // alternate construction: cofactor from the extended euclidean identity
    // s*q + t*(x-lambda)^m = 1, projector = s*q mod p
    ProjectorSet ps = example_projectors();
    const Poly& pm = ps.source.p_min;
    auto alternate = [&](const Scalar& lambda, int mult) {
      Poly local = pow(from_root(lambda), mult);
      Poly q = poly_divmod(pm, local).first;
      auto [g, s, t] = poly_extended_gcd(q, local);
      REQUIRE(g == Poly(Scalar(1L)));
      return mod_reduce(s * q, pm);
    };
    CHECK(alternate(sc("1+1i"), 1) == ps.pair_projectors[0]);
    CHECK(alternate(Scalar(2), 2) == ps.real_projectors[0]);
  }

  TEST_CASE("conjugate symmetry of the pair projectors") {
    ProjectorSet ps = example_projectors();
    const Poly& pm = ps.source.p_min;
    // building for the conjugate root directly equals the coefficient conjugate
    Scalar lam = sc("1-1i");
    Poly local = from_root(lam);
    Poly q = poly_divmod(pm, local).first;
    Poly a = series_inverse_at(q, lam, 1);
    CHECK(mod_reduce(a * q, pm) == conjugate_poly(ps.pair_projectors[0]));
  }

  TEST_CASE("spectral combinations multiply coefficientwise") {
    SquareMatrix t = jordan::testutil::example_operator();
    ProjectorSet ps = example_projectors();
    std::vector<SquareMatrix> evals = evaluate_projectors(ps, t);  // pi1, conj pi1, pi2
    Rng rng(61);
    for (int trial = 0; trial < 20; ++trial) {
      Scalar a1(rng.rat(4, 3)), b1(rng.rat(4, 3)), c1(rng.rat(4, 3));
      Scalar a2(rng.rat(4, 3)), b2(rng.rat(4, 3)), c2(rng.rat(4, 3));
      SquareMatrix m1 = a1 * evals[0] + b1 * evals[1] + c1 * evals[2];
      SquareMatrix m2 = a2 * evals[0] + b2 * evals[1] + c2 * evals[2];
      SquareMatrix expect = (a1 * a2) * evals[0] + (b1 * b2) * evals[1] + (c1 * c2) * evals[2];
      CHECK(m1 * m2 == expect);
    }
  }

  TEST_CASE("ranks of the projector images sum to the dimension") {
    SquareMatrix t = jordan::testutil::example_operator();
    ProjectorSet ps = example_projectors();
    int total = 0;
    for (const auto& m : evaluate_projectors(ps, t)) total += rank(m);
    CHECK(total == t.dim());
    // and on a random conjugated block sample
    Rng rng(67);
    SpectralSample s = random_block_spectral(rng, 5);
    SpectralData spec = factor_minimal_polynomial(minimal_polynomial(s.matrix), ModeRequest::Exact);
    ProjectorSet ps2 = build_projectors(spec);
    total = 0;
    for (const auto& m : evaluate_projectors(ps2, s.matrix)) total += rank(m);
    CHECK(total == s.matrix.dim());
  }

  TEST_CASE("identity suite on a small random corpus") {
    Rng rng(71);
    for (int i = 0; i < 10; ++i) {
      SpectralSample s = random_block_spectral(rng, 2 + int(rng.uniform(0, 4)));
      SpectralData spec =
          factor_minimal_polynomial(minimal_polynomial(s.matrix), ModeRequest::Exact);
      ProjectorSet ps = build_projectors(spec);
      CHECK(verify_projector_identities(ps, s.matrix).all_pass());
    }
  }

  TEST_CASE("numeric-mode identities carry residuals") {
    Poly p = poly({"-2", "0", "0", "1"});  // x^3 - 2
    SpectralData s = factor_minimal_polynomial(p, ModeRequest::Numeric);
    ProjectorSet ps = build_projectors(s);
    // companion matrix of x^3-2
    SquareMatrix c = mat({{"0", "0", "2"}, {"1", "0", "0"}, {"0", "1", "0"}});
    VerificationReport r = verify_projector_identities(ps, c, 1e-9);
    CHECK(r.all_pass());
    bool some_nonzero = false;
    for (const auto& ch : r.checks) some_nonzero = some_nonzero || ch.residual > 0;
    CHECK(some_nonzero);
  }
}
