// Acceptance suite: prints one pass/fail line per criterion and exits with
// the number of failed criteria.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "jordan/cli.hpp"
#include "jordan/parallel.hpp"
#include "jordan/sampling.hpp"
#include "test_util.hpp"

using namespace jordan;
using jordan::testutil::mat;
using jordan::testutil::poly;
using jordan::testutil::sc;

namespace {

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() -
                                                                 t0)
               .count() /
           1e6;
  }
};

void report(int id, const std::string& label, bool pass, double secs, const std::string& note) {
  std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n", pass ? "PASS" : "FAIL", id, label.c_str(),
              secs, note.empty() ? "" : " — ", note.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

// ------------------------------------------------------------------ 1

void criterion_1() {
  Timer timer;
  bool ok = true;
  std::string note;
  try {
    SquareMatrix t = jordan::testutil::example_operator();
    Poly pm = minimal_polynomial(t);
    ok = ok && pm == poly({"8", "-16", "14", "-6", "1"});

    SpectralData spec = factor_minimal_polynomial(pm, ModeRequest::Exact);
    ProjectorSet ps = build_projectors(spec);
    ok = ok && ps.pair_projectors.size() == 1 && ps.real_projectors.size() == 1;
    // pi_1 = (1/4)(x-1+i)(x-2)^2, pi_2 = -(1/2)(x-3)(x^2-2x+2)
    ok = ok && ps.pair_projectors[0] == poly({"-1+1i", "2-1i", "-5/4+1/4i", "1/4"});
    ok = ok && ps.real_projectors[0] == poly({"3", "-4", "5/2", "-1/2"});

    AdditiveDecomposition da = additive_jordan(t, ModeRequest::Exact);
    ok = ok && da.witness_elliptic == poly({"-2", "2", "-1/2"});
    ok = ok && da.witness_hyperbolic == poly({"4", "-4", "5/2", "-1/2"});

    MultiplicativeDecomposition dm = multiplicative_jordan(t, ModeRequest::Exact);
    ok = ok && dm.witness_unipotent == poly({"0", "3/2", "-1", "1/4"});
    ok = ok &&
         dm.witness_elliptic ==
             poly({"3-2*sqrt(2)", "-4+3*sqrt(2)", "5/2-3/2*sqrt(2)", "-1/2+1/4*sqrt(2)"});
    ok = ok &&
         dm.witness_hyperbolic ==
             poly({"6-2*sqrt(2)", "-8+4*sqrt(2)", "5-5/2*sqrt(2)", "-1+1/2*sqrt(2)"});
    // numeric rendering within 1e-12 of the radical forms
    for (int k = 0; k <= 3; ++k) {
      double want = dm.witness_elliptic.coeff(k).to_complex().real();
      double got = to_float(dm.witness_elliptic).coeff(k).to_complex().real();
      ok = ok && std::abs(want - got) <= 1e-12;
    }
  } catch (const std::exception& e) {
    ok = false;
    note = e.what();
  }
  double secs = timer.seconds();
  if (secs >= 1.0) {
    ok = false;
    note += " (runtime budget 1 s exceeded)";
  }
  report(1, "worked-example golden values, exact mode", ok, secs, note);
}

// ------------------------------------------------------------- 2..5

struct CorpusResult {
  bool projector_ok = false;
  bool oracle_ok = false;
  bool additive_probes_ok = false;
  bool invertible = false;
  bool mult_probes_ok = true;
  bool reconstruction_ok = true;
  bool explog_ok = true;
  std::string error;
};

std::vector<CorpusResult> run_corpus(int count) {
  std::vector<CorpusResult> results(count);
  parallel_for(count, [&](int i) {
    CorpusResult& res = results[i];
    try {
      Rng rng(7000 + uint64_t(i));
      int n = 2 + int(rng.uniform(0, 4));  // n <= 6
      SpectralSample s = random_block_spectral(rng, n);
      AdditiveDecomposition d = additive_jordan(s.matrix, ModeRequest::Exact);

      ProjectorSet ps = build_projectors(d.source);
      res.projector_ok = verify_projector_identities(ps, s.matrix).all_pass();

      res.oracle_ok = d.elliptic == s.elliptic && d.hyperbolic == s.hyperbolic &&
                      d.nilpotent == s.nilpotent;

      VerificationReport va = verify_additive(s.matrix, d);
      res.additive_probes_ok = va.find("probe_elliptic_redecomposition")->pass &&
                               va.find("probe_hyperbolic_redecomposition")->pass &&
                               va.find("probe_nilpotent_redecomposition")->pass &&
                               va.find("probe_semisimple_no_nilpotent")->pass;

      res.invertible = s.invertible;
      if (s.invertible) {
        MultiplicativeDecomposition m = multiplicative_jordan(s.matrix, ModeRequest::Exact);
        res.reconstruction_ok =
            !m.numeric_fallback && m.elliptic * m.hyperbolic * m.unipotent == s.matrix;
        double exp_res = frobenius_norm(to_float(m.hyperbolic) -
                                        expm_double(m.log_hyperbolic.dense_double()));
        res.explog_ok = exp_res <= 1e-9 * n;
        VerificationReport vm = verify_multiplicative(s.matrix, m);
        res.mult_probes_ok = vm.find("probe_elliptic_redecomposition")->pass &&
                             vm.find("probe_hyperbolic_redecomposition")->pass &&
                             vm.find("probe_unipotent_redecomposition")->pass;
      }
    } catch (const std::exception& e) {
      res.error = e.what();
      res.projector_ok = res.oracle_ok = res.additive_probes_ok = false;
      res.mult_probes_ok = res.reconstruction_ok = res.explog_ok = false;
    }
  });
  return results;
}

void criteria_2_to_5() {
  constexpr int kCount = 200;
  Timer timer;
  std::vector<CorpusResult> results = run_corpus(kCount);
  double corpus_secs = timer.seconds();

  int bad_projector = 0, bad_oracle = 0, bad_probe = 0, bad_recon = 0, invertible = 0;
  std::string first_error;
  for (const auto& r : results) {
    bad_projector += r.projector_ok ? 0 : 1;
    bad_oracle += r.oracle_ok ? 0 : 1;
    bad_probe += (r.additive_probes_ok && r.mult_probes_ok) ? 0 : 1;
    bad_recon += (r.reconstruction_ok && r.explog_ok) ? 0 : 1;
    invertible += r.invertible ? 1 : 0;
    if (first_error.empty() && !r.error.empty()) first_error = r.error;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d samples, %d invertible%s%s", kCount, invertible,
                first_error.empty() ? "" : ", first error: ", first_error.c_str());
  bool budget_ok = corpus_secs < 60.0;
  report(2, "projector identity suite on 200 random conjugated block forms",
         bad_projector == 0 && budget_ok, corpus_secs,
         budget_ok ? buf : "runtime budget 60 s exceeded");
  report(3, "oracle equivalence of additive components", bad_oracle == 0, corpus_secs, buf);
  report(4, "uniqueness probes: components re-decompose trivially", bad_probe == 0, corpus_secs,
         buf);
  report(5, "multiplicative reconstruction and exp(log h) agreement", bad_recon == 0, corpus_secs,
         buf);
}

// ------------------------------------------------------------------ 6

void criterion_6() {
  constexpr int kCount = 50;
  Timer timer;
  std::vector<char> ok(kCount, 0);
  std::vector<std::string> errors(kCount);
  parallel_for(kCount, [&](int i) {
    try {
      Rng rng(8600 + uint64_t(i));
      int n = 2 + int(rng.uniform(0, 2));  // n <= 4
      SquareMatrix s = random_semisimple(rng, n, true);
      bool pass = ad_spectrum_check(s, ModeRequest::Exact).all_pass();
      pass = pass && Ad_spectrum_check(s, ModeRequest::Exact).all_pass();
      ok[i] = pass;
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });
  int bad = 0;
  std::string note;
  for (int i = 0; i < kCount; ++i) {
    if (!ok[i]) ++bad;
    if (note.empty() && !errors[i].empty()) note = errors[i];
  }
  report(6, "ad and Ad spectrum relations on 50 random semisimple operators", bad == 0,
         timer.seconds(), note);
}

// ------------------------------------------------------------------ 7

void criterion_7() {
  Timer timer;
  int bad = 0;
  long attempts = 0;
  std::string note;
  for (const LieStructure& L :
       {LieStructure::sl(3), LieStructure::so(2, 1), LieStructure::sp(4)}) {
    constexpr int kCount = 100;
    std::vector<char> ok(kCount, 0);
    std::vector<int> tries(kCount, 0);
    std::vector<std::string> errors(kCount);
    parallel_for(kCount, [&](int i) {
      try {
        Rng rng(1000u * unsigned(L.family) + 9200 + uint64_t(i));
        SquareMatrix x = algebra_sample_exact(L, rng, 500, &tries[i]);
        ok[i] = closure_check_algebra(x, L, ModeRequest::Exact).all_pass();
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    });
    for (int i = 0; i < kCount; ++i) {
      if (!ok[i]) ++bad;
      attempts += tries[i];
      if (note.empty() && !errors[i].empty()) note = L.name() + ": " + errors[i];
    }
  }
  double secs = timer.seconds();
  bool budget_ok = secs < 120.0;
  if (note.empty()) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "300 members, %ld rejection draws total", attempts);
    note = buf;
  }
  report(7, "algebra closure: sl(3), so(2,1), sp(4), 100 members each", bad == 0 && budget_ok,
         secs, budget_ok ? note : "runtime budget 120 s exceeded");
}

// ------------------------------------------------------------------ 8

void criterion_8() {
  Timer timer;
  int bad = 0;
  std::string note;
  for (const LieStructure& L :
       {LieStructure::sl(2), LieStructure::sp(4), LieStructure::so(2, 1)}) {
    constexpr int kCount = 100;
    std::vector<char> ok(kCount, 0);
    std::vector<std::string> errors(kCount);
    parallel_for(kCount, [&](int i) {
      try {
        Rng rng(1000u * unsigned(L.family) + 15300 + uint64_t(i));
        SquareMatrix g = group_sample_exact(L, rng, 4, 500, nullptr);
        ok[i] = closure_check_group(g, L, ModeRequest::Exact).all_pass();
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    });
    for (int i = 0; i < kCount; ++i) {
      if (!ok[i]) ++bad;
      if (note.empty() && !errors[i].empty()) note = L.name() + ": " + errors[i];
    }
  }
  report(8, "group closure: SL(2), Sp(4), SO(2,1)+, 100 identity-component elements each",
         bad == 0, timer.seconds(), note);
}

// ------------------------------------------------------------------ 9

void criterion_9() {
  Timer timer;
  bool ok = true;
  std::string note;
  try {
    // (a) deliberately scaled projector: idempotence and partition fail
    SquareMatrix t = jordan::testutil::example_operator();
    SpectralData spec = factor_minimal_polynomial(minimal_polynomial(t), ModeRequest::Exact);
    ProjectorSet ps = build_projectors(spec);
    ps.pair_projectors[0] = Scalar(2) * ps.pair_projectors[0];
    VerificationReport pv = verify_projector_identities(ps, t);
    bool control_a = !pv.find("idempotence")->pass && !pv.find("partition_of_identity")->pass &&
                     pv.find("idempotence")->residual > 0 &&
                     pv.find("partition_of_identity")->residual > 0;
    if (!control_a) note += "[scaled projector not caught] ";

    // (b) swapped elliptic/hyperbolic components: classification fails
    AdditiveDecomposition d = additive_jordan(t, ModeRequest::Exact);
    std::swap(d.elliptic, d.hyperbolic);
    VerificationReport av = verify_additive(t, d);
    bool control_b = !av.find("elliptic_classified")->pass &&
                     !av.find("hyperbolic_classified")->pass;
    if (!control_b) note += "[swapped components not caught] ";

    // (c) singular multiplicative request: exit code 3
    nlohmann::json j{
        {"operation", "multiplicative"},
        {"matrix", nlohmann::json::parse(R"({"n":2,"entries":[["0","0"],["0","0"]]})")}};
    cli::TaskOutcome out = cli::run_request(cli::parse_request(j));
    bool control_c = out.exit_code == cli::kSingular;
    if (!control_c) note += "[singular request exit code wrong] ";

    ok = control_a && control_b && control_c;
  } catch (const std::exception& e) {
    ok = false;
    note = e.what();
  }
  report(9, "negative controls produce the specified failures", ok, timer.seconds(), note);
}

}  // namespace

int main() {
  std::printf("acceptance suite (OpenMP %s, %d workers)\n", openmp_enabled() ? "on" : "off",
              worker_count());
  criterion_1();
  criteria_2_to_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "OK" : "FAILED", failures);
  return failures;
}
