// Compares the serial reference kernels with the OpenMP paths: exact rational
// matrix products and the randomized projector-identity corpus.
#include <chrono>
#include <cstdio>

#include "jordan/decompose.hpp"
#include "jordan/parallel.hpp"
#include "jordan/sampling.hpp"

using namespace jordan;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  auto dt = std::chrono::steady_clock::now() - t0;
  return std::chrono::duration_cast<std::chrono::microseconds>(dt).count() / 1000.0;
}

SquareMatrix random_rational(Rng& rng, int n) {
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = Scalar(rng.rat(9, 9));
  return m;
}

void bench_matmul(int n) {
  Rng rng(2024 + n);
  SquareMatrix a = random_rational(rng, n);
  SquareMatrix b = random_rational(rng, n);
  auto t0 = std::chrono::steady_clock::now();
  SquareMatrix rs = mul_serial(a, b);
  double serial = ms_since(t0);
  t0 = std::chrono::steady_clock::now();
  SquareMatrix rp = mul_parallel(a, b);
  double parallel = ms_since(t0);
  std::printf("matmul n=%-3d  serial %8.2f ms  parallel %8.2f ms  speedup %5.2fx  %s\n", n, serial,
              parallel, serial / parallel, rs == rp ? "match" : "MISMATCH");
}

void bench_corpus(int samples) {
  auto run_sample = [](int i) {
    Rng rng(9000 + uint64_t(i));
    SpectralSample s = random_block_spectral(rng, 4 + int(rng.uniform(0, 2)));
    AdditiveDecomposition d = additive_jordan(s.matrix, ModeRequest::Exact);
    ProjectorSet ps = build_projectors(d.source);
    return verify_projector_identities(ps, s.matrix).all_pass();
  };
  std::vector<char> ok(samples, 0);
  auto t0 = std::chrono::steady_clock::now();
  parallel_for(samples, [&](int i) { ok[i] = run_sample(i); }, false);
  double serial = ms_since(t0);
  t0 = std::chrono::steady_clock::now();
  parallel_for(samples, [&](int i) { ok[i] = ok[i] && run_sample(i); }, true);
  double parallel = ms_since(t0);
  bool all = true;
  for (char c : ok) all = all && c;
  std::printf("projector corpus (%d samples)  serial %8.2f ms  parallel %8.2f ms  speedup %5.2fx  %s\n",
              samples, serial, parallel, serial / parallel, all ? "all pass" : "FAILURES");
}

}  // namespace

int main() {
  std::printf("OpenMP %s, %d worker(s)\n", openmp_enabled() ? "enabled" : "disabled",
              worker_count());
  for (int n : {16, 24, 32}) bench_matmul(n);
  bench_corpus(48);
  return 0;
}
