#include "jordan/sampling.hpp"

namespace jordan {

SquareMatrix random_unimodular(Rng& rng, int n, int shears, long amplitude) {
  if (shears <= 0) shears = 2 * n;
  SquareMatrix m = SquareMatrix::identity(n);
  for (int s = 0; s < shears; ++s) {
    int i = int(rng.uniform(0, n - 1));
    int j = int(rng.uniform(0, n - 1));
    if (i == j) continue;
    long a = rng.uniform(-amplitude, amplitude);
    if (a == 0) continue;
    // row_i += a * row_j
    for (int k = 0; k < n; ++k) m.at(i, k) += Scalar(a) * m.at(j, k);
  }
  return m;
}

namespace {

struct Block {
  SquareMatrix d, e, h, n;
  bool invertible;
};

Block rotation_block(const Rat& a, const Rat& b) {
  Block blk{SquareMatrix(2), SquareMatrix(2), SquareMatrix(2), SquareMatrix(2),
            !(a == 0 && b == 0)};
  blk.d.at(0, 0) = Scalar(a);
  blk.d.at(0, 1) = Scalar(b);
  blk.d.at(1, 0) = Scalar(-b);
  blk.d.at(1, 1) = Scalar(a);
  blk.e.at(0, 1) = Scalar(b);
  blk.e.at(1, 0) = Scalar(-b);
  blk.h.at(0, 0) = Scalar(a);
  blk.h.at(1, 1) = Scalar(a);
  return blk;
}

Block jordan_block(const Rat& lambda, int m) {
  Block blk{SquareMatrix(m), SquareMatrix(m), SquareMatrix(m), SquareMatrix(m), lambda != 0};
  for (int i = 0; i < m; ++i) {
    blk.d.at(i, i) = Scalar(lambda);
    blk.h.at(i, i) = Scalar(lambda);
    if (i + 1 < m) {
      blk.d.at(i, i + 1) = Scalar(1L);
      blk.n.at(i, i + 1) = Scalar(1L);
    }
  }
  return blk;
}

Block rotation_jordan_block(const Rat& a, const Rat& b) {
  Block rot = rotation_block(a, b);
  Block blk{SquareMatrix(4), SquareMatrix(4), SquareMatrix(4), SquareMatrix(4),
            !(a == 0 && b == 0)};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      blk.d.at(i, j) = rot.d.at(i, j);
      blk.d.at(2 + i, 2 + j) = rot.d.at(i, j);
      blk.e.at(i, j) = rot.e.at(i, j);
      blk.e.at(2 + i, 2 + j) = rot.e.at(i, j);
      blk.h.at(i, j) = rot.h.at(i, j);
      blk.h.at(2 + i, 2 + j) = rot.h.at(i, j);
    }
  blk.d.at(0, 2) = blk.d.at(1, 3) = Scalar(1L);
  blk.n.at(0, 2) = blk.n.at(1, 3) = Scalar(1L);
  return blk;
}

void place(SquareMatrix& dst, const SquareMatrix& src, int offset) {
  for (int i = 0; i < src.dim(); ++i)
    for (int j = 0; j < src.dim(); ++j) dst.at(offset + i, offset + j) = src.at(i, j);
}

}  // namespace

SpectralSample random_block_spectral(Rng& rng, int n) {
  SquareMatrix d(n), e(n), h(n), nil(n);
  bool invertible = true;
  int at = 0;
  while (at < n) {
    int room = n - at;
    Block blk = [&]() {
      long kind = rng.uniform(0, 3);
      if (room >= 4 && kind == 3)
        return rotation_jordan_block(rng.rat(2, 2), make_rat(rng.uniform(1, 4), rng.uniform(1, 2)));
      if (room >= 2 && kind >= 2)
        return rotation_block(rng.rat(2, 2), make_rat(rng.uniform(1, 4), rng.uniform(1, 2)));
      if (room >= 2 && kind == 1)
        return jordan_block(rng.rat(3, 2), int(rng.uniform(2, std::min(long(room), 3L))));
      return jordan_block(rng.rat(3, 2), 1);
    }();
    place(d, blk.d, at);
    place(e, blk.e, at);
    place(h, blk.h, at);
    place(nil, blk.n, at);
    invertible = invertible && blk.invertible;
    at += blk.d.dim();
  }
  SquareMatrix p = random_unimodular(rng, n);
  SquareMatrix pi = inverse(p);
  SpectralSample s;
  s.matrix = p * d * pi;
  s.elliptic = p * e * pi;
  s.hyperbolic = p * h * pi;
  s.nilpotent = p * nil * pi;
  s.invertible = invertible;
  return s;
}

SquareMatrix random_semisimple(Rng& rng, int n, bool invertible) {
  SquareMatrix d(n);
  int at = 0;
  while (at < n) {
    int room = n - at;
    if (room >= 2 && rng.coin()) {
      Rat a = rng.rat(2, 2);
      Rat b = make_rat(rng.uniform(1, 3), rng.uniform(1, 2));
      Block blk = rotation_block(a, b);
      place(d, blk.d, at);
      at += 2;
    } else {
      Rat lam = rng.rat(3, 2);
      if (invertible && lam == 0) lam = Rat(1 + long(rng.uniform(0, 2)));
      d.at(at, at) = Scalar(lam);
      at += 1;
    }
  }
  SquareMatrix p = random_unimodular(rng, n);
  return p * d * inverse(p);
}

SquareMatrix algebra_sample(const LieStructure& L, Rng& rng) {
  int n = L.n;
  switch (L.family) {
    case LieStructure::Family::SL: {
      SquareMatrix x(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j || i + 1 < n) x.at(i, j) = Scalar(rng.rat(2, 2));
      Scalar diag_sum;
      for (int i = 0; i + 1 < n; ++i) diag_sum += x.at(i, i);
      x.at(n - 1, n - 1) = -diag_sum;
      return x;
    }
    case LieStructure::Family::SO: {
      SquareMatrix k(n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          Scalar v(rng.rat(2, 2));
          k.at(i, j) = v;
          k.at(j, i) = -v;
        }
      return L.form * k;
    }
    case LieStructure::Family::SP: {
      int half = n / 2;
      SquareMatrix x(n);
      for (int i = 0; i < half; ++i)
        for (int j = 0; j < half; ++j) {
          Scalar a(rng.rat(2, 2));
          x.at(i, j) = a;
          x.at(half + j, half + i) = -a;
        }
      for (int i = 0; i < half; ++i)
        for (int j = i; j < half; ++j) {
          Scalar b(rng.rat(2, 2));
          x.at(i, half + j) = b;
          x.at(j, half + i) = b;
          Scalar c(rng.rat(2, 2));
          x.at(half + i, j) = c;
          x.at(half + j, i) = c;
        }
      return x;
    }
  }
  fail(ErrorKind::Internal, "unknown family");
}

namespace {

bool tower_exact(const SquareMatrix& m) {
  try {
    factor_minimal_polynomial(minimal_polynomial(m), ModeRequest::Exact);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ExactModeUnavailable) return false;
    throw;
  }
}

}  // namespace

SquareMatrix algebra_sample_exact(const LieStructure& L, Rng& rng, int max_tries, int* tries) {
  for (int t = 1; t <= max_tries; ++t) {
    SquareMatrix x = algebra_sample(L, rng);
    if (tower_exact(x)) {
      if (tries) *tries = t;
      return x;
    }
  }
  fail(ErrorKind::ExactModeUnavailable,
       "no tower-exact sample of " + L.name() + " found in the attempt budget");
}

SquareMatrix group_sample(const LieStructure& L, Rng& rng, int factors) {
  int n = L.n;
  SquareMatrix g = SquareMatrix::identity(n);
  for (int f = 0; f < factors; ++f) {
    switch (L.family) {
      case LieStructure::Family::SL: {
        int i = int(rng.uniform(0, n - 1)), j = int(rng.uniform(0, n - 1));
        if (i == j) j = (j + 1) % n;
        SquareMatrix t = SquareMatrix::identity(n);
        t.at(i, j) = Scalar(rng.rat(2, 2));
        g = g * t;
        break;
      }
      case LieStructure::Family::SP: {
        // symplectic transvection I + a v v^T Omega
        std::vector<Scalar> v(n);
        for (auto& x : v) x = Scalar(rng.uniform(-1, 1));
        bool all_zero = true;
        for (const auto& x : v) all_zero = all_zero && x.is_zero();
        if (all_zero) v[0] = Scalar(1L);
        Scalar a(rng.rat(2, 2));
        SquareMatrix t = SquareMatrix::identity(n);
        std::vector<Scalar> omega_v(n);
        for (int r = 0; r < n; ++r) {
          Scalar acc;
          for (int c = 0; c < n; ++c) acc += L.form.at(c, r) * v[c];  // (v^T Omega)_r
          omega_v[r] = acc;
        }
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < n; ++c) t.at(r, c) += a * v[r] * omega_v[c];
        g = g * t;
        break;
      }
      case LieStructure::Family::SO: {
        int i = int(rng.uniform(0, n - 1)), j = int(rng.uniform(0, n - 1));
        if (i == j) j = (j + 1) % n;
        if (i > j) std::swap(i, j);
        bool same_sign = (i < L.p) == (j < L.p);
        SquareMatrix t = SquareMatrix::identity(n);
        if (same_sign) {
          long m = rng.uniform(1, 4), k = rng.uniform(0, 3);
          Rat c = make_rat(m * m - k * k, m * m + k * k);
          Rat s = make_rat(2 * m * k, m * m + k * k);
          t.at(i, i) = Scalar(c);
          t.at(j, j) = Scalar(c);
          t.at(i, j) = Scalar(s);
          t.at(j, i) = Scalar(-s);
        } else {
          Rat tt = make_rat(rng.uniform(1, 4), rng.uniform(1, 3));
          Rat ch = (tt + 1 / tt) / 2;
          Rat sh = (tt - 1 / tt) / 2;
          t.at(i, i) = Scalar(ch);
          t.at(j, j) = Scalar(ch);
          t.at(i, j) = Scalar(sh);
          t.at(j, i) = Scalar(sh);
        }
        g = g * t;
        break;
      }
    }
  }
  return g;
}

SquareMatrix group_sample_exact(const LieStructure& L, Rng& rng, int factors, int max_tries,
                                int* tries) {
  for (int t = 1; t <= max_tries; ++t) {
    SquareMatrix g = group_sample(L, rng, factors);
    if (tower_exact(g)) {
      if (tries) *tries = t;
      return g;
    }
  }
  fail(ErrorKind::ExactModeUnavailable,
       "no tower-exact sample of the group of " + L.name() + " found in the attempt budget");
}

}  // namespace jordan
