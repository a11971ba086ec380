#include "jordan/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace jordan {

const char* mode_name(Mode m) { return m == Mode::Exact ? "exact" : "numeric"; }

int SpectralData::root_degree() const {
  int d = 0;
  for (const auto& p : pairs) d += 2 * p.mult;
  for (const auto& r : reals) d += r.mult;
  return d;
}

std::vector<std::pair<Scalar, int>> SpectralData::all_roots() const {
  std::vector<std::pair<Scalar, int>> out;
  for (const auto& p : pairs) {
    out.emplace_back(p.lambda, p.mult);
    out.emplace_back(p.lambda.conj(), p.mult);
  }
  for (const auto& r : reals) out.emplace_back(r.lambda, r.mult);
  return out;
}

Poly SpectralData::reconstruct() const {
  Poly acc(Scalar(1L));
  for (const auto& p : pairs) {
    Poly quad = from_root(p.lambda) * from_root(p.lambda.conj());
    acc *= pow(quad, p.mult);
  }
  for (const auto& r : reals) acc *= pow(from_root(r.lambda), r.mult);
  return acc;
}

// ----------------------------------------------------------- numeric roots

std::vector<std::complex<double>> aberth_roots(const Poly& f, double tol) {
  using C = std::complex<double>;
  int n = f.degree();
  if (n <= 0) return {};
  std::vector<C> c(n + 1);
  for (int i = 0; i <= n; ++i) c[i] = f.coeff(i).to_complex();
  for (int i = 0; i <= n; ++i) c[i] /= f.coeff(n).to_complex();
  double bound = 0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[i]));
  double radius = 1.0 + bound;
  std::vector<C> z(n);
  for (int k = 0; k < n; ++k) {
    double angle = 2.0 * M_PI * k / n + 0.41;
    z[k] = radius * C(std::cos(angle), std::sin(angle));
  }
  auto eval = [&](C x, C& p, C& dp) {
    p = c[n];
    dp = 0;
    for (int i = n - 1; i >= 0; --i) {
      dp = dp * x + p;
      p = p * x + c[i];
    }
  };
  for (int iter = 0; iter < 400; ++iter) {
    double worst = 0;
    for (int k = 0; k < n; ++k) {
      C p, dp;
      eval(z[k], p, dp);
      if (std::abs(p) == 0.0) continue;
      C newton = dp == C(0) ? C(0) : p / dp;
      C sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) sum += 1.0 / (z[k] - z[j]);
      C denom = 1.0 - newton * sum;
      C w = denom == C(0) ? newton : newton / denom;
      z[k] -= w;
      worst = std::max(worst, std::abs(w) / (1.0 + std::abs(z[k])));
    }
    if (worst < tol) break;
  }
  // Newton polish
  for (int k = 0; k < n; ++k)
    for (int it = 0; it < 3; ++it) {
      C p, dp;
      eval(z[k], p, dp);
      if (dp == C(0)) break;
      z[k] -= p / dp;
    }
  return z;
}

namespace {

double coeff_norm(const Poly& f) {
  double s = 0;
  for (const auto& c : f.coeffs()) s += std::norm(c.to_complex());
  return std::sqrt(s);
}

// Continued-fraction rational reconstruction of a double, bounded denominator.
bool rational_reconstruct(double x, Rat& out, double max_den = 1e9) {
  if (!std::isfinite(x)) return false;
  double a = x;
  Int h_prev2 = 0, h_prev1 = 1;  // numerators
  Int k_prev2 = 1, k_prev1 = 0;  // denominators
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(a);
    if (std::abs(fl) > 1e17) return false;
    Int ai(static_cast<long>(fl));
    Int h = ai * h_prev1 + h_prev2;
    Int k = ai * k_prev1 + k_prev2;
    if (k == 0 || k.get_d() > max_den) return false;
    Rat approx = make_rat(h, k);
    if (std::abs(approx.get_d() - x) < 1e-11 * (1.0 + std::abs(x))) {
      out = approx;
      return true;
    }
    h_prev2 = h_prev1;
    h_prev1 = h;
    k_prev2 = k_prev1;
    k_prev1 = k;
    double frac = a - fl;
    if (std::abs(frac) < 1e-14) return false;
    a = 1.0 / frac;
  }
  return false;
}

struct RootAccumulator {
  std::vector<ComplexPair> pairs;
  std::vector<RealRoot> reals;

  void add_real(const Scalar& lambda, int mult) {
    reals.push_back({lambda, mult, lambda * lambda});
  }
  void add_pair(const Scalar& re, const Scalar& im, int mult) {
    pairs.push_back({Scalar(re) + Scalar::i() * im, mult, re, im, re * re + im * im});
  }
};

// Exact roots of a monic rational quadratic; always splits in the tower.
void split_quadratic(const Poly& f, int mult, RootAccumulator& acc) {
  Rat b = f.coeff(1).as_rational();
  Rat c = f.coeff(0).as_rational();
  Rat disc = b * b - 4 * c;
  if (disc == 0) fail(ErrorKind::Internal, "repeated root escaped squarefree decomposition");
  if (disc > 0) {
    Radical s = Radical::sqrt_rational(disc);
    Radical half_b = Radical(b) * Radical(make_rat(1, 2));
    Radical half_s = s * Radical(make_rat(1, 2));
    acc.add_real(Scalar(-half_b + half_s), mult);
    acc.add_real(Scalar(-half_b - half_s), mult);
  } else {
    Radical s = Radical::sqrt_rational(-disc);
    Scalar re(Radical(b) * Radical(make_rat(-1, 2)));
    Scalar im(s * Radical(make_rat(1, 2)));
    acc.add_pair(re, im, mult);
  }
}

// Exact splitting of one squarefree rational factor; numeric roots guide the
// search, every extracted factor is verified by exact division.
bool split_exact(Poly f, int mult, RootAccumulator& acc, std::string& blocker) {
  f = f.monic();
  while (f.degree() >= 1) {
    if (f.degree() == 1) {
      acc.add_real(Scalar(-f.coeff(0).as_rational()), mult);
      return true;
    }
    if (f.degree() == 2) {
      split_quadratic(f, mult, acc);
      return true;
    }
    auto roots = aberth_roots(f);
    double imag_tol = 1e-8 * (1.0 + coeff_norm(f));
    bool progress = false;
    // rational real roots first
    for (const auto& z : roots) {
      if (std::abs(z.imag()) > imag_tol) continue;
      Rat guess;
      if (!rational_reconstruct(z.real(), guess)) continue;
      Poly lin = from_root(Scalar(guess));
      auto [q, r] = poly_divmod(f, lin);
      if (r.is_zero()) {
        acc.add_real(Scalar(guess), mult);
        f = q;
        progress = true;
        break;
      }
    }
    if (progress) continue;
    // rational quadratic factors: conjugate pairs, then real-root pairs
    std::vector<std::pair<Rat, Rat>> candidates;  // (sum, product) of the two roots
    for (const auto& z : roots) {
      if (z.imag() <= imag_tol) continue;
      Rat s, p;
      if (rational_reconstruct(2.0 * z.real(), s) && rational_reconstruct(std::norm(z), p))
        candidates.emplace_back(s, p);
    }
    std::vector<std::complex<double>> real_roots;
    for (const auto& z : roots)
      if (std::abs(z.imag()) <= imag_tol) real_roots.push_back(z);
    for (size_t i = 0; i < real_roots.size(); ++i)
      for (size_t j = i + 1; j < real_roots.size(); ++j) {
        Rat s, p;
        if (rational_reconstruct(real_roots[i].real() + real_roots[j].real(), s) &&
            rational_reconstruct(real_roots[i].real() * real_roots[j].real(), p))
          candidates.emplace_back(s, p);
      }
    for (const auto& [s, p] : candidates) {
      Poly quad({Scalar(p), Scalar(-s), Scalar(1L)});
      auto [q, r] = poly_divmod(f, quad);
      if (r.is_zero()) {
        split_quadratic(quad, mult, acc);
        f = q;
        progress = true;
        break;
      }
    }
    if (!progress) {
      blocker = f.str();
      return false;
    }
  }
  return true;
}

void split_numeric(const Poly& f, int mult, RootAccumulator& acc, const NumericOptions& opts) {
  auto roots = aberth_roots(f);
  double norm = coeff_norm(f);
  Poly ff = to_float(f);
  Poly dff = ff.derivative();
  for (const auto& z : roots) {
    Scalar zs = Scalar::from_complex(z);
    std::complex<double> p = ff.eval(zs).to_complex();
    if (std::abs(p) > 1e-12 * std::max(1.0, norm))
      fail(ErrorKind::ClusterAmbiguity,
           "numeric root residual " + std::to_string(std::abs(p)) + " too large for " + f.str());
    // first-order error bound: roots with small |f'| cannot be certified
    double scale = 0, zp = 1;
    for (int k = 0; k <= f.degree(); ++k) {
      scale += std::abs(f.coeff(k).to_complex()) * zp;
      zp *= std::abs(z);
    }
    double dp = std::abs(dff.eval(zs).to_complex());
    double err = (f.degree() + 1) * 2.3e-16 * scale / std::max(dp, 1e-300);
    // tolerances below double-precision reach are judged by the later
    // matrix-level residual checks instead
    if (err > std::max(opts.tolerance, 1e-13))
      fail(ErrorKind::ClusterAmbiguity,
           "root near " + zs.str() + " of " + f.str() + " cannot be certified to tolerance");
  }
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      if (std::abs(roots[i] - roots[j]) <= 10 * opts.tolerance)
        fail(ErrorKind::ClusterAmbiguity, "numeric roots closer than 10x tolerance in " + f.str());
  double imag_tol = opts.tolerance * (1.0 + norm);
  std::vector<bool> used(roots.size(), false);
  for (size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    if (std::abs(roots[i].imag()) <= imag_tol) {
      used[i] = true;
      Scalar lam = Scalar::from_complex(roots[i].real());
      acc.reals.push_back({lam, mult, lam * lam});
      continue;
    }
    // reflection matching: the unused root closest to the conjugate
    size_t best = i;
    double best_d = 1e300;
    for (size_t j = 0; j < roots.size(); ++j) {
      if (j == i || used[j]) continue;
      double d = std::abs(roots[j] - std::conj(roots[i]));
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    if (best == i || best_d > 1e-6 * (1.0 + std::abs(roots[i])))
      fail(ErrorKind::ClusterAmbiguity, "conjugate pairing failed in " + f.str());
    used[i] = used[best] = true;
    // average the pair for a reflection-symmetric representative, im > 0
    double re = 0.5 * (roots[i].real() + roots[best].real());
    double im = std::abs(0.5 * (roots[i].imag() - roots[best].imag()));
    Scalar lam = Scalar::from_complex({re, im});
    acc.pairs.push_back({lam, mult, Scalar::from_complex(re), Scalar::from_complex(im),
                         Scalar::from_complex(re * re + im * im)});
  }
}

SpectralData assemble(RootAccumulator&& acc, Mode mode, const Poly& p_min) {
  std::sort(acc.pairs.begin(), acc.pairs.end(), [](const ComplexPair& a, const ComplexPair& b) {
    int c = Scalar::compare_canonical(a.re, b.re);
    if (c != 0) return c < 0;
    return Scalar::compare_canonical(a.im, b.im) < 0;
  });
  std::sort(acc.reals.begin(), acc.reals.end(), [](const RealRoot& a, const RealRoot& b) {
    return Scalar::compare_canonical(a.lambda, b.lambda) < 0;
  });
  SpectralData out;
  out.mode = mode;
  out.pairs = std::move(acc.pairs);
  out.reals = std::move(acc.reals);
  out.p_min = p_min;
  if (out.root_degree() != p_min.degree())
    fail(ErrorKind::Internal, "root multiplicities do not sum to the polynomial degree");
  return out;
}

}  // namespace

SpectralData factor_minimal_polynomial(const Poly& p_min, ModeRequest mode,
                                       const NumericOptions& opts) {
  if (p_min.degree() < 1) fail(ErrorKind::DegenerateInput, "cannot factor a constant polynomial");
  if (!p_min.is_rational())
    fail(ErrorKind::DegenerateInput, "factorization expects rational coefficients");
  auto squarefree = squarefree_decomposition(p_min);
  if (mode != ModeRequest::Numeric) {
    RootAccumulator acc;
    std::string blocker;
    bool ok = true;
    for (const auto& [f, m] : squarefree)
      if (!split_exact(f, m, acc, blocker)) {
        ok = false;
        break;
      }
    if (ok) return assemble(std::move(acc), Mode::Exact, p_min);
    if (mode == ModeRequest::Exact)
      fail(ErrorKind::ExactModeUnavailable,
           "irreducible factor of degree >= 3 over the rationals: " + blocker);
  }
  RootAccumulator acc;
  for (const auto& [f, m] : squarefree) split_numeric(f, m, acc, opts);
  return assemble(std::move(acc), Mode::Numeric, p_min);
}

SpectralData factor_with_hints(const Poly& p_min, const std::vector<Scalar>& hints) {
  if (p_min.degree() < 1) fail(ErrorKind::DegenerateInput, "cannot factor a constant polynomial");
  if (p_min.is_float()) fail(ErrorKind::DegenerateInput, "hint factorization is exact-only");
  Poly remaining = p_min.monic();
  RootAccumulator acc;
  std::vector<Scalar> seen;
  for (const Scalar& hint : hints) {
    Scalar h = hint;
    if (!h.is_real() && h.imag_radical().sign() < 0) h = h.conj();
    bool dup = false;
    for (const auto& s : seen) dup = dup || s == h;
    if (dup) continue;
    seen.push_back(h);
    int mult = 0;
    if (h.is_real()) {
      Poly lin = from_root(h);
      while (remaining.degree() >= 1) {
        auto [q, r] = poly_divmod(remaining, lin);
        if (!r.is_zero()) break;
        remaining = q;
        ++mult;
      }
      if (mult > 0) acc.add_real(h, mult);
    } else {
      Poly quad = from_root(h) * from_root(h.conj());
      while (remaining.degree() >= 2) {
        auto [q, r] = poly_divmod(remaining, quad);
        if (!r.is_zero()) break;
        remaining = q;
        ++mult;
      }
      if (mult > 0) acc.add_pair(Scalar(h.real_radical()), Scalar(h.imag_radical()), mult);
    }
  }
  if (remaining.degree() != 0)
    fail(ErrorKind::Internal, "candidate roots failed to split " + p_min.str());
  return assemble(std::move(acc), Mode::Exact, p_min.monic());
}

// ----------------------------------------------------------- classification

ClassificationReport classify_spectrum(const SpectralData& s, double tol) {
  ClassificationReport r;
  r.mode = s.mode;
  r.spectrum = s;
  bool exact = s.mode == Mode::Exact;
  auto near_zero = [&](const Scalar& v) {
    return exact ? v.is_zero() : std::abs(v.to_complex()) <= tol;
  };
  r.semisimple = true;
  for (const auto& p : s.pairs) r.semisimple = r.semisimple && p.mult == 1;
  for (const auto& x : s.reals) r.semisimple = r.semisimple && x.mult == 1;

  bool spectrum_zero = s.pairs.empty() && s.reals.size() == 1 && near_zero(s.reals[0].lambda);
  bool spectrum_one =
      s.pairs.empty() && s.reals.size() == 1 && near_zero(s.reals[0].lambda - Scalar(1L));
  r.nilpotent = spectrum_zero;
  r.unipotent = spectrum_one;

  bool all_re_zero = true, all_mod_one = true, all_real_positive = true;
  for (const auto& p : s.pairs) {
    all_re_zero = all_re_zero && near_zero(p.re);
    all_mod_one = all_mod_one && near_zero(p.modulus_sq - Scalar(1L));
  }
  for (const auto& x : s.reals) {
    all_re_zero = all_re_zero && near_zero(x.lambda);
    all_mod_one = all_mod_one && near_zero(x.modulus_sq - Scalar(1L));
    bool pos = exact ? x.lambda.sign_real() > 0 : x.lambda.to_complex().real() > tol;
    all_real_positive = all_real_positive && pos;
  }
  r.elliptic_add = r.semisimple && all_re_zero;
  r.hyperbolic_add = r.semisimple && s.pairs.empty();
  r.elliptic_mult = r.semisimple && all_mod_one;
  r.hyperbolic_mult = r.semisimple && s.pairs.empty() && all_real_positive;
  return r;
}

ClassificationReport classify_operator(const SquareMatrix& T, ModeRequest mode,
                                       const NumericOptions& opts) {
  Poly p = minimal_polynomial(T);
  SpectralData s = factor_minimal_polynomial(p, mode, opts);
  return classify_spectrum(s, opts.tolerance);
}

ClassificationReport classify_with_hints(const SquareMatrix& T, const std::vector<Scalar>& hints) {
  Poly p = minimal_polynomial(T);
  SpectralData s = factor_with_hints(p, hints);
  return classify_spectrum(s);
}

}  // namespace jordan
