#include "jordan/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <vector>

namespace jordan {

namespace {

Int pollard_rho(const Int& n) {
  // Brent's cycle variant; n composite, odd, not a prime power handled by caller.
  for (unsigned long c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    Int diff, saved;
    int steps = 0;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      diff = x - y;
      if (diff < 0) diff = -diff;
      if (diff == 0) break;  // cycle without factor; retry with next c
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      if (++steps > 1 << 20) break;
    }
    if (d != 1 && d != n) return d;
  }
}

}  // namespace

void factorize(Int n, std::map<Int, int>& out) {
  if (n <= 0) fail(ErrorKind::Internal, "factorize expects n > 0");
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out[Int(p)] += 1;
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    }
  }
  long p = 17;
  while (n > 1 && p * p <= 100000000L && Int(p) * p <= n) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out[Int(p)] += 1;
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    }
    p += 2;
  }
  if (n == 1) return;
  if (Int(p) * p > n || mpz_probab_prime_p(n.get_mpz_t(), 40)) {
    out[n] += 1;
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    std::map<Int, int> sub;
    factorize(r, sub);
    for (auto& [q, e] : sub) out[q] += 2 * e;
    return;
  }
  Int d = pollard_rho(n);
  factorize(d, out);
  factorize(n / d, out);
}

std::pair<Int, Int> squarefree_split(const Int& n) {
  if (n <= 0) fail(ErrorKind::Internal, "squarefree_split expects n > 0");
  std::map<Int, int> f;
  factorize(n, f);
  Int root = 1, sf = 1;
  for (auto& [p, e] : f) {
    for (int i = 0; i < e / 2; ++i) root *= p;
    if (e % 2) sf *= p;
  }
  return {root, sf};
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) fail(ErrorKind::DegenerateInput, "zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat rat_from_string(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) fail(ErrorKind::ParseError, "empty number");
  auto slash = t.find('/');
  if (slash != std::string::npos) {
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), t.c_str(), 10) != 0)
      fail(ErrorKind::ParseError, "bad rational '" + s + "'");
    q.canonicalize();
    return q;
  }
  // decimal with optional exponent, converted exactly
  size_t pos = 0;
  bool neg = false;
  if (t[pos] == '+' || t[pos] == '-') neg = t[pos++] == '-';
  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false, seen_digit = false;
  for (; pos < t.size(); ++pos) {
    char c = t[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!seen_digit) fail(ErrorKind::ParseError, "bad number '" + s + "'");
  long exp10 = 0;
  if (pos < t.size() && (t[pos] == 'e' || t[pos] == 'E')) {
    ++pos;
    bool eneg = false;
    if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) eneg = t[pos++] == '-';
    if (pos >= t.size()) fail(ErrorKind::ParseError, "bad exponent '" + s + "'");
    long e = 0;
    for (; pos < t.size(); ++pos) {
      if (!std::isdigit(static_cast<unsigned char>(t[pos])))
        fail(ErrorKind::ParseError, "bad exponent '" + s + "'");
      e = e * 10 + (t[pos] - '0');
    }
    exp10 = eneg ? -e : e;
  }
  if (pos != t.size()) fail(ErrorKind::ParseError, "trailing characters in '" + s + "'");
  Int num;  // explicit base 10: leading zeros must not trigger octal parsing
  if (mpz_set_str(num.get_mpz_t(), digits.empty() ? "0" : digits.c_str(), 10) != 0)
    fail(ErrorKind::ParseError, "bad digits in '" + s + "'");
  if (neg) num = -num;
  long net = exp10 - frac_digits;
  Int pow10 = 1;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(net < 0 ? -net : net));
  return net >= 0 ? Rat(num * pow10) : make_rat(num, pow10);
}

std::string rat_str(const Rat& q) {
  std::ostringstream os;
  os << q.get_num();
  if (q.get_den() != 1) os << "/" << q.get_den();
  return os.str();
}

// ---------------------------------------------------------------- Radical

Radical::Radical(const Rat& q) {
  if (q != 0) terms_[Int(1)] = q;
}

Radical::Radical(long v) {
  if (v != 0) terms_[Int(1)] = Rat(v);
}

void Radical::set_term(const Int& radicand, const Rat& coeff) {
  if (coeff == 0)
    terms_.erase(radicand);
  else
    terms_[radicand] = coeff;
}

Radical Radical::sqrt_rational(const Rat& q) {
  if (q < 0) fail(ErrorKind::DegenerateInput, "sqrt of negative rational");
  if (q == 0) return Radical();
  // sqrt(a/b) = sqrt(a*b)/b
  Int ab = q.get_num() * q.get_den();
  auto [root, sf] = squarefree_split(ab);
  Radical r;
  r.terms_[sf] = make_rat(root, q.get_den());
  return r;
}

bool Radical::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rat Radical::as_rational() const {
  if (terms_.empty()) return Rat(0);
  if (!is_rational()) fail(ErrorKind::Internal, "radical value is not rational: " + str());
  return terms_.begin()->second;
}

Radical Radical::operator-() const {
  Radical r = *this;
  for (auto& [m, q] : r.terms_) q = -q;
  return r;
}

Radical& Radical::operator+=(const Radical& o) {
  for (auto& [m, q] : o.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_[m] = q;
    } else {
      it->second += q;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Radical& Radical::operator-=(const Radical& o) { return *this += -o; }

Radical operator*(const Radical& a, const Radical& b) {
  Radical r;
  for (auto& [m, qa] : a.terms_) {
    for (auto& [n, qb] : b.terms_) {
      Int g;
      mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
      Int radicand = (m / g) * (n / g);  // squarefree since m, n are
      Rat coeff = qa * qb * Rat(g);
      auto it = r.terms_.find(radicand);
      if (it == r.terms_.end()) {
        if (coeff != 0) r.terms_[radicand] = coeff;
      } else {
        it->second += coeff;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

namespace {

// Smallest prime dividing any radicand other than 1; 0 when value is rational.
Int pick_prime(const std::map<Int, Rat>& terms) {
  Int best = 0;
  for (auto& [m, q] : terms) {
    if (m == 1) continue;
    std::map<Int, int> f;
    factorize(m, f);
    const Int& p = f.begin()->first;
    if (best == 0 || p < best) best = p;
  }
  return best;
}

// value = a + sqrt(p) * b with no radicand of a or b divisible by p
void split_at_prime(const Radical& v, const Int& p, Radical& a, Radical& b) {
  a = Radical();
  b = Radical();
  for (auto& [m, q] : v.terms()) {
    if (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      Radical t;
      t += Radical(q) * Radical::sqrt_rational(Rat(m / p));
      b += t;
    } else {
      a += Radical(q) * Radical::sqrt_rational(Rat(m));
    }
  }
}

}  // namespace

Radical Radical::inverse() const {
  if (is_zero()) fail(ErrorKind::DegenerateInput, "inverse of zero");
  if (is_rational()) {
    Rat q = as_rational();
    return Radical(make_rat(q.get_den(), q.get_num()));
  }
  Int p = pick_prime(terms_);
  Radical a, b;
  split_at_prime(*this, p, a, b);
  // 1/(a + sqrt(p) b) = (a - sqrt(p) b) / (a^2 - p b^2)
  Radical denom = a * a - Radical(Rat(p)) * b * b;
  Radical conj = a - sqrt_rational(Rat(p)) * b;
  return conj * denom.inverse();
}

int Radical::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(as_rational());
  Int p = pick_prime(terms_);
  Radical a, b;
  split_at_prime(*this, p, a, b);
  int sa = a.sign();
  int sb = b.sign();
  if (sa == 0) return sb;
  if (sb == 0) return sa;
  if (sa == sb) return sa;
  Radical d = a * a - Radical(Rat(p)) * b * b;
  int sd = d.sign();
  if (sd == 0) return 0;
  return sd > 0 ? sa : sb;
}

double Radical::to_double() const {
  double v = 0;
  for (auto& [m, q] : terms_) v += q.get_d() * std::sqrt(m.get_d());
  return v;
}

std::string Radical::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, q] : terms_) {
    if (!first && q > 0) os << "+";
    first = false;
    if (m == 1) {
      os << rat_str(q);
    } else {
      if (q == -1)
        os << "-";
      else if (q != 1)
        os << rat_str(q) << "*";
      os << "sqrt(" << m << ")";
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- Scalar

Scalar Scalar::from_complex(std::complex<double> z) {
  Scalar s;
  s.is_float_ = true;
  s.f_ = z;
  return s;
}

Ring Scalar::ring() const {
  if (is_float_) return Ring::ComplexFloat;
  if (im_.is_zero()) return re_.is_rational() ? Ring::Rational : Ring::Radical;
  if (re_.is_rational() && im_.is_rational()) return Ring::Gaussian;
  return Ring::GaussianRadical;
}

const char* ring_name(Ring r) {
  switch (r) {
    case Ring::Rational: return "rational";
    case Ring::Gaussian: return "gaussian-rational";
    case Ring::Radical: return "radical-rational";
    case Ring::GaussianRadical: return "gaussian-radical";
    case Ring::ComplexFloat: return "complex-float";
  }
  return "?";
}

bool Scalar::is_zero() const {
  if (is_float_) return f_ == std::complex<double>(0.0, 0.0);
  return re_.is_zero() && im_.is_zero();
}

bool Scalar::is_real() const { return is_float_ ? f_.imag() == 0.0 : im_.is_zero(); }

bool Scalar::is_rational() const { return !is_float_ && im_.is_zero() && re_.is_rational(); }

Rat Scalar::as_rational() const {
  if (!is_rational()) fail(ErrorKind::Internal, "scalar is not rational: " + str());
  return re_.as_rational();
}

const Radical& Scalar::real_radical() const {
  if (is_float_) fail(ErrorKind::Internal, "float scalar has no exact parts");
  return re_;
}

const Radical& Scalar::imag_radical() const {
  if (is_float_) fail(ErrorKind::Internal, "float scalar has no exact parts");
  return im_;
}

std::complex<double> Scalar::to_complex() const {
  if (is_float_) return f_;
  return {re_.to_double(), im_.to_double()};
}

Scalar Scalar::conj() const {
  if (is_float_) return from_complex(std::conj(f_));
  return Scalar(re_, -im_);
}

Scalar Scalar::operator-() const {
  if (is_float_) return from_complex(-f_);
  return Scalar(-re_, -im_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_float_ || b.is_float_) return Scalar::from_complex(a.to_complex() + b.to_complex());
  return Scalar(a.re_ + b.re_, a.im_ + b.im_);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.is_float_ || b.is_float_) return Scalar::from_complex(a.to_complex() - b.to_complex());
  return Scalar(a.re_ - b.re_, a.im_ - b.im_);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_float_ || b.is_float_) return Scalar::from_complex(a.to_complex() * b.to_complex());
  return Scalar(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorKind::DegenerateInput, "inverse of zero scalar");
  if (is_float_) return from_complex(1.0 / f_);
  Radical norm = re_ * re_ + im_ * im_;
  Radical inv_norm = norm.inverse();
  return Scalar(re_ * inv_norm, -im_ * inv_norm);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (a.is_float_ || b.is_float_) {
    if (b.is_zero()) fail(ErrorKind::DegenerateInput, "division by zero scalar");
    return Scalar::from_complex(a.to_complex() / b.to_complex());
  }
  return a * b.inverse();
}

Scalar Scalar::abs_sq() const {
  if (is_float_) return from_complex(std::norm(f_));
  return Scalar(re_ * re_ + im_ * im_);
}

bool Scalar::operator==(const Scalar& o) const {
  if (is_float_ != o.is_float_) return to_complex() == o.to_complex();
  if (is_float_) return f_ == o.f_;
  return re_ == o.re_ && im_ == o.im_;
}

int Scalar::sign_real() const {
  if (is_float_) {
    if (f_.imag() != 0.0) fail(ErrorKind::Internal, "sign of non-real scalar");
    return f_.real() > 0 ? 1 : (f_.real() < 0 ? -1 : 0);
  }
  if (!im_.is_zero()) fail(ErrorKind::Internal, "sign of non-real scalar");
  return re_.sign();
}

int Scalar::compare_real(const Scalar& a, const Scalar& b) { return (a - b).sign_real(); }

int Scalar::compare_canonical(const Scalar& a, const Scalar& b) {
  if (a.is_float_ || b.is_float_) {
    auto za = a.to_complex(), zb = b.to_complex();
    if (za.real() != zb.real()) return za.real() < zb.real() ? -1 : 1;
    if (za.imag() != zb.imag()) return za.imag() < zb.imag() ? -1 : 1;
    return 0;
  }
  int c = (Scalar(a.re_) - Scalar(b.re_)).sign_real();
  if (c != 0) return c;
  return (Scalar(a.im_) - Scalar(b.im_)).sign_real();
}

namespace {

std::string double_str(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string Scalar::str() const {
  if (is_float_) {
    if (f_.imag() == 0.0) return double_str(f_.real());
    std::string s = double_str(f_.real());
    std::string im = double_str(f_.imag());
    if (!im.empty() && im[0] != '-') s += "+";
    return s + im + "i";
  }
  if (im_.is_zero()) return re_.str();
  std::string s;
  if (!re_.is_zero()) s = re_.str();
  std::string ims = im_.str();
  bool wrap = im_.terms().size() > 1 || !im_.is_rational();
  if (wrap) {
    if (!s.empty()) s += "+";
    s += "(" + ims + ")i";
  } else {
    if (!s.empty() && ims[0] != '-') s += "+";
    s += ims + "i";
  }
  return s;
}

// ----------------------------------------------------------- parsing

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool accept_word(const std::string& w) {
    skip_ws();
    if (s.compare(pos, w.size(), w) == 0) {
      pos += w.size();
      return true;
    }
    return false;
  }
};

Rat parse_number(Cursor& c) {
  c.skip_ws();
  size_t start = c.pos;
  if (c.pos < c.s.size() && (c.s[c.pos] == '+' || c.s[c.pos] == '-')) ++c.pos;
  bool digits = false;
  while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
    ++c.pos;
    digits = true;
  }
  if (c.pos < c.s.size() && c.s[c.pos] == '.') {
    ++c.pos;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
      ++c.pos;
      digits = true;
    }
  }
  if (c.pos < c.s.size() && (c.s[c.pos] == 'e' || c.s[c.pos] == 'E')) {
    size_t save = c.pos;
    ++c.pos;
    if (c.pos < c.s.size() && (c.s[c.pos] == '+' || c.s[c.pos] == '-')) ++c.pos;
    if (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
      while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
    } else {
      c.pos = save;
    }
  }
  if (c.pos < c.s.size() && c.s[c.pos] == '/') {
    ++c.pos;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
  }
  if (!digits) fail(ErrorKind::ParseError, "expected number in '" + c.s + "'");
  return rat_from_string(c.s.substr(start, c.pos - start));
}

Radical parse_real_sum(Cursor& c, char stop);

// one term: [rat] [* sqrt(m)] | sqrt(m); returns value, sets is_im if trailing i
Radical parse_term(Cursor& c, bool& is_im) {
  is_im = false;
  Rat coeff(1);
  bool have_coeff = false;
  c.skip_ws();
  bool neg = false;
  if (c.peek() == '-') {
    c.accept('-');
    neg = true;
  } else if (c.peek() == '+') {
    c.accept('+');
  }
  c.skip_ws();
  char ch = c.peek();
  if (ch != 'i' && ch != 's' && ch != '(') {
    coeff = parse_number(c);
    have_coeff = true;
    c.accept('*');
  }
  Radical value(coeff);
  if (c.accept_word("sqrt")) {
    if (!c.accept('(')) fail(ErrorKind::ParseError, "expected ( after sqrt");
    Rat m = parse_number(c);
    if (!c.accept(')')) fail(ErrorKind::ParseError, "expected ) after radicand");
    value = Radical(coeff) * Radical::sqrt_rational(m);
  } else if (c.peek() == '(') {
    c.accept('(');
    Radical inner = parse_real_sum(c, ')');
    if (!c.accept(')')) fail(ErrorKind::ParseError, "expected )");
    value = Radical(coeff) * inner;
  } else if (!have_coeff && c.peek() != 'i') {
    fail(ErrorKind::ParseError, "expected term in '" + c.s + "'");
  }
  if (c.pos < c.s.size() && c.s[c.pos] == 'i') {
    ++c.pos;
    is_im = true;
  }
  return neg ? -value : value;
}

Radical parse_real_sum(Cursor& c, char stop) {
  Radical sum;
  while (true) {
    bool is_im = false;
    sum += parse_term(c, is_im);
    if (is_im) fail(ErrorKind::ParseError, "unexpected i inside real expression");
    c.skip_ws();
    if (c.eof() || c.peek() == stop) break;
    if (c.peek() != '+' && c.peek() != '-')
      fail(ErrorKind::ParseError, "unexpected character in '" + c.s + "'");
  }
  return sum;
}

}  // namespace

Scalar Scalar::parse(const std::string& s) {
  Cursor c{s};
  Radical re, im;
  while (!c.eof()) {
    bool is_im = false;
    Radical t = parse_term(c, is_im);
    if (is_im)
      im += t;
    else
      re += t;
    c.skip_ws();
    if (c.eof()) break;
    if (c.peek() != '+' && c.peek() != '-')
      fail(ErrorKind::ParseError, "unexpected character in scalar '" + s + "'");
  }
  return Scalar(re, im);
}

}  // namespace jordan
