#include "hopfkit/scalar.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <utility>

namespace hopfkit {

// ---------------------------------------------------------------------------
// QPoly

QPoly::QPoly(const Rat& constant) {
  if (constant != 0) c_.push_back(constant);
}

QPoly::QPoly(long constant) {
  if (constant != 0) c_.push_back(Rat(constant));
}

QPoly QPoly::monomial(std::size_t k, const Rat& coeff) {
  QPoly p;
  if (coeff != 0) {
    p.c_.assign(k + 1, Rat(0));
    p.c_[k] = coeff;
  }
  return p;
}

QPoly QPoly::from_coeffs(std::vector<Rat> coeffs) {
  QPoly p;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& QPoly::leading() const {
  if (c_.empty()) fail(errc::internal, "leading coefficient of zero polynomial");
  return c_.back();
}

Rat QPoly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }

QPoly QPoly::operator+(const QPoly& o) const {
  QPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.trim();
  return r;
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  QPoly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  r.trim();
  return r;
}

QPoly QPoly::scaled(const Rat& c) const {
  if (c == 0) return {};
  QPoly r = *this;
  for (auto& x : r.c_) x *= c;
  return r;
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  return scaled(Rat(1) / leading());
}

void QPoly::divrem(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  if (b.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
  q = QPoly();
  r = a;
  const int db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    const std::size_t shift = static_cast<std::size_t>(r.degree() - db);
    Rat factor = r.leading() / b.leading();
    QPoly t = QPoly::monomial(shift, factor);
    q = q + t;
    r = r - b * t;
  }
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly q, r;
    divrem(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

// Extended Euclid: g = gcd(a,b) monic, with u*a + v*b = g.
static void poly_egcd(const QPoly& a, const QPoly& b, QPoly& g, QPoly& u, QPoly& v) {
  QPoly r0 = a, r1 = b;
  QPoly u0(1L), u1(0L), v0(0L), v1(1L);
  while (!r1.is_zero()) {
    QPoly q, r;
    QPoly::divrem(r0, r1, q, r);
    QPoly u2 = u0 - q * u1;
    QPoly v2 = v0 - q * v1;
    r0 = std::move(r1); r1 = std::move(r);
    u0 = std::move(u1); u1 = std::move(u2);
    v0 = std::move(v1); v1 = std::move(v2);
  }
  if (r0.is_zero()) {
    g = QPoly(); u = QPoly(); v = QPoly();
    return;
  }
  Rat lc = r0.leading();
  g = r0.scaled(Rat(1) / lc);
  u = u0.scaled(Rat(1) / lc);
  v = v0.scaled(Rat(1) / lc);
}

const QPoly& cyclotomic_polynomial(unsigned n) {
  static std::map<unsigned, QPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n == 0) fail(errc::out_of_range, "cyclotomic order must be positive");
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up.
  for (unsigned m = 1; m <= n; ++m) {
    if (n % m != 0 || cache.count(m)) continue;
    QPoly num = QPoly::monomial(m) - QPoly(1L);
    for (unsigned d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      QPoly q, r;
      QPoly::divrem(num, cache.at(d), q, r);
      if (!r.is_zero()) fail(errc::internal, "cyclotomic polynomial division left a remainder");
      num = std::move(q);
    }
    cache.emplace(m, std::move(num));
  }
  return cache.at(n);
}

// ---------------------------------------------------------------------------
// FieldSpec

FieldSpec FieldSpec::rationals() {
  auto d = std::make_shared<Data>();
  d->kind = FieldKind::rationals;
  return FieldSpec(std::move(d));
}

FieldSpec FieldSpec::prime_field(const Int& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 32) == 0)
    fail(errc::invalid_argument, "prime field modulus must be prime, got " + p.get_str());
  auto d = std::make_shared<Data>();
  d->kind = FieldKind::prime_field;
  d->p = p;
  return FieldSpec(std::move(d));
}

FieldSpec FieldSpec::cyclotomic(unsigned n) {
  if (n == 0) fail(errc::invalid_argument, "cyclotomic order must be positive");
  auto d = std::make_shared<Data>();
  d->kind = FieldKind::cyclotomic;
  d->n = n;
  d->phi = cyclotomic_polynomial(n);
  return FieldSpec(std::move(d));
}

FieldSpec FieldSpec::rational_functions(std::string variable) {
  if (variable.empty()) fail(errc::invalid_argument, "rational function variable must be named");
  auto d = std::make_shared<Data>();
  d->kind = FieldKind::rational_functions;
  d->var = std::move(variable);
  return FieldSpec(std::move(d));
}

const Int& FieldSpec::prime() const {
  if (d_->kind != FieldKind::prime_field) fail(errc::internal, "prime() on non-prime field");
  return d_->p;
}

unsigned FieldSpec::cyclotomic_order() const {
  if (d_->kind != FieldKind::cyclotomic) fail(errc::internal, "cyclotomic_order() on non-cyclotomic field");
  return d_->n;
}

unsigned FieldSpec::extension_degree() const {
  if (d_->kind == FieldKind::cyclotomic) return static_cast<unsigned>(d_->phi.degree());
  return 1;
}

const QPoly& FieldSpec::modulus() const {
  if (d_->kind != FieldKind::cyclotomic) fail(errc::internal, "modulus() on non-cyclotomic field");
  return d_->phi;
}

const std::string& FieldSpec::variable() const {
  if (d_->kind != FieldKind::rational_functions)
    fail(errc::internal, "variable() on non-rational-function field");
  return d_->var;
}

Int FieldSpec::characteristic() const {
  return d_->kind == FieldKind::prime_field ? d_->p : Int(0);
}

bool FieldSpec::operator==(const FieldSpec& o) const {
  if (d_->kind != o.d_->kind) return false;
  switch (d_->kind) {
    case FieldKind::rationals: return true;
    case FieldKind::prime_field: return d_->p == o.d_->p;
    case FieldKind::cyclotomic: return d_->n == o.d_->n;
    case FieldKind::rational_functions: return d_->var == o.d_->var;
  }
  return false;
}

std::string FieldSpec::str() const {
  switch (d_->kind) {
    case FieldKind::rationals: return "Q";
    case FieldKind::prime_field: return "Fp:" + d_->p.get_str();
    case FieldKind::cyclotomic: return "cyclotomic:" + std::to_string(d_->n);
    case FieldKind::rational_functions: return "Qq";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Scalar: construction

static void check_same_field(const Scalar& a, const Scalar& b, const char* op) {
  if (a.field() != b.field())
    fail(errc::field_mismatch, std::string("scalar ") + op + " across distinct fields " +
                                   a.field().str() + " and " + b.field().str());
}

static Int mod_reduce(const Int& v, const Int& p) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return r;
}

// Reduce a Q[x] polynomial mod Phi_n and lay it out as a fixed-length vector.
static std::vector<Rat> cyclo_reduce(const FieldSpec& f, const QPoly& p) {
  QPoly q, r;
  QPoly::divrem(p, f.modulus(), q, r);
  std::vector<Rat> out(f.extension_degree(), Rat(0));
  for (std::size_t k = 0; k < r.coeffs().size(); ++k) out[k] = r.coeffs()[k];
  return out;
}

// Canonical rational function: den monic, gcd(num, den) = 1, zero -> 0/1.
static void frac_normalize(QPoly& num, QPoly& den) {
  if (den.is_zero()) fail(errc::division_by_zero, "rational function with zero denominator");
  if (num.is_zero()) {
    den = QPoly(1L);
    return;
  }
  QPoly g = QPoly::gcd(num, den);
  if (!g.is_one()) {
    QPoly q, r;
    QPoly::divrem(num, g, q, r);
    num = std::move(q);
    QPoly::divrem(den, g, q, r);
    den = std::move(q);
  }
  Rat lc = den.leading();
  if (lc != 1) {
    num = num.scaled(Rat(1) / lc);
    den = den.scaled(Rat(1) / lc);
  }
}

Scalar Scalar::zero(const FieldSpec& f) { return of_int(f, 0L); }
Scalar Scalar::one(const FieldSpec& f) { return of_int(f, 1L); }

Scalar Scalar::of_int(const FieldSpec& f, long v) { return of_int(f, Int(v)); }

Scalar Scalar::of_int(const FieldSpec& f, const Int& v) {
  switch (f.kind()) {
    case FieldKind::rationals: return Scalar(f, Rat(v));
    case FieldKind::prime_field: return Scalar(f, mod_reduce(v, f.prime()));
    case FieldKind::cyclotomic: {
      std::vector<Rat> c(f.extension_degree(), Rat(0));
      c[0] = Rat(v);
      return Scalar(f, std::move(c));
    }
    case FieldKind::rational_functions: return Scalar(f, Frac{QPoly(Rat(v)), QPoly(1L)});
  }
  fail(errc::internal, "unreachable field kind");
}

Scalar Scalar::of_rat(const FieldSpec& f, const Rat& v) {
  switch (f.kind()) {
    case FieldKind::rationals: return Scalar(f, v);
    case FieldKind::prime_field: {
      Int den = mod_reduce(v.get_den(), f.prime());
      if (den == 0)
        fail(errc::division_by_zero,
             "rational " + v.get_str() + " has no image in " + f.str());
      Int inv;
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), f.prime().get_mpz_t());
      return Scalar(f, mod_reduce(mod_reduce(v.get_num(), f.prime()) * inv, f.prime()));
    }
    case FieldKind::cyclotomic: {
      std::vector<Rat> c(f.extension_degree(), Rat(0));
      c[0] = v;
      return Scalar(f, std::move(c));
    }
    case FieldKind::rational_functions: return Scalar(f, Frac{QPoly(v), QPoly(1L)});
  }
  fail(errc::internal, "unreachable field kind");
}

Scalar Scalar::generator(const FieldSpec& f) {
  switch (f.kind()) {
    case FieldKind::cyclotomic: return Scalar(f, cyclo_reduce(f, QPoly::monomial(1)));
    case FieldKind::rational_functions: return Scalar(f, Frac{QPoly::monomial(1), QPoly(1L)});
    default: fail(errc::invalid_argument, "field " + f.str() + " has no distinguished generator");
  }
}

Scalar Scalar::cyclotomic_from(const FieldSpec& f, const std::vector<Rat>& coeffs) {
  if (f.kind() != FieldKind::cyclotomic)
    fail(errc::invalid_argument, "cyclotomic_from on field " + f.str());
  return Scalar(f, cyclo_reduce(f, QPoly::from_coeffs(coeffs)));
}

Scalar Scalar::fraction(const FieldSpec& f, const QPoly& num, const QPoly& den) {
  if (f.kind() != FieldKind::rational_functions)
    fail(errc::invalid_argument, "fraction on field " + f.str());
  QPoly n = num, d = den;
  frac_normalize(n, d);
  return Scalar(f, Frac{std::move(n), std::move(d)});
}

// ---------------------------------------------------------------------------
// Scalar: predicates and accessors

bool Scalar::is_zero() const {
  switch (f_.kind()) {
    case FieldKind::rationals: return std::get<Rat>(v_) == 0;
    case FieldKind::prime_field: return std::get<Int>(v_) == 0;
    case FieldKind::cyclotomic: {
      for (const auto& c : std::get<std::vector<Rat>>(v_))
        if (c != 0) return false;
      return true;
    }
    case FieldKind::rational_functions: return std::get<Frac>(v_).num.is_zero();
  }
  return false;
}

bool Scalar::is_one() const {
  switch (f_.kind()) {
    case FieldKind::rationals: return std::get<Rat>(v_) == 1;
    case FieldKind::prime_field: return std::get<Int>(v_) == 1 && f_.prime() != 1;
    case FieldKind::cyclotomic: {
      const auto& c = std::get<std::vector<Rat>>(v_);
      if (c.empty() || c[0] != 1) return false;
      for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
      return true;
    }
    case FieldKind::rational_functions: {
      const auto& fr = std::get<Frac>(v_);
      return fr.num.is_one() && fr.den.is_one();
    }
  }
  return false;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(*this, o, "comparison");
  return v_ == o.v_;
}

const Rat& Scalar::as_rat() const {
  if (f_.kind() != FieldKind::rationals) fail(errc::internal, "as_rat on " + f_.str());
  return std::get<Rat>(v_);
}

const Int& Scalar::as_residue() const {
  if (f_.kind() != FieldKind::prime_field) fail(errc::internal, "as_residue on " + f_.str());
  return std::get<Int>(v_);
}

const std::vector<Rat>& Scalar::as_cyclo() const {
  if (f_.kind() != FieldKind::cyclotomic) fail(errc::internal, "as_cyclo on " + f_.str());
  return std::get<std::vector<Rat>>(v_);
}

const QPoly& Scalar::num() const {
  if (f_.kind() != FieldKind::rational_functions) fail(errc::internal, "num on " + f_.str());
  return std::get<Frac>(v_).num;
}

const QPoly& Scalar::den() const {
  if (f_.kind() != FieldKind::rational_functions) fail(errc::internal, "den on " + f_.str());
  return std::get<Frac>(v_).den;
}

// ---------------------------------------------------------------------------
// Scalar: arithmetic

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(*this, o, "addition");
  switch (f_.kind()) {
    case FieldKind::rationals: {
      Rat r = std::get<Rat>(v_) + std::get<Rat>(o.v_);
      return Scalar(f_, std::move(r));
    }
    case FieldKind::prime_field:
      return Scalar(f_, mod_reduce(std::get<Int>(v_) + std::get<Int>(o.v_), f_.prime()));
    case FieldKind::cyclotomic: {
      std::vector<Rat> c = std::get<std::vector<Rat>>(v_);
      const auto& oc = std::get<std::vector<Rat>>(o.v_);
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += oc[i];
      return Scalar(f_, std::move(c));
    }
    case FieldKind::rational_functions: {
      const Frac& a = std::get<Frac>(v_);
      const Frac& b = std::get<Frac>(o.v_);
      QPoly num = a.num * b.den + b.num * a.den;
      QPoly den = a.den * b.den;
      frac_normalize(num, den);
      return Scalar(f_, Frac{std::move(num), std::move(den)});
    }
  }
  fail(errc::internal, "unreachable field kind");
}

Scalar Scalar::operator-() const {
  switch (f_.kind()) {
    case FieldKind::rationals: {
      Rat r = -std::get<Rat>(v_);
      return Scalar(f_, std::move(r));
    }
    case FieldKind::prime_field:
      return Scalar(f_, mod_reduce(-std::get<Int>(v_), f_.prime()));
    case FieldKind::cyclotomic: {
      std::vector<Rat> c = std::get<std::vector<Rat>>(v_);
      for (auto& x : c) x = -x;
      return Scalar(f_, std::move(c));
    }
    case FieldKind::rational_functions: {
      const Frac& a = std::get<Frac>(v_);
      return Scalar(f_, Frac{-a.num, a.den});
    }
  }
  fail(errc::internal, "unreachable field kind");
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(*this, o, "multiplication");
  switch (f_.kind()) {
    case FieldKind::rationals: {
      Rat r = std::get<Rat>(v_) * std::get<Rat>(o.v_);
      return Scalar(f_, std::move(r));
    }
    case FieldKind::prime_field:
      return Scalar(f_, mod_reduce(std::get<Int>(v_) * std::get<Int>(o.v_), f_.prime()));
    case FieldKind::cyclotomic: {
      QPoly p = QPoly::from_coeffs(std::get<std::vector<Rat>>(v_)) *
                QPoly::from_coeffs(std::get<std::vector<Rat>>(o.v_));
      return Scalar(f_, cyclo_reduce(f_, p));
    }
    case FieldKind::rational_functions: {
      const Frac& a = std::get<Frac>(v_);
      const Frac& b = std::get<Frac>(o.v_);
      QPoly num = a.num * b.num;
      QPoly den = a.den * b.den;
      frac_normalize(num, den);
      return Scalar(f_, Frac{std::move(num), std::move(den)});
    }
  }
  fail(errc::internal, "unreachable field kind");
}

Scalar Scalar::inv() const {
  if (is_zero()) fail(errc::division_by_zero, "inverse of zero in " + f_.str());
  switch (f_.kind()) {
    case FieldKind::rationals: {
      Rat r = Rat(1) / std::get<Rat>(v_);
      return Scalar(f_, std::move(r));
    }
    case FieldKind::prime_field: {
      Int inv;
      mpz_invert(inv.get_mpz_t(), std::get<Int>(v_).get_mpz_t(), f_.prime().get_mpz_t());
      return Scalar(f_, std::move(inv));
    }
    case FieldKind::cyclotomic: {
      QPoly a = QPoly::from_coeffs(std::get<std::vector<Rat>>(v_));
      QPoly g, u, v;
      poly_egcd(a, f_.modulus(), g, u, v);
      if (!g.is_one()) fail(errc::internal, "non-invertible element in cyclotomic field");
      return Scalar(f_, cyclo_reduce(f_, u));
    }
    case FieldKind::rational_functions: {
      const Frac& a = std::get<Frac>(v_);
      QPoly num = a.den, den = a.num;
      frac_normalize(num, den);
      return Scalar(f_, Frac{std::move(num), std::move(den)});
    }
  }
  fail(errc::internal, "unreachable field kind");
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_field(*this, o, "division");
  return *this * o.inv();
}

Scalar Scalar::pow(long long k) const {
  if (k < 0) return inv().pow(-k);
  Scalar base = *this;
  Scalar acc = Scalar::one(f_);
  unsigned long long e = static_cast<unsigned long long>(k);
  while (e > 0) {
    if (e & 1ULL) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Scalar: printing

static std::string rat_str(const Rat& r) { return r.get_str(); }

// Polynomial in `gen`, highest power first: "1/2*q^3 - 2*q + 1", "zeta3 - 1".
static std::string poly_str(const std::vector<Rat>& coeffs, const std::string& gen) {
  std::string out;
  for (std::size_t idx = coeffs.size(); idx-- > 0;) {
    const Rat& c = coeffs[idx];
    if (c == 0) continue;
    const bool neg = c < 0;
    Rat mag = neg ? Rat(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (idx == 0) {
      out += rat_str(mag);
    } else {
      if (mag != 1) out += rat_str(mag) + "*";
      out += gen;
      if (idx >= 2) out += "^" + std::to_string(idx);
    }
  }
  return out.empty() ? "0" : out;
}

// Scale a coprime pair over Q[q] to the unique coprime integer pair whose
// denominator has a positive leading coefficient.
static void qq_integer_pair(const QPoly& num, const QPoly& den, std::vector<Rat>& n_out,
                            std::vector<Rat>& d_out) {
  Int l(1);
  for (const auto& c : num.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  for (const auto& c : den.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  Int g(0);
  auto scale_and_content = [&](const QPoly& p, std::vector<Rat>& out) {
    out.clear();
    for (const auto& c : p.coeffs()) {
      Rat s = c * Rat(l);
      out.push_back(s);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num().get_mpz_t());
    }
  };
  scale_and_content(num, n_out);
  scale_and_content(den, d_out);
  if (g == 0) g = 1;
  if (!d_out.empty() && d_out.back() < 0) g = -g;
  for (auto& c : n_out) c /= Rat(g);
  for (auto& c : d_out) c /= Rat(g);
}

std::string Scalar::str() const {
  switch (f_.kind()) {
    case FieldKind::rationals: return rat_str(std::get<Rat>(v_));
    case FieldKind::prime_field: return std::get<Int>(v_).get_str();
    case FieldKind::cyclotomic:
      return poly_str(std::get<std::vector<Rat>>(v_),
                      "zeta" + std::to_string(f_.cyclotomic_order()));
    case FieldKind::rational_functions: {
      const Frac& a = std::get<Frac>(v_);
      if (a.den.is_one()) return poly_str(a.num.coeffs(), f_.variable());
      std::vector<Rat> n, d;
      qq_integer_pair(a.num, a.den, n, d);
      return "(" + poly_str(n, f_.variable()) + ")/(" + poly_str(d, f_.variable()) + ")";
    }
  }
  fail(errc::internal, "unreachable field kind");
}

// ---------------------------------------------------------------------------
// Scalar: parsing

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  bool peek_is(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool eat(char c) {
    if (peek_is(c)) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void err(const std::string& what) {
    fail(errc::parse_error,
         "scalar parse error at offset " + std::to_string(pos) + ": " + what + " in \"" +
             std::string(s) + "\"");
  }
  std::string digits() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == start) err("expected digits");
    return std::string(s.substr(start, pos - start));
  }
  // Unsigned rational literal: digits or digits/digits.
  Rat rat_literal() {
    std::string n = digits();
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      std::string d = digits();
      Int den(d);
      if (den == 0) err("zero denominator");
      Rat r{Int(n)};
      r /= Rat(den);
      return r;
    }
    return Rat(Int(n));
  }
  bool starts_with(std::string_view w) {
    skip_ws();
    return s.substr(pos, w.size()) == w;
  }
};

// Parses a signed polynomial expression in a single generator, e.g.
// "zeta3 - 1", "1/2*q^3 + q", "-2". Returns sum of +/- coeff * gen^k.
Scalar parse_poly_expr(Cursor& cur, const FieldSpec& f, const std::string& gen,
                       const Scalar& genval) {
  Scalar acc = Scalar::zero(f);
  bool first = true;
  while (!cur.done()) {
    bool neg = false;
    if (cur.eat('-')) {
      neg = true;
    } else if (cur.eat('+')) {
      if (first) cur.err("unexpected leading '+'");
    } else if (!first) {
      break;  // caller handles what follows (e.g. ')' in fraction form)
    }
    cur.skip_ws();
    Rat coeff(1);
    bool have_coeff = false;
    if (cur.pos < cur.s.size() && cur.s[cur.pos] >= '0' && cur.s[cur.pos] <= '9') {
      coeff = cur.rat_literal();
      have_coeff = true;
    }
    long long k = 0;
    bool have_gen = false;
    if (!have_coeff || cur.eat('*') || cur.starts_with(gen)) {
      if (cur.starts_with(gen)) {
        cur.pos += gen.size();
        have_gen = true;
        k = 1;
        if (cur.eat('^')) k = std::stoll(cur.digits());
      } else if (!have_coeff) {
        cur.err("expected coefficient or generator '" + gen + "'");
      } else {
        cur.err("expected generator '" + gen + "' after '*'");
      }
    }
    Scalar term = Scalar::of_rat(f, coeff);
    if (have_gen) term = term * genval.pow(k);
    if (neg) term = -term;
    acc = acc + term;
    first = false;
  }
  return acc;
}

}  // namespace

Scalar Scalar::parse(const FieldSpec& f, std::string_view text) {
  Cursor cur{text};
  switch (f.kind()) {
    case FieldKind::rationals:
    case FieldKind::prime_field: {
      bool neg = cur.eat('-');
      Rat r = cur.rat_literal();
      if (!cur.done()) cur.err("trailing characters");
      if (neg) r = -r;
      return of_rat(f, r);
    }
    case FieldKind::cyclotomic: {
      std::string gen = "zeta" + std::to_string(f.cyclotomic_order());
      Scalar v = parse_poly_expr(cur, f, gen, generator(f));
      if (!cur.done()) cur.err("trailing characters");
      return v;
    }
    case FieldKind::rational_functions: {
      const std::string& gen = f.variable();
      Scalar q = generator(f);
      if (cur.peek_is('(')) {
        cur.eat('(');
        Scalar num = parse_poly_expr(cur, f, gen, q);
        if (!cur.eat(')')) cur.err("expected ')'");
        if (!cur.eat('/')) cur.err("expected '/'");
        if (!cur.eat('(')) cur.err("expected '('");
        Scalar den = parse_poly_expr(cur, f, gen, q);
        if (!cur.eat(')')) cur.err("expected ')'");
        if (!cur.done()) cur.err("trailing characters");
        if (den.is_zero()) cur.err("zero denominator");
        return num / den;
      }
      Scalar v = parse_poly_expr(cur, f, gen, q);
      if (!cur.done()) cur.err("trailing characters");
      return v;
    }
  }
  fail(errc::internal, "unreachable field kind");
}

// ---------------------------------------------------------------------------
// q-combinatorics

Scalar quantum_integer(long long i, const FieldSpec& field) {
  if (field.kind() != FieldKind::cyclotomic && field.kind() != FieldKind::rational_functions)
    fail(errc::invalid_argument, "quantum integers need a field with a designated q, got " + field.str());
  Scalar q = Scalar::generator(field);
  Scalar d = q - q.inv();
  if (d.is_zero())
    fail(errc::degenerate_q, "quantum integer undefined: q = q^-1 in " + field.str());
  return (q.pow(i) - q.pow(-i)) / d;
}

Scalar gauss_binomial(long long j, long long t, const Scalar& q) {
  if (t < 0 || j < 0 || t > j)
    fail(errc::out_of_range, "gauss_binomial requires 0 <= t <= j, got j=" + std::to_string(j) +
                                 " t=" + std::to_string(t));
  const FieldSpec& f = q.field();
  // q-Pascal: C(a, b) = C(a-1, b-1) + q^b * C(a-1, b). Division-free, so any q works.
  std::vector<Scalar> row(1, Scalar::one(f));
  for (long long a = 1; a <= j; ++a) {
    std::vector<Scalar> next;
    next.reserve(static_cast<std::size_t>(a) + 1);
    for (long long b = 0; b <= a; ++b) {
      Scalar v = Scalar::zero(f);
      if (b > 0) v = v + row[static_cast<std::size_t>(b - 1)];
      if (b < a) v = v + q.pow(b) * row[static_cast<std::size_t>(b)];
      next.push_back(std::move(v));
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(t)];
}

}  // namespace hopfkit
