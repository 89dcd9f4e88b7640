#pragma once
// Exact scalar arithmetic over the four coefficient fields the engine supports:
// Q, F_p, the cyclotomic fields Q(zeta_n), and the rational function field Q(q).
// Every value is kept in a canonical form so that operator== and str() agree.

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hopfkit {

using Int = mpz_class;
using Rat = mpq_class;

enum class errc {
  division_by_zero,
  field_mismatch,
  degenerate_q,
  out_of_range,
  invalid_argument,
  algebra_mismatch,
  integral_dimension,
  inconsistent_grouplike,
  singular_action,
  axiom_failure,
  parse_error,
  unknown_preset,
  io_error,
  internal,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

// Dense univariate polynomial over Q; index k holds the coefficient of x^k,
// with no stored leading zeros (zero polynomial = empty vector).
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(const Rat& constant);
  explicit QPoly(long constant);
  static QPoly monomial(std::size_t k, const Rat& coeff = Rat(1));
  static QPoly from_coeffs(std::vector<Rat> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const Rat& leading() const;
  Rat coeff(std::size_t k) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator-() const;
  QPoly operator*(const QPoly& o) const;
  QPoly scaled(const Rat& c) const;
  QPoly monic() const;

  // a = q*b + r with deg r < deg b; b must be nonzero.
  static void divrem(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
  static QPoly gcd(QPoly a, QPoly b);  // monic gcd, gcd(0,0) = 0

  bool operator==(const QPoly& o) const { return c_ == o.c_; }

 private:
  std::vector<Rat> c_;
  void trim();
};

// The n-th cyclotomic polynomial Phi_n (integer coefficients, monic).
const QPoly& cyclotomic_polynomial(unsigned n);

enum class FieldKind { rationals, prime_field, cyclotomic, rational_functions };

class FieldSpec {
 public:
  static FieldSpec rationals();
  static FieldSpec prime_field(const Int& p);  // p must be prime
  static FieldSpec cyclotomic(unsigned n);     // n >= 1
  static FieldSpec rational_functions(std::string variable = "q");

  FieldKind kind() const { return d_->kind; }
  const Int& prime() const;
  unsigned cyclotomic_order() const;
  // Degree of the field over its prime field presentation: deg Phi_n for
  // cyclotomic fields, 1 otherwise.
  unsigned extension_degree() const;
  const QPoly& modulus() const;  // Phi_n, cyclotomic only
  const std::string& variable() const;
  Int characteristic() const;  // p for prime fields, else 0
  bool operator==(const FieldSpec& o) const;
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }
  std::string str() const;  // "Q" | "Fp:5" | "cyclotomic:3" | "Qq"

 private:
  struct Data {
    FieldKind kind;
    Int p;            // prime_field
    unsigned n = 0;   // cyclotomic
    QPoly phi;        // cyclotomic
    std::string var;  // rational_functions
  };
  explicit FieldSpec(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

class Scalar {
 public:
  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar of_int(const FieldSpec& f, long v);
  static Scalar of_int(const FieldSpec& f, const Int& v);
  // Embeds a rational; for F_p the denominator must be invertible mod p.
  static Scalar of_rat(const FieldSpec& f, const Rat& v);
  // zeta_n for cyclotomic fields, q for rational functions; error otherwise.
  static Scalar generator(const FieldSpec& f);
  // Cyclotomic element from coefficients of powers of zeta (any length; reduced mod Phi_n).
  static Scalar cyclotomic_from(const FieldSpec& f, const std::vector<Rat>& coeffs);
  // Rational function num/den; den must be nonzero.
  static Scalar fraction(const FieldSpec& f, const QPoly& num, const QPoly& den);
  static Scalar parse(const FieldSpec& f, std::string_view text);

  const FieldSpec& field() const { return f_; }
  bool is_zero() const;
  bool is_one() const;
  bool operator==(const Scalar& o) const;  // field_mismatch across fields
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar inv() const;
  Scalar pow(long long k) const;

  std::string str() const;  // canonical; parse(field, str()) == *this

  // Representation accessors (serialization and tests).
  const Rat& as_rat() const;                  // rationals
  const Int& as_residue() const;              // prime_field, in [0, p)
  const std::vector<Rat>& as_cyclo() const;   // cyclotomic, length = extension_degree
  const QPoly& num() const;                   // rational_functions
  const QPoly& den() const;                   // rational_functions, monic

 private:
  struct Frac {
    QPoly num, den;
    bool operator==(const Frac& o) const = default;
  };
  Scalar(FieldSpec f, Rat v) : f_(std::move(f)), v_(std::move(v)) {}
  Scalar(FieldSpec f, Int v) : f_(std::move(f)), v_(std::move(v)) {}
  Scalar(FieldSpec f, std::vector<Rat> v) : f_(std::move(f)), v_(std::move(v)) {}
  Scalar(FieldSpec f, Frac v) : f_(std::move(f)), v_(std::move(v)) {}

  FieldSpec f_;
  std::variant<Rat, Int, std::vector<Rat>, Frac> v_;
};

// The balanced quantum integer [i] = (q^i - q^-i)/(q - q^-1) evaluated at the
// field generator; requires a cyclotomic or rational-function field and a
// non-degenerate q (q != q^-1).
Scalar quantum_integer(long long i, const FieldSpec& field);

// Gaussian binomial {j choose t}_q via the q-Pascal recursion; 0 <= t <= j.
Scalar gauss_binomial(long long j, long long t, const Scalar& q);

}  // namespace hopfkit
