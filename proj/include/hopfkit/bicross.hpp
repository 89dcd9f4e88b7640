#pragma once
// Sparse engine for the infinite-dimensional co-Frobenius bicrossproduct
// H_n = T_n x kA, where T_n is the Taft algebra at a primitive n-th root of
// unity q = zeta_n over Q(zeta_n) and A = <a> is the free abelian group on one
// generator.  As an algebra H_n is the tensor product T_n (x) kA; the coalgebra
// carries the grading twist
//
//   Delta(c^i x^j (x) a^k)
//     = sum_{0 <= t <= j} binom_q(j, t)
//         (c^{i+t} x^{j-t} (x) a^{t+k}) (x) (c^i x^t (x) a^k),
//   eps(c^i x^j (x) a^k) = delta_{j,0},
//   S(c^i x^j (x) a^k)   = S_T(c^i x^j) (x) a^{-(j+k)}.
//
// The basis is infinite, so every verification here is quantified over a
// basis window |k| <= K (all i, j); each report records its window.  The
// right integral is Lambda = p_{x^{n-1} (x) e}, the distinguished grouplike
// is g = c^{n-1} (x) a^{n-1} (infinite order via the a-grading), and the
// distinguished character alpha has order n with alpha(c (x) e) = q^{-1},
// alpha(x (x) e) = 0, alpha(1 (x) a) = 1.
//
// Functionals are restricted to the finite-support span of the dual basis
// p_b (p_b(m) = delta_{b,m}); this covers Lambda, Lambda o S, and all the
// solving done here.  alpha itself is not finitely supported and lives in
// BicrossCharacter instead, determined by its values on the generators.
// Harpoon conventions match hopf.hpp: f->x = f(x_2)x_1, x<-f = f(x_1)x_2,
// (h->f)(y) = f(yh), (f<-h)(y) = f(hy).

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfkit/hopf.hpp"
#include "hopfkit/radford.hpp"
#include "hopfkit/report.hpp"
#include "hopfkit/scalar.hpp"

namespace hopfkit {

// Basis monomial c^i x^j (x) a^k of H_n; 0 <= i, j < n, k unbounded.
struct BicrossBasis {
  unsigned i = 0;
  unsigned j = 0;
  long long k = 0;
  auto operator<=>(const BicrossBasis&) const = default;
  std::string str() const;  // e.g. "c^2*x(x)a^-1", "1(x)e"
};

// Finitely supported element of H_n; stored coefficients are nonzero.
struct SparseElement {
  unsigned n;
  FieldSpec field;
  std::map<BicrossBasis, Scalar> terms;

  SparseElement(unsigned n_, FieldSpec field_) : n(n_), field(std::move(field_)) {}
  bool is_zero() const { return terms.empty(); }
  Scalar coeff(const BicrossBasis& b) const;
  bool operator==(const SparseElement& o) const;
  bool operator!=(const SparseElement& o) const { return !(*this == o); }
  std::string str() const;
};

// Finitely supported functional sum_b c_b p_b with p_b(m) = delta_{b,m}.
struct SparseFunctional {
  unsigned n;
  FieldSpec field;
  std::map<BicrossBasis, Scalar> terms;

  SparseFunctional(unsigned n_, FieldSpec field_) : n(n_), field(std::move(field_)) {}
  bool is_zero() const { return terms.empty(); }
  Scalar coeff(const BicrossBasis& b) const;     // coefficient of p_b
  Scalar operator()(const SparseElement& x) const;
  bool operator==(const SparseFunctional& o) const;
  bool operator!=(const SparseFunctional& o) const { return !(*this == o); }
  std::string str() const;
};

// Finitely supported tensor in H_n (x) H_n (comultiplication output).
struct SparseTensor {
  unsigned n;
  FieldSpec field;
  std::map<std::pair<BicrossBasis, BicrossBasis>, Scalar> terms;

  SparseTensor(unsigned n_, FieldSpec field_) : n(n_), field(std::move(field_)) {}
  bool is_zero() const { return terms.empty(); }
  bool operator==(const SparseTensor& o) const;
  bool operator!=(const SparseTensor& o) const { return !(*this == o); }
  std::string str() const;
};

// Algebra character of H_n, determined by its values on the generators
// c (x) e, x (x) e, 1 (x) a.  Nilpotency of x forces on_x = 0 for any
// character; the field keeps it for reporting.  eval is the algebra-map
// extension: (i, j, k) -> delta_{j,0} on_c^i on_a^k.
struct BicrossCharacter {
  unsigned n;
  Scalar on_c;
  Scalar on_x;
  Scalar on_a;
  Scalar eval(const BicrossBasis& b) const;
  Scalar operator()(const SparseElement& x) const;
};

// Engine caching the Taft core T_n; all H_n arithmetic routes through the
// finite-dimensional structure constants of taft(n).
class BicrossEngine {
 public:
  explicit BicrossEngine(unsigned n);  // n >= 2; q = zeta_n over Q(zeta_n)

  unsigned n() const { return n_; }
  const FieldSpec& field() const { return field_; }
  const Scalar& q() const { return q_; }
  const HopfPresentation& taft_core() const { return *taft_; }

  SparseElement zero() const;
  SparseElement one() const;
  SparseElement monomial(unsigned i, unsigned j, long long k) const;  // coeff 1
  SparseFunctional zero_functional() const;
  SparseFunctional delta_functional(unsigned i, unsigned j, long long k) const;
  SparseFunctional integral_lambda() const;  // p_{x^{n-1} (x) e}

  // All basis monomials with |k| <= K, ordered; size n*n*(2K+1).
  std::vector<BicrossBasis> window(long long K) const;

  // Structure maps.
  SparseElement mul(const SparseElement& a, const SparseElement& b) const;
  SparseTensor comul(const SparseElement& a) const;
  Scalar counit(const SparseElement& a) const;
  // Negative powers use the composition inverse S^{-1}(c^i x^j (x) a^k) =
  // S_T^{-1}(c^i x^j) (x) a^{-(j+k)}.
  SparseElement antipode(const SparseElement& a, long long power = 1) const;

  // Element arithmetic.
  SparseElement add(const SparseElement& a, const SparseElement& b) const;
  SparseElement scale(const Scalar& c, const SparseElement& a) const;

  // Harpoon actions on elements (f evaluated through comul).
  SparseElement act_left(const SparseFunctional& f, const SparseElement& x) const;
  SparseElement act_right(const SparseElement& x, const SparseFunctional& f) const;
  SparseElement act_left(const BicrossCharacter& f, const SparseElement& x) const;
  SparseElement act_right(const SparseElement& x, const BicrossCharacter& f) const;

  // Harpoon actions on functionals; finitely supported in and out.
  SparseFunctional act_left(const SparseElement& h, const SparseFunctional& f) const;
  SparseFunctional act_right(const SparseFunctional& f, const SparseElement& h) const;

  // Distinguished data.
  // g solved from h_1 Lambda(h_2) = Lambda(h) g at the witness h with
  // Lambda(h) = 1, then verified on the whole window; errc::inconsistent_grouplike.
  SparseElement distinguished_g(long long K) const;
  // alpha via the Omega route: solve Omega(h) -> Lambda = Lambda <- h for
  // every window monomial h (errc::singular_action on failure), set
  // alpha^{-1} = eps o Omega, read alpha off the generators and assert the
  // postconditions (primitive n-th root at c (x) e, 0 at x (x) e, 1 at
  // 1 (x) a, order n).
  BicrossCharacter distinguished_alpha(long long K = 4) const;
  BicrossCharacter character_inverse(const BicrossCharacter& a) const;

  // Order searches (least m <= bound with the m-th power the identity).
  OrderResult order_of_antipode(long long K, unsigned long bound) const;
  OrderResult order_of_grouplike(const SparseElement& g, unsigned long bound) const;
  OrderResult order_of_character(const BicrossCharacter& a, unsigned long bound) const;

  // Window-quantified verification batteries; reports record the window.
  VerificationReport axioms_window(long long K) const;
  VerificationReport integrals_window(long long K) const;
  VerificationReport radford_window(long long K) const;
  VerificationReport battery(long long K) const;

 private:
  unsigned n_;
  FieldSpec field_;
  Scalar q_;
  HopfPtr taft_;
};

// Free-function surface; each call builds the engine for the operand's n.
SparseElement bicross_mul(const SparseElement& a, const SparseElement& b);
SparseTensor bicross_comul(const SparseElement& a);
Scalar bicross_counit(const SparseElement& a);
SparseElement bicross_antipode(const SparseElement& a, long long power = 1);

// Lambda(h_1) h_2 = Lambda(h) 1 for every basis monomial with |k| <= K.
VerificationReport verify_right_integral(unsigned n, long long K);
SparseElement distinguished_g_bicross(unsigned n, long long K);
BicrossCharacter distinguished_alpha_bicross(unsigned n);
// S^4(h) = g (alpha -> h <- alpha^{-1}) g^{-1} basis-wise on the window.
VerificationReport verify_s4_bicross(unsigned n, long long K);

}  // namespace hopfkit
