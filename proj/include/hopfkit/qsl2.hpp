#pragma once
// Symbolic engine for the quantized coordinate ring k[SL_q(2)] over Q(q),
// q transcendental (not a root of unity).  Generators a, b, c, d satisfy
//
//   ba = q ab,  ca = q ac,  db = q bd,  dc = q cd,  bc = cb,
//   da - q bc = 1,  ad - q^{-1} bc = 1,
//
// with PBW basis a^i b^j c^k d^l (i = 0 or l = 0).  The coalgebra is
//
//   Delta(a) = a(x)a + b(x)c,   Delta(b) = a(x)b + b(x)d,
//   Delta(c) = c(x)a + d(x)c,   Delta(d) = c(x)b + d(x)d,
//   eps(a) = eps(d) = 1,  eps(b) = eps(c) = 0,
//   S(a) = d,  S(b) = -q b,  S(c) = -q^{-1} c,  S(d) = a,
//
// so S(a^i b^j c^k d^l) = (-1)^{j+k} q^{j-k} a^l b^j c^k d^i and S^2 scales
// a monomial by q^{2(j-k)} (infinite antipode order).  The left integral is
// lambda((bc)^m) = (-1)^m/[m+1] with [i] = (q^i - q^{-i})/(q - q^{-1}), zero
// on every other basis monomial; the distinguished grouplike in H is 1, and
// the distinguished character has alpha(a) = q^{-2}, alpha(b) = alpha(c) = 0,
// alpha(d) = q^2, with chi(a) = q^{-2} a, chi(b) = b, chi(c) = c,
// chi(d) = q^2 d.
//
// The basis is infinite, so every functional identity is checked on a degree
// window (total degree <= D); reports disclose the window.  Harpoon
// conventions match hopf.hpp: (h -> f)(y) = f(yh), (f <- h)(y) = f(hy).

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopfkit/radford.hpp"
#include "hopfkit/report.hpp"
#include "hopfkit/scalar.hpp"

namespace hopfkit {

// The shared coefficient field Q(q).
const FieldSpec& qsl_field();
Scalar qsl_q();

enum class QslGen : unsigned char { a = 0, b = 1, c = 2, d = 3 };

// PBW basis monomial a^i b^j c^k d^l with i = 0 or l = 0.
struct PBWMonomial {
  unsigned i = 0, j = 0, k = 0, l = 0;
  auto operator<=>(const PBWMonomial&) const = default;
  unsigned degree() const { return i + j + k + l; }
  std::string str() const;
};

// Finitely supported element; coefficients nonzero, monomials normal-formed.
struct QslElement {
  std::map<PBWMonomial, Scalar> terms;
  bool is_zero() const { return terms.empty(); }
  Scalar coeff(const PBWMonomial& m) const;
  bool operator==(const QslElement& o) const { return terms == o.terms; }
  bool operator!=(const QslElement& o) const { return !(*this == o); }
  std::string str() const;
};

// Finitely supported tensor in H (x) H.
struct QslTensor {
  std::map<std::pair<PBWMonomial, PBWMonomial>, Scalar> terms;
  bool is_zero() const { return terms.empty(); }
  bool operator==(const QslTensor& o) const { return terms == o.terms; }
  bool operator!=(const QslTensor& o) const { return !(*this == o); }
  std::string str() const;
};

QslElement qsl_zero();
QslElement qsl_one();
// a^i b^j c^k d^l; errc::invalid_argument unless i = 0 or l = 0.
QslElement qsl_monomial(unsigned i, unsigned j, unsigned k, unsigned l);
QslElement qsl_gen(QslGen g);

QslElement qsl_add(const QslElement& u, const QslElement& v);
QslElement qsl_scale(const Scalar& c, const QslElement& u);

// Rewrite a generator word to the PBW basis (right-fold through the closed
// commutation forms; the inhomogeneous relations eliminate mixed a...d).
QslElement normal_form(const std::vector<QslGen>& word);
QslElement normal_form(std::string_view word);  // letters 'a', 'b', 'c', 'd'

QslElement qsl_mul(const QslElement& u, const QslElement& v);
QslTensor qsl_comul(const QslElement& u);
Scalar qsl_counit(const QslElement& u);
// Negative powers use S^{-1}(a) = d, S^{-1}(b) = -q^{-1} b,
// S^{-1}(c) = -q c, S^{-1}(d) = a.
QslElement qsl_antipode(const QslElement& u, long long power = 1);

// The left integral: (-1)^m/[m+1] on b^m c^m, 1 at 1, zero elsewhere.
Scalar lambda_eval(const QslElement& u);

// All PBW basis monomials of total degree <= D.
std::vector<PBWMonomial> qsl_basis_window(unsigned D);

// alpha on (a, b, c, d): (q^-2, 0, 0, q^2).
std::vector<Scalar> qsl_alpha_values();
// alpha extended as an algebra map: zero on positive b/c-degree, q^{2(l-i)}
// on a^i d^l.
Scalar qsl_alpha_eval(const PBWMonomial& m);
// chi on the generators.
QslElement qsl_chi(QslGen g);

// Power search on the generator set; q is not a root of unity, so the result
// exceeds every bound (S^{2m}(b) = q^{2m} b).
OrderResult qsl_antipode_order(unsigned long bound);

// The antipode-order measurement plus the hard S^{2m}(b) = q^{2m} b != b
// scaling assertion for 1 <= m <= bound; shared by the battery and the
// command-line front end.
VerificationReport qsl_order_checks(unsigned long bound = 12);

// h_1 lambda(h_2) = lambda(h) 1 on the degree window, plus the pinned
// lambda values.
VerificationReport verify_left_integral(unsigned D);
// (1) u -> lambda = lambda <- chi(u) on the window for each generator,
// (2) chi(u) = alpha(u_2) S^{-2}(u_1), (3) lambda(h_1) h_2 = lambda(h) 1
// (the distinguished grouplike of H is trivial), (4) alpha is a character.
VerificationReport verify_chi_alpha(unsigned D);
// Hopf-axiom battery on degree windows, rewriting consistency included.
VerificationReport qsl_axioms(unsigned D);
// Everything above plus the antipode-order probes.
VerificationReport qsl_battery(unsigned D);

}  // namespace hopfkit
