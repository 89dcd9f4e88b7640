#pragma once
// Verification batteries for the antipode-fourth-power conjugation formula
// S^4(h) = g (alpha -> h <- alpha^-1) g^-1, the equivalence theorems tying
// involutory / semisimple / cosemisimple together, and finite-order search
// for the antipode and the distinguished grouplikes.
//
// Two kinds of report entries appear here. Assertions are genuine pass/fail
// checks (a fail always carries a witness). Measurements record the truth
// value of a condition that is allowed to be false — e.g. "is this algebra
// involutory" — as a pass-status entry whose detail begins "value: true" or
// "value: false"; the batteries then assert the documented relations between
// the measured values (biconditionals, unanimity) as first-class checks.

#include <optional>
#include <string>

#include "hopfkit/hopf.hpp"
#include "hopfkit/integrals.hpp"
#include "hopfkit/report.hpp"

namespace hopfkit {

// Least positive m <= bound whose m-th power is the identity; exceeds-bound
// (empty value) when no such m exists in range. Search never loops: user
// data is not guaranteed to have finite order.
struct OrderResult {
  std::optional<unsigned long> value;
  unsigned long bound = 0;
  bool exceeds_bound() const { return !value.has_value(); }
  std::string str() const;  // "6" or "exceeds-bound(100)"
};

// Default search cutoff: 4 * dim(H)^2.
unsigned long default_order_bound(const HopfPtr& h);

OrderResult order_of_map(const Matrix& m, unsigned long bound);
OrderResult order_of_grouplike(const ElementFD& g, unsigned long bound);
OrderResult order_of_character(const FunctionalFD& a, unsigned long bound);

struct AntipodeOrders {
  OrderResult antipode;          // order of S
  OrderResult antipode_squared;  // order of S^2
  OrderResult alpha;             // convolution order of alpha
  OrderResult g;                 // group order of g
};
AntipodeOrders antipode_orders(const HopfPtr& h, const GrouplikeData& grouplikes,
                               unsigned long bound);

// S^4(h) = g (alpha -> h <- alpha^-1) g^-1 for every basis element h,
// compared exactly (matrix fourth power vs harpoon actions).
VerificationReport verify_s4(const HopfPtr& h, const GrouplikeData& grouplikes);

// The two closed forms of the Nakayama automorphism agree as matrices:
// alpha(h2) S^-2(h1) versus alpha(h1) g^-1 S^2(h2) g.
VerificationReport verify_chi_forms(const HopfPtr& h, const GrouplikeData& grouplikes);

// Iterating the fourth-power formula: S^{4m}(h) = g^m (alpha^m -> h <- alpha^-m) g^-m
// for every 1 <= m <= limit.
VerificationReport verify_s4_iterates(const HopfPtr& h, const GrouplikeData& grouplikes,
                                      unsigned long limit);

// Measures (a) lambda cocommutative, (b) S^2 = id, (c) alpha = eps,
// (d) Delta(t) flip-invariant, (e) g = 1, and asserts the biconditionals
//   cocomm-dual-integral-iff  (a) <=> (b) and (c)
//   cocomm-integral-iff       (d) <=> (b) and (e)
VerificationReport cocommutative_integral_checks(const HopfPtr& h,
                                                 const IntegralData& integrals);

// Larson-style equivalence for the four conditions
//   (i)   cosemisimple and involutory
//   (ii)  some nonzero integral lambda in H* has lambda(S(h2) h1) = eps(h)
//   (iii) some nonzero integral lambda in H* has lambda(h2 S(h1)) = eps(h)
//   (iv)  cosemisimple with a cocommutative integral in H*
// Candidates for (ii)/(iii) are the integral representatives rescaled to
// lambda(1) = 1; when lambda(1) = 0 no candidate exists, the rescale entry
// is not-applicable and the conditions are tested unrescaled (they must then
// evaluate false). Under the hypotheses g = 1 and lambda o S = lambda, the
// symmetry of B(x, y) = lambda(x S(y)) is asserted equivalent to S^2 = id;
// otherwise that entry is not-applicable.
VerificationReport larson_checks(const HopfPtr& h, const IntegralData& integrals);

// The six-condition battery ("mainss" on the command line):
//   i)   semisimple and cosemisimple       iv)  S(t2)t1 or t2 S(t1) a nonzero
//   ii)  S^2 = id                               scalar multiple of 1, for t a
//   iii) cocommutative integral in H            left or right integral
//   v)   cocommutative integral in H*      vi)  the Larson conditions
// Condition iv) accepts any nonzero scalar: the normalized representative
// may differ from an integral with S(t2)t1 = 1 by rescaling. When
// dim(H) 1 != 0 in k the battery asserts mainss-unanimity (all six agree);
// otherwise that entry is not-applicable and carries the raw truth vector.
VerificationReport semisimplicity_battery(const HopfPtr& h, const IntegralData& integrals);

// Dual-basis trace forms with S^2 dropped:
//   t_a = sum <e^i, (e_i)_1> (e_i)_2     t_b = sum <e^i, (e_i)_2> (e_i)_1
//   l_a = sum e_i -> e^i                 l_b = sum e^i <- e_i
// Gated on semisimple and cosemisimple (every entry not-applicable
// otherwise); asserts t_a = t_b and l_a = l_b, nonzeroness, cocommutativity,
// and two-sided membership in the integral spaces.
VerificationReport verify_involutory_trace_forms(const HopfPtr& h,
                                                 const IntegralData& integrals);

// All of the above plus order measurements ("order-antipode", ...) and the
// doubling assertion order(S) = 2 order(S^2) when S^2 != id. Checks are
// merged and sorted by name so the report order is deterministic regardless
// of evaluation order.
VerificationReport radford_battery(const HopfPtr& h);

}  // namespace hopfkit
