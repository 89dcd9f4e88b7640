#pragma once
// Integral spaces of a finite-dimensional Hopf presentation, the distinguished
// grouplike elements alpha (in H*) and g (in H), the generalized Nakayama
// automorphism chi and its twin Omega, and verification batteries for the
// classical identities connecting them (Radford-style normalized-integral
// identities, antipode pullbacks of lambda, trace-form integrals).

#include "hopfkit/hopf.hpp"
#include "hopfkit/report.hpp"

namespace hopfkit {

// The four one-dimensional integral spaces, one normalized representative
// each (first nonzero coordinate equal to 1 in fixed basis order):
//   left_H      t       with  h t = eps(h) t
//   right_H     T       with  T h = eps(h) T
//   left_Hstar  lambda  with  h1 lambda(h2) = lambda(h) 1
//   right_Hstar Lambda  with  Lambda(h1) h2 = Lambda(h) 1
struct IntegralData {
  ElementFD left_H;
  ElementFD right_H;
  FunctionalFD left_Hstar;
  FunctionalFD right_Hstar;
};

struct GrouplikeData {
  FunctionalFD alpha;      // character with t h = alpha(h) t
  FunctionalFD alpha_inv;  // alpha o S, convolution inverse of alpha
  ElementFD g;             // grouplike with h1 Lambda(h2) = Lambda(h) g
  ElementFD g_inv;         // S(g)
};

// Solves the four stacked linear systems {defining equation at every basis
// element}. Each solution space must be exactly one-dimensional; anything
// else signals a corrupt presentation (errc::integral_dimension).
IntegralData compute_integrals(const HopfPtr& h);

// alpha solved coordinate-wise from t e_i = alpha(e_i) t, then re-verified
// against the defining equation and the character axioms
// (errc::inconsistent_grouplike on any mismatch).
FunctionalFD distinguished_alpha(const HopfPtr& h, const IntegralData& integrals);

// g solved from h1 Lambda(h2) = Lambda(h) g at a basis element with
// Lambda(h) != 0, then re-verified for every basis h together with the
// grouplike axioms (errc::inconsistent_grouplike).
ElementFD distinguished_g(const HopfPtr& h, const IntegralData& integrals);

// Bundles alpha, g and their inverses; the inverse laws
// alpha * (alpha o S) = eps and g S(g) = 1 are asserted.
GrouplikeData compute_grouplikes(const HopfPtr& h, const IntegralData& integrals);

// The generalized Nakayama automorphism: the algebra automorphism chi with
//   h -> lambda = lambda <- chi(h),  i.e.  lambda(x y) = lambda(chi(y) x).
// Solved from the action matrix of lambda, which is invertible for a genuine
// integral (errc::singular_action otherwise). The defining equation and the
// automorphism property are asserted on the result.
Matrix nakayama_chi(const HopfPtr& h, const IntegralData& integrals);

// Twin map Omega with Omega(h) -> Lambda = Lambda <- h. Asserts
// Omega = S^-1 chi S = S chi S^-1 and eps o Omega = alpha^-1.
Matrix nakayama_omega(const HopfPtr& h, const IntegralData& integrals);

// Closed forms for chi: chi(h) = alpha(h2) S^-2(h1), and the conjugated
// variant chi(h) = alpha(h1) g^-1 S^2(h2) g. Both agree with nakayama_chi
// on every consistent presentation; the battery checks this.
Matrix chi_closed_form(const HopfPtr& h, const GrouplikeData& grouplikes);
Matrix chi_conjugated_form(const HopfPtr& h, const GrouplikeData& grouplikes);

// Identities for the pair (t, Lambda) rescaled so that
// t <- Lambda = Lambda(t1) t2 = 1 (the rescaling is always possible for a
// consistent presentation; Lambda(t) = 0 raises errc::internal):
//   normalized-lambda-right-integral   the rescaled Lambda stays in the
//                                      right integral space of H*
//   integral-preimage-forms            for every basis h, the unique h* with
//                                      h = t <- h* equals Lambda <- S(h) and
//                                      alpha(h2) S^-1(h1) -> Lambda
//   integral-comult-twist              Delta(t) = S^2(t2) g (x) t1
VerificationReport verify_normalized_integral_identities(const HopfPtr& h,
                                                         const IntegralData& integrals,
                                                         const GrouplikeData& grouplikes);

// The maps f |-> f -> l and f |-> l <- f from H* to H are bijections when l
// is a nonzero integral; checked as rank-n of the two action matrices.
VerificationReport verify_bijections(const HopfPtr& h, const ElementFD& l,
                                     const std::string& label);
VerificationReport verify_bijections(const HopfPtr& h, const IntegralData& integrals);

// Pullbacks of lambda along antipode powers:
//   lambda o S = g^-1 -> lambda, lambda o S^-1 = lambda <- g^-1,
//   lambda o S^2 = g^-1 -> lambda <- g.
VerificationReport verify_antipode_pullbacks(const HopfPtr& h, const IntegralData& integrals,
                                             const GrouplikeData& grouplikes);

// Trace-form integrals from a dual basis {e_i}/{e^i}:
//   r      = sum <e^i, S^2((e_i)_1)> (e_i)_2   (right integral in H)
//   t      = sum <e^i, S^2((e_i)_2)> (e_i)_1   (left integral in H)
//   lambda = sum S^2(e_i) -> e^i               (left integral in H*)
//   Lambda = sum e^i <- S^2(e_i)               (right integral in H*)
// r and t are nonzero iff H is cosemisimple; lambda and Lambda are nonzero
// iff H is semisimple; eps(r) = eps(t) = Tr(S^2) = lambda(1) = Lambda(1).
struct TraceIntegrals {
  ElementFD right_H;
  ElementFD left_H;
  FunctionalFD left_Hstar;
  FunctionalFD right_Hstar;
  Scalar trace_s2;
};
TraceIntegrals trace_integrals(const HopfPtr& h);
VerificationReport verify_trace_integrals(const HopfPtr& h, const IntegralData& integrals);

// Maschke-style detection used throughout the batteries.
bool is_semisimple(const HopfPtr& h, const IntegralData& integrals);    // eps(t) != 0
bool is_cosemisimple(const HopfPtr& h, const IntegralData& integrals);  // lambda(1) != 0

// The full named-check battery over all of the above, in fixed order.
VerificationReport integrals_battery(const HopfPtr& h);

}  // namespace hopfkit
