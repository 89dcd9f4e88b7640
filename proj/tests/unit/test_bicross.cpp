// Sparse bicrossproduct H_n = T_n x kA: structure maps against hand-expanded
// monomials, the window-quantified integral/grouplike/character solves, the
// S^4 conjugation identity, and the Taft-embedding twist.
#include <string>
#include <vector>

#include "doctest.h"
#include "hopfkit/bicross.hpp"
#include "hopfkit/constructions.hpp"

using namespace hopfkit;

namespace {

BicrossBasis key(unsigned i, unsigned j, long long k) { return BicrossBasis{i, j, k}; }

// Independent identity probe: apply the engine antipode m times to every
// window monomial and ask whether each came back unchanged.
bool antipode_power_is_identity(const BicrossEngine& eng, long long K, long long m) {
  for (const BicrossBasis& b : eng.window(K)) {
    SparseElement h = eng.monomial(b.i, b.j, b.k);
    if (!(eng.antipode(h, m) == h)) return false;
  }
  return true;
}

const CheckResult* require_check(const VerificationReport& rep, const std::string& name) {
  const CheckResult* c = rep.find(name);
  REQUIRE(c != nullptr);
  return c;
}

}  // namespace

TEST_CASE("bicross structure maps on hand-expanded monomials") {
  BicrossEngine eng(2);
  const FieldSpec& f = eng.field();
  Scalar q = eng.q();
  REQUIRE(q == -Scalar::one(f));

  SparseElement one = eng.one();
  SparseElement c = eng.monomial(1, 0, 0);
  SparseElement x = eng.monomial(0, 1, 0);
  SparseElement a = eng.monomial(0, 0, 1);

  // Algebra: the Taft twist lives on the first leg, the group leg is free.
  CHECK(eng.mul(x, c) == eng.scale(q, eng.monomial(1, 1, 0)));
  CHECK(eng.mul(c, x) == eng.monomial(1, 1, 0));
  CHECK(eng.mul(x, x).is_zero());
  CHECK(eng.mul(c, c) == one);
  CHECK(eng.mul(a, eng.monomial(0, 0, -1)) == one);
  CHECK(eng.mul(eng.monomial(1, 0, 1), eng.monomial(0, 1, -1)) == eng.monomial(1, 1, 0));

  // Counit kills positive x-degree and is 1 on the grouplike span.
  CHECK(eng.counit(c).is_one());
  CHECK(eng.counit(eng.monomial(1, 0, -3)).is_one());
  CHECK(eng.counit(x).is_zero());
  CHECK(eng.counit(eng.add(c, eng.scale(Scalar::of_int(f, 5), x))) == Scalar::one(f));

  // Delta(x (x) e) = (x (x) e)(x)(1 (x) e) + (c (x) a)(x)(x (x) e).
  SparseTensor dx = eng.comul(x);
  REQUIRE(dx.terms.size() == 2);
  CHECK(dx.terms.at({key(0, 1, 0), key(0, 0, 0)}).is_one());
  CHECK(dx.terms.at({key(1, 0, 1), key(0, 1, 0)}).is_one());

  // Delta(x (x) a) shifts both group legs by the ambient a and twists the left.
  SparseTensor dxa = eng.comul(eng.monomial(0, 1, 1));
  REQUIRE(dxa.terms.size() == 2);
  CHECK(dxa.terms.at({key(0, 1, 1), key(0, 0, 1)}).is_one());
  CHECK(dxa.terms.at({key(1, 0, 2), key(0, 1, 1)}).is_one());

  // Grouplikes: Delta(1 (x) a^k) = (1 (x) a^k) (x) (1 (x) a^k).
  for (long long k = -3; k <= 3; ++k) {
    SparseTensor d = eng.comul(eng.monomial(0, 0, k));
    REQUIRE(d.terms.size() == 1);
    CHECK(d.terms.at({key(0, 0, k), key(0, 0, k)}).is_one());
  }
  SparseTensor dca = eng.comul(eng.monomial(1, 0, -2));
  REQUIRE(dca.terms.size() == 1);
  CHECK(dca.terms.at({key(1, 0, -2), key(1, 0, -2)}).is_one());

  // S(x (x) a^0) = S_T(x) (x) a^{-1} = (-c*x) (x) a^{-1}.
  CHECK(eng.antipode(x) == eng.scale(-Scalar::one(f), eng.monomial(1, 1, -1)));
  // S(1 (x) a^k) inverts the group leg.
  CHECK(eng.antipode(a) == eng.monomial(0, 0, -1));
  CHECK(eng.antipode(eng.monomial(1, 0, 2)) == eng.monomial(1, 0, -2));
  // S^2(x (x) e) = q (x (x) e); S^4 is the identity there.
  CHECK(eng.antipode(x, 2) == eng.scale(q, x));
  CHECK(eng.antipode(x, 4) == x);
  // Composition inverse round-trips.
  for (const BicrossBasis& b : eng.window(2)) {
    SparseElement h = eng.monomial(b.i, b.j, b.k);
    CHECK(eng.antipode(eng.antipode(h), -1) == h);
    CHECK(eng.antipode(eng.antipode(h, -2), 2) == h);
  }

  // Free-function surface mirrors the engine.
  CHECK(bicross_mul(c, x) == eng.monomial(1, 1, 0));
  CHECK(bicross_counit(x).is_zero());
  CHECK(bicross_antipode(x, 2) == eng.scale(q, x));
  CHECK(bicross_comul(a).terms.size() == 1);
}

TEST_CASE("bicross structure maps at n = 3") {
  BicrossEngine eng(3);
  Scalar q = eng.q();
  SparseElement x = eng.monomial(0, 1, 0);

  // Gaussian binomial [2 choose 1]_q = 1 + q shows up in Delta(x^2 (x) e).
  SparseTensor dx2 = eng.comul(eng.monomial(0, 2, 0));
  REQUIRE(dx2.terms.size() == 3);
  CHECK(dx2.terms.at({key(0, 2, 0), key(0, 0, 0)}).is_one());
  CHECK(dx2.terms.at({key(1, 1, 1), key(0, 1, 0)}) == Scalar::one(eng.field()) + q);
  CHECK(dx2.terms.at({key(2, 0, 2), key(0, 2, 0)}).is_one());

  // S^2 scales x (x) e by q, S^{2m} by q^m.
  CHECK(eng.antipode(x, 2) == eng.scale(q, x));
  CHECK(eng.antipode(x, 4) == eng.scale(q * q, x));
  CHECK(eng.antipode(x, 6) == x);

  // The displayed Nakayama-style commutation at h = c*x (x) e, r = c^2*x (x) e:
  // q (r h) = h r with both sides proportional to x^2 (x) e.
  SparseElement h = eng.monomial(1, 1, 0);
  SparseElement r = eng.monomial(2, 1, 0);
  CHECK(eng.mul(r, h) == eng.scale(q, eng.monomial(0, 2, 0)));
  CHECK(eng.mul(h, r) == eng.scale(q * q, eng.monomial(0, 2, 0)));
  CHECK(eng.scale(q, eng.mul(r, h)) == eng.mul(h, r));
}

TEST_CASE("bicross right integral on windows") {
  VerificationReport r2 = verify_right_integral(2, 3);
  CHECK(r2.ok());
  const CheckResult* ri = require_check(r2, "bicross-right-integral");
  CHECK(ri->status == CheckStatus::pass);
  CHECK(ri->detail.find("28 basis monomials") != std::string::npos);
  CHECK(require_check(r2, "bicross-lambda-delta")->status == CheckStatus::pass);

  CHECK(verify_right_integral(3, 2).ok());

  // Lambda = p_{x^{n-1} (x) e}: value 1 at the peak, 0 elsewhere.
  for (unsigned n : {2u, 3u}) {
    BicrossEngine eng(n);
    SparseFunctional L = eng.integral_lambda();
    CHECK(L(eng.monomial(0, n - 1, 0)).is_one());
    for (const BicrossBasis& b : eng.window(2)) {
      Scalar v = L(eng.monomial(b.i, b.j, b.k));
      if (b.i == 0 && b.j == n - 1 && b.k == 0)
        CHECK(v.is_one());
      else
        CHECK(v.is_zero());
    }
  }
}

TEST_CASE("bicross distinguished grouplike and its infinite order") {
  BicrossEngine e2(2);
  SparseElement g2 = distinguished_g_bicross(2, 3);
  CHECK(g2 == e2.monomial(1, 0, 1));

  BicrossEngine e3(3);
  SparseElement g3 = distinguished_g_bicross(3, 3);
  CHECK(g3 == e3.monomial(2, 0, 2));

  // Solving needs the window to reach the a-exponent of g.
  CHECK_THROWS_AS((void)e3.distinguished_g(2), error);

  // The a-grading makes every power search run out: a-exponent of g^m is
  // m(n-1) != 0.
  for (unsigned long bound : {7ul, 100ul}) {
    OrderResult og = e2.order_of_grouplike(g2, bound);
    CHECK(og.exceeds_bound());
    CHECK(og.str() == "exceeds-bound(" + std::to_string(bound) + ")");
  }
  CHECK(e3.order_of_grouplike(g3, 100).exceeds_bound());
  // Sanity: the search does find finite orders, e.g. c (x) e at n = 2.
  OrderResult oc = e2.order_of_grouplike(e2.monomial(1, 0, 0), 10);
  REQUIRE(oc.value.has_value());
  CHECK(*oc.value == 2);
}

TEST_CASE("bicross distinguished character via the integral actions") {
  BicrossEngine e2(2);
  BicrossCharacter a2 = distinguished_alpha_bicross(2);
  CHECK(a2.on_c == -Scalar::one(e2.field()));
  CHECK(a2.on_x.is_zero());
  CHECK(a2.on_a.is_one());
  OrderResult o2 = e2.order_of_character(a2, 10);
  REQUIRE(o2.value.has_value());
  CHECK(*o2.value == 2);

  BicrossEngine e3(3);
  BicrossCharacter a3 = e3.distinguished_alpha(2);
  // alpha(c (x) e) = q^{-1}: the solve returns eps o Omega inverted.
  CHECK(a3.on_c == e3.q().inv());
  CHECK(a3.on_a.is_one());
  OrderResult o3 = e3.order_of_character(a3, 10);
  REQUIRE(o3.value.has_value());
  CHECK(*o3.value == 3);

  // alpha evaluates like a character: 0 on positive x-degree, multiplicative
  // on the grouplike span.
  CHECK(a3.eval(key(0, 1, 0)).is_zero());
  CHECK(a3.eval(key(2, 0, 5)) == a3.on_c * a3.on_c);
  CHECK(a3.eval(key(1, 0, -4)) == a3.on_c);

  // The inverse character undoes it on the grouplike span.
  BicrossCharacter inv3 = e3.character_inverse(a3);
  CHECK(a3.eval(key(1, 0, 0)) * inv3.eval(key(1, 0, 0)) == Scalar::one(e3.field()));
}

TEST_CASE("bicross S^4 conjugation formula") {
  // n = 2, h = x (x) e by hand: the twist contributes q and the conjugation
  // another q, so both sides equal q^2 (x (x) e) = x (x) e.
  BicrossEngine e2(2);
  SparseElement x = e2.monomial(0, 1, 0);
  BicrossCharacter alpha = e2.distinguished_alpha(2);
  BicrossCharacter ainv = e2.character_inverse(alpha);
  SparseElement inner = e2.act_right(e2.act_left(alpha, x), ainv);
  CHECK(inner == e2.scale(e2.q(), x));
  SparseElement g = e2.distinguished_g(2);
  SparseElement conj = e2.mul(e2.mul(g, inner), e2.antipode(g));
  CHECK(conj == x);
  CHECK(e2.antipode(x, 4) == x);

  // Grouplikes c^i (x) a^k are fixed by S^4 and by the conjugated twist.
  for (unsigned n : {2u, 3u}) {
    BicrossEngine eng(n);
    VerificationReport rep = verify_s4_bicross(n, 2);
    CHECK(rep.ok());
    BicrossCharacter al = eng.distinguished_alpha(2);
    BicrossCharacter ai = eng.character_inverse(al);
    SparseElement gg = eng.distinguished_g(static_cast<long long>(n));
    SparseElement gi = eng.antipode(gg);
    for (unsigned i = 0; i < n; ++i)
      for (long long k = -2; k <= 2; ++k) {
        SparseElement h = eng.monomial(i, 0, k);
        CHECK(eng.antipode(h, 4) == h);
        CHECK(eng.mul(eng.mul(gg, eng.act_right(eng.act_left(al, h), ai)), gi) == h);
      }
  }

  // Full window at n = 3, K = 4.
  CHECK(verify_s4_bicross(3, 4).ok());
}

TEST_CASE("bicross antipode order is 2n on windows") {
  for (unsigned n : {2u, 3u, 4u}) {
    BicrossEngine eng(n);
    long long K = 2;
    OrderResult ord = eng.order_of_antipode(K, 100);
    REQUIRE(ord.value.has_value());
    CHECK(*ord.value == 2ul * n);
    // Independent minimality probe through engine powers.
    for (long long m = 1; m < 2ll * n; ++m) CHECK_FALSE(antipode_power_is_identity(eng, K, m));
    CHECK(antipode_power_is_identity(eng, K, 2ll * n));
  }
  // A tight bound is reported as exceeded.
  BicrossEngine e3(3);
  OrderResult tight = e3.order_of_antipode(2, 5);
  CHECK(tight.exceeds_bound());
  CHECK(tight.str() == "exceeds-bound(5)");
}

TEST_CASE("bicross harpoon actions stay finitely supported and honest") {
  for (unsigned n : {2u, 3u}) {
    BicrossEngine eng(n);
    SparseFunctional L = eng.integral_lambda();
    std::vector<BicrossBasis> probes = eng.window(3 + static_cast<long long>(n));
    for (const BicrossBasis& b : eng.window(3)) {
      SparseElement h = eng.monomial(b.i, b.j, b.k);
      SparseFunctional fl = eng.act_left(h, L);
      SparseFunctional fr = eng.act_right(L, h);
      CHECK(fl.terms.size() <= 1);
      CHECK(fr.terms.size() <= 1);
      // Defining formulas (h -> L)(y) = L(y h) and (L <- h)(y) = L(h y).
      for (const BicrossBasis& yb : probes) {
        SparseElement y = eng.monomial(yb.i, yb.j, yb.k);
        CHECK(fl(y) == L(eng.mul(y, h)));
        CHECK(fr(y) == L(eng.mul(h, y)));
      }
    }
  }
}

TEST_CASE("taft embedding intertwines mult and counit but not comult") {
  BicrossEngine eng(3);
  const HopfPresentation& t = eng.taft_core();
  auto embed = [&](std::size_t p) {
    return eng.monomial(static_cast<unsigned>(p % 3), static_cast<unsigned>(p / 3), 0);
  };
  for (std::size_t p = 0; p < t.dim(); ++p) {
    CHECK(eng.counit(embed(p)) == t.counit(p));
    for (std::size_t r = 0; r < t.dim(); ++r) {
      SparseElement want(eng.n(), eng.field());
      for (const auto& [m, cm] : t.mult(p, r))
        want.terms.emplace(key(static_cast<unsigned>(m % 3), static_cast<unsigned>(m / 3), 0), cm);
      CHECK(eng.mul(embed(p), embed(r)) == want);
    }
  }
  // Delta_H(x (x) e) carries (c (x) a) on the left leg where the embedded
  // Taft comultiplication has (c (x) e): the grading twist.
  SparseTensor dH = eng.comul(eng.monomial(0, 1, 0));
  CHECK(dH.terms.count({key(1, 0, 1), key(0, 1, 0)}) == 1);
  CHECK(dH.terms.count({key(1, 0, 0), key(0, 1, 0)}) == 0);
}

TEST_CASE("bicross batteries are green and window-stamped") {
  BicrossEngine e2(2);
  VerificationReport r2 = e2.battery(3);
  CHECK(r2.ok());
  for (const char* name :
       {"associativity", "unit", "coassociativity", "counit", "comult-multiplicative",
        "counit-multiplicative", "antipode", "bicross-right-integral", "bicross-lambda-delta",
        "bicross-distinguished-g", "bicross-alpha-character", "bicross-alpha-order",
        "bicross-nakayama-commutation", "bicross-lambda-actions-supported", "s4-radford-formula",
        "order-antipode", "bicross-antipode-order-2n", "order-alpha",
        "order-distinguished-grouplike", "bicross-g-infinite-order", "taft-embedding-mult",
        "taft-embedding-counit", "taft-embedding-comult-twist"}) {
    const CheckResult* c = require_check(r2, name);
    CHECK(c->status == CheckStatus::pass);
  }
  CHECK(require_check(r2, "associativity")->detail.find("window |k| <= 3") != std::string::npos);
  CHECK(require_check(r2, "order-antipode")->detail.find("value: 4") != std::string::npos);
  CHECK(require_check(r2, "order-distinguished-grouplike")
            ->detail.find("value: exceeds-bound(100)") != std::string::npos);

  BicrossEngine e3(3);
  VerificationReport r3 = e3.battery(2);
  CHECK(r3.ok());
  CHECK(require_check(r3, "order-antipode")->detail.find("value: 6") != std::string::npos);
  CHECK(require_check(r3, "bicross-alpha-order")->detail.find("value: 3") != std::string::npos);
}

TEST_CASE("bicross argument validation") {
  CHECK_THROWS_AS(BicrossEngine(1), error);
  BicrossEngine eng(2);
  CHECK_THROWS_AS((void)eng.monomial(2, 0, 0), error);
  CHECK_THROWS_AS((void)eng.window(-1), error);
  // Mixed-n arithmetic is rejected.
  BicrossEngine other(3);
  CHECK_THROWS_AS((void)eng.mul(eng.one(), other.one()), error);
}
