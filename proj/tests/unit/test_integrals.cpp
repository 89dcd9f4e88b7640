// Integral spaces, distinguished grouplikes, Nakayama maps. Fixtures are
// derived by hand from the defining equations; the stacked-system oracle
// rebuilds each integral space independently of the incremental solver.
#include <string>
#include <vector>

#include "doctest.h"
#include "hopfkit/constructions.hpp"
#include "hopfkit/integrals.hpp"

using namespace hopfkit;

namespace {

std::vector<Scalar> unit_coords(const HopfPtr& h, std::size_t i) {
  std::vector<Scalar> v(h->dim(), Scalar::zero(h->field()));
  v[i] = Scalar::one(h->field());
  return v;
}

// Stacked n^2 x n systems assembled from the public element/functional
// arithmetic, solved with the generic nullspace. Cross-checks compute_integrals.
struct StackedSpaces {
  std::vector<std::vector<Scalar>> left, right, dual_left, dual_right;
};

StackedSpaces stacked_oracle(const HopfPtr& h) {
  const FieldSpec& f = h->field();
  const std::size_t n = h->dim();
  Matrix ml(n * n, n, f), mr(n * n, n, f), dl(n * n, n, f), dr(n * n, n, f);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // h_i e_j - eps(h_i) e_j contributes column j of block i.
      ElementFD lhs = mul(h->basis_element(i), h->basis_element(j));
      ElementFD rhs = scale(h->counit(i), h->basis_element(j));
      ElementFD lcol = sub(lhs, rhs);
      ElementFD rcol = sub(mul(h->basis_element(j), h->basis_element(i)), rhs);
      for (std::size_t r = 0; r < n; ++r) {
        if (!lcol.coord(r).is_zero()) ml.set(i * n + r, j, lcol.coord(r));
        if (!rcol.coord(r).is_zero()) mr.set(i * n + r, j, rcol.coord(r));
      }
    }
    // h1 f(h2) = f(h) 1 and f(h1) h2 = f(h) 1, unknown f.
    for (const auto& term : h->comult(i)) {
      dl.set(i * n + term.left, term.right, dl.at(i * n + term.left, term.right) + term.coeff);
      dr.set(i * n + term.right, term.left, dr.at(i * n + term.right, term.left) + term.coeff);
    }
    for (std::size_t m = 0; m < n; ++m) {
      if (h->unit()[m].is_zero()) continue;
      dl.set(i * n + m, i, dl.at(i * n + m, i) - h->unit()[m]);
      dr.set(i * n + m, i, dr.at(i * n + m, i) - h->unit()[m]);
    }
  }
  return {nullspace(ml), nullspace(mr), nullspace(dl), nullspace(dr)};
}

void check_against_oracle(const HopfPtr& h) {
  CAPTURE(h->name());
  IntegralData mine = compute_integrals(h);
  StackedSpaces oracle = stacked_oracle(h);
  REQUIRE(oracle.left.size() == 1);
  REQUIRE(oracle.right.size() == 1);
  REQUIRE(oracle.dual_left.size() == 1);
  REQUIRE(oracle.dual_right.size() == 1);
  CHECK(mine.left_H.coords() == oracle.left.front());
  CHECK(mine.right_H.coords() == oracle.right.front());
  CHECK(mine.left_Hstar.values() == oracle.dual_left.front());
  CHECK(mine.right_Hstar.values() == oracle.dual_right.front());
}

std::size_t count_status(const VerificationReport& rep, CheckStatus s) {
  std::size_t k = 0;
  for (const auto& c : rep.checks)
    if (c.status == s) ++k;
  return k;
}

}  // namespace

TEST_CASE("sweedler integral representatives") {
  HopfPtr h = sweedler();
  const FieldSpec& f = h->field();
  IntegralData I = compute_integrals(h);
  // Basis order 1, g, x, gx.
  Scalar one = Scalar::one(f), zero = Scalar::zero(f);
  CHECK(I.left_H.coords() == std::vector<Scalar>{zero, zero, one, one});     // x + gx
  CHECK(I.right_H.coords() == std::vector<Scalar>{zero, zero, one, -one});   // x - gx
  CHECK(I.left_Hstar.values() == std::vector<Scalar>{zero, zero, zero, one});  // p_gx
  CHECK(I.right_Hstar.values() == std::vector<Scalar>{zero, zero, one, zero}); // p_x
  CHECK(I.left_H.str() == "x + gx");

  // Direct membership: g t = t, x t = 0.
  CHECK(mul(h->basis_element(1), I.left_H) == I.left_H);
  CHECK(mul(h->basis_element(2), I.left_H).is_zero());
}

TEST_CASE("stacked-system oracle agrees with the incremental solver") {
  check_against_oracle(sweedler());
  check_against_oracle(group_algebra(GroupTable::cyclic(3), FieldSpec::rationals(), "kC3"));
  check_against_oracle(group_algebra(GroupTable::cyclic(4), FieldSpec::rationals(), "kC4"));
  check_against_oracle(group_algebra(GroupTable::symmetric3(), FieldSpec::rationals(), "kS3"));
  check_against_oracle(taft(3));
  check_against_oracle(dual(sweedler()));
  check_against_oracle(
      group_algebra(GroupTable::cyclic(5), FieldSpec::prime_field(5), "kC5/F5"));
}

TEST_CASE("group algebras are unimodular with trivial distinguished grouplikes") {
  for (unsigned n = 2; n <= 6; ++n) {
    HopfPtr h = group_algebra(GroupTable::cyclic(n), FieldSpec::rationals(),
                              "kC" + std::to_string(n));
    CAPTURE(h->name());
    const FieldSpec& f = h->field();
    IntegralData I = compute_integrals(h);
    std::vector<Scalar> all_ones(n, Scalar::one(f));
    CHECK(I.left_H.coords() == all_ones);   // sum of all group elements
    CHECK(I.right_H.coords() == all_ones);
    CHECK(I.left_Hstar.values() == unit_coords(h, 0));  // p_e
    CHECK(I.right_Hstar.values() == unit_coords(h, 0));
    GrouplikeData G = compute_grouplikes(h, I);
    CHECK(G.alpha == h->counit_functional());
    CHECK(G.g == h->one());
    CHECK(nakayama_chi(h, I).is_identity());
    CHECK(nakayama_omega(h, I).is_identity());
  }
  HopfPtr s3 = group_algebra(GroupTable::symmetric3(), FieldSpec::rationals(), "kS3");
  IntegralData I = compute_integrals(s3);
  CHECK(I.left_H == I.right_H);
  CHECK(compute_grouplikes(s3, I).g == s3->one());
  CHECK(nakayama_chi(s3, I).is_identity());
}

TEST_CASE("sweedler grouplikes and nakayama maps") {
  HopfPtr h = sweedler();
  const FieldSpec& f = h->field();
  IntegralData I = compute_integrals(h);
  GrouplikeData G = compute_grouplikes(h, I);
  Scalar one = Scalar::one(f), zero = Scalar::zero(f);

  CHECK(G.alpha.values() == std::vector<Scalar>{one, -one, zero, zero});  // alpha(g) = -1
  CHECK(G.alpha_inv == G.alpha);  // order two
  CHECK(G.g == h->basis_element(1));
  CHECK(G.g_inv == h->basis_element(1));  // g^2 = 1

  Matrix chi = nakayama_chi(h, I);
  Matrix expected(4, 4, f);
  expected.set(0, 0, one);
  expected.set(1, 1, -one);
  expected.set(2, 2, -one);
  expected.set(3, 3, one);
  CHECK(chi == expected);

  Matrix omega = nakayama_omega(h, I);
  Matrix om_expected(4, 4, f);
  om_expected.set(0, 0, one);
  om_expected.set(1, 1, -one);
  om_expected.set(2, 2, one);
  om_expected.set(3, 3, -one);
  CHECK(omega == om_expected);

  CHECK(chi_closed_form(h, G) == chi);
  CHECK(chi_conjugated_form(h, G) == chi);
}

TEST_CASE("taft(3) integral data") {
  HopfPtr h = taft(3);
  const FieldSpec& f = h->field();
  const std::size_t n = 3;
  Scalar q = Scalar::generator(f);
  IntegralData I = compute_integrals(h);

  // Basis index of c^i x^j is j*n + i. t = (1 + c + c^2) x^2.
  std::vector<Scalar> t_expected(9, Scalar::zero(f));
  t_expected[2 * n + 0] = Scalar::one(f);
  t_expected[2 * n + 1] = Scalar::one(f);
  t_expected[2 * n + 2] = Scalar::one(f);
  CHECK(I.left_H.coords() == t_expected);

  // T = (1 + q^-1 c + q^-2 c^2) x^2.
  std::vector<Scalar> T_expected(9, Scalar::zero(f));
  T_expected[2 * n + 0] = Scalar::one(f);
  T_expected[2 * n + 1] = q.pow(-1);
  T_expected[2 * n + 2] = q.pow(-2);
  CHECK(I.right_H.coords() == T_expected);

  CHECK(I.left_Hstar.values() == unit_coords(h, 2 * n + 1));   // p_{c x^2}
  CHECK(I.right_Hstar.values() == unit_coords(h, 2 * n + 0));  // p_{x^2}

  GrouplikeData G = compute_grouplikes(h, I);
  CHECK(G.alpha.value(1) == q.pow(-1));  // alpha(c) = q^-1
  CHECK(G.alpha.value(n) == Scalar::zero(f));  // alpha(x) = 0
  CHECK(G.g == h->basis_element(2));     // g = c^2
  CHECK(G.g_inv == h->basis_element(1));

  // alpha is a character of order 3.
  FunctionalFD a2 = convolve(G.alpha, G.alpha);
  CHECK(a2 != h->counit_functional());
  CHECK(convolve(a2, G.alpha) == h->counit_functional());

  Matrix chi = nakayama_chi(h, I);
  CHECK(h->element(chi.apply(unit_coords(h, 1))) == scale(q.pow(-1), h->basis_element(1)));
  CHECK(h->element(chi.apply(unit_coords(h, n))) == scale(q.pow(-1), h->basis_element(n)));
  CHECK(chi == chi_closed_form(h, G));
  CHECK(chi == chi_conjugated_form(h, G));
}

TEST_CASE("dual algebra swaps the integral spaces coordinate-wise") {
  for (const HopfPtr& h : {sweedler(),
                           group_algebra(GroupTable::cyclic(3), FieldSpec::rationals(), "kC3"),
                           taft(3)}) {
    CAPTURE(h->name());
    HopfPtr d = dual(h);
    IntegralData ih = compute_integrals(h);
    IntegralData id = compute_integrals(d);
    CHECK(id.left_H.coords() == ih.left_Hstar.values());
    CHECK(id.right_H.coords() == ih.right_Hstar.values());
    CHECK(id.left_Hstar.values() == ih.left_H.coords());
    CHECK(id.right_Hstar.values() == ih.right_H.coords());
  }
}

TEST_CASE("integrals battery passes on the preset family") {
  for (const HopfPtr& h :
       {sweedler(),
        group_algebra(GroupTable::cyclic(2), FieldSpec::rationals(), "kC2"),
        group_algebra(GroupTable::cyclic(3), FieldSpec::rationals(), "kC3"),
        group_algebra(GroupTable::cyclic(5), FieldSpec::prime_field(5), "kC5/F5"),
        group_algebra(GroupTable::symmetric3(), FieldSpec::rationals(), "kS3"),
        taft(2), taft(3), dual(taft(3)), op(sweedler()),
        cop(taft(3)),
        tensor_product(group_algebra(GroupTable::cyclic(2), FieldSpec::rationals(), "kC2"),
                       group_algebra(GroupTable::cyclic(2), FieldSpec::rationals(), "kC2"))}) {
    CAPTURE(h->name());
    VerificationReport rep = integrals_battery(h);
    for (const auto& c : rep.checks) {
      CAPTURE(c.name);
      CAPTURE(c.witness);
      CHECK(c.status != CheckStatus::fail);
    }
  }
}

TEST_CASE("battery gates match semisimplicity on both sides") {
  HopfPtr sw = sweedler();
  VerificationReport rep = integrals_battery(sw);
  const CheckResult* ss = rep.find("trace-semisimple-two-sided");
  const CheckResult* cs = rep.find("trace-cosemisimple-two-sided");
  REQUIRE(ss != nullptr);
  REQUIRE(cs != nullptr);
  CHECK(ss->status == CheckStatus::not_applicable);
  CHECK(cs->status == CheckStatus::not_applicable);

  HopfPtr c5 = group_algebra(GroupTable::cyclic(5), FieldSpec::prime_field(5), "kC5/F5");
  VerificationReport rep5 = integrals_battery(c5);
  CHECK(rep5.find("trace-semisimple-two-sided")->status == CheckStatus::not_applicable);
  CHECK(rep5.find("trace-cosemisimple-two-sided")->status == CheckStatus::pass);

  HopfPtr c3 = group_algebra(GroupTable::cyclic(3), FieldSpec::rationals(), "kC3");
  VerificationReport rep3 = integrals_battery(c3);
  CHECK(count_status(rep3, CheckStatus::not_applicable) == 0);
}

TEST_CASE("semisimplicity and cosemisimplicity detection") {
  auto flags = [](const HopfPtr& h) {
    IntegralData I = compute_integrals(h);
    return std::make_pair(is_semisimple(h, I), is_cosemisimple(h, I));
  };
  CHECK(flags(group_algebra(GroupTable::cyclic(3), FieldSpec::rationals(), "kC3")) ==
        std::make_pair(true, true));
  CHECK(flags(sweedler()) == std::make_pair(false, false));
  CHECK(flags(group_algebra(GroupTable::cyclic(5), FieldSpec::prime_field(5), "kC5/F5")) ==
        std::make_pair(false, true));
  CHECK(flags(taft(3)) == std::make_pair(false, false));
}

TEST_CASE("trace integrals on concrete algebras") {
  const FieldSpec q = FieldSpec::rationals();
  {
    HopfPtr h = group_algebra(GroupTable::cyclic(2), q, "kC2");
    TraceIntegrals tr = trace_integrals(h);
    CHECK(tr.right_H.coords() == std::vector<Scalar>{Scalar::one(q), Scalar::one(q)});
    CHECK(tr.left_H == tr.right_H);
    CHECK(tr.trace_s2 == Scalar::of_int(q, 2));
    CHECK(tr.left_Hstar.values() ==
          std::vector<Scalar>{Scalar::of_int(q, 2), Scalar::zero(q)});  // 2 p_1
    CHECK(tr.left_Hstar(h->one()) == Scalar::of_int(q, 2));
  }
  {
    TraceIntegrals tr = trace_integrals(sweedler());
    CHECK(tr.right_H.is_zero());
    CHECK(tr.left_H.is_zero());
    CHECK(tr.left_Hstar.is_zero());
    CHECK(tr.right_Hstar.is_zero());
    CHECK(tr.trace_s2.is_zero());
  }
  {
    HopfPtr h = group_algebra(GroupTable::cyclic(5), FieldSpec::prime_field(5), "kC5/F5");
    TraceIntegrals tr = trace_integrals(h);
    CHECK(!tr.right_H.is_zero());
    CHECK(tr.right_H.coords() == std::vector<Scalar>(5, Scalar::one(h->field())));
    CHECK(counit_of(tr.right_H).is_zero());  // eps(r) = 5 = 0 in F5
    CHECK(tr.left_Hstar.is_zero());          // not semisimple
  }
  {
    TraceIntegrals tr = trace_integrals(taft(3));  // Tr(S^2) = 3(1 + q + q^2) = 0
    CHECK(tr.trace_s2.is_zero());
    CHECK(tr.right_H.is_zero());
    CHECK(tr.left_Hstar.is_zero());
  }
}

TEST_CASE("normalized integral identities on sweedler, by hand") {
  HopfPtr h = sweedler();
  IntegralData I = compute_integrals(h);
  GrouplikeData G = compute_grouplikes(h, I);
  VerificationReport rep = verify_normalized_integral_identities(h, I, G);
  REQUIRE(rep.checks.size() == 3);
  for (const auto& c : rep.checks) {
    CAPTURE(c.name);
    CAPTURE(c.witness);
    CHECK(c.status == CheckStatus::pass);
  }
  // Lambda(t) = p_x(x + gx) = 1, so no rescaling happens.
  CHECK(rep.checks[0].detail.find("1/(1)") != std::string::npos);
}

TEST_CASE("doctored grouplike data trips the dependent identities") {
  HopfPtr h = sweedler();
  IntegralData I = compute_integrals(h);
  GrouplikeData G = compute_grouplikes(h, I);
  GrouplikeData wrong{G.alpha, G.alpha_inv, h->one(), h->one()};  // pretend g = 1

  VerificationReport ids = verify_normalized_integral_identities(h, I, wrong);
  const CheckResult* twist = ids.find("integral-comult-twist");
  REQUIRE(twist != nullptr);
  CHECK(twist->status == CheckStatus::fail);
  CHECK(!twist->witness.empty());

  VerificationReport pulls = verify_antipode_pullbacks(h, I, wrong);
  CHECK(pulls.find("lambda-pullback-s")->status == CheckStatus::fail);
  CHECK(pulls.find("lambda-pullback-s-squared")->status == CheckStatus::fail);
}

TEST_CASE("bijection probe on a zero integral reports rank 0") {
  HopfPtr h = sweedler();
  VerificationReport rep = verify_bijections(h, h->zero_element(), "zero");
  REQUIRE(rep.checks.size() == 2);
  for (const auto& c : rep.checks) {
    CHECK(c.status == CheckStatus::fail);
    CHECK(c.witness == "rank 0 of 4");
  }
  IntegralData I = compute_integrals(h);
  VerificationReport good = verify_bijections(h, I);
  CHECK(good.ok());
  REQUIRE(good.checks.size() == 4);
}

TEST_CASE("non-integral functional raises singular action") {
  HopfPtr h = sweedler();
  IntegralData I = compute_integrals(h);
  IntegralData doctored{I.left_H, I.right_H, h->counit_functional(), I.right_Hstar};
  CHECK_THROWS_WITH_AS(nakayama_chi(h, doctored), doctest::Contains("singular"), error);
  try {
    nakayama_chi(h, doctored);
  } catch (const error& e) {
    CHECK(e.code() == errc::singular_action);
  }
}

TEST_CASE("antipode pullbacks hold on taft(3) and its dual") {
  for (const HopfPtr& h : {taft(3), dual(taft(3))}) {
    CAPTURE(h->name());
    IntegralData I = compute_integrals(h);
    GrouplikeData G = compute_grouplikes(h, I);
    VerificationReport rep = verify_antipode_pullbacks(h, I, G);
    CHECK(rep.ok());
    REQUIRE(rep.checks.size() == 3);
  }
}
