#include "hopfkit/radford.hpp"

#include <algorithm>
#include <utility>

namespace hopfkit {

namespace {

std::vector<Scalar> basis_coords(const HopfPtr& h, std::size_t i) {
  std::vector<Scalar> v(h->dim(), Scalar::zero(h->field()));
  v[i] = Scalar::one(h->field());
  return v;
}

ElementFD column_element(const HopfPtr& h, const Matrix& m, std::size_t i) {
  return h->element(m.apply(basis_coords(h, i)));
}

bool involutory(const HopfPresentation& h) {
  return antipode_power_matrix(h, 2).is_identity();
}

Scalar eval_values(const FunctionalFD& f, const SparseVec& v) {
  Scalar acc = Scalar::zero(f.algebra()->field());
  for (const auto& [k, c] : v) acc = acc + c * f.value(k);
  return acc;
}

// f(e_i e_j) = f(e_j e_i) on all pairs; the first violating pair on failure.
std::optional<std::string> functional_cocommutative(const FunctionalFD& f) {
  const HopfPtr& h = f.algebra();
  std::size_t n = h->dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Scalar lhs = eval_values(f, h->mult(i, j));
      Scalar rhs = eval_values(f, h->mult(j, i));
      if (!(lhs == rhs))
        return "h = " + h->basis_names()[i] + ", h' = " + h->basis_names()[j] +
               ": f(hh') = " + lhs.str() + ", f(h'h) = " + rhs.str();
    }
  return std::nullopt;
}

// Delta(x) invariant under the tensor flip; a witness tensor on failure.
std::optional<std::string> element_cocommutative(const ElementFD& x) {
  SparseTensor2 d = comul(x);
  SparseTensor2 flipped;
  for (const auto& [key, c] : d) add_term(flipped, {key.second, key.first}, c);
  if (flipped == d) return std::nullopt;
  return "Delta = " + tensor_str(*x.algebra(), d) +
         ", flipped = " + tensor_str(*x.algebra(), flipped);
}

// sum S(l_2) l_1 when s_on_right_leg, else sum l_2 S(l_1).
ElementFD antipode_mix(const ElementFD& l, bool s_on_right_leg) {
  const HopfPtr& h = l.algebra();
  ElementFD acc = h->zero_element();
  for (const auto& [key, c] : comul(l)) {
    ElementFD a = h->basis_element(key.first);
    ElementFD b = h->basis_element(key.second);
    ElementFD term =
        s_on_right_leg ? mul(antipode_pow(b, 1), a) : mul(b, antipode_pow(a, 1));
    acc = add(acc, scale(c, term));
  }
  return acc;
}

// c with u = c * 1 and c != 0, when such a scalar exists.
std::optional<Scalar> scalar_of_one(const ElementFD& u) {
  const HopfPtr& h = u.algebra();
  const std::vector<Scalar>& one = h->unit();
  std::size_t k = h->dim();
  for (std::size_t i = 0; i < h->dim(); ++i)
    if (!u.coord(i).is_zero()) {
      k = i;
      break;
    }
  if (k == h->dim()) return std::nullopt;  // zero: not a *nonzero* multiple
  if (one[k].is_zero()) return std::nullopt;
  Scalar c = u.coord(k) / one[k];
  if (u == scale(c, h->one())) return c;
  return std::nullopt;
}

// Measurement entry: always pass-status, the truth value lives in detail.
void measure(VerificationReport& rep, std::string name, bool v, const std::string& extra = {}) {
  std::string d = v ? "value: true" : "value: false";
  if (!extra.empty()) d += "; " + extra;
  rep.pass(std::move(name), std::move(d));
}

const char* tf(bool v) { return v ? "T" : "F"; }

// f(S(h_2) h_1) = eps(h) (s_on_right_leg) or f(h_2 S(h_1)) = eps(h), on all
// basis h. Returns the first violating basis element, if any.
std::optional<std::string> antipode_product_condition(const FunctionalFD& f,
                                                      bool s_on_right_leg) {
  const HopfPtr& h = f.algebra();
  for (std::size_t i = 0; i < h->dim(); ++i) {
    ElementFD u = antipode_mix(h->basis_element(i), s_on_right_leg);
    Scalar lhs = f(u);
    if (!(lhs == h->counit(i)))
      return "h = " + h->basis_names()[i] + ": f(" + u.str() + ") = " + lhs.str() +
             ", eps(h) = " + h->counit(i).str();
  }
  return std::nullopt;
}

struct LarsonEval {
  bool value = false;    // some nonzero integral in H* satisfies the condition
  std::string note;      // which candidate, or why none exists
  bool inconsistent = false;  // a raw (un-normalizable) candidate passed anyway
};

// Existential evaluation over the one-dimensional integral spaces of H*: a
// candidate must satisfy f(1) = 1 (set h = 1 in the condition), so the only
// candidates are the representatives rescaled to 1 at the unit. When
// lambda(1) = 0 no candidate exists and the raw representatives are tested
// directly; they must fail.
LarsonEval larson_condition(const HopfPtr& h, const IntegralData& integrals,
                            bool s_on_right_leg) {
  LarsonEval out;
  Scalar l1 = integrals.left_Hstar(h->one());
  Scalar L1 = integrals.right_Hstar(h->one());
  if (l1.is_zero() && L1.is_zero()) {
    std::vector<std::pair<std::string, FunctionalFD>> raw = {
        {"lambda", integrals.left_Hstar}, {"Lambda", integrals.right_Hstar}};
    for (const auto& [label, f] : raw) {
      if (!antipode_product_condition(f, s_on_right_leg)) {
        out.inconsistent = true;
        out.note = "raw " + label + " satisfies the condition despite " + label + "(1) = 0";
        return out;
      }
    }
    out.note = "lambda(1) = 0: no integral can satisfy the condition at h = 1";
    return out;
  }
  std::vector<std::pair<std::string, FunctionalFD>> cands;
  if (!l1.is_zero()) cands.emplace_back("lambda/lambda(1)", scale(l1.inv(), integrals.left_Hstar));
  if (!L1.is_zero()) cands.emplace_back("Lambda/Lambda(1)", scale(L1.inv(), integrals.right_Hstar));
  for (const auto& [label, f] : cands)
    if (!antipode_product_condition(f, s_on_right_leg)) {
      out.value = true;
      out.note = "witnessed by " + label;
      return out;
    }
  out.note = "fails for every rescaled representative";
  return out;
}

// h t = eps(h) t and t h = eps(h) t for all basis h.
std::optional<std::string> two_sided_element_integral(const ElementFD& t) {
  const HopfPtr& h = t.algebra();
  for (std::size_t m = 0; m < h->dim(); ++m) {
    ElementFD e = h->basis_element(m);
    ElementFD want = scale(h->counit(m), t);
    if (mul(e, t) != want)
      return "h = " + h->basis_names()[m] + ": h t = " + mul(e, t).str() +
             ", eps(h) t = " + want.str();
    if (mul(t, e) != want)
      return "h = " + h->basis_names()[m] + ": t h = " + mul(t, e).str() +
             ", eps(h) t = " + want.str();
  }
  return std::nullopt;
}

// h1 f(h2) = f(h) 1 and f(h1) h2 = f(h) 1 for all basis h.
std::optional<std::string> two_sided_functional_integral(const FunctionalFD& f) {
  const HopfPtr& h = f.algebra();
  for (std::size_t m = 0; m < h->dim(); ++m) {
    ElementFD left = h->zero_element();
    ElementFD right = h->zero_element();
    for (const ComultTerm& term : h->comult(m)) {
      left = add(left, scale(term.coeff * f.value(term.right), h->basis_element(term.left)));
      right = add(right, scale(term.coeff * f.value(term.left), h->basis_element(term.right)));
    }
    ElementFD want = scale(f.value(m), h->one());
    if (left != want)
      return "h = " + h->basis_names()[m] + ": h1 f(h2) = " + left.str() +
             ", f(h) 1 = " + want.str();
    if (right != want)
      return "h = " + h->basis_names()[m] + ": f(h1) h2 = " + right.str() +
             ", f(h) 1 = " + want.str();
  }
  return std::nullopt;
}

}  // namespace

std::string OrderResult::str() const {
  if (value) return std::to_string(*value);
  return "exceeds-bound(" + std::to_string(bound) + ")";
}

unsigned long default_order_bound(const HopfPtr& h) {
  unsigned long n = static_cast<unsigned long>(h->dim());
  return 4 * n * n;
}

OrderResult order_of_map(const Matrix& m, unsigned long bound) {
  OrderResult out;
  out.bound = bound;
  Matrix cur = m;
  for (unsigned long k = 1; k <= bound; ++k) {
    if (cur.is_identity()) {
      out.value = k;
      return out;
    }
    if (k < bound) cur = cur * m;
  }
  return out;
}

OrderResult order_of_grouplike(const ElementFD& g, unsigned long bound) {
  OrderResult out;
  out.bound = bound;
  ElementFD cur = g;
  ElementFD one = g.algebra()->one();
  for (unsigned long k = 1; k <= bound; ++k) {
    if (cur == one) {
      out.value = k;
      return out;
    }
    if (k < bound) cur = mul(cur, g);
  }
  return out;
}

OrderResult order_of_character(const FunctionalFD& a, unsigned long bound) {
  OrderResult out;
  out.bound = bound;
  FunctionalFD cur = a;
  FunctionalFD eps = a.algebra()->counit_functional();
  for (unsigned long k = 1; k <= bound; ++k) {
    if (cur == eps) {
      out.value = k;
      return out;
    }
    if (k < bound) cur = convolve(cur, a);
  }
  return out;
}

AntipodeOrders antipode_orders(const HopfPtr& h, const GrouplikeData& grouplikes,
                               unsigned long bound) {
  AntipodeOrders out;
  out.antipode = order_of_map(h->antipode(), bound);
  out.antipode_squared = order_of_map(antipode_power_matrix(*h, 2), bound);
  out.alpha = order_of_character(grouplikes.alpha, bound);
  out.g = order_of_grouplike(grouplikes.g, bound);
  return out;
}

VerificationReport verify_s4(const HopfPtr& h, const GrouplikeData& grouplikes) {
  VerificationReport rep;
  Matrix s4 = antipode_power_matrix(*h, 4);
  for (std::size_t i = 0; i < h->dim(); ++i) {
    ElementFD lhs = column_element(h, s4, i);
    ElementFD mid =
        act_right(act_left(grouplikes.alpha, h->basis_element(i)), grouplikes.alpha_inv);
    ElementFD rhs = mul(mul(grouplikes.g, mid), grouplikes.g_inv);
    if (lhs != rhs) {
      rep.fail("s4-radford-formula",
               "h = " + h->basis_names()[i] + ": S^4(h) = " + lhs.str() +
                   ", g(alpha -> h <- alpha^-1)g^-1 = " + rhs.str());
      return rep;
    }
  }
  rep.pass("s4-radford-formula",
           "S^4 = conjugated alpha-twist on all " + std::to_string(h->dim()) +
               " basis elements");
  return rep;
}

VerificationReport verify_chi_forms(const HopfPtr& h, const GrouplikeData& grouplikes) {
  VerificationReport rep;
  Matrix a = chi_closed_form(h, grouplikes);
  Matrix b = chi_conjugated_form(h, grouplikes);
  if (a == b) {
    rep.pass("chi-forms-agree", "alpha(h2) S^-2(h1) = alpha(h1) g^-1 S^2(h2) g as matrices");
    return rep;
  }
  for (std::size_t i = 0; i < h->dim(); ++i) {
    ElementFD ca = column_element(h, a, i);
    ElementFD cb = column_element(h, b, i);
    if (ca != cb) {
      rep.fail("chi-forms-agree", "h = " + h->basis_names()[i] +
                                      ": alpha(h2) S^-2(h1) = " + ca.str() +
                                      ", alpha(h1) g^-1 S^2(h2) g = " + cb.str());
      return rep;
    }
  }
  rep.fail("chi-forms-agree", "matrices differ but no basis column does");  // unreachable
  return rep;
}

VerificationReport verify_s4_iterates(const HopfPtr& h, const GrouplikeData& grouplikes,
                                      unsigned long limit) {
  VerificationReport rep;
  Matrix s4 = antipode_power_matrix(*h, 4);
  Matrix lhs = Matrix::identity(h->dim(), h->field());
  FunctionalFD am = h->counit_functional();
  FunctionalFD am_inv = h->counit_functional();
  ElementFD gm = h->one();
  ElementFD gm_inv = h->one();
  for (unsigned long m = 1; m <= limit; ++m) {
    lhs = lhs * s4;
    am = convolve(am, grouplikes.alpha);
    am_inv = convolve(am_inv, grouplikes.alpha_inv);
    gm = mul(gm, grouplikes.g);
    gm_inv = mul(gm_inv, grouplikes.g_inv);
    for (std::size_t i = 0; i < h->dim(); ++i) {
      ElementFD want =
          mul(mul(gm, act_right(act_left(am, h->basis_element(i)), am_inv)), gm_inv);
      ElementFD got = column_element(h, lhs, i);
      if (got != want) {
        rep.fail("s4-iterates",
                 "m = " + std::to_string(m) + ", h = " + h->basis_names()[i] +
                     ": S^{4m}(h) = " + got.str() +
                     ", g^m(alpha^m -> h <- alpha^-m)g^-m = " + want.str());
        return rep;
      }
    }
  }
  rep.pass("s4-iterates", "m = 1.." + std::to_string(limit) + " verified");
  return rep;
}

VerificationReport cocommutative_integral_checks(const HopfPtr& h,
                                                 const IntegralData& integrals) {
  VerificationReport rep;
  GrouplikeData grouplikes = compute_grouplikes(h, integrals);
  std::optional<std::string> wa = functional_cocommutative(integrals.left_Hstar);
  bool a = !wa.has_value();
  bool b = involutory(*h);
  bool c = grouplikes.alpha == h->counit_functional();
  std::optional<std::string> wd = element_cocommutative(integrals.left_H);
  bool d = !wd.has_value();
  bool e = grouplikes.g == h->one();

  measure(rep, "cocomm-lambda-cocommutative", a, a ? "" : *wa);
  measure(rep, "cocomm-involutory", b);
  measure(rep, "cocomm-alpha-trivial", c, c ? "" : "alpha = " + grouplikes.alpha.str());
  measure(rep, "cocomm-integral-flip-invariant", d, d ? "" : *wd);
  measure(rep, "cocomm-g-trivial", e, e ? "" : "g = " + grouplikes.g.str());

  std::string vec = std::string("(a, b, c, d, e) = (") + tf(a) + ", " + tf(b) + ", " +
                    tf(c) + ", " + tf(d) + ", " + tf(e) + ")";
  rep.add("cocomm-dual-integral-iff", a == (b && c), vec,
          "lambda cocommutative <=> involutory and alpha trivial");
  rep.add("cocomm-integral-iff", d == (b && e), vec,
          "Delta(t) flip-invariant <=> involutory and g trivial");
  return rep;
}

VerificationReport larson_checks(const HopfPtr& h, const IntegralData& integrals) {
  VerificationReport rep;
  GrouplikeData grouplikes = compute_grouplikes(h, integrals);
  Scalar l1 = integrals.left_Hstar(h->one());
  bool cs = !l1.is_zero();
  bool inv = involutory(*h);

  if (cs)
    rep.pass("larson-normalization",
             "integral representatives rescaled to 1 at the unit");
  else
    rep.not_applicable("larson-normalization",
                       "lambda(1) = 0: no integral can be rescaled to 1 at the unit; "
                       "the conditions are tested with the raw representatives");

  bool i_v = cs && inv;
  LarsonEval e2 = larson_condition(h, integrals, /*s_on_right_leg=*/true);
  LarsonEval e3 = larson_condition(h, integrals, /*s_on_right_leg=*/false);
  std::optional<std::string> wl = functional_cocommutative(integrals.left_Hstar);
  std::optional<std::string> wr = functional_cocommutative(integrals.right_Hstar);
  bool iv_v = cs && (!wl.has_value() || !wr.has_value());

  measure(rep, "larson-i-cosemisimple-involutory", i_v,
          std::string("cosemisimple: ") + tf(cs) + ", involutory: " + tf(inv));
  if (e2.inconsistent)
    rep.fail("larson-ii-antipode-product-left", e2.note);
  else
    measure(rep, "larson-ii-antipode-product-left", e2.value,
            "lambda(S(h2) h1) = eps(h); " + e2.note);
  if (e3.inconsistent)
    rep.fail("larson-iii-antipode-product-right", e3.note);
  else
    measure(rep, "larson-iii-antipode-product-right", e3.value,
            "lambda(h2 S(h1)) = eps(h); " + e3.note);
  measure(rep, "larson-iv-cocommutative-dual-integral", iv_v,
          iv_v || !cs ? std::string("cosemisimple: ") + tf(cs)
                      : "lambda: " + *wl + "; Lambda: " + *wr);

  std::string vec = std::string("(i, ii, iii, iv) = (") + tf(i_v) + ", " + tf(e2.value) +
                    ", " + tf(e3.value) + ", " + tf(iv_v) + ")";
  bool all_equal = i_v == e2.value && e2.value == e3.value && e3.value == iv_v;
  rep.add("larson-equivalence", all_equal, vec, "four-way equivalence");

  // B(x, y) = lambda(x S(y)) symmetric <=> involutory, under g = 1 and
  // lambda o S = lambda (both scale-invariant, so the representative decides).
  bool g_trivial = grouplikes.g == h->one();
  bool s_stable = compose(integrals.left_Hstar, h->antipode()) == integrals.left_Hstar;
  if (!g_trivial || !s_stable) {
    rep.not_applicable("larson-bilinear-symmetry-iff-involutory",
                       std::string("hypotheses not met: g trivial: ") + tf(g_trivial) +
                           ", lambda o S = lambda: " + tf(s_stable));
    return rep;
  }
  std::vector<ElementFD> s_of;
  s_of.reserve(h->dim());
  for (std::size_t j = 0; j < h->dim(); ++j)
    s_of.push_back(antipode_pow(h->basis_element(j), 1));
  bool symmetric = true;
  std::string bw;
  for (std::size_t i = 0; i < h->dim() && symmetric; ++i)
    for (std::size_t j = i + 1; j < h->dim(); ++j) {
      Scalar bij = integrals.left_Hstar(mul(h->basis_element(i), s_of[j]));
      Scalar bji = integrals.left_Hstar(mul(h->basis_element(j), s_of[i]));
      if (!(bij == bji)) {
        symmetric = false;
        bw = "B(" + h->basis_names()[i] + ", " + h->basis_names()[j] + ") = " + bij.str() +
             ", B(" + h->basis_names()[j] + ", " + h->basis_names()[i] + ") = " + bji.str();
        break;
      }
    }
  rep.add("larson-bilinear-symmetry-iff-involutory", symmetric == inv,
          std::string("B symmetric: ") + tf(symmetric) + ", involutory: " + tf(inv) +
              (bw.empty() ? "" : "; " + bw),
          "under g = 1 and lambda o S = lambda");
  return rep;
}

VerificationReport semisimplicity_battery(const HopfPtr& h, const IntegralData& integrals) {
  VerificationReport rep;
  bool ss = is_semisimple(h, integrals);
  bool cs = is_cosemisimple(h, integrals);
  bool i_v = ss && cs;
  bool ii_v = involutory(*h);
  bool iii_v = !element_cocommutative(integrals.left_H).has_value() ||
               !element_cocommutative(integrals.right_H).has_value();

  ElementFD u_tl = antipode_mix(integrals.left_H, true);    // S(t2) t1
  ElementFD u_tr = antipode_mix(integrals.left_H, false);   // t2 S(t1)
  ElementFD u_Tl = antipode_mix(integrals.right_H, true);   // S(T2) T1
  ElementFD u_Tr = antipode_mix(integrals.right_H, false);  // T2 S(T1)
  bool iv_v = scalar_of_one(u_tl).has_value() || scalar_of_one(u_tr).has_value() ||
              scalar_of_one(u_Tl).has_value() || scalar_of_one(u_Tr).has_value();

  bool v_v = !functional_cocommutative(integrals.left_Hstar).has_value() ||
             !functional_cocommutative(integrals.right_Hstar).has_value();
  LarsonEval e2 = larson_condition(h, integrals, true);
  LarsonEval e3 = larson_condition(h, integrals, false);
  bool vi_v = e2.value || e3.value;

  measure(rep, "mainss-i-semisimple-cosemisimple", i_v,
          std::string("semisimple: ") + tf(ss) + ", cosemisimple: " + tf(cs));
  measure(rep, "mainss-ii-involutory", ii_v);
  measure(rep, "mainss-iii-cocommutative-integral", iii_v);
  measure(rep, "mainss-iv-antipode-product-scalar", iv_v,
          "S(t2)t1 = " + u_tl.str() + "; t2 S(t1) = " + u_tr.str() +
              "; S(T2)T1 = " + u_Tl.str() + "; T2 S(T1) = " + u_Tr.str());
  measure(rep, "mainss-v-cocommutative-dual-integral", v_v);
  if (e2.inconsistent || e3.inconsistent)
    rep.fail("mainss-vi-larson-integral", e2.inconsistent ? e2.note : e3.note);
  else
    measure(rep, "mainss-vi-larson-integral", vi_v,
            "left form: " + e2.note + "; right form: " + e3.note);

  std::string vec = std::string("(i, ii, iii, iv, v, vi) = (") + tf(i_v) + ", " + tf(ii_v) +
                    ", " + tf(iii_v) + ", " + tf(iv_v) + ", " + tf(v_v) + ", " + tf(vi_v) +
                    ")";
  bool all_equal = i_v == ii_v && ii_v == iii_v && iii_v == iv_v && iv_v == v_v && v_v == vi_v;
  Scalar dim_in_k = Scalar::of_int(h->field(), static_cast<long>(h->dim()));
  if (!dim_in_k.is_zero())
    rep.add("mainss-unanimity", all_equal, vec, "dim(H) 1 != 0 in k; " + vec);
  else
    rep.not_applicable("mainss-unanimity", "dim(H) 1 = 0 in k; not asserted; " + vec);
  return rep;
}

VerificationReport verify_involutory_trace_forms(const HopfPtr& h,
                                                 const IntegralData& integrals) {
  VerificationReport rep;
  bool ss = is_semisimple(h, integrals);
  bool cs = is_cosemisimple(h, integrals);
  static const char* kNames[] = {
      "trace-form-element-sums-agree",      "trace-form-functional-sums-agree",
      "trace-form-element-nonzero",         "trace-form-functional-nonzero",
      "trace-form-element-cocommutative",   "trace-form-functional-cocommutative",
      "trace-form-element-integral",        "trace-form-functional-integral"};
  if (!ss || !cs) {
    std::string why = std::string("requires semisimple and cosemisimple; semisimple: ") +
                      tf(ss) + ", cosemisimple: " + tf(cs);
    for (const char* name : kNames) rep.not_applicable(name, why);
    return rep;
  }

  // t_a = sum <e^i, (e_i)_1> (e_i)_2 and t_b = sum <e^i, (e_i)_2> (e_i)_1.
  std::vector<Scalar> ta(h->dim(), Scalar::zero(h->field()));
  std::vector<Scalar> tb(h->dim(), Scalar::zero(h->field()));
  for (std::size_t i = 0; i < h->dim(); ++i)
    for (const ComultTerm& term : h->comult(i)) {
      if (term.left == i) ta[term.right] = ta[term.right] + term.coeff;
      if (term.right == i) tb[term.left] = tb[term.left] + term.coeff;
    }
  ElementFD t_a = h->element(ta);
  ElementFD t_b = h->element(tb);

  // l_a = sum e_i -> e^i and l_b = sum e^i <- e_i.
  FunctionalFD l_a = h->zero_functional();
  FunctionalFD l_b = h->zero_functional();
  for (std::size_t i = 0; i < h->dim(); ++i) {
    l_a = add(l_a, act_left(h->basis_element(i), h->dual_basis_functional(i)));
    l_b = add(l_b, act_right(h->dual_basis_functional(i), h->basis_element(i)));
  }

  rep.add("trace-form-element-sums-agree", t_a == t_b,
          "sum <e^i, (e_i)_1>(e_i)_2 = " + t_a.str() + ", sum <e^i, (e_i)_2>(e_i)_1 = " +
              t_b.str());
  rep.add("trace-form-functional-sums-agree", l_a == l_b,
          "sum e_i -> e^i = " + l_a.str() + ", sum e^i <- e_i = " + l_b.str());
  rep.add("trace-form-element-nonzero", !t_a.is_zero(), "t = 0");
  rep.add("trace-form-functional-nonzero", !l_a.is_zero(), "lambda = 0");
  std::optional<std::string> wt = element_cocommutative(t_a);
  rep.add("trace-form-element-cocommutative", !wt.has_value(), wt.value_or(""));
  std::optional<std::string> wl = functional_cocommutative(l_a);
  rep.add("trace-form-functional-cocommutative", !wl.has_value(), wl.value_or(""));
  std::optional<std::string> mt = two_sided_element_integral(t_a);
  rep.add("trace-form-element-integral", !mt.has_value(), mt.value_or(""),
          "two-sided: h t = eps(h) t = t h");
  std::optional<std::string> ml = two_sided_functional_integral(l_a);
  rep.add("trace-form-functional-integral", !ml.has_value(), ml.value_or(""),
          "two-sided: h1 lambda(h2) = lambda(h) 1 = lambda(h1) h2");
  return rep;
}

VerificationReport radford_battery(const HopfPtr& h) {
  IntegralData integrals = compute_integrals(h);
  GrouplikeData grouplikes = compute_grouplikes(h, integrals);
  VerificationReport rep;
  rep.merge(verify_s4(h, grouplikes));
  rep.merge(verify_chi_forms(h, grouplikes));

  unsigned long bound = default_order_bound(h);
  OrderResult o4 = order_of_map(antipode_power_matrix(*h, 4), bound);
  rep.merge(verify_s4_iterates(h, grouplikes, o4.value ? *o4.value : 8));

  rep.merge(cocommutative_integral_checks(h, integrals));
  rep.merge(larson_checks(h, integrals));
  rep.merge(semisimplicity_battery(h, integrals));
  rep.merge(verify_involutory_trace_forms(h, integrals));

  AntipodeOrders orders = antipode_orders(h, grouplikes, bound);
  rep.pass("order-antipode", "value: " + orders.antipode.str() + "; bound " +
                                 std::to_string(bound));
  rep.pass("order-antipode-squared", "value: " + orders.antipode_squared.str() +
                                         "; bound " + std::to_string(bound));
  rep.pass("order-alpha",
           "value: " + orders.alpha.str() + "; bound " + std::to_string(bound));
  rep.pass("order-g", "value: " + orders.g.str() + "; bound " + std::to_string(bound));
  if (antipode_power_matrix(*h, 2).is_identity())
    rep.not_applicable("order-antipode-doubling", "S^2 = id");
  else if (orders.antipode.value && orders.antipode_squared.value)
    rep.add("order-antipode-doubling",
            *orders.antipode.value == 2 * *orders.antipode_squared.value,
            "order(S) = " + orders.antipode.str() + ", order(S^2) = " +
                orders.antipode_squared.str(),
            "order(S) = 2 order(S^2) when S^2 != id");
  else
    rep.not_applicable("order-antipode-doubling", "order search exceeded the bound");

  std::stable_sort(rep.checks.begin(), rep.checks.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return rep;
}

}  // namespace hopfkit
