#include "hopfkit/integrals.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace hopfkit {

namespace {

Scalar eval_values(const FieldSpec& f, const std::vector<Scalar>& vals, const SparseVec& v) {
  Scalar s = Scalar::zero(f);
  for (const auto& [k, c] : v)
    if (!vals[k].is_zero()) s = s + c * vals[k];
  return s;
}

std::vector<Scalar> mat_col(const Matrix& m, std::size_t j) {
  std::vector<Scalar> col;
  col.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) col.push_back(m.at(i, j));
  return col;
}

std::vector<SparseVec> matrix_columns(const Matrix& m) {
  std::vector<SparseVec> cols(m.cols());
  for (const auto& [ij, v] : m.entries()) cols[ij.second].emplace(ij.first, v);
  return cols;
}

// Constraint matrices: each returns the n x n matrix C_i with C_i v = 0
// expressing the defining equation of the respective integral space at the
// i-th basis element.

Matrix left_integral_constraint(const HopfPresentation& H, std::size_t i) {
  const std::size_t n = H.dim();
  Matrix c(n, n, H.field());
  SparseTensor2 acc;
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [r, v] : H.mult(i, j)) add_term(acc, {r, j}, v);
    if (!H.counit(i).is_zero()) add_term(acc, {j, j}, -H.counit(i));
  }
  for (const auto& [k, v] : acc) c.set(k.first, k.second, v);
  return c;
}

Matrix right_integral_constraint(const HopfPresentation& H, std::size_t i) {
  const std::size_t n = H.dim();
  Matrix c(n, n, H.field());
  SparseTensor2 acc;
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [r, v] : H.mult(j, i)) add_term(acc, {r, j}, v);
    if (!H.counit(i).is_zero()) add_term(acc, {j, j}, -H.counit(i));
  }
  for (const auto& [k, v] : acc) c.set(k.first, k.second, v);
  return c;
}

// Unknown f with h1 f(h2) = f(h) 1: rows are H-coordinates, columns values of f.
Matrix dual_left_integral_constraint(const HopfPresentation& H, std::size_t i) {
  const std::size_t n = H.dim();
  Matrix c(n, n, H.field());
  SparseTensor2 acc;
  for (const auto& term : H.comult(i)) add_term(acc, {term.left, term.right}, term.coeff);
  for (std::size_t m = 0; m < n; ++m)
    if (!H.unit()[m].is_zero()) add_term(acc, {m, i}, -H.unit()[m]);
  for (const auto& [k, v] : acc) c.set(k.first, k.second, v);
  return c;
}

// Unknown f with f(h1) h2 = f(h) 1.
Matrix dual_right_integral_constraint(const HopfPresentation& H, std::size_t i) {
  const std::size_t n = H.dim();
  Matrix c(n, n, H.field());
  SparseTensor2 acc;
  for (const auto& term : H.comult(i)) add_term(acc, {term.right, term.left}, term.coeff);
  for (std::size_t m = 0; m < n; ++m)
    if (!H.unit()[m].is_zero()) add_term(acc, {m, i}, -H.unit()[m]);
  for (const auto& [k, v] : acc) c.set(k.first, k.second, v);
  return c;
}

// Common kernel of the n constraints, computed by intersecting incrementally:
// the running kernel basis is cut by each constraint restricted to its span.
// Equivalent to the nullspace of the stacked n^2 x n system but far cheaper,
// since the span collapses to its final dimension after a few constraints.
std::vector<std::vector<Scalar>> common_kernel(
    const FieldSpec& f, std::size_t n,
    const std::function<Matrix(std::size_t)>& constraint) {
  std::vector<std::vector<Scalar>> basis(n, std::vector<Scalar>(n, Scalar::zero(f)));
  for (std::size_t i = 0; i < n; ++i) basis[i][i] = Scalar::one(f);
  for (std::size_t i = 0; i < n && !basis.empty(); ++i) {
    Matrix c = constraint(i);
    Matrix restricted(n, basis.size(), f);
    bool nonzero = false;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      std::vector<Scalar> img = c.apply(basis[b]);
      for (std::size_t r = 0; r < n; ++r) {
        if (img[r].is_zero()) continue;
        restricted.set(r, b, img[r]);
        nonzero = true;
      }
    }
    if (!nonzero) continue;
    std::vector<std::vector<Scalar>> small = nullspace(restricted);
    std::vector<std::vector<Scalar>> next;
    next.reserve(small.size());
    for (const auto& s : small) {
      std::vector<Scalar> v(n, Scalar::zero(f));
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (s[b].is_zero()) continue;
        for (std::size_t r = 0; r < n; ++r)
          if (!basis[b][r].is_zero()) v[r] = v[r] + s[b] * basis[b][r];
      }
      next.push_back(std::move(v));
    }
    basis = std::move(next);
  }
  for (auto& v : basis) {
    for (const Scalar& c : v) {
      if (c.is_zero()) continue;
      if (!c.is_one()) {
        Scalar inv = c.inv();
        for (auto& y : v) y = y * inv;
      }
      break;
    }
  }
  return basis;
}

// Membership predicates shared by the batteries. Each returns true when the
// defining equation holds at every basis element, else fills a witness.

bool left_member(const HopfPtr& h, const ElementFD& t, std::string& witness) {
  for (std::size_t i = 0; i < h->dim(); ++i) {
    ElementFD lhs = mul(h->basis_element(i), t);
    ElementFD rhs = scale(h->counit(i), t);
    if (lhs != rhs) {
      witness = "h = " + h->basis_names()[i] + ": h t = " + lhs.str() + ", eps(h) t = " + rhs.str();
      return false;
    }
  }
  return true;
}

bool right_member(const HopfPtr& h, const ElementFD& t, std::string& witness) {
  for (std::size_t i = 0; i < h->dim(); ++i) {
    ElementFD lhs = mul(t, h->basis_element(i));
    ElementFD rhs = scale(h->counit(i), t);
    if (lhs != rhs) {
      witness = "h = " + h->basis_names()[i] + ": t h = " + lhs.str() + ", eps(h) t = " + rhs.str();
      return false;
    }
  }
  return true;
}

bool dual_left_member(const HopfPtr& h, const FunctionalFD& f, std::string& witness) {
  const FieldSpec& k = h->field();
  const std::size_t n = h->dim();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Scalar> lhs(n, Scalar::zero(k));
    for (const auto& term : h->comult(i))
      if (!f.value(term.right).is_zero())
        lhs[term.left] = lhs[term.left] + term.coeff * f.value(term.right);
    std::vector<Scalar> rhs(n, Scalar::zero(k));
    for (std::size_t m = 0; m < n; ++m) rhs[m] = f.value(i) * h->unit()[m];
    if (lhs != rhs) {
      witness = "h = " + h->basis_names()[i] + ": h1 f(h2) = " + h->element(lhs).str() +
                ", f(h) 1 = " + h->element(rhs).str();
      return false;
    }
  }
  return true;
}

bool dual_right_member(const HopfPtr& h, const FunctionalFD& f, std::string& witness) {
  const FieldSpec& k = h->field();
  const std::size_t n = h->dim();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Scalar> lhs(n, Scalar::zero(k));
    for (const auto& term : h->comult(i))
      if (!f.value(term.left).is_zero())
        lhs[term.right] = lhs[term.right] + term.coeff * f.value(term.left);
    std::vector<Scalar> rhs(n, Scalar::zero(k));
    for (std::size_t m = 0; m < n; ++m) rhs[m] = f.value(i) * h->unit()[m];
    if (lhs != rhs) {
      witness = "h = " + h->basis_names()[i] + ": f(h1) h2 = " + h->element(lhs).str() +
                ", f(h) 1 = " + h->element(rhs).str();
      return false;
    }
  }
  return true;
}

}  // namespace

IntegralData compute_integrals(const HopfPtr& h) {
  const HopfPresentation& H = *h;
  const FieldSpec& f = H.field();
  const std::size_t n = H.dim();
  auto one_dim = [&](const char* which, const std::function<Matrix(std::size_t)>& c) {
    std::vector<std::vector<Scalar>> basis = common_kernel(f, n, c);
    if (basis.size() != 1)
      fail(errc::integral_dimension, std::string(which) + " integral space of " + H.name() +
                                         " has dimension " + std::to_string(basis.size()));
    return std::move(basis.front());
  };
  std::vector<Scalar> t =
      one_dim("left", [&](std::size_t i) { return left_integral_constraint(H, i); });
  std::vector<Scalar> T =
      one_dim("right", [&](std::size_t i) { return right_integral_constraint(H, i); });
  std::vector<Scalar> lam =
      one_dim("dual left", [&](std::size_t i) { return dual_left_integral_constraint(H, i); });
  std::vector<Scalar> Lam =
      one_dim("dual right", [&](std::size_t i) { return dual_right_integral_constraint(H, i); });
  return IntegralData{h->element(std::move(t)), h->element(std::move(T)),
                      h->functional(std::move(lam)), h->functional(std::move(Lam))};
}

FunctionalFD distinguished_alpha(const HopfPtr& h, const IntegralData& integrals) {
  const HopfPresentation& H = *h;
  const FieldSpec& f = H.field();
  const std::size_t n = H.dim();
  const ElementFD& t = integrals.left_H;
  std::size_t p = n;
  for (std::size_t i = 0; i < n; ++i)
    if (!t.coord(i).is_zero()) {
      p = i;
      break;
    }
  if (p == n) fail(errc::inconsistent_grouplike, "zero left integral in " + H.name());
  const Scalar tp_inv = t.coord(p).inv();
  std::vector<Scalar> a;
  a.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ElementFD u = mul(t, H.basis_element(i));
    Scalar ai = u.coord(p) * tp_inv;
    if (u != scale(ai, t))
      fail(errc::inconsistent_grouplike,
           "t h is not a scalar multiple of t at h = " + H.basis_names()[i] + " in " + H.name());
    a.push_back(std::move(ai));
  }
  Scalar at_one = Scalar::zero(f);
  for (std::size_t m = 0; m < n; ++m)
    if (!H.unit()[m].is_zero()) at_one = at_one + H.unit()[m] * a[m];
  if (!at_one.is_one())
    fail(errc::inconsistent_grouplike, "alpha(1) = " + at_one.str() + " in " + H.name());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar lhs = eval_values(f, a, H.mult(i, j));
      if (lhs != a[i] * a[j])
        fail(errc::inconsistent_grouplike, "alpha is not multiplicative at (" + H.basis_names()[i] +
                                               ", " + H.basis_names()[j] + ") in " + H.name());
    }
  return h->functional(std::move(a));
}

ElementFD distinguished_g(const HopfPtr& h, const IntegralData& integrals) {
  const HopfPresentation& H = *h;
  const FieldSpec& f = H.field();
  const std::size_t n = H.dim();
  const FunctionalFD& L = integrals.right_Hstar;
  std::size_t p = n;
  for (std::size_t i = 0; i < n; ++i)
    if (!L.value(i).is_zero()) {
      p = i;
      break;
    }
  if (p == n) fail(errc::inconsistent_grouplike, "zero dual right integral in " + H.name());
  const Scalar lp_inv = L.value(p).inv();
  std::vector<Scalar> gv(n, Scalar::zero(f));
  for (const auto& term : H.comult(p))
    if (!L.value(term.right).is_zero())
      gv[term.left] = gv[term.left] + term.coeff * L.value(term.right);
  for (auto& c : gv) c = c * lp_inv;
  ElementFD g = h->element(gv);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Scalar> lhs(n, Scalar::zero(f));
    for (const auto& term : H.comult(i))
      if (!L.value(term.right).is_zero())
        lhs[term.left] = lhs[term.left] + term.coeff * L.value(term.right);
    if (h->element(lhs) != scale(L.value(i), g))
      fail(errc::inconsistent_grouplike,
           "h1 Lambda(h2) = Lambda(h) g fails at h = " + H.basis_names()[i] + " in " + H.name());
  }
  SparseTensor2 gg;
  for (std::size_t i = 0; i < n; ++i) {
    if (gv[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!gv[j].is_zero()) add_term(gg, {i, j}, gv[i] * gv[j]);
  }
  if (comul(g) != gg)
    fail(errc::inconsistent_grouplike, "computed g is not grouplike in " + H.name());
  if (!counit_of(g).is_one())
    fail(errc::inconsistent_grouplike, "eps(g) != 1 in " + H.name());
  return g;
}

GrouplikeData compute_grouplikes(const HopfPtr& h, const IntegralData& integrals) {
  FunctionalFD alpha = distinguished_alpha(h, integrals);
  ElementFD g = distinguished_g(h, integrals);
  FunctionalFD alpha_inv = compose(alpha, h->antipode());
  ElementFD g_inv = h->element(h->antipode().apply(g.coords()));
  const FunctionalFD eps = h->counit_functional();
  if (convolve(alpha, alpha_inv) != eps || convolve(alpha_inv, alpha) != eps)
    fail(errc::internal, "alpha o S is not the convolution inverse of alpha in " + h->name());
  if (mul(g, g_inv) != h->one() || mul(g_inv, g) != h->one())
    fail(errc::internal, "S(g) is not the inverse of g in " + h->name());
  return GrouplikeData{std::move(alpha), std::move(alpha_inv), std::move(g), std::move(g_inv)};
}

Matrix nakayama_chi(const HopfPtr& h, const IntegralData& integrals) {
  const HopfPresentation& H = *h;
  const FieldSpec& f = H.field();
  const std::size_t n = H.dim();
  const std::vector<Scalar>& lam = integrals.left_Hstar.values();
  // B[m][i] = lambda(e_m e_i); the defining equation reads B^T chi = B.
  Matrix b(n, n, f);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i) b.set(m, i, eval_values(f, lam, H.mult(m, i)));
  std::optional<Matrix> a_inv = inverse(b.transpose());
  if (!a_inv)
    fail(errc::singular_action, "action matrix of lambda is singular in " + H.name());
  Matrix chi = *a_inv * b;
  for (std::size_t i = 0; i < n; ++i) {
    FunctionalFD lhs = act_left(H.basis_element(i), integrals.left_Hstar);
    FunctionalFD rhs = act_right(integrals.left_Hstar, h->element(mat_col(chi, i)));
    if (lhs != rhs)
      fail(errc::internal, "chi defining equation fails at " + H.basis_names()[i] + " in " + H.name());
  }
  if (h->element(chi.apply(H.unit())) != h->one())
    fail(errc::internal, "chi(1) != 1 in " + H.name());
  std::vector<ElementFD> chi_basis;
  chi_basis.reserve(n);
  for (std::size_t i = 0; i < n; ++i) chi_basis.push_back(h->element(mat_col(chi, i)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Scalar> prod(n, Scalar::zero(f));
      for (const auto& [k, c] : H.mult(i, j)) prod[k] = c;
      if (h->element(chi.apply(prod)) != mul(chi_basis[i], chi_basis[j]))
        fail(errc::internal, "chi is not multiplicative at (" + H.basis_names()[i] + ", " +
                                 H.basis_names()[j] + ") in " + H.name());
    }
  if (!inverse(chi)) fail(errc::internal, "chi is not invertible in " + H.name());
  // Cross-check eps o chi against the independently computed alpha.
  FunctionalFD eps_chi = compose(h->counit_functional(), chi);
  if (eps_chi != distinguished_alpha(h, integrals))
    fail(errc::internal, "eps o chi differs from alpha in " + H.name());
  return chi;
}

Matrix nakayama_omega(const HopfPtr& h, const IntegralData& integrals) {
  const HopfPresentation& H = *h;
  const FieldSpec& f = H.field();
  const std::size_t n = H.dim();
  const std::vector<Scalar>& Lam = integrals.right_Hstar.values();
  // Q[m][r] = Lambda(e_m e_r); the defining equation reads Q Omega = Q^T.
  Matrix q(n, n, f);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t r = 0; r < n; ++r) q.set(m, r, eval_values(f, Lam, H.mult(m, r)));
  std::optional<Matrix> q_inv = inverse(q);
  if (!q_inv)
    fail(errc::singular_action, "action matrix of Lambda is singular in " + H.name());
  Matrix omega = *q_inv * q.transpose();
  for (std::size_t i = 0; i < n; ++i) {
    FunctionalFD lhs = act_left(h->element(mat_col(omega, i)), integrals.right_Hstar);
    FunctionalFD rhs = act_right(integrals.right_Hstar, H.basis_element(i));
    if (lhs != rhs)
      fail(errc::internal,
           "Omega defining equation fails at " + H.basis_names()[i] + " in " + H.name());
  }
  Matrix chi = nakayama_chi(h, integrals);
  const Matrix& s = H.antipode();
  const Matrix& s_inv = H.antipode_inverse();
  if (omega != s_inv * chi * s || omega != s * chi * s_inv)
    fail(errc::internal, "Omega is not the antipode conjugate of chi in " + H.name());
  FunctionalFD eps_omega = compose(h->counit_functional(), omega);
  if (eps_omega != compose(distinguished_alpha(h, integrals), s))
    fail(errc::internal, "eps o Omega differs from alpha^-1 in " + H.name());
  return omega;
}

Matrix chi_closed_form(const HopfPtr& h, const GrouplikeData& grouplikes) {
  const HopfPresentation& H = *h;
  const FieldSpec& f = H.field();
  const std::size_t n = H.dim();
  std::vector<SparseVec> sm2 = matrix_columns(antipode_power_matrix(H, -2));
  Matrix out(n, n, f);
  for (std::size_t i = 0; i < n; ++i) {
    SparseVec acc;
    for (const auto& term : H.comult(i)) {
      const Scalar& ar = grouplikes.alpha.value(term.right);
      if (ar.is_zero()) continue;
      for (const auto& [m, w] : sm2[term.left]) add_term(acc, m, term.coeff * ar * w);
    }
    for (const auto& [m, v] : acc) out.set(m, i, v);
  }
  return out;
}

Matrix chi_conjugated_form(const HopfPtr& h, const GrouplikeData& grouplikes) {
  const HopfPresentation& H = *h;
  const FieldSpec& f = H.field();
  const std::size_t n = H.dim();
  Matrix s2 = antipode_power_matrix(H, 2);
  std::vector<ElementFD> conj;
  conj.reserve(n);
  for (std::size_t r = 0; r < n; ++r)
    conj.push_back(mul(mul(grouplikes.g_inv, h->element(mat_col(s2, r))), grouplikes.g));
  Matrix out(n, n, f);
  for (std::size_t i = 0; i < n; ++i) {
    SparseVec acc;
    for (const auto& term : H.comult(i)) {
      const Scalar& al = grouplikes.alpha.value(term.left);
      if (al.is_zero()) continue;
      const std::vector<Scalar>& w = conj[term.right].coords();
      for (std::size_t m = 0; m < n; ++m)
        if (!w[m].is_zero()) add_term(acc, m, term.coeff * al * w[m]);
    }
    for (const auto& [m, v] : acc) out.set(m, i, v);
  }
  return out;
}

VerificationReport verify_normalized_integral_identities(const HopfPtr& h,
                                                         const IntegralData& integrals,
                                                         const GrouplikeData& grouplikes) {
  const HopfPresentation& H = *h;
  const FieldSpec& f = H.field();
  const std::size_t n = H.dim();
  VerificationReport rep;
  const ElementFD& t = integrals.left_H;
  Scalar c = integrals.right_Hstar(t);
  if (c.is_zero())
    fail(errc::internal, "Lambda(t) = 0 in " + H.name() + "; t <- Lambda cannot be normalized");
  FunctionalFD L = scale(c.inv(), integrals.right_Hstar);

  {
    std::string witness;
    bool ok = dual_right_member(h, L, witness);
    rep.add("normalized-lambda-right-integral", ok, witness,
            "Lambda rescaled by 1/(" + c.str() + ") so that t <- Lambda = 1");
  }

  {
    // h* |-> t <- h* in matrix form; its inverse recovers h* from h.
    Matrix m(n, n, f);
    for (std::size_t j = 0; j < n; ++j) {
      ElementFD img = act_right(t, h->dual_basis_functional(j));
      for (std::size_t r = 0; r < n; ++r)
        if (!img.coord(r).is_zero()) m.set(r, j, img.coord(r));
    }
    std::optional<Matrix> m_inv = inverse(m);
    if (!m_inv) {
      rep.fail("integral-preimage-forms", "the map h* |-> t <- h* is singular in " + H.name());
    } else {
      std::vector<SparseVec> s_cols = matrix_columns(H.antipode());
      std::vector<SparseVec> sinv_cols = matrix_columns(H.antipode_inverse());
      bool ok = true;
      std::string witness;
      for (std::size_t i = 0; i < n && ok; ++i) {
        std::vector<Scalar> e(n, Scalar::zero(f));
        e[i] = Scalar::one(f);
        FunctionalFD hstar = h->functional(m_inv->apply(e));
        std::vector<Scalar> sh(n, Scalar::zero(f));
        for (const auto& [r, w] : s_cols[i]) sh[r] = w;
        FunctionalFD form1 = act_right(L, h->element(sh));
        std::vector<Scalar> av(n, Scalar::zero(f));
        for (const auto& term : H.comult(i)) {
          const Scalar& ar = grouplikes.alpha.value(term.right);
          if (ar.is_zero()) continue;
          for (const auto& [m2, w] : sinv_cols[term.left])
            av[m2] = av[m2] + term.coeff * ar * w;
        }
        FunctionalFD form2 = act_left(h->element(av), L);
        if (hstar != form1 || hstar != form2) {
          ok = false;
          witness = "h = " + H.basis_names()[i] + ": h* = " + hstar.str() +
                    ", Lambda <- S(h) = " + form1.str() +
                    ", alpha(h2) S^-1(h1) -> Lambda = " + form2.str();
        }
      }
      rep.add("integral-preimage-forms", ok, witness);
    }
  }

  {
    SparseTensor2 lhs = comul(t);
    SparseTensor2 rhs;
    Matrix s2 = antipode_power_matrix(H, 2);
    for (const auto& [key, c2] : lhs) {
      ElementFD u = mul(h->element(mat_col(s2, key.second)), grouplikes.g);
      for (std::size_t m = 0; m < n; ++m)
        if (!u.coord(m).is_zero()) add_term(rhs, {m, key.first}, c2 * u.coord(m));
    }
    rep.add("integral-comult-twist", lhs == rhs,
            "Delta(t) = " + tensor_str(H, lhs) + ", S^2(t2) g (x) t1 = " + tensor_str(H, rhs));
  }
  return rep;
}

VerificationReport verify_bijections(const HopfPtr& h, const ElementFD& l,
                                     const std::string& label) {
  const HopfPresentation& H = *h;
  const FieldSpec& f = H.field();
  const std::size_t n = H.dim();
  Matrix left_action(n, n, f), right_action(n, n, f);
  for (std::size_t j = 0; j < n; ++j) {
    ElementFD a = act_left(h->dual_basis_functional(j), l);
    ElementFD b = act_right(l, h->dual_basis_functional(j));
    for (std::size_t r = 0; r < n; ++r) {
      if (!a.coord(r).is_zero()) left_action.set(r, j, a.coord(r));
      if (!b.coord(r).is_zero()) right_action.set(r, j, b.coord(r));
    }
  }
  VerificationReport rep;
  std::size_t rl = rank(left_action), rr = rank(right_action);
  rep.add("bijection-left-" + label, rl == n,
          "rank " + std::to_string(rl) + " of " + std::to_string(n),
          "f |-> f -> " + label + " on " + H.name());
  rep.add("bijection-right-" + label, rr == n,
          "rank " + std::to_string(rr) + " of " + std::to_string(n),
          "f |-> " + label + " <- f on " + H.name());
  return rep;
}

VerificationReport verify_bijections(const HopfPtr& h, const IntegralData& integrals) {
  VerificationReport rep;
  rep.merge(verify_bijections(h, integrals.left_H, "t"));
  rep.merge(verify_bijections(h, integrals.right_H, "T"));
  return rep;
}

VerificationReport verify_antipode_pullbacks(const HopfPtr& h, const IntegralData& integrals,
                                             const GrouplikeData& grouplikes) {
  const HopfPresentation& H = *h;
  VerificationReport rep;
  const FunctionalFD& lam = integrals.left_Hstar;
  auto check = [&](const char* name, const FunctionalFD& lhs, const FunctionalFD& rhs) {
    rep.add(name, lhs == rhs, "lhs = " + lhs.str() + ", rhs = " + rhs.str());
  };
  check("lambda-pullback-s", compose(lam, H.antipode()), act_left(grouplikes.g_inv, lam));
  check("lambda-pullback-s-inverse", compose(lam, H.antipode_inverse()),
        act_right(lam, grouplikes.g_inv));
  check("lambda-pullback-s-squared", compose(lam, antipode_power_matrix(H, 2)),
        act_right(act_left(grouplikes.g_inv, lam), grouplikes.g));
  return rep;
}

TraceIntegrals trace_integrals(const HopfPtr& h) {
  const HopfPresentation& H = *h;
  const FieldSpec& f = H.field();
  const std::size_t n = H.dim();
  Matrix s2 = antipode_power_matrix(H, 2);
  std::vector<Scalar> rv(n, Scalar::zero(f)), tv(n, Scalar::zero(f));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& term : H.comult(i)) {
      Scalar cl = s2.at(i, term.left);
      if (!cl.is_zero()) rv[term.right] = rv[term.right] + term.coeff * cl;
      Scalar cr = s2.at(i, term.right);
      if (!cr.is_zero()) tv[term.left] = tv[term.left] + term.coeff * cr;
    }
  }
  FunctionalFD lam = h->zero_functional();
  FunctionalFD Lam = h->zero_functional();
  for (std::size_t i = 0; i < n; ++i) {
    ElementFD s2e = h->element(mat_col(s2, i));
    lam = add(lam, act_left(s2e, h->dual_basis_functional(i)));
    Lam = add(Lam, act_right(h->dual_basis_functional(i), s2e));
  }
  Scalar tr = Scalar::zero(f);
  for (std::size_t i = 0; i < n; ++i) tr = tr + s2.at(i, i);
  return TraceIntegrals{h->element(std::move(rv)), h->element(std::move(tv)), std::move(lam),
                        std::move(Lam), std::move(tr)};
}

bool is_semisimple(const HopfPtr&, const IntegralData& integrals) {
  return !counit_of(integrals.left_H).is_zero();
}

bool is_cosemisimple(const HopfPtr& h, const IntegralData& integrals) {
  return !integrals.left_Hstar(h->one()).is_zero();
}

VerificationReport verify_trace_integrals(const HopfPtr& h, const IntegralData& integrals) {
  const HopfPresentation& H = *h;
  VerificationReport rep;
  TraceIntegrals tr = trace_integrals(h);

  std::string witness;
  rep.add("trace-right-integral-membership", right_member(h, tr.right_H, witness), witness,
          "r = " + tr.right_H.str());
  witness.clear();
  rep.add("trace-left-integral-membership", left_member(h, tr.left_H, witness), witness,
          "t = " + tr.left_H.str());
  witness.clear();
  rep.add("trace-dual-left-membership", dual_left_member(h, tr.left_Hstar, witness), witness);
  witness.clear();
  rep.add("trace-dual-right-membership", dual_right_member(h, tr.right_Hstar, witness), witness);

  Scalar er = counit_of(tr.right_H);
  Scalar et = counit_of(tr.left_H);
  Scalar l1 = tr.left_Hstar(h->one());
  Scalar L1 = tr.right_Hstar(h->one());
  bool common = er == et && et == tr.trace_s2 && l1 == tr.trace_s2 && L1 == tr.trace_s2;
  rep.add("trace-common-value", common,
          "eps(r) = " + er.str() + ", eps(t) = " + et.str() + ", Tr(S^2) = " + tr.trace_s2.str() +
              ", lambda(1) = " + l1.str() + ", Lambda(1) = " + L1.str(),
          "common value " + tr.trace_s2.str());

  bool cs = is_cosemisimple(h, integrals);
  bool ss = is_semisimple(h, integrals);
  rep.add("trace-detects-cosemisimple",
          (!tr.right_H.is_zero()) == cs && (!tr.left_H.is_zero()) == cs,
          std::string("r ") + (tr.right_H.is_zero() ? "= 0" : "!= 0") + ", t " +
              (tr.left_H.is_zero() ? "= 0" : "!= 0") + ", cosemisimple = " + (cs ? "yes" : "no"));
  rep.add("trace-detects-semisimple",
          (!tr.left_Hstar.is_zero()) == ss && (!tr.right_Hstar.is_zero()) == ss,
          std::string("lambda ") + (tr.left_Hstar.is_zero() ? "= 0" : "!= 0") + ", Lambda " +
              (tr.right_Hstar.is_zero() ? "= 0" : "!= 0") + ", semisimple = " + (ss ? "yes" : "no"));

  if (ss)
    rep.add("trace-semisimple-two-sided", tr.right_H == tr.left_H,
            "r = " + tr.right_H.str() + ", t = " + tr.left_H.str());
  else
    rep.not_applicable("trace-semisimple-two-sided", H.name() + " is not semisimple");
  if (cs)
    rep.add("trace-cosemisimple-two-sided", tr.left_Hstar == tr.right_Hstar,
            "lambda = " + tr.left_Hstar.str() + ", Lambda = " + tr.right_Hstar.str());
  else
    rep.not_applicable("trace-cosemisimple-two-sided", H.name() + " is not cosemisimple");
  return rep;
}

VerificationReport integrals_battery(const HopfPtr& h) {
  const HopfPresentation& H = *h;
  VerificationReport rep;
  IntegralData I = compute_integrals(h);
  rep.pass("integral-spaces-one-dimensional",
           "t = " + I.left_H.str() + "; T = " + I.right_H.str());

  std::string witness;
  rep.add("left-integral-defining", left_member(h, I.left_H, witness), witness);
  witness.clear();
  rep.add("right-integral-defining", right_member(h, I.right_H, witness), witness);
  witness.clear();
  rep.add("dual-left-integral-defining", dual_left_member(h, I.left_Hstar, witness), witness,
          "lambda = " + I.left_Hstar.str());
  witness.clear();
  rep.add("dual-right-integral-defining", dual_right_member(h, I.right_Hstar, witness), witness,
          "Lambda = " + I.right_Hstar.str());

  GrouplikeData G = compute_grouplikes(h, I);
  rep.pass("alpha-character", "alpha = " + G.alpha.str());
  rep.pass("g-grouplike", "g = " + G.g.str());

  Matrix chi = nakayama_chi(h, I);
  rep.pass("chi-defining", "h -> lambda = lambda <- chi(h) on the basis");
  rep.pass("chi-automorphism", "multiplicative, unital and invertible");
  Matrix closed = chi_closed_form(h, G);
  rep.add("chi-closed-form", chi == closed, "chi(h) = alpha(h2) S^-2(h1) disagrees with the solve");
  Matrix conj = chi_conjugated_form(h, G);
  rep.add("chi-conjugated-form", chi == conj,
          "chi(h) = alpha(h1) g^-1 S^2(h2) g disagrees with the solve");
  FunctionalFD eps_chi = compose(h->counit_functional(), chi);
  rep.add("eps-chi-is-alpha", eps_chi == G.alpha,
          "eps o chi = " + eps_chi.str() + ", alpha = " + G.alpha.str());

  Matrix omega = nakayama_omega(h, I);
  rep.pass("omega-defining", "Omega(h) -> Lambda = Lambda <- h on the basis");
  rep.pass("omega-conjugate", "Omega = S^-1 chi S = S chi S^-1");
  FunctionalFD eps_omega = compose(h->counit_functional(), omega);
  rep.add("eps-omega-is-alpha-inverse", eps_omega == G.alpha_inv,
          "eps o Omega = " + eps_omega.str() + ", alpha^-1 = " + G.alpha_inv.str());

  rep.merge(verify_normalized_integral_identities(h, I, G));
  rep.merge(verify_bijections(h, I));
  rep.merge(verify_antipode_pullbacks(h, I, G));
  rep.merge(verify_trace_integrals(h, I));

  // Normalized representatives are unique, so proportionality is equality.
  bool alpha_trivial = G.alpha == h->counit_functional();
  bool two_sided = I.left_H == I.right_H;
  rep.add("unimodular-iff-alpha-trivial", alpha_trivial == two_sided,
          std::string("alpha ") + (alpha_trivial ? "=" : "!=") + " eps, t " +
              (two_sided ? "=" : "!=") + " T");
  bool g_trivial = G.g == h->one();
  bool dual_two_sided = I.left_Hstar == I.right_Hstar;
  rep.add("dual-unimodular-iff-g-trivial", g_trivial == dual_two_sided,
          std::string("g ") + (g_trivial ? "=" : "!=") + " 1, lambda " +
              (dual_two_sided ? "=" : "!=") + " Lambda");

  ElementFD st = h->element(H.antipode().apply(I.left_H.coords()));
  witness.clear();
  rep.add("antipode-left-to-right-integral", right_member(h, st, witness), witness,
          "S(t) = " + st.str());
  return rep;
}

}  // namespace hopfkit
