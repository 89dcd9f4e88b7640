#include "hopfkit/constructions.hpp"

#include <algorithm>

namespace hopfkit {

// ---------------------------------------------------------------------------
// Groups

GroupTable GroupTable::cyclic(std::size_t n) {
  if (n == 0) fail(errc::invalid_argument, "cyclic group order must be positive");
  GroupTable g;
  g.order = n;
  g.identity = 0;
  g.mul.assign(n, std::vector<std::size_t>(n));
  g.inverse.resize(n);
  g.names.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g.mul[i][j] = (i + j) % n;
    g.inverse[i] = (n - i) % n;
    g.names[i] = i == 0 ? "1" : (i == 1 ? "a" : "a^" + std::to_string(i));
  }
  g.validate();
  return g;
}

GroupTable GroupTable::symmetric3() {
  // Permutations of {0,1,2} in a fixed order; composition (p*q)(x) = p(q(x)).
  const std::array<std::array<std::size_t, 3>, 6> perms = {{
      {0, 1, 2},  // e
      {1, 0, 2},  // (12)
      {2, 1, 0},  // (13)
      {0, 2, 1},  // (23)
      {1, 2, 0},  // (123): 0->1, 1->2, 2->0
      {2, 0, 1},  // (132)
  }};
  GroupTable g;
  g.order = 6;
  g.identity = 0;
  g.names = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  g.mul.assign(6, std::vector<std::size_t>(6));
  g.inverse.assign(6, 0);
  auto index_of = [&](const std::array<std::size_t, 3>& p) {
    for (std::size_t k = 0; k < 6; ++k)
      if (perms[k] == p) return k;
    fail(errc::internal, "permutation closure failure");
  };
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<std::size_t, 3> c{};
      for (std::size_t x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];
      g.mul[i][j] = index_of(c);
    }
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      if (g.mul[i][j] == 0) g.inverse[i] = j;
  g.validate();
  return g;
}

GroupTable GroupTable::direct_product(const GroupTable& a, const GroupTable& b) {
  GroupTable g;
  g.order = a.order * b.order;
  g.identity = a.identity * b.order + b.identity;
  g.mul.assign(g.order, std::vector<std::size_t>(g.order));
  g.inverse.resize(g.order);
  g.names.resize(g.order);
  auto id = [&](std::size_t i, std::size_t j) { return i * b.order + j; };
  for (std::size_t i = 0; i < a.order; ++i)
    for (std::size_t j = 0; j < b.order; ++j) {
      g.names[id(i, j)] = "(" + a.names[i] + "," + b.names[j] + ")";
      g.inverse[id(i, j)] = id(a.inverse[i], b.inverse[j]);
      for (std::size_t k = 0; k < a.order; ++k)
        for (std::size_t l = 0; l < b.order; ++l)
          g.mul[id(i, j)][id(k, l)] = id(a.mul[i][k], b.mul[j][l]);
    }
  g.validate();
  return g;
}

void GroupTable::validate() const {
  const std::size_t n = order;
  if (n == 0 || mul.size() != n || inverse.size() != n || names.size() != n || identity >= n)
    fail(errc::invalid_argument, "malformed group table");
  for (const auto& row : mul) {
    if (row.size() != n) fail(errc::invalid_argument, "malformed group table row");
    for (std::size_t v : row)
      if (v >= n) fail(errc::invalid_argument, "group table entry out of range");
  }
  for (std::size_t i = 0; i < n; ++i)
    if (mul[identity][i] != i || mul[i][identity] != i)
      fail(errc::invalid_argument, "group identity fails");
  for (std::size_t i = 0; i < n; ++i)
    if (mul[i][inverse[i]] != identity || mul[inverse[i]][i] != identity)
      fail(errc::invalid_argument, "group inverse fails");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (mul[mul[i][j]][k] != mul[i][mul[j][k]])
          fail(errc::invalid_argument, "group associativity fails");
}

HopfPtr group_algebra(const GroupTable& g, const FieldSpec& f, std::string name) {
  g.validate();
  const std::size_t n = g.order;
  HopfBuilder b;
  b.field = f;
  b.dim = n;
  b.basis_names = g.names;
  b.unit.assign(n, Scalar::zero(f));
  b.unit[g.identity] = Scalar::one(f);
  b.counit.assign(n, Scalar::one(f));
  b.mult.assign(n, std::vector<SparseVec>(n));
  b.comult.assign(n, {});
  Matrix s(n, n, f);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) b.mult[i][j].emplace(g.mul[i][j], Scalar::one(f));
    b.comult[i].push_back({i, i, Scalar::one(f)});
    s.set(g.inverse[i], i, Scalar::one(f));
  }
  b.antipode = s;
  return b.build(std::move(name));
}

// ---------------------------------------------------------------------------
// Taft algebras

static std::string taft_name(unsigned n, unsigned i, unsigned j) {
  (void)n;
  std::string out;
  if (i == 1)
    out = "c";
  else if (i >= 2)
    out = "c^" + std::to_string(i);
  if (j >= 1) {
    if (!out.empty()) out += "*";
    out += j == 1 ? "x" : "x^" + std::to_string(j);
  }
  return out.empty() ? "1" : out;
}

HopfPtr taft(unsigned n, const FieldSpec& f, const Scalar& q, std::string name) {
  if (n < 2) fail(errc::invalid_argument, "Taft algebra needs n >= 2");
  if (q.field() != f) fail(errc::field_mismatch, "Taft parameter q from a different field");
  // q must be a primitive n-th root of unity.
  if (!q.pow(n).is_one())
    fail(errc::invalid_argument, "Taft parameter q is not an n-th root of unity");
  for (unsigned d = 1; d < n; ++d)
    if (q.pow(d).is_one())
      fail(errc::invalid_argument,
           "Taft parameter q is not primitive: q^" + std::to_string(d) + " = 1");

  const std::size_t dim = static_cast<std::size_t>(n) * n;
  // Basis c^i x^j at index j*n + i (sorted by (j, i)).
  auto idx = [n](unsigned i, unsigned j) { return static_cast<std::size_t>(j) * n + i; };

  HopfBuilder b;
  b.field = f;
  b.dim = dim;
  b.basis_names.resize(dim);
  b.unit.assign(dim, Scalar::zero(f));
  b.unit[idx(0, 0)] = Scalar::one(f);
  b.counit.assign(dim, Scalar::zero(f));
  b.mult.assign(dim, std::vector<SparseVec>(dim));
  b.comult.assign(dim, {});

  for (unsigned j = 0; j < n; ++j)
    for (unsigned i = 0; i < n; ++i) {
      b.basis_names[idx(i, j)] = taft_name(n, i, j);
      if (j == 0) b.counit[idx(i, j)] = Scalar::one(f);
    }

  // (c^i x^j)(c^k x^l) = q^{jk} c^{i+k} x^{j+l}, zero when j + l >= n.
  for (unsigned j = 0; j < n; ++j)
    for (unsigned i = 0; i < n; ++i)
      for (unsigned l = 0; l < n; ++l)
        for (unsigned k = 0; k < n; ++k) {
          if (j + l >= n) continue;
          b.mult[idx(i, j)][idx(k, l)].emplace(idx((i + k) % n, j + l),
                                               q.pow(static_cast<long long>(j) * k));
        }

  // Delta(c^i x^j) = sum_t gauss{j,t}_q c^{i+t} x^{j-t} (x) c^i x^t.
  for (unsigned j = 0; j < n; ++j)
    for (unsigned i = 0; i < n; ++i) {
      auto& terms = b.comult[idx(i, j)];
      for (unsigned t = 0; t <= j; ++t)
        terms.push_back({idx((i + t) % n, j - t), idx(i, t), gauss_binomial(j, t, q)});
      std::sort(terms.begin(), terms.end(), [](const ComultTerm& a, const ComultTerm& c) {
        return std::make_pair(a.left, a.right) < std::make_pair(c.left, c.right);
      });
    }

  // S(c^i x^j) = S(x)^j S(c)^i with S(c) = c^{n-1}, S(x) = -c^{n-1} x;
  // build it by multiplying through the table so the q-powers stay consistent.
  Matrix s(dim, dim, f);
  {
    std::vector<SparseVec> spow_x(n);  // S(x)^j
    spow_x[0].emplace(idx(0, 0), Scalar::one(f));
    SparseVec sx;
    sx.emplace(idx(n - 1, 1), -Scalar::one(f));
    for (unsigned j = 1; j < n; ++j) {
      SparseVec acc;
      for (const auto& [p, cp] : spow_x[j - 1])
        for (const auto& [r, cr] : sx) {
          Scalar cc = cp * cr;
          for (const auto& [k, c] : b.mult[p][r]) add_term(acc, k, cc * c);
        }
      spow_x[j] = std::move(acc);
    }
    for (unsigned j = 0; j < n; ++j)
      for (unsigned i = 0; i < n; ++i) {
        // multiply S(x)^j by c^{(n-i) mod n} on the right
        const std::size_t ci = idx((n - i) % n, 0);
        SparseVec acc;
        for (const auto& [p, cp] : spow_x[j])
          for (const auto& [k, c] : b.mult[p][ci]) add_term(acc, k, cp * c);
        for (const auto& [k, c] : acc) s.set(k, idx(i, j), c);
      }
  }
  b.antipode = s;
  return b.build(std::move(name));
}

HopfPtr taft(unsigned n) {
  FieldSpec f = FieldSpec::cyclotomic(n);
  return taft(n, f, Scalar::generator(f), "taft:" + std::to_string(n));
}

HopfPtr sweedler() {
  FieldSpec f = FieldSpec::rationals();
  HopfPtr h = taft(2, f, -Scalar::one(f), "sweedler");
  // Rename the Taft basis {1, c, x, c*x} to the conventional {1, g, x, gx}.
  HopfBuilder b;
  b.field = f;
  b.dim = 4;
  b.basis_names = {"1", "g", "x", "gx"};
  b.unit = h->unit();
  b.counit = {h->counit(0), h->counit(1), h->counit(2), h->counit(3)};
  b.mult.assign(4, std::vector<SparseVec>(4));
  b.comult.assign(4, {});
  for (std::size_t i = 0; i < 4; ++i) {
    b.comult[i] = h->comult(i);
    for (std::size_t j = 0; j < 4; ++j) b.mult[i][j] = h->mult(i, j);
  }
  b.antipode = h->antipode();
  return b.build("sweedler");
}

// ---------------------------------------------------------------------------
// Combinators

HopfPtr dual(const HopfPtr& h) {
  const std::size_t n = h->dim();
  const FieldSpec& f = h->field();
  HopfBuilder b;
  b.field = f;
  b.dim = n;
  b.basis_names.reserve(n);
  for (const auto& nm : h->basis_names()) b.basis_names.push_back("p_" + nm);
  // mult of the dual is transpose-of-comult: (e^i e^j)(e_k) = coeff of
  // e_i (x) e_j in Delta(e_k); unit is the counit vector and vice versa.
  b.mult.assign(n, std::vector<SparseVec>(n));
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& t : h->comult(k)) add_term(b.mult[t.left][t.right], k, t.coeff);
  b.unit.assign(n, Scalar::zero(f));
  for (std::size_t i = 0; i < n; ++i) b.unit[i] = h->counit(i);
  b.comult.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<ComultTerm> terms;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto it = h->mult(j, k).find(i);
        if (it != h->mult(j, k).end()) terms.push_back({j, k, it->second});
      }
    std::sort(terms.begin(), terms.end(), [](const ComultTerm& a, const ComultTerm& c) {
      return std::make_pair(a.left, a.right) < std::make_pair(c.left, c.right);
    });
    b.comult[i] = std::move(terms);
  }
  b.counit.assign(n, Scalar::zero(f));
  for (std::size_t i = 0; i < n; ++i) b.counit[i] = h->unit()[i];
  // <S*(e^i), e_j> = <e^i, S(e_j)>: the dual antipode matrix is the transpose.
  b.antipode = h->antipode().transpose();
  b.antipode_inverse = h->antipode_inverse().transpose();
  return b.build("dual:" + h->name());
}

HopfPtr op(const HopfPtr& h) {
  const std::size_t n = h->dim();
  HopfBuilder b;
  b.field = h->field();
  b.dim = n;
  b.basis_names = h->basis_names();
  b.unit = h->unit();
  b.counit.assign(n, Scalar::zero(b.field));
  for (std::size_t i = 0; i < n; ++i) b.counit[i] = h->counit(i);
  b.mult.assign(n, std::vector<SparseVec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b.mult[i][j] = h->mult(j, i);
  b.comult.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) b.comult[i] = h->comult(i);
  // H^op is a Hopf algebra with antipode S^{-1}.
  b.antipode = h->antipode_inverse();
  b.antipode_inverse = h->antipode();
  return b.build("op:" + h->name());
}

HopfPtr cop(const HopfPtr& h) {
  const std::size_t n = h->dim();
  HopfBuilder b;
  b.field = h->field();
  b.dim = n;
  b.basis_names = h->basis_names();
  b.unit = h->unit();
  b.counit.assign(n, Scalar::zero(b.field));
  for (std::size_t i = 0; i < n; ++i) b.counit[i] = h->counit(i);
  b.mult = {};
  b.mult.assign(n, std::vector<SparseVec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b.mult[i][j] = h->mult(i, j);
  b.comult.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<ComultTerm> terms;
    for (const auto& t : h->comult(i)) terms.push_back({t.right, t.left, t.coeff});
    std::sort(terms.begin(), terms.end(), [](const ComultTerm& a, const ComultTerm& c) {
      return std::make_pair(a.left, a.right) < std::make_pair(c.left, c.right);
    });
    b.comult[i] = std::move(terms);
  }
  // H^cop is a Hopf algebra with antipode S^{-1}.
  b.antipode = h->antipode_inverse();
  b.antipode_inverse = h->antipode();
  return b.build("cop:" + h->name());
}

HopfPtr tensor_product(const HopfPtr& ha, const HopfPtr& hb) {
  if (ha->field() != hb->field())
    fail(errc::field_mismatch, "tensor product needs a common coefficient field");
  const FieldSpec& f = ha->field();
  const std::size_t na = ha->dim(), nb = hb->dim(), n = na * nb;
  auto id = [nb](std::size_t i, std::size_t j) { return i * nb + j; };
  HopfBuilder b;
  b.field = f;
  b.dim = n;
  b.basis_names.resize(n);
  b.unit.assign(n, Scalar::zero(f));
  b.counit.assign(n, Scalar::zero(f));
  b.mult.assign(n, std::vector<SparseVec>(n));
  b.comult.assign(n, {});
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      const std::size_t me = id(i, j);
      b.basis_names[me] = ha->basis_names()[i] + "(x)" + hb->basis_names()[j];
      b.unit[me] = ha->unit()[i] * hb->unit()[j];
      b.counit[me] = ha->counit(i) * hb->counit(j);
      for (std::size_t k = 0; k < na; ++k)
        for (std::size_t l = 0; l < nb; ++l) {
          auto& cell = b.mult[me][id(k, l)];
          for (const auto& [p, cp] : ha->mult(i, k))
            for (const auto& [q, cq] : hb->mult(j, l)) add_term(cell, id(p, q), cp * cq);
        }
      // Delta(a (x) b) keeps the middle flip implicit in the index pairing.
      std::vector<ComultTerm> terms;
      for (const auto& ta : ha->comult(i))
        for (const auto& tb : hb->comult(j))
          terms.push_back({id(ta.left, tb.left), id(ta.right, tb.right), ta.coeff * tb.coeff});
      std::sort(terms.begin(), terms.end(), [](const ComultTerm& a, const ComultTerm& c) {
        return std::make_pair(a.left, a.right) < std::make_pair(c.left, c.right);
      });
      b.comult[me] = std::move(terms);
    }
  Matrix s(n, n, f), sinv(n, n, f);
  for (const auto& [ij, va] : ha->antipode().entries())
    for (const auto& [kl, vb] : hb->antipode().entries())
      s.set(id(ij.first, kl.first), id(ij.second, kl.second), va * vb);
  for (const auto& [ij, va] : ha->antipode_inverse().entries())
    for (const auto& [kl, vb] : hb->antipode_inverse().entries())
      sinv.set(id(ij.first, kl.first), id(ij.second, kl.second), va * vb);
  b.antipode = s;
  b.antipode_inverse = sinv;
  return b.build("tensor:" + ha->name() + ":" + hb->name());
}

}  // namespace hopfkit
