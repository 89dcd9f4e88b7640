#include "hopfkit/hopf.hpp"

#include <algorithm>
#include <set>

namespace hopfkit {

void add_term(SparseVec& v, std::size_t k, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = v.find(k);
  if (it == v.end()) {
    v.emplace(k, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) v.erase(it);
}

void add_term(SparseTensor2& t, std::pair<std::size_t, std::size_t> k, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = t.find(k);
  if (it == t.end()) {
    t.emplace(k, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) t.erase(it);
}

// ---------------------------------------------------------------------------
// Elements and functionals

static void check_same_algebra(const HopfPtr& a, const HopfPtr& b, const char* op) {
  if (a != b)
    fail(errc::algebra_mismatch, std::string(op) + " across distinct algebra presentations (" +
                                     a->name() + " vs " + b->name() + ")");
}

ElementFD::ElementFD(HopfPtr algebra, std::vector<Scalar> coords)
    : alg_(std::move(algebra)), coords_(std::move(coords)) {
  if (coords_.size() != alg_->dim())
    fail(errc::out_of_range, "element coordinate count does not match dim(" + alg_->name() + ")");
  for (const auto& c : coords_)
    if (c.field() != alg_->field()) fail(errc::field_mismatch, "element coordinate field mismatch");
}

bool ElementFD::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

bool ElementFD::operator==(const ElementFD& o) const {
  check_same_algebra(alg_, o.alg_, "element comparison");
  return coords_ == o.coords_;
}

// Shared pretty-printer for named linear combinations.
static std::string combo_str(const std::vector<std::string>& names,
                             const std::vector<Scalar>& coords) {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const Scalar& c = coords[i];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    bool neg = cs.size() > 1 && cs[0] == '-' && (-c).str() == cs.substr(1);
    if (out.empty()) {
      if (neg) {
        out += "-";
        cs = cs.substr(1);
      }
    } else {
      out += neg ? " - " : " + ";
      if (neg) cs = cs.substr(1);
    }
    if (cs == "1")
      out += names[i];
    else if (cs.find_first_of("+-/ ") != std::string::npos)
      out += "(" + cs + ")*" + names[i];
    else
      out += cs + "*" + names[i];
  }
  return out.empty() ? "0" : out;
}

std::string ElementFD::str() const { return combo_str(alg_->basis_names(), coords_); }

FunctionalFD::FunctionalFD(HopfPtr algebra, std::vector<Scalar> values)
    : alg_(std::move(algebra)), values_(std::move(values)) {
  if (values_.size() != alg_->dim())
    fail(errc::out_of_range, "functional value count does not match dim(" + alg_->name() + ")");
  for (const auto& c : values_)
    if (c.field() != alg_->field()) fail(errc::field_mismatch, "functional value field mismatch");
}

Scalar FunctionalFD::operator()(const ElementFD& x) const {
  check_same_algebra(alg_, x.algebra(), "functional evaluation");
  Scalar s = Scalar::zero(alg_->field());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].is_zero() || x.coord(i).is_zero()) continue;
    s = s + values_[i] * x.coord(i);
  }
  return s;
}

bool FunctionalFD::is_zero() const {
  for (const auto& c : values_)
    if (!c.is_zero()) return false;
  return true;
}

bool FunctionalFD::operator==(const FunctionalFD& o) const {
  check_same_algebra(alg_, o.alg_, "functional comparison");
  return values_ == o.values_;
}

std::string FunctionalFD::str() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].is_zero()) continue;
    if (!first) out += ", ";
    out += alg_->basis_names()[i] + " -> " + values_[i].str();
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Presentation construction

HopfPresentation::HopfPresentation(const HopfBuilder& b, std::string name)
    : name_(std::move(name)),
      field_(b.field),
      dim_(b.dim),
      names_(b.basis_names),
      mult_(b.mult),
      unit_(b.unit),
      comult_(b.comult),
      counit_(b.counit),
      antipode_(b.antipode ? *b.antipode : Matrix(0, 0, b.field)),
      antipode_inv_(Matrix(0, 0, b.field)) {}

static void validate_builder(const HopfBuilder& b) {
  const std::size_t n = b.dim;
  if (n == 0) fail(errc::invalid_argument, "algebra dimension must be positive");
  if (b.basis_names.size() != n) fail(errc::invalid_argument, "basis name count != dim");
  std::set<std::string> seen;
  for (const auto& nm : b.basis_names) {
    if (nm.empty() || !seen.insert(nm).second)
      fail(errc::invalid_argument, "basis names must be nonempty and distinct");
  }
  if (b.mult.size() != n) fail(errc::invalid_argument, "mult table row count != dim");
  for (const auto& row : b.mult)
    if (row.size() != n) fail(errc::invalid_argument, "mult table column count != dim");
  if (b.unit.size() != n || b.counit.size() != n)
    fail(errc::invalid_argument, "unit/counit length != dim");
  if (b.comult.size() != n) fail(errc::invalid_argument, "comult table length != dim");
  for (const auto& terms : b.comult) {
    std::set<std::pair<std::size_t, std::size_t>> keys;
    for (const auto& t : terms) {
      if (t.left >= n || t.right >= n) fail(errc::invalid_argument, "comult index out of range");
      if (!keys.insert({t.left, t.right}).second)
        fail(errc::invalid_argument, "duplicate comult term");
    }
  }
  if (!b.antipode) fail(errc::invalid_argument, "antipode table is required");
  if (b.antipode->rows() != n || b.antipode->cols() != n)
    fail(errc::invalid_argument, "antipode matrix shape != dim x dim");
}

HopfPtr HopfBuilder::build_unchecked(std::string name) const {
  validate_builder(*this);
  auto h = std::shared_ptr<HopfPresentation>(new HopfPresentation(*this, std::move(name)));
  if (antipode_inverse) {
    h->antipode_inv_ = *antipode_inverse;
  } else {
    auto inv = inverse(*antipode);
    if (!inv)
      fail(errc::invalid_argument, "antipode of " + h->name() + " is not invertible");
    h->antipode_inv_ = std::move(*inv);
  }
  Matrix id = Matrix::identity(dim, field);
  if (!(h->antipode_ * h->antipode_inv_ == id) || !(h->antipode_inv_ * h->antipode_ == id))
    fail(errc::invalid_argument, "supplied antipode inverse is wrong for " + h->name());
  return h;
}

HopfPtr HopfBuilder::build(std::string name) const {
  HopfPtr h = build_unchecked(std::move(name));
  VerificationReport rep = verify_axioms(*h);
  if (!rep.ok()) {
    for (const auto& c : rep.checks)
      if (c.status == CheckStatus::fail)
        fail(errc::axiom_failure,
             "axiom check '" + c.name + "' failed for " + h->name() + ": " + c.witness);
  }
  const_cast<HopfPresentation&>(*h).axioms_ = std::move(rep);
  return h;
}

ElementFD HopfPresentation::element(std::vector<Scalar> coords) const {
  return ElementFD(shared_from_this(), std::move(coords));
}

ElementFD HopfPresentation::basis_element(std::size_t i) const {
  if (i >= dim_) fail(errc::out_of_range, "basis index out of range");
  std::vector<Scalar> c(dim_, Scalar::zero(field_));
  c[i] = Scalar::one(field_);
  return element(std::move(c));
}

ElementFD HopfPresentation::zero_element() const {
  return element(std::vector<Scalar>(dim_, Scalar::zero(field_)));
}

ElementFD HopfPresentation::one() const { return element(unit_); }

FunctionalFD HopfPresentation::functional(std::vector<Scalar> values) const {
  return FunctionalFD(shared_from_this(), std::move(values));
}

FunctionalFD HopfPresentation::dual_basis_functional(std::size_t i) const {
  if (i >= dim_) fail(errc::out_of_range, "basis index out of range");
  std::vector<Scalar> c(dim_, Scalar::zero(field_));
  c[i] = Scalar::one(field_);
  return functional(std::move(c));
}

FunctionalFD HopfPresentation::zero_functional() const {
  return functional(std::vector<Scalar>(dim_, Scalar::zero(field_)));
}

FunctionalFD HopfPresentation::counit_functional() const { return functional(counit_); }

// ---------------------------------------------------------------------------
// Arithmetic

ElementFD add(const ElementFD& a, const ElementFD& b) {
  check_same_algebra(a.algebra(), b.algebra(), "element addition");
  std::vector<Scalar> c;
  c.reserve(a.coords().size());
  for (std::size_t i = 0; i < a.coords().size(); ++i) c.push_back(a.coord(i) + b.coord(i));
  return ElementFD(a.algebra(), std::move(c));
}

ElementFD sub(const ElementFD& a, const ElementFD& b) { return add(a, neg(b)); }

ElementFD neg(const ElementFD& a) {
  std::vector<Scalar> c;
  c.reserve(a.coords().size());
  for (const auto& x : a.coords()) c.push_back(-x);
  return ElementFD(a.algebra(), std::move(c));
}

ElementFD scale(const Scalar& c, const ElementFD& a) {
  std::vector<Scalar> out;
  out.reserve(a.coords().size());
  for (const auto& x : a.coords()) out.push_back(c * x);
  return ElementFD(a.algebra(), std::move(out));
}

ElementFD mul(const ElementFD& a, const ElementFD& b) {
  check_same_algebra(a.algebra(), b.algebra(), "element multiplication");
  const HopfPresentation& h = *a.algebra();
  SparseVec acc;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    if (a.coord(i).is_zero()) continue;
    for (std::size_t j = 0; j < h.dim(); ++j) {
      if (b.coord(j).is_zero()) continue;
      Scalar ab = a.coord(i) * b.coord(j);
      for (const auto& [k, c] : h.mult(i, j)) add_term(acc, k, ab * c);
    }
  }
  std::vector<Scalar> out(h.dim(), Scalar::zero(h.field()));
  for (const auto& [k, c] : acc) out[k] = c;
  return ElementFD(a.algebra(), std::move(out));
}

SparseTensor2 comul(const ElementFD& a) {
  const HopfPresentation& h = *a.algebra();
  SparseTensor2 acc;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    if (a.coord(i).is_zero()) continue;
    for (const auto& t : h.comult(i)) add_term(acc, {t.left, t.right}, a.coord(i) * t.coeff);
  }
  return acc;
}

Scalar counit_of(const ElementFD& a) {
  const HopfPresentation& h = *a.algebra();
  Scalar s = Scalar::zero(h.field());
  for (std::size_t i = 0; i < h.dim(); ++i) {
    if (a.coord(i).is_zero()) continue;
    s = s + a.coord(i) * h.counit(i);
  }
  return s;
}

Matrix antipode_power_matrix(const HopfPresentation& h, long long k) {
  return k >= 0 ? h.antipode().pow(k) : h.antipode_inverse().pow(-k);
}

ElementFD antipode_pow(const ElementFD& a, long long k) {
  Matrix m = antipode_power_matrix(*a.algebra(), k);
  return ElementFD(a.algebra(), m.apply(a.coords()));
}

FunctionalFD add(const FunctionalFD& a, const FunctionalFD& b) {
  check_same_algebra(a.algebra(), b.algebra(), "functional addition");
  std::vector<Scalar> c;
  c.reserve(a.values().size());
  for (std::size_t i = 0; i < a.values().size(); ++i) c.push_back(a.value(i) + b.value(i));
  return FunctionalFD(a.algebra(), std::move(c));
}

FunctionalFD sub(const FunctionalFD& a, const FunctionalFD& b) { return add(a, neg(b)); }

FunctionalFD neg(const FunctionalFD& a) {
  std::vector<Scalar> c;
  c.reserve(a.values().size());
  for (const auto& x : a.values()) c.push_back(-x);
  return FunctionalFD(a.algebra(), std::move(c));
}

FunctionalFD scale(const Scalar& c, const FunctionalFD& a) {
  std::vector<Scalar> out;
  out.reserve(a.values().size());
  for (const auto& x : a.values()) out.push_back(c * x);
  return FunctionalFD(a.algebra(), std::move(out));
}

FunctionalFD convolve(const FunctionalFD& a, const FunctionalFD& b) {
  check_same_algebra(a.algebra(), b.algebra(), "convolution");
  const HopfPresentation& h = *a.algebra();
  std::vector<Scalar> out(h.dim(), Scalar::zero(h.field()));
  for (std::size_t i = 0; i < h.dim(); ++i) {
    for (const auto& t : h.comult(i)) {
      if (a.value(t.left).is_zero() || b.value(t.right).is_zero()) continue;
      out[i] = out[i] + t.coeff * a.value(t.left) * b.value(t.right);
    }
  }
  return FunctionalFD(a.algebra(), std::move(out));
}

FunctionalFD compose(const FunctionalFD& f, const Matrix& m) {
  const HopfPresentation& h = *f.algebra();
  if (m.rows() != h.dim() || m.cols() != h.dim())
    fail(errc::out_of_range, "compose: matrix shape != dim x dim");
  std::vector<Scalar> out(h.dim(), Scalar::zero(h.field()));
  for (const auto& [ij, v] : m.entries()) {
    if (f.value(ij.first).is_zero()) continue;
    out[ij.second] = out[ij.second] + f.value(ij.first) * v;
  }
  return FunctionalFD(f.algebra(), std::move(out));
}

// ---------------------------------------------------------------------------
// Harpoon actions

ElementFD act_left(const FunctionalFD& f, const ElementFD& x) {
  check_same_algebra(f.algebra(), x.algebra(), "left harpoon action");
  const HopfPresentation& h = *x.algebra();
  std::vector<Scalar> out(h.dim(), Scalar::zero(h.field()));
  for (std::size_t i = 0; i < h.dim(); ++i) {
    if (x.coord(i).is_zero()) continue;
    for (const auto& t : h.comult(i)) {
      if (f.value(t.right).is_zero()) continue;
      out[t.left] = out[t.left] + x.coord(i) * t.coeff * f.value(t.right);
    }
  }
  return ElementFD(x.algebra(), std::move(out));
}

ElementFD act_right(const ElementFD& x, const FunctionalFD& f) {
  check_same_algebra(f.algebra(), x.algebra(), "right harpoon action");
  const HopfPresentation& h = *x.algebra();
  std::vector<Scalar> out(h.dim(), Scalar::zero(h.field()));
  for (std::size_t i = 0; i < h.dim(); ++i) {
    if (x.coord(i).is_zero()) continue;
    for (const auto& t : h.comult(i)) {
      if (f.value(t.left).is_zero()) continue;
      out[t.right] = out[t.right] + x.coord(i) * t.coeff * f.value(t.left);
    }
  }
  return ElementFD(x.algebra(), std::move(out));
}

FunctionalFD act_left(const ElementFD& h, const FunctionalFD& f) {
  check_same_algebra(h.algebra(), f.algebra(), "left harpoon action on functionals");
  const HopfPresentation& a = *h.algebra();
  std::vector<Scalar> out(a.dim(), Scalar::zero(a.field()));
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t s = 0; s < a.dim(); ++s) {
      if (h.coord(s).is_zero()) continue;
      for (const auto& [k, c] : a.mult(r, s)) {
        if (f.value(k).is_zero()) continue;
        out[r] = out[r] + h.coord(s) * c * f.value(k);
      }
    }
  }
  return FunctionalFD(h.algebra(), std::move(out));
}

FunctionalFD act_right(const FunctionalFD& f, const ElementFD& h) {
  check_same_algebra(h.algebra(), f.algebra(), "right harpoon action on functionals");
  const HopfPresentation& a = *h.algebra();
  std::vector<Scalar> out(a.dim(), Scalar::zero(a.field()));
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t s = 0; s < a.dim(); ++s) {
      if (h.coord(s).is_zero()) continue;
      for (const auto& [k, c] : a.mult(s, r)) {
        if (f.value(k).is_zero()) continue;
        out[r] = out[r] + h.coord(s) * c * f.value(k);
      }
    }
  }
  return FunctionalFD(f.algebra(), std::move(out));
}

// ---------------------------------------------------------------------------
// Axioms

std::string tensor_str(const HopfPresentation& h, const SparseTensor2& t) {
  std::string out;
  for (const auto& [lr, c] : t) {
    if (!out.empty()) out += " + ";
    std::string cs = c.str();
    if (cs != "1") out += "(" + cs + ")*";
    out += h.basis_names()[lr.first] + "(x)" + h.basis_names()[lr.second];
  }
  return out.empty() ? "0" : out;
}

static std::string sparse_str(const HopfPresentation& h, const SparseVec& v) {
  std::vector<Scalar> coords(h.dim(), Scalar::zero(h.field()));
  for (const auto& [k, c] : v) coords[k] = c;
  return combo_str(h.basis_names(), coords);
}

VerificationReport verify_axioms(const HopfPresentation& h) {
  VerificationReport rep;
  const std::size_t n = h.dim();
  const FieldSpec& f = h.field();
  const auto& names = h.basis_names();

  // Multiply a sparse vector by a basis element on the right / left.
  auto mul_sv = [&](const SparseVec& a, const SparseVec& b) {
    SparseVec acc;
    for (const auto& [i, ca] : a)
      for (const auto& [j, cb] : b) {
        Scalar cc = ca * cb;
        for (const auto& [k, c] : h.mult(i, j)) add_term(acc, k, cc * c);
      }
    return acc;
  };
  auto basis_sv = [&](std::size_t i) {
    SparseVec v;
    v.emplace(i, Scalar::one(f));
    return v;
  };

  {  // associativity
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        for (std::size_t k = 0; k < n && ok; ++k) {
          SparseVec lhs = mul_sv(h.mult(i, j), basis_sv(k));
          SparseVec rhs = mul_sv(basis_sv(i), h.mult(j, k));
          if (lhs != rhs) {
            ok = false;
            witness = "(" + names[i] + "*" + names[j] + ")*" + names[k] + " = " +
                      sparse_str(h, lhs) + " but " + names[i] + "*(" + names[j] + "*" + names[k] +
                      ") = " + sparse_str(h, rhs);
          }
        }
    rep.add("associativity", ok, witness);
  }

  {  // unit
    SparseVec unit_sv;
    for (std::size_t i = 0; i < n; ++i) add_term(unit_sv, i, h.unit()[i]);
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < n && ok; ++i) {
      SparseVec lhs = mul_sv(unit_sv, basis_sv(i));
      SparseVec rhs = mul_sv(basis_sv(i), unit_sv);
      if (lhs != basis_sv(i) || rhs != basis_sv(i)) {
        ok = false;
        witness = "1*" + names[i] + " = " + sparse_str(h, lhs) + ", " + names[i] + "*1 = " +
                  sparse_str(h, rhs);
      }
    }
    rep.add("unit", ok, witness);
  }

  {  // coassociativity
    bool ok = true;
    std::string witness;
    using T3 = std::tuple<std::size_t, std::size_t, std::size_t>;
    for (std::size_t i = 0; i < n && ok; ++i) {
      std::map<T3, Scalar> lhs, rhs;
      auto add3 = [](std::map<T3, Scalar>& m, T3 key, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = m.find(key);
        if (it == m.end())
          m.emplace(std::move(key), c);
        else {
          it->second = it->second + c;
          if (it->second.is_zero()) m.erase(it);
        }
      };
      for (const auto& t : h.comult(i)) {
        for (const auto& u : h.comult(t.left))
          add3(lhs, {u.left, u.right, t.right}, t.coeff * u.coeff);
        for (const auto& u : h.comult(t.right))
          add3(rhs, {t.left, u.left, u.right}, t.coeff * u.coeff);
      }
      if (lhs != rhs) {
        ok = false;
        witness = "(Delta(x)id)Delta != (id(x)Delta)Delta at " + names[i];
      }
    }
    rep.add("coassociativity", ok, witness);
  }

  {  // counit
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < n && ok; ++i) {
      SparseVec left, right;
      for (const auto& t : h.comult(i)) {
        add_term(left, t.right, t.coeff * h.counit(t.left));
        add_term(right, t.left, t.coeff * h.counit(t.right));
      }
      if (left != basis_sv(i) || right != basis_sv(i)) {
        ok = false;
        witness = "(eps(x)id)Delta(" + names[i] + ") = " + sparse_str(h, left) +
                  ", (id(x)eps)Delta(" + names[i] + ") = " + sparse_str(h, right);
      }
    }
    rep.add("counit", ok, witness);
  }

  {  // comultiplication is an algebra map (including Delta(1) = 1 (x) 1)
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        SparseTensor2 lhs, rhs;
        for (const auto& [k, c] : h.mult(i, j))
          for (const auto& t : h.comult(k)) add_term(lhs, {t.left, t.right}, c * t.coeff);
        for (const auto& a : h.comult(i))
          for (const auto& b : h.comult(j)) {
            Scalar cc = a.coeff * b.coeff;
            for (const auto& [p, cp] : h.mult(a.left, b.left))
              for (const auto& [q, cq] : h.mult(a.right, b.right))
                add_term(rhs, {p, q}, cc * cp * cq);
          }
        if (lhs != rhs) {
          ok = false;
          witness = "Delta(" + names[i] + "*" + names[j] + ") = " + tensor_str(h, lhs) +
                    " but Delta(" + names[i] + ")Delta(" + names[j] + ") = " + tensor_str(h, rhs);
        }
      }
    if (ok) {
      SparseTensor2 lhs, rhs;
      for (std::size_t i = 0; i < n; ++i) {
        if (h.unit()[i].is_zero()) continue;
        for (const auto& t : h.comult(i)) add_term(lhs, {t.left, t.right}, h.unit()[i] * t.coeff);
      }
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) add_term(rhs, {p, q}, h.unit()[p] * h.unit()[q]);
      if (lhs != rhs) {
        ok = false;
        witness = "Delta(1) = " + tensor_str(h, lhs) + " != 1(x)1";
      }
    }
    rep.add("comult-multiplicative", ok, witness);
  }

  {  // counit is an algebra map (including eps(1) = 1)
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        Scalar lhs = Scalar::zero(f);
        for (const auto& [k, c] : h.mult(i, j)) lhs = lhs + c * h.counit(k);
        Scalar rhs = h.counit(i) * h.counit(j);
        if (lhs != rhs) {
          ok = false;
          witness = "eps(" + names[i] + "*" + names[j] + ") = " + lhs.str() + " != eps(" +
                    names[i] + ")eps(" + names[j] + ") = " + rhs.str();
        }
      }
    if (ok) {
      Scalar e1 = Scalar::zero(f);
      for (std::size_t i = 0; i < n; ++i) e1 = e1 + h.unit()[i] * h.counit(i);
      if (!e1.is_one()) {
        ok = false;
        witness = "eps(1) = " + e1.str();
      }
    }
    rep.add("counit-multiplicative", ok, witness);
  }

  {  // antipode: m(S (x) id)Delta = eps 1 = m(id (x) S)Delta
    // Precompute antipode columns as sparse vectors.
    std::vector<SparseVec> scol(n);
    for (const auto& [ij, v] : h.antipode().entries()) scol[ij.second].emplace(ij.first, v);
    SparseVec unit_sv;
    for (std::size_t i = 0; i < n; ++i) add_term(unit_sv, i, h.unit()[i]);
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < n && ok; ++i) {
      SparseVec lhs, rhs;
      for (const auto& t : h.comult(i)) {
        for (const auto& [k, c] : mul_sv(scol[t.left], basis_sv(t.right)))
          add_term(lhs, k, t.coeff * c);
        for (const auto& [k, c] : mul_sv(basis_sv(t.left), scol[t.right]))
          add_term(rhs, k, t.coeff * c);
      }
      SparseVec expect;
      for (const auto& [k, c] : unit_sv) add_term(expect, k, h.counit(i) * c);
      if (lhs != expect || rhs != expect) {
        ok = false;
        witness = "S(h1)h2 = " + sparse_str(h, lhs) + ", h1 S(h2) = " + sparse_str(h, rhs) +
                  ", eps(h)1 = " + sparse_str(h, expect) + " at h = " + names[i];
      }
    }
    rep.add("antipode", ok, witness);
  }

  return rep;
}

}  // namespace hopfkit
