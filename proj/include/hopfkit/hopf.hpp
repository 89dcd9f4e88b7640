#pragma once
// Finite-dimensional Hopf algebra presentations by structure constants, with
// elements, functionals, the four harpoon actions and the axiom battery.
//
// Conventions, fixed throughout: comultiplication terms (l, r, c) mean
// Delta(e_i) = sum c * e_l (x) e_r; the harpoon actions are
//   f -> x = f(x_2) x_1        x <- f = f(x_1) x_2
//   (h -> f)(y) = f(y h)       (f <- h)(y) = f(h y)
// and convolution is (f * g)(h) = f(h_1) g(h_2).

#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hopfkit/linalg.hpp"
#include "hopfkit/report.hpp"

namespace hopfkit {

using SparseVec = std::map<std::size_t, Scalar>;
using SparseTensor2 = std::map<std::pair<std::size_t, std::size_t>, Scalar>;

void add_term(SparseVec& v, std::size_t k, const Scalar& c);
void add_term(SparseTensor2& t, std::pair<std::size_t, std::size_t> k, const Scalar& c);

struct ComultTerm {
  std::size_t left, right;
  Scalar coeff;
};

class HopfPresentation;
using HopfPtr = std::shared_ptr<const HopfPresentation>;

class ElementFD {
 public:
  ElementFD(HopfPtr algebra, std::vector<Scalar> coords);
  const HopfPtr& algebra() const { return alg_; }
  const std::vector<Scalar>& coords() const { return coords_; }
  const Scalar& coord(std::size_t i) const { return coords_[i]; }
  bool is_zero() const;
  bool operator==(const ElementFD& o) const;  // algebra_mismatch across algebras
  bool operator!=(const ElementFD& o) const { return !(*this == o); }
  std::string str() const;  // named linear combination, e.g. "x + gx"

 private:
  HopfPtr alg_;
  std::vector<Scalar> coords_;
};

class FunctionalFD {
 public:
  FunctionalFD(HopfPtr algebra, std::vector<Scalar> values);
  const HopfPtr& algebra() const { return alg_; }
  const std::vector<Scalar>& values() const { return values_; }
  const Scalar& value(std::size_t i) const { return values_[i]; }
  Scalar operator()(const ElementFD& x) const;
  bool is_zero() const;
  bool operator==(const FunctionalFD& o) const;
  bool operator!=(const FunctionalFD& o) const { return !(*this == o); }
  std::string str() const;  // value table on the named basis

 private:
  HopfPtr alg_;
  std::vector<Scalar> values_;
};

// Structure-constant builder. build() verifies the Hopf axioms and throws
// errc::axiom_failure with a witness when they do not hold; build_unchecked()
// skips verification (used to exercise the axiom battery on broken data).
struct HopfBuilder {
  FieldSpec field = FieldSpec::rationals();
  std::size_t dim = 0;
  std::vector<std::string> basis_names;
  std::vector<std::vector<SparseVec>> mult;      // [i][j] -> product coords
  std::vector<Scalar> unit;                      // dense, length dim
  std::vector<std::vector<ComultTerm>> comult;   // [i], sorted by (left, right)
  std::vector<Scalar> counit;                    // dense, length dim
  std::optional<Matrix> antipode;
  std::optional<Matrix> antipode_inverse;        // inverted from antipode if absent

  HopfPtr build(std::string name) const;
  HopfPtr build_unchecked(std::string name) const;
};

class HopfPresentation : public std::enable_shared_from_this<HopfPresentation> {
 public:
  const std::string& name() const { return name_; }
  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const SparseVec& mult(std::size_t i, std::size_t j) const { return mult_[i][j]; }
  const std::vector<Scalar>& unit() const { return unit_; }
  const std::vector<ComultTerm>& comult(std::size_t i) const { return comult_[i]; }
  const Scalar& counit(std::size_t i) const { return counit_[i]; }
  const Matrix& antipode() const { return antipode_; }
  const Matrix& antipode_inverse() const { return antipode_inv_; }
  // Axiom battery outcome recorded at build time (empty for build_unchecked).
  const VerificationReport& axiom_report() const { return axioms_; }

  ElementFD element(std::vector<Scalar> coords) const;
  ElementFD basis_element(std::size_t i) const;
  ElementFD zero_element() const;
  ElementFD one() const;
  FunctionalFD functional(std::vector<Scalar> values) const;
  FunctionalFD dual_basis_functional(std::size_t i) const;
  FunctionalFD zero_functional() const;
  FunctionalFD counit_functional() const;

 private:
  friend struct HopfBuilder;
  HopfPresentation(const HopfBuilder& b, std::string name);

  std::string name_;
  FieldSpec field_;
  std::size_t dim_;
  std::vector<std::string> names_;
  std::vector<std::vector<SparseVec>> mult_;
  std::vector<Scalar> unit_;
  std::vector<std::vector<ComultTerm>> comult_;
  std::vector<Scalar> counit_;
  Matrix antipode_;
  Matrix antipode_inv_;
  VerificationReport axioms_;
};

// Element arithmetic.
ElementFD add(const ElementFD& a, const ElementFD& b);
ElementFD sub(const ElementFD& a, const ElementFD& b);
ElementFD neg(const ElementFD& a);
ElementFD scale(const Scalar& c, const ElementFD& a);
ElementFD mul(const ElementFD& a, const ElementFD& b);
SparseTensor2 comul(const ElementFD& a);
Scalar counit_of(const ElementFD& a);
ElementFD antipode_pow(const ElementFD& a, long long k);
Matrix antipode_power_matrix(const HopfPresentation& h, long long k);

// Functional arithmetic.
FunctionalFD add(const FunctionalFD& a, const FunctionalFD& b);
FunctionalFD sub(const FunctionalFD& a, const FunctionalFD& b);
FunctionalFD neg(const FunctionalFD& a);
FunctionalFD scale(const Scalar& c, const FunctionalFD& a);
FunctionalFD convolve(const FunctionalFD& a, const FunctionalFD& b);
FunctionalFD compose(const FunctionalFD& f, const Matrix& m);  // f after m

// Harpoon actions.
ElementFD act_left(const FunctionalFD& f, const ElementFD& x);     // f -> x
ElementFD act_right(const ElementFD& x, const FunctionalFD& f);    // x <- f
FunctionalFD act_left(const ElementFD& h, const FunctionalFD& f);  // h -> f
FunctionalFD act_right(const FunctionalFD& f, const ElementFD& h); // f <- h

// The seven named axiom checks: associativity, unit, coassociativity, counit,
// comultiplication is multiplicative, counit is multiplicative, antipode.
VerificationReport verify_axioms(const HopfPresentation& h);

std::string tensor_str(const HopfPresentation& h, const SparseTensor2& t);

}  // namespace hopfkit
