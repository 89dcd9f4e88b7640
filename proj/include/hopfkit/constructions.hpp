#pragma once
// Concrete Hopf algebra constructors: group algebras, the Taft family (the
// Sweedler algebra is Taft at n = 2, q = -1), and the dual / opposite /
// co-opposite / tensor product combinators. Every constructor returns a
// presentation that has passed the axiom battery.

#include <string>

#include "hopfkit/hopf.hpp"

namespace hopfkit {

struct GroupTable {
  std::size_t order = 0;
  std::vector<std::vector<std::size_t>> mul;  // [i][j] -> index of g_i g_j
  std::size_t identity = 0;
  std::vector<std::size_t> inverse;
  std::vector<std::string> names;

  static GroupTable cyclic(std::size_t n);
  static GroupTable symmetric3();
  static GroupTable direct_product(const GroupTable& a, const GroupTable& b);
  void validate() const;  // group axioms; throws invalid_argument
};

HopfPtr group_algebra(const GroupTable& g, const FieldSpec& f, std::string name);

// Taft algebra of order n^2 over Q(zeta_n) with q = zeta_n.
HopfPtr taft(unsigned n);
// Taft algebra over an arbitrary field with a designated primitive n-th root q.
HopfPtr taft(unsigned n, const FieldSpec& f, const Scalar& q, std::string name);
// 4-dimensional Sweedler algebra over Q, basis {1, g, x, gx}.
HopfPtr sweedler();

HopfPtr dual(const HopfPtr& h);
HopfPtr op(const HopfPtr& h);
HopfPtr cop(const HopfPtr& h);
HopfPtr tensor_product(const HopfPtr& a, const HopfPtr& b);

}  // namespace hopfkit
