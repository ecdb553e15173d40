#pragma once

#include "mrap/field.hpp"

namespace mrap {

// Decomposition of a unit as zeta * eps^m (zeta torsion; m = 0 when the
// unit group has rank 0).
struct UnitExponents {
  AlgInt zeta;
  long m = 0;
};

// One solution of k1 u1 + k2 u2 = c0.
struct UnitSolution {
  AlgInt u1, u2;
  UnitExponents e1, e2;
};

// Least M such that every solution over a real quadratic field has
// u1 = ±eps^m with |m| <= M.  Elementary norm-growth bound: writing
// x = k1 u1, y = c0 - x, the product of the embedding-wise triangle
// inequalities forces |N(y)| > |N(k2)| once |m| is large enough; all
// comparisons are exact field-element sign tests.
long exponent_bound(const FieldDesc& F, const AlgInt& k1, const AlgInt& k2,
                    const AlgInt& c0, const UnitGroup& G);

// Complete duplicate-free solution list of k1 u1 + k2 u2 = c0 over the
// units of O_K.  k1, k2, c0 must be nonzero.
std::vector<UnitSolution> unit_eq(const FieldDesc& F, const AlgInt& k1,
                                  const AlgInt& k2, const AlgInt& c0,
                                  const UnitGroup& G);
std::vector<UnitSolution> unit_eq(const FieldDesc& F, const AlgInt& k1,
                                  const AlgInt& k2, const AlgInt& c0);

// zeta * eps^m decomposition of a unit.
UnitExponents unit_exponents(const AlgInt& u, const UnitGroup& G);

}  // namespace mrap
