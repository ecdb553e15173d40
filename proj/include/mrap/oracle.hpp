#pragma once

#include "mrap/solver.hpp"

namespace mrap {

struct HeightBound {
  long H = 1;
};

// Independent brute-force enumeration: all a.p. triples whose first term
// and difference have omega-coordinates bounded by H.  For each first
// term x the equation is quadratic in the difference, solved exactly.
std::vector<APTriple> brute_force_ap(const MRInstance& inst, HeightBound bound);

}  // namespace mrap
