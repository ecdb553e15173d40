#pragma once

#include "mrap/field.hpp"

namespace mrap {

// One of the two candidate sets A_i: all k in O_K, up to associates,
// whose absolute norm divides |N(alpha * beta)|.
struct CandidateSet {
  AlgInt alpha;            // a + c
  AlgInt beta;             // b + 4c or b + 4a
  mpz_class target_norm;   // |N(alpha * beta)|
  std::vector<AlgInt> members;  // canonical associate representatives, sorted
};

// Complete solution list of |N(k)| = n, one canonical representative per
// associate class.  n >= 1.
std::vector<AlgInt> norm_eq_solutions(const FieldDesc& F, const mpz_class& n,
                                      const UnitGroup& G);
std::vector<AlgInt> norm_eq_solutions(const FieldDesc& F, const mpz_class& n);

// Positive divisors of n > 0, ascending.
std::vector<mpz_class> positive_divisors(const mpz_class& n);

// The pair (A_1, A_2) for coefficients (a, b, c).  Throws DegenerateError
// when a + c = 0 or a norm target vanishes.
std::pair<CandidateSet, CandidateSet> candidate_sets(const FieldDesc& F,
                                                     const AlgInt& a,
                                                     const AlgInt& b,
                                                     const AlgInt& c,
                                                     const UnitGroup& G);

}  // namespace mrap
