#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mrap/normeq.hpp"

using namespace mrap;

namespace {

bool contains_class(const std::vector<AlgInt>& members, const AlgInt& x) {
  for (const auto& m : members)
    if (is_associate(m, x)) return true;
  return false;
}

// Exact integer upper bound for sigma_1(eps).
mpz_class eps_ceiling(const FieldDesc& F, const UnitGroup& G) {
  const AlgInt& e = *G.fundamental;
  AlgNum x = e.num();  // s + t sqrt(D), both >= 0 for eps > 1 normalized
  mpz_class s_up = x.s.get_num() / x.s.get_den() + 1;
  mpz_class t_up = abs(x.t.get_num()) / x.t.get_den() + 1;
  return s_up + t_up * (isqrt(mpz_class(F.D)) + 1);
}

}  // namespace

TEST_CASE("norm_eq_solutions examples") {
  FieldDesc Fi = mk_field(-1);
  auto s = norm_eq_solutions(Fi, 2);
  REQUIRE(s.size() == 1);
  CHECK(is_associate(s[0], AlgInt(Fi, 1, 1)));

  // 7 splits in Z[sqrt2]: the conjugate primes 3+sqrt2 and 3-sqrt2 are
  // not associates, so |N(k)| = 7 has exactly two classes.
  FieldDesc F2 = mk_field(2);
  s = norm_eq_solutions(F2, 7);
  REQUIRE(s.size() == 2);
  CHECK(contains_class(s, AlgInt(F2, 3, 1)));
  CHECK(contains_class(s, AlgInt(F2, 3, -1)));

  FieldDesc Q = mk_rational_field();
  s = norm_eq_solutions(Q, 10);
  REQUIRE(s.size() == 1);
  CHECK(s[0] == AlgInt::from_long(Q, 10));

  // no representation: u^2 + v^2 = 3 has no solution
  CHECK(norm_eq_solutions(Fi, 3).empty());
}

TEST_CASE("norm_eq_solutions exact norms and pairwise non-associates") {
  for (long D : {-1L, -2L, -3L, -7L, 2L, 3L, 5L, 13L, 21L}) {
    FieldDesc F = mk_field(D);
    UnitGroup G = unit_group(F);
    for (long n = 1; n <= 50; ++n) {
      auto sols = norm_eq_solutions(F, n, G);
      for (std::size_t i = 0; i < sols.size(); ++i) {
        CHECK(abs(norm(sols[i])) == n);
        for (std::size_t j = i + 1; j < sols.size(); ++j)
          CHECK(!is_associate(sols[i], sols[j]));
      }
    }
  }
}

TEST_CASE("completeness against doubled-box lattice search") {
  for (long D : {-1L, -2L, -3L, -5L, -7L, -11L, -15L, -19L, -23L, -30L,
                 2L, 3L, 5L, 6L, 7L, 10L, 13L, 15L, 17L, 21L, 26L, 29L, 30L}) {
    FieldDesc F = mk_field(D);
    UnitGroup G = unit_group(F);
    long B;
    if (D < 0) {
      B = 110;  // covers u^2 + |D| v^2 <= 4n for n <= 100
    } else {
      mpz_class E = eps_ceiling(F, G);
      mpz_class bound = 2 * (isqrt(100 * E) + 2);
      B = bound.get_si();
    }
    for (long n : {1L, 2L, 4L, 5L, 7L, 11L, 20L, 25L, 41L, 100L}) {
      auto sols = norm_eq_solutions(F, n, G);
      for (long u = -B; u <= B; ++u)
        for (long v = -B; v <= B; ++v) {
          AlgInt k(F, u, v);
          if (abs(norm(k)) != n) continue;
          CHECK_MESSAGE(contains_class(sols, k), "D=", D, " n=", n,
                        " missing class of ", k.str());
        }
    }
  }
}

TEST_CASE("candidate_sets") {
  FieldDesc Q = mk_rational_field();
  AlgInt one = AlgInt::one(Q);
  auto [A1, A2] = candidate_sets(Q, one, one, one, unit_group(Q));
  CHECK(A1.target_norm == 10);  // degree-1 norm: |N(2*5)| = 10
  REQUIRE(A1.members.size() == 4);
  CHECK(A1.members[0] == AlgInt::from_long(Q, 1));
  CHECK(A1.members[1] == AlgInt::from_long(Q, 2));
  CHECK(A1.members[2] == AlgInt::from_long(Q, 5));
  CHECK(A1.members[3] == AlgInt::from_long(Q, 10));
  CHECK(A2.members == A1.members);

  FieldDesc Fi = mk_field(-1);
  AlgInt onei = AlgInt::one(Fi);
  auto [B1, B2] = candidate_sets(Fi, onei, onei, onei, unit_group(Fi));
  CHECK(B1.target_norm == 100);
  CHECK(contains_class(B1.members, AlgInt(Fi, 2, 1)));
  CHECK(contains_class(B1.members, AlgInt(Fi, 1, 2)));
  CHECK(!is_associate(AlgInt(Fi, 2, 1), AlgInt(Fi, 1, 2)));
  for (const auto& k : B1.members)
    CHECK(B1.target_norm % abs(norm(k)) == 0);

  // membership constraint N(k) | 100 over any quadratic field
  FieldDesc F5 = mk_field(5);
  AlgInt one5 = AlgInt::one(F5);
  auto [C1, C2] = candidate_sets(F5, one5, one5, one5, unit_group(F5));
  CHECK(C1.target_norm == 100);
  for (const auto& k : C1.members)
    CHECK(C1.target_norm % abs(norm(k)) == 0);
}

TEST_CASE("candidate_sets degenerate inputs") {
  FieldDesc Q = mk_rational_field();
  AlgInt one = AlgInt::one(Q);
  UnitGroup G = unit_group(Q);
  CHECK_THROWS_AS(candidate_sets(Q, one, one, -one, G), DegenerateError);
  // b + 4c = 0 kills the beta_1 target
  CHECK_THROWS_AS(
      candidate_sets(Q, one, AlgInt::from_long(Q, -4), one, G),
      DegenerateError);
}

TEST_CASE("candidate_sets stable under sign flip of coefficients") {
  FieldDesc F = mk_field(2);
  AlgInt a(F, 1, 0), b(F, 1, 0), c(F, 1, 0);
  UnitGroup G = unit_group(F);
  auto [A1, A2] = candidate_sets(F, a, b, c, G);
  auto [N1, N2] = candidate_sets(F, -a, -b, -c, G);
  CHECK(A1.target_norm == N1.target_norm);
  CHECK(A1.members == N1.members);
  CHECK(A2.members == N2.members);
}

TEST_CASE("positive_divisors") {
  auto d = positive_divisors(100);
  CHECK(d == std::vector<mpz_class>{1, 2, 4, 5, 10, 20, 25, 50, 100});
}
