#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mrap/oracle.hpp"
#include "mrap/reference_tables.hpp"

using namespace mrap;

namespace {

bool contains(const std::vector<APTriple>& v, const APTriple& t) {
  for (const auto& e : v)
    if (e == t) return true;
  return false;
}

}  // namespace

TEST_CASE("brute force reproduces the d=3 set") {
  FieldDesc Q = mk_rational_field();
  auto triples = brute_force_ap(make_instance(Q, 1, 1, 1, 3), HeightBound{20});
  REQUIRE(triples.size() == 4);
  for (const auto& want : rational_reference(Q, 3))
    CHECK(contains(triples, want));
}

TEST_CASE("d = 5 finds only the trivial triple") {
  FieldDesc Q = mk_rational_field();
  auto triples = brute_force_ap(make_instance(Q, 1, 1, 1, 5), HeightBound{50});
  REQUIRE(triples.size() == 1);
  CHECK(triples[0].is_trivial());
}

TEST_CASE("height bound validation") {
  FieldDesc Q = mk_rational_field();
  MRInstance inst = make_instance(Q, 1, 1, 1, 1);
  CHECK_THROWS(brute_force_ap(inst, HeightBound{0}));
  auto tiny = brute_force_ap(inst, HeightBound{1});
  CHECK(contains(tiny, APTriple{AlgInt::zero(Q), AlgInt::zero(Q)}));
}

TEST_CASE("monotone in H and verified") {
  for (long D : {1L, -1L, 2L}) {
    FieldDesc F = D == 1 ? mk_rational_field() : mk_field(D);
    MRInstance inst = make_instance(F, 1, 1, 1, 1);
    auto small = brute_force_ap(inst, HeightBound{8});
    auto large = brute_force_ap(inst, HeightBound{16});
    for (const auto& t : small) {
      CHECK(contains(large, t));
      CHECK(verify_triple(inst, t));
    }
  }
}

TEST_CASE("agreement with the solver on table instances") {
  struct Case { long D, d; };
  for (Case cs : {Case{-1, 1}, Case{-1, 2}, Case{2, 1}, Case{5, 11},
                  Case{3, 9}, Case{21, 3}}) {
    FieldDesc F = mk_field(cs.D);
    MRInstance inst = make_instance(F, 1, 1, 1, cs.d);
    const long H = 40;
    auto oracle = brute_force_ap(inst, HeightBound{H});
    auto rep = solve_ap(inst);
    std::size_t bounded = 0;
    for (const auto& t : rep.triples)
      if (t.first.height() <= H && t.diff.height() <= H) {
        ++bounded;
        CHECK(contains(oracle, t));
      }
    CHECK(bounded == oracle.size());
  }
}
