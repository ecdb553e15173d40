#include "mrap/oracle.hpp"

#include <algorithm>

namespace mrap {

namespace {

// Roots Y in O_K of A Y^2 + B Y + C = 0 with height <= H, plus the
// "all Y" degenerate case when the polynomial vanishes identically.
void roots_within(const MRInstance& inst, const AlgInt& x, const AlgInt& A,
                  const AlgInt& B, const AlgInt& C, long H,
                  std::vector<APTriple>& out) {
  const FieldDesc& F = inst.F;
  auto emit = [&](const AlgInt& y) {
    if (y.height() > H) return;
    APTriple t{x, y};
    for (const auto& e : out)
      if (e == t) return;
    out.push_back(t);
  };
  if (!A.is_zero()) {
    AlgNum disc = (B * B - A * C * 4).num();
    auto r = is_square(disc);
    if (!r) return;
    AlgNum den = (A + A).num();
    for (int sign : {1, -1}) {
      AlgNum y = (-B.num() + *r * mpq_class(sign)) / den;
      if (auto yi = is_integral(y)) emit(*yi);
    }
    return;
  }
  if (!B.is_zero()) {
    if (auto yi = is_integral(-C.num() / B.num())) emit(*yi);
    return;
  }
  if (!C.is_zero()) return;
  // Identically zero: every Y in the box works.
  if (F.is_rational()) {
    for (long vy = -H; vy <= H; ++vy) emit(AlgInt::from_long(F, vy));
  } else {
    for (long uy = -H; uy <= H; ++uy)
      for (long vy = -H; vy <= H; ++vy) emit(AlgInt(F, uy, vy));
  }
}

}  // namespace

std::vector<APTriple> brute_force_ap(const MRInstance& inst, HeightBound bound) {
  if (bound.H < 1) throw std::invalid_argument("brute_force_ap: H must be >= 1");
  const FieldDesc& F = inst.F;
  const long H = bound.H;
  std::vector<APTriple> out;
  auto handle_x = [&](const AlgInt& x) {
    // a x^2 + b (x+Y)^2 + c (x+2Y)^2 - d x (x+Y)(x+2Y) is quadratic in Y.
    AlgInt dx = inst.d * x;
    AlgInt A = inst.b + inst.c * 4 - dx * 2;
    AlgInt B = (inst.b * 2 + inst.c * 4) * x - dx * x * 3;
    AlgInt C = (inst.a + inst.b + inst.c) * x * x - dx * x * x;
    roots_within(inst, x, A, B, C, H, out);
  };
  if (F.is_rational()) {
    for (long u = -H; u <= H; ++u) handle_x(AlgInt::from_long(F, u));
  } else {
    for (long u = -H; u <= H; ++u)
      for (long v = -H; v <= H; ++v) handle_x(AlgInt(F, u, v));
  }
  std::sort(out.begin(), out.end(), triple_less);
  return out;
}

}  // namespace mrap
