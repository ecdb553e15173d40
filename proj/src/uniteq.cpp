#include "mrap/uniteq.hpp"

#include <algorithm>

namespace mrap {

namespace {

void check_inputs(const AlgInt& k1, const AlgInt& k2, const AlgInt& c0) {
  if (k1.is_zero() || k2.is_zero() || c0.is_zero())
    throw std::invalid_argument("unit_eq: zero input");
}

// Decides |sigma_1(h)| - |sigma_2(h)| > R exactly (h != 0, R > 0).
bool embedding_gap_exceeds(const AlgNum& h, const mpq_class& R) {
  int s1 = sign_real(h);
  int s2 = sign_real(conj(h));
  if (s1 == s2) {
    // gap = s1 * (sigma_1 - sigma_2) = s1 * 2 t sqrt(D)
    mpq_class t2 = s1 * 2 * h.t;
    if (sgn(t2) <= 0) return false;
    return t2 * t2 * h.F.D > R * R;
  }
  // gap = s1 * (sigma_1 + sigma_2) = s1 * 2 s
  mpq_class s = s1 * 2 * h.s;
  if (sgn(s) <= 0) return false;
  return s * s > R * R;
}

// Least m >= 0 such that the norm lower bound at exponent m rules out a
// solution; monotone in m, so all solutions in this direction have a
// strictly smaller exponent.
long direction_bound(const AlgNum& g, const AlgNum& eps, const mpq_class& R) {
  AlgNum h = g;
  for (long m = 0;; ++m) {
    if (embedding_gap_exceeds(h, R)) return m;
    h = h * eps;
    if (m > 100000) throw std::logic_error("exponent_bound: no convergence");
  }
}

}  // namespace

long exponent_bound(const FieldDesc& F, const AlgInt& k1, const AlgInt& k2,
                    const AlgInt& c0, const UnitGroup& G) {
  if (!F.is_real_quadratic())
    throw std::invalid_argument("exponent_bound: requires a rank-1 unit group");
  check_inputs(k1, k2, c0);
  // |N(y)| >= |sigma_1(h)| - |N(c0)| - |N(k1)| - |sigma_2(h)| with
  // h = k1 conj(c0) eps^m; a solution needs |N(y)| = |N(k2)|.
  mpq_class R = mpq_class(abs(norm(c0))) + abs(norm(k1)) + abs(norm(k2));
  AlgNum g = (k1 * conj(c0)).num();
  AlgNum eps = G.fundamental->num();
  long up = direction_bound(g, eps, R);
  long down = direction_bound(conj(g), eps, R);
  return std::max(up, down);
}

UnitExponents unit_exponents(const AlgInt& u, const UnitGroup& G) {
  if (!is_unit(u)) throw std::invalid_argument("unit_exponents: not a unit");
  UnitExponents e;
  if (G.rank == 0) {
    e.zeta = u;
    return e;
  }
  const AlgInt& eps = *G.fundamental;
  AlgInt inv = unit_inverse(eps);
  AlgNum one = AlgNum::one(u.F);
  AlgInt w = u;
  long m = 0;
  // Shrink |sigma_1(w)| into [1, eps); the remaining unit is ±1.
  for (int guard = 0; guard < 100000; ++guard) {
    AlgNum a = w.num() * w.num();  // sigma_1(w)^2 > 0
    if (cmp_real(a, one) < 0) {
      w = w * eps;
      --m;
    } else if (cmp_real(a, eps.num() * eps.num()) >= 0) {
      w = w * inv;
      ++m;
    } else {
      break;
    }
  }
  if (!(w == AlgInt::one(u.F) || w == -AlgInt::one(u.F)))
    throw std::logic_error("unit_exponents: residual is not ±1");
  e.zeta = w;
  e.m = m;
  return e;
}

std::vector<UnitSolution> unit_eq(const FieldDesc& F, const AlgInt& k1,
                                  const AlgInt& k2, const AlgInt& c0,
                                  const UnitGroup& G) {
  check_inputs(k1, k2, c0);
  std::vector<UnitSolution> out;
  auto try_u1 = [&](const AlgInt& u1) {
    AlgInt y = c0 - k1 * u1;
    if (y.is_zero()) return;
    auto q = is_integral(y.num() / k2.num());
    if (!q || !is_unit(*q)) return;
    UnitSolution s;
    s.u1 = u1;
    s.u2 = *q;
    s.e1 = unit_exponents(u1, G);
    s.e2 = unit_exponents(*q, G);
    out.push_back(std::move(s));
  };
  if (G.rank == 0) {
    for (const auto& z : G.torsion) try_u1(z);
    return out;
  }
  long M = exponent_bound(F, k1, k2, c0, G);
  const AlgInt& eps = *G.fundamental;
  for (long m = -M; m <= M; ++m) {
    AlgInt p = unit_pow(eps, m);
    try_u1(p);
    try_u1(-p);
  }
  return out;
}

std::vector<UnitSolution> unit_eq(const FieldDesc& F, const AlgInt& k1,
                                  const AlgInt& k2, const AlgInt& c0) {
  return unit_eq(F, k1, k2, c0, unit_group(F));
}

}  // namespace mrap
