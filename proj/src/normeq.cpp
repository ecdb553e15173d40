#include "mrap/normeq.hpp"

#include <algorithm>
#include <set>

namespace mrap {

namespace {

struct CoordLess {
  bool operator()(const AlgInt& a, const AlgInt& b) const { return coord_less(a, b); }
};

// Integer upper bound on sigma_1(eps).
mpz_class eps_upper_bound(const FieldDesc& F, const AlgInt& eps) {
  mpz_class wub = isqrt(mpz_class(F.D)) + 1;
  if (F.half_omega) wub = (1 + wub) / 2 + 1;
  mpz_class b = abs(eps.u) + abs(eps.v) * wub + 1;
  return b;
}

void push_real_candidates(const FieldDesc& F, const mpz_class& n,
                          std::vector<AlgInt>& out, const AlgInt& eps) {
  // Every associate class of |N| = n has a representative with both
  // embeddings bounded by sqrt(n * eps) in absolute value; enumerate one
  // coordinate of s + t sqrt(D) over that range and solve for the other.
  mpz_class bound2 = n * eps_upper_bound(F, eps);  // >= n * eps >= sup sigma^2
  const long D = F.D;
  if (!F.half_omega) {
    // x = u + v sqrt(D), u^2 - D v^2 = ±n, |u| <= sqrt(n eps).
    mpz_class U = isqrt(bound2) + 2;
    for (mpz_class u = 0; u <= U; ++u) {
      for (int sign : {1, -1}) {
        mpz_class num = u * u - sign * n;
        if (num < 0 || num % D != 0) continue;
        mpz_class v;
        if (!is_perfect_square(num / D, &v)) continue;
        out.emplace_back(F, u, v);
        if (v != 0) out.emplace_back(F, u, -v);
        if (u != 0) {
          out.emplace_back(F, -u, v);
          if (v != 0) out.emplace_back(F, -u, -v);
        }
      }
    }
  } else {
    // x = u + v omega = ((2u+v) + v sqrt(D))/2; (2u+v)^2 - D v^2 = ±4n,
    // |v sqrt(D)| <= 2 sqrt(n eps).
    mpz_class V = isqrt(4 * bound2 / D) + 2;
    for (mpz_class v = 0; v <= V; ++v) {
      for (int sign : {1, -1}) {
        mpz_class w2 = D * v * v + sign * 4 * n;
        mpz_class w;
        if (!is_perfect_square(w2, &w)) continue;
        const mpz_class vs[2] = {v, mpz_class(-v)};
        const mpz_class ws[2] = {w, mpz_class(-w)};
        for (const mpz_class& vv : vs) {
          for (const mpz_class& ww : ws) {
            mpz_class diff = ww - vv;
            if (diff % 2 != 0) continue;
            out.emplace_back(F, mpz_class(diff / 2), vv);
          }
          if (v == 0) break;
        }
      }
    }
  }
}

void push_imaginary_candidates(const FieldDesc& F, const mpz_class& n,
                               std::vector<AlgInt>& out) {
  const mpz_class A = -mpz_class(F.D);
  if (!F.half_omega) {
    // u^2 + |D| v^2 = n
    mpz_class V = isqrt(n / A) + 1;
    for (mpz_class v = 0; v <= V; ++v) {
      mpz_class rem = n - A * v * v;
      mpz_class u;
      if (rem < 0 || !is_perfect_square(rem, &u)) continue;
      for (int su : {1, -1}) {
        for (int sv : {1, -1}) {
          out.emplace_back(F, su * u, sv * v);
          if (v == 0) break;
        }
        if (u == 0) break;
      }
    }
  } else {
    // (2u+v)^2 + |D| v^2 = 4n
    mpz_class V = isqrt(4 * n / A) + 1;
    for (mpz_class v = 0; v <= V; ++v) {
      mpz_class rem = 4 * n - A * v * v;
      mpz_class w;
      if (rem < 0 || !is_perfect_square(rem, &w)) continue;
      const mpz_class vs[2] = {v, mpz_class(-v)};
      const mpz_class ws[2] = {w, mpz_class(-w)};
      for (const mpz_class& vv : vs) {
        for (const mpz_class& ww : ws) {
          mpz_class diff = ww - vv;
          if (diff % 2 != 0) continue;
          out.emplace_back(F, mpz_class(diff / 2), vv);
          if (w == 0) break;
        }
        if (v == 0) break;
      }
    }
  }
}

}  // namespace

std::vector<AlgInt> norm_eq_solutions(const FieldDesc& F, const mpz_class& n,
                                      const UnitGroup& G) {
  if (n < 1) throw std::invalid_argument("norm_eq_solutions: n must be >= 1");
  std::vector<AlgInt> found;
  if (F.is_rational()) {
    found.emplace_back(F, n, 0);
  } else if (F.is_imaginary()) {
    push_imaginary_candidates(F, n, found);
  } else {
    push_real_candidates(F, n, found, *G.fundamental);
  }
  std::set<AlgInt, CoordLess> classes;
  for (const auto& x : found) {
    if (x.is_zero()) continue;
    mpz_class nx = abs(norm(x));
    if (nx != n) continue;
    classes.insert(canonical_associate(x, G));
  }
  return {classes.begin(), classes.end()};
}

std::vector<AlgInt> norm_eq_solutions(const FieldDesc& F, const mpz_class& n) {
  return norm_eq_solutions(F, n, unit_group(F));
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  if (n <= 0) throw std::invalid_argument("positive_divisors: n must be positive");
  std::vector<mpz_class> small, large;
  for (mpz_class i = 1; i * i <= n; ++i) {
    if (n % i != 0) continue;
    small.push_back(i);
    if (i * i != n) large.push_back(n / i);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::pair<CandidateSet, CandidateSet> candidate_sets(const FieldDesc& F,
                                                     const AlgInt& a,
                                                     const AlgInt& b,
                                                     const AlgInt& c,
                                                     const UnitGroup& G) {
  AlgInt alpha = a + c;
  if (alpha.is_zero()) throw DegenerateError("candidate_sets: a + c = 0");
  AlgInt beta1 = b + c * 4;
  AlgInt beta2 = b + a * 4;
  auto build = [&](const AlgInt& beta) {
    CandidateSet s;
    s.alpha = alpha;
    s.beta = beta;
    s.target_norm = abs(norm(alpha * beta));
    if (s.target_norm == 0)
      throw DegenerateError("candidate_sets: N(alpha*beta) = 0");
    std::set<AlgInt, CoordLess> members;
    for (const auto& n : positive_divisors(s.target_norm)) {
      for (const auto& k : norm_eq_solutions(F, n, G)) members.insert(k);
    }
    s.members.assign(members.begin(), members.end());
    return s;
  };
  return {build(beta1), build(beta2)};
}

}  // namespace mrap
