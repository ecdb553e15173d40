#include "mrap/field.hpp"

#include <cassert>
#include <map>
#include <sstream>
#include <tuple>

namespace mrap {

namespace {

void require_same_field(const FieldDesc& a, const FieldDesc& b) {
  if (a != b) throw std::invalid_argument("mixed-field operation");
}

long squarefree_part_long(long n) {
  long sign = n < 0 ? -1 : 1;
  n = n < 0 ? -n : n;
  long r = 1;
  for (long p = 2; p * p <= n; ++p) {
    long e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2) r *= p;
  }
  return sign * r * n;
}

}  // namespace

FieldDesc mk_field(long D) {
  if (D == 0) throw std::invalid_argument("mk_field: D must be nonzero");
  long d = squarefree_part_long(D);
  if (d == 1) return mk_rational_field();
  FieldDesc F;
  F.kind = FieldKind::Quadratic;
  F.D = d;
  long mod4 = ((d % 4) + 4) % 4;
  F.half_omega = (mod4 == 1);
  F.disc = F.half_omega ? d : 4 * d;
  return F;
}

FieldDesc mk_rational_field() {
  FieldDesc F;
  F.kind = FieldKind::Rational;
  F.D = 0;
  F.disc = 1;
  F.half_omega = false;
  return F;
}

// ---- AlgNum ----

AlgNum::AlgNum(FieldDesc f, mpq_class s_, mpq_class t_)
    : F(f), s(std::move(s_)), t(std::move(t_)) {
  // Two-argument mpq_class construction skips canonicalization.
  s.canonicalize();
  t.canonicalize();
  if (F.is_rational() && t != 0)
    throw std::invalid_argument("AlgNum: irrational part over Q");
}

AlgNum operator+(const AlgNum& a, const AlgNum& b) {
  require_same_field(a.F, b.F);
  return AlgNum(a.F, a.s + b.s, a.t + b.t);
}

AlgNum operator-(const AlgNum& a, const AlgNum& b) {
  require_same_field(a.F, b.F);
  return AlgNum(a.F, a.s - b.s, a.t - b.t);
}

AlgNum operator-(const AlgNum& a) { return AlgNum(a.F, -a.s, -a.t); }

AlgNum operator*(const AlgNum& a, const AlgNum& b) {
  require_same_field(a.F, b.F);
  if (a.F.is_rational()) return AlgNum(a.F, a.s * b.s, 0);
  // (s1 + t1 r)(s2 + t2 r) with r^2 = D
  return AlgNum(a.F, a.s * b.s + a.t * b.t * a.F.D, a.s * b.t + a.t * b.s);
}

AlgNum operator*(const AlgNum& a, const mpq_class& q) {
  return AlgNum(a.F, a.s * q, a.t * q);
}

AlgNum operator/(const AlgNum& a, const AlgNum& b) {
  require_same_field(a.F, b.F);
  if (b.is_zero()) throw std::invalid_argument("AlgNum: division by zero");
  if (a.F.is_rational()) return AlgNum(a.F, a.s / b.s, 0);
  mpq_class n = b.s * b.s - mpq_class(a.F.D) * b.t * b.t;
  // a * conj(b) / N(b)
  AlgNum prod = a * conj(b);
  return AlgNum(a.F, prod.s / n, prod.t / n);
}

AlgNum conj(const AlgNum& x) {
  if (x.F.is_rational()) return x;
  return AlgNum(x.F, x.s, -x.t);
}

mpq_class norm(const AlgNum& x) {
  if (x.F.is_rational()) return x.s;
  return x.s * x.s - mpq_class(x.F.D) * x.t * x.t;
}

mpq_class trace(const AlgNum& x) {
  if (x.F.is_rational()) return x.s;
  return 2 * x.s;
}

int sign_real(const AlgNum& x) {
  if (x.F.is_imaginary())
    throw std::invalid_argument("sign_real: imaginary field");
  int ss = sgn(x.s);
  if (x.F.is_rational() || x.t == 0) return ss;
  int st = sgn(x.t);
  if (ss == 0) return st;
  if (ss == st) return ss;
  // s and t*sqrt(D) have opposite signs: compare s^2 vs D t^2.
  mpq_class diff = x.s * x.s - mpq_class(x.F.D) * x.t * x.t;
  int sd = sgn(diff);
  return sd == 0 ? 0 : ss * sd;
}

int cmp_real(const AlgNum& a, const AlgNum& b) { return sign_real(a - b); }

std::string AlgNum::str() const {
  std::ostringstream os;
  if (t == 0) {
    os << s;
  } else {
    os << s << (sgn(t) < 0 ? "-" : "+") << abs(t) << "*sqrt(" << F.D << ")";
  }
  return os.str();
}

// ---- rational square roots ----

mpz_class isqrt(const mpz_class& n) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const mpz_class& n, mpz_class* root) {
  if (n < 0) return false;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
  if (root) *root = isqrt(n);
  return true;
}

std::optional<mpq_class> sqrt_rational(const mpq_class& q) {
  if (q < 0) return std::nullopt;
  mpz_class rn, rd;
  if (!is_perfect_square(q.get_num(), &rn)) return std::nullopt;
  if (!is_perfect_square(q.get_den(), &rd)) return std::nullopt;
  return mpq_class(rn, rd);
}

std::pair<mpz_class, mpz_class> squarefree_decompose(const mpz_class& n) {
  if (n <= 0) throw std::invalid_argument("squarefree_decompose: n must be positive");
  mpz_class m = n, r = 1, s = 1;
  for (mpz_class p = 2; p * p <= m; ++p) {
    unsigned long e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e >= 2) {
      mpz_class pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e / 2);
      s *= pe;
    }
    if (e % 2) r *= p;
  }
  r *= m;
  return {r, s};
}

std::optional<AlgNum> is_square(const AlgNum& x) {
  const FieldDesc& F = x.F;
  if (x.is_zero()) return AlgNum::zero(F);
  if (F.is_rational()) {
    auto r = sqrt_rational(x.s);
    if (!r) return std::nullopt;
    return AlgNum(F, *r, 0);
  }
  if (x.t == 0) {
    if (auto r = sqrt_rational(x.s)) return AlgNum(F, *r, 0);
    if (auto r = sqrt_rational(x.s / F.D)) return AlgNum(F, 0, *r);
    return std::nullopt;
  }
  // r = p + q sqrt(D): p^2 + D q^2 = s, 2pq = t, so p^2 = (s ± sqrt(N(x)))/2.
  auto n = sqrt_rational(norm(x));
  if (!n) return std::nullopt;
  for (int sign : {1, -1}) {
    mpq_class p2 = (x.s + sign * *n) / 2;
    auto p = sqrt_rational(p2);
    if (!p || *p == 0) continue;
    mpq_class q = x.t / (2 * *p);
    AlgNum r(F, *p, q);
    if (r * r == x) {
      if (sgn(r.s) < 0 || (r.s == 0 && sgn(r.t) < 0)) r = -r;
      return r;
    }
  }
  return std::nullopt;
}

// ---- AlgInt ----

AlgInt::AlgInt(FieldDesc f, mpz_class u_, mpz_class v_)
    : F(f), u(std::move(u_)), v(std::move(v_)) {
  if (F.is_rational() && v != 0)
    throw std::invalid_argument("AlgInt: irrational part over Q");
}

AlgInt AlgInt::omega(const FieldDesc& f) {
  if (!f.is_quadratic()) throw std::invalid_argument("omega: rational field");
  return AlgInt(f, 0, 1);
}

AlgNum AlgInt::num() const {
  if (F.is_rational()) return AlgNum(F, mpq_class(u), 0);
  if (F.half_omega) return AlgNum(F, u + mpq_class(v, 2), mpq_class(v, 2));
  return AlgNum(F, mpq_class(u), mpq_class(v));
}

mpz_class AlgInt::height() const {
  mpz_class a = abs(u), b = abs(v);
  return a > b ? a : b;
}

AlgInt operator+(const AlgInt& a, const AlgInt& b) {
  require_same_field(a.F, b.F);
  return AlgInt(a.F, a.u + b.u, a.v + b.v);
}

AlgInt operator-(const AlgInt& a, const AlgInt& b) {
  require_same_field(a.F, b.F);
  return AlgInt(a.F, a.u - b.u, a.v - b.v);
}

AlgInt operator-(const AlgInt& a) { return AlgInt(a.F, -a.u, -a.v); }

AlgInt operator*(const AlgInt& a, const AlgInt& b) {
  require_same_field(a.F, b.F);
  if (a.F.is_rational()) return AlgInt(a.F, a.u * b.u, 0);
  // omega^2 = tr*omega + nrm
  mpz_class vv = a.v * b.v;
  return AlgInt(a.F, a.u * b.u + vv * a.F.omega_nrm(),
                a.u * b.v + a.v * b.u + vv * a.F.omega_tr());
}

AlgInt operator*(const AlgInt& a, long n) { return AlgInt(a.F, a.u * n, a.v * n); }

AlgInt conj(const AlgInt& x) {
  if (x.F.is_rational()) return x;
  if (x.F.half_omega) return AlgInt(x.F, x.u + x.v, -x.v);  // conj(omega) = 1 - omega
  return AlgInt(x.F, x.u, -x.v);
}

mpz_class norm(const AlgInt& x) {
  if (x.F.is_rational()) return x.u;
  if (x.F.half_omega) {
    // N(u + v omega) = u^2 + uv - v^2 (D-1)/4
    return x.u * x.u + x.u * x.v - x.v * x.v * ((x.F.D - 1) / 4);
  }
  return x.u * x.u - x.v * x.v * x.F.D;
}

mpz_class trace(const AlgInt& x) {
  if (x.F.is_rational()) return x.u;
  return 2 * x.u + x.v * x.F.omega_tr();
}

bool coord_less(const AlgInt& a, const AlgInt& b) {
  int c = cmp(a.u, b.u);
  if (c != 0) return c < 0;
  return cmp(a.v, b.v) < 0;
}

std::string AlgInt::str() const {
  std::ostringstream os;
  if (v == 0) {
    os << u;
    return os.str();
  }
  if (u != 0) os << u << (sgn(v) < 0 ? "-" : "+");
  else if (sgn(v) < 0) os << "-";
  mpz_class av = abs(v);
  if (av == 1) os << "a";
  else os << av << "*a";
  return os.str();
}

std::optional<AlgInt> is_integral(const AlgNum& x) {
  const FieldDesc& F = x.F;
  if (F.is_rational()) {
    if (x.s.get_den() != 1) return std::nullopt;
    return AlgInt(F, x.s.get_num(), 0);
  }
  if (F.half_omega) {
    mpq_class v = 2 * x.t;
    mpq_class u = x.s - x.t;
    if (v.get_den() != 1 || u.get_den() != 1) return std::nullopt;
    return AlgInt(F, u.get_num(), v.get_num());
  }
  if (x.s.get_den() != 1 || x.t.get_den() != 1) return std::nullopt;
  return AlgInt(F, x.s.get_num(), x.t.get_num());
}

// ---- unit group ----

namespace {

// Fundamental unit by the period of the continued fraction of omega.
// PQa recurrences on alpha_i = (P_i + sqrt(D))/Q_i; the first repeated
// state (P, Q) closes the cycle, and the cycle's convergent matrix fixes
// omega, so its bottom row (r, s) yields the unit r*omega + s.
AlgInt fundamental_unit_cf(const FieldDesc& F) {
  const long D = F.D;
  mpz_class sq = isqrt(mpz_class(D));
  mpz_class P = F.half_omega ? 1 : 0;
  mpz_class Q = F.half_omega ? 2 : 1;

  // Convergents A_{-1} = 1, A_{-2} = 0 (and symmetrically for B).
  mpz_class A1 = 1, A2 = 0, B1 = 0, B2 = 1;
  std::map<std::pair<mpz_class, mpz_class>, std::array<mpz_class, 4>> seen;

  for (int step = 0; step < 100000; ++step) {
    auto state = std::make_pair(P, Q);
    auto it = seen.find(state);
    if (it != seen.end()) {
      // M_j = [[a1, a2], [b1, b2]] at first visit, M_i now; the cycle
      // matrix T = M_i * M_j^{-1} fixes omega.
      const auto& m = it->second;
      mpz_class a1 = m[0], a2 = m[1], b1 = m[2], b2 = m[3];
      mpz_class det = a1 * b2 - a2 * b1;  // ±1
      // M_j^{-1} = det * [[b2, -a2], [-b1, a1]]
      mpz_class r = det * (B1 * b2 - B2 * b1);
      mpz_class s = det * (-B1 * a2 + B2 * a1);
      AlgInt eps(F, s, r);
      // Normalize to eps > 1 among ±eps^{±1}.
      if (sign_real(eps.num()) < 0) eps = -eps;
      if (cmp_real(eps.num(), AlgNum::one(F)) < 0) {
        eps = unit_inverse(eps);
        if (sign_real(eps.num()) < 0) eps = -eps;
      }
      if (eps == AlgInt::one(F))
        throw std::logic_error("fundamental_unit_cf: trivial cycle");
      return eps;
    }
    seen.emplace(state, std::array<mpz_class, 4>{A1, A2, B1, B2});

    assert(Q > 0);
    mpz_class a = (P + sq) / Q;
    mpz_class An = a * A1 + A2, Bn = a * B1 + B2;
    A2 = A1; A1 = An;
    B2 = B1; B1 = Bn;
    mpz_class Pn = a * Q - P;
    Q = (D - Pn * Pn) / Q;
    P = Pn;
  }
  throw std::logic_error("fundamental_unit_cf: no period found");
}

}  // namespace

UnitGroup unit_group(const FieldDesc& F) {
  UnitGroup G;
  G.F = F;
  AlgInt one = AlgInt::one(F);
  G.torsion = {one, -one};
  if (F.is_rational()) return G;
  if (F.is_imaginary()) {
    if (F.D == -1) {
      AlgInt i = AlgInt::omega(F);
      G.torsion = {one, -one, i, -i};
    } else if (F.D == -3) {
      AlgInt z = AlgInt::omega(F);          // primitive 6th root (1+sqrt(-3))/2
      AlgInt z2 = z - one;                   // z^2
      G.torsion = {one, -one, z, -z, z2, -z2};
    }
    return G;
  }
  G.rank = 1;
  G.fundamental = fundamental_unit_cf(F);
  return G;
}

bool is_unit(const AlgInt& x) {
  mpz_class n = norm(x);
  return n == 1 || n == -1;
}

AlgInt unit_inverse(const AlgInt& x) {
  mpz_class n = norm(x);
  if (n == 1) return conj(x);
  if (n == -1) return -conj(x);
  throw std::invalid_argument("unit_inverse: not a unit");
}

AlgInt unit_pow(const AlgInt& eps, long m) {
  AlgInt base = m < 0 ? unit_inverse(eps) : eps;
  unsigned long e = m < 0 ? -(unsigned long)m : (unsigned long)m;
  AlgInt r = AlgInt::one(eps.F);
  AlgInt b = base;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

namespace {

bool first_nonzero_positive(const AlgInt& x) {
  if (x.u != 0) return x.u > 0;
  return x.v > 0;
}

}  // namespace

AlgInt canonical_associate(const AlgInt& x, const UnitGroup& G) {
  if (x.is_zero()) throw std::invalid_argument("canonical_associate: zero");
  const FieldDesc& F = x.F;
  if (F.is_rational()) return AlgInt(F, abs(x.u), 0);
  if (F.is_imaginary()) {
    std::optional<AlgInt> best;
    for (const auto& z : G.torsion) {
      AlgInt c = x * z;
      if (!first_nonzero_positive(c)) continue;
      if (!best || coord_less(c, *best)) best = c;
    }
    return *best;  // torsion contains ±1, so a candidate always exists
  }
  // Real quadratic: scale by eps^m so that |sigma_1(x)| lands in the
  // half-open fundamental window [sqrt(|N|/eps), sqrt(|N| eps)), then fix
  // the sign.
  const AlgInt& eps = *G.fundamental;
  AlgInt inv = unit_inverse(eps);
  AlgNum n = AlgNum::from_rational(F, mpq_class(abs(norm(x))));
  AlgNum e = eps.num();
  AlgInt c = x;
  // sigma_1(c)^2 * eps >= |N|  and  sigma_1(c)^2 < |N| * eps
  while (cmp_real(c.num() * c.num() * e, n) < 0) c = c * eps;
  while (cmp_real(c.num() * c.num(), n * e) >= 0) c = c * inv;
  if (!first_nonzero_positive(c)) c = -c;
  return c;
}

bool is_associate(const AlgInt& x, const AlgInt& y) {
  if (x.is_zero() || y.is_zero())
    throw std::invalid_argument("is_associate: zero input");
  AlgNum q = x.num() / y.num();
  auto qi = is_integral(q);
  if (!qi) return false;
  return is_unit(*qi);
}

}  // namespace mrap
