#include "mrap/solver.hpp"

#include <algorithm>
#include <map>

#include "mrap/oracle.hpp"

namespace mrap {

namespace {

mpz_class content_gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Delta scaled by a rational square so that the rendered extension
// descriptor has integer, square-reduced coordinates.
AlgNum squarefree_scale(const AlgNum& x) {
  if (x.is_zero()) return x;
  mpz_class L;
  mpz_lcm(L.get_mpz_t(), x.s.get_den().get_mpz_t(), x.t.get_den().get_mpz_t());
  mpq_class L2(L * L);
  mpz_class s = mpz_class(x.s * L2);
  mpz_class t = mpz_class(x.t * L2);
  if (t == 0) {
    auto [r, sq] = squarefree_decompose(abs(s));
    return AlgNum(x.F, mpq_class(sgn(s) * r), 0);
  }
  mpz_class g = content_gcd(abs(s), abs(t));
  auto [r, sq] = squarefree_decompose(g);
  mpz_class q2 = sq * sq;
  return AlgNum(x.F, mpq_class(s / q2), mpq_class(t / q2));
}

std::string extension_note(const AlgNum& d) {
  return "K(sqrt(" + squarefree_scale(d).str() + "))";
}

// Candidate Y values at X = z, scaled by d (so they are d-independent).
// Fills ext with the K(sqrt(Delta)) note when Delta is not a square in K.
std::vector<AlgNum> y_values_times_d(const AlgNum& alpha, const AlgNum& b4c,
                                     const AlgNum& two_a_b_two_c,
                                     const AlgNum& t, const AlgNum& w,
                                     const AlgNum& denom, const AlgNum& dlt,
                                     std::optional<std::string>& ext) {
  std::vector<AlgNum> ys;
  auto push = [&](const AlgNum& y) {
    if (std::find(ys.begin(), ys.end(), y) == ys.end()) ys.push_back(y);
  };
  AlgNum apt = alpha + t;
  if (!apt.is_zero()) push(alpha * w / apt);
  if (auto r = is_square(dlt)) {
    AlgNum base = alpha * b4c + two_a_b_two_c * t;
    AlgNum den2 = -(denom + denom);
    push((base + *r) * apt / den2);
    push((base - *r) * apt / den2);
  } else {
    ext = extension_note(dlt);
  }
  return ys;
}

struct CoordLess {
  bool operator()(const AlgInt& a, const AlgInt& b) const { return coord_less(a, b); }
};

}  // namespace

MRInstance make_instance(const FieldDesc& F, long a, long b, long c, long d) {
  return MRInstance{F, AlgInt::from_long(F, a), AlgInt::from_long(F, b),
                    AlgInt::from_long(F, c), AlgInt::from_long(F, d)};
}

AlgNum curve_eval(const MRInstance& inst, const AlgNum& X, const AlgNum& Y) {
  AlgNum a = inst.a.num(), b = inst.b.num(), c = inst.c.num(), d = inst.d.num();
  return d * Y * Y * Y - (a + b + c) * Y * Y - d * X * X * Y +
         (a - c) * X * Y * mpq_class(2) - (a + c) * X * X;
}

bool triple_less(const APTriple& a, const APTriple& b) {
  int hc = cmp(a.first.height(), b.first.height());
  if (hc != 0) return hc < 0;
  return a.str() < b.str();
}

AlgNum candidate_x(const MRInstance& inst, const AlgInt& k1, const AlgInt& u1,
                   const AlgInt& k2, const AlgInt& u2) {
  AlgNum a = inst.a.num(), b = inst.b.num(), c = inst.c.num(), d = inst.d.num();
  AlgNum t = (k1 * u1).num();
  AlgNum ac = a + c;
  AlgNum numer = (ac + t) * (c * t * mpq_class(4) + t * t + ac * (b + c * mpq_class(4)));
  AlgNum denom = (u1 * u2 * k1 * k2).num() * d;
  return numer / denom;
}

AlgNum delta(const MRInstance& inst, const AlgNum& t) {
  AlgNum a = inst.a.num(), b = inst.b.num(), c = inst.c.num();
  AlgNum t2 = t * t;
  AlgNum c4 = a * a * mpq_class(4) + b * b + a * b * mpq_class(8) +
              a * c * mpq_class(56) + b * c * mpq_class(8) + c * c * mpq_class(52);
  AlgNum ac = a + c;
  AlgNum b4c = b + c * mpq_class(4);
  return t2 * t2 * mpq_class(4) + (a + c * mpq_class(3)) * t2 * t * mpq_class(8) +
         c4 * t2 + ac * b4c * (a * mpq_class(6) + b + c * mpq_class(6)) * t * mpq_class(2) +
         ac * ac * b4c * b4c;
}

void points_from_candidate(const MRInstance& inst, CandidateRecord& record) {
  record.points.clear();
  if (record.z.is_zero()) return;  // the X = 0 branch already covers this
  AlgNum a = inst.a.num(), b = inst.b.num(), c = inst.c.num(), d = inst.d.num();
  AlgNum alpha = a + c;
  AlgNum b4c = b + c * mpq_class(4);
  AlgNum two_a_b_two_c = a * mpq_class(2) + b + c * mpq_class(2);
  AlgNum t = (record.k1 * record.u1).num();
  AlgNum denom = (record.u1 * record.u2 * record.k1 * record.k2).num();
  AlgNum w = record.z * d;
  auto yd = y_values_times_d(alpha, b4c, two_a_b_two_c, t, w, denom,
                             record.delta, record.extension);
  for (const auto& yv : yd) {
    AlgNum Y = yv / d;
    if (!curve_eval(inst, record.z, Y).is_zero())
      throw std::logic_error("points_from_candidate: point not on curve");
    record.points.push_back(CurvePoint{record.z, Y});
  }
}

APTriple point_to_triple(const CurvePoint& p) {
  auto X = is_integral(p.X);
  auto Y = is_integral(p.Y);
  if (!X || !Y)
    throw std::invalid_argument("point_to_triple: point is not integral");
  return APTriple{*Y - *X, *X};
}

SolutionFamily build_family(const FieldDesc& F, const AlgInt& a,
                            const AlgInt& b, const AlgInt& c) {
  SolutionFamily fam;
  fam.F = F;
  fam.a = a;
  fam.b = b;
  fam.c = c;
  UnitGroup G = unit_group(F);
  auto [A1, A2] = candidate_sets(F, a, b, c, G);
  AlgInt alpha = a + c;
  AlgInt c0 = -(alpha + alpha);
  AlgNum alpha_n = alpha.num();
  AlgNum b4c = (b + c * 4).num();
  AlgNum two_a_b_two_c = (a * 2 + b + c * 2).num();

  std::map<mpz_class, std::vector<AlgInt>> by_norm;
  mpz_class max_n2 = 0;
  for (const auto& k2 : A2.members) {
    mpz_class n = abs(norm(k2));
    by_norm[n].push_back(k2);
    max_n2 = std::max(max_n2, n);
  }
  auto consider = [&](const AlgInt& k1, const AlgInt& u1) {
    AlgInt y = c0 - k1 * u1;
    if (y.is_zero()) return;
    auto it = by_norm.find(abs(norm(y)));
    if (it == by_norm.end()) return;
    for (const auto& k2 : it->second) {
      auto q = is_integral(y.num() / k2.num());
      if (!q || !is_unit(*q)) continue;
      FamilyCandidate cand;
      cand.k1 = k1;
      cand.k2 = k2;
      cand.u1 = u1;
      cand.u2 = *q;
      cand.t = (k1 * u1).num();
      AlgNum denom = (u1 * *q * k1 * k2).num();
      cand.w = (alpha_n + cand.t) *
               (cand.t * cand.t + cand.t * (fam.c.num() * mpq_class(4)) + alpha_n * b4c) /
               denom;
      MRInstance probe{F, a, b, c, AlgInt::one(F)};
      cand.delta = delta(probe, cand.t);
      cand.y_times_d = y_values_times_d(alpha_n, b4c, two_a_b_two_c, cand.t,
                                        cand.w, denom, cand.delta, cand.extension);
      fam.candidates.push_back(std::move(cand));
    }
  };

  if (G.rank == 0) {
    for (const auto& k1 : A1.members)
      for (const auto& z : G.torsion) consider(k1, z);
  } else {
    const AlgInt& eps = *G.fundamental;
    for (const auto& k1 : A1.members) {
      // Shared bound over A2: the rule-out threshold only grows with
      // |N(k2)|, so the max over A2 covers every pair.
      mpq_class R = mpq_class(abs(norm(c0))) + abs(norm(k1)) + max_n2;
      AlgNum g = (k1 * conj(c0)).num();
      long M = 0;
      {
        // direction bounds; mirror exponent_bound with the shared R
        AlgNum e = eps.num();
        for (AlgNum h : {g, conj(g)}) {
          long m = 0;
          AlgNum hh = h;
          while (true) {
            // |sigma_1| - |sigma_2| > R rules out exponent m
            int s1 = sign_real(hh), s2 = sign_real(conj(hh));
            bool exceeds;
            if (s1 == s2) {
              mpq_class tt = s1 * 2 * hh.t;
              exceeds = sgn(tt) > 0 && tt * tt * F.D > R * R;
            } else {
              mpq_class ss = s1 * 2 * hh.s;
              exceeds = sgn(ss) > 0 && ss * ss > R * R;
            }
            if (exceeds) break;
            hh = hh * e;
            ++m;
            if (m > 100000) throw std::logic_error("build_family: bound diverges");
          }
          M = std::max(M, m);
        }
      }
      for (long m = -M; m <= M; ++m) {
        AlgInt p = unit_pow(eps, m);
        consider(k1, p);
        consider(k1, -p);
      }
    }
  }
  return fam;
}

SolutionReport solve_with_family(const SolutionFamily& fam, const AlgInt& d) {
  if (d.is_zero()) throw std::invalid_argument("solve_ap: d = 0");
  const FieldDesc& F = fam.F;
  MRInstance inst{F, fam.a, fam.b, fam.c, d};
  SolutionReport rep;
  rep.inst = inst;

  std::vector<APTriple> triples;
  auto add_triple = [&](const APTriple& t) {
    for (const auto& e : triples)
      if (e == t) return;
    triples.push_back(t);
  };
  add_triple(APTriple{AlgInt::zero(F), AlgInt::zero(F)});

  AlgNum dnum = d.num();
  AlgNum sum_abc = (fam.a + fam.b + fam.c).num();
  if (auto q = is_integral(sum_abc / dnum)) {
    if (!q->is_zero()) add_triple(APTriple{*q, AlgInt::zero(F)});
  }

  for (const auto& cand : fam.candidates) {
    CandidateRecord rec;
    rec.k1 = cand.k1;
    rec.k2 = cand.k2;
    rec.u1 = cand.u1;
    rec.u2 = cand.u2;
    rec.z = cand.w / dnum;
    rec.delta = cand.delta;
    rec.extension = cand.extension;
    if (!rec.z.is_zero()) {
      for (const auto& yd : cand.y_times_d) {
        AlgNum Y = yd / dnum;
        if (!curve_eval(inst, rec.z, Y).is_zero())
          throw std::logic_error("solve_with_family: point not on curve");
        rec.points.push_back(CurvePoint{rec.z, Y});
        auto Xi = is_integral(rec.z);
        auto Yi = is_integral(Y);
        if (Xi && Yi) add_triple(APTriple{*Yi - *Xi, *Xi});
      }
    }
    rep.records.push_back(std::move(rec));
  }

  std::sort(triples.begin(), triples.end(), triple_less);
  rep.triples = std::move(triples);
  return rep;
}

SolutionReport solve_ap(const MRInstance& inst) {
  if (inst.d.is_zero()) throw std::invalid_argument("solve_ap: d = 0");
  try {
    SolutionFamily fam = build_family(inst.F, inst.a, inst.b, inst.c);
    return solve_with_family(fam, inst.d);
  } catch (const DegenerateError&) {
    SolutionReport rep;
    rep.inst = inst;
    rep.degenerate_fallback = true;
    rep.triples = brute_force_ap(inst, HeightBound{kDegenerateFallbackHeight});
    std::sort(rep.triples.begin(), rep.triples.end(), triple_less);
    return rep;
  }
}

NontrivialCheck has_nontrivial(const MRInstance& inst) {
  SolutionReport rep = solve_ap(inst);
  NontrivialCheck res;
  for (const auto& t : rep.triples)
    if (!t.is_trivial()) res.nontrivial = true;

  AlgInt sum = inst.a + inst.b + inst.c;
  if (!sum.is_zero() && is_integral(sum.num() / inst.d.num())) res.clause_a = true;

  AlgNum a = inst.a.num(), b = inst.b.num(), c = inst.c.num();
  AlgNum alpha = a + c;
  AlgNum b4c = b + c * mpq_class(4);
  for (const auto& rec : rep.records) {
    AlgNum t = (rec.k1 * rec.u1).num();
    AlgNum nt = (alpha + t) * (t * t + c * t * mpq_class(4) + alpha * b4c);
    if (is_integral(nt / inst.d.num())) {
      res.clause_b = true;
      break;
    }
  }
  res.clauses_match_output = ((res.clause_a || res.clause_b) == res.nontrivial);
  return res;
}

bool verify_triple(const MRInstance& inst, const APTriple& t) {
  AlgInt x = t.x(), y = t.y(), z = t.z();
  AlgInt lhs = inst.a * x * x + inst.b * y * y + inst.c * z * z;
  AlgInt rhs = inst.d * x * y * z;
  return lhs == rhs;
}

bool identity_checks(const MRInstance& inst, const CurvePoint& p) {
  AlgNum a = inst.a.num(), b = inst.b.num(), c = inst.c.num(), d = inst.d.num();
  AlgNum X = p.X, Y = p.Y;
  AlgNum alpha = a + c;
  if (X.is_zero() || alpha.is_zero())
    throw std::invalid_argument("identity_checks: f_i undefined");

  AlgNum f1 = (d * Y * Y - (a + b + c) * Y - d * X * X + (a - c * mpq_class(3)) * X) /
              (alpha * X);
  AlgNum f2 = (-(d * Y * Y) + (a + b + c) * Y + d * X * X + (c - a * mpq_class(3)) * X) /
              (alpha * X);
  AlgNum two = AlgNum::from_rational(inst.F, 2);
  if (!(f1 + f2 + two).is_zero()) return false;

  AlgNum beta1 = b + c * mpq_class(4);
  AlgNum beta2 = b + a * mpq_class(4);
  auto cubic = [&](const AlgNum& T, const AlgNum& c2, const AlgNum& c1,
                   const AlgNum& c0) {
    return T * T * T + c2 * T * T + c1 * T + c0;
  };
  AlgNum dX = d * X;
  // R_i(alpha f_i) = 0
  AlgNum r1 = cubic(alpha * f1, dX + a + c * mpq_class(5),
                    alpha * (dX * mpq_class(2) + b + c * mpq_class(8)),
                    alpha * alpha * beta1);
  if (!r1.is_zero()) return false;
  AlgNum r2 = cubic(alpha * f2, -dX + a * mpq_class(5) + c,
                    alpha * (-(dX * mpq_class(2)) + a * mpq_class(8) + b),
                    alpha * alpha * beta2);
  if (!r2.is_zero()) return false;
  // S_i(beta_i / f_i) = 0, defined when f_i != 0
  if (!f1.is_zero()) {
    AlgNum s1 = cubic(beta1 / f1, dX * mpq_class(2) + b + c * mpq_class(8),
                      beta1 * (dX + a + c * mpq_class(5)), alpha * beta1 * beta1);
    if (!s1.is_zero()) return false;
  }
  if (!f2.is_zero()) {
    AlgNum s2 = cubic(beta2 / f2, -(dX * mpq_class(2)) + a * mpq_class(8) + b,
                      beta2 * (-dX + a * mpq_class(5) + c), alpha * beta2 * beta2);
    if (!s2.is_zero()) return false;
  }
  return true;
}

}  // namespace mrap
