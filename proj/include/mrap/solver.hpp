#pragma once

#include "mrap/normeq.hpp"
#include "mrap/uniteq.hpp"

namespace mrap {

// One equation instance a x^2 + b y^2 + c z^2 = d x y z over O_K.
struct MRInstance {
  FieldDesc F;
  AlgInt a, b, c, d;
};

MRInstance make_instance(const FieldDesc& F, long a, long b, long c, long d);

// Affine point on D: dY^3 - (a+b+c)Y^2 - dX^2 Y + 2(a-c)XY - (a+c)X^2 = 0.
struct CurvePoint {
  AlgNum X, Y;
};

// Exact evaluation of the curve equation at (X, Y).
AlgNum curve_eval(const MRInstance& inst, const AlgNum& X, const AlgNum& Y);

// The triple (first, first+diff, first+2*diff).
struct APTriple {
  AlgInt first, diff;

  AlgInt x() const { return first; }
  AlgInt y() const { return first + diff; }
  AlgInt z() const { return first + diff + diff; }
  bool is_trivial() const { return first.is_zero() && diff.is_zero(); }
  std::string str() const { return first.str() + "|" + diff.str(); }

  friend bool operator==(const APTriple& a, const APTriple& b) {
    return a.first == b.first && a.diff == b.diff;
  }
};

// Output ordering: height of the first term, then rendering.
bool triple_less(const APTriple& a, const APTriple& b);

// One (k1, k2, u1, u2) branch with its candidate X and discriminant.
struct CandidateRecord {
  AlgInt k1, k2, u1, u2;
  AlgNum z;       // candidate X coordinate
  AlgNum delta;   // quartic discriminant in t = k1 u1
  std::optional<std::string> extension;  // K(sqrt(Delta)) note when Delta is not a square
  std::vector<CurvePoint> points;        // K-rational points at X = z (integral or not)
};

struct SolutionReport {
  MRInstance inst;
  std::vector<APTriple> triples;  // sorted, duplicate-free, contains (0,0,0)
  std::vector<CandidateRecord> records;
  bool degenerate_fallback = false;
};

// z_{k1,u1} = (a+c+k1u1)(4c k1u1 + (k1u1)^2 + (a+c)(b+4c)) / (u1 u2 k1 k2 d)
AlgNum candidate_x(const MRInstance& inst, const AlgInt& k1, const AlgInt& u1,
                   const AlgInt& k2, const AlgInt& u2);

// Quartic discriminant Delta evaluated at t = k1 u1.
AlgNum delta(const MRInstance& inst, const AlgNum& t);

// The up-to-three K-rational Y values at X = record.z, each verified on
// the curve; fills record.points and the extension note.
void points_from_candidate(const MRInstance& inst, CandidateRecord& record);

APTriple point_to_triple(const CurvePoint& p);

// d-independent part of the pipeline for fixed (K, a, b, c): candidate
// pairs, unit-equation solutions, and the X and Y values scaled by d.
struct FamilyCandidate {
  AlgInt k1, k2, u1, u2;
  AlgNum t;        // k1 u1
  AlgNum w;        // z * d
  AlgNum delta;
  std::vector<AlgNum> y_times_d;  // candidate Y values scaled by d
  std::optional<std::string> extension;
};

struct SolutionFamily {
  FieldDesc F;
  AlgInt a, b, c;
  std::vector<FamilyCandidate> candidates;
};

// Throws DegenerateError for a + c = 0 or vanishing norm targets.
SolutionFamily build_family(const FieldDesc& F, const AlgInt& a,
                            const AlgInt& b, const AlgInt& c);

SolutionReport solve_with_family(const SolutionFamily& fam, const AlgInt& d);

// The complete set AP_{(a,b,c,d)}(K).  Degenerate instances fall back to
// the brute-force oracle (bounded search; flagged in the report).
SolutionReport solve_ap(const MRInstance& inst);

struct NontrivialCheck {
  bool nontrivial = false;
  bool clause_a = false;  // d | (a+b+c), with a+b+c != 0
  bool clause_b = false;  // divisibility fires for some candidate branch
  // The printed divisibility test agrees with point integrality; a false
  // value flags an instance where the two criteria disagree.
  bool clauses_match_output = true;
};

NontrivialCheck has_nontrivial(const MRInstance& inst);

bool verify_triple(const MRInstance& inst, const APTriple& t);

// Checks the transcription identities f1 + f2 = -2, R_i(alpha_i f_i) = 0
// and S_i(beta_i / f_i) = 0 at an affine point with X != 0.
bool identity_checks(const MRInstance& inst, const CurvePoint& p);

// Height bound for the oracle fallback on degenerate instances.
inline constexpr long kDegenerateFallbackHeight = 50;

}  // namespace mrap
