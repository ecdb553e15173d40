#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mrap {

// Thrown when an instance falls outside the pipeline's preconditions
// (a+c = 0 or a zero norm target); the solver falls back to the oracle.
class DegenerateError : public std::runtime_error {
 public:
  explicit DegenerateError(const std::string& what) : std::runtime_error(what) {}
};

enum class FieldKind { Rational, Quadratic };
enum class Signature { Rational, Imaginary, Real };

// The base field: Q, or Q(sqrt(D)) with D squarefree, D != 0, 1.
// omega generates the ring of integers: sqrt(D), or (1+sqrt(D))/2 when
// D = 1 (mod 4).
struct FieldDesc {
  FieldKind kind = FieldKind::Rational;
  long D = 0;
  long disc = 1;
  bool half_omega = false;

  bool is_rational() const { return kind == FieldKind::Rational; }
  bool is_quadratic() const { return kind == FieldKind::Quadratic; }
  bool is_imaginary() const { return is_quadratic() && D < 0; }
  bool is_real_quadratic() const { return is_quadratic() && D > 0; }

  Signature signature() const {
    if (is_rational()) return Signature::Rational;
    return D < 0 ? Signature::Imaginary : Signature::Real;
  }

  // omega^2 = omega_tr * omega + omega_nrm
  long omega_tr() const { return half_omega ? 1 : 0; }
  long omega_nrm() const { return half_omega ? (D - 1) / 4 : D; }

  friend bool operator==(const FieldDesc& a, const FieldDesc& b) {
    return a.kind == b.kind && a.D == b.D;
  }
  friend bool operator!=(const FieldDesc& a, const FieldDesc& b) { return !(a == b); }
};

// Reduces D to its squarefree part; D = 0 is rejected, squarefree part 1
// yields the rational field.
FieldDesc mk_field(long D);
FieldDesc mk_rational_field();

struct AlgInt;

// Field element s + t*sqrt(D), exact rational coordinates.  For the
// rational field t is identically zero.
struct AlgNum {
  FieldDesc F;
  mpq_class s, t;

  AlgNum() = default;
  AlgNum(FieldDesc f, mpq_class s_, mpq_class t_);
  static AlgNum zero(const FieldDesc& f) { return AlgNum(f, 0, 0); }
  static AlgNum one(const FieldDesc& f) { return AlgNum(f, 1, 0); }
  static AlgNum from_rational(const FieldDesc& f, const mpq_class& q) {
    return AlgNum(f, q, 0);
  }

  bool is_zero() const { return s == 0 && t == 0; }
  bool is_rational_value() const { return t == 0; }

  std::string str() const;

  friend bool operator==(const AlgNum& a, const AlgNum& b) {
    return a.F == b.F && a.s == b.s && a.t == b.t;
  }
  friend bool operator!=(const AlgNum& a, const AlgNum& b) { return !(a == b); }
};

AlgNum operator+(const AlgNum& a, const AlgNum& b);
AlgNum operator-(const AlgNum& a, const AlgNum& b);
AlgNum operator-(const AlgNum& a);
AlgNum operator*(const AlgNum& a, const AlgNum& b);
AlgNum operator*(const AlgNum& a, const mpq_class& q);
AlgNum operator/(const AlgNum& a, const AlgNum& b);

AlgNum conj(const AlgNum& x);
// Degree-1 convention for Q: norm(x) = trace(x) = x.
mpq_class norm(const AlgNum& x);
mpq_class trace(const AlgNum& x);

// Sign of x under the real embedding sending sqrt(D) to the positive
// root (rational and real quadratic fields only).
int sign_real(const AlgNum& x);
// sign_real(a - b)
int cmp_real(const AlgNum& a, const AlgNum& b);

// Square root in K, if one exists.
std::optional<AlgNum> is_square(const AlgNum& x);

// Integral element u + v*omega.
struct AlgInt {
  FieldDesc F;
  mpz_class u, v;

  AlgInt() = default;
  AlgInt(FieldDesc f, mpz_class u_, mpz_class v_);
  static AlgInt zero(const FieldDesc& f) { return AlgInt(f, 0, 0); }
  static AlgInt one(const FieldDesc& f) { return AlgInt(f, 1, 0); }
  static AlgInt omega(const FieldDesc& f);
  static AlgInt from_long(const FieldDesc& f, long n) { return AlgInt(f, n, 0); }

  AlgNum num() const;
  bool is_zero() const { return u == 0 && v == 0; }

  // max(|u|, |v|)
  mpz_class height() const;

  // Canonical rendering "u+v*a" with a = omega.
  std::string str() const;

  friend bool operator==(const AlgInt& a, const AlgInt& b) {
    return a.F == b.F && a.u == b.u && a.v == b.v;
  }
  friend bool operator!=(const AlgInt& a, const AlgInt& b) { return !(a == b); }
};

AlgInt operator+(const AlgInt& a, const AlgInt& b);
AlgInt operator-(const AlgInt& a, const AlgInt& b);
AlgInt operator-(const AlgInt& a);
AlgInt operator*(const AlgInt& a, const AlgInt& b);
AlgInt operator*(const AlgInt& a, long n);

AlgInt conj(const AlgInt& x);
mpz_class norm(const AlgInt& x);
mpz_class trace(const AlgInt& x);

// Total order on AlgInt coordinates, for deterministic sets.
bool coord_less(const AlgInt& a, const AlgInt& b);

// Returns the omega-basis coordinates iff x lies in O_K.
std::optional<AlgInt> is_integral(const AlgNum& x);

// Utility: exact rational square root, integer square root helpers.
std::optional<mpq_class> sqrt_rational(const mpq_class& q);
bool is_perfect_square(const mpz_class& n, mpz_class* root = nullptr);
mpz_class isqrt(const mpz_class& n);
// n = r * s^2 with r squarefree; returns (r, s).  n > 0.
std::pair<mpz_class, mpz_class> squarefree_decompose(const mpz_class& n);

// ---- unit group ----

struct UnitGroup {
  FieldDesc F;
  std::vector<AlgInt> torsion;      // roots of unity
  std::optional<AlgInt> fundamental;  // eps > 1, real quadratic only
  int rank = 0;
};

UnitGroup unit_group(const FieldDesc& F);

bool is_unit(const AlgInt& x);
// x^{-1} for a unit x; stays in O_K.
AlgInt unit_inverse(const AlgInt& x);
// eps^m, m may be negative (eps a unit).
AlgInt unit_pow(const AlgInt& eps, long m);

// Unique representative of the associate class of x (x != 0).
AlgInt canonical_associate(const AlgInt& x, const UnitGroup& G);
bool is_associate(const AlgInt& x, const AlgInt& y);

}  // namespace mrap
