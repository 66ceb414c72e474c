#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ainfree {

/* Exact coefficient arithmetic. The ring is fixed per session: integers,
   rationals, or residues mod a prime p (canonical representatives in [0,p)).
   Mixing scalars from different rings is a contract violation and throws. */

enum class RingKind { Z, Q, Zp };

struct RingSpec {
  RingKind kind = RingKind::Z;
  long p = 0;  // modulus, only for Zp; an odd or even prime < 2^31

  bool operator==(const RingSpec&) const = default;

  static RingSpec integers() { return {RingKind::Z, 0}; }
  static RingSpec rationals() { return {RingKind::Q, 0}; }
  static RingSpec residues(long p);

  bool is_field() const { return kind != RingKind::Z; }

  // "Z", "Q", "Zp:<p>"
  static RingSpec parse(const std::string& tag);
  std::string str() const;
};

class Scalar {
 public:
  Scalar() : kind_(RingKind::Z), p_(0), z_(0) {}

  static Scalar zero(RingSpec r) { return of(0, r); }
  static Scalar one(RingSpec r) { return of(1, r); }
  static Scalar of(long v, RingSpec r);
  // Accepts "-12" everywhere and "a/b" over Q. Throws on malformed input.
  static Scalar parse(const std::string& text, RingSpec r);

  RingSpec ring() const { return {kind_, p_}; }
  bool is_zero() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Multiplicative inverse; requires a field (or a unit of Z).
  Scalar inverse() const;
  // Over Z: whether *this divides o exactly. Over a field: *this != 0.
  bool divides(const Scalar& o) const;
  // Exact quotient o / *this; the caller guarantees divisibility.
  Scalar div_exact(const Scalar& o) const;

  std::string str() const;

  // Raw accessors for the elimination kernels in sparse.cpp.
  const mpz_class& zval() const;  // Z and Zp (residue)
  const mpq_class& qval() const;  // Q

 private:
  void check_same_ring(const Scalar& o) const;
  void normalize();  // Zp reduction, Q canonicalization

  RingKind kind_;
  long p_;
  mpz_class z_;  // value for Z, residue for Zp
  mpq_class q_;  // value for Q
};

inline Scalar operator*(long a, const Scalar& s) {
  return Scalar::of(a, s.ring()) * s;
}

// (-1)^e as a scalar of the given ring.
inline Scalar sign_pow(long e, RingSpec r) {
  return Scalar::of((e % 2 + 2) % 2 == 0 ? 1 : -1, r);
}

}  // namespace ainfree
