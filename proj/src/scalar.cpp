#include "ainfree/scalar.hpp"

namespace ainfree {

RingSpec RingSpec::residues(long p) {
  if (p < 2 || mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 40) == 0)
    throw std::invalid_argument("residue modulus must be a prime >= 2");
  return {RingKind::Zp, p};
}

RingSpec RingSpec::parse(const std::string& tag) {
  if (tag == "Z") return integers();
  if (tag == "Q") return rationals();
  if (tag.rfind("Zp:", 0) == 0) {
    long p = 0;
    try {
      p = std::stol(tag.substr(3));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad ring tag: " + tag);
    }
    return residues(p);
  }
  throw std::invalid_argument("bad ring tag: " + tag);
}

std::string RingSpec::str() const {
  switch (kind) {
    case RingKind::Z: return "Z";
    case RingKind::Q: return "Q";
    case RingKind::Zp: return "Zp:" + std::to_string(p);
  }
  return "?";
}

void Scalar::normalize() {
  if (kind_ == RingKind::Zp) {
    z_ = ((z_ % p_) + p_) % p_;
  } else if (kind_ == RingKind::Q) {
    q_.canonicalize();
  }
}

Scalar Scalar::of(long v, RingSpec r) {
  Scalar s;
  s.kind_ = r.kind;
  s.p_ = r.p;
  if (r.kind == RingKind::Q) {
    s.q_ = mpq_class(v);
  } else {
    s.z_ = v;
  }
  s.normalize();
  return s;
}

Scalar Scalar::parse(const std::string& text, RingSpec r) {
  if (text.empty()) throw std::invalid_argument("empty scalar literal");
  Scalar s;
  s.kind_ = r.kind;
  s.p_ = r.p;
  try {
    if (r.kind == RingKind::Q) {
      s.q_ = mpq_class(text);  // accepts "a" and "a/b"
      if (s.q_.get_den() == 0) throw std::invalid_argument("zero denominator");
    } else {
      s.z_ = mpz_class(text);
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad scalar literal: " + text);
  }
  s.normalize();
  return s;
}

bool Scalar::is_zero() const {
  return kind_ == RingKind::Q ? q_ == 0 : z_ == 0;
}

void Scalar::check_same_ring(const Scalar& o) const {
  if (kind_ != o.kind_ || p_ != o.p_)
    throw std::invalid_argument("mixed scalar rings: " + ring().str() + " vs " +
                                o.ring().str());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_ring(o);
  Scalar s = *this;
  if (kind_ == RingKind::Q)
    s.q_ += o.q_;
  else
    s.z_ += o.z_;
  s.normalize();
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_ring(o);
  Scalar s = *this;
  if (kind_ == RingKind::Q)
    s.q_ -= o.q_;
  else
    s.z_ -= o.z_;
  s.normalize();
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_ring(o);
  Scalar s = *this;
  if (kind_ == RingKind::Q)
    s.q_ *= o.q_;
  else
    s.z_ *= o.z_;
  s.normalize();
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (kind_ == RingKind::Q)
    s.q_ = -s.q_;
  else
    s.z_ = -s.z_;
  s.normalize();
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_ring(o);
  return kind_ == RingKind::Q ? q_ == o.q_ : z_ == o.z_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::invalid_argument("inverse of zero");
  Scalar s = *this;
  switch (kind_) {
    case RingKind::Z:
      if (z_ != 1 && z_ != -1)
        throw std::invalid_argument("non-unit integer has no inverse: " + str());
      return s;  // 1 and -1 are self-inverse
    case RingKind::Q:
      s.q_ = 1 / q_;
      s.normalize();
      return s;
    case RingKind::Zp: {
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), z_.get_mpz_t(), mpz_class(p_).get_mpz_t()) == 0)
        throw std::invalid_argument("residue not invertible mod " + std::to_string(p_));
      s.z_ = inv;
      s.normalize();
      return s;
    }
  }
  throw std::logic_error("unreachable");
}

bool Scalar::divides(const Scalar& o) const {
  check_same_ring(o);
  if (is_zero()) return o.is_zero();
  if (kind_ != RingKind::Z) return true;
  return mpz_divisible_p(o.z_.get_mpz_t(), z_.get_mpz_t()) != 0;
}

Scalar Scalar::div_exact(const Scalar& o) const {
  check_same_ring(o);
  if (kind_ == RingKind::Z) {
    if (!divides(o)) throw std::invalid_argument("inexact integer division");
    Scalar s = *this;
    mpz_divexact(s.z_.get_mpz_t(), o.z_.get_mpz_t(), z_.get_mpz_t());
    return s;
  }
  return inverse() * o;
}

std::string Scalar::str() const {
  return kind_ == RingKind::Q ? q_.get_str() : z_.get_str();
}

const mpz_class& Scalar::zval() const {
  if (kind_ == RingKind::Q) throw std::logic_error("zval() on a rational scalar");
  return z_;
}

const mpq_class& Scalar::qval() const {
  if (kind_ != RingKind::Q) throw std::logic_error("qval() on an integral scalar");
  return q_;
}

}  // namespace ainfree
