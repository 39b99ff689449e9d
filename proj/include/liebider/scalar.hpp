#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace liebider {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Ground field tag: the rationals (modulus 0) or F_p for an odd prime p.
/// Characteristic 2 is never constructible.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field(); }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return modulus_ == 0; }
  std::uint32_t modulus() const { return modulus_; }
  std::string name() const;

  friend bool operator==(Field a, Field b) { return a.modulus_ == b.modulus_; }

 private:
  friend class Scalar;
  explicit constexpr Field(std::uint32_t p) : modulus_(p) {}
  std::uint32_t modulus_ = 0;
};

inline void require_same_field(Field a, Field b) {
  if (!(a == b)) {
    throw FieldMismatch("field mismatch: " + a.name() + " vs " + b.name());
  }
}

/// An element of Q (reduced, positive denominator) or of F_p.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  explicit Scalar(Field f);
  Scalar(long v, Field f);
  Scalar(const mpq_class& q);  // NOLINT: rationals convert implicitly

  static Scalar zero(Field f) { return Scalar(f); }
  static Scalar one(Field f) { return Scalar(1, f); }
  static Scalar rational(long num, long den);

  /// Parses "p", "p/q" (rationals) or an integer (reduced mod p).
  static Scalar parse(std::string_view text, Field f);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const;
  std::uint32_t residue() const;

  /// Canonical text: "p/q" or "p" for rationals, the residue for F_p.
  std::string to_string() const;

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.to_string();
  }

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
  };

  std::variant<mpq_class, Residue> value_;
};

bool is_prime(std::uint32_t n);

}  // namespace liebider
