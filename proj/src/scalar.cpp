#include "liebider/scalar.hpp"

#include <charconv>

namespace liebider {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p == 2) throw Error("characteristic 2 is not supported");
  if (!is_prime(p)) throw Error("F_p requires an odd prime, got " + std::to_string(p));
  return Field(p);
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "F_" + std::to_string(modulus_);
}

namespace {

std::uint32_t reduce_mod(long v, std::uint32_t p) {
  long r = v % static_cast<long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Scalar::Scalar(Field f) {
  if (f.is_rational()) {
    value_ = mpq_class(0);
  } else {
    value_ = Residue{0, f.modulus()};
  }
}

Scalar::Scalar(long v, Field f) {
  if (f.is_rational()) {
    value_ = mpq_class(v);
  } else {
    value_ = Residue{reduce_mod(v, f.modulus()), f.modulus()};
  }
}

Scalar::Scalar(const mpq_class& q) : value_(q) {
  std::get<mpq_class>(value_).canonicalize();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw Error("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::parse(std::string_view text, Field f) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw Error("empty scalar literal");
  if (f.is_rational()) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw Error("malformed rational literal '" + s + "'");
    if (q.get_den() == 0) throw Error("zero denominator in '" + s + "'");
    q.canonicalize();
    return Scalar(q);
  }
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error("malformed F_p literal '" + s + "'");
  }
  return Scalar(v, f);
}

Field Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return Field(r->modulus);
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw FieldMismatch("scalar is not rational");
}

std::uint32_t Scalar::residue() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw FieldMismatch("scalar is not a residue");
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (const auto* r = std::get_if<Residue>(&value_)) {
    Scalar out = *this;
    std::get<Residue>(out.value_).value = pow_mod(r->value, r->modulus - 2, r->modulus);
    return out;
  }
  mpq_class q = 1 / std::get<mpq_class>(value_);
  return Scalar(q);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (auto* r = std::get_if<Residue>(&value_)) {
    const auto* s = std::get_if<Residue>(&o.value_);
    if (s == nullptr || s->modulus != r->modulus) require_same_field(field(), o.field());
    std::uint32_t v = r->value + s->value;
    if (v >= r->modulus) v -= r->modulus;
    r->value = v;
    return *this;
  }
  const auto* q = std::get_if<mpq_class>(&o.value_);
  if (q == nullptr) require_same_field(field(), o.field());
  std::get<mpq_class>(value_) += *q;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (auto* r = std::get_if<Residue>(&value_)) {
    const auto* s = std::get_if<Residue>(&o.value_);
    if (s == nullptr || s->modulus != r->modulus) require_same_field(field(), o.field());
    r->value = r->value >= s->value ? r->value - s->value : r->value + r->modulus - s->value;
    return *this;
  }
  const auto* q = std::get_if<mpq_class>(&o.value_);
  if (q == nullptr) require_same_field(field(), o.field());
  std::get<mpq_class>(value_) -= *q;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (auto* r = std::get_if<Residue>(&value_)) {
    const auto* s = std::get_if<Residue>(&o.value_);
    if (s == nullptr || s->modulus != r->modulus) require_same_field(field(), o.field());
    r->value = static_cast<std::uint32_t>(static_cast<std::uint64_t>(r->value) * s->value % r->modulus);
    return *this;
  }
  const auto* q = std::get_if<mpq_class>(&o.value_);
  if (q == nullptr) require_same_field(field(), o.field());
  std::get<mpq_class>(value_) *= *q;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(field(), o.field());
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (auto* r = std::get_if<Residue>(&out.value_)) {
    r->value = r->value == 0 ? 0 : r->modulus - r->value;
  } else {
    std::get<mpq_class>(out.value_) = -std::get<mpq_class>(out.value_);
  }
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  const auto* ra = std::get_if<Scalar::Residue>(&a.value_);
  const auto* rb = std::get_if<Scalar::Residue>(&b.value_);
  if (ra != nullptr && rb != nullptr) return ra->modulus == rb->modulus && ra->value == rb->value;
  if (ra == nullptr && rb == nullptr) {
    return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
  }
  return false;
}

}  // namespace liebider
