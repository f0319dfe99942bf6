#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "redmat/errors.hpp"

namespace redmat {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Base field descriptor: the rationals, or a prime field GF(p) with
/// 2 <= p < 2^31. Small value type, compared by value.
class Field {
 public:
  enum class Kind { Rationals, Prime };

  static Field rationals() { return Field(Kind::Rationals, 0); }
  static Field gf(std::uint32_t p);

  /// Parses "q" | "Q" | "gf:P" | "GF:P".
  static Field parse(const std::string& text);

  Kind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == Kind::Rationals; }
  bool is_prime() const { return kind_ == Kind::Prime; }
  std::uint32_t prime() const { return p_; }
  /// 0 for the rationals, p for GF(p).
  std::uint32_t characteristic() const { return p_; }

  std::string str() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

/// Default working field for classification runs.
inline Field default_field() { return Field::gf(32003); }

/// An element of a fixed base field. Arithmetic is exact; mixing fields
/// throws ArityError.
class Scalar {
 public:
  explicit Scalar(Field f) : f_(f), fp_(0) {}

  static Scalar zero(Field f) { return Scalar(f); }
  static Scalar one(Field f) { return of_int(f, 1); }
  static Scalar of_int(Field f, long long v);
  static Scalar of_rational(Field f, const Rational& q);
  /// Parses "-3", "5/7", ... into the given field.
  static Scalar parse(Field f, const std::string& text);

  Field field() const { return f_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inv() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical representative: value in [0,p) for GF(p).
  std::uint32_t fp_value() const { return fp_; }
  const Rational& rational_value() const { return q_; }

  std::string str() const;

 private:
  void check_same(const Scalar& o) const;
  Field f_;
  std::uint32_t fp_;
  Rational q_;
};

namespace fp {
inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t(a) + b;
  return std::uint32_t(s >= p ? s - p : s);
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : std::uint32_t(std::uint64_t(a) + p - b);
}
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return std::uint32_t((std::uint64_t(a) * b) % p);
}
inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }
std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);
std::uint32_t inv(std::uint32_t a, std::uint32_t p);
}  // namespace fp

}  // namespace redmat
