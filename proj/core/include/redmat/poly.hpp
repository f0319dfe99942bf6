#pragma once

#include <cstdint>
#include <vector>

#include "redmat/mat.hpp"

namespace redmat {

struct PolyDivMod;

/// Univariate polynomial over a fixed field, dense coefficients, index =
/// exponent, no trailing zero coefficients (zero polynomial = empty).
class Poly {
 public:
  explicit Poly(Field f) : f_(f) {}
  static Poly zero(Field f) { return Poly(f); }
  static Poly one(Field f) { return constant(Scalar::one(f)); }
  static Poly x(Field f);
  static Poly constant(const Scalar& c);
  static Poly from_coeffs(Field f, std::vector<Scalar> coeffs);
  static Poly from_ints(Field f, const std::vector<long long>& coeffs);

  Field field() const { return f_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Scalar coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : Scalar::zero(f_);
  }
  Scalar lead() const;
  const std::vector<Scalar>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Scalar& s) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  PolyDivMod divmod(const Poly& d) const;
  Poly mod(const Poly& d) const;
  Poly monic() const;
  Poly derivative() const;
  Scalar eval(const Scalar& x) const;
  Mat eval(const Mat& m) const;

  /// Monic gcd.
  static Poly gcd(Poly a, Poly b);
  static Poly lcm(const Poly& a, const Poly& b);
  /// base^e mod m with a big exponent.
  static Poly pow_mod(const Poly& base, const BigInt& e, const Poly& m);

  std::string str() const;

 private:
  void trim();
  Field f_;
  std::vector<Scalar> c_;
};

struct PolyDivMod {
  Poly quot;
  Poly rem;
};

struct PolyFactor {
  Poly factor;       // monic
  int multiplicity;  // >= 1
  bool irreducible;  // false only for unsplit rational leftovers
};

/// Full factorization into monic irreducibles over GF(p) (squarefree +
/// distinct-degree + Cantor-Zassenhaus equal-degree split, deterministic
/// seed). Over the rationals: squarefree decomposition plus extraction of
/// linear factors; a non-linear leftover is returned with
/// irreducible=false.
std::vector<PolyFactor> factor_poly(const Poly& f, std::uint64_t seed = 1);

/// Minimal polynomial of a square matrix (monic), via per-vector Krylov
/// annihilators and lcm.
Poly min_poly(const Mat& m);

std::vector<PolyFactor> min_poly_and_factor(const Mat& m, std::uint64_t seed = 1);

}  // namespace redmat
