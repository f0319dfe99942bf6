#pragma once

#include <random>

#include "redmat/mat.hpp"

namespace redmat {

/// Seeded random source for all randomized searches. Instance-local, so
/// concurrent users with distinct instances do not interact.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  std::uint64_t next() { return g_(); }
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(g_() % n); }

  Scalar scalar(Field f) {
    if (f.is_prime()) return Scalar::of_int(f, static_cast<long long>(g_() % f.prime()));
    // Small numerators/denominators keep rational arithmetic tame.
    long long num = static_cast<long long>(g_() % 9) - 4;
    long long den = static_cast<long long>(g_() % 3) + 1;
    return Scalar::of_rational(f, Rational(num, den));
  }

  Scalar nonzero_scalar(Field f) {
    for (;;) {
      Scalar s = scalar(f);
      if (!s.is_zero()) return s;
    }
  }

  Mat mat(Field f, std::size_t r, std::size_t c) {
    Mat m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, scalar(f));
    return m;
  }

  Mat invertible(Field f, std::size_t n) {
    for (;;) {
      Mat m = mat(f, n, n);
      if (n == 0 || m.rank() == n) return m;
    }
  }

  Rng fork() { return Rng(g_() ^ 0x6a09e667f3bcc909ull); }

 private:
  std::mt19937_64 g_;
};

}  // namespace redmat
