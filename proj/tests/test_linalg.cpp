#include "doctest.h"

#include "redmat/mat.hpp"
#include "redmat/poly.hpp"
#include "redmat/rng.hpp"

using namespace redmat;

TEST_CASE("field axioms and exactness") {
  for (Field f : {Field::gf(32003), Field::rationals(), Field::gf(2)}) {
    CHECK(Scalar::one(f) != Scalar::zero(f));
    Rng rng(7);
    for (int i = 0; i < 10000; ++i) {
      Scalar a = rng.scalar(f), b = rng.scalar(f);
      CHECK((a + b) - b == a);
    }
  }
}

TEST_CASE("gf(p) rejects composite and huge moduli") {
  CHECK_THROWS_AS(Field::gf(4), ArityError);
  CHECK_THROWS_AS(Field::gf(1), ArityError);
  CHECK_NOTHROW(Field::gf(2147483647));  // 2^31 - 1 is prime
}

TEST_CASE("rref identity and zero") {
  Field f = default_field();
  auto rr = Mat::identity(f, 2).rref();
  CHECK(rr.reduced == Mat::identity(f, 2));
  CHECK(rr.transform == Mat::identity(f, 2));
  CHECK(rr.rank == 2);

  auto rz = Mat::zeros(f, 3, 4).rref();
  CHECK(rz.reduced.is_zero());
  CHECK(rz.transform == Mat::identity(f, 3));
  CHECK(rz.rank == 0);
}

TEST_CASE("rref rank-1 over Q (hand elimination oracle)") {
  Field f = Field::rationals();
  Mat m = Mat::from_ints(f, {{1, 2}, {2, 4}});
  // Hand elimination: r2 <- r2 - 2 r1 leaves [[1,2],[0,0]].
  auto rr = m.rref();
  CHECK(rr.rank == 1);
  CHECK(rr.reduced == Mat::from_ints(f, {{1, 2}, {0, 0}}));
}

TEST_CASE("rref transform is invertible and exact on random input") {
  Rng rng(42);
  for (Field f : {Field::gf(7), Field::rationals()}) {
    for (int trial = 0; trial < 20; ++trial) {
      Mat m = rng.mat(f, 4 + rng.below(3), 4 + rng.below(3));
      auto rr = m.rref();
      CHECK(rr.transform * m == rr.reduced);
      auto inv = rr.transform.inverse();
      REQUIRE(inv.has_value());
      CHECK((*inv * rr.transform).is_identity());
      CHECK(m.rank() + m.kernel_basis().cols() == m.cols());
    }
  }
}

TEST_CASE("solve basics") {
  Field f = default_field();
  Rng rng(5);
  Mat b = rng.mat(f, 4, 2);
  auto x = Mat::identity(f, 4).solve(b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  Mat zero = Mat::zeros(f, 3, 3);
  Mat nz = Mat::from_ints(f, {{1}, {0}, {0}});
  CHECK_FALSE(zero.solve(nz).has_value());
}

TEST_CASE("solve multiply-back over GF(7)") {
  Field f = Field::gf(7);
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    Mat a = rng.invertible(f, 5);
    Mat b = rng.mat(f, 5, 1);
    auto x = a.solve(b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);
  }
}

TEST_CASE("solve consistency certificate") {
  // solve absent => rank([a|b]) > rank(a)
  Rng rng(99);
  Field f = Field::gf(5);
  for (int trial = 0; trial < 30; ++trial) {
    Mat a = rng.mat(f, 4, 3);
    Mat b = rng.mat(f, 4, 1);
    auto x = a.solve(b);
    if (x) {
      CHECK(a * *x == b);
    } else {
      CHECK(a.hstack(b).rank() > a.rank());
    }
  }
}

TEST_CASE("kernel basics") {
  Field f = default_field();
  CHECK(Mat::identity(f, 4).kernel_basis().cols() == 0);
  CHECK(Mat::zeros(f, 3, 3).kernel_basis().cols() == 3);

  Mat m = Mat::from_ints(f, {{1, 1, 0}, {0, 0, 1}});
  Mat k = m.kernel_basis();
  REQUIRE(k.cols() == 1);
  CHECK((m * k).is_zero());
  // spanned by (1,-1,0) up to scale
  Mat v = Mat::from_ints(f, {{1}, {-1}, {0}});
  CHECK(span_contains(k, v));
}

TEST_CASE("min poly of identity and nilpotent Jordan block") {
  Field f = default_field();
  auto fid = min_poly_and_factor(Mat::identity(f, 4));
  REQUIRE(fid.size() == 1);
  CHECK(fid[0].factor == Poly::from_ints(f, {-1, 1}));
  CHECK(fid[0].multiplicity == 1);

  Mat j3 = Mat::jordan(f, 3, Scalar::zero(f));
  CHECK((j3 * j3 * j3).is_zero());
  auto fj = min_poly_and_factor(j3);
  REQUIRE(fj.size() == 1);
  CHECK(fj[0].factor == Poly::from_ints(f, {0, 1}));
  CHECK(fj[0].multiplicity == 3);
}

TEST_CASE("companion of t^2+1 over GF(3) stays irreducible") {
  Field f = Field::gf(3);
  // Exhaustive root check: t^2+1 has no root mod 3.
  Poly q = Poly::from_ints(f, {1, 0, 1});
  for (long long r = 0; r < 3; ++r) CHECK_FALSE(q.eval(Scalar::of_int(f, r)).is_zero());
  Mat companion = Mat::from_ints(f, {{0, -1}, {1, 0}});
  auto fac = min_poly_and_factor(companion);
  REQUIRE(fac.size() == 1);
  CHECK(fac[0].factor == q.monic());
  CHECK(fac[0].multiplicity == 1);
  CHECK(fac[0].irreducible);
}

TEST_CASE("factorization reassembles over GF(p)") {
  Rng rng(123);
  for (std::uint32_t p : {2u, 3u, 32003u}) {
    Field f = Field::gf(p);
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<Scalar> cs;
      std::size_t deg = 1 + rng.below(7);
      for (std::size_t i = 0; i <= deg; ++i) cs.push_back(rng.scalar(f));
      cs.back() = Scalar::one(f);
      Poly poly = Poly::from_coeffs(f, cs);
      auto facs = factor_poly(poly, 77);
      Poly prod = Poly::one(f);
      for (const auto& pf : facs) {
        CHECK(pf.irreducible);
        for (int m = 0; m < pf.multiplicity; ++m) prod = prod * pf.factor;
      }
      CHECK(prod == poly.monic());
    }
  }
}

TEST_CASE("rational factorization: squarefree plus linear extraction") {
  Field f = Field::rationals();
  // (t-2)^2 (t+1/3) (t^2+1), the quadratic stays as a non-irreducible-flagged leftover
  Poly t = Poly::x(f);
  Poly p1 = Poly::from_ints(f, {-2, 1});
  Poly p2 = Poly::from_coeffs(f, {Scalar::parse(f, "1/3"), Scalar::one(f)});
  Poly p3 = Poly::from_ints(f, {1, 0, 1});
  Poly poly = p1 * p1 * p2 * p3;
  auto facs = factor_poly(poly);
  Poly prod = Poly::one(f);
  bool saw_leftover = false;
  for (const auto& pf : facs) {
    for (int m = 0; m < pf.multiplicity; ++m) prod = prod * pf.factor;
    if (!pf.irreducible) {
      saw_leftover = true;
      CHECK(pf.factor == p3.monic());
    }
    if (pf.factor.degree() == 1) CHECK(pf.irreducible);
  }
  CHECK(prod == poly.monic());
  CHECK(saw_leftover);
}

TEST_CASE("min poly divides and annihilates") {
  Rng rng(2024);
  for (Field f : {Field::gf(13), Field::rationals()}) {
    for (int trial = 0; trial < 8; ++trial) {
      std::size_t n = 2 + rng.below(4);
      Mat m = rng.mat(f, n, n);
      Poly mp = min_poly(m);
      CHECK(mp.eval(m).is_zero());
      CHECK(mp.degree() <= static_cast<int>(n));
      CHECK(min_poly_and_factor(m, 5).size() >= 1);
    }
  }
}

TEST_CASE("span toolkit") {
  Field f = Field::gf(101);
  Mat a = Mat::from_ints(f, {{1, 0}, {0, 1}, {0, 0}});
  Mat b = Mat::from_ints(f, {{0}, {1}, {1}});
  CHECK(span_sum(a, b).cols() == 3);
  CHECK(span_intersect(a, b).cols() == 0);
  Mat c = Mat::from_ints(f, {{1}, {1}, {0}});
  CHECK(span_intersect(a, c).cols() == 1);
  CHECK(span_contains(a, Mat::from_ints(f, {{3}, {4}, {0}})));
  CHECK_FALSE(span_contains(a, Mat::from_ints(f, {{0}, {0}, {1}})));

  auto q = quotient_of(f, 3, a);
  CHECK(q.proj.rows() == 1);
  CHECK((q.proj * a).is_zero());
  CHECK((q.proj * q.lift).is_identity());
}

TEST_CASE("non-square min poly raises") {
  CHECK_THROWS_AS(min_poly(Mat::zeros(default_field(), 2, 3)), ArityError);
}
