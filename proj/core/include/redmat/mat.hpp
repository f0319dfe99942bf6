#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "redmat/field.hpp"

namespace redmat {

struct RrefResult;

/// Dense matrix over a fixed field, row-major. Exact arithmetic only.
/// GF(p) entries are stored canonically in [0,p); rational entries in
/// lowest terms (cpp_rational invariant).
class Mat {
 public:
  Mat() : f_(default_field()), r_(0), c_(0) {}
  Mat(Field f, std::size_t rows, std::size_t cols);

  static Mat zeros(Field f, std::size_t rows, std::size_t cols) { return Mat(f, rows, cols); }
  static Mat identity(Field f, std::size_t n);
  static Mat from_rows(Field f, const std::vector<std::vector<Scalar>>& rows);
  static Mat from_ints(Field f, const std::vector<std::vector<long long>>& rows);
  /// n x n Jordan block J_n(lambda).
  static Mat jordan(Field f, std::size_t n, const Scalar& lambda);
  static Mat scalar(Field f, std::size_t n, const Scalar& lambda);

  Field field() const { return f_; }
  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool empty() const { return r_ == 0 || c_ == 0; }

  Scalar at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& v);

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat operator*(const Mat& o) const;
  Mat scaled(const Scalar& c) const;
  Mat transpose() const;

  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }
  bool is_zero() const;
  bool is_identity() const;

  /// [this | o] side by side; row counts must agree.
  Mat hstack(const Mat& o) const;
  /// [this ; o] stacked; column counts must agree.
  Mat vstack(const Mat& o) const;
  Mat block(std::size_t i0, std::size_t j0, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t i0, std::size_t j0, const Mat& m);
  Mat row(std::size_t i) const { return block(i, 0, 1, c_); }
  Mat col(std::size_t j) const { return block(0, j, r_, 1); }
  Mat cols_subset(const std::vector<std::size_t>& idx) const;

  /// Direct sum: block_diag(this, o).
  Mat direct_sum(const Mat& o) const;

  /// Reduced row echelon form with deterministic pivoting (first nonzero
  /// entry scanning left to right).
  RrefResult rref() const;

  std::size_t rank() const;
  /// Solves this * x = b exactly; nullopt when inconsistent.
  std::optional<Mat> solve(const Mat& b) const;
  /// Columns form a basis of { x : this * x = 0 }.
  Mat kernel_basis() const;
  std::optional<Mat> inverse() const;
  bool is_invertible() const { return r_ == c_ && rank() == r_; }

  /// Applies this as a linear map to column v (v given as column matrix).
  Mat apply(const Mat& v) const { return *this * v; }

  std::string str() const;

 private:
  void check_field(const Mat& o) const;
  Field f_;
  std::size_t r_, c_;
  std::vector<std::uint32_t> dp_;
  std::vector<Rational> dq_;

  friend struct MatAccess;
};

struct RrefResult {
  Mat reduced;
  Mat transform;  // invertible, transform * input == reduced
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column per pivot row
};

/// Canonical basis of the column space (columns of the result).
Mat image_basis(const Mat& a);
/// Basis of the sum of two column spans.
Mat span_sum(const Mat& a, const Mat& b);
/// Basis of the intersection of two column spans.
Mat span_intersect(const Mat& a, const Mat& b);
/// True when column vector v lies in the column span of a.
bool span_contains(const Mat& a, const Mat& v);
/// True when every column of b lies in the span of a.
bool span_contains_all(const Mat& a, const Mat& b);

/// Data of the quotient k^n / span(S): proj is (n-r) x n, lift is n x (n-r),
/// proj*lift = I, ker(proj) = span(S).
struct QuotientData {
  Mat proj;
  Mat lift;
};
QuotientData quotient_of(Field f, std::size_t n, const Mat& span);

}  // namespace redmat
