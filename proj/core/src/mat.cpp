#include "redmat/mat.hpp"

#include <sstream>

namespace redmat {

namespace {

struct FpOps {
  std::uint32_t p;
  using E = std::uint32_t;
  E zero() const { return 0; }
  E one() const { return 1 % p; }
  bool is_zero(E a) const { return a == 0; }
  E add(E a, E b) const { return fp::add(a, b, p); }
  E sub(E a, E b) const { return fp::sub(a, b, p); }
  E mul(E a, E b) const { return fp::mul(a, b, p); }
  E neg(E a) const { return fp::neg(a, p); }
  E inv(E a) const { return fp::inv(a, p); }
};

struct QOps {
  using E = Rational;
  E zero() const { return Rational(0); }
  E one() const { return Rational(1); }
  bool is_zero(const E& a) const { return a == 0; }
  E add(const E& a, const E& b) const { return a + b; }
  E sub(const E& a, const E& b) const { return a - b; }
  E mul(const E& a, const E& b) const { return a * b; }
  E neg(const E& a) const { return -a; }
  E inv(const E& a) const {
    if (a == 0) throw ArityError("division by zero over the rationals");
    return 1 / a;
  }
};

// Full Gauss-Jordan on data (rows x cols), recording row ops on an augmented
// identity. Deterministic: pivot = first row with nonzero entry in the
// leftmost unfinished column.
template <class Ops>
void rref_impl(const Ops& ops, std::vector<typename Ops::E>& a, std::size_t rows,
               std::size_t cols, std::vector<typename Ops::E>& t,
               std::vector<std::size_t>& pivots) {
  using E = typename Ops::E;
  std::size_t pr = 0;
  for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
    std::size_t sel = pr;
    while (sel < rows && ops.is_zero(a[sel * cols + pc])) ++sel;
    if (sel == rows) continue;
    if (sel != pr) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[sel * cols + j], a[pr * cols + j]);
      for (std::size_t j = 0; j < rows; ++j) std::swap(t[sel * rows + j], t[pr * rows + j]);
    }
    E piv = ops.inv(a[pr * cols + pc]);
    for (std::size_t j = 0; j < cols; ++j) a[pr * cols + j] = ops.mul(a[pr * cols + j], piv);
    for (std::size_t j = 0; j < rows; ++j) t[pr * rows + j] = ops.mul(t[pr * rows + j], piv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pr) continue;
      E c = a[i * cols + pc];
      if (ops.is_zero(c)) continue;
      for (std::size_t j = 0; j < cols; ++j)
        a[i * cols + j] = ops.sub(a[i * cols + j], ops.mul(c, a[pr * cols + j]));
      for (std::size_t j = 0; j < rows; ++j)
        t[i * rows + j] = ops.sub(t[i * rows + j], ops.mul(c, t[pr * rows + j]));
    }
    pivots.push_back(pc);
    ++pr;
  }
}

template <class Ops>
std::vector<typename Ops::E> mul_impl(const Ops& ops, const std::vector<typename Ops::E>& a,
                                      const std::vector<typename Ops::E>& b, std::size_t r,
                                      std::size_t k, std::size_t c) {
  using E = typename Ops::E;
  std::vector<E> out(r * c, ops.zero());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t m = 0; m < k; ++m) {
      const E& av = a[i * k + m];
      if (ops.is_zero(av)) continue;
      for (std::size_t j = 0; j < c; ++j) {
        const E& bv = b[m * c + j];
        if (!ops.is_zero(bv)) out[i * c + j] = ops.add(out[i * c + j], ops.mul(av, bv));
      }
    }
  }
  return out;
}

}  // namespace

Mat::Mat(Field f, std::size_t rows, std::size_t cols) : f_(f), r_(rows), c_(cols) {
  if (f_.is_prime())
    dp_.assign(r_ * c_, 0);
  else
    dq_.assign(r_ * c_, Rational(0));
}

Mat Mat::identity(Field f, std::size_t n) {
  Mat m(f, n, n);
  Scalar one = Scalar::one(f);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, one);
  return m;
}

Mat Mat::from_rows(Field f, const std::vector<std::vector<Scalar>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  Mat m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw ArityError("ragged rows in matrix literal");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Mat Mat::from_ints(Field f, const std::vector<std::vector<long long>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  Mat m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw ArityError("ragged rows in matrix literal");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Scalar::of_int(f, rows[i][j]));
  }
  return m;
}

Mat Mat::jordan(Field f, std::size_t n, const Scalar& lambda) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, i, lambda);
    if (i + 1 < n) m.set(i, i + 1, Scalar::one(f));
  }
  return m;
}

Mat Mat::scalar(Field f, std::size_t n, const Scalar& lambda) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, lambda);
  return m;
}

Scalar Mat::at(std::size_t i, std::size_t j) const {
  if (f_.is_prime()) return Scalar::of_int(f_, dp_[i * c_ + j]);
  return Scalar::of_rational(f_, dq_[i * c_ + j]);
}

void Mat::set(std::size_t i, std::size_t j, const Scalar& v) {
  if (v.field() != f_) throw ArityError("entry field mismatch");
  if (f_.is_prime())
    dp_[i * c_ + j] = v.fp_value();
  else
    dq_[i * c_ + j] = v.rational_value();
}

void Mat::check_field(const Mat& o) const {
  if (f_ != o.f_) throw ArityError("matrix field mismatch: " + f_.str() + " vs " + o.f_.str());
}

Mat Mat::operator+(const Mat& o) const {
  check_field(o);
  if (r_ != o.r_ || c_ != o.c_) throw ArityError("matrix shape mismatch in +");
  Mat m(f_, r_, c_);
  if (f_.is_prime()) {
    FpOps ops{f_.prime()};
    for (std::size_t i = 0; i < dp_.size(); ++i) m.dp_[i] = ops.add(dp_[i], o.dp_[i]);
  } else {
    for (std::size_t i = 0; i < dq_.size(); ++i) m.dq_[i] = dq_[i] + o.dq_[i];
  }
  return m;
}

Mat Mat::operator-(const Mat& o) const {
  check_field(o);
  if (r_ != o.r_ || c_ != o.c_) throw ArityError("matrix shape mismatch in -");
  Mat m(f_, r_, c_);
  if (f_.is_prime()) {
    FpOps ops{f_.prime()};
    for (std::size_t i = 0; i < dp_.size(); ++i) m.dp_[i] = ops.sub(dp_[i], o.dp_[i]);
  } else {
    for (std::size_t i = 0; i < dq_.size(); ++i) m.dq_[i] = dq_[i] - o.dq_[i];
  }
  return m;
}

Mat Mat::operator-() const {
  Mat m(f_, r_, c_);
  if (f_.is_prime()) {
    for (std::size_t i = 0; i < dp_.size(); ++i) m.dp_[i] = fp::neg(dp_[i], f_.prime());
  } else {
    for (std::size_t i = 0; i < dq_.size(); ++i) m.dq_[i] = -dq_[i];
  }
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  check_field(o);
  if (c_ != o.r_) throw ArityError("matrix shape mismatch in *");
  Mat m(f_, r_, o.c_);
  if (f_.is_prime())
    m.dp_ = mul_impl(FpOps{f_.prime()}, dp_, o.dp_, r_, c_, o.c_);
  else
    m.dq_ = mul_impl(QOps{}, dq_, o.dq_, r_, c_, o.c_);
  return m;
}

Mat Mat::scaled(const Scalar& c) const {
  if (c.field() != f_) throw ArityError("scalar field mismatch in scaled()");
  Mat m(f_, r_, c_);
  if (f_.is_prime()) {
    for (std::size_t i = 0; i < dp_.size(); ++i) m.dp_[i] = fp::mul(dp_[i], c.fp_value(), f_.prime());
  } else {
    for (std::size_t i = 0; i < dq_.size(); ++i) m.dq_[i] = dq_[i] * c.rational_value();
  }
  return m;
}

Mat Mat::transpose() const {
  Mat m(f_, c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) {
      if (f_.is_prime())
        m.dp_[j * r_ + i] = dp_[i * c_ + j];
      else
        m.dq_[j * r_ + i] = dq_[i * c_ + j];
    }
  return m;
}

bool Mat::operator==(const Mat& o) const {
  if (f_ != o.f_ || r_ != o.r_ || c_ != o.c_) return false;
  return f_.is_prime() ? dp_ == o.dp_ : dq_ == o.dq_;
}

bool Mat::is_zero() const {
  if (f_.is_prime()) {
    for (auto v : dp_)
      if (v != 0) return false;
  } else {
    for (const auto& v : dq_)
      if (v != 0) return false;
  }
  return true;
}

bool Mat::is_identity() const {
  if (r_ != c_) return false;
  return *this == identity(f_, r_);
}

Mat Mat::hstack(const Mat& o) const {
  check_field(o);
  if (r_ != o.r_) throw ArityError("row mismatch in hstack");
  Mat m(f_, r_, c_ + o.c_);
  m.set_block(0, 0, *this);
  m.set_block(0, c_, o);
  return m;
}

Mat Mat::vstack(const Mat& o) const {
  check_field(o);
  if (c_ != o.c_) throw ArityError("column mismatch in vstack");
  Mat m(f_, r_ + o.r_, c_);
  m.set_block(0, 0, *this);
  m.set_block(r_, 0, o);
  return m;
}

Mat Mat::block(std::size_t i0, std::size_t j0, std::size_t rows, std::size_t cols) const {
  if (i0 + rows > r_ || j0 + cols > c_) throw ArityError("block out of range");
  Mat m(f_, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      if (f_.is_prime())
        m.dp_[i * cols + j] = dp_[(i0 + i) * c_ + (j0 + j)];
      else
        m.dq_[i * cols + j] = dq_[(i0 + i) * c_ + (j0 + j)];
    }
  return m;
}

void Mat::set_block(std::size_t i0, std::size_t j0, const Mat& m) {
  check_field(m);
  if (i0 + m.r_ > r_ || j0 + m.c_ > c_) throw ArityError("set_block out of range");
  for (std::size_t i = 0; i < m.r_; ++i)
    for (std::size_t j = 0; j < m.c_; ++j) {
      if (f_.is_prime())
        dp_[(i0 + i) * c_ + (j0 + j)] = m.dp_[i * m.c_ + j];
      else
        dq_[(i0 + i) * c_ + (j0 + j)] = m.dq_[i * m.c_ + j];
    }
}

Mat Mat::cols_subset(const std::vector<std::size_t>& idx) const {
  Mat m(f_, r_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j)
    for (std::size_t i = 0; i < r_; ++i) {
      if (f_.is_prime())
        m.dp_[i * idx.size() + j] = dp_[i * c_ + idx[j]];
      else
        m.dq_[i * idx.size() + j] = dq_[i * c_ + idx[j]];
    }
  return m;
}

Mat Mat::direct_sum(const Mat& o) const {
  check_field(o);
  Mat m(f_, r_ + o.r_, c_ + o.c_);
  m.set_block(0, 0, *this);
  m.set_block(r_, c_, o);
  return m;
}

RrefResult Mat::rref() const {
  RrefResult res;
  res.reduced = *this;
  res.transform = identity(f_, r_);
  if (f_.is_prime()) {
    rref_impl(FpOps{f_.prime()}, res.reduced.dp_, r_, c_, res.transform.dp_, res.pivots);
  } else {
    rref_impl(QOps{}, res.reduced.dq_, r_, c_, res.transform.dq_, res.pivots);
  }
  res.rank = res.pivots.size();
  return res;
}

std::size_t Mat::rank() const { return rref().rank; }

std::optional<Mat> Mat::solve(const Mat& b) const {
  check_field(b);
  if (r_ != b.rows()) throw ArityError("solve: row mismatch");
  auto rr = hstack(b).rref();
  // Inconsistent iff some pivot lies in the b-part.
  for (auto p : rr.pivots)
    if (p >= c_) return std::nullopt;
  Mat x(f_, c_, b.cols());
  for (std::size_t k = 0; k < rr.pivots.size(); ++k) {
    std::size_t pc = rr.pivots[k];
    for (std::size_t j = 0; j < b.cols(); ++j) x.set(pc, j, rr.reduced.at(k, c_ + j));
  }
  return x;
}

Mat Mat::kernel_basis() const {
  auto rr = rref();
  std::vector<bool> is_pivot(c_, false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < c_; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Mat k(f_, c_, free_cols.size());
  Scalar one = Scalar::one(f_);
  for (std::size_t idx = 0; idx < free_cols.size(); ++idx) {
    std::size_t fc = free_cols[idx];
    k.set(fc, idx, one);
    for (std::size_t pi = 0; pi < rr.pivots.size(); ++pi)
      k.set(rr.pivots[pi], idx, -rr.reduced.at(pi, fc));
  }
  return k;
}

std::optional<Mat> Mat::inverse() const {
  if (r_ != c_) throw ArityError("inverse of non-square matrix");
  auto rr = rref();
  if (rr.rank != r_) return std::nullopt;
  return rr.transform;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < r_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < c_; ++j) os << (j ? " " : "") << at(i, j).str();
  }
  os << "]";
  return os.str();
}

Mat image_basis(const Mat& a) {
  // Canonical column-space basis via rref of a^T.
  auto rr = a.transpose().rref();
  Mat rows = rr.reduced.block(0, 0, rr.rank, a.rows());
  return rows.transpose();
}

Mat span_sum(const Mat& a, const Mat& b) { return image_basis(a.hstack(b)); }

Mat span_intersect(const Mat& a, const Mat& b) {
  if (a.cols() == 0 || b.cols() == 0) return Mat(a.field(), a.rows(), 0);
  Mat stacked = a.hstack(b);
  Mat ker = stacked.kernel_basis();
  // x = a * (first block of ker coordinates).
  Mat coef = ker.block(0, 0, a.cols(), ker.cols());
  return image_basis(a * coef);
}

bool span_contains(const Mat& a, const Mat& v) { return a.solve(v).has_value(); }

bool span_contains_all(const Mat& a, const Mat& b) { return a.solve(b).has_value(); }

QuotientData quotient_of(Field f, std::size_t n, const Mat& span) {
  if (span.rows() != n) throw ArityError("quotient_of: ambient dimension mismatch");
  Mat basis = image_basis(span);
  std::size_t r = basis.cols();
  // Complete basis with standard vectors on non-pivot coordinates.
  auto rr = basis.transpose().rref();
  std::vector<bool> piv(n, false);
  for (auto p : rr.pivots) piv[p] = true;
  Mat full = basis;
  Scalar one = Scalar::one(f);
  for (std::size_t i = 0; i < n; ++i) {
    if (piv[i]) continue;
    Mat e(f, n, 1);
    e.set(i, 0, one);
    full = full.hstack(e);
  }
  auto inv = full.inverse();
  if (!inv) throw ArityError("quotient_of: span completion failed");
  QuotientData q;
  q.proj = inv->block(r, 0, n - r, n);
  q.lift = full.block(0, r, n, n - r);
  return q;
}

}  // namespace redmat
