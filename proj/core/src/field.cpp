#include "redmat/field.hpp"

#include <cstdlib>

namespace redmat {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Field Field::gf(std::uint32_t p) {
  if (p < 2 || p >= (1u << 31) || !is_prime_u32(p))
    throw ArityError("GF(p) requires a prime p with 2 <= p < 2^31, got " + std::to_string(p));
  return Field(Kind::Prime, p);
}

Field Field::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("gf:", 0) == 0 || text.rfind("GF:", 0) == 0) {
    char* end = nullptr;
    unsigned long v = std::strtoul(text.c_str() + 3, &end, 10);
    if (end == nullptr || *end != '\0')
      throw ParseError("bad field spec '" + text + "'");
    return gf(static_cast<std::uint32_t>(v));
  }
  throw ParseError("bad field spec '" + text + "' (expected 'q' or 'gf:P')");
}

std::string Field::str() const {
  return is_rationals() ? "q" : "gf:" + std::to_string(p_);
}

namespace fp {

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p, b = a % p;
  while (e) {
    if (e & 1) r = (r * b) % p;
    b = (b * b) % p;
    e >>= 1;
  }
  return std::uint32_t(r);
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw ArityError("division by zero in GF(" + std::to_string(p) + ")");
  return pow(a % p, p - 2, p);
}

}  // namespace fp

Scalar Scalar::of_int(Field f, long long v) {
  Scalar s(f);
  if (f.is_prime()) {
    long long m = v % static_cast<long long>(f.prime());
    if (m < 0) m += f.prime();
    s.fp_ = static_cast<std::uint32_t>(m);
  } else {
    s.q_ = Rational(v);
  }
  return s;
}

Scalar Scalar::of_rational(Field f, const Rational& q) {
  Scalar s(f);
  if (f.is_rationals()) {
    s.q_ = q;
  } else {
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    BigInt p(f.prime());
    BigInt nm = num % p;
    if (nm < 0) nm += p;
    BigInt dm = den % p;
    if (dm < 0) dm += p;
    std::uint32_t n32 = nm.convert_to<std::uint32_t>();
    std::uint32_t d32 = dm.convert_to<std::uint32_t>();
    s.fp_ = fp::mul(n32, fp::inv(d32, f.prime()), f.prime());
  }
  return s;
}

Scalar Scalar::parse(Field f, const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return of_rational(f, Rational(BigInt(text)));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return of_rational(f, Rational(num, den));
  } catch (const std::exception& e) {
    throw ParseError("bad scalar '" + text + "': " + e.what());
  }
}

bool Scalar::is_zero() const { return f_.is_prime() ? fp_ == 0 : q_ == 0; }
bool Scalar::is_one() const { return f_.is_prime() ? fp_ == 1 % f_.prime() : q_ == 1; }

void Scalar::check_same(const Scalar& o) const {
  if (f_ != o.f_) throw ArityError("scalar field mismatch: " + f_.str() + " vs " + o.f_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar r(f_);
  if (f_.is_prime())
    r.fp_ = fp::add(fp_, o.fp_, f_.prime());
  else
    r.q_ = q_ + o.q_;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar r(f_);
  if (f_.is_prime())
    r.fp_ = fp::sub(fp_, o.fp_, f_.prime());
  else
    r.q_ = q_ - o.q_;
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar r(f_);
  if (f_.is_prime())
    r.fp_ = fp::mul(fp_, o.fp_, f_.prime());
  else
    r.q_ = q_ * o.q_;
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::operator-() const {
  Scalar r(f_);
  if (f_.is_prime())
    r.fp_ = fp::neg(fp_, f_.prime());
  else
    r.q_ = -q_;
  return r;
}

Scalar Scalar::inv() const {
  Scalar r(f_);
  if (f_.is_prime()) {
    r.fp_ = fp::inv(fp_, f_.prime());
  } else {
    if (q_ == 0) throw ArityError("division by zero over the rationals");
    r.q_ = 1 / q_;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same(o);
  return f_.is_prime() ? fp_ == o.fp_ : q_ == o.q_;
}

std::string Scalar::str() const {
  if (f_.is_prime()) return std::to_string(fp_);
  return q_.str();
}

}  // namespace redmat
