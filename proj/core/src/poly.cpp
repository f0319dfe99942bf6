#include "redmat/poly.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace redmat {

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::x(Field f) {
  Poly p(f);
  p.c_ = {Scalar::zero(f), Scalar::one(f)};
  return p;
}

Poly Poly::constant(const Scalar& c) {
  Poly p(c.field());
  if (!c.is_zero()) p.c_ = {c};
  return p;
}

Poly Poly::from_coeffs(Field f, std::vector<Scalar> coeffs) {
  Poly p(f);
  for (const auto& c : coeffs)
    if (c.field() != f) throw ArityError("poly coefficient field mismatch");
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

Poly Poly::from_ints(Field f, const std::vector<long long>& coeffs) {
  std::vector<Scalar> cs;
  cs.reserve(coeffs.size());
  for (long long v : coeffs) cs.push_back(Scalar::of_int(f, v));
  return from_coeffs(f, std::move(cs));
}

Scalar Poly::lead() const {
  if (c_.empty()) return Scalar::zero(f_);
  return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(f_);
  std::size_t n = std::max(c_.size(), o.c_.size());
  r.c_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) r.c_.push_back(coeff(i) + o.coeff(i));
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r(f_);
  std::size_t n = std::max(c_.size(), o.c_.size());
  r.c_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) r.c_.push_back(coeff(i) - o.coeff(i));
  r.trim();
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return zero(f_);
  Poly r(f_);
  r.c_.assign(c_.size() + o.c_.size() - 1, Scalar::zero(f_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  r.trim();
  return r;
}

Poly Poly::scaled(const Scalar& s) const {
  Poly r(f_);
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(c * s);
  r.trim();
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (f_ != o.f_ || c_.size() != o.c_.size()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

Poly Poly::mod(const Poly& d) const { return divmod(d).rem; }

PolyDivMod Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw ArityError("polynomial division by zero");
  Poly q(f_), r = *this;
  Scalar linv = d.lead().inv();
  int dd = d.degree();
  while (!r.is_zero() && r.degree() >= dd) {
    int shift = r.degree() - dd;
    Scalar c = r.lead() * linv;
    // q += c * x^shift; r -= c * x^shift * d
    if (q.c_.size() < std::size_t(shift + 1)) q.c_.resize(shift + 1, Scalar::zero(f_));
    q.c_[shift] += c;
    for (int i = 0; i <= dd; ++i) r.c_[shift + i] -= c * d.c_[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(lead().inv());
}

Poly Poly::derivative() const {
  Poly r(f_);
  for (std::size_t i = 1; i < c_.size(); ++i)
    r.c_.push_back(c_[i] * Scalar::of_int(f_, static_cast<long long>(i)));
  r.trim();
  return r;
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar r = Scalar::zero(f_);
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

Mat Poly::eval(const Mat& m) const {
  if (m.rows() != m.cols()) throw ArityError("poly eval on non-square matrix");
  Mat r = Mat::zeros(f_, m.rows(), m.cols());
  for (std::size_t i = c_.size(); i-- > 0;) {
    r = r * m;
    if (!c_[i].is_zero()) r = r + Mat::scalar(f_, m.rows(), c_[i]);
  }
  return r;
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly Poly::lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return zero(a.field());
  Poly g = gcd(a, b);
  return (a * b).divmod(g).quot.monic();
}

Poly Poly::pow_mod(const Poly& base, const BigInt& e, const Poly& m) {
  Poly r = one(base.field());
  Poly b = base.mod(m);
  BigInt k = e;
  while (k > 0) {
    if ((k & 1) != 0) r = (r * b).mod(m);
    b = (b * b).mod(m);
    k >>= 1;
  }
  return r;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || !c_[i].is_one()) os << c_[i].str();
    if (i >= 1) {
      if (!c_[i].is_one()) os << "*";
      os << "t";
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

namespace {

// f = g(x^p) over the prime field implies f = g(x)^p with the same
// coefficients (Frobenius fixes GF(p)).
Poly pth_root(const Poly& f) {
  Field k = f.field();
  std::uint32_t p = k.prime();
  std::vector<Scalar> cs;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) cs.push_back(f.coeff(i));
  return Poly::from_coeffs(k, cs);
}

// Squarefree decomposition: returns (g_i, m_i) with f = prod g_i^{m_i},
// each g_i squarefree, pairwise coprime. Handles char-p collapse.
void squarefree_decomp(const Poly& f, int outer_mult, std::vector<std::pair<Poly, int>>& out) {
  Field k = f.field();
  if (f.degree() <= 0) return;
  Poly d = f.derivative();
  if (d.is_zero()) {
    if (!k.is_prime())
      throw ArityError("zero derivative over the rationals for nonconstant input");
    squarefree_decomp(pth_root(f), outer_mult * static_cast<int>(k.prime()), out);
    return;
  }
  Poly c = Poly::gcd(f, d);
  Poly w = f.divmod(c).quot.monic();
  int i = 1;
  while (w.degree() > 0) {
    Poly y = Poly::gcd(w, c);
    Poly z = w.divmod(y).quot;
    if (z.degree() > 0) out.emplace_back(z.monic(), i * outer_mult);
    w = y;
    c = c.divmod(y).quot.monic();
    ++i;
  }
  if (c.degree() > 0) {
    if (!k.is_prime()) throw ArityError("squarefree decomposition failed over the rationals");
    squarefree_decomp(pth_root(c), outer_mult * static_cast<int>(k.prime()), out);
  }
}

// Distinct-degree factorization of a squarefree monic f over GF(p):
// returns (product of irreducibles of degree d, d).
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f) {
  Field k = f.field();
  std::uint32_t p = k.prime();
  std::vector<std::pair<Poly, int>> out;
  Poly rest = f;
  Poly h = Poly::x(k);  // x^(p^d) mod rest, updated incrementally
  int d = 0;
  while (rest.degree() > 0) {
    ++d;
    if (2 * d > rest.degree()) {
      out.emplace_back(rest, rest.degree());
      break;
    }
    h = Poly::pow_mod(h, BigInt(p), rest);
    Poly g = Poly::gcd(h - Poly::x(k), rest);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      rest = rest.divmod(g).quot;
      h = h.mod(rest);
    }
  }
  return out;
}

// Cantor-Zassenhaus equal-degree splitting: f = product of irreducibles of
// degree d, deterministic seeded randomness.
void equal_degree_split(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  Field k = f.field();
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  std::uint32_t p = k.prime();
  int n = f.degree();
  Poly splitter(k);
  for (int attempt = 0; attempt < 256; ++attempt) {
    // random polynomial of degree < n
    std::vector<Scalar> cs;
    for (int i = 0; i < n; ++i)
      cs.push_back(Scalar::of_int(k, static_cast<long long>(rng() % p)));
    Poly h = Poly::from_coeffs(k, cs);
    if (h.is_zero()) continue;
    Poly g = Poly::gcd(h, f);
    if (g.degree() > 0 && g.degree() < n) {
      splitter = g;
      break;
    }
    if (p == 2) {
      // trace map T(h) = h + h^2 + ... + h^(2^(d-1))
      Poly t = h.mod(f), acc = t;
      for (int i = 1; i < d; ++i) {
        t = (t * t).mod(f);
        acc = acc + t;
      }
      g = Poly::gcd(acc, f);
    } else {
      BigInt e = (boost::multiprecision::pow(BigInt(p), d) - 1) / 2;
      Poly t = Poly::pow_mod(h, e, f);
      g = Poly::gcd(t - Poly::one(k), f);
    }
    if (g.degree() > 0 && g.degree() < n) {
      splitter = g;
      break;
    }
  }
  if (splitter.is_zero())
    throw ArityError("equal-degree splitting failed (exhausted attempts)");
  equal_degree_split(splitter, d, rng, out);
  equal_degree_split(f.divmod(splitter).quot.monic(), d, rng, out);
}

// Linear factor extraction over Q by rational root search on the
// squarefree part. Denominator/numerator divisor enumeration is bounded;
// callers receive the unsplit remainder flagged non-irreducible.
std::vector<BigInt> bounded_divisors(BigInt n, std::size_t cap = 4096) {
  if (n < 0) n = -n;
  std::vector<BigInt> out;
  if (n == 0) return out;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      out.push_back(n / d);
      if (out.size() > cap) return {};
    }
    if (d > 2000000) return {};  // give up on huge coefficient factorization
  }
  return out;
}

void rational_linear_split(const Poly& f, std::vector<Poly>& linears, Poly& rest) {
  Field k = f.field();
  rest = f.monic();
  if (rest.degree() <= 1) {
    if (rest.degree() == 1) {
      linears.push_back(rest);
      rest = Poly::one(k);
    }
    return;
  }
  // Clear denominators to an integer polynomial.
  BigInt den = 1;
  for (const auto& c : rest.coeffs())
    den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(c.rational_value()));
  std::vector<BigInt> ic;
  for (const auto& c : rest.coeffs()) {
    Rational v = c.rational_value() * Rational(den);
    ic.push_back(boost::multiprecision::numerator(v));
  }
  while (!ic.empty() && ic.front() == 0) {
    // root at zero
    linears.push_back(Poly::x(k));
    rest = rest.divmod(Poly::x(k)).quot;
    ic.erase(ic.begin());
  }
  if (rest.degree() <= 0) return;
  auto nums = bounded_divisors(ic.front());
  auto dens = bounded_divisors(ic.back());
  for (const auto& nu : nums) {
    for (const auto& de : dens) {
      for (int sign = 0; sign < 2; ++sign) {
        if (rest.degree() <= 1) break;
        Rational cand(sign ? -nu : nu, de);
        Scalar r = Scalar::of_rational(k, cand);
        while (rest.degree() >= 1 && rest.eval(r).is_zero()) {
          Poly lin = Poly::from_coeffs(k, {-r, Scalar::one(k)});
          linears.push_back(lin);
          rest = rest.divmod(lin).quot;
        }
      }
    }
  }
  if (rest.degree() == 1) {
    linears.push_back(rest.monic());
    rest = Poly::one(k);
  }
}

}  // namespace

std::vector<PolyFactor> factor_poly(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) throw ArityError("cannot factor the zero polynomial");
  Field k = f.field();
  std::vector<PolyFactor> out;
  if (f.degree() == 0) return out;
  std::vector<std::pair<Poly, int>> sqf;
  squarefree_decomp(f.monic(), 1, sqf);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::map<std::string, std::size_t> seen;
  auto push = [&](const Poly& p, int mult, bool irr) {
    std::string key = p.str();
    auto it = seen.find(key);
    if (it != seen.end()) {
      out[it->second].multiplicity += mult;
    } else {
      seen[key] = out.size();
      out.push_back({p, mult, irr});
    }
  };
  for (const auto& [g, mult] : sqf) {
    if (k.is_prime()) {
      for (const auto& [prod, d] : distinct_degree(g)) {
        std::vector<Poly> irr;
        equal_degree_split(prod, d, rng, irr);
        // Deterministic output order.
        std::sort(irr.begin(), irr.end(),
                  [](const Poly& a, const Poly& b) { return a.str() < b.str(); });
        for (const auto& q : irr) push(q, mult, true);
      }
    } else {
      std::vector<Poly> linears;
      Poly rest(k);
      rational_linear_split(g, linears, rest);
      std::sort(linears.begin(), linears.end(),
                [](const Poly& a, const Poly& b) { return a.str() < b.str(); });
      for (const auto& l : linears) push(l, mult, true);
      if (rest.degree() >= 2) push(rest.monic(), mult, false);
    }
  }
  return out;
}

Poly min_poly(const Mat& m) {
  if (m.rows() != m.cols()) throw ArityError("min_poly of non-square matrix");
  Field k = m.field();
  std::size_t n = m.rows();
  if (n == 0) return Poly::one(k);
  Poly result = Poly::one(k);
  for (std::size_t s = 0; s < n; ++s) {
    if (result.degree() == static_cast<int>(n)) break;
    // Krylov sequence from e_s; find first linear dependency.
    Mat v(k, n, 1);
    v.set(s, 0, Scalar::one(k));
    Mat basis(k, n, 0);
    std::vector<Mat> iterates;
    Mat cur = v;
    while (true) {
      Mat aug = basis.hstack(cur);
      if (aug.rank() == basis.cols()) {
        // cur depends on previous iterates: solve basis * x = cur
        auto x = basis.solve(cur);
        std::vector<Scalar> cs;
        for (std::size_t i = 0; i < basis.cols(); ++i) cs.push_back(-x->at(i, 0));
        cs.push_back(Scalar::one(k));
        result = Poly::lcm(result, Poly::from_coeffs(k, cs));
        break;
      }
      basis = aug;
      iterates.push_back(cur);
      cur = m * cur;
    }
  }
  return result.monic();
}

std::vector<PolyFactor> min_poly_and_factor(const Mat& m, std::uint64_t seed) {
  return factor_poly(min_poly(m), seed);
}

}  // namespace redmat
