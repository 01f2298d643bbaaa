#include "hfpq/gf2poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "hfpq/error.hpp"

namespace hfpq {

namespace {

void require_same_modulus(const Gf2Poly& p, const Gf2Poly& q, const char* op) {
  if (p.modulus_degree() != q.modulus_degree())
    throw SizeMismatch(std::string(op) + ": modulus x^" + std::to_string(p.modulus_degree()) + "-1 vs x^" +
                       std::to_string(q.modulus_degree()) + "-1");
}

std::size_t reduce_exponent(long long k, std::size_t m) {
  const auto mm = static_cast<long long>(m);
  const long long r = k % mm;
  return static_cast<std::size_t>(r < 0 ? r + mm : r);
}

std::string term(std::size_t i) {
  if (i == 0) return "1";
  if (i == 1) return "x";
  return "x^" + std::to_string(i);
}

}  // namespace

Gf2Poly Gf2Poly::monomial(std::size_t m, long long k) {
  Gf2Poly p(m);
  p.set_coeff(reduce_exponent(k, m), true);
  return p;
}

Gf2Poly Gf2Poly::from_exponents(std::size_t m, const std::vector<long long>& exponents) {
  Gf2Poly p(m);
  for (long long k : exponents) {
    const std::size_t i = reduce_exponent(k, m);
    p.set_coeff(i, !p.coeff(i));
  }
  return p;
}

Gf2Poly Gf2Poly::shifted(long long k) const {
  const std::size_t m = modulus_degree();
  Gf2Poly out(m);
  if (m == 0) return out;
  const std::size_t s = reduce_exponent(k, m);
  for (std::size_t i = 0; i < m; ++i)
    if (coeff(i)) out.set_coeff((i + s) % m, true);
  return out;
}

std::string Gf2Poly::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < modulus_degree(); ++i) {
    if (!coeff(i)) continue;
    if (!s.empty()) s += "+";
    s += term(i);
  }
  return s.empty() ? "0" : s;
}

Gf2Poly add(const Gf2Poly& p, const Gf2Poly& q) {
  require_same_modulus(p, q, "add");
  return Gf2Poly(p.coeffs() ^ q.coeffs());
}

Gf2Poly mul_mod(const Gf2Poly& p, const Gf2Poly& q) {
  require_same_modulus(p, q, "mul_mod");
  Gf2Poly acc(p.modulus_degree());
  for (std::size_t i = 0; i < p.modulus_degree(); ++i)
    if (p.coeff(i)) acc = add(acc, q.shifted(static_cast<long long>(i)));
  return acc;
}

Gf2Poly div_exact_by_x_plus_1(const Gf2Poly& p) {
  if (p.weight() % 2 != 0) throw NotDivisible("odd-weight residue is not divisible by x+1");
  // (1+x)q = p  ⇔  p_i = q_i + q_{i−1}; fix q_0 = 0 and run the recurrence.
  const std::size_t m = p.modulus_degree();
  Gf2Poly q(m);
  bool prev = false;
  for (std::size_t i = 1; i < m; ++i) {
    prev = prev ^ p.coeff(i);
    q.set_coeff(i, prev);
  }
  return q;
}

Gf2Poly reverse_coeffs(const Gf2Poly& p) {
  const std::size_t m = p.modulus_degree();
  Gf2Poly out(m);
  for (std::size_t i = 0; i < m; ++i)
    if (p.coeff(i)) out.set_coeff(m - 1 - i, true);
  return out;
}

Gf2Poly phi1(const Gf2Poly& p, int n) {
  if (p.modulus_degree() != static_cast<std::size_t>(2 * n))
    throw SizeMismatch("phi1 expects modulus degree 2n = " + std::to_string(2 * n));
  return reverse_coeffs(p);
}

Gf2Poly phi2(const Gf2Poly& p, int n) {
  if (p.modulus_degree() != static_cast<std::size_t>(4 * n))
    throw SizeMismatch("phi2 expects modulus degree 4n = " + std::to_string(4 * n));
  return reverse_coeffs(p);
}

Gf2Poly inflate(const Gf2Poly& p) {
  Gf2Poly out(2 * p.modulus_degree());
  for (std::size_t i = 0; i < p.modulus_degree(); ++i)
    if (p.coeff(i)) out.set_coeff(2 * i, true);
  return out;
}

// ---------------------------------------------------------------------------
// Gf2Polynomial

Gf2Polynomial Gf2Polynomial::from_exponents(const std::vector<std::size_t>& exponents) {
  Gf2Polynomial p;
  for (std::size_t k : exponents) {
    if (k >= p.bits_.size()) p.bits_.resize(k + 1, false);
    p.bits_[k] = !p.bits_[k];
  }
  p.trim();
  return p;
}

Gf2Polynomial Gf2Polynomial::lift(const Gf2Poly& residue) {
  Gf2Polynomial p;
  p.bits_.resize(residue.modulus_degree());
  for (std::size_t i = 0; i < residue.modulus_degree(); ++i) p.bits_[i] = residue.coeff(i);
  p.trim();
  return p;
}

Gf2Polynomial Gf2Polynomial::x_pow_plus_one(std::size_t m) { return from_exponents({0, m}); }

void Gf2Polynomial::trim() {
  while (!bits_.empty() && !bits_.back()) bits_.pop_back();
}

Gf2Polynomial Gf2Polynomial::mod(const Gf2Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("polynomial division by zero");
  Gf2Polynomial r = *this;
  const std::size_t dd = divisor.bits_.size() - 1;
  while (r.bits_.size() > dd) {
    const std::size_t shift = r.bits_.size() - 1 - dd;
    for (std::size_t i = 0; i <= dd; ++i)
      if (divisor.bits_[i]) r.bits_[i + shift] = !r.bits_[i + shift];
    r.trim();
  }
  return r;
}

Gf2Polynomial Gf2Polynomial::times(const Gf2Polynomial& other) const {
  if (is_zero() || other.is_zero()) return {};
  Gf2Polynomial out;
  out.bits_.assign(bits_.size() + other.bits_.size() - 1, false);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (!bits_[i]) continue;
    for (std::size_t j = 0; j < other.bits_.size(); ++j)
      if (other.bits_[j]) out.bits_[i + j] = !out.bits_[i + j];
  }
  out.trim();
  return out;
}

std::string Gf2Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = bits_.size(); i-- > 0;) {
    if (!bits_[i]) continue;
    if (!s.empty()) s += "+";
    s += term(i);
  }
  return s;
}

Gf2Polynomial gcd(const Gf2Polynomial& p, const Gf2Polynomial& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
  Gf2Polynomial a = p, b = q;
  while (!b.is_zero()) {
    Gf2Polynomial r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;  // leading coefficient is 1 over GF(2)
}

Gf2Polynomial gcd(const Gf2Poly& p, const Gf2Poly& q) { return gcd(Gf2Polynomial::lift(p), Gf2Polynomial::lift(q)); }

}  // namespace hfpq
