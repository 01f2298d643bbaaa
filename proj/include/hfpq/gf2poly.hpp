#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hfpq/core.hpp"

namespace hfpq {

/// Residue in GF(2)[x]/(x^m − 1).
///
/// Coefficient of x^i lives at index i; index 0 is the constant term. Every
/// residue has exactly m coefficients.
class Gf2Poly {
 public:
  Gf2Poly() = default;
  explicit Gf2Poly(std::size_t modulus_degree) : coeffs_(modulus_degree) {}
  explicit Gf2Poly(BinaryWord coeffs) : coeffs_(std::move(coeffs)) {}

  static Gf2Poly zero(std::size_t m) { return Gf2Poly(m); }
  /// u(x) = 1 + x + … + x^{m−1}.
  static Gf2Poly all_ones(std::size_t m) { return Gf2Poly(BinaryWord::ones(m)); }
  /// x^k reduced mod x^m − 1.
  static Gf2Poly monomial(std::size_t m, long long k);
  static Gf2Poly from_exponents(std::size_t m, const std::vector<long long>& exponents);

  std::size_t modulus_degree() const noexcept { return coeffs_.size(); }
  bool coeff(std::size_t i) const noexcept { return coeffs_.test(i); }
  void set_coeff(std::size_t i, bool v) noexcept { coeffs_.set(i, v); }
  const BinaryWord& coeffs() const noexcept { return coeffs_; }
  std::size_t weight() const noexcept { return coeffs_.weight(); }
  bool is_zero() const noexcept { return coeffs_.is_zero(); }

  /// Multiplication by x^k: coefficient i moves to (i + k) mod m.
  Gf2Poly shifted(long long k) const;

  std::string to_string() const;

  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

 private:
  BinaryWord coeffs_;
};

Gf2Poly add(const Gf2Poly& p, const Gf2Poly& q);
Gf2Poly mul_mod(const Gf2Poly& p, const Gf2Poly& q);
inline Gf2Poly operator+(const Gf2Poly& p, const Gf2Poly& q) { return add(p, q); }
inline Gf2Poly operator*(const Gf2Poly& p, const Gf2Poly& q) { return mul_mod(p, q); }

/// Solves (x+1)·q ≡ p; returns the solution with constant term 0. The other
/// solution is q + u(x). Throws NotDivisible for odd-weight p.
Gf2Poly div_exact_by_x_plus_1(const Gf2Poly& p);

/// Coefficient reversal x^{m−1} p(1/x). phi1 expects m = 2n, phi2 m = 4n;
/// both are the same map on coefficient strings.
Gf2Poly reverse_coeffs(const Gf2Poly& p);
Gf2Poly phi1(const Gf2Poly& p, int n);
Gf2Poly phi2(const Gf2Poly& p, int n);

/// p(x) ↦ p(x²), from modulus m to modulus 2m.
Gf2Poly inflate(const Gf2Poly& p);

/// Plain polynomial over GF(2) of unbounded degree (no modulus).
class Gf2Polynomial {
 public:
  Gf2Polynomial() = default;
  static Gf2Polynomial from_exponents(const std::vector<std::size_t>& exponents);
  /// Lifts a residue to its canonical representative of degree < m.
  static Gf2Polynomial lift(const Gf2Poly& residue);
  /// x^m + 1 (equal to x^m − 1 over GF(2)).
  static Gf2Polynomial x_pow_plus_one(std::size_t m);
  static Gf2Polynomial x_plus_one() { return x_pow_plus_one(1); }

  bool is_zero() const noexcept { return bits_.empty(); }
  /// −1 for the zero polynomial.
  long long degree() const noexcept { return static_cast<long long>(bits_.size()) - 1; }
  bool coeff(std::size_t i) const noexcept { return i < bits_.size() && bits_[i]; }

  /// Remainder of division by a nonzero divisor.
  Gf2Polynomial mod(const Gf2Polynomial& divisor) const;
  bool divides(const Gf2Polynomial& dividend) const { return dividend.mod(*this).is_zero(); }
  Gf2Polynomial times(const Gf2Polynomial& other) const;

  std::string to_string() const;

  friend bool operator==(const Gf2Polynomial&, const Gf2Polynomial&) = default;

 private:
  void trim();
  std::vector<bool> bits_;  // bits_[i] = coefficient of x^i; highest entry is 1
};

/// Monic gcd over GF(2)[x] by the Euclidean algorithm. Throws std::invalid_argument if both are zero.
Gf2Polynomial gcd(const Gf2Polynomial& p, const Gf2Polynomial& q);
Gf2Polynomial gcd(const Gf2Poly& p, const Gf2Poly& q);

}  // namespace hfpq
