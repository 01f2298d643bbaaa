#pragma once

#include "hfpq/gf2poly.hpp"
#include "hfpq/typeq.hpp"

namespace hfpq {

/// Code whose codewords are the columns of H(C) and their complements.
/// The new generator a is column 1 of H (indexed by a⁻¹ ~ a), b is derived.
/// iota is set when the result has a kernel element of the form a^ι b.
/// Throws VerificationFailure on unverified input, IndexingInconsistency if the
/// rebuilt code fails verification or misses a column.
TypeQCode transpose_code(const TypeQCode& code);

/// Length-8n code with A_i = a_i(x²) + x·κ_i(x²), κ the vector of a^ι b.
/// The result carries iota′ = 2ι and is checked to be HFP with a^{2ι}b in its
/// kernel. Throws KernelPrecondition when iota is missing, k ≠ 2 or a^ι b ∉ K(C);
/// VerificationFailure if the input or the result fails verify_hfp.
TypeQCode double_code(const TypeQCode& code);

/// a1 + x^{ι+1} φ1(a1) (mod x^{2n} − 1).
Gf2Poly rank_criterion_operand(const Gf2Poly& a1, int iota, int n);

/// gcd(a1 + x^{ι+1} φ1(a1), x^{2n} − 1) == x + 1. Throws std::invalid_argument
/// for even-weight a1 or iota outside [0, 2n).
bool rank_gcd_criterion(const Gf2Poly& a1, int iota, int n);

struct DoubleGcdCheck {
  Gf2Polynomial small_gcd;  // gcd(a1 + x^{ι+1}φ1(a1), x^{2n} − 1)
  Gf2Polynomial big_gcd;    // gcd of the doubled operand with x^{4n} − 1
  bool small_is_x_plus_1 = false;
  bool big_is_x_plus_1 = false;
  /// small gcd = x+1 ⇒ big gcd = x+1
  bool implication_holds = false;
};

/// Big operand a1(x²) + xκ1(x²) + x^{2ι+1}(a1(x²) + xφ2(κ1(x²))), taken literally.
Gf2Poly double_gcd_operand(const Gf2Poly& a1, const Gf2Poly& kappa1, int iota, int n);
DoubleGcdCheck double_gcd_check(const Gf2Poly& a1, const Gf2Poly& kappa1, int iota, int n);

struct SquaredIdentity {
  Gf2Poly lhs;  // A1 + x^{2ι+1} φ2(A1), A1 = a1(x²) + xκ1(x²)
  Gf2Poly rhs;  // (a1 + x^{ι+1}φ1(a1))(x²) + x·(κ1 + x^ι φ1(κ1))(x²)
  bool holds() const { return lhs == rhs; }
};

SquaredIdentity squared_factorization_identity(const Gf2Poly& a1, const Gf2Poly& kappa1, int iota, int n);

}  // namespace hfpq
