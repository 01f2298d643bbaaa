#include "hfpq/transforms.hpp"

#include <algorithm>
#include <stdexcept>

#include "hfpq/analysis.hpp"
#include "hfpq/error.hpp"

namespace hfpq {

namespace {

void check_iota(int iota, int n) {
  if (iota < 0 || iota >= 2 * n) throw std::invalid_argument("iota must lie in [0, 2n)");
}

void check_half(const Gf2Poly& p, int n, const char* what) {
  if (p.modulus_degree() != static_cast<std::size_t>(2 * n))
    throw SizeMismatch(std::string(what) + " must have modulus degree 2n");
}

}  // namespace

TypeQCode transpose_code(const TypeQCode& code) {
  const HadamardMatrixQ h = build_matrix(code);
  const std::vector<BinaryWord> columns = h.columns();
  const int n = code.n();

  TypeQCode out = [&] {
    try {
      return TypeQCode::from_generator(n, columns[1]);
    } catch (const NotTypeQCandidate& e) {
      throw IndexingInconsistency(std::string("transpose: column 1 is not a generator: ") + e.what());
    }
  }();
  const HfpVerdict verdict = verify_hfp(out);
  if (!verdict.ok) throw IndexingInconsistency("transpose: rebuilt code fails verification: " + verdict.describe());

  std::vector<BinaryWord> expected = columns;
  for (const BinaryWord& c : columns) expected.push_back(c.complement());
  std::sort(expected.begin(), expected.end());
  if (out.sorted_codewords() != expected)
    throw IndexingInconsistency("transpose: rebuilt code does not reproduce the columns of H");
  return out.with_iota(find_kernel_iota(out));
}

TypeQCode double_code(const TypeQCode& code) {
  if (!code.iota()) throw KernelPrecondition("double_code needs the kernel exponent iota");
  const HfpVerdict verdict = verify_hfp(code);
  if (!verdict.ok) throw VerificationFailure("double_code: input " + verdict.describe());
  const std::vector<BinaryWord> words = code.codewords();
  const KernelInfo kernel = compute_kernel(words);
  if (kernel.dimension != 2)
    throw KernelPrecondition("double_code needs kernel dimension 2, got " + std::to_string(kernel.dimension));
  const int iota = *code.iota();
  const BinaryWord kappa = code.element_vector({iota, true});
  if (!kernel.contains(kappa)) throw KernelPrecondition("a^" + std::to_string(iota) + "b is not in the kernel");

  const auto [a1, a2] = split_halves(code.a());
  const auto [k1, k2] = split_halves(kappa);
  const BinaryWord big_a = join_halves(inflate(a1) + inflate(k1).shifted(1), inflate(a2) + inflate(k2).shifted(1));

  const int n2 = 2 * code.n();
  const int iota2 = 2 * iota;
  TypeQCode out = TypeQCode::from_generator(n2, big_a, iota2);
  const HfpVerdict out_verdict = verify_hfp(out);
  if (!out_verdict.ok) throw VerificationFailure("double_code: result " + out_verdict.describe());
  const KernelInfo out_kernel = compute_kernel(out.codewords());
  if (!out_kernel.contains(out.element_vector({iota2, true})))
    throw VerificationFailure("double_code: a^" + std::to_string(iota2) + "b of the result is not in its kernel");
  return out;
}

Gf2Poly rank_criterion_operand(const Gf2Poly& a1, int iota, int n) {
  check_half(a1, n, "a1");
  check_iota(iota, n);
  return a1 + phi1(a1, n).shifted(iota + 1);
}

bool rank_gcd_criterion(const Gf2Poly& a1, int iota, int n) {
  check_half(a1, n, "a1");
  if (a1.weight() % 2 == 0) throw std::invalid_argument("rank_gcd_criterion needs odd-weight a1");
  const Gf2Polynomial g =
      gcd(Gf2Polynomial::lift(rank_criterion_operand(a1, iota, n)), Gf2Polynomial::x_pow_plus_one(2 * n));
  return g == Gf2Polynomial::x_plus_one();
}

Gf2Poly double_gcd_operand(const Gf2Poly& a1, const Gf2Poly& kappa1, int iota, int n) {
  check_half(a1, n, "a1");
  check_half(kappa1, n, "kappa1");
  check_iota(iota, n);
  const Gf2Poly a_sq = inflate(a1);
  const Gf2Poly k_sq = inflate(kappa1);
  return a_sq + k_sq.shifted(1) + (a_sq + phi2(k_sq, n).shifted(1)).shifted(2 * iota + 1);
}

DoubleGcdCheck double_gcd_check(const Gf2Poly& a1, const Gf2Poly& kappa1, int iota, int n) {
  DoubleGcdCheck r;
  r.small_gcd = gcd(Gf2Polynomial::lift(rank_criterion_operand(a1, iota, n)), Gf2Polynomial::x_pow_plus_one(2 * n));
  r.big_gcd =
      gcd(Gf2Polynomial::lift(double_gcd_operand(a1, kappa1, iota, n)), Gf2Polynomial::x_pow_plus_one(4 * n));
  r.small_is_x_plus_1 = r.small_gcd == Gf2Polynomial::x_plus_one();
  r.big_is_x_plus_1 = r.big_gcd == Gf2Polynomial::x_plus_one();
  r.implication_holds = !r.small_is_x_plus_1 || r.big_is_x_plus_1;
  return r;
}

SquaredIdentity squared_factorization_identity(const Gf2Poly& a1, const Gf2Poly& kappa1, int iota, int n) {
  check_half(a1, n, "a1");
  check_half(kappa1, n, "kappa1");
  check_iota(iota, n);
  const Gf2Poly big_a1 = inflate(a1) + inflate(kappa1).shifted(1);
  SquaredIdentity s;
  s.lhs = big_a1 + phi2(big_a1, n).shifted(2 * iota + 1);
  s.rhs = inflate(rank_criterion_operand(a1, iota, n)) +
          inflate(kappa1 + phi1(kappa1, n).shifted(iota)).shifted(1);
  return s;
}

}  // namespace hfpq
