#include <doctest.h>

#include <random>

#include "hfpq/analysis.hpp"
#include "hfpq/codefile.hpp"
#include "hfpq/error.hpp"
#include "hfpq/search.hpp"
#include "hfpq/transforms.hpp"
#include "oracles.hpp"

using namespace hfpq;

namespace {

Gf2Poly first_half(const BinaryWord& w) { return split_halves(w).first; }

oracle::Poly to_oracle(const Gf2Poly& p) {
  oracle::Poly out;
  for (std::size_t i = 0; i < p.modulus_degree(); ++i) out.push_back(p.coeff(i) ? 1 : 0);
  return out;
}

}  // namespace

TEST_CASE("transpose of the example") {
  const TypeQCode g = golden_example();
  const TypeQCode t = transpose_code(g);
  CHECK(t.length() == 24);
  CHECK(verify_hfp(t).ok);
  CHECK(compute_rank(t.codewords()) == 12);
  CHECK(compute_kernel(t.codewords()).dimension == 1);
  CHECK_FALSE(t.iota().has_value());
  CHECK(t.a().to_string() == "001010010000010110111111");

  const HadamardMatrixQ h = build_matrix(g);
  CHECK(codeword_set_from_rows(h.columns()) == t.sorted_codewords());
  CHECK(transpose_code(t).sorted_codewords() == g.sorted_codewords());
}

TEST_CASE("transpose of every k=2 hit has a one-dimensional kernel") {
  for (int n : {4, 6}) {
    const SearchResult r = search_k2(n);
    REQUIRE_FALSE(r.codes.empty());
    for (const TypeQCode& c : r.codes) {
      const TypeQCode t = transpose_code(c);
      const std::vector<BinaryWord> words = t.codewords();
      CHECK(compute_kernel(words).dimension == 1);
      CHECK(compute_rank(words) == compute_rank(c.codewords()));
      CHECK(transpose_code(t).sorted_codewords() == c.sorted_codewords());
    }
  }
}

TEST_CASE("transpose rejects unverified input") {
  const TypeQCode g = golden_example();
  BinaryWord a = g.a();
  a.flip(2);
  CHECK_THROWS_AS(transpose_code(TypeQCode::unchecked(6, a, g.b())), VerificationFailure);
}

TEST_CASE("doubling the example") {
  const TypeQCode d = double_code(golden_example());
  CHECK(d.n() == 12);
  CHECK(d.length() == 48);
  CHECK(d.iota() == 22);
  CHECK(d.a().to_string() == "111011101110011011001100100110010011000100010001");
  CHECK(d.b().to_string() == "001100110011111100000000111111110000001100110011");
  CHECK(verify_hfp(d).ok);
  const std::vector<BinaryWord> words = d.codewords();
  CHECK(compute_rank(words) == 24);
  const KernelInfo k = compute_kernel(words);
  CHECK(k.dimension == 2);
  // kernel generator has halves 1 + x^2 + … + x^{4n-2} up to complement
  CHECK(d1_representative(d.element_vector({22, true})) == kappa_vector(22, 12));
  CHECK(d1_representative(d.element_vector({22, true})).complement().to_string() ==
        "101010101010101010101010101010101010101010101010");
  for (GroupElement g : group::elements(12))
    if (g != group::identity() && g != group::central_involution(12))
      CHECK(d.element_vector(g).weight() == 24);

  const TypeQCode dt = transpose_code(d);
  CHECK(compute_kernel(dt.codewords()).dimension == 1);
}

TEST_CASE("doubling every k=2 hit at n = 4") {
  for (const TypeQCode& c : search_k2(4).codes) {
    const TypeQCode d = double_code(c);
    CHECK(d.iota() == 2 * *c.iota());
    const std::vector<BinaryWord> words = d.codewords();
    CHECK(compute_kernel(words).dimension == 2);
    if (compute_rank(c.codewords()) == 8) CHECK(compute_rank(words) == 16);
  }
}

TEST_CASE("doubling preconditions") {
  const TypeQCode g = golden_example();
  CHECK_THROWS_AS(double_code(g.with_iota(std::nullopt)), KernelPrecondition);
  CHECK_THROWS_AS(double_code(g.with_iota(3)), KernelPrecondition);
  const TypeQCode t = transpose_code(g).with_iota(0);
  CHECK_THROWS_AS(double_code(t), KernelPrecondition);
}

TEST_CASE("rank criterion") {
  const TypeQCode g = golden_example();
  const Gf2Poly a1 = first_half(g.a());
  CHECK(rank_criterion_operand(a1, 11, 6) == Gf2Poly::from_exponents(12, {0, 2, 5, 6, 9, 11}));
  CHECK(rank_gcd_criterion(a1, 11, 6));
  for (int n = 1; n <= 6; ++n) {
    const Gf2Poly one = Gf2Poly::monomial(static_cast<std::size_t>(2 * n), 0);
    CHECK(rank_criterion_operand(one, 2 * n - 1, n) ==
          Gf2Poly::from_exponents(static_cast<std::size_t>(2 * n), {0, 2 * n - 1}));
    CHECK(rank_gcd_criterion(one, 2 * n - 1, n));
  }
  CHECK_THROWS_AS(rank_gcd_criterion(Gf2Poly::from_exponents(12, {0, 1}), 0, 6), std::invalid_argument);

  // exhaustive n = 3: the criterion equals the oracle gcd test, and a square factor (x+1)^2 makes it false
  int squared = 0;
  for (unsigned v = 0; v < 64; ++v) {
    Gf2Poly p(6);
    for (std::size_t i = 0; i < 6; ++i) p.set_coeff(i, (v >> i) & 1U);
    if (p.weight() % 2 == 0) continue;
    for (int iota = 0; iota < 6; ++iota) {
      const oracle::Poly g6 = oracle::poly_gcd(to_oracle(rank_criterion_operand(p, iota, 3)), oracle::x_pow_plus_one(6));
      CHECK(rank_gcd_criterion(p, iota, 3) == (g6 == oracle::Poly{1, 1}));
      if (oracle::poly_mod(to_oracle(rank_criterion_operand(p, iota, 3)), oracle::Poly{1, 0, 1}).empty()) {
        ++squared;
        CHECK_FALSE(rank_gcd_criterion(p, iota, 3));
      }
    }
  }
  CHECK(squared > 0);
}

TEST_CASE("double gcd check") {
  const TypeQCode g = golden_example();
  const Gf2Poly a1 = first_half(g.a());
  for (const BinaryWord& kappa : {g.element_vector({11, true}), kappa_vector(11, 6)}) {
    const DoubleGcdCheck c = double_gcd_check(a1, first_half(kappa), 11, 6);
    CHECK(c.small_is_x_plus_1);
    CHECK(c.big_is_x_plus_1);
    CHECK(c.implication_holds);
  }

  // n = 2: every odd-weight a1 and every ι, with κ1 and its complement
  int cases = 0;
  for (unsigned v = 0; v < 16; ++v) {
    Gf2Poly p(4);
    for (std::size_t i = 0; i < 4; ++i) p.set_coeff(i, (v >> i) & 1U);
    if (p.weight() % 2 == 0) continue;
    for (int iota = 0; iota < 4; ++iota) {
      const Gf2Poly k1 = first_half(kappa_vector(iota, 2));
      for (const Gf2Poly& k : {k1, k1 + Gf2Poly::all_ones(4)}) {
        CHECK(double_gcd_check(p, k, iota, 2).implication_holds);
        ++cases;
      }
    }
  }
  CHECK(cases == 64);
}

TEST_CASE("squared factorization identity") {
  std::mt19937_64 rng(31);
  for (int n = 1; n <= 6; ++n)
    for (int t = 0; t < 100; ++t) {
      Gf2Poly a1(static_cast<std::size_t>(2 * n)), k1(static_cast<std::size_t>(2 * n));
      for (std::size_t i = 0; i < a1.modulus_degree(); ++i) {
        a1.set_coeff(i, rng() & 1U);
        k1.set_coeff(i, rng() & 1U);
      }
      const int iota = static_cast<int>(rng() % static_cast<unsigned>(2 * n));
      CHECK(squared_factorization_identity(a1, k1, iota, n).holds());
    }
  // with κ1 alternating, κ1 + x^ι φ1(κ1) is 0 for odd ι and u for even ι
  for (int n = 1; n <= 6; ++n)
    for (int iota = 0; iota < 2 * n; ++iota) {
      const Gf2Poly k1 = first_half(kappa_vector(iota, n));
      const Gf2Poly s = k1 + phi1(k1, n).shifted(iota);
      CHECK(s == (iota % 2 ? Gf2Poly::zero(k1.modulus_degree()) : Gf2Poly::all_ones(k1.modulus_degree())));
    }
}
