#include <doctest.h>

#include <random>

#include "hfpq/analysis.hpp"
#include "hfpq/codefile.hpp"
#include "hfpq/error.hpp"
#include "hfpq/packed.hpp"
#include "hfpq/search.hpp"
#include "hfpq/typeq.hpp"
#include "oracles.hpp"

using namespace hfpq;

namespace {

const char* kGoldenA = "111111011010101001000000";
const char* kGoldenB = "010101110000111100010101";

BinaryWord word(const char* s) { return BinaryWord::from_string(s); }

}  // namespace

TEST_CASE("derive_b reproduces the length-24 example") {
  CHECK(derive_b(word(kGoldenA), 6) == word(kGoldenB));
  const auto [a1, a2] = split_halves(word(kGoldenA));
  CHECK(div_exact_by_x_plus_1(a1 + phi1(a2, 6).shifted(1)).coeffs() == word("010101110000"));
  CHECK(oracle::is_hfp(kGoldenA, kGoldenB, 6));
}

TEST_CASE("derive_b edge cases") {
  // a1 + x·φ1(a2) = 0 when a = 0: halves are 0 or u
  const BinaryWord b = derive_b(BinaryWord(8), 2);
  const auto [b1, b2] = split_halves(b);
  CHECK(b1.is_zero());
  CHECK(b2 == Gf2Poly::all_ones(4));
  CHECK_THROWS_AS(derive_b(word("10000000"), 2), NotTypeQCandidate);
  CHECK_THROWS_AS(derive_b(word("1000000"), 2), SizeMismatch);
}

TEST_CASE("derive_b gives the only b up to complement") {
  // For n = 1, 2 every (a, b) pair is tried by brute force.
  for (int n = 1; n <= 2; ++n) {
    const int len = 4 * n;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << len); ++a) {
      const oracle::Bits as = oracle::bits_of(a, len);
      std::vector<oracle::Bits> bs;
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << len); ++b)
        if (oracle::is_hfp(as, oracle::bits_of(b, len), n)) bs.push_back(oracle::bits_of(b, len));
      if (bs.empty()) continue;
      REQUIRE(bs.size() == 2);
      CHECK(bs[0] == oracle::complement(bs[1]));
      const BinaryWord derived = derive_b(word(as.c_str()), n);
      CHECK((derived.to_string() == bs[0] || derived.to_string() == bs[1]));
    }
  }
}

TEST_CASE("packed derive_b agrees with derive_b") {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 8; ++n) {
    const packed::Layout layout(n);
    for (int t = 0; t < 300; ++t) {
      BinaryWord a(static_cast<std::size_t>(4 * n));
      for (std::size_t i = 0; i < a.size(); ++i) a.set(i, rng() & 1U);
      const auto fast = packed::derive_b(packed::to_packed(a), layout);
      try {
        const BinaryWord b = derive_b(a, n);
        REQUIRE(fast.has_value());
        CHECK(packed::from_packed(*fast, n) == b);
      } catch (const NotTypeQCandidate&) {
        CHECK_FALSE(fast.has_value());
      }
    }
  }
}

TEST_CASE("derive_a2 and kappa_vector") {
  const auto [a1, a2] = split_halves(word(kGoldenA));
  CHECK(derive_a2(a1, 11, 6) == a2);
  CHECK(derive_a2(a1, 11, 6).coeffs().to_string() == "101001000000");
  for (int n = 1; n <= 5; ++n)
    for (int iota = 0; iota < 2 * n; ++iota) {
      const Gf2Poly one = Gf2Poly::monomial(static_cast<std::size_t>(2 * n), 0);
      CHECK(derive_a2(one, iota, n) == Gf2Poly::monomial(static_cast<std::size_t>(2 * n), iota) +
                                           Gf2Poly::all_ones(static_cast<std::size_t>(2 * n)));
      // the paired relation a1 = x^{ι+1} φ1(a2) + u recovers a1
      const Gf2Poly p = Gf2Poly::from_exponents(static_cast<std::size_t>(2 * n), {0, 1});
      CHECK(derive_a2(derive_a2(p, iota, n), iota, n) == p);
    }
  CHECK_THROWS_AS(derive_a2(a1, 12, 6), std::out_of_range);

  CHECK(kappa_vector(0, 2).to_string() == "01010101");
  CHECK(kappa_vector(1, 2).to_string() == "01011010");
  CHECK(kappa_vector(11, 6).to_string() == "010101010101101010101010");
}

TEST_CASE("element vectors of the example") {
  const TypeQCode code = golden_example();
  CHECK(code.element_vector(group::identity()).is_zero());
  CHECK(code.element_vector(group::a(12)) == BinaryWord::ones(24));
  CHECK(d1_representative(code.element_vector({11, true})) == kappa_vector(11, 6));
  const Realization r = code.realize();
  CHECK(r.a_to_4n.is_zero());
  for (GroupElement g : group::elements(6)) CHECK(r.vector(g) == code.element_vector(g));
  const std::vector<oracle::Bits> brute = oracle::realize(kGoldenA, kGoldenB, 6);
  for (std::size_t i = 0; i < brute.size(); ++i) CHECK(r.vectors[i].to_string() == brute[i]);
}

TEST_CASE("generator orders and the power lemma") {
  for (int n : {4, 6}) {
    const TypeQCode code = search_k2(n).codes.front();
    for (int i = 1; i < 4 * n; ++i) CHECK_FALSE(code.element_vector(group::a(i)).is_zero());
    CHECK(code.element_vector(group::a(4 * n)).is_zero());
    CHECK(code.element_vector(group::mul(group::b(), group::b(), n)) == BinaryWord::ones(code.length()));
    const BinaryWord a_n = code.element_vector(group::a(n));
    for (int h = 1; h <= n; ++h)
      if (n % h == 0) CHECK(apply_perm(perm_power(canonical_perm_a(n), h), a_n) != a_n);
  }
}

TEST_CASE("from_generators accepts b up to complement only") {
  CHECK_NOTHROW(TypeQCode::from_generators(6, word(kGoldenA), word(kGoldenB)));
  CHECK_NOTHROW(TypeQCode::from_generators(6, word(kGoldenA), word(kGoldenB).complement()));
  BinaryWord bad = word(kGoldenB);
  bad.flip(3);
  CHECK_THROWS_AS(TypeQCode::from_generators(6, word(kGoldenA), bad), NotTypeQCandidate);
  CHECK_THROWS_AS(TypeQCode::from_generator(6, word(kGoldenA), 12), std::out_of_range);
}

TEST_CASE("coordinate indexing") {
  const TypeQCode code = golden_example();
  const int n = code.n();
  const CoordinateIndex idx = coordinate_index(code);
  REQUIRE(idx.col_order.size() == 24);
  for (std::size_t j = 0; j < idx.col_order.size(); ++j) {
    const Perm p = canonical_perm(idx.col_order[j], n);
    CHECK(apply_perm(p, BinaryWord::unit(24, j + 1)) == BinaryWord::unit(24, 1));
    CHECK_FALSE(code.gamma(idx.col_order[j]));
  }
  // the last element of the first half is a^{-(2n-1)} = a·u, i.e. a up to complement
  const GroupElement last = idx.col_order[static_cast<std::size_t>(2 * n - 1)];
  CHECK((last == group::a(1) || last == group::a(2 * n + 1)));
}

TEST_CASE("normalized matrix") {
  const TypeQCode code = golden_example();
  const HadamardMatrixQ h = build_matrix(code);
  REQUIRE(h.order == 24);
  CHECK(h.rows.front().is_zero());
  for (const BinaryWord& row : h.rows) CHECK_FALSE(row.test(0));
  for (std::size_t i = 0; i < h.order; ++i)
    for (std::size_t j = i + 1; j < h.order; ++j) CHECK(distance(h.rows[i], h.rows[j]) == 12);
  const std::vector<BinaryWord> cols = h.columns();
  for (std::size_t i = 0; i < h.order; ++i)
    for (std::size_t j = i + 1; j < h.order; ++j) CHECK(distance(cols[i], cols[j]) == 12);
  for (std::size_t r = 0; r < h.order; ++r)
    for (std::size_t c = 0; c < h.order; ++c)
      CHECK(matrix_entry(h.index.col_order[c], h.index.row_order[r], code) == h.entry(r, c));
  CHECK_FALSE(matrix_entry(group::identity(), group::a(5), code));
  CHECK_FALSE(matrix_entry(group::a(5), group::identity(), code));

  BinaryWord tampered = code.a();
  tampered.flip(0);
  CHECK_THROWS_AS(build_matrix(TypeQCode::unchecked(6, tampered, code.b())), VerificationFailure);
}
