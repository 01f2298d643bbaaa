#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "hfpq/analysis.hpp"
#include "hfpq/codefile.hpp"
#include "hfpq/error.hpp"
#include "hfpq/search.hpp"
#include "hfpq/transforms.hpp"
#include "oracles.hpp"

using namespace hfpq;

namespace {

std::vector<oracle::Bits> strings(const std::vector<BinaryWord>& words) {
  std::vector<oracle::Bits> out;
  for (const BinaryWord& w : words) out.push_back(w.to_string());
  return out;
}

// First-order Reed-Muller code of length 8: the linear Hadamard code.
std::vector<BinaryWord> reed_muller_8() {
  std::vector<BinaryWord> out;
  for (unsigned m = 0; m < 16; ++m) {
    BinaryWord w(8);
    for (unsigned x = 0; x < 8; ++x) {
      const unsigned bit = ((m & 1U) & (x & 1U)) ^ (((m >> 1) & 1U) & ((x >> 1) & 1U)) ^
                           (((m >> 2) & 1U) & ((x >> 2) & 1U)) ^ ((m >> 3) & 1U);
      w.set(x, bit);
    }
    out.push_back(w);
  }
  return out;
}

}  // namespace

TEST_CASE("verify_hfp accepts the example") {
  const HfpVerdict v = verify_hfp(golden_example());
  CHECK(v.ok);
  CHECK(v.describe() == "pass");
  CHECK(satisfies_type_q_relations(golden_example()));
}

TEST_CASE("verify_hfp reports a tampered generator") {
  const TypeQCode g = golden_example();
  BinaryWord a = g.a();
  a.flip(4);
  const HfpVerdict v = verify_hfp(TypeQCode::unchecked(6, a, g.b()));
  CHECK_FALSE(v.ok);
  CHECK(v.violation == HfpViolation::WeightViolation);
  REQUIRE(v.witness.has_value());
  // the brute-force scan finds the same first offender
  const std::vector<oracle::Bits> vecs = oracle::realize(a.to_string(), g.b().to_string(), 6);
  std::size_t first = 0;
  if (!vecs.empty())
    for (std::size_t i = 1; i < vecs.size(); ++i)
      if (i != 12 && oracle::weight(vecs[i]) != 12) {
        first = i;
        break;
      }
  if (!vecs.empty()) CHECK(group::index(*v.witness, 6) == first);
}

TEST_CASE("verify_hfp reports duplicates") {
  const HfpVerdict v = verify_hfp(TypeQCode::unchecked(2, BinaryWord(8), BinaryWord(8)));
  CHECK(v.violation == HfpViolation::DuplicateCodeword);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == group::a(1));
}

TEST_CASE("verify_hfp reports a permutation with a fixed point") {
  // The vectors do not depend on π_b, so replacing it keeps the weight checks passing.
  const TypeQCode g = golden_example();
  const HfpVerdict v = verify_hfp(g, GeneratorPerms{canonical_perm_a(6), Perm::identity(24)});
  CHECK(v.violation == HfpViolation::FixedPointViolation);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == group::b());
}

TEST_CASE("verify_hfp reports relation and homomorphism failures") {
  const TypeQCode g = golden_example();
  const HfpVerdict v = verify_hfp(TypeQCode::unchecked(6, g.a(), apply_perm(canonical_perm_a(6), g.b())));
  CHECK_FALSE(v.ok);
  CHECK(v.violation != HfpViolation::None);

  const HfpVerdict h = verify_hfp(g, GeneratorPerms{canonical_perm_a(6), canonical_perm_a(6)});
  CHECK_FALSE(h.ok);
}

TEST_CASE("Hadamard group conditions of the example") {
  const TypeQCode code = golden_example();
  const GroupTable table = GroupTable::type_q(6);
  const auto u = static_cast<ElementId>(group::index(group::central_involution(6), 6));
  const std::vector<ElementId> d1 = d1_elements(code);
  CHECK(d1.size() == 24);
  CHECK(verify_hadamard_group(table, d1, u).ok);
  CHECK(verify_hadamard_group(table, d1_inverse_elements(code), u).ok);
  CHECK(verify_right_hadamard_group(table, d1, u).ok);
}

TEST_CASE("rank") {
  const TypeQCode g = golden_example();
  CHECK(compute_rank(g.codewords()) == 12);
  CHECK(compute_rank(reed_muller_8()) == 4);
  CHECK(compute_rank(transpose_code(g).codewords()) == 12);
  CHECK(compute_rank(std::vector<BinaryWord>{}) == 0);
  CHECK_THROWS_AS(compute_rank(std::vector<BinaryWord>{BinaryWord(3), BinaryWord(4)}), SizeMismatch);

  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    std::vector<BinaryWord> words(1 + rng() % 12, BinaryWord(1 + t % 20));
    for (BinaryWord& w : words)
      for (std::size_t i = 0; i < w.size(); ++i) w.set(i, rng() % 3 == 0);
    CHECK(compute_rank(words) == oracle::rank(strings(words)));
  }
}

TEST_CASE("kernel") {
  const TypeQCode g = golden_example();
  const KernelInfo k = compute_kernel(g.codewords());
  CHECK(k.dimension == 2);
  REQUIRE(k.basis.size() == 2);
  CHECK(k.basis[0] == BinaryWord::ones(24));
  CHECK(k.basis[1] == d1_representative(g.element_vector({11, true})));
  CHECK(k.basis[1].to_string() == "010101010101101010101010");
  CHECK(k.elements.size() == 4);

  const std::vector<BinaryWord> rm = reed_muller_8();
  const KernelInfo lk = compute_kernel(rm);
  CHECK(lk.dimension == 4);
  CHECK(lk.elements.size() == rm.size());
  CHECK(is_linear(rm));
  CHECK_FALSE(is_linear(g.codewords()));

  const KernelInfo tk = compute_kernel(transpose_code(g).codewords());
  CHECK(tk.dimension == 1);
  CHECK(tk.basis == std::vector<BinaryWord>{BinaryWord::ones(24)});

  CHECK_THROWS_AS(compute_kernel(std::vector<BinaryWord>{BinaryWord::ones(4)}), std::invalid_argument);
}

TEST_CASE("kernel matches the oracle and the automorphism test") {
  std::vector<TypeQCode> codes = {golden_example(), transpose_code(golden_example())};
  for (int n = 1; n <= 3; ++n)
    for (const TypeQCode& c : search_general(n).codes) codes.push_back(c);
  for (const TypeQCode& c : codes) {
    const std::vector<BinaryWord> words = c.codewords();
    const KernelInfo k = compute_kernel(words);
    const std::set<oracle::Bits> brute = oracle::kernel(strings(words));
    const std::vector<oracle::Bits> mine = strings(k.elements);
    CHECK(std::vector<oracle::Bits>(brute.begin(), brute.end()) == mine);
    CHECK(kernel_via_automorphisms(c) == k.elements);
    CHECK(k.contains(BinaryWord::ones(c.length())));
    CHECK(k.elements.size() == (std::size_t{1} << k.dimension));
    for (const BinaryWord& x : k.elements)
      for (const BinaryWord& y : k.elements) CHECK(k.contains(x ^ y));
  }
}

TEST_CASE("cosets of the kernel: c·K = c + K") {
  const TypeQCode code = golden_example();
  const Realization r = code.realize();
  std::map<BinaryWord, GroupElement> element_of;
  for (GroupElement g : group::elements(6)) element_of[r.vector(g)] = g;
  const KernelInfo k = compute_kernel(r.vectors);
  for (GroupElement c : group::elements(6)) {
    std::set<BinaryWord> product, sum;
    for (const BinaryWord& z : k.elements) {
      product.insert(r.vector(group::mul(c, element_of.at(z), 6)));
      sum.insert(r.vector(c) ^ z);
    }
    CHECK(product == sum);
  }
}

TEST_CASE("generator span rank and kernel exponent") {
  const TypeQCode g = golden_example();
  CHECK(find_kernel_iota(g) == 11);
  CHECK(rank_from_generators(g) == 12);
  CHECK_THROWS_AS(rank_from_generators(g.with_iota(std::nullopt)), KernelPrecondition);
}

TEST_CASE("projection onto a kernel support") {
  const TypeQCode g = golden_example();
  const std::vector<BinaryWord> words = g.codewords();
  const BinaryWord kappa = d1_representative(g.element_vector({11, true}));
  const std::vector<BinaryWord> proj = project_onto_support(words, kappa);
  CHECK(proj.size() == 24);
  for (std::size_t i = 0; i < proj.size(); ++i) {
    CHECK(proj[i].size() == 12);
    for (std::size_t j = i + 1; j < proj.size(); ++j) {
      const std::size_t d = distance(proj[i], proj[j]);
      CHECK((d == 6 || d == 12));
    }
  }
  CHECK_THROWS_AS(project_onto_support(words, BinaryWord::ones(24)), std::invalid_argument);
  CHECK_THROWS_AS(project_onto_support(words, g.a()), NotKernelElement);
}

TEST_CASE("report and classification") {
  CHECK(two_adic_split(24) == std::pair<int, int>{3, 3});
  CHECK(two_adic_split(12) == std::pair<int, int>{2, 3});
  CHECK(two_adic_split(64) == std::pair<int, int>{6, 1});

  const AnalysisReport r = analyze(golden_example());
  CHECK(r.length == 24);
  CHECK(r.s == 3);
  CHECK(r.n_prime == 3);
  CHECK(r.rank == 12);
  CHECK(r.kernel_dim == 2);
  CHECK(r.is_hfp);
  CHECK(r.is_type_q);
  CHECK_FALSE(r.is_linear);
  CHECK_FALSE(r.generator_in_kernel);
  CHECK(r.bound_violations.empty());
  CHECK_NOTHROW(enforce_bounds(r));

  AnalysisReport fake = r;
  fake.kernel_dim = 3;
  fake.kernel_basis.push_back(BinaryWord(24));
  CHECK_FALSE(classify(fake).empty());
  CHECK_THROWS_AS(enforce_bounds(fake), BoundViolation);

  AnalysisReport in_kernel = r;
  in_kernel.generator_in_kernel = true;
  CHECK_FALSE(classify(in_kernel).empty());

  for (const TypeQCode& c : search_general(3).codes) {
    const AnalysisReport q = analyze(c);
    CHECK(q.rank == 11);
    CHECK(q.kernel_dim == 1);
    CHECK(q.bound_violations.empty());
  }
}

TEST_CASE("linear small cases follow the linear branch") {
  for (int n = 1; n <= 2; ++n)
    for (const TypeQCode& c : search_general(n).codes) {
      const AnalysisReport q = analyze(c);
      CHECK(q.is_linear);
      CHECK(q.rank == static_cast<std::size_t>(q.s + 1));
      CHECK(q.kernel_dim == q.rank);
      CHECK(q.bound_violations.empty());
    }
}
