#include <doctest.h>

#include "hfpq/analysis.hpp"
#include "hfpq/codefile.hpp"
#include "hfpq/error.hpp"
#include "hfpq/group_table.hpp"
#include "hfpq/search.hpp"

using namespace hfpq;

namespace {

GroupTable cyclic(std::size_t order) {
  std::vector<ElementId> products(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) products[x * order + y] = static_cast<ElementId>((x + y) % order);
  return GroupTable::from_products(order, std::move(products));
}

ElementId u_id(int n) { return static_cast<ElementId>(group::index(group::central_involution(n), n)); }

}  // namespace

TEST_CASE("table validation") {
  CHECK_THROWS_AS(GroupTable::from_products(2, {0, 1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(GroupTable::from_products(2, {0, 1, 1}), std::invalid_argument);
  // Latin square without identity
  CHECK_THROWS_AS(GroupTable::from_products(3, {0, 2, 1, 2, 1, 0, 1, 0, 2}), std::invalid_argument);
  const GroupTable c = cyclic(8);
  CHECK(c.identity() == 0);
  CHECK(c.inverse(3) == 5);
  CHECK(is_cyclic(c));
}

TEST_CASE("type-Q table is a non-cyclic group with central u") {
  for (int n = 1; n <= 5; ++n) {
    const GroupTable g = GroupTable::type_q(n);
    CHECK(g.order() == static_cast<std::size_t>(8 * n));
    CHECK(g.identity() == 0);
    CHECK_FALSE(is_cyclic(g));
    CHECK(g.is_central(u_id(n)));
    CHECK(g.element_order(1) == static_cast<std::size_t>(4 * n));
    const GroupTable op = g.opposite();
    CHECK(op.mul(1, 4 * n) == g.mul(4 * n, 1));
  }
}

TEST_CASE("group construction round trip") {
  std::vector<TypeQCode> codes = {golden_example()};
  for (const TypeQCode& c : search_general(3).codes) codes.push_back(c);
  for (const TypeQCode& code : codes) {
    const int n = code.n();
    const GroupTable table = GroupTable::type_q(n);
    // columns in coordinate order: position j is indexed by col_order[j]
    std::vector<ElementId> d;
    for (GroupElement x : coordinate_index(code).col_order) d.push_back(static_cast<ElementId>(group::index(x, n)));
    const ConstructedCode built = construct_from_group(table, d, u_id(n));
    CHECK(built.sorted_words() == code.sorted_codewords());
    CHECK(built.column_elements.front() == table.identity());
    // the construction is itself propelinear: σ(g)σ(h) = σ(gh)
    for (std::size_t g = 0; g < table.order(); ++g)
      for (std::size_t h = 0; h < table.order(); h += 5) {
        const auto gh = table.mul(static_cast<ElementId>(g), static_cast<ElementId>(h));
        CHECK(prop_mul(built.words[g], built.perms[g], built.words[h]) == built.words[gh]);
      }
  }
}

TEST_CASE("construction rejects a set violating condition I") {
  const TypeQCode code = golden_example();
  const GroupTable table = GroupTable::type_q(6);
  std::vector<ElementId> d = d1_elements(code);
  // swap one element for its u-partner: still a transversal, no longer a difference set
  d[3] = table.mul(u_id(6), d[3]);
  const HadamardGroupVerdict v = verify_hadamard_group(table, d, u_id(6));
  CHECK_FALSE(v.ok);
  CHECK(v.failed == HadamardGroupCondition::ConditionI);
  CHECK(v.witness_a.has_value());
  CHECK_THROWS_AS(construct_from_group(table, d, u_id(6)), NotHadamardGroup);
}

TEST_CASE("cyclic groups of order 8n are not Hadamard groups here") {
  // Any subset: the brute-force check must refuse a half that is not a transversal.
  const GroupTable c = cyclic(8);
  const std::vector<ElementId> d = {0, 1, 2, 3};
  const HadamardGroupVerdict v = verify_hadamard_group(c, d, 4);
  CHECK_FALSE(v.ok);
  CHECK(verify_hadamard_group(c, std::vector<ElementId>{0, 1, 2}, 4).failed == HadamardGroupCondition::Size);
  CHECK(verify_hadamard_group(c, d, 1).failed == HadamardGroupCondition::CentralInvolution);
  CHECK(verify_hadamard_group(c, std::vector<ElementId>{0, 4, 1, 2}, 4).failed == HadamardGroupCondition::Partition);
}
