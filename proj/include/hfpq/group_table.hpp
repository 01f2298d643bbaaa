#pragma once

#include <cstdint>
#include <vector>

#include "hfpq/core.hpp"

namespace hfpq {

using ElementId = std::uint32_t;

/// Finite group given by its full multiplication table.
class GroupTable {
 public:
  /// products[i * order + j] = i * j. Throws std::invalid_argument if the
  /// table has no two-sided identity or is not a Latin square.
  static GroupTable from_products(std::size_t order, std::vector<ElementId> products);
  /// Type-Q group of order 8n; element ids are group::index values.
  static GroupTable type_q(int n);

  std::size_t order() const noexcept { return order_; }
  ElementId identity() const noexcept { return identity_; }
  ElementId mul(ElementId x, ElementId y) const noexcept { return products_[x * order_ + y]; }
  ElementId inverse(ElementId x) const noexcept { return inverses_[x]; }
  /// Same set with x ⋄ y = y * x.
  GroupTable opposite() const;
  std::size_t element_order(ElementId x) const;
  bool is_central(ElementId x) const;

 private:
  std::size_t order_ = 0;
  ElementId identity_ = 0;
  std::vector<ElementId> products_;
  std::vector<ElementId> inverses_;
};

bool is_cyclic(const GroupTable& g);

/// σ(G) from a Hadamard group: codeword σ(g) has bit [d_k * g ∉ D] at the
/// column indexed by the k-th element d_k of D (identity first).
struct ConstructedCode {
  std::vector<ElementId> column_elements;  // D with the identity moved to the front
  std::vector<BinaryWord> words;           // indexed by element id
  std::vector<Perm> perms;                 // indexed by element id

  std::vector<BinaryWord> sorted_words() const;
};

/// Builds the HFP-code of a left Hadamard group (G, D, u). D is used in the
/// given order after replacing it by u·D when it misses the identity and
/// rotating the identity to the front. Throws NotHadamardGroup.
ConstructedCode construct_from_group(const GroupTable& table, std::vector<ElementId> d, ElementId u);

}  // namespace hfpq
