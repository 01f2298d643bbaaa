#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hfpq/core.hpp"

namespace hfpq::packed {

/// Words of length 4n ≤ 64 in one u64; bit i is position i+1.
using Word = std::uint64_t;

constexpr int kMaxN = 16;

struct Layout {
  int n = 0;
  int half_bits = 0;  // 2n
  Word half_mask = 0;
  Word full_mask = 0;

  explicit Layout(int n);

  /// π_a: cyclic shift by one inside each half.
  Word rot_a(Word v) const noexcept;
  /// π_b: i ↔ 4n+1−i.
  Word rev(Word v) const noexcept;
};

Word to_packed(const BinaryWord& w);
BinaryWord from_packed(Word w, int n);

/// Same result as derive_b on packed words; nullopt where derive_b throws.
std::optional<Word> derive_b(Word a, const Layout& layout);

/// All 8n vectors in group::index order, or nullopt if a^{4n} ≠ e.
/// Requires the caller to hold a buffer of size 8n.
bool realize(Word a, Word b, const Layout& layout, Word* out);

/// verify_hfp under the canonical permutations. Those permutations already
/// satisfy the homomorphism and fixed-point conditions, so only the vector
/// conditions are checked. `scratch` must hold 8n words and receives the
/// codewords in sorted order on success.
bool is_hfp(Word a, Word b, const Layout& layout, Word* scratch);

/// K(C) of a sorted, duplicate-free codeword list containing 0.
std::vector<Word> kernel(const Word* sorted, std::size_t count);

}  // namespace hfpq::packed
