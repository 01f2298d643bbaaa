#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hfpq {

/// Fixed-length vector over GF(2).
///
/// Index 0 is coordinate position 1. Functions taking a "position" use the
/// 1-based numbering; functions taking an "index" are 0-based.
class BinaryWord {
 public:
  using Block = std::uint64_t;
  static constexpr std::size_t kBlockBits = 64;

  BinaryWord() = default;
  explicit BinaryWord(std::size_t length);

  static BinaryWord zeros(std::size_t length) { return BinaryWord(length); }
  static BinaryWord ones(std::size_t length);
  /// e_pos: all zeros except a one at 1-based `position`.
  static BinaryWord unit(std::size_t length, std::size_t position);
  /// Parses a string of '0'/'1'; leftmost character is position 1.
  static BinaryWord from_string(std::string_view bits);
  static BinaryWord from_bits(std::initializer_list<int> bits);

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }

  bool test(std::size_t index) const noexcept {
    return (blocks_[index / kBlockBits] >> (index % kBlockBits)) & 1U;
  }
  void set(std::size_t index, bool value = true) noexcept {
    const Block mask = Block{1} << (index % kBlockBits);
    if (value)
      blocks_[index / kBlockBits] |= mask;
    else
      blocks_[index / kBlockBits] &= ~mask;
  }
  void flip(std::size_t index) noexcept { blocks_[index / kBlockBits] ^= Block{1} << (index % kBlockBits); }

  std::size_t weight() const noexcept;
  bool is_zero() const noexcept;
  BinaryWord complement() const;
  /// 1-based positions of the nonzero coordinates.
  std::vector<std::size_t> support() const;
  /// Coordinates [first, first + count) as a new word.
  BinaryWord slice(std::size_t first, std::size_t count) const;
  BinaryWord concat(const BinaryWord& tail) const;

  BinaryWord& operator^=(const BinaryWord& other);
  friend BinaryWord operator^(BinaryWord lhs, const BinaryWord& rhs) {
    lhs ^= rhs;
    return lhs;
  }

  std::string to_string() const;
  std::span<const Block> blocks() const noexcept { return blocks_; }

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  /// Lexicographic on the 0/1 string (position 1 most significant).
  friend std::strong_ordering operator<=>(const BinaryWord& lhs, const BinaryWord& rhs);

 private:
  void clear_tail() noexcept;

  std::size_t length_ = 0;
  std::vector<Block> blocks_;
};

std::size_t distance(const BinaryWord& x, const BinaryWord& y);

struct BinaryWordHash {
  std::size_t operator()(const BinaryWord& w) const noexcept;
};

/// Coordinate permutation of {1..L}.
///
/// Acts on words as π(v) = (v_{π^{-1}(1)}, ..., v_{π^{-1}(L)}), so the bit at
/// position i moves to position π(i).
class Perm {
 public:
  Perm() = default;

  static Perm identity(std::size_t length);
  /// images[i-1] = π(i), 1-based values. Throws std::invalid_argument unless a bijection.
  static Perm from_images(std::vector<std::size_t> images);
  /// Product of disjoint cycles written in 1-based cycle notation.
  static Perm from_cycles(std::size_t length, const std::vector<std::vector<std::size_t>>& cycles);

  std::size_t size() const noexcept { return images_.size(); }
  /// π(position), both 1-based.
  std::size_t image(std::size_t position) const { return images_.at(position - 1) + 1; }
  std::size_t image_index(std::size_t index) const noexcept { return images_[index]; }

  Perm inverse() const;
  bool is_identity() const noexcept;
  bool has_fixed_point() const noexcept;
  /// 1-based fixed positions.
  std::vector<std::size_t> fixed_points() const;
  std::vector<std::size_t> images() const;

  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<std::uint32_t> images_;  // 0-based
};

BinaryWord apply_perm(const Perm& p, const BinaryWord& w);
/// (p∘q)(i) = p(q(i)).
Perm compose(const Perm& p, const Perm& q);
Perm perm_power(const Perm& p, long long exponent);
/// The propelinear product x·y = x + π_x(y).
BinaryWord prop_mul(const BinaryWord& x, const Perm& pi_x, const BinaryWord& y);
/// x^{-1} = π_x^{-1}(x).
BinaryWord prop_inverse(const BinaryWord& x, const Perm& pi_x);

/// a^exp_a b^has_b in the type-Q group of order 8n.
struct GroupElement {
  int exp_a = 0;
  bool has_b = false;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

namespace group {

inline GroupElement identity() { return {}; }
inline GroupElement a(int power = 1) { return {power, false}; }
inline GroupElement b() { return {0, true}; }

/// Brings exp_a into [0, 4n).
GroupElement normalize(GroupElement g, int n);
/// The central involution u = a^{2n} = b².
GroupElement central_involution(int n);
GroupElement mul(GroupElement g, GroupElement h, int n);
GroupElement inverse(GroupElement g, int n);
int order(GroupElement g, int n);

/// Dense index in [0, 8n): exp_a + 4n·has_b.
std::size_t index(GroupElement g, int n);
GroupElement from_index(std::size_t idx, int n);
/// All 8n elements in index order.
std::vector<GroupElement> elements(int n);

std::string to_string(GroupElement g);

}  // namespace group

/// Group law in normal form; same as group::mul.
inline GroupElement group_mul(GroupElement g, GroupElement h, int n) { return group::mul(g, h, n); }

/// π_a = (1,2,…,2n)(2n+1,…,4n).
Perm canonical_perm_a(int n);
/// π_b = (1,4n)(2,4n−1)…(2n,2n+1).
Perm canonical_perm_b(int n);
/// π_g = π_a^{exp_a} ∘ π_b^{has_b}.
Perm canonical_perm(GroupElement g, int n);

}  // namespace hfpq

template <>
struct std::hash<hfpq::BinaryWord> {
  std::size_t operator()(const hfpq::BinaryWord& w) const noexcept { return hfpq::BinaryWordHash{}(w); }
};
