#include "hfpq/core.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "hfpq/error.hpp"

namespace hfpq {

namespace {

std::size_t block_count(std::size_t length) { return (length + BinaryWord::kBlockBits - 1) / BinaryWord::kBlockBits; }

void require_same_length(std::size_t lhs, std::size_t rhs, const char* op) {
  if (lhs != rhs)
    throw SizeMismatch(std::string(op) + ": length " + std::to_string(lhs) + " vs " + std::to_string(rhs));
}

}  // namespace

BinaryWord::BinaryWord(std::size_t length) : length_(length), blocks_(block_count(length), 0) {}

BinaryWord BinaryWord::ones(std::size_t length) {
  BinaryWord w(length);
  std::fill(w.blocks_.begin(), w.blocks_.end(), ~Block{0});
  w.clear_tail();
  return w;
}

BinaryWord BinaryWord::unit(std::size_t length, std::size_t position) {
  if (position < 1 || position > length) throw std::out_of_range("unit vector position out of range");
  BinaryWord w(length);
  w.set(position - 1);
  return w;
}

BinaryWord BinaryWord::from_string(std::string_view bits) {
  BinaryWord w(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      w.set(i);
    else if (bits[i] != '0')
      throw std::invalid_argument("invalid bit character '" + std::string(1, bits[i]) + "' at index " +
                                  std::to_string(i));
  }
  return w;
}

BinaryWord BinaryWord::from_bits(std::initializer_list<int> bits) {
  BinaryWord w(bits.size());
  std::size_t i = 0;
  for (int b : bits) w.set(i++, b != 0);
  return w;
}

std::size_t BinaryWord::weight() const noexcept {
  std::size_t total = 0;
  for (Block b : blocks_) total += static_cast<std::size_t>(std::popcount(b));
  return total;
}

bool BinaryWord::is_zero() const noexcept {
  return std::all_of(blocks_.begin(), blocks_.end(), [](Block b) { return b == 0; });
}

BinaryWord BinaryWord::complement() const {
  BinaryWord w = *this;
  for (Block& b : w.blocks_) b = ~b;
  w.clear_tail();
  return w;
}

std::vector<std::size_t> BinaryWord::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < length_; ++i)
    if (test(i)) out.push_back(i + 1);
  return out;
}

BinaryWord BinaryWord::slice(std::size_t first, std::size_t count) const {
  if (first + count > length_) throw std::out_of_range("slice exceeds word length");
  BinaryWord w(count);
  for (std::size_t i = 0; i < count; ++i) w.set(i, test(first + i));
  return w;
}

BinaryWord BinaryWord::concat(const BinaryWord& tail) const {
  BinaryWord w(length_ + tail.length_);
  for (std::size_t i = 0; i < length_; ++i) w.set(i, test(i));
  for (std::size_t i = 0; i < tail.length_; ++i) w.set(length_ + i, tail.test(i));
  return w;
}

BinaryWord& BinaryWord::operator^=(const BinaryWord& other) {
  require_same_length(length_, other.length_, "xor");
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] ^= other.blocks_[i];
  return *this;
}

std::string BinaryWord::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

std::strong_ordering operator<=>(const BinaryWord& lhs, const BinaryWord& rhs) {
  if (auto c = lhs.length_ <=> rhs.length_; c != 0) return c;
  for (std::size_t i = 0; i < lhs.length_; ++i) {
    const bool l = lhs.test(i), r = rhs.test(i);
    if (l != r) return l ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

void BinaryWord::clear_tail() noexcept {
  const std::size_t used = length_ % kBlockBits;
  if (used != 0 && !blocks_.empty()) blocks_.back() &= (Block{1} << used) - 1;
}

std::size_t distance(const BinaryWord& x, const BinaryWord& y) { return (x ^ y).weight(); }

std::size_t BinaryWordHash::operator()(const BinaryWord& w) const noexcept {
  std::size_t h = w.size() * 0x9e3779b97f4a7c15ULL;
  for (auto b : w.blocks()) h ^= std::hash<std::uint64_t>{}(b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// ---------------------------------------------------------------------------
// Perm

Perm Perm::identity(std::size_t length) {
  Perm p;
  p.images_.resize(length);
  for (std::size_t i = 0; i < length; ++i) p.images_[i] = static_cast<std::uint32_t>(i);
  return p;
}

Perm Perm::from_images(std::vector<std::size_t> images) {
  Perm p;
  p.images_.resize(images.size());
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const std::size_t img = images[i];
    if (img < 1 || img > images.size() || seen[img - 1])
      throw std::invalid_argument("permutation images do not form a bijection on 1.." + std::to_string(images.size()));
    seen[img - 1] = true;
    p.images_[i] = static_cast<std::uint32_t>(img - 1);
  }
  return p;
}

Perm Perm::from_cycles(std::size_t length, const std::vector<std::vector<std::size_t>>& cycles) {
  std::vector<std::size_t> images(length);
  for (std::size_t i = 0; i < length; ++i) images[i] = i + 1;
  std::vector<bool> touched(length, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const std::size_t from = cycle[k];
      if (from < 1 || from > length || touched[from - 1])
        throw std::invalid_argument("cycles are not disjoint or out of range");
      touched[from - 1] = true;
      images[from - 1] = cycle[(k + 1) % cycle.size()];
    }
  }
  return from_images(std::move(images));
}

Perm Perm::inverse() const {
  Perm q;
  q.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) q.images_[images_[i]] = static_cast<std::uint32_t>(i);
  return q;
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

bool Perm::has_fixed_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] == i) return true;
  return false;
}

std::vector<std::size_t> Perm::fixed_points() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] == i) out.push_back(i + 1);
  return out;
}

std::vector<std::size_t> Perm::images() const {
  std::vector<std::size_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
  return out;
}

BinaryWord apply_perm(const Perm& p, const BinaryWord& w) {
  require_same_length(p.size(), w.size(), "apply_perm");
  BinaryWord out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w.test(i)) out.set(p.image_index(i));
  return out;
}

Perm compose(const Perm& p, const Perm& q) {
  require_same_length(p.size(), q.size(), "compose");
  std::vector<std::size_t> images(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) images[i] = p.image_index(q.image_index(i)) + 1;
  return Perm::from_images(std::move(images));
}

Perm perm_power(const Perm& p, long long exponent) {
  Perm base = exponent < 0 ? p.inverse() : p;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-exponent) : static_cast<unsigned long long>(exponent);
  Perm result = Perm::identity(p.size());
  while (e != 0) {
    if (e & 1U) result = compose(result, base);
    base = compose(base, base);
    e >>= 1U;
  }
  return result;
}

BinaryWord prop_mul(const BinaryWord& x, const Perm& pi_x, const BinaryWord& y) {
  require_same_length(x.size(), y.size(), "prop_mul");
  return x ^ apply_perm(pi_x, y);
}

BinaryWord prop_inverse(const BinaryWord& x, const Perm& pi_x) { return apply_perm(pi_x.inverse(), x); }

// ---------------------------------------------------------------------------
// Type-Q group in normal form a^i b^j

namespace group {

namespace {
int mod(long long value, int modulus) {
  const long long r = value % modulus;
  return static_cast<int>(r < 0 ? r + modulus : r);
}
}  // namespace

GroupElement normalize(GroupElement g, int n) { return {mod(g.exp_a, 4 * n), g.has_b}; }

GroupElement central_involution(int n) { return {2 * n, false}; }

GroupElement mul(GroupElement g, GroupElement h, int n) {
  const int four_n = 4 * n;
  // b a^j = a^{-j} b and b² = a^{2n}.
  if (!g.has_b) return {mod(static_cast<long long>(g.exp_a) + h.exp_a, four_n), h.has_b};
  if (!h.has_b) return {mod(static_cast<long long>(g.exp_a) - h.exp_a, four_n), true};
  return {mod(static_cast<long long>(g.exp_a) - h.exp_a + 2 * n, four_n), false};
}

GroupElement inverse(GroupElement g, int n) {
  if (!g.has_b) return {mod(-static_cast<long long>(g.exp_a), 4 * n), false};
  // (a^i b)² = u, so (a^i b)^{-1} = a^{i+2n} b.
  return {mod(static_cast<long long>(g.exp_a) + 2 * n, 4 * n), true};
}

int order(GroupElement g, int n) {
  g = normalize(g, n);
  GroupElement acc = g;
  int k = 1;
  while (acc != identity()) {
    acc = mul(acc, g, n);
    ++k;
  }
  return k;
}

std::size_t index(GroupElement g, int n) {
  g = normalize(g, n);
  return static_cast<std::size_t>(g.exp_a) + (g.has_b ? static_cast<std::size_t>(4 * n) : 0U);
}

GroupElement from_index(std::size_t idx, int n) {
  const auto four_n = static_cast<std::size_t>(4 * n);
  return {static_cast<int>(idx % four_n), idx >= four_n};
}

std::vector<GroupElement> elements(int n) {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(8 * n));
  for (std::size_t i = 0; i < static_cast<std::size_t>(8 * n); ++i) out.push_back(from_index(i, n));
  return out;
}

std::string to_string(GroupElement g) {
  std::string s;
  if (g.exp_a == 0 && !g.has_b) return "e";
  if (g.exp_a != 0) s = g.exp_a == 1 ? "a" : "a^" + std::to_string(g.exp_a);
  if (g.has_b) s += "b";
  return s;
}

}  // namespace group

Perm canonical_perm_a(int n) {
  const auto half = static_cast<std::size_t>(2 * n);
  std::vector<std::size_t> images(2 * half);
  for (std::size_t i = 0; i < half; ++i) {
    images[i] = (i + 1) % half + 1;
    images[half + i] = half + (i + 1) % half + 1;
  }
  return Perm::from_images(std::move(images));
}

Perm canonical_perm_b(int n) {
  const auto length = static_cast<std::size_t>(4 * n);
  std::vector<std::size_t> images(length);
  for (std::size_t i = 0; i < length; ++i) images[i] = length - i;
  return Perm::from_images(std::move(images));
}

Perm canonical_perm(GroupElement g, int n) {
  g = group::normalize(g, n);
  Perm p = perm_power(canonical_perm_a(n), g.exp_a);
  if (g.has_b) p = compose(p, canonical_perm_b(n));
  return p;
}

}  // namespace hfpq
