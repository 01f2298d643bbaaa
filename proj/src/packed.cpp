#include "hfpq/packed.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "hfpq/error.hpp"

namespace hfpq::packed {

Layout::Layout(int n_) : n(n_), half_bits(2 * n_) {
  if (n < 1 || n > kMaxN) throw std::out_of_range("packed words need 1 <= n <= 16");
  half_mask = (Word{1} << half_bits) - 1;
  full_mask = 4 * n == 64 ? ~Word{0} : (Word{1} << (4 * n)) - 1;
}

Word Layout::rot_a(Word v) const noexcept {
  const Word lo = v & half_mask;
  const Word hi = (v >> half_bits) & half_mask;
  const auto rot = [&](Word h) { return ((h << 1) | (h >> (half_bits - 1))) & half_mask; };
  return rot(lo) | (rot(hi) << half_bits);
}

Word Layout::rev(Word v) const noexcept {
  Word r = 0;
  for (int i = 0; i < 4 * n; ++i) r |= ((v >> i) & 1U) << (4 * n - 1 - i);
  return r;
}

Word to_packed(const BinaryWord& w) {
  if (w.size() > 64) throw SizeMismatch("packed words hold at most 64 bits");
  return w.blocks().empty() ? 0 : w.blocks()[0];
}

BinaryWord from_packed(Word w, int n) {
  BinaryWord out(static_cast<std::size_t>(4 * n));
  for (int i = 0; i < 4 * n; ++i)
    if ((w >> i) & 1U) out.set(static_cast<std::size_t>(i));
  return out;
}

namespace {

Word reverse_half(Word h, int bits) {
  Word r = 0;
  for (int i = 0; i < bits; ++i) r |= ((h >> i) & 1U) << (bits - 1 - i);
  return r;
}

Word rot1(Word h, int bits, Word mask) { return ((h << 1) | (h >> (bits - 1))) & mask; }

// q with (x+1)q = p and q_0 = 0: q_i = p_1 + … + p_i.
Word divide_by_x_plus_1(Word p, Word mask) {
  Word q = p & ~Word{1};
  for (int s = 1; s < 64; s <<= 1) q ^= q << s;
  return q & mask;
}

}  // namespace

std::optional<Word> derive_b(Word a, const Layout& L) {
  const int m = L.half_bits;
  const Word a1 = a & L.half_mask;
  const Word a2 = (a >> m) & L.half_mask;
  const Word d1 = a1 ^ rot1(reverse_half(a2, m), m, L.half_mask);
  const Word d2 = a2 ^ rot1(reverse_half(a1, m), m, L.half_mask);
  if (std::popcount(d1) % 2 != 0 || std::popcount(d2) % 2 != 0) return std::nullopt;
  const Word b1 = divide_by_x_plus_1(d1, L.half_mask);
  const Word q2 = divide_by_x_plus_1(d2, L.half_mask);
  const Word b2 = reverse_half(b1, m) ^ L.half_mask;
  if (b2 != q2 && b2 != (q2 ^ L.half_mask)) return std::nullopt;
  return b1 | (b2 << m);
}

bool realize(Word a, Word b, const Layout& L, Word* out) {
  const int four_n = 4 * L.n;
  Word v = 0, pa = a, pb = b;  // pa = π_a^i(a), pb = π_a^i(b)
  for (int i = 0; i < four_n; ++i) {
    out[i] = v;
    out[four_n + i] = v ^ pb;
    v ^= pa;
    pa = L.rot_a(pa);
    pb = L.rot_a(pb);
  }
  return v == 0;
}

bool is_hfp(Word a, Word b, const Layout& L, Word* scratch) {
  const int n = L.n;
  const int four_n = 4 * n;
  if (!realize(a, b, L, scratch)) return false;
  if (scratch[2 * n] != L.full_mask) return false;
  if ((b ^ L.rev(b)) != L.full_mask) return false;
  // vec(ab) = b + π_b(vec(a^{4n−1}))
  if (scratch[four_n + 1] != (b ^ L.rev(scratch[four_n - 1]))) return false;
  for (int i = 0; i < 2 * four_n; ++i) {
    if (i == 0 || i == 2 * n) continue;
    if (std::popcount(scratch[i]) != 2 * n) return false;
  }
  std::sort(scratch, scratch + 2 * four_n);
  return std::adjacent_find(scratch, scratch + 2 * four_n) == scratch + 2 * four_n;
}

std::vector<Word> kernel(const Word* sorted, std::size_t count) {
  std::vector<Word> k;
  for (std::size_t i = 0; i < count; ++i) {
    const Word z = sorted[i];
    bool ok = true;
    for (std::size_t j = 0; j < count && ok; ++j) ok = std::binary_search(sorted, sorted + count, sorted[j] ^ z);
    if (ok) k.push_back(z);
  }
  return k;
}

}  // namespace hfpq::packed
