#include <algorithm>

#include "hfpq/analysis.hpp"
#include "hfpq/error.hpp"
#include "hfpq/search.hpp"

namespace hfpq::reference {

namespace {

BinaryWord word_from_index(std::uint64_t value, std::size_t length) {
  BinaryWord w(length);
  for (std::size_t i = 0; i < length; ++i)
    if ((value >> i) & 1U) w.set(i);
  return w;
}

std::uint64_t capped(std::uint64_t space, const SearchOptions& opt) {
  return opt.limit ? std::min(space, *opt.limit) : space;
}

}  // namespace

SearchResult search_k2(int n, const SearchOptions& opt) {
  const auto m = static_cast<std::size_t>(2 * n);
  const std::uint64_t per_iota = std::uint64_t{1} << m;
  SearchResult r;
  r.n = n;
  r.space = m * per_iota;
  r.scanned = capped(r.space, opt);
  r.truncated = r.scanned < r.space;
  for (std::uint64_t idx = 0; idx < r.scanned; ++idx) {
    const int iota = static_cast<int>(idx / per_iota);
    const Gf2Poly a1(word_from_index(idx % per_iota, m));
    if (a1.weight() % 2 == 0) continue;
    const BinaryWord a = join_halves(a1, derive_a2(a1, iota, n));
    std::optional<TypeQCode> code;
    try {
      code = TypeQCode::from_generator(n, a, iota);
    } catch (const NotTypeQCandidate&) {
      continue;
    }
    if (!verify_hfp(*code).ok) continue;
    const KernelInfo k = compute_kernel(code->codewords());
    if (k.dimension > 2) {
      r.linear_hits.push_back(code->with_iota(find_kernel_iota(*code)));
    } else if (k.dimension == 2 && k.contains(kappa_vector(iota, n)) &&
               k.contains(code->element_vector({iota, true}))) {
      r.codes.push_back(*code);
    }
  }
  canonicalize_results(r.codes);
  canonicalize_results(r.linear_hits);
  return r;
}

SearchResult search_general(int n, const SearchOptions& opt) {
  const auto length = static_cast<std::size_t>(4 * n);
  SearchResult r;
  r.n = n;
  r.space = std::uint64_t{1} << length;
  r.scanned = capped(r.space, opt);
  r.truncated = r.scanned < r.space;
  for (std::uint64_t value = 0; value < r.scanned; ++value) {
    std::optional<TypeQCode> code;
    try {
      code = TypeQCode::from_generator(n, word_from_index(value, length));
    } catch (const NotTypeQCandidate&) {
      continue;
    }
    if (!verify_hfp(*code).ok) continue;
    r.codes.push_back(code->with_iota(find_kernel_iota(*code)));
  }
  canonicalize_results(r.codes);
  return r;
}

}  // namespace hfpq::reference
