#include "hfpq/search.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <iostream>
#include <map>
#include <stdexcept>

#include "hfpq/analysis.hpp"
#include "hfpq/packed.hpp"

namespace hfpq {

using packed::Word;

namespace {

struct Hit {
  Word a;
  Word b;
  int iota;  // -1 when unknown
  bool linear;
};

std::uint64_t capped(std::uint64_t space, const SearchOptions& opt) {
  return opt.limit ? std::min(space, *opt.limit) : space;
}

int worker_count(const SearchOptions& opt) { return opt.threads > 0 ? opt.threads : omp_get_max_threads(); }

// Kernel exponent of a hit, by checking each a^ι b against the kernel list.
int kernel_iota(const std::vector<Word>& vectors, const std::vector<Word>& kernel, int n) {
  for (int i = 0; i < 2 * n; ++i)
    if (std::binary_search(kernel.begin(), kernel.end(), vectors[4 * n + i])) return i;
  return -1;
}

SearchResult assemble(int n, std::vector<std::vector<Hit>>& per_worker, std::uint64_t scanned, std::uint64_t space) {
  SearchResult r;
  r.n = n;
  r.scanned = scanned;
  r.space = space;
  r.truncated = scanned < space;
  for (auto& hits : per_worker)
    for (const Hit& h : hits) {
      std::optional<int> iota;
      if (h.iota >= 0) iota = h.iota;
      TypeQCode code = TypeQCode::unchecked(n, packed::from_packed(h.a, n), packed::from_packed(h.b, n), iota);
      (h.linear ? r.linear_hits : r.codes).push_back(std::move(code));
    }
  canonicalize_results(r.codes);
  canonicalize_results(r.linear_hits);
  return r;
}

void report(const char* what, const SearchResult& r, const SearchOptions& opt) {
  if (!opt.progress) return;
  std::cerr << what << " n=" << r.n << ": scanned " << r.scanned << "/" << r.space << ", " << r.codes.size()
            << " codes";
  if (!r.linear_hits.empty()) std::cerr << ", " << r.linear_hits.size() << " linear";
  std::cerr << (r.truncated ? " (capped)" : "") << '\n';
}

}  // namespace

void canonicalize_results(std::vector<TypeQCode>& codes) {
  std::sort(codes.begin(), codes.end(), [](const TypeQCode& x, const TypeQCode& y) {
    if (x.a() != y.a()) return x.a() < y.a();
    return x.iota().value_or(-1) < y.iota().value_or(-1);
  });
  std::vector<TypeQCode> kept;
  std::map<std::vector<BinaryWord>, bool> seen;
  for (TypeQCode& c : codes)
    if (seen.emplace(c.sorted_codewords(), true).second) kept.push_back(std::move(c));
  codes = std::move(kept);
}

SearchResult search_k2(int n, const SearchOptions& opt) {
  const packed::Layout L(n);
  const int m = 2 * n;
  const std::uint64_t per_iota = std::uint64_t{1} << m;
  const std::uint64_t space = static_cast<std::uint64_t>(m) * per_iota;
  const std::uint64_t todo = capped(space, opt);
  const int workers = worker_count(opt);
  std::vector<std::vector<Hit>> hits(static_cast<std::size_t>(workers));

  std::vector<Word> kappas(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) kappas[static_cast<std::size_t>(i)] = packed::to_packed(kappa_vector(i, n));

#pragma omp parallel num_threads(workers)
  {
    std::vector<Word> vectors(static_cast<std::size_t>(8 * n)), sorted(static_cast<std::size_t>(8 * n));
    auto& mine = hits[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::uint64_t idx = 0; idx < todo; ++idx) {
      const int iota = static_cast<int>(idx / per_iota);
      const Word a1 = idx % per_iota;
      if (std::popcount(a1) % 2 == 0) continue;
      // a2 = x^{ι+1} φ1(a1) + u
      Word a2 = 0;
      for (int i = 0; i < m; ++i)
        if ((a1 >> i) & 1U) a2 |= Word{1} << ((m - 1 - i + iota + 1) % m);
      a2 ^= L.half_mask;
      const Word a = a1 | (a2 << m);
      const auto b = packed::derive_b(a, L);
      if (!b || !packed::realize(a, *b, L, vectors.data())) continue;
      std::copy(vectors.begin(), vectors.end(), sorted.begin());
      if (!packed::is_hfp(a, *b, L, sorted.data())) continue;
      const std::vector<Word> k = packed::kernel(sorted.data(), sorted.size());
      if (k.size() > 4) {
        mine.push_back({a, *b, kernel_iota(vectors, k, n), true});
        continue;
      }
      const Word kappa = kappas[static_cast<std::size_t>(iota)];
      const Word kernel_word = vectors[static_cast<std::size_t>(4 * n + iota)];
      if (k.size() == 4 && std::binary_search(k.begin(), k.end(), kappa) &&
          std::binary_search(k.begin(), k.end(), kernel_word))
        mine.push_back({a, *b, iota, false});
    }
  }
  SearchResult r = assemble(n, hits, todo, space);
  report("search_k2", r, opt);
  return r;
}

SearchResult search_general(int n, const SearchOptions& opt) {
  const packed::Layout L(n);
  if (4 * n >= 64) throw std::out_of_range("search_general enumerates 2^{4n} words; n too large");
  const std::uint64_t space = std::uint64_t{1} << (4 * n);
  const std::uint64_t todo = capped(space, opt);
  const int workers = worker_count(opt);
  std::vector<std::vector<Hit>> hits(static_cast<std::size_t>(workers));

#pragma omp parallel num_threads(workers)
  {
    std::vector<Word> vectors(static_cast<std::size_t>(8 * n)), sorted(static_cast<std::size_t>(8 * n));
    auto& mine = hits[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::uint64_t a = 0; a < todo; ++a) {
      const auto b = packed::derive_b(a, L);
      if (!b || !packed::realize(a, *b, L, vectors.data())) continue;
      std::copy(vectors.begin(), vectors.end(), sorted.begin());
      if (!packed::is_hfp(a, *b, L, sorted.data())) continue;
      const std::vector<Word> k = packed::kernel(sorted.data(), sorted.size());
      mine.push_back({a, *b, kernel_iota(vectors, k, n), false});
    }
  }
  SearchResult r = assemble(n, hits, todo, space);
  report("search_general", r, opt);
  return r;
}

const char* to_string(Existence e) {
  switch (e) {
    case Existence::Yes: return "yes";
    case Existence::No: return "no";
    case Existence::Unknown: return "unknown";
  }
  return "unknown";
}

std::vector<ItoRow> ito_scan(int n_max, const SearchOptions& opt) {
  std::vector<ItoRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    ItoRow row;
    row.n = n;
    const SearchResult k2 = search_k2(n, opt);
    if (!k2.codes.empty()) {
      row.witness = k2.codes.front();
    } else if (!k2.linear_hits.empty()) {
      row.witness = k2.linear_hits.front();
    } else {
      const SearchResult general = search_general(n, opt);
      if (!general.codes.empty()) {
        row.witness = general.codes.front();
      } else {
        row.exists = general.truncated ? Existence::Unknown : Existence::No;
      }
    }
    if (row.witness) row.exists = Existence::Yes;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hfpq
