#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hfpq/typeq.hpp"

namespace hfpq {

struct SearchOptions {
  /// Worker count; 0 uses the OpenMP default.
  int threads = 0;
  /// Maximum number of candidates to scan; unset scans everything.
  std::optional<std::uint64_t> limit;
  /// Prints scanned/hit counts to stderr.
  bool progress = false;
};

struct SearchResult {
  int n = 0;
  /// Distinct codeword sets, ordered by a (then iota).
  std::vector<TypeQCode> codes;
  /// search_k2 only: verified candidates whose kernel has dimension > 2.
  std::vector<TypeQCode> linear_hits;
  std::uint64_t scanned = 0;
  std::uint64_t space = 0;
  bool truncated = false;
};

/// Structured family: ι ∈ [0, 2n), a1 of odd weight, a2 = derive_a2(a1, ι).
/// Keeps HFP codes whose kernel is {0, u, κ, κ+u} with κ = kappa_vector(ι, n)
/// and a^ι b ∈ K(C). Candidates are enumerated ι-major, a1 as an integer with
/// bit i the coefficient of x^i. Requires 1 <= n <= 16.
SearchResult search_k2(int n, const SearchOptions& options = {});

/// Every a ∈ GF(2)^{4n} (as an integer, bit i = position i+1) with a derivable b
/// and a verified code. Found codes carry iota when some a^ι b lies in K(C).
SearchResult search_general(int n, const SearchOptions& options = {});

/// Serial versions built on TypeQCode / verify_hfp / compute_kernel. Slow;
/// kept as the reference the parallel kernels are tested against.
namespace reference {
SearchResult search_k2(int n, const SearchOptions& options = {});
SearchResult search_general(int n, const SearchOptions& options = {});
}  // namespace reference

enum class Existence { Yes, No, Unknown };
const char* to_string(Existence e);

struct ItoRow {
  int n = 0;
  Existence exists = Existence::Unknown;
  std::optional<TypeQCode> witness;
};

/// For n = 1..n_max: the k=2 family first, then the general family. A capped
/// search that finds nothing reports Unknown.
std::vector<ItoRow> ito_scan(int n_max, const SearchOptions& options = {});

/// Sorts by (a, iota) and keeps the first code of each codeword set.
void canonicalize_results(std::vector<TypeQCode>& codes);

}  // namespace hfpq
