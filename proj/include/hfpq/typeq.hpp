#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hfpq/core.hpp"
#include "hfpq/gf2poly.hpp"

namespace hfpq {

/// Splits a word of length 4n into its two half polynomials (a1, a2) mod x^{2n} − 1.
std::pair<Gf2Poly, Gf2Poly> split_halves(const BinaryWord& w);
BinaryWord join_halves(const Gf2Poly& first, const Gf2Poly& second);

/// Representative with first bit 0 (membership in D1).
BinaryWord d1_representative(const BinaryWord& w);

/// Solves b_i(x)(x+1) = a_i(x) + x·φ1(a_{i'}(x)) for both halves and pins the
/// pair down with b² = u. The returned b has first bit 0; the only other
/// solution is its complement. Throws NotTypeQCandidate.
BinaryWord derive_b(const BinaryWord& a, int n);

/// a2(x) = x^{ι+1} φ1(a1(x)) + u(x).
Gf2Poly derive_a2(const Gf2Poly& a1, int iota, int n);

/// (v‖v) for even ι, (v‖v+u) for odd ι, with v = (0,1,…,0,1) of length 2n.
BinaryWord kappa_vector(int iota, int n);

/// Vectors and permutations of all 8n elements a^i b^j, in group::index order.
struct Realization {
  int n = 0;
  std::vector<BinaryWord> vectors;
  std::vector<Perm> perms;
  /// Vector of a^{4n}; the zero word when the generator has order dividing 4n.
  BinaryWord a_to_4n;

  const BinaryWord& vector(GroupElement g) const { return vectors[group::index(g, n)]; }
  const Perm& perm(GroupElement g) const { return perms[group::index(g, n)]; }
};

/// Iterates the propelinear law from generators with the given permutations.
Realization realize(int n, const BinaryWord& a, const BinaryWord& b, const Perm& pi_a, const Perm& pi_b);

/// An HFP-code of type Q described by its generators under the canonical permutations.
class TypeQCode {
 public:
  /// Derives b from a. Throws NotTypeQCandidate if that is impossible.
  static TypeQCode from_generator(int n, BinaryWord a, std::optional<int> iota = std::nullopt);
  /// Accepts b only if it equals derive_b(a) up to complement.
  static TypeQCode from_generators(int n, BinaryWord a, BinaryWord b, std::optional<int> iota = std::nullopt);
  /// No consistency checks at all; for building deliberately broken inputs.
  static TypeQCode unchecked(int n, BinaryWord a, BinaryWord b, std::optional<int> iota = std::nullopt);

  int n() const noexcept { return n_; }
  std::size_t length() const noexcept { return static_cast<std::size_t>(4 * n_); }
  const BinaryWord& a() const noexcept { return a_; }
  const BinaryWord& b() const noexcept { return b_; }
  std::optional<int> iota() const noexcept { return iota_; }
  TypeQCode with_iota(std::optional<int> iota) const;

  Realization realize() const;
  BinaryWord element_vector(GroupElement g) const;
  /// All 8n codewords in group::index order.
  std::vector<BinaryWord> codewords() const { return realize().vectors; }
  /// Codewords sorted; equal for codes with the same codeword set.
  std::vector<BinaryWord> sorted_codewords() const;
  /// γ_g: first bit of the vector of g.
  bool gamma(GroupElement g) const;
  /// g or g·u, whichever has first bit 0.
  GroupElement d1_element(GroupElement g) const;

 private:
  TypeQCode(int n, BinaryWord a, BinaryWord b, std::optional<int> iota);

  int n_ = 0;
  BinaryWord a_;
  BinaryWord b_;
  std::optional<int> iota_;
};

/// Group elements indexing the rows and columns of the normalized matrix.
///
/// Column j (coordinate position j+1) is indexed by the unique x ∈ D1 with
/// e1 = π_x(e_{j+1}): e, a⁻¹, …, a^{−(2n−1)}, ab, a²b, …, a^{2n}b. Rows are
/// ordered e, a, …, a^{2n−1}, ab, …, a^{2n}b, which is the coordinate order of
/// the transpose code. Every entry is the D1 representative.
struct CoordinateIndex {
  std::vector<GroupElement> row_order;
  std::vector<GroupElement> col_order;
};

CoordinateIndex coordinate_index(const TypeQCode& code);

struct HadamardMatrixQ {
  std::size_t order = 0;
  std::vector<BinaryWord> rows;
  CoordinateIndex index;

  bool entry(std::size_t row, std::size_t col) const { return rows[row].test(col); }
  /// Columns as words; row i of the result is column i of this matrix.
  std::vector<BinaryWord> columns() const;
};

/// Throws VerificationFailure unless the code passes verify_hfp.
HadamardMatrixQ build_matrix(const TypeQCode& code);

/// Bit at the coordinate indexed by `column` in the D1 representative of
/// `row`: γ_x + γ_y + γ_{xy} with x = column, y = row.
bool matrix_entry(GroupElement column, GroupElement row, const TypeQCode& code);

}  // namespace hfpq
