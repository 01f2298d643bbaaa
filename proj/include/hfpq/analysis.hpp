#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hfpq/core.hpp"
#include "hfpq/group_table.hpp"
#include "hfpq/typeq.hpp"

namespace hfpq {

// ---------------------------------------------------------------------------
// HFP verification

enum class HfpViolation {
  None,
  DuplicateCodeword,
  WeightViolation,
  FixedPointViolation,
  IdentityPermViolation,
  HomomorphismViolation,
  RelationViolation,
};

const char* to_string(HfpViolation v);

struct HfpVerdict {
  bool ok = true;
  HfpViolation violation = HfpViolation::None;
  /// Offending element (for duplicates: the second of the two).
  std::optional<GroupElement> witness;
  std::string detail;

  std::string describe() const;
};

/// Permutations attached to the generators; defaults to π_a, π_b of canonical_perm.
struct GeneratorPerms {
  Perm pi_a;
  Perm pi_b;

  static GeneratorPerms canonical(int n) { return {canonical_perm_a(n), canonical_perm_b(n)}; }
};

/// Checks, in order: all 8n element vectors distinct; weight 2n for every
/// element outside {e, u}; π_g fixed-point-free outside {e, u}; π_e = π_u = I;
/// π multiplicative on generator pairs; the type-Q relations on vectors
/// (a^{4n} = e, a^{2n} = u, b² = u, ab = ba⁻¹). Stops at the first failure.
HfpVerdict verify_hfp(const TypeQCode& code);
HfpVerdict verify_hfp(const TypeQCode& code, const GeneratorPerms& perms);

/// Only the type-Q relations on vectors.
bool satisfies_type_q_relations(const TypeQCode& code);

// ---------------------------------------------------------------------------
// Hadamard groups

enum class HadamardGroupCondition {
  None,
  Size,
  CentralInvolution,
  Partition,     // D ∩ uD = ∅ and D ∪ uD = G
  ConditionI,    // |aD ∩ D| = 2n for a ∉ ⟨u⟩
  ConditionII,   // |aD ∩ {b, bu}| = 1
};

struct HadamardGroupVerdict {
  bool ok = true;
  HadamardGroupCondition failed = HadamardGroupCondition::None;
  std::optional<ElementId> witness_a;
  std::optional<ElementId> witness_b;
  std::string detail;

  std::string describe() const;
};

/// Exhaustive check that (G, D, u) is a left Hadamard group.
HadamardGroupVerdict verify_hadamard_group(const GroupTable& table, std::span<const ElementId> d, ElementId u);
/// Right Hadamard group: |D ∩ Dx| = 2n, checked as a left group over G^op.
HadamardGroupVerdict verify_right_hadamard_group(const GroupTable& table, std::span<const ElementId> d, ElementId u);

/// Ids (group::index) of the elements whose vectors have first bit 0.
std::vector<ElementId> d1_elements(const TypeQCode& code);
/// Inverses of d1_elements.
std::vector<ElementId> d1_inverse_elements(const TypeQCode& code);

// ---------------------------------------------------------------------------
// Rank and kernel

/// Dimension of the GF(2) span. Throws SizeMismatch on mixed lengths.
std::size_t compute_rank(std::span<const BinaryWord> words);

struct KernelInfo {
  std::size_t dimension = 0;
  /// Starts with u when u ∈ K(C); further vectors have first bit 0.
  std::vector<BinaryWord> basis;
  /// All of K(C), sorted.
  std::vector<BinaryWord> elements;

  bool contains(const BinaryWord& z) const;
};

/// K(C) = {z : C + z = C}, scanning z over the codewords (valid because e ∈ C).
/// Throws std::invalid_argument if the zero word is absent.
KernelInfo compute_kernel(std::span<const BinaryWord> codewords);

/// Basis of the span of `words`, reduced greedily in the given order.
std::vector<BinaryWord> span_basis(std::span<const BinaryWord> words);

/// Codewords z whose permutation π_z maps C onto itself.
std::vector<BinaryWord> kernel_via_automorphisms(const TypeQCode& code);

/// Rank of span{a, xa, …, x^{2n−1}a, κ}; κ taken as the vector of a^ι b.
/// Throws KernelPrecondition when the code has no iota.
std::size_t rank_from_generators(const TypeQCode& code);

/// Exponent ι in [0, 2n) with a^ι b ∈ K(C), if any.
std::optional<int> find_kernel_iota(const TypeQCode& code);

bool is_linear(std::span<const BinaryWord> codewords);

/// Restricts every codeword to Supp(s) and returns the distinct results,
/// sorted. Throws NotKernelElement when s ∉ K(C), std::invalid_argument for s ∈ {e, u}.
std::vector<BinaryWord> project_onto_support(std::span<const BinaryWord> codewords, const BinaryWord& s);

// ---------------------------------------------------------------------------
// Report and classification

struct AnalysisReport {
  std::size_t length = 0;
  int s = 0;        // 4n = 2^s · n_prime
  int n_prime = 0;  // odd part of 4n
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  std::vector<BinaryWord> kernel_basis;
  bool is_linear = false;
  bool is_hfp = false;
  bool is_type_q = false;
  bool generator_in_kernel = false;
  std::vector<std::string> bound_violations;
};

/// 4n = 2^s · n' with n' odd.
std::pair<int, int> two_adic_split(std::size_t length);

/// Runs verification, rank, kernel and classify.
AnalysisReport analyze(const TypeQCode& code);

/// Every proved bound that the report violates; empty when consistent.
std::vector<std::string> classify(const AnalysisReport& report);

/// Throws BoundViolation if classify reports anything.
void enforce_bounds(const AnalysisReport& report);

}  // namespace hfpq
