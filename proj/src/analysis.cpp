#include "hfpq/analysis.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "hfpq/error.hpp"

namespace hfpq {

namespace {

using WordSet = std::unordered_set<BinaryWord, BinaryWordHash>;

WordSet to_set(std::span<const BinaryWord> words) { return WordSet(words.begin(), words.end()); }

std::vector<BinaryWord> distinct_sorted(std::span<const BinaryWord> words) {
  std::vector<BinaryWord> out(words.begin(), words.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

HfpVerdict fail(HfpViolation v, std::optional<GroupElement> witness, std::string detail) {
  return {false, v, witness, std::move(detail)};
}

bool translation_invariant(const WordSet& code, const BinaryWord& z) {
  for (const BinaryWord& c : code)
    if (!code.contains(c ^ z)) return false;
  return true;
}

}  // namespace

const char* to_string(HfpViolation v) {
  switch (v) {
    case HfpViolation::None: return "None";
    case HfpViolation::DuplicateCodeword: return "DuplicateCodeword";
    case HfpViolation::WeightViolation: return "WeightViolation";
    case HfpViolation::FixedPointViolation: return "FixedPointViolation";
    case HfpViolation::IdentityPermViolation: return "IdentityPermViolation";
    case HfpViolation::HomomorphismViolation: return "HomomorphismViolation";
    case HfpViolation::RelationViolation: return "RelationViolation";
  }
  return "Unknown";
}

std::string HfpVerdict::describe() const {
  if (ok) return "pass";
  std::string s = to_string(violation);
  if (witness) s += " at " + group::to_string(*witness);
  if (!detail.empty()) s += ": " + detail;
  return s;
}

bool satisfies_type_q_relations(const TypeQCode& code) {
  const int n = code.n();
  const Realization r = code.realize();
  const std::size_t length = code.length();
  const BinaryWord u = BinaryWord::ones(length);
  if (!r.a_to_4n.is_zero() || r.vector(group::central_involution(n)) != u) return false;
  const Perm pi_b = canonical_perm_b(n);
  if ((code.b() ^ apply_perm(pi_b, code.b())) != u) return false;
  // ab = b a⁻¹ with b·a^{4n−1} = b + π_b(vec(a^{4n−1}))
  const BinaryWord b_a_inv = code.b() ^ apply_perm(pi_b, r.vector(group::a(4 * n - 1)));
  return r.vector({1, true}) == b_a_inv;
}

HfpVerdict verify_hfp(const TypeQCode& code) { return verify_hfp(code, GeneratorPerms::canonical(code.n())); }

HfpVerdict verify_hfp(const TypeQCode& code, const GeneratorPerms& perms) {
  const int n = code.n();
  const std::size_t length = code.length();
  const Realization r = realize(n, code.a(), code.b(), perms.pi_a, perms.pi_b);
  const GroupElement u_elem = group::central_involution(n);
  const auto is_trivial = [&](GroupElement g) { return g == group::identity() || g == u_elem; };
  const std::vector<GroupElement> elems = group::elements(n);

  std::unordered_map<BinaryWord, GroupElement, BinaryWordHash> seen;
  for (GroupElement g : elems) {
    auto [it, inserted] = seen.emplace(r.vector(g), g);
    if (!inserted)
      return fail(HfpViolation::DuplicateCodeword, g, "same vector as " + group::to_string(it->second));
  }

  for (GroupElement g : elems) {
    if (is_trivial(g)) continue;
    const std::size_t w = r.vector(g).weight();
    if (w != static_cast<std::size_t>(2 * n))
      return fail(HfpViolation::WeightViolation, g,
                  "weight " + std::to_string(w) + ", expected " + std::to_string(2 * n));
  }

  for (GroupElement g : elems) {
    if (is_trivial(g)) continue;
    if (r.perm(g).has_fixed_point())
      return fail(HfpViolation::FixedPointViolation, g,
                  "permutation fixes position " + std::to_string(r.perm(g).fixed_points().front()));
  }

  if (!r.perm(group::identity()).is_identity() || !r.perm(u_elem).is_identity())
    return fail(HfpViolation::IdentityPermViolation, u_elem, "pi_u is not the identity");
  if (!compose(r.perm(group::a(4 * n - 1)), perms.pi_a).is_identity())
    return fail(HfpViolation::HomomorphismViolation, group::a(), "pi_a^{4n} is not the identity");

  const GroupElement generators[] = {group::a(), group::b()};
  for (GroupElement g : generators)
    for (GroupElement h : generators) {
      const Perm& lhs = r.perm(group::mul(g, h, n));
      if (lhs != compose(r.perm(g), r.perm(h)))
        return fail(HfpViolation::HomomorphismViolation, group::mul(g, h, n),
                    "pi_{" + group::to_string(g) + group::to_string(h) + "} != pi_" + group::to_string(g) + " pi_" +
                        group::to_string(h));
    }

  const BinaryWord u = BinaryWord::ones(length);
  if (!r.a_to_4n.is_zero()) return fail(HfpViolation::RelationViolation, group::a(4 * n), "a^{4n} != e");
  if (r.vector(u_elem) != u) return fail(HfpViolation::RelationViolation, u_elem, "a^{2n} != u");
  if ((code.b() ^ apply_perm(perms.pi_b, code.b())) != u)
    return fail(HfpViolation::RelationViolation, group::b(), "b^2 != u");
  const BinaryWord b_a_inv = code.b() ^ apply_perm(perms.pi_b, r.vector(group::a(4 * n - 1)));
  if (r.vector({1, true}) != b_a_inv) return fail(HfpViolation::RelationViolation, GroupElement{1, true}, "ab != ba^{-1}");

  return {};
}

// ---------------------------------------------------------------------------

const char* condition_name(HadamardGroupCondition c) {
  switch (c) {
    case HadamardGroupCondition::None: return "None";
    case HadamardGroupCondition::Size: return "Size";
    case HadamardGroupCondition::CentralInvolution: return "CentralInvolution";
    case HadamardGroupCondition::Partition: return "Partition";
    case HadamardGroupCondition::ConditionI: return "ConditionI";
    case HadamardGroupCondition::ConditionII: return "ConditionII";
  }
  return "Unknown";
}

std::string HadamardGroupVerdict::describe() const {
  if (ok) return "pass";
  std::string s = condition_name(failed);
  if (witness_a) s += " a=" + std::to_string(*witness_a);
  if (witness_b) s += " b=" + std::to_string(*witness_b);
  if (!detail.empty()) s += ": " + detail;
  return s;
}

HadamardGroupVerdict verify_hadamard_group(const GroupTable& table, std::span<const ElementId> d, ElementId u) {
  using C = HadamardGroupCondition;
  const std::size_t order = table.order();
  if (order % 8 != 0 || d.size() * 2 != order)
    return {false, C::Size, {}, {}, "|G| must be 8n and |D| = 4n"};

  std::vector<bool> in_d(order, false);
  for (ElementId x : d) {
    if (x >= order || in_d[x]) return {false, C::Size, x, {}, "D has repeated or out-of-range elements"};
    in_d[x] = true;
  }

  const ElementId e = table.identity();
  if (u >= order || u == e || table.mul(u, u) != e || !table.is_central(u))
    return {false, C::CentralInvolution, {}, {}, "u is not a central involution"};

  for (ElementId x : d)
    if (in_d[table.mul(u, x)]) return {false, C::Partition, x, {}, "D and uD intersect"};

  const std::size_t half = d.size() / 2;
  for (std::size_t a = 0; a < order; ++a) {
    const auto aid = static_cast<ElementId>(a);
    if (aid == e || aid == u) continue;
    std::size_t common = 0;
    for (ElementId x : d) common += in_d[table.mul(aid, x)] ? 1 : 0;
    if (common != half)
      return {false, C::ConditionI, aid, {}, "|aD ∩ D| = " + std::to_string(common) + ", expected " + std::to_string(half)};
  }

  // b ∈ aD ⇔ a⁻¹b ∈ D
  for (std::size_t a = 0; a < order; ++a) {
    const ElementId a_inv = table.inverse(static_cast<ElementId>(a));
    for (std::size_t b = 0; b < order; ++b) {
      const ElementId x = table.mul(a_inv, static_cast<ElementId>(b));
      const int hits = (in_d[x] ? 1 : 0) + (in_d[table.mul(x, u)] ? 1 : 0);
      if (hits != 1)
        return {false, C::ConditionII, static_cast<ElementId>(a), static_cast<ElementId>(b),
                "|aD ∩ {b, bu}| = " + std::to_string(hits)};
    }
  }
  return {};
}

HadamardGroupVerdict verify_right_hadamard_group(const GroupTable& table, std::span<const ElementId> d, ElementId u) {
  return verify_hadamard_group(table.opposite(), d, u);
}

std::vector<ElementId> d1_elements(const TypeQCode& code) {
  const Realization r = code.realize();
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < r.vectors.size(); ++i)
    if (!r.vectors[i].test(0)) out.push_back(static_cast<ElementId>(i));
  return out;
}

std::vector<ElementId> d1_inverse_elements(const TypeQCode& code) {
  const int n = code.n();
  std::vector<ElementId> out;
  for (ElementId x : d1_elements(code))
    out.push_back(static_cast<ElementId>(group::index(group::inverse(group::from_index(x, n), n), n)));
  return out;
}

// ---------------------------------------------------------------------------

std::vector<BinaryWord> span_basis(std::span<const BinaryWord> words) {
  std::vector<BinaryWord> basis;
  std::vector<std::size_t> pivots;
  for (const BinaryWord& w0 : words) {
    if (!basis.empty() && w0.size() != basis.front().size()) throw SizeMismatch("span_basis: mixed word lengths");
    BinaryWord w = w0;
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (w.test(pivots[j])) w ^= basis[j];
    if (w.is_zero()) continue;
    std::size_t p = 0;
    while (!w.test(p)) ++p;
    basis.push_back(std::move(w));
    pivots.push_back(p);
  }
  return basis;
}

std::size_t compute_rank(std::span<const BinaryWord> words) {
  for (const BinaryWord& w : words)
    if (w.size() != words.front().size()) throw SizeMismatch("compute_rank: mixed word lengths");
  return span_basis(words).size();
}

bool KernelInfo::contains(const BinaryWord& z) const { return std::binary_search(elements.begin(), elements.end(), z); }

KernelInfo compute_kernel(std::span<const BinaryWord> codewords) {
  if (codewords.empty()) throw std::invalid_argument("compute_kernel: empty code");
  const std::size_t length = codewords.front().size();
  for (const BinaryWord& w : codewords)
    if (w.size() != length) throw SizeMismatch("compute_kernel: mixed word lengths");
  const WordSet code = to_set(codewords);
  if (!code.contains(BinaryWord(length))) throw std::invalid_argument("compute_kernel: the zero word is not a codeword");

  KernelInfo info;
  for (const BinaryWord& z : code)
    if (translation_invariant(code, z)) info.elements.push_back(z);
  std::sort(info.elements.begin(), info.elements.end());

  std::vector<BinaryWord> ordered;
  const BinaryWord u = BinaryWord::ones(length);
  if (info.contains(u)) ordered.push_back(u);
  for (const BinaryWord& z : info.elements) ordered.push_back(d1_representative(z));
  // Greedy selection keeps the original vectors rather than their reductions.
  std::vector<BinaryWord> chosen;
  for (const BinaryWord& z : ordered) {
    std::vector<BinaryWord> trial = chosen;
    trial.push_back(z);
    if (span_basis(trial).size() == trial.size()) chosen = std::move(trial);
  }
  info.basis = std::move(chosen);
  info.dimension = info.basis.size();
  return info;
}

std::vector<BinaryWord> kernel_via_automorphisms(const TypeQCode& code) {
  const Realization r = code.realize();
  const WordSet set = to_set(r.vectors);
  std::vector<BinaryWord> out;
  for (std::size_t i = 0; i < r.vectors.size(); ++i) {
    bool automorphism = true;
    for (const BinaryWord& c : r.vectors)
      if (!set.contains(apply_perm(r.perms[i], c))) {
        automorphism = false;
        break;
      }
    if (automorphism) out.push_back(r.vectors[i]);
  }
  return distinct_sorted(out);
}

std::size_t rank_from_generators(const TypeQCode& code) {
  if (!code.iota()) throw KernelPrecondition("rank_from_generators needs the kernel exponent iota");
  const int n = code.n();
  std::vector<BinaryWord> gens;
  const Perm pi_a = canonical_perm_a(n);
  BinaryWord shifted = code.a();
  for (int j = 0; j < 2 * n; ++j) {
    gens.push_back(shifted);
    shifted = apply_perm(pi_a, shifted);
  }
  gens.push_back(code.element_vector({*code.iota(), true}));
  return compute_rank(gens);
}

std::optional<int> find_kernel_iota(const TypeQCode& code) {
  const Realization r = code.realize();
  const WordSet set = to_set(r.vectors);
  for (int iota = 0; iota < 2 * code.n(); ++iota)
    if (translation_invariant(set, r.vector({iota, true}))) return iota;
  return std::nullopt;
}

bool is_linear(std::span<const BinaryWord> codewords) {
  const WordSet set = to_set(codewords);
  for (const BinaryWord& x : set)
    for (const BinaryWord& y : set)
      if (!set.contains(x ^ y)) return false;
  return true;
}

std::vector<BinaryWord> project_onto_support(std::span<const BinaryWord> codewords, const BinaryWord& s) {
  if (s.is_zero() || s.weight() == s.size())
    throw std::invalid_argument("project_onto_support: s must differ from e and u");
  const WordSet set = to_set(codewords);
  for (const BinaryWord& c : set)
    if (c.size() != s.size()) throw SizeMismatch("project_onto_support: length mismatch");
  if (!translation_invariant(set, s)) throw NotKernelElement("s = " + s.to_string() + " is not in K(C)");

  const std::vector<std::size_t> support = s.support();
  std::vector<BinaryWord> out;
  out.reserve(set.size());
  for (const BinaryWord& c : set) {
    BinaryWord p(support.size());
    for (std::size_t k = 0; k < support.size(); ++k) p.set(k, c.test(support[k] - 1));
    out.push_back(std::move(p));
  }
  return distinct_sorted(out);
}

// ---------------------------------------------------------------------------

std::pair<int, int> two_adic_split(std::size_t length) {
  if (length == 0) throw std::invalid_argument("length must be positive");
  const int s = std::countr_zero(length);
  return {s, static_cast<int>(length >> s)};
}

AnalysisReport analyze(const TypeQCode& code) {
  AnalysisReport rep;
  rep.length = code.length();
  std::tie(rep.s, rep.n_prime) = two_adic_split(rep.length);
  const std::vector<BinaryWord> words = code.codewords();
  rep.rank = compute_rank(words);
  KernelInfo kernel = compute_kernel(words);
  rep.kernel_dim = kernel.dimension;
  rep.kernel_basis = std::move(kernel.basis);
  rep.is_linear = is_linear(words);
  rep.is_type_q = satisfies_type_q_relations(code);
  rep.is_hfp = verify_hfp(code).ok;
  rep.generator_in_kernel = kernel.contains(code.a());
  if (rep.is_hfp) rep.bound_violations = classify(rep);
  return rep;
}

std::vector<std::string> classify(const AnalysisReport& r) {
  std::vector<std::string> v;
  if (!r.is_hfp) {
    v.emplace_back("report does not describe a verified HFP code");
    return v;
  }
  const std::size_t length = r.length;
  const std::size_t k = r.kernel_dim;
  const auto s = static_cast<std::size_t>(r.s);
  if (r.n_prime % 2 == 0 || (static_cast<std::size_t>(r.n_prime) << s) != length)
    v.emplace_back("length != 2^s * n' with n' odd");
  if (r.kernel_basis.size() != k) v.emplace_back("kernel basis size differs from kernel_dim");

  if (r.is_linear) {
    if (r.n_prime != 1) v.emplace_back("linear code with length not a power of two");
    if (r.rank != s + 1 || k != s + 1) v.emplace_back("linear code must have r = k = s + 1");
  } else {
    if (s == 2 && (r.rank != length - 1 || k != 1)) v.emplace_back("s = 2 requires r = 4n - 1 and k = 1");
    if (s == 3 && r.rank != length / 2) v.emplace_back("s = 3 requires r = 2n");
    if (s > 3 && r.rank > length / 2) v.emplace_back("s > 3 requires r <= 2n");
    if (s >= 3 && (k < 1 || k > 2)) v.emplace_back("s >= 3 requires k in {1, 2}");
    if (k < 1 || k + 1 > s) v.emplace_back("nonlinear code requires 1 <= k <= s - 1");
    if (r.generator_in_kernel) v.emplace_back("nonlinear code with a in K(C)");
  }

  // r <= 2^{s+1} n' / 2^k + k - 1  ⇔  (r - k + 1) · 2^k <= 2^{s+1} n'
  if (r.rank + 1 > k) {
    const unsigned long long lhs = static_cast<unsigned long long>(r.rank + 1 - k) << k;
    const unsigned long long rhs = static_cast<unsigned long long>(r.n_prime) << (s + 1);
    if (lhs > rhs) v.emplace_back("rank exceeds 2^{s+1} n' / 2^k + k - 1");
  }
  return v;
}

void enforce_bounds(const AnalysisReport& report) {
  const std::vector<std::string> v = classify(report);
  if (v.empty()) return;
  std::string msg = "bound violation:";
  for (const auto& s : v) msg += " [" + s + "]";
  throw BoundViolation(msg);
}

}  // namespace hfpq
