#include "hfpq/typeq.hpp"

#include <algorithm>

#include "hfpq/analysis.hpp"
#include "hfpq/error.hpp"

namespace hfpq {

std::pair<Gf2Poly, Gf2Poly> split_halves(const BinaryWord& w) {
  if (w.size() % 2 != 0) throw SizeMismatch("word of odd length has no halves");
  const std::size_t half = w.size() / 2;
  return {Gf2Poly(w.slice(0, half)), Gf2Poly(w.slice(half, half))};
}

BinaryWord join_halves(const Gf2Poly& first, const Gf2Poly& second) {
  if (first.modulus_degree() != second.modulus_degree()) throw SizeMismatch("halves of different length");
  return first.coeffs().concat(second.coeffs());
}

BinaryWord d1_representative(const BinaryWord& w) { return (!w.empty() && w.test(0)) ? w.complement() : w; }

BinaryWord derive_b(const BinaryWord& a, int n) {
  if (n < 1 || a.size() != static_cast<std::size_t>(4 * n))
    throw SizeMismatch("derive_b: generator must have length 4n = " + std::to_string(4 * n));
  const auto [a1, a2] = split_halves(a);
  const Gf2Poly dividend1 = a1 + phi1(a2, n).shifted(1);
  const Gf2Poly dividend2 = a2 + phi1(a1, n).shifted(1);
  if (dividend1.weight() % 2 != 0 || dividend2.weight() % 2 != 0)
    throw NotTypeQCandidate("a_i + x·phi1(a_i') has odd weight; no b exists for a = " + a.to_string());

  const Gf2Poly b1 = div_exact_by_x_plus_1(dividend1);
  const Gf2Poly q2 = div_exact_by_x_plus_1(dividend2);
  const Gf2Poly u = Gf2Poly::all_ones(static_cast<std::size_t>(2 * n));
  // b·b = b + π_b(b) = u forces b2 = φ1(b1) + u.
  const Gf2Poly b2 = phi1(b1, n) + u;
  if (b2 != q2 && b2 != q2 + u)
    throw NotTypeQCandidate("half quotients are incompatible with b^2 = u for a = " + a.to_string());
  return join_halves(b1, b2);
}

Gf2Poly derive_a2(const Gf2Poly& a1, int iota, int n) {
  if (iota < 0 || iota >= 2 * n) throw std::out_of_range("iota must lie in [0, 2n)");
  return phi1(a1, n).shifted(iota + 1) + Gf2Poly::all_ones(static_cast<std::size_t>(2 * n));
}

BinaryWord kappa_vector(int iota, int n) {
  if (iota < 0 || iota >= 2 * n) throw std::out_of_range("iota must lie in [0, 2n)");
  const auto half = static_cast<std::size_t>(2 * n);
  BinaryWord v(half);
  for (std::size_t i = 1; i < half; i += 2) v.set(i);
  return v.concat(iota % 2 == 0 ? v : v.complement());
}

Realization realize(int n, const BinaryWord& a, const BinaryWord& b, const Perm& pi_a, const Perm& pi_b) {
  const auto four_n = static_cast<std::size_t>(4 * n);
  Realization r;
  r.n = n;
  r.vectors.resize(2 * four_n);
  r.perms.resize(2 * four_n);
  BinaryWord v(a.size());
  Perm p = Perm::identity(a.size());
  for (std::size_t i = 0; i < four_n; ++i) {
    r.vectors[i] = v;
    r.perms[i] = p;
    r.vectors[four_n + i] = v ^ apply_perm(p, b);
    r.perms[four_n + i] = compose(p, pi_b);
    // a^{i+1} = a^i · a = vec(a^i) + π_{a^i}(a)
    v ^= apply_perm(p, a);
    p = compose(p, pi_a);
  }
  r.a_to_4n = std::move(v);
  return r;
}

// ---------------------------------------------------------------------------
// TypeQCode

TypeQCode::TypeQCode(int n, BinaryWord a, BinaryWord b, std::optional<int> iota)
    : n_(n), a_(std::move(a)), b_(std::move(b)), iota_(iota) {}

TypeQCode TypeQCode::from_generator(int n, BinaryWord a, std::optional<int> iota) {
  if (iota && (*iota < 0 || *iota >= 2 * n)) throw std::out_of_range("iota must lie in [0, 2n)");
  BinaryWord b = derive_b(a, n);
  return TypeQCode(n, std::move(a), std::move(b), iota);
}

TypeQCode TypeQCode::from_generators(int n, BinaryWord a, BinaryWord b, std::optional<int> iota) {
  TypeQCode code = from_generator(n, std::move(a), iota);
  if (b != code.b_ && b != code.b_.complement())
    throw NotTypeQCandidate("b = " + b.to_string() + " does not match the derived generator " + code.b_.to_string() +
                            " up to complement");
  code.b_ = std::move(b);
  return code;
}

TypeQCode TypeQCode::unchecked(int n, BinaryWord a, BinaryWord b, std::optional<int> iota) {
  if (n < 1 || a.size() != static_cast<std::size_t>(4 * n) || b.size() != a.size())
    throw SizeMismatch("generators must have length 4n");
  return TypeQCode(n, std::move(a), std::move(b), iota);
}

TypeQCode TypeQCode::with_iota(std::optional<int> iota) const {
  TypeQCode copy = *this;
  copy.iota_ = iota;
  return copy;
}

Realization TypeQCode::realize() const { return hfpq::realize(n_, a_, b_, canonical_perm_a(n_), canonical_perm_b(n_)); }

BinaryWord TypeQCode::element_vector(GroupElement g) const {
  g = group::normalize(g, n_);
  const Perm pi_a = canonical_perm_a(n_);
  BinaryWord v(length());
  Perm p = Perm::identity(length());
  for (int i = 0; i < g.exp_a; ++i) {
    v ^= apply_perm(p, a_);
    p = compose(p, pi_a);
  }
  if (g.has_b) v ^= apply_perm(p, b_);
  return v;
}

std::vector<BinaryWord> TypeQCode::sorted_codewords() const {
  std::vector<BinaryWord> words = codewords();
  std::sort(words.begin(), words.end());
  return words;
}

bool TypeQCode::gamma(GroupElement g) const { return element_vector(g).test(0); }

GroupElement TypeQCode::d1_element(GroupElement g) const {
  g = group::normalize(g, n_);
  return gamma(g) ? group::mul(group::central_involution(n_), g, n_) : g;
}

// ---------------------------------------------------------------------------
// Matrix assembly

CoordinateIndex coordinate_index(const TypeQCode& code) {
  const int n = code.n();
  CoordinateIndex idx;
  for (int i = 0; i < 2 * n; ++i) idx.row_order.push_back(code.d1_element(group::a(i)));
  for (int i = 1; i <= 2 * n; ++i) idx.row_order.push_back(code.d1_element({i, true}));
  for (int i = 0; i < 2 * n; ++i) idx.col_order.push_back(code.d1_element(group::a(-i)));
  for (int i = 1; i <= 2 * n; ++i) idx.col_order.push_back(code.d1_element({i, true}));
  return idx;
}

std::vector<BinaryWord> HadamardMatrixQ::columns() const {
  std::vector<BinaryWord> cols(order, BinaryWord(order));
  for (std::size_t r = 0; r < order; ++r)
    for (std::size_t c = 0; c < order; ++c)
      if (rows[r].test(c)) cols[c].set(r);
  return cols;
}

HadamardMatrixQ build_matrix(const TypeQCode& code) {
  const HfpVerdict verdict = verify_hfp(code);
  if (!verdict.ok) throw VerificationFailure("build_matrix: " + verdict.describe());
  const Realization r = code.realize();
  HadamardMatrixQ h;
  h.order = code.length();
  h.index = coordinate_index(code);
  h.rows.reserve(h.order);
  for (GroupElement g : h.index.row_order) h.rows.push_back(d1_representative(r.vector(g)));
  return h;
}

bool matrix_entry(GroupElement column, GroupElement row, const TypeQCode& code) {
  const int n = code.n();
  return code.gamma(column) ^ code.gamma(row) ^ code.gamma(group::mul(column, row, n));
}

}  // namespace hfpq
