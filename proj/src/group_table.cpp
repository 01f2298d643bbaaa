#include "hfpq/group_table.hpp"

#include <algorithm>
#include <stdexcept>

#include "hfpq/analysis.hpp"
#include "hfpq/error.hpp"

namespace hfpq {

GroupTable GroupTable::from_products(std::size_t order, std::vector<ElementId> products) {
  if (order == 0 || products.size() != order * order) throw std::invalid_argument("table size must be order^2");
  GroupTable g;
  g.order_ = order;
  g.products_ = std::move(products);

  for (ElementId v : g.products_)
    if (v >= order) throw std::invalid_argument("table entry out of range");
  for (std::size_t x = 0; x < order; ++x) {
    std::vector<bool> row(order, false), col(order, false);
    for (std::size_t y = 0; y < order; ++y) {
      row[g.products_[x * order + y]] = true;
      col[g.products_[y * order + x]] = true;
    }
    if (std::find(row.begin(), row.end(), false) != row.end() || std::find(col.begin(), col.end(), false) != col.end())
      throw std::invalid_argument("table is not a Latin square");
  }

  bool found = false;
  for (std::size_t e = 0; e < order && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < order && ok; ++x)
      ok = g.products_[e * order + x] == x && g.products_[x * order + e] == x;
    if (ok) {
      g.identity_ = static_cast<ElementId>(e);
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("table has no identity element");

  g.inverses_.resize(order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y)
      if (g.products_[x * order + y] == g.identity_) g.inverses_[x] = static_cast<ElementId>(y);
  return g;
}

GroupTable GroupTable::type_q(int n) {
  const auto order = static_cast<std::size_t>(8 * n);
  std::vector<ElementId> products(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y)
      products[x * order + y] = static_cast<ElementId>(
          group::index(group::mul(group::from_index(x, n), group::from_index(y, n), n), n));
  return from_products(order, std::move(products));
}

GroupTable GroupTable::opposite() const {
  std::vector<ElementId> products(order_ * order_);
  for (std::size_t x = 0; x < order_; ++x)
    for (std::size_t y = 0; y < order_; ++y) products[x * order_ + y] = products_[y * order_ + x];
  return from_products(order_, std::move(products));
}

std::size_t GroupTable::element_order(ElementId x) const {
  std::size_t k = 1;
  for (ElementId acc = x; acc != identity_; acc = mul(acc, x)) ++k;
  return k;
}

bool GroupTable::is_central(ElementId x) const {
  for (std::size_t y = 0; y < order_; ++y)
    if (mul(x, static_cast<ElementId>(y)) != mul(static_cast<ElementId>(y), x)) return false;
  return true;
}

bool is_cyclic(const GroupTable& g) {
  for (std::size_t x = 0; x < g.order(); ++x)
    if (g.element_order(static_cast<ElementId>(x)) == g.order()) return true;
  return false;
}

std::vector<BinaryWord> ConstructedCode::sorted_words() const {
  std::vector<BinaryWord> out = words;
  std::sort(out.begin(), out.end());
  return out;
}

ConstructedCode construct_from_group(const GroupTable& table, std::vector<ElementId> d, ElementId u) {
  const HadamardGroupVerdict verdict = verify_hadamard_group(table, d, u);
  if (!verdict.ok) throw NotHadamardGroup(verdict.describe());

  const ElementId e = table.identity();
  if (std::find(d.begin(), d.end(), e) == d.end())
    for (ElementId& x : d) x = table.mul(u, x);
  const auto identity_at = std::find(d.begin(), d.end(), e);
  std::rotate(d.begin(), identity_at, identity_at + 1);

  const std::size_t order = table.order();
  const std::size_t length = d.size();
  std::vector<bool> in_d(order, false);
  std::vector<std::size_t> column_of(order, 0);
  for (std::size_t k = 0; k < length; ++k) {
    in_d[d[k]] = true;
    column_of[d[k]] = k;
  }
  // δ_g g ∈ D with δ_g ∈ {e, u}
  auto representative = [&](ElementId g) { return in_d[g] ? g : table.mul(u, g); };

  ConstructedCode out;
  out.column_elements = d;
  out.words.assign(order, BinaryWord(length));
  out.perms.resize(order);
  for (std::size_t g = 0; g < order; ++g) {
    const auto gid = static_cast<ElementId>(g);
    for (std::size_t k = 0; k < length; ++k)
      if (!in_d[table.mul(d[k], gid)]) out.words[g].set(k);
    // Coordinate indexed by b moves to the one indexed by δ(b g⁻¹) b g⁻¹.
    std::vector<std::size_t> images(length);
    const ElementId g_inv = table.inverse(gid);
    for (std::size_t k = 0; k < length; ++k) images[k] = column_of[representative(table.mul(d[k], g_inv))] + 1;
    out.perms[g] = Perm::from_images(std::move(images));
  }
  return out;
}

}  // namespace hfpq
