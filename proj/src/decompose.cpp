#include "multfree/decompose.hpp"

#include <limits>
#include <stdexcept>

namespace multfree {

ProductCache& ProductCache::instance() {
  static ProductCache cache;
  return cache;
}

bool ProductCache::enabled() const {
  std::shared_lock lock(mutex_);
  return enabled_;
}

void ProductCache::set_enabled(bool on) {
  std::unique_lock lock(mutex_);
  enabled_ = on;
}

bool ProductCache::lookup(const Key& key, IrrepSum& out) const {
  std::shared_lock lock(mutex_);
  if (!enabled_) return false;
  auto it = entries_.find(key);
  if (it == entries_.end()) return false;
  out = it->second;
  return true;
}

void ProductCache::insert(const Key& key, const IrrepSum& value) {
  std::unique_lock lock(mutex_);
  if (!enabled_) return;
  entries_.try_emplace(key, value);
}

void ProductCache::clear() {
  std::unique_lock lock(mutex_);
  entries_.clear();
}

std::size_t ProductCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

std::map<ProductCache::Key, IrrepSum> ProductCache::snapshot() const {
  std::shared_lock lock(mutex_);
  return entries_;
}

ProductCache::Key product_key(const IrrepLabel& a, const IrrepLabel& b) {
  ProductCache::Key k{a.family, a.rank, a.weight, b.weight};
  if (k.second < k.first) std::swap(k.first, k.second);
  return k;
}

IrrepSum decompose_character(Family family, int rank, LaurentPoly character) {
  IrrepSum out;
  while (!character.is_zero()) {
    const auto [exponent, coefficient] = character.leading_term();
    if (coefficient <= 0)
      throw std::logic_error("decompose: negative multiplicity at leading term");
    IrrepLabel top = label_from_dominant(family, rank, exponent);
    LaurentPoly chi = weyl_character(top);
    chi *= coefficient;
    character -= chi;
    if (coefficient > std::numeric_limits<Multiplicity>::max())
      throw std::overflow_error("decompose: multiplicity exceeds 64 bits");
    out.add(top, static_cast<Multiplicity>(coefficient));
  }
  return out;
}

namespace {

void require_same_group(const IrrepLabel& a, const IrrepLabel& b) {
  if (a.family != b.family || a.rank != b.rank)
    throw std::invalid_argument("decompose_product: cannot tensor " + a.describe() + " with " +
                                b.describe());
}

IrrepSum pair_product(const IrrepLabel& a, const IrrepLabel& b) {
  const auto key = product_key(a, b);
  auto& cache = ProductCache::instance();
  IrrepSum out;
  if (cache.lookup(key, out)) return out;
  out = decompose_character(a.family, a.rank, weyl_character(a) * weyl_character(b));
  cache.insert(key, out);
  return out;
}

}  // namespace

IrrepSum decompose_product(std::span<const IrrepLabel> labels) {
  if (labels.empty()) throw std::invalid_argument("decompose_product: no labels");
  std::vector<IrrepLabel> canon;
  canon.reserve(labels.size());
  for (const auto& l : labels) {
    canon.push_back(IrrepLabel::make(l.family, l.rank, l.weight));
    require_same_group(canon.front(), canon.back());
  }
  IrrepSum acc;
  acc.add(canon.front());
  for (std::size_t i = 1; i < canon.size(); ++i) {
    IrrepSum next;
    for (const auto& [label, mult] : acc.entries()) {
      const IrrepSum pieces = pair_product(label, canon[i]);
      for (const auto& [piece, m2] : pieces.entries())
        next.add(piece, mult * m2);
    }
    acc = std::move(next);
  }
  return acc;
}

IrrepSum decompose_product(std::initializer_list<IrrepLabel> labels) {
  return decompose_product(std::span<const IrrepLabel>(labels.begin(), labels.size()));
}

}  // namespace multfree
