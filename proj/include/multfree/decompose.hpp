#pragma once

#include "multfree/character.hpp"
#include "multfree/formal_sum.hpp"
#include "multfree/irrep.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <vector>

namespace multfree {

using IrrepSum = FormalSum<IrrepLabel>;

/*
  Brute-force tensor product decomposition: multiply the characters, then
  repeatedly take the lexicographically largest surviving exponent (always a
  dominant weight), record its irreducible with the surviving coefficient
  and subtract that multiple of its character.

  All labels must share family and rank (std::invalid_argument otherwise).
  A negative coefficient at a leading term or a non-dominant leading term
  means the characters are wrong; that raises std::logic_error and is never
  clamped.
*/
IrrepSum decompose_product(std::span<const IrrepLabel> labels);
IrrepSum decompose_product(std::initializer_list<IrrepLabel> labels);

// Greedy decomposition of an arbitrary W-invariant character of the group.
IrrepSum decompose_character(Family family, int rank, LaurentPoly character);

/*
  Memo of pairwise products keyed by (family, rank, sorted weights).
  Concurrent readers, single writer. Results are identical with the cache
  disabled.
*/
class ProductCache {
 public:
  struct Key {
    Family family;
    int rank;
    std::vector<int> first;
    std::vector<int> second;
    friend auto operator<=>(const Key&, const Key&) = default;
    friend bool operator==(const Key&, const Key&) = default;
  };

  static ProductCache& instance();

  bool enabled() const;
  void set_enabled(bool on);

  bool lookup(const Key& key, IrrepSum& out) const;
  void insert(const Key& key, const IrrepSum& value);
  void clear();
  std::size_t size() const;

  std::map<Key, IrrepSum> snapshot() const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, IrrepSum> entries_;
  bool enabled_ = true;
};

ProductCache::Key product_key(const IrrepLabel& a, const IrrepLabel& b);

}  // namespace multfree
