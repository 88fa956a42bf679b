#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace multfree {

/*
  A partition is a weakly decreasing finite sequence of nonnegative
  integers. Trailing zeros are stripped on construction, so (a,0) and (a)
  are the same value and equality is structural.

  Ordering is lexicographic on the nonzero parts, with a proper prefix
  comparing smaller: () < (1) < (1,1) < (2) < (2,1).
*/
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  // Throws std::invalid_argument unless parts are nonnegative and weakly
  // decreasing. Trailing zeros are allowed and dropped.
  static Partition from_parts(std::span<const int> parts);

  const std::vector<int>& parts() const { return parts_; }

  // Row i (0-based); rows past the end read as 0.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  std::size_t length() const { return parts_.size(); }
  int size() const;
  bool empty() const { return parts_.empty(); }

  // True when every nonzero part is equal; the empty partition counts.
  bool is_constant() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

// outer / inner with inner contained in outer.
class SkewPair {
 public:
  SkewPair(Partition outer, Partition inner);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int size() const { return outer_.size() - inner_.size(); }
  bool is_horizontal_strip() const;

 private:
  Partition outer_;
  Partition inner_;
};

Partition conjugate(const Partition& p);

bool contains(const Partition& outer, const Partition& inner);

// outer_1 >= inner_1 >= outer_2 >= inner_2 >= ... ; false when inner is not
// contained in outer.
bool is_horizontal_strip(const Partition& outer, const Partition& inner);

// Every inner partition with eta/inner a horizontal strip of size at most
// max_size, in descending lexicographic order (eta itself first).
std::vector<Partition> strip_predecessors(const Partition& eta, int max_size);

// Every outer partition of length at most max_length with outer/base a
// horizontal strip of size exactly strip_size, in descending lexicographic
// order.
std::vector<Partition> strip_successors(const Partition& base, int strip_size,
                                        std::size_t max_length);

// All partitions of n, descending lexicographic.
std::vector<Partition> partitions_of(int n);

// All partitions of n with at most max_length parts.
std::vector<Partition> partitions_of(int n, std::size_t max_length);

}  // namespace multfree
