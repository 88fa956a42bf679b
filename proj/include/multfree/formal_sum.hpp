#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace multfree {

using Multiplicity = std::uint64_t;

/*
  A finite multiset of labels: label -> positive multiplicity. Absent labels
  have multiplicity 0 and zero is never stored.

  A sum produced from an infinite series carries the degree bound it was
  truncated at; exact sums carry none.
*/
template <class Label>
class FormalSum {
 public:
  using Map = std::map<Label, Multiplicity>;

  FormalSum() = default;

  void add(const Label& label, Multiplicity mult = 1) {
    if (mult == 0) return;
    entries_[label] += mult;
  }

  void add(const FormalSum& other) {
    for (const auto& [label, mult] : other.entries_) add(label, mult);
  }

  Multiplicity multiplicity(const Label& label) const {
    auto it = entries_.find(label);
    return it == entries_.end() ? 0 : it->second;
  }

  bool contains(const Label& label) const { return entries_.count(label) != 0; }

  const Map& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  Multiplicity total() const {
    Multiplicity t = 0;
    for (const auto& e : entries_) t += e.second;
    return t;
  }

  bool is_multiplicity_free() const {
    for (const auto& e : entries_)
      if (e.second != 1) return false;
    return true;
  }

  const std::optional<int>& truncation() const { return truncation_; }
  void set_truncation(std::optional<int> degree) { truncation_ = degree; }
  bool is_exact() const { return !truncation_.has_value(); }

  // True when every multiplicity here is <= the one in other.
  bool is_submultiset_of(const FormalSum& other) const {
    for (const auto& [label, mult] : entries_)
      if (other.multiplicity(label) < mult) return false;
    return true;
  }

  // Labels in descending order, the order used for display and JSON.
  std::vector<std::pair<Label, Multiplicity>> descending() const {
    return {entries_.rbegin(), entries_.rend()};
  }

  template <class F>
  FormalSum<std::invoke_result_t<F, const Label&>> map_labels(F&& f) const {
    FormalSum<std::invoke_result_t<F, const Label&>> out;
    for (const auto& [label, mult] : entries_) out.add(f(label), mult);
    out.set_truncation(truncation_);
    return out;
  }

  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  Map entries_;
  std::optional<int> truncation_;
};

template <class Label>
bool is_multiplicity_free(const FormalSum<Label>& s) {
  return s.is_multiplicity_free();
}

// "(2) + 2×(1,1) + ()" given a per-label renderer; "0" when empty.
template <class Label, class Render>
std::string render_sum(const FormalSum<Label>& s, Render&& render) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& [label, mult] : s.descending()) {
    if (!out.empty()) out += " + ";
    if (mult != 1) out += std::to_string(mult) + "×";
    out += render(label);
  }
  return out;
}

}  // namespace multfree
