#include "multfree/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace multfree {

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) {
  *this = from_parts(parts);
}

Partition Partition::from_parts(std::span<const int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0)
      throw std::invalid_argument("partition has a negative part");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  Partition p;
  p.parts_.assign(parts.begin(), parts.end());
  while (!p.parts_.empty() && p.parts_.back() == 0) p.parts_.pop_back();
  return p;
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::is_constant() const {
  return parts_.empty() || parts_.front() == parts_.back();
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

SkewPair::SkewPair(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!contains(outer_, inner_))
    throw std::invalid_argument("skew pair: inner " + inner_.to_string() +
                                " is not contained in " + outer_.to_string());
}

bool SkewPair::is_horizontal_strip() const {
  return multfree::is_horizontal_strip(outer_, inner_);
}

Partition conjugate(const Partition& p) {
  std::vector<int> out;
  if (p.empty()) return Partition{};
  out.reserve(static_cast<std::size_t>(p[0]));
  for (int col = 1; col <= p[0]; ++col) {
    int height = 0;
    while (static_cast<std::size_t>(height) < p.length() && p[height] >= col) ++height;
    out.push_back(height);
  }
  return Partition::from_parts(out);
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (std::size_t i = 0; i < inner.length(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
  if (!contains(outer, inner)) return false;
  // outer_{i+1} <= inner_i for every row i
  for (std::size_t i = 0; i + 1 < outer.length(); ++i)
    if (outer[i + 1] > inner[i]) return false;
  return true;
}

std::vector<Partition> strip_predecessors(const Partition& eta, int max_size) {
  std::vector<Partition> out;
  if (max_size < 0) return out;
  const std::size_t m = eta.length();
  std::vector<int> rows(m, 0);
  // Row i may drop to anything in [eta_{i+1}, eta_i].
  std::function<void(std::size_t, int)> walk = [&](std::size_t i, int budget) {
    if (i == m) {
      out.push_back(Partition::from_parts(rows));
      return;
    }
    const int hi = eta[i];
    const int lo = std::max(eta[i + 1], hi - budget);
    for (int v = hi; v >= lo; --v) {
      rows[i] = v;
      walk(i + 1, budget - (hi - v));
    }
  };
  walk(0, max_size);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<Partition> strip_successors(const Partition& base, int strip_size,
                                        std::size_t max_length) {
  std::vector<Partition> out;
  if (strip_size < 0 || base.length() > max_length) return out;
  const std::size_t rows_available = std::min(base.length() + 1, max_length);
  std::vector<int> rows(rows_available, 0);
  // Row 0 grows without bound; row i > 0 may grow up to base_{i-1}.
  std::function<void(std::size_t, int)> walk = [&](std::size_t i, int budget) {
    if (i == rows_available) {
      if (budget == 0) out.push_back(Partition::from_parts(rows));
      return;
    }
    const int lo = base[i];
    const int cap = i == 0 ? lo + budget : std::min(base[i - 1], lo + budget);
    for (int v = cap; v >= lo; --v) {
      rows[i] = v;
      walk(i + 1, budget - (v - lo));
    }
  };
  walk(0, strip_size);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<Partition> partitions_of(int n, std::size_t max_length) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> rows;
  std::function<void(int, int)> walk = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.push_back(Partition::from_parts(rows));
      return;
    }
    if (rows.size() == max_length) return;
    for (int v = std::min(cap, remaining); v >= 1; --v) {
      rows.push_back(v);
      walk(remaining - v, v);
      rows.pop_back();
    }
  };
  walk(n, n);
  return out;
}

std::vector<Partition> partitions_of(int n) {
  return partitions_of(n, static_cast<std::size_t>(std::max(n, 0)));
}

}  // namespace multfree
