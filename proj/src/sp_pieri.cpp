#include "multfree/sp_pieri.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace multfree {

namespace {

void require_nonnegative(int r, int s) {
  if (r < 0 || s < 0) throw std::invalid_argument("symplectic rule: negative degree");
}

Partition column(int r) { return Partition(std::vector<int>(static_cast<std::size_t>(r), 1)); }

// (head, 1^ones)
Partition hook(int head, int ones) {
  std::vector<int> p{head};
  p.insert(p.end(), static_cast<std::size_t>(ones), 1);
  return Partition(std::move(p));
}

RuleResult oracle(const Partition& a, const Partition& b, int n) {
  return {decompose_product({IrrepLabel::sp(n, a), IrrepLabel::sp(n, b)}), true};
}

}  // namespace

RuleResult tensor_sym_sym(int r, int s, int n) {
  require_nonnegative(r, s);
  if (n < 1) throw std::invalid_argument("tensor_sym_sym: rank must be positive");
  if (n < 2) return oracle(Partition{r}, Partition{s}, n);
  if (r < s) std::swap(r, s);
  RuleResult out;
  for (int j = 0; j <= s; ++j)
    for (int i = 0; i <= j; ++i) out.sum.add(IrrepLabel::sp(n, Partition({r + s - j - i, j - i})));
  return out;
}

RuleResult tensor_column_sym(int r, int s, int n) {
  require_nonnegative(r, s);
  if (n < 1) throw std::invalid_argument("tensor_column_sym: rank must be positive");
  if (r <= 1 || s <= 1 || r + 1 > n) return oracle(column(r), Partition{s}, n);
  RuleResult out;
  out.sum.add(IrrepLabel::sp(n, hook(s + 1, r - 1)));
  out.sum.add(IrrepLabel::sp(n, hook(s, r)));
  out.sum.add(IrrepLabel::sp(n, hook(s - 1, r - 1)));
  out.sum.add(IrrepLabel::sp(n, hook(s, r - 2)));
  return out;
}

int pieri_coefficient(const Partition& eta, int s, const Partition& sigma, int n) {
  if (s < 0) throw std::invalid_argument("pieri_coefficient: negative degree");
  if (eta.length() > static_cast<std::size_t>(n) || sigma.length() > static_cast<std::size_t>(n))
    throw std::invalid_argument("pieri_coefficient: label too long for Sp(" + std::to_string(n) + ")");
  const auto from_eta = strip_predecessors(eta, s);
  int count = 0;
  for (const auto& c : strip_predecessors(sigma, s)) {
    if ((eta.size() - c.size()) + (sigma.size() - c.size()) != s) continue;
    if (std::binary_search(from_eta.begin(), from_eta.end(), c, std::greater<>())) ++count;
  }
  return count;
}

IrrepSum pieri_tensor(const Partition& eta, int s, int n) {
  if (s < 0) throw std::invalid_argument("pieri_tensor: negative degree");
  IrrepLabel::sp(n, eta);
  IrrepSum out;
  // Each (c, sigma) pair is one of the partitions counted by the coefficient.
  for (const auto& c : strip_predecessors(eta, s))
    for (const auto& sigma : strip_successors(c, s - (eta.size() - c.size()), static_cast<std::size_t>(n)))
      out.add(IrrepLabel::sp(n, sigma));
  return out;
}

}  // namespace multfree
