#pragma once

#include "multfree/decompose.hpp"
#include "multfree/partition.hpp"

namespace multfree {

// A closed-form decomposition, or the oracle's answer when the closed form
// does not apply at the requested rank.
struct RuleResult {
  IrrepSum sum;
  bool via_oracle = false;
};

// eta_(r) (x) eta_(s) in Sp(n): the sum over 0 <= i <= j <= min(r,s) of
// eta_(r+s-j-i, j-i). For n < 2 the oracle is used.
RuleResult tensor_sym_sym(int r, int s, int n);

// eta_(1^r) (x) eta_(s) in Sp(n), valid for r > 1, s > 1, r + 1 <= n:
//   eta_(s+1,1^(r-1)) + eta_(s,1^r) + eta_(s-1,1^(r-1)) + eta_(s,1^(r-2)).
// Anything else is answered by the oracle.
RuleResult tensor_column_sym(int r, int s, int n);

// Number of partitions c with eta/c and sigma/c horizontal strips whose
// sizes add up to s.
int pieri_coefficient(const Partition& eta, int s, const Partition& sigma, int n);

// eta (x) eta_(s) in Sp(n) as the sum of pieri_coefficient(eta, s, sigma)
// eta_sigma over sigma of length at most n.
IrrepSum pieri_tensor(const Partition& eta, int s, int n);

}  // namespace multfree
