#pragma once

#include "multfree/partition.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace multfree {

// SO is the even orthogonal group SO(2n); rank is n.
enum class Family { SU, Sp, U, Circle, SO };

std::string_view family_name(Family f);
Family family_from_name(std::string_view name);

/*
  Highest-weight label of an irreducible representation.

    SU(m):  partition of length <= m-1, stored without trailing zeros
    Sp(n):  partition of length <= n, stored without trailing zeros
    U(k):   weakly decreasing integer k-tuple, stored with all k entries
    Circle: single integer r (rank is 1)
    SO(2n): n-tuple with l_1 >= ... >= l_{n-1} >= |l_n|, all n entries
*/
struct IrrepLabel {
  Family family = Family::Circle;
  int rank = 1;
  std::vector<int> weight;

  static IrrepLabel su(int m, const Partition& p);
  static IrrepLabel sp(int n, const Partition& p);
  static IrrepLabel u(int k, std::vector<int> weight);
  static IrrepLabel circle(int r);
  static IrrepLabel so(int n, std::vector<int> weight);

  // Canonicalizes and validates; throws std::invalid_argument.
  static IrrepLabel make(Family family, int rank, std::vector<int> weight);

  // The trivial representation of the given group.
  static IrrepLabel trivial(Family family, int rank);

  bool is_trivial() const;

  // Weight padded to the number of torus coordinates used by characters:
  // SU(m) -> m-1, Sp(n) -> n, U(k) -> k, Circle -> 1, SO(2n) -> n.
  std::vector<int> torus_weight() const;

  // Sum of absolute values of the weight entries.
  int weight_size() const;

  // Number of torus coordinates (see torus_weight).
  int torus_dimension() const;

  // "(2,1)" style for Sp/SU/U/SO; SU(2) renders as "ν3", Circle as "χ-2".
  std::string to_string() const;

  // Compact text including the group, e.g. "Sp(2)(2,1)".
  std::string describe() const;

  friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;
  friend auto operator<=>(const IrrepLabel&, const IrrepLabel&) = default;
};

int torus_dimension(Family family, int rank);

}  // namespace multfree
