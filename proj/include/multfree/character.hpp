#pragma once

#include "multfree/formal_sum.hpp"
#include "multfree/irrep.hpp"
#include "multfree/laurent.hpp"

#include <vector>

namespace multfree {

using TorusWeight = std::vector<int>;

/*
  Character of an irreducible representation on the standard maximal torus,
  computed as the quotient of the alternating sum over the Weyl group at
  weight + rho by the Weyl denominator.

  Torus coordinates:
    U(k)    x_1..x_k, the Schur Laurent polynomial
    SU(m)   x_1..x_{m-1}; a U(m) weight a is read as (a_i - a_m)_{i<m}
    Sp(n)   x_1..x_n with weights +-L_i
    SO(2n)  x_1..x_n with weights +-e_i
    Circle  x^r

  Results are memoized; throws std::invalid_argument for invalid labels.
*/
const LaurentPoly& weyl_character(const IrrepLabel& label);

// Dimension from the Weyl product formula over the positive roots. Shares
// no code with weyl_character.
Integer weyl_dimension(const IrrepLabel& label);

// Restriction to the maximal torus as a multiset of characters; the total
// multiplicity equals the dimension.
FormalSum<TorusWeight> weight_system(const IrrepLabel& label);

// Maps a torus exponent of the given group back to the irreducible with
// that highest weight. Throws std::logic_error when the exponent is not
// dominant.
IrrepLabel label_from_dominant(Family family, int rank, const TorusWeight& exponent);

// Every irreducible of the group whose weight_size() is at most bound, in
// ascending label order. For U(k) and SO(2n) this includes negative
// entries; for the circle, -bound..bound.
std::vector<IrrepLabel> labels_up_to(Family family, int rank, int bound);

}  // namespace multfree
