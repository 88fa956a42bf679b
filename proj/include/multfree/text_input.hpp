#pragma once

#include "multfree/metaplectic.hpp"

#include <string>
#include <vector>

namespace multfree {

// "2,1" -> {2,1}; "" -> {}. Throws std::invalid_argument on junk.
std::vector<int> parse_int_list(const std::string& text);

// Builds a label of the given group from loosely written weights: SU and
// Sp take partitions, U and SO are padded with zeros to the rank, Circle
// takes one integer. Throws std::invalid_argument when invalid.
IrrepLabel label_from_input(Family family, int rank, const std::vector<int>& weights);

/*
  Tau mini-grammar: comma separated "factor=weights" pairs, where a bare
  integer continues the weights of the previous factor.

    su2=1,sp=1      nu_1 on SU(2), eta_(1) on Sp(n)
    sp=2,2          eta_(2,2)
    u=1,-1          upsilon_(1,-1)
    su.1=1,u.1=2    VIII factors carry their block number

  Factors left out are trivial; the empty string is the trivial tau.
*/
TauSpec parse_tau(const CaseSpec& spec, const std::string& text);

// "1:0,2:1" -> {(1,0),(2,1)}.
std::vector<std::pair<int, int>> parse_pair_list(const std::string& text);

}  // namespace multfree
