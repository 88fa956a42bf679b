#pragma once

#include "multfree/decompose.hpp"
#include "multfree/formal_sum.hpp"
#include "multfree/irrep.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace multfree {

/*
  The nine families of two-step nilpotent groups N(g, V) with square
  integrable representations, each with K = G x U:

    I     SU(2) x Sp(n)                  H-type group, n >= 1
    II    SU(2) x SU(2) x Sp(k1) x Sp(k2), k1 + k2 >= 1
    III   Sp(2) x Sp(n)                  n >= 1
    IV    SO(2n)                         free two-step, n >= 2
    V     SU(n) x S^1                    g = su(n), n >= 3
    VI    SU(n) x S^1                    g = u(n), n >= 3
    VII   SU(2) x U(k) x Sp(n)           k >= 1, n >= 0
    VIII  blocks SU(m_i) x S^1 (m_i >= 3) and SU(2) x U(k_j) x Sp(n_j)
    IX    U(n)                           Heisenberg group, n >= 1

  The metaplectic representation is restricted to T x U, where T is a
  maximal torus of G together with the circle factors of U.
*/
enum class CaseId { I, II, III, IV, V, VI, VII, VIII, IX };

std::string case_name(CaseId id);
CaseId case_from_name(const std::string& name);

struct CaseSpec {
  CaseId id = CaseId::I;
  int n = 0;
  int k = 0;
  int k1 = 0;
  int k2 = 0;
  std::vector<int> su_blocks;                 // VIII: m_i
  std::vector<std::pair<int, int>> u2_blocks;  // VIII: (k_j, n_j)

  static CaseSpec heisenberg_type(int n);      // I
  static CaseSpec spin4(int k1, int k2);       // II
  static CaseSpec sp2(int n);                  // III
  static CaseSpec free_so(int n);              // IV
  static CaseSpec su_circle(int n);            // V
  static CaseSpec u_circle(int n);             // VI
  static CaseSpec u2(int k, int n);            // VII
  static CaseSpec blocks(std::vector<int> su, std::vector<std::pair<int, int>> u2);  // VIII
  static CaseSpec heisenberg(int n);           // IX

  // Throws std::invalid_argument when a parameter is out of range.
  void validate() const;

  // "I(n=2)", "VIII(m=3;k=1,n=0)".
  std::string describe() const;

  friend bool operator==(const CaseSpec&, const CaseSpec&) = default;
};

// One irreducible factor of K. Factors on the torus side (G and the circles
// of U) are expanded into torus characters; the others stay irreducible.
struct FactorSpec {
  std::string name;   // name used by the tau grammar, e.g. "su2", "sp"
  Family family;
  int rank;
  int torus_offset;   // first torus coordinate, or -1 for a U-side factor
  int u_index;        // index into the U-side groups, or -1
  std::string param;  // route parameter for the weight index
};

struct Group {
  Family family;
  int rank;
  friend bool operator==(const Group&, const Group&) = default;
};

std::vector<FactorSpec> tau_factors(const CaseSpec& spec);
std::vector<Group> u_groups(const CaseSpec& spec);
int torus_dimension(const CaseSpec& spec);

// One label per entry of tau_factors, in the same order.
struct TauSpec {
  std::vector<IrrepLabel> labels;

  static TauSpec trivial(const CaseSpec& spec);
  // Sum of weight sizes over the factors.
  int weight_size() const;
  bool is_trivial() const;
  // "su2=ν1 sp=(1)"; trivial factors are omitted, "trivial" if all are.
  std::string describe(const CaseSpec& spec) const;

  friend bool operator==(const TauSpec&, const TauSpec&) = default;
};

// Throws std::invalid_argument when tau does not fit the case.
void validate_tau(const CaseSpec& spec, const TauSpec& tau);

struct CompositeLabel {
  std::vector<int> torus;
  std::vector<IrrepLabel> u;

  // "(χ1; η(1))", "χ(1,1)", "υ(2,0)".
  std::string to_string() const;

  friend bool operator==(const CompositeLabel&, const CompositeLabel&) = default;
  friend auto operator<=>(const CompositeLabel&, const CompositeLabel&) = default;
};

using CompositeSum = FormalSum<CompositeLabel>;

// Named integers identifying a term, e.g. {{"s", 2}} or {{"i", 1}}.
using Params = std::vector<std::pair<std::string, int>>;

std::string render_params(const Params& p);

// A torus character times, for each U-side group, a tensor product of
// irreducibles that still has to be decomposed.
struct ProductTerm {
  std::vector<int> torus;
  std::vector<std::vector<IrrepLabel>> factors;
  Params params;
};

// The terms of the metaplectic representation of grading degree exactly d.
std::vector<ProductTerm> omega_slice(const CaseSpec& spec, int d);

// The restriction of tau to T x U, one term per torus weight (weights of
// higher multiplicity give several terms, told apart by a "copy" param).
std::vector<ProductTerm> tau_terms(const CaseSpec& spec, const TauSpec& tau);

// Torus characters add; the U-side lists are concatenated.
ProductTerm combine(const ProductTerm& a, const ProductTerm& b);

// Decomposes every U-side product into irreducibles. Symplectic products
// with a one-row factor go through the closed rules; everything else through
// the character oracle. U(k) products with negative entries are shifted by
// a power of the determinant first and shifted back afterwards.
CompositeSum expand(const ProductTerm& term, const std::vector<Group>& groups);

// All terms of grading degree at most D, truncation marker D.
CompositeSum omega_series(const CaseSpec& spec, int D);

// Exact restriction of tau to T x U.
CompositeSum tau_restriction(const CaseSpec& spec, const TauSpec& tau);

// (omega (x) tau) restricted to T x U, omega truncated at degree D.
CompositeSum omega_tensor_tau(const CaseSpec& spec, const TauSpec& tau, int D);

}  // namespace multfree
