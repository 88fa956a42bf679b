#pragma once

#include "multfree/metaplectic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace multfree {

// One way a witness label is produced: an omega term, a tau term and, when
// the decomposition of that single product already contains the label more
// than once, which copy.
struct Route {
  int degree = 0;
  Params omega;
  Params tau;
  Multiplicity copy = 0;

  // "s=2,i=1", with ",copy=c" appended for c > 0.
  std::string to_string() const;

  friend bool operator==(const Route&, const Route&) = default;
};

struct Witness {
  CompositeLabel label;
  Multiplicity mult = 0;
  int degree = 0;  // smallest omega degree at which mult >= 2
  std::vector<Route> routes;

  friend bool operator==(const Witness&, const Witness&) = default;
};

// Either a repeated label (conclusive) or multiplicity freedom up to the
// truncation degree (a bounded certificate, not a proof).
struct Verdict {
  std::optional<Witness> witness;
  int degree_bound = 0;

  bool multiplicity_found() const { return witness.has_value(); }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

enum class Expected { Commutative, NotCommutative };

struct ExpectedVerdict {
  Expected outcome;
  std::string source;
};

enum class Consistency { Consistent, Inconclusive, Violation };

std::string consistency_name(Consistency c);

struct CrossCheck {
  Verdict verdict;
  ExpectedVerdict expected;
  Consistency consistency;
};

// Total tau weight size plus 4.
int default_degree(const TauSpec& tau);

// Scans the omega degrees 0..D in order. At the first degree where some
// label has multiplicity >= 2, the lexicographically largest such label is
// returned with every route producing it up to that degree.
Verdict classify(const CaseSpec& spec, const TauSpec& tau, int D);

// Recomputes a single route from scratch and checks that it yields the
// label (with more than route.copy copies).
bool verify_route(const CaseSpec& spec, const TauSpec& tau, const CompositeLabel& label, const Route& route);

// The classification of commutative triples, case by case.
ExpectedVerdict expected_verdict(const CaseSpec& spec, const TauSpec& tau);

CrossCheck cross_check(const CaseSpec& spec, const TauSpec& tau, int D);

struct SweepRow {
  TauSpec tau;
  int degree;
  CrossCheck check;
};

// Every tau whose factor weights have size at most B, ordered by total
// weight size and then label, checked at degree D (or default_degree per
// row). Rows are computed on `threads` workers (0 = hardware concurrency)
// and returned in enumeration order.
std::vector<TauSpec> enumerate_taus(const CaseSpec& spec, int B);
std::vector<SweepRow> sweep(const CaseSpec& spec, int B, std::optional<int> D, unsigned threads = 0);

// Smallest parameter choices checked by default for each case:
// I n=2,3; II (1,1); III n=1,2; IV n=2; V, VI n=3; VII k=1,2 x n=0,1;
// VIII one SU(3) block and one SU(2) x U(1) block; IX n=1,2.
std::vector<CaseSpec> standard_instances(CaseId id);
std::vector<CaseSpec> standard_instances();

}  // namespace multfree
