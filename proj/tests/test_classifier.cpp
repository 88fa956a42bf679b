#include "doctest.h"
#include "multfree/classifier.hpp"

using namespace multfree;

namespace {

IrrepLabel su2(int k) { return IrrepLabel::su(2, Partition{k}); }
IrrepLabel eta(int n, Partition p) { return IrrepLabel::sp(n, p); }

std::vector<std::string> route_strings(const Witness& w) {
  std::vector<std::string> out;
  for (const auto& r : w.routes) out.push_back(r.to_string());
  return out;
}

std::vector<CaseSpec> all_small_cases() {
  return {CaseSpec::heisenberg_type(2), CaseSpec::spin4(1, 1), CaseSpec::sp2(1), CaseSpec::free_so(2),
          CaseSpec::su_circle(3), CaseSpec::u_circle(3), CaseSpec::u2(1, 1), CaseSpec::u2(2, 0),
          CaseSpec::blocks({3}, {{1, 0}}), CaseSpec::heisenberg(2)};
}

}  // namespace

TEST_CASE("witness for SU(2) x Sp(2) with both factors nontrivial") {
  const auto spec = CaseSpec::heisenberg_type(2);
  const TauSpec tau{{su2(1), eta(2, {1})}};
  const auto v = classify(spec, tau, 4);
  REQUIRE(v.multiplicity_found());
  CHECK(v.witness->label.to_string() == "(χ1; η(1))");
  CHECK(v.witness->mult == 2);
  CHECK(v.witness->degree == 2);
  CHECK(route_strings(*v.witness) == std::vector<std::string>{"s=0,i=0", "s=2,i=1"});
  for (const auto& r : v.witness->routes) CHECK(verify_route(spec, tau, v.witness->label, r));
  Route bogus{1, {{"s", 1}}, {{"i", 0}}, 0};
  CHECK_FALSE(verify_route(spec, tau, v.witness->label, bogus));
}

TEST_CASE("witness for SO(4) standard representation") {
  const auto v = classify(CaseSpec::free_so(2), TauSpec{{IrrepLabel::so(2, {1, 0})}}, 2);
  REQUIRE(v.multiplicity_found());
  CHECK(v.witness->label.to_string() == "χ(1,1)");
}

TEST_CASE("witness for case II follows the l1 shift") {
  const auto spec = CaseSpec::spin4(1, 0);
  const TauSpec tau{{su2(1), su2(0), eta(1, {})}};
  const auto c = cross_check(spec, tau, 4);
  CHECK(c.consistency == Consistency::Consistent);
  REQUIRE(c.verdict.multiplicity_found());
  CHECK(route_strings(*c.verdict.witness) ==
        std::vector<std::string>{"r=0,s=0,l1=0,l2=0,i=0,j=0", "r=0,s=0,l1=2,l2=0,i=1,j=0"});
}

TEST_CASE("U(k) labels in case VII") {
  // k = 1: every U(1) label is a character and the series stays free.
  const auto one = classify(CaseSpec::u2(1, 1), TauSpec{{su2(0), IrrepLabel::u(1, {1}), eta(1, {})}}, 5);
  CHECK_FALSE(one.multiplicity_found());
  CHECK(one.degree_bound == 5);
  // k = 2: upsilon_(1) (x) upsilon_(1) (x) upsilon_(1,0) contains upsilon_(2,1)
  // twice, both at torus weight 0.
  const auto two = classify(CaseSpec::u2(2, 1), TauSpec{{su2(0), IrrepLabel::u(2, {1, 0}), eta(1, {})}}, 5);
  REQUIRE(two.multiplicity_found());
  CHECK(two.witness->label.to_string() == "(χ0; υ(2,1); η())");
  CHECK(route_strings(*two.witness) == std::vector<std::string>{"r=1,s=1,j=0,i=0", "r=1,s=1,j=0,i=0,copy=1"});
  // determinant powers stay free
  CHECK_FALSE(classify(CaseSpec::u2(2, 1), TauSpec{{su2(0), IrrepLabel::u(2, {1, 1}), eta(1, {})}}, 5)
                  .multiplicity_found());
}

TEST_CASE("expected verdicts") {
  const auto I = CaseSpec::heisenberg_type(2);
  CHECK(expected_verdict(I, TauSpec{{su2(0), eta(2, {2, 2})}}).outcome == Expected::Commutative);
  CHECK(expected_verdict(I, TauSpec{{su2(3), eta(2, {})}}).outcome == Expected::Commutative);
  CHECK(expected_verdict(I, TauSpec{{su2(1), eta(2, {1, 1})}}).outcome == Expected::NotCommutative);
  CHECK(expected_verdict(I, TauSpec{{su2(0), eta(2, {2, 1})}}).outcome == Expected::NotCommutative);
  const auto III = CaseSpec::sp2(2);
  CHECK(expected_verdict(III, TauSpec{{eta(2, {}), eta(2, {1})}}).outcome == Expected::NotCommutative);
  CHECK(expected_verdict(III, TauSpec::trivial(III)).outcome == Expected::Commutative);
  const auto VIII = CaseSpec::blocks({3}, {{2, 1}});
  const TauSpec circles{{IrrepLabel::su(3, Partition{}), IrrepLabel::circle(4), su2(0), IrrepLabel::u(2, {1, -2}),
                         eta(1, {})}};
  CHECK(expected_verdict(VIII, circles).outcome == Expected::Commutative);
  TauSpec with_sp = circles;
  with_sp.labels[4] = eta(1, {1});
  CHECK(expected_verdict(VIII, with_sp).outcome == Expected::NotCommutative);
  const auto IX = CaseSpec::heisenberg(2);
  CHECK(expected_verdict(IX, TauSpec{{IrrepLabel::u(2, {3, -1})}}).outcome == Expected::Commutative);
  const auto V = CaseSpec::su_circle(3);
  CHECK(expected_verdict(V, TauSpec{{IrrepLabel::su(3, Partition{}), IrrepLabel::circle(-2)}}).outcome ==
        Expected::Commutative);
}

TEST_CASE("cross check examples") {
  const auto I = CaseSpec::heisenberg_type(2);
  const auto a = cross_check(I, TauSpec{{su2(2), eta(2, {})}}, 6);
  CHECK(a.consistency == Consistency::Consistent);
  CHECK(a.expected.outcome == Expected::Commutative);
  CHECK_FALSE(a.verdict.multiplicity_found());

  const auto V = CaseSpec::su_circle(3);
  const auto b = cross_check(V, TauSpec{{IrrepLabel::su(3, Partition{1}), IrrepLabel::circle(0)}}, 6);
  CHECK(b.consistency == Consistency::Consistent);
  CHECK(b.verdict.multiplicity_found());

  // A witness that needs a higher degree than allowed is reported, not passed.
  const auto c = cross_check(I, TauSpec{{su2(1), eta(2, {1})}}, 1);
  CHECK(c.consistency == Consistency::Inconclusive);
}

TEST_CASE("trivial tau is multiplicity free in every case") {
  for (const auto& spec : all_small_cases())
    for (int D = 0; D <= 6; ++D) {
      CAPTURE(spec.describe());
      CHECK_FALSE(classify(spec, TauSpec::trivial(spec), D).multiplicity_found());
    }
}

TEST_CASE("constant symplectic partitions in case I") {
  for (int n = 2; n <= 3; ++n)
    for (int a = 1; a <= 2; ++a)
      for (int len = 1; len <= n; ++len) {
        const TauSpec tau{{su2(0), eta(n, Partition(std::vector<int>(static_cast<std::size_t>(len), a)))}};
        CHECK_FALSE(classify(CaseSpec::heisenberg_type(n), tau, 6).multiplicity_found());
      }
}

TEST_CASE("verdicts are monotone in the degree") {
  const auto spec = CaseSpec::sp2(2);
  for (const auto& tau : enumerate_taus(spec, 2)) {
    const auto base = classify(spec, tau, 3);
    if (!base.multiplicity_found()) continue;
    for (int D = 4; D <= 6; ++D) {
      const auto v = classify(spec, tau, D);
      REQUIRE(v.multiplicity_found());
      CHECK(v.witness->degree == base.witness->degree);
      CHECK(v.witness->label == base.witness->label);
    }
  }
}

TEST_CASE("sweeps") {
  const auto I = CaseSpec::heisenberg_type(2);
  const auto rows = sweep(I, 2, 6, 2);
  CHECK(rows.size() == 3 * 4);
  for (const auto& r : rows) CHECK(r.check.consistency == Consistency::Consistent);
  CHECK(rows.front().tau.is_trivial());
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1].tau.weight_size() <= rows[i].tau.weight_size());

  for (const auto& r : sweep(CaseSpec::heisenberg(2), 2, 6)) {
    CHECK_FALSE(r.check.verdict.multiplicity_found());
    CHECK(r.check.expected.outcome == Expected::Commutative);
  }

  for (const auto& r : sweep(CaseSpec::free_so(2), 1, 4))
    CHECK(r.check.verdict.multiplicity_found() == !r.tau.is_trivial());

  const auto serial = sweep(CaseSpec::spin4(1, 1), 1, std::nullopt, 1);
  const auto parallel = sweep(CaseSpec::spin4(1, 1), 1, std::nullopt, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].tau == parallel[i].tau);
    CHECK(serial[i].degree == default_degree(serial[i].tau));
    CHECK(serial[i].check.verdict == parallel[i].check.verdict);
  }
}

TEST_CASE("witnesses are sound and appear within the default window") {
  for (const auto& spec : all_small_cases())
    for (const auto& row : sweep(spec, 2, std::nullopt)) {
      if (!row.check.verdict.multiplicity_found()) continue;
      const auto& w = *row.check.verdict.witness;
      CAPTURE(spec.describe());
      CAPTURE(row.tau.describe(spec));
      CHECK(w.routes.size() >= 2);
      CHECK(w.routes.size() == w.mult);
      CHECK(w.degree <= default_degree(row.tau));
      for (std::size_t i = 1; i < w.routes.size(); ++i) CHECK_FALSE(w.routes[i] == w.routes[0]);
      for (const auto& r : w.routes) CHECK(verify_route(spec, row.tau, w.label, r));
    }
}
