// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "multfree/character.hpp"
#include "multfree/classifier.hpp"
#include "multfree/sp_pieri.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace multfree;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(std::string what) {
    pass = false;
    if (failures.size() < 12) failures.push_back(std::move(what));
  }
};

IrrepSum oracle(const IrrepLabel& a, const IrrepLabel& b) { return decompose_product({a, b}); }

IrrepLabel row(int n, int s) { return IrrepLabel::sp(n, s ? Partition{s} : Partition{}); }

IrrepLabel column(int n, int r) { return IrrepLabel::sp(n, Partition(std::vector<int>(static_cast<std::size_t>(r), 1))); }

std::string sum_text(const IrrepSum& s) {
  return render_sum(s, [](const IrrepLabel& l) { return l.to_string(); });
}

Outcome sym_sym() {
  Outcome o;
  int cases = 0;
  for (int n = 2; n <= 3; ++n)
    for (int r = 0; r <= 4; ++r)
      for (int s = 0; s <= r; ++s, ++cases) {
        const auto rule = tensor_sym_sym(r, s, n);
        if (rule.via_oracle) o.fail("closed form not applied at r=" + std::to_string(r) + " s=" + std::to_string(s));
        if (rule.sum != oracle(row(n, r), row(n, s)))
          o.fail("n=" + std::to_string(n) + " r=" + std::to_string(r) + " s=" + std::to_string(s) + ": " +
                 sum_text(rule.sum));
      }
  o.detail = std::to_string(cases) + " products";
  return o;
}

Outcome column_sym() {
  Outcome o;
  int cases = 0;
  for (int r = 2; r <= 3; ++r)
    for (int s = 2; s <= 3; ++s, ++cases) {
      const auto rule = tensor_column_sym(r, s, 4);
      if (rule.via_oracle) o.fail("closed form not applied at r=" + std::to_string(r) + " s=" + std::to_string(s));
      if (rule.sum != oracle(column(4, r), row(4, s)))
        o.fail("r=" + std::to_string(r) + " s=" + std::to_string(s) + ": " + sum_text(rule.sum));
    }
  o.detail = std::to_string(cases) + " products in Sp(4)";
  return o;
}

Outcome pieri() {
  Outcome o;
  int cases = 0;
  for (int n = 2; n <= 3; ++n)
    for (int size = 0; size <= 4; ++size)
      for (const auto& eta : partitions_of(size, static_cast<std::size_t>(n)))
        for (int s = 0; s <= 3; ++s, ++cases)
          if (pieri_tensor(eta, s, n) != oracle(IrrepLabel::sp(n, eta), row(n, s)))
            o.fail("n=" + std::to_string(n) + " eta=" + eta.to_string() + " s=" + std::to_string(s));
  o.detail = std::to_string(cases) + " products";
  return o;
}

Outcome contains_self() {
  Outcome o;
  int cases = 0;
  std::string empty_note;
  for (int n = 1; n <= 3; ++n)
    for (int size = 0; size <= 5; ++size)
      for (const auto& eta : partitions_of(size, static_cast<std::size_t>(n))) {
        const auto label = IrrepLabel::sp(n, eta);
        const auto mult = oracle(label, row(n, 2)).multiplicity(label);
        if (eta.empty()) {
          // eta_() (x) eta_(2) = eta_(2): the claim needs a last nonzero row.
          if (mult != 0) o.fail("n=" + std::to_string(n) + " eta=(): expected multiplicity 0");
          continue;
        }
        ++cases;
        if (mult < 1) o.fail("n=" + std::to_string(n) + " eta=" + eta.to_string());
      }
  o.detail = std::to_string(cases) + " nontrivial eta; eta=() excluded (its product with eta_(2) is eta_(2))";
  return o;
}

Outcome constant_iff_free() {
  Outcome o;
  int cases = 0;
  for (int n = 2; n <= 3; ++n)
    for (int size = 0; size <= 4; ++size)
      for (const auto& eta : partitions_of(size, static_cast<std::size_t>(n))) {
        ++cases;
        bool free = true;
        for (int s = 0; s <= 5 && free; ++s) free = oracle(IrrepLabel::sp(n, eta), row(n, s)).is_multiplicity_free();
        if (free != eta.is_constant())
          o.fail("n=" + std::to_string(n) + " eta=" + eta.to_string() + (free ? " free" : " not free"));
      }
  o.detail = std::to_string(cases) + " labels, s <= 5";
  return o;
}

Outcome sweep_all() {
  Outcome o;
  std::size_t rows = 0, inconclusive = 0, violations = 0;
  for (const auto& spec : standard_instances())
    for (const auto& r : sweep(spec, 2, 6)) {
      ++rows;
      if (r.check.consistency == Consistency::Consistent) continue;
      (r.check.consistency == Consistency::Inconclusive ? inconclusive : violations)++;
      std::string what = consistency_name(r.check.consistency) + " " + spec.describe() + " " + r.tau.describe(spec);
      if (r.check.verdict.witness) what += ": witness " + r.check.verdict.witness->label.to_string();
      o.fail(what);
    }
  o.detail = std::to_string(rows) + " rows, " + std::to_string(inconclusive) + " inconclusive, " +
             std::to_string(violations) + " violations; commutative rows certified up to degree 6 only";
  return o;
}

Outcome witness() {
  Outcome o;
  const auto v = classify(CaseSpec::heisenberg_type(2),
                          TauSpec{{IrrepLabel::su(2, Partition{1}), IrrepLabel::sp(2, {1})}}, 4);
  if (!v.witness) {
    o.fail("no witness");
    return o;
  }
  std::string routes;
  for (const auto& r : v.witness->routes) routes += (routes.empty() ? "" : " | ") + r.to_string();
  if (v.witness->label.to_string() != "(χ1; η(1))") o.fail("label " + v.witness->label.to_string());
  if (routes != "s=0,i=0 | s=2,i=1") o.fail("routes " + routes);
  o.detail = v.witness->label.to_string() + " via " + routes;
  return o;
}

Outcome oracle_consistency() {
  Outcome o;
  std::size_t pairs = 0;
  for (const Family fam : {Family::Sp, Family::U, Family::SU, Family::SO, Family::Circle})
    for (int rank = 1; rank <= 3; ++rank) {
      if ((fam == Family::SU || fam == Family::SO) && rank < 2) continue;
      if (fam == Family::Circle && rank != 1) continue;
      const auto labels = labels_up_to(fam, rank, 4);
      for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i; j < labels.size(); ++j, ++pairs) {
          const auto& a = labels[i];
          const auto& b = labels[j];
          const auto ab = oracle(a, b);
          Integer dim = 0;
          LaurentPoly rebuilt(weyl_character(a).variables());
          for (const auto& [l, m] : ab.entries()) {
            dim += weyl_dimension(l) * m;
            LaurentPoly chi = weyl_character(l);
            chi *= m;
            rebuilt += chi;
          }
          const std::string what = a.describe() + " x " + b.describe();
          if (dim != weyl_dimension(a) * weyl_dimension(b)) o.fail("dimension " + what);
          if (rebuilt != weyl_character(a) * weyl_character(b)) o.fail("character " + what);
        }
    }
  o.detail = std::to_string(pairs) + " pairs over SU, Sp, U, SO, circle";
  return o;
}

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0 = none
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "eta_(r) x eta_(s) closed form equals the oracle, 0<=s<=r<=4, n=2,3", 10, sym_sym},
      {2, "eta_(1^r) x eta_(s) closed form equals the oracle, r,s in {2,3}, n=4", 0, column_sym},
      {3, "strip-counting rule equals the oracle, |eta|<=4, s<=3, n=2,3", 60, pieri},
      {4, "eta occurs in eta x eta_(2), |eta|<=5, n<=3", 0, contains_self},
      {5, "eta x eta_(s) free for all s<=5 iff eta constant, |eta|<=4, n=2,3", 0, constant_iff_free},
      {6, "classification cross-check sweep, bound 2, degree 6", 300, sweep_all},
      {7, "witness for SU(2) x Sp(2), tau = nu_1 x eta_(1)", 0, witness},
      {8, "dimension and character reconstruction, rank<=3, |weight|<=4", 0, oracle_consistency},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.pass = false;
      o.failures.push_back("took longer than " + std::to_string(static_cast<int>(c.limit_seconds)) + " s");
    }
    std::printf("%s  criterion %d: %s [%.2f s] %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                o.detail.c_str());
    for (const auto& f : o.failures) std::printf("        %s\n", f.c_str());
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
