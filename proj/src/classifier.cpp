#include "multfree/classifier.hpp"

#include "multfree/character.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace multfree {

std::string Route::to_string() const {
  Params all = omega;
  all.insert(all.end(), tau.begin(), tau.end());
  std::string out = render_params(all);
  if (copy > 0) out += (out.empty() ? "" : ",") + std::string("copy=") + std::to_string(copy);
  return out;
}

std::string consistency_name(Consistency c) {
  switch (c) {
    case Consistency::Consistent: return "CONSISTENT";
    case Consistency::Inconclusive: return "INCONCLUSIVE";
    case Consistency::Violation: return "VIOLATION";
  }
  return "?";
}

int default_degree(const TauSpec& tau) { return tau.weight_size() + 4; }

Verdict classify(const CaseSpec& spec, const TauSpec& tau, int D) {
  if (D < 0) throw std::invalid_argument("classify: negative degree");
  const auto groups = u_groups(spec);
  const auto taus = tau_terms(spec, tau);
  CompositeSum acc;
  Verdict v;
  v.degree_bound = D;
  for (int d = 0; d <= D; ++d) {
    std::optional<CompositeLabel> best;
    for (const auto& w : omega_slice(spec, d))
      for (const auto& t : taus) {
        const CompositeSum pieces = expand(combine(w, t), groups);
        acc.add(pieces);
      }
    for (auto it = acc.entries().rbegin(); it != acc.entries().rend(); ++it)
      if (it->second >= 2) {
        best = it->first;
        break;
      }
    if (!best) continue;
    Witness wit{*best, acc.multiplicity(*best), d, {}};
    for (int e = 0; e <= d; ++e)
      for (const auto& w : omega_slice(spec, e))
        for (const auto& t : taus) {
          const Multiplicity m = expand(combine(w, t), groups).multiplicity(*best);
          for (Multiplicity c = 0; c < m; ++c) wit.routes.push_back({e, w.params, t.params, c});
        }
    v.witness = std::move(wit);
    return v;
  }
  return v;
}

bool verify_route(const CaseSpec& spec, const TauSpec& tau, const CompositeLabel& label, const Route& route) {
  const auto groups = u_groups(spec);
  for (const auto& w : omega_slice(spec, route.degree)) {
    if (w.params != route.omega) continue;
    for (const auto& t : tau_terms(spec, tau)) {
      if (t.params != route.tau) continue;
      return expand(combine(w, t), groups).multiplicity(label) > route.copy;
    }
  }
  return false;
}

namespace {

bool all_trivial(const TauSpec& tau, const std::vector<FactorSpec>& factors, auto pick) {
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (pick(factors[i]) && !tau.labels[i].is_trivial()) return false;
  return true;
}

}  // namespace

ExpectedVerdict expected_verdict(const CaseSpec& spec, const TauSpec& tau) {
  validate_tau(spec, tau);
  const auto factors = tau_factors(spec);
  auto verdict = [](bool commutative, std::string why) {
    return ExpectedVerdict{commutative ? Expected::Commutative : Expected::NotCommutative, std::move(why)};
  };
  switch (spec.id) {
    case CaseId::I: {
      const auto& nu = tau.labels[0];
      const Partition eta(tau.labels[1].weight);
      return verdict(eta.empty() || (nu.is_trivial() && eta.is_constant()),
                     "H-type: commutative iff tau is an SU(2) representation or an Sp(n) representation "
                     "with constant partition");
    }
    case CaseId::II:
      return verdict(tau.is_trivial(), "SU(2) x SU(2) acting on R^4 plus quaternionic parts: only trivial tau");
    case CaseId::III: return verdict(tau.is_trivial(), "Sp(2) x Sp(n): only trivial tau");
    case CaseId::IV: return verdict(tau.is_trivial(), "free two-step SO(2n): only trivial tau");
    case CaseId::V:
    case CaseId::VI:
      return verdict(tau.labels[0].is_trivial(), "SU(n) x S^1: commutative iff tau is a circle character");
    case CaseId::VII:
      return verdict(all_trivial(tau, factors, [](const FactorSpec& f) { return f.family != Family::U; }),
                     "SU(2) x U(k) x Sp(n): commutative iff tau is a U(k) representation");
    case CaseId::VIII:
      return verdict(all_trivial(tau, factors,
                                 [](const FactorSpec& f) { return f.family == Family::SU || f.family == Family::Sp; }),
                     "block case: commutative iff tau lives on the circles and the U(k_j) factors");
    case CaseId::IX: return verdict(true, "Heisenberg group with U(n): strong Gelfand pair");
  }
  return verdict(false, "unknown case");
}

CrossCheck cross_check(const CaseSpec& spec, const TauSpec& tau, int D) {
  CrossCheck out{classify(spec, tau, D), expected_verdict(spec, tau), Consistency::Consistent};
  const bool found = out.verdict.multiplicity_found();
  if (out.expected.outcome == Expected::NotCommutative && !found) out.consistency = Consistency::Inconclusive;
  if (out.expected.outcome == Expected::Commutative && found) out.consistency = Consistency::Violation;
  return out;
}

std::vector<TauSpec> enumerate_taus(const CaseSpec& spec, int B) {
  const auto factors = tau_factors(spec);
  std::vector<TauSpec> out{TauSpec{}};
  for (const auto& f : factors) {
    const auto options = labels_up_to(f.family, f.rank, B);
    std::vector<TauSpec> next;
    for (const auto& t : out)
      for (const auto& l : options) {
        TauSpec u = t;
        u.labels.push_back(l);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  std::stable_sort(out.begin(), out.end(), [](const TauSpec& a, const TauSpec& b) {
    const int sa = a.weight_size(), sb = b.weight_size();
    if (sa != sb) return sa < sb;
    return a.labels < b.labels;
  });
  return out;
}

std::vector<SweepRow> sweep(const CaseSpec& spec, int B, std::optional<int> D, unsigned threads) {
  const auto taus = enumerate_taus(spec, B);
  std::vector<std::optional<SweepRow>> rows(taus.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < taus.size(); i = next++) {
      try {
        const int deg = D ? *D : default_degree(taus[i]);
        rows[i] = SweepRow{taus[i], deg, cross_check(spec, taus[i], deg)};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(taus.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  std::vector<SweepRow> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.push_back(std::move(*r));
  return out;
}


std::vector<CaseSpec> standard_instances(CaseId id) {
  switch (id) {
    case CaseId::I: return {CaseSpec::heisenberg_type(2), CaseSpec::heisenberg_type(3)};
    case CaseId::II: return {CaseSpec::spin4(1, 1)};
    case CaseId::III: return {CaseSpec::sp2(1), CaseSpec::sp2(2)};
    case CaseId::IV: return {CaseSpec::free_so(2)};
    case CaseId::V: return {CaseSpec::su_circle(3)};
    case CaseId::VI: return {CaseSpec::u_circle(3)};
    case CaseId::VII: return {CaseSpec::u2(1, 0), CaseSpec::u2(1, 1), CaseSpec::u2(2, 0), CaseSpec::u2(2, 1)};
    case CaseId::VIII: return {CaseSpec::blocks({3}, {{1, 0}})};
    case CaseId::IX: return {CaseSpec::heisenberg(1), CaseSpec::heisenberg(2)};
  }
  return {};
}

std::vector<CaseSpec> standard_instances() {
  std::vector<CaseSpec> out;
  for (int i = 0; i < 9; ++i) {
    auto part = standard_instances(static_cast<CaseId>(i));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace multfree
