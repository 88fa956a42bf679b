#include "multfree/metaplectic.hpp"

#include "multfree/character.hpp"
#include "multfree/sp_pieri.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace multfree {

namespace {

constexpr const char* kCaseNames[] = {"I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX"};

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// All vectors of `parts` nonnegative integers summing to d, descending lex.
std::vector<std::vector<int>> compositions(int d, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(parts), 0);
  std::function<void(int, int)> walk = [&](int i, int left) {
    if (i == parts - 1) {
      cur[static_cast<std::size_t>(i)] = left;
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[static_cast<std::size_t>(i)] = v;
      walk(i + 1, left - v);
    }
  };
  if (parts == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  walk(0, d);
  return out;
}

Params prefixed(const Params& p, const std::string& prefix) {
  Params out;
  for (const auto& [k, v] : p) out.emplace_back(prefix + k, v);
  return out;
}

// Product of independent pieces: torus vectors and factor lists are
// concatenated, not added.
ProductTerm juxtapose(const ProductTerm& a, const ProductTerm& b) {
  ProductTerm out = a;
  out.torus.insert(out.torus.end(), b.torus.begin(), b.torus.end());
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  out.params.insert(out.params.end(), b.params.begin(), b.params.end());
  return out;
}

// C^m under T^{m-1} x S^1, the circle acting by scalars. A monomial z^j has
// SU(m) weight (j_i - j_m)_{i<m} and circle weight |j|.
std::vector<ProductTerm> unitary_block(int m, int d) {
  std::vector<ProductTerm> out;
  for (const auto& j : compositions(d, m)) {
    ProductTerm t;
    for (int i = 0; i + 1 < m; ++i) t.torus.push_back(j[static_cast<std::size_t>(i)] - j.back());
    t.torus.push_back(d);
    for (int i = 0; i < m; ++i) t.params.emplace_back("m" + std::to_string(i + 1), j[static_cast<std::size_t>(i)]);
    out.push_back(std::move(t));
  }
  return out;
}

// (C^2)^k + (C^2)^n under T^1 x U(k) x Sp(n):
// chi_{r-s+j} (x) (upsilon_(r) (x) upsilon_(s)) (x) eta_(j).
std::vector<ProductTerm> u2_block(int k, int n, int d) {
  std::vector<ProductTerm> out;
  for (int r = d; r >= 0; --r)
    for (int s = d - r; s >= 0; --s) {
      const int j = d - r - s;
      if (n == 0 && j != 0) continue;
      ProductTerm t;
      t.torus = {r - s + j};
      t.factors.push_back({IrrepLabel::u(k, {r}), IrrepLabel::u(k, {s})});
      if (n > 0) t.factors.push_back({IrrepLabel::sp(n, Partition{j})});
      t.params = {{"r", r}, {"s", s}, {"j", j}};
      out.push_back(std::move(t));
    }
  return out;
}

using BlockSlice = std::function<std::vector<ProductTerm>(int)>;

// Terms of total degree d of a product of blocks, each block graded
// separately.
std::vector<ProductTerm> block_product(const std::vector<BlockSlice>& blocks, int d) {
  std::vector<ProductTerm> out;
  for (const auto& split : compositions(d, static_cast<int>(blocks.size()))) {
    std::vector<ProductTerm> acc{ProductTerm{}};
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      std::vector<ProductTerm> next;
      for (const auto& piece : blocks[b](split[b])) {
        ProductTerm p = piece;
        p.params = prefixed(p.params, "b" + std::to_string(b + 1) + ".");
        for (const auto& a : acc) next.push_back(juxtapose(a, p));
      }
      acc = std::move(next);
    }
    out.insert(out.end(), acc.begin(), acc.end());
  }
  return out;
}

std::vector<BlockSlice> case8_blocks(const CaseSpec& spec) {
  std::vector<BlockSlice> blocks;
  for (int m : spec.su_blocks) blocks.push_back([m](int d) { return unitary_block(m, d); });
  for (auto [k, n] : spec.u2_blocks) blocks.push_back([k, n](int d) { return u2_block(k, n, d); });
  return blocks;
}

bool single_row(const IrrepLabel& l) { return l.weight.size() <= 1; }

int row(const IrrepLabel& l) { return l.weight.empty() ? 0 : l.weight[0]; }

IrrepSum pair_decompose(const IrrepLabel& a, const IrrepLabel& b) {
  if (a.family == Family::Sp) {
    const int n = a.rank;
    if (single_row(a) && single_row(b)) return tensor_sym_sym(row(a), row(b), n).sum;
    if (single_row(b)) return pieri_tensor(Partition(a.weight), row(b), n);
    if (single_row(a)) return pieri_tensor(Partition(b.weight), row(a), n);
  }
  return decompose_product({a, b});
}

IrrepLabel shift_u(const IrrepLabel& l, int by) {
  std::vector<int> w = l.weight;
  for (int& x : w) x += by;
  return IrrepLabel::u(l.rank, std::move(w));
}

IrrepSum decompose_list(const Group& g, const std::vector<IrrepLabel>& labels) {
  IrrepSum acc;
  if (labels.empty()) {
    acc.add(IrrepLabel::trivial(g.family, g.rank));
    return acc;
  }
  std::vector<IrrepLabel> work = labels;
  int total_shift = 0;
  if (g.family == Family::U) {
    for (auto& l : work) {
      const int low = *std::min_element(l.weight.begin(), l.weight.end());
      if (low < 0) {
        l = shift_u(l, -low);
        total_shift += -low;
      }
    }
  }
  acc.add(work.front());
  for (std::size_t i = 1; i < work.size(); ++i) {
    IrrepSum next;
    for (const auto& [label, mult] : acc.entries()) {
      const IrrepSum pieces = pair_decompose(label, work[i]);
      for (const auto& [piece, m2] : pieces.entries()) next.add(piece, mult * m2);
    }
    acc = std::move(next);
  }
  if (total_shift == 0) return acc;
  return acc.map_labels([&](const IrrepLabel& l) { return shift_u(l, -total_shift); });
}

}  // namespace

std::string case_name(CaseId id) { return kCaseNames[static_cast<int>(id)]; }

CaseId case_from_name(const std::string& name) {
  std::string upper = name;
  std::transform(upper.begin(), upper.end(), upper.begin(), ::toupper);
  for (int i = 0; i < 9; ++i)
    if (upper == kCaseNames[i]) return static_cast<CaseId>(i);
  throw std::invalid_argument("unknown case '" + name + "'");
}

CaseSpec CaseSpec::heisenberg_type(int n) { CaseSpec s; s.id = CaseId::I; s.n = n; s.validate(); return s; }
CaseSpec CaseSpec::spin4(int k1, int k2) { CaseSpec s; s.id = CaseId::II; s.k1 = k1; s.k2 = k2; s.validate(); return s; }
CaseSpec CaseSpec::sp2(int n) { CaseSpec s; s.id = CaseId::III; s.n = n; s.validate(); return s; }
CaseSpec CaseSpec::free_so(int n) { CaseSpec s; s.id = CaseId::IV; s.n = n; s.validate(); return s; }
CaseSpec CaseSpec::su_circle(int n) { CaseSpec s; s.id = CaseId::V; s.n = n; s.validate(); return s; }
CaseSpec CaseSpec::u_circle(int n) { CaseSpec s; s.id = CaseId::VI; s.n = n; s.validate(); return s; }
CaseSpec CaseSpec::u2(int k, int n) { CaseSpec s; s.id = CaseId::VII; s.k = k; s.n = n; s.validate(); return s; }
CaseSpec CaseSpec::heisenberg(int n) { CaseSpec s; s.id = CaseId::IX; s.n = n; s.validate(); return s; }

CaseSpec CaseSpec::blocks(std::vector<int> su, std::vector<std::pair<int, int>> u2) {
  CaseSpec s;
  s.id = CaseId::VIII;
  s.su_blocks = std::move(su);
  s.u2_blocks = std::move(u2);
  s.validate();
  return s;
}

void CaseSpec::validate() const {
  const std::string where = "case " + case_name(id) + ": ";
  switch (id) {
    case CaseId::I:
    case CaseId::III:
    case CaseId::IX: require(n >= 1, where + "n must be at least 1"); break;
    case CaseId::II:
      require(k1 >= 0 && k2 >= 0 && k1 + k2 >= 1, where + "need k1, k2 >= 0 and k1 + k2 >= 1");
      break;
    case CaseId::IV: require(n >= 2, where + "n must be at least 2"); break;
    case CaseId::V:
    case CaseId::VI: require(n >= 3, where + "n must be at least 3"); break;
    case CaseId::VII: require(k >= 1 && n >= 0, where + "need k >= 1 and n >= 0"); break;
    case CaseId::VIII:
      for (int m : su_blocks) require(m >= 3, where + "every m_i must be at least 3");
      for (auto [kk, nn] : u2_blocks) require(kk >= 1 && nn >= 0, where + "need k_j >= 1 and n_j >= 0");
      // The center has dimension between 1 and (number of blocks) - 1.
      require(su_blocks.size() + u2_blocks.size() >= 2, where + "need at least two blocks");
      break;
  }
}

std::string CaseSpec::describe() const {
  const std::string name = case_name(id);
  switch (id) {
    case CaseId::II: return name + "(k1=" + std::to_string(k1) + ",k2=" + std::to_string(k2) + ")";
    case CaseId::VII: return name + "(k=" + std::to_string(k) + ",n=" + std::to_string(n) + ")";
    case CaseId::VIII: {
      std::string out = name + "(";
      bool first = true;
      for (int m : su_blocks) {
        out += (first ? "" : ";") + std::string("m=") + std::to_string(m);
        first = false;
      }
      for (auto [kk, nn] : u2_blocks) {
        out += (first ? "" : ";") + std::string("k=") + std::to_string(kk) + ",n=" + std::to_string(nn);
        first = false;
      }
      return out + ")";
    }
    default: return name + "(n=" + std::to_string(n) + ")";
  }
}

std::vector<FactorSpec> tau_factors(const CaseSpec& spec) {
  spec.validate();
  std::vector<FactorSpec> f;
  switch (spec.id) {
    case CaseId::I:
      f.push_back({"su2", Family::SU, 2, 0, -1, "i"});
      f.push_back({"sp", Family::Sp, spec.n, -1, 0, ""});
      break;
    case CaseId::II: {
      f.push_back({"su2a", Family::SU, 2, 0, -1, "i"});
      f.push_back({"su2b", Family::SU, 2, 1, -1, "j"});
      int u = 0;
      if (spec.k1 > 0) f.push_back({"spa", Family::Sp, spec.k1, -1, u++, ""});
      if (spec.k2 > 0) f.push_back({"spb", Family::Sp, spec.k2, -1, u++, ""});
      break;
    }
    case CaseId::III:
      f.push_back({"sp2", Family::Sp, 2, 0, -1, "w"});
      f.push_back({"sp", Family::Sp, spec.n, -1, 0, ""});
      break;
    case CaseId::IV: f.push_back({"so", Family::SO, spec.n, 0, -1, "w"}); break;
    case CaseId::V:
    case CaseId::VI:
      f.push_back({"su", Family::SU, spec.n, 0, -1, "w"});
      f.push_back({"s1", Family::Circle, 1, spec.n - 1, -1, ""});
      break;
    case CaseId::VII:
      f.push_back({"su2", Family::SU, 2, 0, -1, "i"});
      f.push_back({"u", Family::U, spec.k, -1, 0, ""});
      if (spec.n > 0) f.push_back({"sp", Family::Sp, spec.n, -1, 1, ""});
      break;
    case CaseId::VIII: {
      int offset = 0, u = 0;
      for (std::size_t b = 0; b < spec.su_blocks.size(); ++b) {
        const int m = spec.su_blocks[b];
        const std::string idx = std::to_string(b + 1);
        f.push_back({"su." + idx, Family::SU, m, offset, -1, "su." + idx + ".w"});
        f.push_back({"s1." + idx, Family::Circle, 1, offset + m - 1, -1, ""});
        offset += m;
      }
      for (std::size_t b = 0; b < spec.u2_blocks.size(); ++b) {
        const auto [kk, nn] = spec.u2_blocks[b];
        const std::string idx = std::to_string(b + 1);
        f.push_back({"su2." + idx, Family::SU, 2, offset, -1, "su2." + idx + ".i"});
        f.push_back({"u." + idx, Family::U, kk, -1, u++, ""});
        if (nn > 0) f.push_back({"sp." + idx, Family::Sp, nn, -1, u++, ""});
        offset += 1;
      }
      break;
    }
    case CaseId::IX: f.push_back({"u", Family::U, spec.n, -1, 0, ""}); break;
  }
  return f;
}

std::vector<Group> u_groups(const CaseSpec& spec) {
  std::vector<Group> g;
  for (const auto& f : tau_factors(spec))
    if (f.u_index >= 0) g.push_back({f.family, f.rank});
  return g;
}

int torus_dimension(const CaseSpec& spec) {
  int dim = 0;
  for (const auto& f : tau_factors(spec))
    if (f.torus_offset >= 0) dim = std::max(dim, f.torus_offset + IrrepLabel::trivial(f.family, f.rank).torus_dimension());
  return dim;
}

TauSpec TauSpec::trivial(const CaseSpec& spec) {
  TauSpec t;
  for (const auto& f : tau_factors(spec)) t.labels.push_back(IrrepLabel::trivial(f.family, f.rank));
  return t;
}

int TauSpec::weight_size() const {
  int s = 0;
  for (const auto& l : labels) s += l.weight_size();
  return s;
}

bool TauSpec::is_trivial() const {
  return std::all_of(labels.begin(), labels.end(), [](const IrrepLabel& l) { return l.is_trivial(); });
}

std::string TauSpec::describe(const CaseSpec& spec) const {
  const auto factors = tau_factors(spec);
  std::string out;
  for (std::size_t i = 0; i < labels.size() && i < factors.size(); ++i) {
    if (labels[i].is_trivial()) continue;
    if (!out.empty()) out += ' ';
    out += factors[i].name + "=" + labels[i].to_string();
  }
  return out.empty() ? "trivial" : out;
}

void validate_tau(const CaseSpec& spec, const TauSpec& tau) {
  const auto factors = tau_factors(spec);
  require(tau.labels.size() == factors.size(), "tau has " + std::to_string(tau.labels.size()) +
                                                   " factors, case " + spec.describe() + " needs " +
                                                   std::to_string(factors.size()));
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& l = tau.labels[i];
    require(l.family == factors[i].family && l.rank == factors[i].rank,
            "tau factor " + factors[i].name + " must be a label of " +
                IrrepLabel::trivial(factors[i].family, factors[i].rank).describe());
    IrrepLabel::make(l.family, l.rank, l.weight);
  }
}

std::string CompositeLabel::to_string() const {
  std::vector<std::string> parts;
  if (torus.size() == 1) {
    parts.push_back("χ" + std::to_string(torus[0]));
  } else if (!torus.empty()) {
    std::string t = "χ(";
    for (std::size_t i = 0; i < torus.size(); ++i) t += (i ? "," : "") + std::to_string(torus[i]);
    parts.push_back(t + ")");
  }
  for (const auto& l : u) {
    switch (l.family) {
      case Family::Sp: parts.push_back("η" + l.to_string()); break;
      case Family::U: parts.push_back("υ" + l.to_string()); break;
      default: parts.push_back(l.describe()); break;
    }
  }
  if (parts.empty()) return "()";
  if (parts.size() == 1) return parts[0];
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "; " : "") + parts[i];
  return out + ")";
}

std::string render_params(const Params& p) {
  std::string out;
  for (const auto& [k, v] : p) out += (out.empty() ? "" : ",") + k + "=" + std::to_string(v);
  return out;
}

std::vector<ProductTerm> omega_slice(const CaseSpec& spec, int d) {
  spec.validate();
  if (d < 0) throw std::invalid_argument("omega_slice: negative degree");
  std::vector<ProductTerm> out;
  switch (spec.id) {
    case CaseId::I:
      out.push_back({{d}, {{IrrepLabel::sp(spec.n, Partition{d})}}, {{"s", d}}});
      break;
    case CaseId::II:
      // chi_(r+l1, s+l2) (x) eta_(r) (x) eta_(s); a missing Sp factor forces
      // its degree to 0.
      for (const auto& c : compositions(d, 4)) {
        const int r = c[0], s = c[1], l1 = c[2], l2 = c[3];
        if ((spec.k1 == 0 && r) || (spec.k2 == 0 && s)) continue;
        ProductTerm t;
        t.torus = {r + l1, s + l2};
        if (spec.k1 > 0) t.factors.push_back({IrrepLabel::sp(spec.k1, Partition{r})});
        if (spec.k2 > 0) t.factors.push_back({IrrepLabel::sp(spec.k2, Partition{s})});
        t.params = {{"r", r}, {"s", s}, {"l1", l1}, {"l2", l2}};
        out.push_back(std::move(t));
      }
      break;
    case CaseId::III:
      for (int r = d; r >= 0; --r)
        out.push_back({{r, d - r},
                       {{IrrepLabel::sp(spec.n, Partition{r}), IrrepLabel::sp(spec.n, Partition{d - r})}},
                       {{"r", r}, {"s", d - r}}});
      break;
    case CaseId::IV:
      for (const auto& c : compositions(d, spec.n)) {
        ProductTerm t;
        t.torus = c;
        for (int i = 0; i < spec.n; ++i) t.params.emplace_back("k" + std::to_string(i + 1), c[static_cast<std::size_t>(i)]);
        out.push_back(std::move(t));
      }
      break;
    case CaseId::V:
    case CaseId::VI: out = unitary_block(spec.n, d); break;
    case CaseId::VII: out = u2_block(spec.k, spec.n, d); break;
    case CaseId::VIII: out = block_product(case8_blocks(spec), d); break;
    case CaseId::IX:
      out.push_back({{}, {{IrrepLabel::u(spec.n, {d})}}, {{"r", d}}});
      break;
  }
  return out;
}

std::vector<ProductTerm> tau_terms(const CaseSpec& spec, const TauSpec& tau) {
  validate_tau(spec, tau);
  const auto factors = tau_factors(spec);
  const auto groups = u_groups(spec);
  ProductTerm base;
  base.torus.assign(static_cast<std::size_t>(torus_dimension(spec)), 0);
  base.factors.resize(groups.size());
  std::vector<ProductTerm> acc{base};
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const auto& fs = factors[f];
    const auto& label = tau.labels[f];
    if (fs.u_index >= 0) {
      for (auto& t : acc) t.factors[static_cast<std::size_t>(fs.u_index)].push_back(label);
      continue;
    }
    const auto ws = weight_system(label);
    const auto weights = ws.descending();
    std::vector<ProductTerm> next;
    for (const auto& t : acc) {
      for (std::size_t w = 0; w < weights.size(); ++w) {
        const auto& [vec, mult] = weights[w];
        for (Multiplicity copy = 0; copy < mult; ++copy) {
          ProductTerm u = t;
          for (std::size_t c = 0; c < vec.size(); ++c)
            u.torus[static_cast<std::size_t>(fs.torus_offset) + c] += vec[c];
          if (!fs.param.empty()) {
            // SU(2) weights are k - 2i; other groups are indexed by position
            // in the descending weight list.
            const bool su2 = fs.family == Family::SU && fs.rank == 2;
            u.params.emplace_back(fs.param, su2 ? (row(label) - vec[0]) / 2 : static_cast<int>(w));
            if (mult > 1) u.params.emplace_back(fs.param + ".copy", static_cast<int>(copy));
          }
          next.push_back(std::move(u));
        }
      }
    }
    acc = std::move(next);
  }
  return acc;
}

ProductTerm combine(const ProductTerm& a, const ProductTerm& b) {
  if (a.torus.size() != b.torus.size() || a.factors.size() != b.factors.size())
    throw std::invalid_argument("combine: terms of different shapes");
  ProductTerm out = a;
  for (std::size_t i = 0; i < out.torus.size(); ++i) out.torus[i] += b.torus[i];
  for (std::size_t g = 0; g < out.factors.size(); ++g)
    out.factors[g].insert(out.factors[g].end(), b.factors[g].begin(), b.factors[g].end());
  out.params.insert(out.params.end(), b.params.begin(), b.params.end());
  return out;
}

CompositeSum expand(const ProductTerm& term, const std::vector<Group>& groups) {
  if (term.factors.size() != groups.size()) throw std::invalid_argument("expand: wrong number of groups");
  std::vector<std::pair<CompositeLabel, Multiplicity>> acc{{CompositeLabel{term.torus, {}}, 1}};
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const IrrepSum pieces = decompose_list(groups[g], term.factors[g]);
    std::vector<std::pair<CompositeLabel, Multiplicity>> next;
    for (const auto& [label, mult] : acc)
      for (const auto& [piece, m2] : pieces.entries()) {
        CompositeLabel l = label;
        l.u.push_back(piece);
        next.emplace_back(std::move(l), mult * m2);
      }
    acc = std::move(next);
  }
  CompositeSum out;
  for (const auto& [label, mult] : acc) out.add(label, mult);
  return out;
}

CompositeSum omega_series(const CaseSpec& spec, int D) {
  const auto groups = u_groups(spec);
  CompositeSum out;
  for (int d = 0; d <= D; ++d)
    for (const auto& t : omega_slice(spec, d)) out.add(expand(t, groups));
  out.set_truncation(D);
  return out;
}

CompositeSum tau_restriction(const CaseSpec& spec, const TauSpec& tau) {
  const auto groups = u_groups(spec);
  CompositeSum out;
  for (const auto& t : tau_terms(spec, tau)) out.add(expand(t, groups));
  return out;
}

CompositeSum omega_tensor_tau(const CaseSpec& spec, const TauSpec& tau, int D) {
  const auto groups = u_groups(spec);
  const auto taus = tau_terms(spec, tau);
  CompositeSum out;
  for (int d = 0; d <= D; ++d)
    for (const auto& w : omega_slice(spec, d))
      for (const auto& t : taus) out.add(expand(combine(w, t), groups));
  out.set_truncation(D);
  return out;
}

}  // namespace multfree
