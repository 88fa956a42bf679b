#include "multfree/character.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

namespace multfree {

namespace {

struct SignedPermutation {
  std::vector<int> perm;   // (w v)_i = sign_i * v_{perm_i}
  std::vector<int> signs;
  int det;
};

int permutation_sign(const std::vector<int>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

// Weyl group of the root system in the given coordinates.
// even_flips_only selects type D; allow_flips=false selects type A.
std::vector<SignedPermutation> weyl_group(int n, bool allow_flips, bool even_flips_only) {
  std::vector<SignedPermutation> out;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const int psign = permutation_sign(perm);
    const unsigned masks = allow_flips ? (1u << n) : 1u;
    for (unsigned mask = 0; mask < masks; ++mask) {
      int flips = __builtin_popcount(mask);
      if (even_flips_only && flips % 2) continue;
      SignedPermutation w{perm, std::vector<int>(static_cast<std::size_t>(n), 1), psign};
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) {
          w.signs[static_cast<std::size_t>(i)] = -1;
          w.det = -w.det;
        }
      out.push_back(std::move(w));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Coordinates in which the Weyl group acts by signed permutations. SU(m)
// is computed through U(m).
struct RootData {
  int dim;
  std::vector<int> rho;
  std::vector<SignedPermutation> weyl;
};

RootData root_data(Family family, int rank) {
  RootData d;
  switch (family) {
    case Family::U:
    case Family::SU: {
      d.dim = rank;
      for (int i = 0; i < rank; ++i) d.rho.push_back(rank - 1 - i);
      d.weyl = weyl_group(rank, false, false);
      break;
    }
    case Family::Sp: {
      d.dim = rank;
      for (int i = 0; i < rank; ++i) d.rho.push_back(rank - i);
      d.weyl = weyl_group(rank, true, false);
      break;
    }
    case Family::SO: {
      d.dim = rank;
      for (int i = 0; i < rank; ++i) d.rho.push_back(rank - 1 - i);
      d.weyl = weyl_group(rank, true, true);
      break;
    }
    case Family::Circle: {
      d.dim = 1;
      d.rho = {0};
      d.weyl = weyl_group(1, false, false);
      break;
    }
  }
  return d;
}

LaurentPoly alternant(const RootData& d, const std::vector<int>& v) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(d.weyl.size());
  for (const auto& w : d.weyl) {
    Exponent e(static_cast<std::size_t>(d.dim));
    for (int i = 0; i < d.dim; ++i) {
      auto ui = static_cast<std::size_t>(i);
      e[ui] = w.signs[ui] * v[static_cast<std::size_t>(w.perm[ui])];
    }
    terms.emplace_back(std::move(e), Integer(w.det));
  }
  return LaurentPoly::from_terms(static_cast<std::size_t>(d.dim), std::move(terms));
}

// Weight in the coordinates of root_data (SU(m) padded to m entries).
std::vector<int> ambient_weight(const IrrepLabel& label) {
  std::vector<int> w = label.weight;
  if (label.family == Family::SU) w.resize(static_cast<std::size_t>(label.rank), 0);
  else w.resize(static_cast<std::size_t>(label.torus_dimension()), 0);
  return w;
}

LaurentPoly compute_character(const IrrepLabel& label) {
  if (label.family == Family::Circle) return LaurentPoly::monomial({label.weight[0]});
  const RootData d = root_data(label.family, label.rank);
  std::vector<int> shifted = ambient_weight(label);
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += d.rho[i];
  LaurentPoly numerator = alternant(d, shifted);
  LaurentPoly denominator = alternant(d, d.rho);
  LaurentPoly chi = numerator.divide_exact(denominator);
  if (label.family != Family::SU) return chi;
  // Project the U(m) character onto the SU(m) torus.
  const std::size_t m = static_cast<std::size_t>(label.rank);
  std::vector<LaurentPoly::Term> projected;
  for (const auto& [e, c] : chi.terms()) {
    Exponent p(m - 1);
    for (std::size_t i = 0; i + 1 < m; ++i) p[i] = e[i] - e[m - 1];
    projected.emplace_back(std::move(p), c);
  }
  return LaurentPoly::from_terms(m - 1, std::move(projected));
}

class CharacterCache {
 public:
  const LaurentPoly& get(const IrrepLabel& label) {
    {
      std::shared_lock lock(mutex_);
      auto it = cache_.find(label);
      if (it != cache_.end()) return it->second;
    }
    LaurentPoly chi = compute_character(label);
    std::unique_lock lock(mutex_);
    return cache_.try_emplace(label, std::move(chi)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<IrrepLabel, LaurentPoly> cache_;
};

CharacterCache& character_cache() {
  static CharacterCache cache;
  return cache;
}

}  // namespace

const LaurentPoly& weyl_character(const IrrepLabel& label) {
  // Revalidate so hand-built labels cannot slip through.
  IrrepLabel canonical = IrrepLabel::make(label.family, label.rank, label.weight);
  return character_cache().get(canonical);
}

Integer weyl_dimension(const IrrepLabel& label) {
  IrrepLabel l = IrrepLabel::make(label.family, label.rank, label.weight);
  if (l.family == Family::Circle) return 1;
  const int n = l.family == Family::SU ? l.rank : l.torus_dimension();
  std::vector<int> rho;
  std::vector<std::vector<int>> roots;
  auto root = [n](int i, int si, int j, int sj) {
    std::vector<int> r(static_cast<std::size_t>(n), 0);
    r[static_cast<std::size_t>(i)] += si;
    if (j >= 0) r[static_cast<std::size_t>(j)] += sj;
    return r;
  };
  switch (l.family) {
    case Family::U:
    case Family::SU:
      for (int i = 0; i < n; ++i) rho.push_back(n - 1 - i);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) roots.push_back(root(i, 1, j, -1));
      break;
    case Family::Sp:
      for (int i = 0; i < n; ++i) rho.push_back(n - i);
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          roots.push_back(root(i, 1, j, -1));
          roots.push_back(root(i, 1, j, 1));
        }
        roots.push_back(root(i, 2, -1, 0));
      }
      break;
    case Family::SO:
      for (int i = 0; i < n; ++i) rho.push_back(n - 1 - i);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          roots.push_back(root(i, 1, j, -1));
          roots.push_back(root(i, 1, j, 1));
        }
      break;
    case Family::Circle:
      break;
  }
  std::vector<int> lam = l.weight;
  lam.resize(static_cast<std::size_t>(n), 0);
  Integer num = 1, den = 1;
  for (const auto& a : roots) {
    long long x = 0, y = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      x += static_cast<long long>(a[i]) * (lam[i] + rho[i]);
      y += static_cast<long long>(a[i]) * rho[i];
    }
    num *= x;
    den *= y;
  }
  if (num % den != 0) throw std::logic_error("weyl_dimension: non-integral result");
  return num / den;
}

FormalSum<TorusWeight> weight_system(const IrrepLabel& label) {
  FormalSum<TorusWeight> out;
  for (const auto& [e, c] : weyl_character(label).terms()) {
    if (c <= 0) throw std::logic_error("weight_system: nonpositive weight multiplicity");
    out.add(e, static_cast<Multiplicity>(c));
  }
  return out;
}

IrrepLabel label_from_dominant(Family family, int rank, const TorusWeight& exponent) {
  auto fail = [&] {
    std::string e;
    for (int x : exponent) e += std::to_string(x) + ' ';
    throw std::logic_error("exponent [" + e + "] is not dominant for " +
                           std::string(family_name(family)));
  };
  if (exponent.size() != static_cast<std::size_t>(torus_dimension(family, rank))) fail();
  try {
    switch (family) {
      case Family::SU:
      case Family::Sp:
        for (int x : exponent)
          if (x < 0) fail();
        return IrrepLabel::make(family, rank, exponent);
      case Family::U:
      case Family::SO:
      case Family::Circle:
        return IrrepLabel::make(family, rank, exponent);
    }
  } catch (const std::invalid_argument&) {
    fail();
  }
  throw std::logic_error("label_from_dominant: unknown family");
}

std::vector<IrrepLabel> labels_up_to(Family family, int rank, int bound) {
  std::vector<IrrepLabel> out;
  if (bound < 0) return out;
  switch (family) {
    case Family::Sp:
    case Family::SU: {
      const int len = family == Family::Sp ? rank : rank - 1;
      for (int s = 0; s <= bound; ++s)
        for (const auto& p : partitions_of(s, static_cast<std::size_t>(len)))
          out.push_back(IrrepLabel::make(family, rank, p.parts()));
      break;
    }
    case Family::Circle:
      for (int r = -bound; r <= bound; ++r) out.push_back(IrrepLabel::circle(r));
      break;
    case Family::U:
    case Family::SO: {
      std::vector<int> w(static_cast<std::size_t>(rank));
      std::function<void(std::size_t, int, int)> walk = [&](std::size_t i, int cap, int budget) {
        if (i == w.size()) {
          try {
            out.push_back(IrrepLabel::make(family, rank, w));
          } catch (const std::invalid_argument&) {
          }
          return;
        }
        for (int v = std::min(cap, budget); v >= -budget; --v) {
          w[i] = v;
          walk(i + 1, v, budget - std::abs(v));
        }
      };
      walk(0, bound, bound);
      break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace multfree
