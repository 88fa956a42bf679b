#include "multfree/irrep.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace multfree {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::SU: return "SU";
    case Family::Sp: return "Sp";
    case Family::U: return "U";
    case Family::Circle: return "Circle";
    case Family::SO: return "SO";
  }
  return "?";
}

Family family_from_name(std::string_view name) {
  if (name == "SU" || name == "su") return Family::SU;
  if (name == "Sp" || name == "sp") return Family::Sp;
  if (name == "U" || name == "u") return Family::U;
  if (name == "Circle" || name == "circle" || name == "S1" || name == "s1") return Family::Circle;
  if (name == "SO" || name == "so") return Family::SO;
  throw std::invalid_argument("unknown group family '" + std::string(name) + "'");
}

int torus_dimension(Family family, int rank) {
  switch (family) {
    case Family::SU: return rank - 1;
    case Family::Sp:
    case Family::U:
    case Family::SO: return rank;
    case Family::Circle: return 1;
  }
  return 0;
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

void require_decreasing(const std::vector<int>& w, const std::string& group) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] > w[i - 1]) bad(group + " weight must be weakly decreasing");
}

}  // namespace

IrrepLabel IrrepLabel::make(Family family, int rank, std::vector<int> weight) {
  IrrepLabel l;
  l.family = family;
  l.rank = rank;
  switch (family) {
    case Family::SU: {
      if (rank < 2) bad("SU(m) needs m >= 2");
      Partition p = Partition::from_parts(weight);
      if (p.length() > static_cast<std::size_t>(rank - 1))
        bad("SU(" + std::to_string(rank) + ") label " + p.to_string() + " is too long");
      l.weight = p.parts();
      break;
    }
    case Family::Sp: {
      if (rank < 1) bad("Sp(n) needs n >= 1");
      Partition p = Partition::from_parts(weight);
      if (p.length() > static_cast<std::size_t>(rank))
        bad("Sp(" + std::to_string(rank) + ") label " + p.to_string() + " is too long");
      l.weight = p.parts();
      break;
    }
    case Family::U: {
      if (rank < 1) bad("U(k) needs k >= 1");
      if (weight.size() > static_cast<std::size_t>(rank))
        bad("U(" + std::to_string(rank) + ") weight has too many entries");
      // Short nonnegative weights are padded with zeros.
      while (weight.size() < static_cast<std::size_t>(rank)) {
        if (!weight.empty() && weight.back() < 0)
          bad("U(k) weight with negative entries must list all k entries");
        weight.push_back(0);
      }
      require_decreasing(weight, "U(k)");
      l.weight = std::move(weight);
      break;
    }
    case Family::Circle: {
      if (rank != 1) bad("circle rank must be 1");
      if (weight.size() > 1) bad("circle weight is a single integer");
      l.weight = {weight.empty() ? 0 : weight[0]};
      break;
    }
    case Family::SO: {
      if (rank < 2) bad("SO(2n) needs n >= 2");
      if (weight.size() > static_cast<std::size_t>(rank))
        bad("SO(2n) weight has too many entries");
      while (weight.size() < static_cast<std::size_t>(rank)) weight.push_back(0);
      for (std::size_t i = 0; i + 1 < weight.size(); ++i) {
        if (weight[i] < 0) bad("SO(2n) weight entries other than the last must be >= 0");
        if (i + 2 < weight.size() && weight[i + 1] > weight[i])
          bad("SO(2n) weight must be weakly decreasing");
      }
      if (weight.size() >= 2 && std::abs(weight.back()) > weight[weight.size() - 2])
        bad("SO(2n) weight needs l_{n-1} >= |l_n|");
      l.weight = std::move(weight);
      break;
    }
  }
  return l;
}

IrrepLabel IrrepLabel::su(int m, const Partition& p) { return make(Family::SU, m, p.parts()); }
IrrepLabel IrrepLabel::sp(int n, const Partition& p) { return make(Family::Sp, n, p.parts()); }
IrrepLabel IrrepLabel::u(int k, std::vector<int> weight) {
  return make(Family::U, k, std::move(weight));
}
IrrepLabel IrrepLabel::circle(int r) { return make(Family::Circle, 1, {r}); }
IrrepLabel IrrepLabel::so(int n, std::vector<int> weight) {
  return make(Family::SO, n, std::move(weight));
}

IrrepLabel IrrepLabel::trivial(Family family, int rank) { return make(family, rank, {}); }

bool IrrepLabel::is_trivial() const {
  for (int w : weight)
    if (w != 0) return false;
  return true;
}

int IrrepLabel::torus_dimension() const { return multfree::torus_dimension(family, rank); }

std::vector<int> IrrepLabel::torus_weight() const {
  std::vector<int> out = weight;
  out.resize(static_cast<std::size_t>(torus_dimension()), 0);
  return out;
}

int IrrepLabel::weight_size() const {
  int s = 0;
  for (int w : weight) s += std::abs(w);
  return s;
}

std::string IrrepLabel::to_string() const {
  if (family == Family::Circle) return "χ" + std::to_string(weight[0]);
  if (family == Family::SU && rank == 2) return "ν" + std::to_string(weight.empty() ? 0 : weight[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < weight.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(weight[i]);
  }
  return out + ")";
}

std::string IrrepLabel::describe() const {
  std::string group = std::string(family_name(family));
  if (family == Family::SO) group += "(" + std::to_string(2 * rank) + ")";
  else if (family != Family::Circle) group += "(" + std::to_string(rank) + ")";
  return group + to_string();
}

}  // namespace multfree
