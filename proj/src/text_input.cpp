#include "multfree/text_input.hpp"

#include <sstream>
#include <stdexcept>

namespace multfree {

namespace {

int parse_int(const std::string& tok) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (tok.empty() || used != tok.size()) throw std::invalid_argument("not an integer: '" + tok + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, sep)) out.push_back(tok);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  for (const auto& tok : split(text, ',')) out.push_back(parse_int(tok));
  return out;
}

IrrepLabel label_from_input(Family family, int rank, const std::vector<int>& weights) {
  std::vector<int> w = weights;
  switch (family) {
    case Family::SU: return IrrepLabel::su(rank, Partition::from_parts(w));
    case Family::Sp: return IrrepLabel::sp(rank, Partition::from_parts(w));
    case Family::Circle:
      if (w.size() > 1) throw std::invalid_argument("a circle character takes one integer");
      return IrrepLabel::circle(w.empty() ? 0 : w[0]);
    case Family::U:
    case Family::SO:
      if (w.size() > static_cast<std::size_t>(rank))
        throw std::invalid_argument("too many weight entries for rank " + std::to_string(rank));
      w.resize(static_cast<std::size_t>(rank), 0);
      return IrrepLabel::make(family, rank, w);
  }
  throw std::invalid_argument("unknown family");
}

TauSpec parse_tau(const CaseSpec& spec, const std::string& text) {
  const auto factors = tau_factors(spec);
  TauSpec tau = TauSpec::trivial(spec);
  if (text.empty()) return tau;
  std::vector<std::vector<int>> weights(factors.size());
  std::vector<bool> seen(factors.size(), false);
  int current = -1;
  for (const auto& tok : split(text, ',')) {
    const auto eq = tok.find('=');
    std::string value = tok;
    if (eq != std::string::npos) {
      const std::string name = tok.substr(0, eq);
      current = -1;
      for (std::size_t i = 0; i < factors.size(); ++i)
        if (factors[i].name == name) current = static_cast<int>(i);
      if (current < 0) throw std::invalid_argument("case " + spec.describe() + " has no factor '" + name + "'");
      if (seen[current]) throw std::invalid_argument("factor '" + name + "' given twice");
      seen[current] = true;
      value = tok.substr(eq + 1);
      if (value.empty()) continue;
    } else if (current < 0) {
      throw std::invalid_argument("tau must start with factor=weights, got '" + tok + "'");
    }
    weights[current].push_back(parse_int(value));
  }
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (seen[i]) tau.labels[i] = label_from_input(factors[i].family, factors[i].rank, weights[i]);
  validate_tau(spec, tau);
  return tau;
}

std::vector<std::pair<int, int>> parse_pair_list(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  if (text.empty()) return out;
  for (const auto& tok : split(text, ',')) {
    const auto parts = split(tok, ':');
    if (parts.size() != 2) throw std::invalid_argument("expected k:n, got '" + tok + "'");
    out.emplace_back(parse_int(parts[0]), parse_int(parts[1]));
  }
  return out;
}

}  // namespace multfree
