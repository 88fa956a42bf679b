#include "multfree/serialize.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

namespace multfree {

namespace {

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::vector<int> split_ints(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    out.push_back(std::stoi(tok, &used));
    if (used != tok.size()) throw std::invalid_argument("bad integer '" + tok + "'");
  }
  return out;
}

std::vector<std::string> split_fields(const std::string& s, char sep) {
  std::vector<std::string> out(1);
  for (char c : s) {
    if (c == sep)
      out.emplace_back();
    else
      out.back() += c;
  }
  return out;
}

std::string expected_name(Expected e) {
  return e == Expected::Commutative ? "COMMUTATIVE" : "NOT_COMMUTATIVE";
}

}  // namespace

void to_json(Json& j, const Partition& p) { j = p.parts(); }

void from_json(const Json& j, Partition& p) {
  const auto parts = j.get<std::vector<int>>();
  p = Partition::from_parts(parts);
}

void to_json(Json& j, const IrrepLabel& l) {
  j = {{"family", std::string(family_name(l.family))}, {"rank", l.rank}, {"weight", l.weight}};
}

void from_json(const Json& j, IrrepLabel& l) {
  l = IrrepLabel::make(family_from_name(j.at("family").get<std::string>()), j.at("rank").get<int>(),
                       j.at("weight").get<std::vector<int>>());
}

void to_json(Json& j, const CompositeLabel& l) { j = {{"torus", l.torus}, {"u", l.u}}; }

void from_json(const Json& j, CompositeLabel& l) {
  l.torus = j.at("torus").get<std::vector<int>>();
  l.u = j.at("u").get<std::vector<IrrepLabel>>();
}

void to_json(Json& j, const Route& r) {
  j = {{"degree", r.degree}, {"omega", r.omega}, {"tau", r.tau}, {"copy", r.copy}};
}

void from_json(const Json& j, Route& r) {
  r.degree = j.at("degree").get<int>();
  r.omega = j.at("omega").get<Params>();
  r.tau = j.at("tau").get<Params>();
  r.copy = j.at("copy").get<Multiplicity>();
}

void to_json(Json& j, const Witness& w) {
  j = {{"label", w.label}, {"mult", w.mult}, {"degree", w.degree}, {"routes", w.routes}};
}

void from_json(const Json& j, Witness& w) {
  w.label = j.at("label").get<CompositeLabel>();
  w.mult = j.at("mult").get<Multiplicity>();
  w.degree = j.at("degree").get<int>();
  w.routes = j.at("routes").get<std::vector<Route>>();
}

void to_json(Json& j, const Verdict& v) {
  j = {{"outcome", v.witness ? "MULTIPLICITY_FOUND" : "MULTIPLICITY_FREE_UP_TO"}, {"degree_bound", v.degree_bound}};
  if (v.witness) j["witness"] = *v.witness;
}

void from_json(const Json& j, Verdict& v) {
  const auto outcome = j.at("outcome").get<std::string>();
  v.degree_bound = j.at("degree_bound").get<int>();
  if (outcome == "MULTIPLICITY_FOUND")
    v.witness = j.at("witness").get<Witness>();
  else if (outcome == "MULTIPLICITY_FREE_UP_TO")
    v.witness.reset();
  else
    throw std::invalid_argument("json: unknown verdict outcome '" + outcome + "'");
}

void to_json(Json& j, const CaseSpec& s) {
  j = {{"case", case_name(s.id)}};
  switch (s.id) {
    case CaseId::II:
      j["k1"] = s.k1;
      j["k2"] = s.k2;
      break;
    case CaseId::VII:
      j["k"] = s.k;
      j["n"] = s.n;
      break;
    case CaseId::VIII:
      j["su_blocks"] = s.su_blocks;
      j["u2_blocks"] = s.u2_blocks;
      break;
    default: j["n"] = s.n;
  }
}

void from_json(const Json& j, CaseSpec& s) {
  s = CaseSpec();
  s.id = case_from_name(j.at("case").get<std::string>());
  s.n = j.value("n", 0);
  s.k = j.value("k", 0);
  s.k1 = j.value("k1", 0);
  s.k2 = j.value("k2", 0);
  s.su_blocks = j.value("su_blocks", std::vector<int>{});
  s.u2_blocks = j.value("u2_blocks", std::vector<std::pair<int, int>>{});
  s.validate();
}

Json tau_to_json(const CaseSpec& spec, const TauSpec& tau) {
  const auto factors = tau_factors(spec);
  Json out = Json::array();
  for (std::size_t i = 0; i < factors.size() && i < tau.labels.size(); ++i)
    out.push_back({{"factor", factors[i].name}, {"label", tau.labels[i]}});
  return out;
}

TauSpec tau_from_json(const CaseSpec& spec, const Json& j) {
  const auto factors = tau_factors(spec);
  TauSpec tau = TauSpec::trivial(spec);
  for (const auto& entry : j) {
    const auto name = entry.at("factor").get<std::string>();
    std::size_t i = 0;
    while (i < factors.size() && factors[i].name != name) ++i;
    if (i == factors.size()) throw std::invalid_argument("json: case " + spec.describe() + " has no factor '" + name + "'");
    tau.labels[i] = entry.at("label").get<IrrepLabel>();
  }
  validate_tau(spec, tau);
  return tau;
}

Json report_row(const CaseSpec& spec, const SweepRow& row) {
  Json params = spec;
  params.erase("case");
  Json j = {{"case", case_name(spec.id)},
            {"params", std::move(params)},
            {"tau", tau_to_json(spec, row.tau)},
            {"degree", row.degree},
            {"verdict", row.check.verdict.witness ? "MULTIPLICITY_FOUND" : "MULTIPLICITY_FREE_UP_TO"},
            {"expected", expected_name(row.check.expected.outcome)},
            {"consistency", consistency_name(row.check.consistency)}};
  if (row.check.verdict.witness) j["witness"] = *row.check.verdict.witness;
  return j;
}

std::string cache_key_string(const ProductCache::Key& key) {
  return std::string(family_name(key.family)) + "|" + std::to_string(key.rank) + "|" + join(key.first) + "|" +
         join(key.second);
}

std::size_t load_cache(const std::filesystem::path& path, ProductCache& cache) {
  std::ifstream in(path);
  if (!in) return 0;
  std::vector<std::pair<ProductCache::Key, IrrepSum>> parsed;
  try {
    const Json j = Json::parse(in);
    if (!j.is_object() || j.value("schema", -1) != kCacheSchema) return 0;
    for (const auto& [text, sum] : j.at("products").items()) {
      const auto fields = split_fields(text, '|');
      if (fields.size() != 4) return 0;
      ProductCache::Key key{family_from_name(fields[0]), std::stoi(fields[1]), split_ints(fields[2]),
                            split_ints(fields[3])};
      parsed.emplace_back(std::move(key), sum.get<IrrepSum>());
    }
  } catch (const std::exception&) {
    return 0;
  }
  for (const auto& [key, sum] : parsed) cache.insert(key, sum);
  return parsed.size();
}

void save_cache(const std::filesystem::path& path, const ProductCache& cache) {
  Json products = Json::object();
  for (const auto& [key, sum] : cache.snapshot()) products[cache_key_string(key)] = sum;
  const Json j = {{"schema", kCacheSchema}, {"products", std::move(products)}};
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << j.dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace multfree
