#pragma once

#include "multfree/classifier.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace multfree {

using Json = nlohmann::json;

/*
  JSON forms.

    Partition       [2,1]
    IrrepLabel      {"family":"Sp","rank":2,"weight":[2,1]}
    FormalSum       [{"label":...,"mult":2}, ...] ascending by label; a
                    truncated sum is {"truncation":D,"terms":[...]}
    CompositeLabel  {"torus":[1],"u":[IrrepLabel, ...]}
    Params          [["s",2],["i",1]] in construction order
    Route           {"degree":2,"omega":Params,"tau":Params,"copy":0}
    Witness         {"label":CompositeLabel,"mult":2,"degree":2,"routes":[...]}
    Verdict         {"outcome":"MULTIPLICITY_FOUND"|"MULTIPLICITY_FREE_UP_TO",
                     "degree_bound":D,"witness":Witness?}
    CaseSpec        {"case":"VII","k":2,"n":1}; VIII uses "su_blocks":[3]
                    and "u2_blocks":[[1,0]]
    TauSpec         [{"factor":"su2","label":IrrepLabel}, ...]
*/
void to_json(Json& j, const Partition& p);
void from_json(const Json& j, Partition& p);
void to_json(Json& j, const IrrepLabel& l);
void from_json(const Json& j, IrrepLabel& l);
void to_json(Json& j, const CompositeLabel& l);
void from_json(const Json& j, CompositeLabel& l);
void to_json(Json& j, const Route& r);
void from_json(const Json& j, Route& r);
void to_json(Json& j, const Witness& w);
void from_json(const Json& j, Witness& w);
void to_json(Json& j, const Verdict& v);
void from_json(const Json& j, Verdict& v);
void to_json(Json& j, const CaseSpec& s);
void from_json(const Json& j, CaseSpec& s);

template <class Label>
void to_json(Json& j, const FormalSum<Label>& s) {
  Json terms = Json::array();
  for (const auto& [label, mult] : s.entries()) terms.push_back({{"label", label}, {"mult", mult}});
  if (s.truncation())
    j = {{"truncation", *s.truncation()}, {"terms", std::move(terms)}};
  else
    j = std::move(terms);
}

template <class Label>
void from_json(const Json& j, FormalSum<Label>& s) {
  s = FormalSum<Label>();
  const Json* terms = &j;
  if (j.is_object()) {
    s.set_truncation(j.at("truncation").get<int>());
    terms = &j.at("terms");
  }
  for (const auto& t : *terms) {
    const auto mult = t.at("mult").get<Multiplicity>();
    if (mult == 0) throw std::invalid_argument("json: zero multiplicity");
    s.add(t.at("label").get<Label>(), mult);
  }
}

Json tau_to_json(const CaseSpec& spec, const TauSpec& tau);
// Factors may be listed in any order; missing ones are trivial.
TauSpec tau_from_json(const CaseSpec& spec, const Json& j);

// One report row: case, params, tau, degree, verdict, expected, consistency
// and witness when one was found. No free-text fields.
Json report_row(const CaseSpec& spec, const SweepRow& row);

/*
  Persistent form of the pairwise product cache: a single JSON object
  {"schema":N,"products":{"Sp|2|1|1": FormalSum, ...}}.
  Loading ignores files with another schema or that fail to parse and
  returns how many entries were added.
*/
inline constexpr int kCacheSchema = 1;
std::string cache_key_string(const ProductCache::Key& key);
std::size_t load_cache(const std::filesystem::path& path, ProductCache& cache);
void save_cache(const std::filesystem::path& path, const ProductCache& cache);

}  // namespace multfree
