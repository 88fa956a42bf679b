#include "doctest.h"
#include "multfree/serialize.hpp"
#include "multfree/sp_pieri.hpp"

#include <cstdlib>
#include <fstream>

using namespace multfree;

namespace {

template <class T>
T round_trip(const T& x) {
  return Json::parse(Json(x).dump()).get<T>();
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("multfree_test_" + name);
}

}  // namespace

TEST_CASE("label and partition forms") {
  CHECK(Json(IrrepLabel::sp(2, {2, 1})).dump() == R"({"family":"Sp","rank":2,"weight":[2,1]})");
  CHECK(Json(Partition{}).dump() == "[]");
  CHECK(Json(Partition{3, 1}).dump() == "[3,1]");
  CHECK_THROWS(Json::parse("[1,2]").get<Partition>());
  CHECK_THROWS(Json::parse(R"({"family":"Sp","rank":1,"weight":[1,1]})").get<IrrepLabel>());
  CHECK_THROWS(Json::parse(R"({"family":"G2","rank":2,"weight":[]})").get<IrrepLabel>());
}

TEST_CASE("formal sums are sorted by label") {
  const auto s = decompose_product({IrrepLabel::sp(2, {1}), IrrepLabel::sp(2, {1})});
  CHECK(Json(s).dump() ==
        R"([{"label":{"family":"Sp","rank":2,"weight":[]},"mult":1},)"
        R"({"label":{"family":"Sp","rank":2,"weight":[1,1]},"mult":1},)"
        R"({"label":{"family":"Sp","rank":2,"weight":[2]},"mult":1}])");
  CHECK(round_trip(s) == s);
}

TEST_CASE("round trips") {
  for (int n = 2; n <= 3; ++n)
    for (int size = 0; size <= 3; ++size)
      for (const auto& eta : partitions_of(size, static_cast<std::size_t>(n)))
        for (int s = 0; s <= 2; ++s) {
          const auto sum = pieri_tensor(eta, s, n);
          CHECK(round_trip(sum) == sum);
        }

  const auto series = omega_series(CaseSpec::u2(2, 1), 3);
  REQUIRE(series.truncation() == 3);
  CHECK(round_trip(series) == series);

  for (const auto& spec : standard_instances()) {
    CHECK(round_trip(spec) == spec);
    for (const auto& row : sweep(spec, 1, std::nullopt)) {
      CHECK(round_trip(row.check.verdict) == row.check.verdict);
      CHECK(tau_from_json(spec, tau_to_json(spec, row.tau)) == row.tau);
    }
  }
}

TEST_CASE("report rows carry no prose") {
  const auto spec = CaseSpec::heisenberg_type(2);
  const auto rows = sweep(spec, 1, 4, 1);
  for (const auto& row : rows) {
    const Json j = report_row(spec, row);
    CHECK(j.at("case") == "I");
    CHECK(j.at("params") == Json{{"n", 2}});
    CHECK(j.contains("witness") == row.check.verdict.multiplicity_found());
    for (const auto& [key, value] : j.items())
      CHECK((key == "case" || key == "params" || key == "tau" || key == "degree" || key == "verdict" ||
             key == "expected" || key == "consistency" || key == "witness"));
  }
  const Json last = report_row(spec, rows.back());
  CHECK(last.at("verdict") == "MULTIPLICITY_FOUND");
  CHECK(last.at("expected") == "NOT_COMMUTATIVE");
  CHECK(last.at("consistency") == "CONSISTENT");
}

TEST_CASE("tau from json rejects unknown factors") {
  const auto spec = CaseSpec::sp2(1);
  CHECK_THROWS(tau_from_json(spec, Json::parse(R"([{"factor":"su2","label":{"family":"SU","rank":2,"weight":[1]}}])")));
  CHECK_THROWS(tau_from_json(spec, Json::parse(R"([{"factor":"sp","label":{"family":"Sp","rank":2,"weight":[1]}}])")));
}

TEST_CASE("cache file") {
  auto& cache = ProductCache::instance();
  const auto path = temp_file("cache.json");
  std::filesystem::remove(path);

  cache.clear();
  omega_tensor_tau(CaseSpec::u2(2, 1), TauSpec{{IrrepLabel::su(2, Partition{1}),
                                                                   IrrepLabel::u(2, {1, 0}), IrrepLabel::sp(1, {1})}},
                                      4);
  REQUIRE(cache.size() > 0);
  const auto stored = cache.snapshot();
  save_cache(path, cache);

  cache.clear();
  CHECK(load_cache(path, cache) == stored.size());
  CHECK(cache.snapshot() == stored);

  SUBCASE("stale schema is ignored") {
    Json j = Json::parse(std::ifstream(path));
    j["schema"] = kCacheSchema + 1;
    std::ofstream(path) << j.dump();
    cache.clear();
    CHECK(load_cache(path, cache) == 0);
    CHECK(cache.size() == 0);
  }
  SUBCASE("garbage is ignored") {
    std::ofstream(path) << "{\"schema\":1,\"products\":{\"Sp|x||\":[]}}";
    cache.clear();
    CHECK(load_cache(path, cache) == 0);
  }
  SUBCASE("missing file") {
    std::filesystem::remove(path);
    CHECK(load_cache(path, cache) == 0);
  }
  std::filesystem::remove(path);
  cache.clear();
}

TEST_CASE("cache key strings") {
  const auto key = product_key(IrrepLabel::u(2, {1, -1}), IrrepLabel::u(2, {0, 0}));
  CHECK(cache_key_string(key) == "U|2|0,0|1,-1");
  CHECK(cache_key_string(product_key(IrrepLabel::sp(2, {}), IrrepLabel::sp(2, {1}))) == "Sp|2||1");
}
