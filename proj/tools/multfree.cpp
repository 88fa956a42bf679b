#include "multfree/serialize.hpp"
#include "multfree/sp_pieri.hpp"
#include "multfree/text_input.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace multfree;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;

struct Settings {
  std::optional<int> degree;
  std::filesystem::path cache_path = ".multfree-cache.json";
  bool use_cache = true;
  unsigned threads = 0;
};

// Defaults, then the config file, then MULTFREE_CACHE, then flags.
void apply_config(Settings& s, const std::string& file) {
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot read config file " + file);
  const Json j = Json::parse(in);
  if (j.contains("degree")) s.degree = j["degree"].get<int>();
  if (j.contains("threads")) s.threads = j["threads"].get<unsigned>();
  if (j.contains("cache")) {
    if (j["cache"].is_boolean())
      s.use_cache = j["cache"].get<bool>();
    else
      s.cache_path = j["cache"].get<std::string>();
  }
}

std::string render(const IrrepSum& s) {
  return render_sum(s, [](const IrrepLabel& l) { return l.to_string(); });
}

IrrepSum tensor_with_rules(const std::vector<IrrepLabel>& labels) {
  if (labels.size() == 2 && labels[0].family == Family::Sp && labels[1].family == Family::Sp &&
      labels[0].rank == labels[1].rank) {
    const int n = labels[0].rank;
    const auto& a = labels[0];
    const auto& b = labels[1];
    if (b.weight.size() <= 1) return pieri_tensor(Partition(a.weight), b.weight_size(), n);
    if (a.weight.size() <= 1) return pieri_tensor(Partition(b.weight), a.weight_size(), n);
  }
  return decompose_product(labels);
}

std::string verdict_line(const CrossCheck& c) {
  const auto& v = c.verdict;
  if (v.witness)
    return "MULTIPLICITY at " + v.witness->label.to_string() + " — NOT commutative";
  const std::string d = std::to_string(v.degree_bound);
  if (c.expected.outcome == Expected::Commutative)
    return "multiplicity-free up to degree " + d + " — commutative (expected; certified up to degree " + d + ")";
  return "multiplicity-free up to degree " + d + " — no witness found";
}

std::string short_verdict(const Verdict& v) {
  if (!v.witness) return "free up to " + std::to_string(v.degree_bound);
  return std::to_string(v.witness->mult) + "x " + v.witness->label.to_string() + " at degree " +
         std::to_string(v.witness->degree);
}

std::string expected_text(Expected e) { return e == Expected::Commutative ? "commutative" : "NOT commutative"; }

CaseSpec build_case(const std::string& name, int n, int k, int k1, int k2, const std::string& su_blocks,
                    const std::string& u2_blocks) {
  CaseSpec s;
  s.id = case_from_name(name);
  s.n = n;
  s.k = k;
  s.k1 = k1;
  s.k2 = k2;
  if (s.id == CaseId::VIII) {
    s.su_blocks = parse_int_list(su_blocks);
    s.u2_blocks = parse_pair_list(u2_blocks);
  }
  s.validate();
  return s;
}

std::string pad(std::string s, std::size_t width) {
  // Column widths count code points so the Greek letters line up.
  std::size_t cps = 0;
  for (unsigned char c : s) cps += (c & 0xC0) != 0x80;
  s.append(cps < width ? width - cps : 1, ' ');
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tensor products of classical group representations and multiplicity-free restrictions of "
               "metaplectic representations."};
  app.name("multfree");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string config_file;
  std::optional<std::string> cache_flag;
  bool no_cache = false;
  std::optional<unsigned> threads_flag;
  app.add_option("--config", config_file, "JSON file with degree, cache and threads defaults");
  app.add_option("--cache", cache_flag, "Cache file (default .multfree-cache.json, or $MULTFREE_CACHE)");
  app.add_flag("--no-cache", no_cache, "Neither read nor write the product cache");
  app.add_option("--threads", threads_flag, "Worker threads for sweeps (0 = all cores)");

  // pieri
  auto* pieri = app.add_subcommand("pieri", "eta (x) eta_(s) in Sp(n) by the strip-counting rule");
  std::vector<int> pieri_eta;
  int pieri_s = 0, pieri_n = 0;
  bool pieri_json = false;
  pieri->add_option("eta", pieri_eta, "Parts of eta, weakly decreasing (none for the trivial label)");
  pieri->add_option("--s", pieri_s, "Length of the one-row factor")->required()->check(CLI::NonNegativeNumber);
  pieri->add_option("--n", pieri_n, "Rank of Sp(n)")->required()->check(CLI::PositiveNumber);
  pieri->add_flag("--json", pieri_json, "Print the sum as JSON");

  // tensor
  auto* tensor = app.add_subcommand("tensor", "Decompose a tensor product of irreducibles");
  std::vector<std::string> tensor_args;
  bool tensor_oracle = false, tensor_json = false;
  tensor->add_option("args", tensor_args, "FAMILY RANK -- WEIGHTS -- WEIGHTS ... (weights comma separated)")
      ->required();
  tensor->add_flag("--oracle-only", tensor_oracle, "Skip the closed-form symplectic rules");
  tensor->add_flag("--json", tensor_json, "Print the sum as JSON");
  tensor->footer("Families: su, sp, u, so, circle. Example: tensor u 2 -- 1,0 -- 1,0");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "Decide one triple by multiplicity freedom");
  std::string case_name_arg, tau_text, su_blocks, u2_blocks;
  int c_n = 0, c_k = 0, c_k1 = 0, c_k2 = 0;
  std::optional<int> c_degree;
  bool c_json = false, c_witness = false;
  classify_cmd->add_option("case", case_name_arg, "Case I..IX")->required();
  classify_cmd->add_option("--n", c_n, "n parameter");
  classify_cmd->add_option("--k", c_k, "k parameter (VII)");
  classify_cmd->add_option("--k1", c_k1, "k1 parameter (II)");
  classify_cmd->add_option("--k2", c_k2, "k2 parameter (II)");
  classify_cmd->add_option("--su-blocks", su_blocks, "VIII: SU(m) block sizes, e.g. 3,4");
  classify_cmd->add_option("--u2-blocks", u2_blocks, "VIII: SU(2) blocks as k:n pairs, e.g. 1:0,2:1");
  classify_cmd->add_option("--tau", tau_text, "tau as factor=weights pairs, e.g. su2=1,sp=1");
  classify_cmd->add_option("--degree", c_degree, "Truncation degree (default |tau| + 4)")
      ->check(CLI::NonNegativeNumber);
  classify_cmd->add_flag("--json", c_json, "Print the report row as JSON");
  classify_cmd->add_flag("--witness", c_witness, "List every production route of the witness");
  classify_cmd->footer(
      "Tau factors per case:\n"
      "  I     su2 sp             II   su2a su2b spa spb\n"
      "  III   sp2 sp             IV   so\n"
      "  V,VI  su s1              VII  su2 u sp\n"
      "  VIII  su.i s1.i su2.i u.i sp.i (i = block number)\n"
      "  IX    u");

  // verify
  auto* verify = app.add_subcommand("verify-theorem1", "Cross-check the classification over small cases");
  verify->alias("verify");
  int v_bound = 2;
  std::optional<int> v_degree;
  std::string v_cases;
  bool v_json = false;
  verify->add_option("--bound", v_bound, "Largest weight size per tau factor")->check(CLI::NonNegativeNumber);
  verify->add_option("--degree", v_degree, "Truncation degree (default |tau| + 4 per row)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--cases", v_cases, "Comma separated case ids (default: all)");
  verify->add_flag("--json", v_json, "Print the report as JSON");

  // Weights after "--" may be negative, so the tail of a tensor command is
  // split off before CLI11 sees it. Its own flags may still appear there.
  std::vector<std::string> head(argv, argv + argc), tensor_tail;
  bool tail_json = false, tail_oracle = false;
  if (const auto sub = std::find(head.begin(), head.end(), "tensor"); sub != head.end()) {
    if (const auto dash = std::find(sub, head.end(), "--"); dash != head.end()) {
      for (auto it = dash; it != head.end(); ++it) {
        if (*it == "--json" || *it == "--oracle-only")
          (*it == "--json" ? tail_json : tail_oracle) = true;
        else
          tensor_tail.push_back(*it);
      }
      head.erase(dash, head.end());
    }
  }
  try {
    head.erase(head.begin());
    std::reverse(head.begin(), head.end());
    app.parse(std::move(head));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  Settings settings;
  try {
    if (!config_file.empty()) apply_config(settings, config_file);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  if (const char* env = std::getenv("MULTFREE_CACHE"); env && *env) settings.cache_path = env;
  if (cache_flag) settings.cache_path = *cache_flag;
  if (no_cache) settings.use_cache = false;
  if (threads_flag) settings.threads = *threads_flag;

  auto& cache = ProductCache::instance();
  cache.set_enabled(settings.use_cache);
  std::size_t loaded = settings.use_cache ? load_cache(settings.cache_path, cache) : 0;

  int status = kExitOk;
  try {
    if (*pieri) {
      if (!std::is_sorted(pieri_eta.rbegin(), pieri_eta.rend()) ||
          std::any_of(pieri_eta.begin(), pieri_eta.end(), [](int x) { return x < 0; }))
        throw std::invalid_argument("eta must be a weakly decreasing list of nonnegative integers");
      const IrrepLabel eta = IrrepLabel::sp(pieri_n, Partition(pieri_eta));
      const auto sum = pieri_tensor(Partition(eta.weight), pieri_s, pieri_n);
      std::cout << (pieri_json ? Json(sum).dump() : render(sum)) << '\n';
    } else if (*tensor) {
      for (const auto& extra : tensor_tail) tensor_args.push_back(extra);
      tensor_json = tensor_json || tail_json;
      tensor_oracle = tensor_oracle || tail_oracle;
      if (tensor_args.size() < 3) throw std::invalid_argument("tensor needs FAMILY RANK and at least one weight");
      const Family family = family_from_name(tensor_args[0]);
      const int rank = std::stoi(tensor_args[1]);
      std::vector<IrrepLabel> labels;
      for (std::size_t i = 2; i < tensor_args.size(); ++i) {
        if (tensor_args[i] == "--") continue;
        labels.push_back(label_from_input(family, rank, parse_int_list(tensor_args[i])));
      }
      if (labels.empty()) throw std::invalid_argument("tensor needs at least one weight");
      const auto sum = tensor_oracle ? decompose_product(labels) : tensor_with_rules(labels);
      std::cout << (tensor_json ? Json(sum).dump() : render(sum)) << '\n';
    } else if (*classify_cmd) {
      const CaseSpec spec = build_case(case_name_arg, c_n, c_k, c_k1, c_k2, su_blocks, u2_blocks);
      const TauSpec tau = parse_tau(spec, tau_text);
      const int D = c_degree ? *c_degree : settings.degree ? *settings.degree : default_degree(tau);
      const SweepRow row{tau, D, cross_check(spec, tau, D)};
      if (c_json) {
        std::cout << report_row(spec, row).dump() << '\n';
      } else {
        std::cout << "case " << spec.describe() << ", tau " << tau.describe(spec) << ", degree " << D << '\n';
        std::cout << verdict_line(row.check) << '\n';
        if (row.check.verdict.witness) {
          const auto& w = *row.check.verdict.witness;
          std::cout << "multiplicity " << w.mult << ", first at omega degree " << w.degree << '\n';
          if (c_witness)
            for (const auto& r : w.routes) std::cout << "  route " << r.to_string() << '\n';
        }
        std::cout << "expected: " << expected_text(row.check.expected.outcome) << " (" << row.check.expected.source
                  << ")\n";
        std::cout << "consistency: " << consistency_name(row.check.consistency) << '\n';
      }
      status = row.check.consistency == Consistency::Consistent ? kExitOk : kExitMismatch;
    } else if (*verify) {
      std::vector<CaseSpec> specs;
      if (v_cases.empty()) {
        specs = standard_instances();
      } else {
        std::stringstream in(v_cases);
        std::string id;
        while (std::getline(in, id, ',')) {
          auto part = standard_instances(case_from_name(id));
          specs.insert(specs.end(), part.begin(), part.end());
        }
      }
      const std::optional<int> D = v_degree ? v_degree : settings.degree;
      std::size_t rows = 0, consistent = 0, inconclusive = 0, violations = 0;
      Json report = Json::array();
      if (!v_json)
        std::cout << pad("case", 20) << pad("tau", 28) << pad("D", 4) << pad("verdict", 40) << pad("expected", 18)
                  << "consistency\n";
      for (const auto& spec : specs) {
        for (const auto& row : sweep(spec, v_bound, D, settings.threads)) {
          ++rows;
          switch (row.check.consistency) {
            case Consistency::Consistent: ++consistent; break;
            case Consistency::Inconclusive: ++inconclusive; break;
            case Consistency::Violation: ++violations; break;
          }
          if (v_json)
            report.push_back(report_row(spec, row));
          else
            std::cout << pad(spec.describe(), 20) << pad(row.tau.describe(spec), 28)
                      << pad(std::to_string(row.degree), 4) << pad(short_verdict(row.check.verdict), 40)
                      << pad(expected_text(row.check.expected.outcome), 18)
                      << consistency_name(row.check.consistency) << '\n';
        }
      }
      if (v_json) {
        std::cout << Json{{"rows", report},
                          {"summary",
                           {{"rows", rows},
                            {"consistent", consistent},
                            {"inconclusive", inconclusive},
                            {"violation", violations}}}}
                         .dump()
                  << '\n';
      } else {
        std::cout << rows << " rows: " << consistent << " consistent, " << inconclusive << " inconclusive, "
                  << violations << " violations\n";
        std::cout << "commutative rows are certified only up to their truncation degree\n";
      }
      status = consistent == rows ? kExitOk : kExitMismatch;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }

  if (settings.use_cache && cache.size() > loaded) {
    try {
      save_cache(settings.cache_path, cache);
    } catch (const std::exception& e) {
      std::cerr << "warning: cache not saved: " << e.what() << '\n';
    }
  }
  return status;
}
