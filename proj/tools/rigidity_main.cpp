// Command-line front end: ingest groups, compute rigidity and multiplier
// invariants singly or as corpus scans, emit JSON-lines or CSV reports.
//
// Exit codes: 0 success, 1 parse error, 2 violated structural assertion,
// 3 budget exhaustion.

#include <atomic>
#include <condition_variable>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <thread>

#include <CLI11.hpp>

#include "groups/cache.hpp"
#include "groups/catalog.hpp"
#include "groups/isomorphism.hpp"
#include "groups/json_io.hpp"
#include "groups/report.hpp"

namespace fs = std::filesystem;
using namespace groups;

namespace {

struct CommonOpts {
  std::string which = "sha";
  std::vector<std::string> families;
  std::string format = "json";
  std::string cache_path;
  int jobs = 1;
  std::uint64_t budget_nodes = 100'000'000;
  int max_order = 512;
};

SearchBudget make_budget(const CommonOpts& o) {
  SearchBudget b;
  b.nodes = o.budget_nodes;
  b.table_max_order = o.max_order;
  b.subgroup_max_order = std::min(64, o.max_order);
  b.endo_max_order = std::min(64, o.max_order);
  b.cohomology_max_order = std::min(64, o.max_order);
  return b;
}

WhichInvariants make_which(const CommonOpts& o) {
  WhichInvariants w = parse_which(o.which);
  for (const std::string& f : o.families) w.families.push_back(parse_family_kind(f));
  return w;
}

FiniteGroup load_source(const std::string& source, const SearchBudget& budget) {
  if (fs::exists(source) || source.find('/') != std::string::npos ||
      source.size() > 5 && source.substr(source.size() - 5) == ".json")
    return load_group_source_file(source, budget);
  return build(source);
}

void emit(const InvariantReport& r, const std::string& format) {
  if (format == "csv")
    std::cout << report_to_csv_row(r) << "\n";
  else
    std::cout << report_to_json(r).dump() << "\n";
}

int finish_code(const std::vector<InvariantReport>& reports) {
  bool budget = false;
  for (const auto& r : reports) {
    if (!r.violations.empty()) return 2;
    if (!r.budget_exhausted.empty()) budget = true;
  }
  return budget ? 3 : 0;
}

int run_scan(const CommonOpts& opts, const std::string& dir, int order_min, int order_max,
             const std::string& predicate) {
  const SearchBudget budget = make_budget(opts);
  const WhichInvariants which = make_which(opts);
  std::vector<CorpusIssue> issues;
  std::vector<CorpusEntry> corpus = load_corpus(dir, &issues, budget);
  for (const auto& issue : issues)
    std::cerr << "warning: " << issue.file << ": " << issue.message << "\n";

  std::vector<const CorpusEntry*> selected;
  for (const auto& e : corpus) {
    if (e.group.order() < order_min || e.group.order() > order_max) continue;
    if (predicate == "abelian" && !e.group.is_abelian()) continue;
    if (predicate == "nonabelian" && e.group.is_abelian()) continue;
    selected.push_back(&e);
  }

  std::unique_ptr<ResultCache> cache;
  if (!opts.cache_path.empty()) cache = std::make_unique<ResultCache>(opts.cache_path);

  std::vector<InvariantReport> reports(selected.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= selected.size()) return;
      reports[i] = compute_invariants(selected[i]->name, selected[i]->group, which, budget,
                                      cache.get());
    }
  };
  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (cache) cache->flush();

  // Reports stream in corpus order regardless of completion order.
  if (opts.format == "csv") std::cout << csv_header() << "\n";
  for (const auto& r : reports) emit(r, opts.format);

  nlohmann::ordered_json summary;
  summary["groups"] = reports.size();
  int non_rigid = 0;
  nlohmann::ordered_json names = nlohmann::ordered_json::array();
  nlohmann::ordered_json violations = nlohmann::ordered_json::array();
  nlohmann::ordered_json exhausted = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    if (r.sha && !r.sha->is_trivial) {
      ++non_rigid;
      names.push_back(r.name);
    }
    for (const auto& v : r.violations) violations.push_back(r.name + ": " + v);
    if (!r.budget_exhausted.empty()) exhausted.push_back(r.name);
  }
  summary["non_rigid"] = non_rigid;
  summary["non_rigid_names"] = names;
  summary["violations"] = violations;
  summary["budget_exhausted"] = exhausted;
  if (opts.format != "csv") std::cout << nlohmann::ordered_json{{"summary", summary}}.dump() << "\n";
  return finish_code(reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite group rigidity and multiplier toolkit"};
  app.require_subcommand(1);

  CommonOpts opts;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--which", opts.which, "invariants: sha,schur,b0,family:KIND");
    cmd->add_option("--family", opts.families, "extra family kinds");
    cmd->add_option("--format", opts.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--cache", opts.cache_path, "result cache file");
    cmd->add_option("--jobs", opts.jobs, "worker threads for scans");
    cmd->add_option("--budget-nodes", opts.budget_nodes, "search node budget");
    cmd->add_option("--max-order", opts.max_order, "table construction cap");
  };

  std::string source, source_b, dir;
  int order_min = 1, order_max = kAbsoluteMaxOrder;
  std::string predicate = "all";

  CLI::App* info = app.add_subcommand("info", "structure flags of one group");
  info->add_option("source", source, "builder spec or file")->required();
  add_common(info);

  CLI::App* inv = app.add_subcommand("invariants", "invariants of one group");
  inv->add_option("source", source, "builder spec or file")->required();
  add_common(inv);

  CLI::App* scan = app.add_subcommand("scan", "scan a corpus directory");
  scan->add_option("dir", dir, "corpus directory")->required();
  scan->add_option("--order-min", order_min, "minimum order");
  scan->add_option("--order-max", order_max, "maximum order");
  scan->add_option("--filter", predicate, "all|abelian|nonabelian")
      ->check(CLI::IsMember({"all", "abelian", "nonabelian"}));
  add_common(scan);

  CLI::App* iso = app.add_subcommand("isoclinic", "isoclinism verdict for two groups");
  iso->add_option("a", source, "builder spec or file")->required();
  iso->add_option("b", source_b, "builder spec or file")->required();
  add_common(iso);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 1;
  }

  try {
    const SearchBudget budget = make_budget(opts);
    if (info->parsed()) {
      FiniteGroup g = load_source(source, budget);
      InvariantReport r = compute_invariants(source, g, WhichInvariants{}, budget);
      emit(r, opts.format);
      return finish_code({r});
    }
    if (inv->parsed()) {
      FiniteGroup g = load_source(source, budget);
      std::unique_ptr<ResultCache> cache;
      if (!opts.cache_path.empty()) cache = std::make_unique<ResultCache>(opts.cache_path);
      InvariantReport r =
          compute_invariants(source, g, make_which(opts), budget, cache.get());
      if (cache) cache->flush();
      emit(r, opts.format);
      return finish_code({r});
    }
    if (scan->parsed()) return run_scan(opts, dir, order_min, order_max, predicate);
    if (iso->parsed()) {
      FiniteGroup a = load_source(source, budget);
      FiniteGroup b = load_source(source_b, budget);
      const bool verdict = isoclinic(a, b, budget);
      nlohmann::ordered_json j;
      j["isoclinic"] = verdict;
      int code = 0;
      if (verdict) {
        // Invariant agreement cross-check.
        ShaReport sa = sha(a, budget), sb = sha(b, budget);
        bool sha_match = sa.order == sb.order;
        if (sha_match && sa.order > 1)
          sha_match = isomorphic(*sa.quotient_group, *sb.quotient_group, budget).has_value();
        j["sha_match"] = sha_match;
        if (a.order() <= budget.cohomology_max_order &&
            b.order() <= budget.cohomology_max_order) {
          const auto b0a = bogomolov_multiplier(a, budget).structure.divisors;
          const auto b0b = bogomolov_multiplier(b, budget).structure.divisors;
          j["b0_match"] = b0a == b0b;
          if (b0a != b0b) code = 2;
        }
        if (!sha_match) code = 2;
      }
      std::cout << j.dump() << "\n";
      return code;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " (token: '" << e.token << "')\n";
    return 1;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const GroupError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
