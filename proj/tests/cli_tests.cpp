// End-to-end tests of the command-line tool: exit codes, output formats,
// determinism, and cache behaviour, all through the real binary.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
  if (ok) {
    std::cout << "ok: " << what << "\n";
  } else {
    ++failures;
    std::cout << "FAIL: " << what << "\n";
  }
}

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(RIGIDITY_BIN) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  const int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

std::string strip_timings(const std::string& jsonl) {
  std::istringstream in(jsonl);
  std::string line, out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line);
    j.erase("timings_ms");
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace

int main() {
  // exit 0 and trivial sha for a rigid builder group
  {
    RunResult r = run("invariants sym:3 --which sha");
    check(r.code == 0, "invariants sym:3 exits 0");
    auto j = nlohmann::json::parse(r.out);
    check(j["sha"]["trivial"] == true, "sym:3 sha trivial");
    check(j["order"] == 6, "sym:3 order 6");
  }
  // parse error carries exit code 1
  {
    check(run("invariants frobnicate:3").code == 1, "unknown builder exits 1");
    check(run("invariants sym:3 --which nonsense").code == 1, "unknown invariant exits 1");
  }
  // info subcommand
  {
    RunResult r = run("info quaternion:16");
    check(r.code == 0, "info exits 0");
    auto j = nlohmann::json::parse(r.out);
    check(j["flags"]["nilpotency_class"] == 3, "Q16 class 3");
  }
  // budget exhaustion exits 3
  {
    RunResult r = run("invariants sym:4 --which sha --budget-nodes 10");
    check(r.code == 3, "tiny budget exits 3");
  }
  // scan over the bundled small fixtures: deterministic, cache-stable
  {
    const std::string dir = std::string(FIXTURES_DIR) + "/order_lt_32";
    RunResult a = run("scan " + dir + " --which sha --order-max 16");
    check(a.code == 0, "scan < 32 (order cap 16) exits 0");
    RunResult b = run("scan " + dir + " --which sha --order-max 16");
    check(strip_timings(a.out) == strip_timings(b.out), "scan output deterministic");

    // summary says zero non-rigid groups
    std::istringstream in(a.out);
    std::string line, last;
    while (std::getline(in, line))
      if (!line.empty()) last = line;
    auto j = nlohmann::json::parse(last);
    check(j["summary"]["non_rigid"] == 0, "no non-rigid groups below 32");
    check(j["summary"]["violations"].empty(), "no violations");
  }
  // warm cache scan equals cold scan
  {
    const std::string dir = std::string(FIXTURES_DIR) + "/order_lt_32";
    const fs::path cache = fs::temp_directory_path() / "cli_cache_test.json";
    fs::remove(cache);
    RunResult cold = run("scan " + dir + " --which sha --order-max 12 --cache " + cache.string());
    RunResult warm = run("scan " + dir + " --which sha --order-max 12 --cache " + cache.string());
    check(cold.code == 0 && warm.code == 0, "cached scans exit 0");
    check(strip_timings(cold.out) == strip_timings(warm.out), "warm cache equals cold scan");
    fs::remove(cache);
  }
  // parallel scan emits identical reports in the same order
  {
    const std::string dir = std::string(FIXTURES_DIR) + "/order_lt_32";
    RunResult seq = run("scan " + dir + " --which sha --order-max 16 --jobs 1");
    RunResult par = run("scan " + dir + " --which sha --order-max 16 --jobs 4");
    check(strip_timings(seq.out) == strip_timings(par.out), "--jobs does not change output");
  }
  // csv format
  {
    RunResult r = run("invariants elem:2,2 --which sha,schur --format csv");
    check(r.code == 0, "csv exits 0");
    check(r.out.find("elem:2,2,4,1,1,1,") != std::string::npos, "csv row present");
  }
  // isoclinic verdicts
  {
    RunResult r = run("isoclinic dihedral:4 quaternion:8");
    auto j = nlohmann::json::parse(r.out);
    check(r.code == 0 && j["isoclinic"] == true, "D4 ~ Q8");
    check(j["sha_match"] == true, "sha structures match");
    check(j["b0_match"] == true, "b0 divisors match");
    RunResult s = run("isoclinic sym:3 cyclic:6");
    auto k = nlohmann::json::parse(s.out);
    check(s.code == 0 && k["isoclinic"] == false, "Sym(3) !~ C6");
  }
  // order-32 scan finds the non-rigid witnesses; their B0 still vanishes
  {
    const std::string dir = std::string(FIXTURES_DIR) + "/order_32";
    RunResult r = run("scan " + dir + " --which sha");
    check(r.code == 0, "order-32 sha scan exits 0");
    std::istringstream in(r.out);
    std::string line, last;
    while (std::getline(in, line))
      if (!line.empty()) last = line;
    auto j = nlohmann::json::parse(last);
    check(j["summary"]["non_rigid"] == 2, "exactly two non-rigid groups at order 32");
    std::vector<std::string> names = j["summary"]["non_rigid_names"];
    check(names.size() == 2, "two witness names listed");
    for (const auto& name : names) {
      RunResult b = run("invariants " + dir + "/" + name + ".json --which sha,b0");
      auto k = nlohmann::json::parse(b.out);
      check(b.code == 0 && k["sha"]["trivial"] == false, name + " sha nontrivial");
      check(k["bogomolov"].empty(), name + " b0 trivial");
    }
  }
  // file-based group source
  {
    const fs::path file = fs::temp_directory_path() / "cli_group.json";
    std::ofstream(file) << R"({"order":2,"labels":["e","a"],"table":[[0,1],[1,0]]})";
    RunResult r = run("info " + file.string());
    auto j = nlohmann::json::parse(r.out);
    check(r.code == 0 && j["order"] == 2, "file source loads");
    std::ofstream(file) << R"({"order":3,"table":[[0,1,2],[1,2,0]]})";
    check(run("info " + file.string()).code == 1, "bad file exits 1");
    fs::remove(file);
  }

  std::cout << (failures ? "FAILURES: " : "all ok: ") << failures << "\n";
  return failures ? 1 : 0;
}
