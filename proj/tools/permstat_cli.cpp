// Command-line surface of the permutation-statistics engine: statistic
// evaluation, shuffle-coordinate decoding, reference-table verification,
// distribution/joint/equivalence queries, sampling and timing.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permstat/classical.hpp"
#include "permstat/distribution.hpp"
#include "permstat/fisher_yates.hpp"
#include "permstat/group.hpp"
#include "permstat/pattern.hpp"
#include "permstat/reference_tables.hpp"
#include "permstat/registry.hpp"

using json = nlohmann::json;  // keys sort on dump: canonical output
using namespace permstat;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, sep)) out.push_back(tok);
  return out;
}

std::pair<std::string, std::string> parse_pair(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2 || parts[0].empty() || parts[1].empty())
    throw Error(Errc::malformed, "expected EULERIAN:MAHONIAN, got '" + text + "'");
  return {parts[0], parts[1]};
}

std::vector<std::string> stat_list(const std::string& arg) {
  const Registry& reg = default_registry();
  if (arg == "*") {
    std::vector<std::string> all;
    for (const auto& e : reg.entries()) all.push_back(e.name);
    return all;
  }
  std::vector<std::string> names = split(arg, ',');
  for (const auto& name : names) reg.at(name);  // fail early on typos
  return names;
}

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

void emit(const json& doc) { std::cout << doc.dump() << '\n'; }

// --- subcommand handlers -------------------------------------------------

int cmd_eval(const std::string& perm_text, const std::string& stats_arg,
             bool as_json) {
  const Permutation p = parse(perm_text);
  const Registry& reg = default_registry();
  const auto names = stat_list(stats_arg);
  if (as_json) {
    json values;
    for (const auto& name : names) values[name] = reg.evaluate(name, p);
    emit(json{{"perm", format(p)}, {"values", values}});
  } else {
    for (const auto& name : names)
      std::cout << format(p) << '\t' << name << '\t' << reg.evaluate(name, p)
                << '\n';
  }
  return 0;
}

int cmd_decode(const std::string& perm_text, bool as_json) {
  const Permutation p = parse(perm_text);
  const auto [jp, ji] = decode_pair(p);
  const auto dp = distances(jp), di = distances(ji);
  std::int64_t st = 0, sti = 0;
  for (int d : dp.d) st += d;
  for (int d : di.d) sti += d;
  if (as_json) {
    emit(json{{"perm", format(p)},
              {"j", jp.j},
              {"d", dp.d},
              {"stat", st},
              {"inverse_j", ji.j},
              {"inverse_d", di.d},
              {"stati", sti}});
  } else {
    std::cout << "j\t" << join_ints(jp.j) << '\n';
    std::cout << "d\t" << join_ints(dp.d) << '\n';
    std::cout << "stat\t" << st << '\n';
    std::cout << "inverse_j\t" << join_ints(ji.j) << '\n';
    std::cout << "inverse_d\t" << join_ints(di.d) << '\n';
    std::cout << "stati\t" << sti << '\n';
  }
  return 0;
}

int cmd_verify(const std::string& table, bool as_json) {
  const VerificationReport report = verify_table(table);
  if (as_json) {
    json diffs = json::array();
    for (const auto& d : report.diffs)
      diffs.push_back(json{{"cell", d.cell},
                           {"variant", d.variant},
                           {"expected", d.expected},
                           {"computed", d.computed}});
    emit(json{{"table", report.table},
              {"status", std::string(to_string(report.status))},
              {"diffs", diffs}});
  } else {
    std::cout << "table\t" << report.table << "\tstatus\t"
              << to_string(report.status) << '\n';
    for (const auto& d : report.diffs)
      std::cout << "diff\t" << d.cell << '\t' << d.variant << "\texpected\t"
                << d.expected << "\tcomputed\t" << d.computed << '\n';
  }
  return report.status == VerifyStatus::failure ? kExitCheckFailed : 0;
}

int cmd_dist(const std::string& stat_name, int n, int threads, bool as_json) {
  const DistPolynomial d = distribution(default_registry(), stat_name, n, threads);
  if (as_json) {
    emit(json{{"n", d.n}, {"stat", stat_name}, {"coeffs", d.coeffs}});
  } else {
    for (size_t v = 0; v < d.coeffs.size(); ++v)
      std::cout << v << '\t' << d.coeffs[v] << '\n';
  }
  return 0;
}

int cmd_joint(const std::string& pair_arg, int n, int threads, bool as_json) {
  const auto [e, m] = parse_pair(pair_arg);
  const JointDist j = joint(default_registry(), e, m, n, threads);
  if (as_json) {
    emit(json{{"rows", j.rows}});
  } else {
    for (const auto& row : j.rows) {
      for (size_t c = 0; c < row.size(); ++c)
        std::cout << (c ? "\t" : "") << row[c];
      std::cout << '\n';
    }
  }
  return 0;
}

int cmd_check(const std::string& what, const std::string& stat_name,
              const std::string& pair_arg, const std::string& ref_arg,
              int max_n, int threads, bool as_json) {
  const Registry& reg = default_registry();
  bool all_pass = true;
  json per_n = json::array();
  std::vector<std::string> lines;
  for (int n = 1; n <= max_n; ++n) {
    bool pass = false;
    if (what == "mahonian") {
      pass = is_mahonian(reg, stat_name, n, threads);
    } else if (what == "eulerian") {
      pass = is_eulerian(reg, stat_name, n, threads);
    } else {  // euler-mahonian
      pass = equidistributed(reg, parse_pair(pair_arg), parse_pair(ref_arg), n,
                             threads);
    }
    all_pass = all_pass && pass;
    per_n.push_back(pass);
    lines.push_back("n=" + std::to_string(n) + "\t" + (pass ? "PASS" : "FAIL"));
  }
  if (as_json) {
    emit(json{{"check", what},
              {"max_n", max_n},
              {"pass", all_pass},
              {"per_n", per_n}});
  } else {
    for (const auto& line : lines) std::cout << line << '\n';
    std::cout << "RESULT\t" << (all_pass ? "PASS" : "FAIL") << '\n';
  }
  return all_pass ? 0 : kExitCheckFailed;
}

int cmd_search_equiv(const std::string& target, std::string candidates_arg,
                     int max_n, bool as_json) {
  const Registry& reg = default_registry();
  std::vector<std::string> candidates;
  if (candidates_arg.empty()) {
    // the classical Mahonian statistics: everything except the two shuffle
    // statistics under test
    for (const auto& name : reg.names(StatKind::mahonian))
      if (name != "stat" && name != "stati") candidates.push_back(name);
  } else {
    candidates = stat_list(candidates_arg);
  }
  const auto survivors = equiv_search(reg, target, candidates, max_n);
  if (as_json) {
    json found = json::array();
    for (const auto& [name, g] : survivors)
      found.push_back(json{{"stat", name}, {"element", std::string(g.name())}});
    emit(json{{"target", target}, {"max_n", max_n}, {"equivalents", found}});
  } else {
    if (survivors.empty()) {
      std::cout << "no equivalent found\n";
    } else {
      for (const auto& [name, g] : survivors)
        std::cout << name << '\t' << g.name() << '\n';
    }
  }
  return 0;
}

int cmd_classes(const std::string& eulerian, const std::string& stats_arg,
                int n, int threads, bool as_json) {
  std::vector<std::string> names;
  if (stats_arg.empty())
    names = default_registry().names(StatKind::mahonian);
  else
    names = stat_list(stats_arg);
  const auto classes =
      partition_classes(default_registry(), names, eulerian, n, threads);
  if (as_json) {
    emit(json{{"eulerian", eulerian}, {"n", n}, {"classes", classes}});
  } else {
    for (size_t c = 0; c < classes.size(); ++c) {
      std::cout << "class\t" << c;
      for (const auto& name : classes[c]) std::cout << '\t' << name;
      std::cout << '\n';
    }
  }
  return 0;
}

int cmd_orbit(const std::string& perm_text, bool as_json) {
  const Permutation p = parse(perm_text);
  const auto orb = orbit(p);
  if (as_json) {
    json by_element;
    for (const auto& g : GroupElement::all())
      by_element[std::string(g.name())] = format(apply(g, p));
    json members = json::array();
    for (const auto& q : orb) members.push_back(format(q));
    emit(json{{"perm", format(p)}, {"images", by_element}, {"orbit", members}});
  } else {
    for (const auto& g : GroupElement::all())
      std::cout << g.name() << '\t' << format(apply(g, p)) << '\n';
    std::cout << "orbit_size\t" << orb.size() << '\n';
  }
  return 0;
}

int cmd_pattern(const std::string& perm_text,
                const std::vector<std::string>& patterns, bool as_json) {
  const Permutation p = parse(perm_text);
  if (as_json) {
    json counts;
    for (const auto& text : patterns)
      counts[text] = count_vincular(p, VincularPattern::parse(text));
    emit(json{{"perm", format(p)}, {"counts", counts}});
  } else {
    for (const auto& text : patterns)
      std::cout << format(p) << '\t' << text << '\t'
                << count_vincular(p, VincularPattern::parse(text)) << '\n';
  }
  return 0;
}

int cmd_sample(int n, std::int64_t count, std::uint64_t seed,
               const std::string& emit_name, bool as_json) {
  const Registry& reg = default_registry();
  if (!emit_name.empty() && emit_name != "id" && emit_name != "rank")
    reg.at(emit_name);
  Sampler sampler(seed);
  json values = json::array();
  for (std::int64_t k = 0; k < count; ++k) {
    const Permutation p = sampler.next(n);
    if (emit_name.empty()) {
      if (as_json)
        values.push_back(format(p));
      else
        std::cout << format(p) << '\n';
    } else {
      // "id"/"rank" emits the 0-based lexicographic rank
      const std::int64_t v = (emit_name == "id" || emit_name == "rank")
                                 ? static_cast<std::int64_t>(rank_of(p))
                                 : reg.evaluate(emit_name, p);
      if (as_json)
        values.push_back(v);
      else
        std::cout << v << '\n';
    }
  }
  if (as_json) emit(json{{"n", n}, {"seed", seed}, {"values", values}});
  return 0;
}

int cmd_bench(const std::string& op, int n, std::uint64_t seed, bool as_json) {
  if (op != "decode") throw Error(Errc::unknown_name, "unknown bench op '" + op + "'");
  const Permutation p = sample(n, seed);
  std::vector<double> runs;
  for (int r = 0; r < 5; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto pair = decode_pair(p);
    const auto t1 = std::chrono::steady_clock::now();
    // keep the result alive so the work is not optimized away
    if (pair.first.j[0] != 1) throw Error(Errc::range, "corrupt decode");
    runs.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  std::sort(runs.begin(), runs.end());
  const double median_ms = runs[2];
  const double ns_per_element = median_ms * 1e6 / static_cast<double>(n);
  if (as_json) {
    emit(json{{"op", op},
              {"n", n},
              {"median_ms", median_ms},
              {"ns_per_element", ns_per_element}});
  } else {
    std::cout << op << '\t' << n << '\t' << median_ms << '\t' << ns_per_element
              << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permstat: permutation statistics of the random-shuffle process"};
  app.require_subcommand(1);
  app.fallthrough();  // let --json / --threads appear after the subcommand
  bool as_json = false;
  int threads = 1;
  app.add_flag("--json", as_json, "emit canonical JSON instead of TSV");
  app.add_option("--threads", threads, "chunks for partitioned enumeration")
      ->check(CLI::Range(1, 64));

  std::string perm_text, stats_arg = "*", table, stat_name, pair_arg,
              ref_arg = "des:maj", target, candidates_arg, eulerian = "des",
              emit_name, bench_op;
  std::vector<std::string> patterns;
  int n = 0, max_n = 0;
  std::int64_t count = 1;
  std::uint64_t seed = 1;

  auto* eval = app.add_subcommand("eval", "evaluate statistics on a permutation");
  eval->add_option("perm", perm_text)->required();
  eval->add_option("names", stats_arg, "comma list of names, or *");
  eval->add_option("--stats", stats_arg, "same as the positional list");

  auto* decode_cmd = app.add_subcommand("decode", "shuffle coordinates of a permutation");
  decode_cmd->add_option("perm", perm_text)->required();

  auto* verify = app.add_subcommand("verify", "recompute an embedded reference table");
  verify->add_option("table", table, "table1, table2 or joint5")->required();

  auto* dist = app.add_subcommand("dist", "distribution of a statistic over S_n");
  dist->add_option("--stat", stat_name)->required();
  dist->add_option("--n", n)->required();

  auto* joint_cmd = app.add_subcommand("joint", "joint distribution of a pair");
  joint_cmd->add_option("--pair", pair_arg, "EULERIAN:MAHONIAN")->required();
  joint_cmd->add_option("--n", n)->required();

  auto* check = app.add_subcommand("check", "certify a distribution property");
  std::string what;
  check->add_option("what", what, "mahonian, eulerian or euler-mahonian")
      ->required()
      ->check(CLI::IsMember({"mahonian", "eulerian", "euler-mahonian"}));
  check->add_option("--stat", stat_name);
  check->add_option("--pair", pair_arg);
  check->add_option("--ref", ref_arg);
  check->add_option("--max-n", max_n)->required();

  auto* search = app.add_subcommand("search-equiv",
                                    "search for trivial equivalences of a statistic");
  search->add_option("--target", target)->required();
  search->add_option("--candidates", candidates_arg, "comma list (default: classical Mahonian set)");
  search->add_option("--max-n", max_n)->required();

  auto* classes = app.add_subcommand("classes", "group statistics by joint distribution");
  classes->add_option("--eulerian", eulerian);
  classes->add_option("--stats", candidates_arg);
  classes->add_option("--n", n)->required();

  auto* orbit_cmd = app.add_subcommand("orbit", "orbit under the trivial bijections");
  orbit_cmd->add_option("perm", perm_text)->required();

  auto* pattern_cmd = app.add_subcommand("pattern", "vincular pattern counts");
  pattern_cmd->add_option("perm", perm_text)->required();
  pattern_cmd->add_option("patterns", patterns)->required();

  auto* sample_cmd = app.add_subcommand("sample", "seeded uniform permutations");
  sample_cmd->add_option("--n", n)->required();
  sample_cmd->add_option("--count", count)->check(CLI::PositiveNumber);
  sample_cmd->add_option("--seed", seed);
  sample_cmd->add_option("--emit", emit_name,
                         "statistic name, or id/rank for the lexicographic rank");

  auto* bench = app.add_subcommand("bench", "time an operation");
  bench->add_option("op", bench_op, "decode")->required();
  bench->add_option("--n", n)->required();
  bench->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*eval) return cmd_eval(perm_text, stats_arg, as_json);
    if (*decode_cmd) return cmd_decode(perm_text, as_json);
    if (*verify) return cmd_verify(table, as_json);
    if (*dist) return cmd_dist(stat_name, n, threads, as_json);
    if (*joint_cmd) return cmd_joint(pair_arg, n, threads, as_json);
    if (*check) {
      if (what == "euler-mahonian" && pair_arg.empty())
        throw Error(Errc::malformed, "euler-mahonian needs --pair");
      if (what != "euler-mahonian" && stat_name.empty())
        throw Error(Errc::malformed, what + " needs --stat");
      return cmd_check(what, stat_name, pair_arg, ref_arg, max_n, threads,
                       as_json);
    }
    if (*search) return cmd_search_equiv(target, candidates_arg, max_n, as_json);
    if (*classes) return cmd_classes(eulerian, candidates_arg, n, threads, as_json);
    if (*orbit_cmd) return cmd_orbit(perm_text, as_json);
    if (*pattern_cmd) return cmd_pattern(perm_text, patterns, as_json);
    if (*sample_cmd) return cmd_sample(n, count, seed, emit_name, as_json);
    if (*bench) return cmd_bench(bench_op, n, seed, as_json);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
