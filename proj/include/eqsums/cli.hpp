// Command-line driver. Subcommands: count, oracle, scaling, planes, spaces,
// probe, singular, selftest. Long-form flags only. Exit codes: 0 success,
// 1 usage or precondition violation, 2 internal inconsistency (failed
// selftest, oracle mismatch, broken invariant).
//
// Reports go to stdout or, with --out FILE, to a file; a relative --out path
// lands in $EQSUMS_OUT_DIR when that variable is set. An optional key=value
// config file (--config) can set default shard count and memory budget;
// explicit flags override it.
#pragma once

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eqsums/counting.hpp"
#include "eqsums/report_io.hpp"
#include "eqsums/selftest.hpp"

namespace eqsums::cli {

struct CommonArgs {
  std::uint32_t shards = 1;
  std::uint32_t workers = 1;
  std::uint64_t budget_mb = 1024;
  std::string format = "json";
  std::string out;
  std::string config;
};

inline std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::map<std::string, std::string> kv;
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config file not readable: " + path);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (!key.empty()) kv[key] = value;
  }
  return kv;
}

inline EnumeratorOptions make_options(const CommonArgs& args,
                                      const std::set<std::string>& explicit_flags) {
  CommonArgs merged = args;
  if (!args.config.empty()) {
    auto kv = parse_config_file(args.config);
    if (kv.count("shards") && !explicit_flags.count("shards"))
      merged.shards = std::uint32_t(std::stoul(kv.at("shards")));
    if (kv.count("memory_budget_mb") && !explicit_flags.count("budget"))
      merged.budget_mb = std::stoull(kv.at("memory_budget_mb"));
    if (kv.count("workers") && !explicit_flags.count("workers"))
      merged.workers = std::uint32_t(std::stoul(kv.at("workers")));
  }
  EnumeratorOptions opts;
  opts.shard_count = merged.shards;
  opts.workers = merged.workers;
  opts.memory_budget_bytes = merged.budget_mb << 20;
  return opts;
}

inline void write_report(const std::string& text, const CommonArgs& args,
                         std::ostream& out) {
  if (args.out.empty()) {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    return;
  }
  std::filesystem::path path(args.out);
  if (path.is_relative()) {
    if (const char* dir = std::getenv("EQSUMS_OUT_DIR"); dir && *dir)
      path = std::filesystem::path(dir) / path;
  }
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot open output file: " + path.string());
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

inline void add_common(CLI::App* cmd, CommonArgs& args, bool with_engine_opts = true) {
  if (with_engine_opts) {
    cmd->add_option("--shards", args.shards, "shard count for the enumerator")
        ->check(CLI::Range(1u, 1u << 20));
    cmd->add_option("--workers", args.workers, "worker threads (shards run concurrently)")
        ->check(CLI::Range(1u, 256u));
    cmd->add_option("--budget-mb", args.budget_mb, "memory budget in MiB")
        ->check(CLI::Range(std::uint64_t(1), std::uint64_t(1) << 20));
  }
  cmd->add_option("--format", args.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", args.out, "output file (relative paths land in $EQSUMS_OUT_DIR)");
  cmd->add_option("--config", args.config, "key=value config file (shards, memory_budget_mb)");
}

inline std::set<std::string> explicit_flags(const CLI::App* cmd) {
  std::set<std::string> seen;
  for (const std::string name : {"--shards", "--workers", "--budget-mb"})
    if (cmd->count(name) > 0) seen.insert(name.substr(2) == "budget-mb" ? "budget" : name.substr(2));
  return seen;
}

inline int dispatch(const std::vector<std::string>& argv, std::ostream& out,
                    std::ostream& err) {
  CLI::App app{"exact enumeration and geometry for simultaneous equal sums of three powers"};
  app.require_subcommand(1);

  // count
  auto* count_cmd = app.add_subcommand("count", "count solutions at a single bound B");
  std::uint32_t c = 0, d = 0, B = 0;
  bool no_primitive = false, verify_oracle = false;
  CommonArgs count_args;
  count_cmd->add_option("--c", c, "lower exponent")->required();
  count_cmd->add_option("--d", d, "upper exponent")->required();
  count_cmd->add_option("--B", B, "coordinate bound")->required();
  count_cmd->add_flag("--no-primitive", no_primitive, "skip the Moebius primitive count");
  count_cmd->add_flag("--verify-oracle", verify_oracle,
                      "also run the O(B^6) oracle (B <= 12) and compare");
  add_common(count_cmd, count_args);

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "O(B^6) brute-force reference count");
  std::uint32_t oc = 0, od = 0, oB = 0;
  bool compare = false;
  CommonArgs oracle_args;
  oracle_cmd->add_option("--c", oc, "lower exponent")->required();
  oracle_cmd->add_option("--d", od, "upper exponent")->required();
  oracle_cmd->add_option("--B", oB, "coordinate bound (<= 12)")->required();
  oracle_cmd->add_flag("--compare", compare, "also run the engine and compare");
  add_common(oracle_cmd, oracle_args);

  // scaling
  auto* scaling_cmd = app.add_subcommand("scaling", "growth-exponent experiment over a B schedule");
  std::uint32_t sc_c = 0, sc_d = 0;
  std::vector<std::uint32_t> schedule;
  bool sc_no_primitive = false;
  CommonArgs scaling_args;
  scaling_cmd->add_option("--c", sc_c, "lower exponent")->required();
  scaling_cmd->add_option("--d", sc_d, "upper exponent")->required();
  scaling_cmd->add_option("--B-list", schedule, "strictly increasing B schedule")
      ->required()->delimiter(',');
  scaling_cmd->add_flag("--no-primitive", sc_no_primitive, "skip primitive counts");
  add_common(scaling_cmd, scaling_args);

  // planes
  auto* planes_cmd = app.add_subcommand("planes", "standard planes of F_k, or the census on X_{c,d}");
  std::uint32_t pk = 0, pc = 0, pd = 0;
  bool list_planes = false;
  CommonArgs planes_args;
  planes_cmd->add_option("--k", pk, "degree k: count standard planes of F_k");
  planes_cmd->add_option("--c", pc, "lower exponent (census mode, with --d)");
  planes_cmd->add_option("--d", pd, "upper exponent (census mode, d >= 4)");
  planes_cmd->add_flag("--list", list_planes, "include plane parametrizations");
  add_common(planes_cmd, planes_args, false);

  // spaces
  auto* spaces_cmd = app.add_subcommand("spaces", "m-dimensional linear spaces on degree-k Fermat hypersurfaces");
  std::uint32_t sm = 0, sk = 0;
  CommonArgs spaces_args;
  spaces_cmd->add_option("--m", sm, "space dimension")->required();
  spaces_cmd->add_option("--k", sk, "degree")->required();
  add_common(spaces_cmd, spaces_args, false);

  // probe
  auto* probe_cmd = app.add_subcommand("probe", "finite-field falsification probe for the plane classification");
  std::uint32_t qk = 0, qp = 0;
  std::uint64_t seed = 0;
  CommonArgs probe_args;
  probe_cmd->add_option("--k", qk, "degree, 4 or 5")->required();
  probe_cmd->add_option("--p", qp, "prime <= 31 with p == 1 (mod 2k)")->required();
  probe_cmd->add_option("--seed", seed, "search-order seed (report content is canonical)");
  add_common(probe_cmd, probe_args, false);

  // singular
  auto* singular_cmd = app.add_subcommand("singular", "heuristic singular-locus candidates of X_{c,d}");
  std::uint32_t gc = 0, gd = 0;
  double tolerance = 1e-9;
  CommonArgs singular_args;
  singular_cmd->add_option("--c", gc, "lower exponent")->required();
  singular_cmd->add_option("--d", gd, "upper exponent")->required();
  singular_cmd->add_option("--tolerance", tolerance, "numeric tolerance, in (0, 1e-6]");
  add_common(singular_cmd, singular_args, false);

  // selftest
  auto* selftest_cmd = app.add_subcommand("selftest", "run the built-in consistency suites");
  CommonArgs selftest_args;
  add_common(selftest_cmd, selftest_args);

  std::vector<const char*> cargv;
  cargv.push_back("eqsums");
  for (const auto& a : argv) cargv.push_back(a.c_str());
  try {
    app.parse(int(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (*count_cmd) {
      CountingEngine engine(make_options(count_args, explicit_flags(count_cmd)));
      auto t0 = std::chrono::steady_clock::now();
      CountReport rep = engine.count_report(ExponentPair(c, d), B, !no_primitive);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (verify_oracle) {
        CountReport ref = brute_force_oracle(ExponentPair(c, d), B);
        if (no_primitive) ref.primitive_nontrivial.reset();
        if (!(rep == ref)) {
          err << "oracle mismatch:\nengine: " << to_json(rep).dump()
              << "\noracle: " << to_json(ref).dump() << "\n";
          return 2;
        }
      }
      write_report(count_args.format == "csv" ? to_csv(rep, secs) : to_json(rep).dump(2),
                   count_args, out);
      return 0;
    }
    if (*oracle_cmd) {
      CountReport rep = brute_force_oracle(ExponentPair(oc, od), oB);
      if (compare) {
        CountingEngine engine(make_options(oracle_args, explicit_flags(oracle_cmd)));
        if (!(engine.count_report(ExponentPair(oc, od), oB) == rep)) {
          err << "engine disagrees with oracle\n";
          return 2;
        }
      }
      write_report(oracle_args.format == "csv" ? to_csv(rep) : to_json(rep).dump(2),
                   oracle_args, out);
      return 0;
    }
    if (*scaling_cmd) {
      CountingEngine engine(make_options(scaling_args, explicit_flags(scaling_cmd)));
      ScalingTable table =
          scaling_experiment(engine, ExponentPair(sc_c, sc_d), schedule, !sc_no_primitive);
      write_report(scaling_args.format == "csv" ? to_csv(table) : to_json(table).dump(2),
                   scaling_args, out);
      return 0;
    }
    if (*planes_cmd) {
      if (pk == 0 && (pc == 0 || pd == 0))
        throw std::invalid_argument("planes: give --k, or --c and --d for the census");
      json j = pk > 0 ? standard_planes_report(pk, list_planes)
                      : to_json(planes_on_X(ExponentPair(pc, pd)));
      write_report(j.dump(2), planes_args, out);
      return 0;
    }
    if (*spaces_cmd) {
      write_report(to_json(linear_space_count(sm, sk)).dump(2), spaces_args, out);
      return 0;
    }
    if (*probe_cmd) {
      write_report(to_json(nonstandard_plane_probe(qk, qp, seed)).dump(2), probe_args, out);
      return 0;
    }
    if (*singular_cmd) {
      write_report(to_json(singular_candidates(ExponentPair(gc, gd), tolerance)).dump(2),
                   singular_args, out);
      return 0;
    }
    if (*selftest_cmd) {
      return run_selftest(out, make_options(selftest_args, explicit_flags(selftest_cmd))) ? 0 : 2;
    }
  } catch (const std::invalid_argument& ex) {  // precondition violations
    err << "error: " << ex.what() << "\n";
    return 1;
  } catch (const std::out_of_range& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  } catch (const std::logic_error& ex) {  // broken internal invariants
    err << "internal inconsistency: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  }
  err << "no subcommand selected\n";
  return 1;
}

inline int dispatch(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dispatch(args, out, err);
}

}  // namespace eqsums::cli
