// bmwb: bi-objective minimum weight matroid basis solver CLI.
//
// Verbs:
//   solve <file> --solver=<name> [--verify] [--out=<path>]
//   gen --family=... --seed=... --out=...
//   bench --family=... --seeds=a..b --solvers=... --csv=<path>
//   oracle <file> [--out=<path>]
//
// Exit codes: 0 success, 1 parse/validation error, 2 resource cap exceeded,
// 3 verification violation. BMWB_ENUM_CAP overrides the enumeration cap.

#include "bmwb/errors.hpp"
#include "bmwb/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitResource = 2;
constexpr int kExitViolation = 3;

void write_output(const std::string& path, const std::string& bytes) {
  if (path.empty()) {
    std::cout << bytes;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw bmwb::InputError("cannot write '" + path + "'");
  out << bytes;
}

bmwb::Family family_from_name(const std::string& name) {
  if (name == "graphic") return bmwb::Family::graphic;
  if (name == "uniform") return bmwb::Family::uniform;
  if (name == "partition") return bmwb::Family::partition;
  throw bmwb::InputError("unknown family '" + name + "'");
}

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
  auto sep = text.find("..");
  if (sep == std::string::npos) {
    std::uint64_t seed = std::stoull(text);
    return {seed, seed};
  }
  std::uint64_t lo = std::stoull(text.substr(0, sep));
  std::uint64_t hi = std::stoull(text.substr(sep + 2));
  if (hi < lo) throw bmwb::InputError("seed range '" + text + "' is inverted");
  return {lo, hi};
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

int run_solve(const std::string& file, const std::string& solver, bool verify,
              const std::string& out_path) {
  bmwb::ParsedInstance instance = bmwb::parse_instance_file(file);
  bmwb::SolverKind kind = bmwb::solver_from_name(solver);
  bmwb::RunReport report = bmwb::run_solver(instance, kind, verify);
  write_output(out_path, bmwb::report_to_json(report).dump(2) + "\n");
  if (!report.violations.empty()) {
    for (const auto& violation : report.violations) {
      std::cerr << "violation: " << violation << "\n";
    }
    return kExitViolation;
  }
  return kExitOk;
}

int run_gen(const std::string& family, std::uint64_t seed, const bmwb::GenParams& base,
            const std::string& out_path) {
  bmwb::GenParams params = base;
  params.family = family_from_name(family);
  bmwb::Json doc = bmwb::generate_instance(seed, params);
  write_output(out_path, doc.dump(2) + "\n");
  return kExitOk;
}

int run_oracle(const std::string& file, const std::string& out_path) {
  bmwb::ParsedInstance instance = bmwb::parse_instance_file(file);
  bmwb::FrontierTruth truth =
      bmwb::brute_force_frontiers(*instance.matroid, instance.costs);
  write_output(out_path, bmwb::truth_to_json(truth, instance.digest).dump(2) + "\n");
  return kExitOk;
}

struct BenchJob {
  std::uint64_t seed;
  bmwb::SolverKind solver;
};

int run_bench(const std::string& family, const std::string& seeds,
              const std::string& solvers, const bmwb::GenParams& base,
              const std::string& csv_path, int jobs) {
  bmwb::GenParams params = base;
  params.family = family_from_name(family);
  auto [seed_lo, seed_hi] = parse_seed_range(seeds);

  std::vector<BenchJob> queue;
  for (std::uint64_t seed = seed_lo; seed <= seed_hi; ++seed) {
    for (const auto& name : split_list(solvers)) {
      queue.push_back({seed, bmwb::solver_from_name(name)});
    }
  }
  if (queue.empty()) throw bmwb::InputError("bench: no (seed, solver) jobs");

  std::vector<std::string> rows(queue.size());
  std::mutex cursor_mutex;
  std::size_t cursor = 0;
  std::exception_ptr failure;

  auto worker = [&] {
    while (true) {
      std::size_t index;
      {
        std::lock_guard lock(cursor_mutex);
        if (failure || cursor >= queue.size()) return;
        index = cursor++;
      }
      try {
        const BenchJob& job = queue[index];
        std::stringstream doc(bmwb::generate_instance(job.seed, params).dump());
        bmwb::ParsedInstance instance = bmwb::parse_instance(doc);
        bmwb::RunReport report = bmwb::run_solver(instance, job.solver, false);
        std::ostringstream row;
        row << family << ',' << job.seed << ',' << instance.matroid->ground_size()
            << ',' << instance.matroid->rank() << ',' << report.frontier.entries.size()
            << ',' << bmwb::solver_name(job.solver) << ','
            << report.frontier.stats.iterations << ','
            << report.frontier.stats.independence_tests << ',' << report.wall_ms;
        rows[index] = row.str();
      } catch (...) {
        std::lock_guard lock(cursor_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  int worker_count = jobs > 0 ? jobs
                              : std::max(1u, std::thread::hardware_concurrency());
  worker_count = std::min<int>(worker_count, static_cast<int>(queue.size()));
  std::vector<std::thread> pool;
  for (int i = 0; i < worker_count; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::ostringstream csv;
  csv << "family,seed,m,rank,esn_count,solver,iterations,independence_tests,wall_ms\n";
  for (const auto& row : rows) csv << row << "\n";
  write_output(csv_path, csv.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bi-objective minimum weight matroid basis solver"};
  app.require_subcommand(1);

  std::string file, solver = "tailored", out_path, family = "graphic";
  std::string seeds = "1", solver_list = "tailored,dichotomic", csv_path;
  bool verify = false;
  std::uint64_t seed = 1;
  int jobs = 0;
  bmwb::GenParams params;

  auto add_size_options = [&](CLI::App* cmd) {
    cmd->add_option("--n", params.n, "graphic: vertex count");
    cmd->add_option("--edge-prob", params.edge_prob, "graphic: edge probability");
    cmd->add_option("--m", params.m, "uniform/partition: ground size");
    cmd->add_option("--rank", params.rank, "uniform: rank");
    cmd->add_option("--blocks", params.blocks, "partition: block count");
    cmd->add_option("--cost-min", params.cost_min, "minimum integer cost");
    cmd->add_option("--cost-max", params.cost_max, "maximum integer cost");
  };

  auto* solve_cmd = app.add_subcommand("solve", "solve one instance file");
  solve_cmd->add_option("file", file, "instance JSON file")->required();
  solve_cmd->add_option("--solver", solver, "global|adjacency|tailored|dichotomic");
  solve_cmd->add_flag("--verify", verify, "cross-check against the oracle");
  solve_cmd->add_option("--out", out_path, "report path (default stdout)");

  auto* gen_cmd = app.add_subcommand("gen", "generate a random instance");
  gen_cmd->add_option("--family", family, "graphic|uniform|partition")->required();
  gen_cmd->add_option("--seed", seed, "random seed")->required();
  gen_cmd->add_option("--out", out_path, "instance path (default stdout)");
  add_size_options(gen_cmd);

  auto* bench_cmd = app.add_subcommand("bench", "benchmark solvers over seeds");
  bench_cmd->add_option("--family", family, "graphic|uniform|partition")->required();
  bench_cmd->add_option("--seeds", seeds, "seed or range a..b")->required();
  bench_cmd->add_option("--solvers", solver_list, "comma-separated solver names");
  bench_cmd->add_option("--csv", csv_path, "CSV path (default stdout)");
  bench_cmd->add_option("--jobs", jobs, "worker count (default: hardware)");
  add_size_options(bench_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force classification");
  oracle_cmd->add_option("file", file, "instance JSON file")->required();
  oracle_cmd->add_option("--out", out_path, "report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(file, solver, verify, out_path);
    if (gen_cmd->parsed()) return run_gen(family, seed, params, out_path);
    if (bench_cmd->parsed())
      return run_bench(family, seeds, solver_list, params, csv_path, jobs);
    if (oracle_cmd->parsed()) return run_oracle(file, out_path);
  } catch (const bmwb::ResourceError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitResource;
  } catch (const bmwb::InputError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInput;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
