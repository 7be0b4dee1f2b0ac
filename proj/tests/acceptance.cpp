// Acceptance suite: eight criteria, one PASS/FAIL line each. Exits nonzero
// when any criterion fails.

#include "bmwb/io.hpp"
#include "bmwb/oracle.hpp"

#include "helpers.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

using namespace bmwb;
using namespace bmwb::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::set<Point2> all_solver_images_agree(const ParsedInstance& instance, bool* agree) {
  auto bases = enumerate_bases(*instance.matroid);
  std::set<Point2> global = extreme_images(global_esn_sweep(bases, instance.costs));
  std::set<Point2> adjacency =
      extreme_images(adjacency_esn_sweep(*instance.matroid, instance.costs));
  std::set<Point2> tailored =
      report_images(tailored_esn_sweep(*instance.matroid, instance.costs));
  std::set<Point2> dichotomic =
      report_images(dichotomic_search(*instance.matroid, instance.costs));
  *agree = global == adjacency && global == tailored && global == dichotomic;
  return global;
}

// Criterion 1: both bundled frontiers, exact classification, under a second.
bool criterion1() {
  auto start = Clock::now();
  ParsedInstance fig1 = parse_instance_file(fixture_path("fig1.json"));
  std::set<Point2> expected{pt(1, 10), pt(2, 6), pt(6, 2)};

  bool agree = false;
  if (all_solver_images_agree(fig1, &agree) != expected || !agree) return false;

  FrontierTruth truth = brute_force_frontiers(*fig1.matroid, fig1.costs);
  if (truth.y_esn != expected) return false;
  if (truth.y_sn.count(pt(4, 4)) != 1 || truth.y_esn.count(pt(4, 4)) != 0)
    return false;
  bool seen56 = false, seen38 = false;
  for (const auto& [b, y] : truth.all) {
    seen56 |= y == pt(5, 6);
    seen38 |= y == pt(3, 8);
  }
  if (!seen56 || !seen38) return false;
  if (truth.y_n.count(pt(5, 6)) != 0 || truth.y_n.count(pt(3, 8)) != 0) return false;
  return seconds_since(start) < 1.0;
}

// Criterion 2: exact weight decomposition chaining over [0, 1].
bool criterion2() {
  ParsedInstance fig1 = parse_instance_file(fixture_path("fig1.json"));
  FrontierTruth truth = brute_force_frontiers(*fig1.matroid, fig1.costs);

  Basis t1{{1, 2, 4, 5}};
  if (truth.weight_components.at(t1) != WeightInterval{Rational(0), Rational(1, 2)})
    return false;

  FrontierReport report = tailored_esn_sweep(*fig1.matroid, fig1.costs);
  std::vector<WeightInterval> expected = {
      {Rational(0), Rational(1, 2)},
      {Rational(1, 2), Rational(4, 5)},
      {Rational(4, 5), Rational(1)},
  };
  if (report.entries.size() != expected.size()) return false;
  for (std::size_t k = 0; k < expected.size(); ++k) {
    if (report.entries[k].interval != expected[k]) return false;
    if (k > 0 && report.entries[k - 1].interval.hi != report.entries[k].interval.lo)
      return false;
  }
  return report.entries.front().interval.lo == 0 &&
         report.entries.back().interval.hi == 1;
}

// Criterion 3: collinear fixture; extreme solution set disconnected while the
// supported one stays connected.
bool criterion3() {
  auto start = Clock::now();
  ParsedInstance collinear = parse_instance_file(fixture_path("ex28.json"));

  bool agree = false;
  std::set<Point2> expected{pt(12, 4), pt(4, 12)};
  if (all_solver_images_agree(collinear, &agree) != expected || !agree) return false;

  FrontierTruth truth = brute_force_frontiers(*collinear.matroid, collinear.costs);
  if (truth.y_esn != expected) return false;
  AdjacencyGraph graph = adjacency_graph(enumerate_bases(*collinear.matroid));
  if (check_connectivity(graph, truth.x_ese)) return false;
  if (!check_connectivity(graph, truth.x_se)) return false;
  return seconds_since(start) < 1.0;
}

// One random-corpus pass feeding criteria 4 and 5. Criterion 4: all four
// solvers equal the oracle frontier. Criterion 5: the sweep/ordering
// properties (a)-(g).
struct CorpusResult {
  std::atomic<long long> solver_mismatches{0};
  std::atomic<long long> property_violations{0};
  std::atomic<long long> instances{0};
};

void corpus_worker(const std::vector<std::pair<std::uint64_t, GenParams>>& jobs,
                   std::size_t begin, std::size_t stride, CorpusResult* out) {
  for (std::size_t i = begin; i < jobs.size(); i += stride) {
    const auto& [seed, params] = jobs[i];
    ParsedInstance instance = random_instance(seed, params);
    const Matroid& matroid = *instance.matroid;
    const BiCost& costs = instance.costs;
    FrontierTruth truth = brute_force_frontiers(matroid, costs);
    out->instances.fetch_add(1);

    auto bases = enumerate_bases(matroid);
    SweepResult global = global_esn_sweep(bases, costs);
    SweepResult adjacency = adjacency_esn_sweep(matroid, costs);
    FrontierReport tailored = tailored_esn_sweep(matroid, costs);
    FrontierReport dichotomic = dichotomic_search(matroid, costs);

    // Criterion 4: frontier agreement.
    long long mismatches = 0;
    if (extreme_images(global) != truth.y_esn) ++mismatches;
    if (extreme_images(adjacency) != truth.y_esn) ++mismatches;
    if (report_images(tailored) != truth.y_esn) ++mismatches;
    if (report_images(dichotomic) != truth.y_esn) ++mismatches;
    out->solver_mismatches.fetch_add(mismatches);

    // Criterion 5.
    long long violations = 0;

    // (a) visited bases are supported efficient; intervals match the oracle.
    if (!verify_sweep(global, truth).empty()) ++violations;
    if (!verify_sweep(adjacency, truth).empty()) ++violations;

    // (b) adjacency steps change one element; verify_sweep covers the claimed
    // flag, assert the flag itself here.
    if (!adjacency.adjacent_steps) ++violations;

    // (c) breakpoints nondecreasing.
    for (std::size_t k = 1; k < adjacency.breakpoints.size(); ++k) {
      if (adjacency.breakpoints[k - 1] > adjacency.breakpoints[k]) ++violations;
    }

    // (d) iteration bound m^2.
    long long m = matroid.ground_size();
    if (adjacency.stats.iterations > m * m) ++violations;

    // (e) consecutive event orderings coincide across the tiebreak flip.
    EventSchedule events = build_event_schedule(critical_pairs(costs));
    Rational prev(0);
    for (const auto& event : events) {
      if (lex_ordering(costs, prev, Tiebreak::c1_ascending).elements !=
          lex_ordering(costs, event.lambda, Tiebreak::c1_descending).elements) {
        ++violations;
      }
      prev = event.lambda;
    }

    // (f) tailored basis equals greedy after every event.
    std::vector<Basis> trace;
    tailored_esn_sweep(matroid, costs, &trace);
    if (trace.size() != events.size() + 1) {
      ++violations;
    } else {
      if (trace[0] != greedy_basis(matroid, lex_ordering(costs, Rational(0),
                                                         Tiebreak::c1_ascending))) {
        ++violations;
      }
      for (std::size_t k = 0; k < events.size(); ++k) {
        if (trace[k + 1] !=
            greedy_basis(matroid, lex_ordering(costs, events[k].lambda,
                                               Tiebreak::c1_ascending))) {
          ++violations;
        }
      }
    }

    // (g) every extreme point arises from greedy at some event weight.
    std::set<Point2> via_events;
    via_events.insert(image_of(
        greedy_basis(matroid, lex_ordering(costs, Rational(0), Tiebreak::c1_ascending)),
        costs));
    for (const auto& event : events) {
      via_events.insert(image_of(
          greedy_basis(matroid,
                       lex_ordering(costs, event.lambda, Tiebreak::c1_ascending)),
          costs));
    }
    for (const auto& y : truth.y_esn) {
      if (via_events.count(y) == 0) ++violations;
    }

    out->property_violations.fetch_add(violations);
  }
}

std::vector<std::pair<std::uint64_t, GenParams>> build_corpus() {
  std::vector<std::pair<std::uint64_t, GenParams>> jobs;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    GenParams params;
    params.n = 4 + static_cast<int>(seed % 4);  // n in [4, 7]
    jobs.push_back({seed, params});
  }
  for (std::uint64_t seed = 1; seed <= 250; ++seed) {
    GenParams params;
    params.family = Family::uniform;
    params.m = 6 + static_cast<int>(seed % 4);
    params.rank = 2 + static_cast<int>(seed % 3);
    jobs.push_back({10000 + seed, params});
  }
  for (std::uint64_t seed = 1; seed <= 250; ++seed) {
    GenParams params;
    params.family = Family::partition;
    params.m = 6 + static_cast<int>(seed % 4);
    params.blocks = 2 + static_cast<int>(seed % 3);
    jobs.push_back({20000 + seed, params});
  }
  return jobs;
}

bool run_corpus(bool* criterion4, bool* criterion5) {
  auto start = Clock::now();
  auto jobs = build_corpus();
  CorpusResult result;
  unsigned worker_count = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < worker_count; ++w) {
    workers.emplace_back(corpus_worker, std::cref(jobs), w, worker_count, &result);
  }
  for (auto& t : workers) t.join();

  double elapsed = seconds_since(start);
  std::cout << "  corpus: " << result.instances.load() << " instances, "
            << result.solver_mismatches.load() << " frontier mismatches, "
            << result.property_violations.load() << " property violations, "
            << elapsed << " s\n";
  *criterion4 = result.solver_mismatches.load() == 0 &&
                result.instances.load() == static_cast<long long>(jobs.size()) &&
                elapsed < 120.0;
  *criterion5 = result.property_violations.load() == 0;
  return true;
}

// Criterion 6: independence-test scaling of the tailored sweep on growing
// graphic instances; log-log slope of counts vs m at most 2.2.
bool criterion6() {
  auto start = Clock::now();
  std::vector<double> log_m, log_tests;
  std::cout << "  scaling (family graphic, edge probability 0.3):\n";
  for (int n : {10, 20, 40, 80}) {
    GenParams params;
    params.n = n;
    params.edge_prob = 0.3;
    ParsedInstance instance = random_instance(777 + n, params);
    FrontierReport tailored = tailored_esn_sweep(*instance.matroid, instance.costs);
    FrontierReport dichotomic = dichotomic_search(*instance.matroid, instance.costs);
    long long m = instance.matroid->ground_size();
    std::cout << "    n=" << n << " m=" << m
              << " tailored_tests=" << tailored.stats.independence_tests
              << " dichotomic_tests=" << dichotomic.stats.independence_tests << "\n";
    log_m.push_back(std::log(static_cast<double>(m)));
    log_tests.push_back(std::log(static_cast<double>(
        std::max<long long>(1, tailored.stats.independence_tests))));
  }

  double mean_x = 0, mean_y = 0;
  for (std::size_t i = 0; i < log_m.size(); ++i) {
    mean_x += log_m[i];
    mean_y += log_tests[i];
  }
  mean_x /= log_m.size();
  mean_y /= log_m.size();
  double cov = 0, var = 0;
  for (std::size_t i = 0; i < log_m.size(); ++i) {
    cov += (log_m[i] - mean_x) * (log_tests[i] - mean_y);
    var += (log_m[i] - mean_x) * (log_m[i] - mean_x);
  }
  double slope = cov / var;
  double elapsed = seconds_since(start);
  std::cout << "    log-log slope: " << slope << " (" << elapsed << " s)\n";
  return slope <= 2.2 && elapsed < 300.0;
}

// Criterion 7: strong basis exchange on random basis pairs plus circuit
// minimality.
bool criterion7() {
  std::mt19937_64 rng(99);
  long long triples = 0;
  long long violations = 0;

  std::vector<ParsedInstance> pool;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    GenParams params;
    switch (seed % 3) {
      case 0:
        params.n = 4 + static_cast<int>(seed % 4);
        break;
      case 1:
        params.family = Family::uniform;
        params.m = 7;
        params.rank = 3;
        break;
      case 2:
        params.family = Family::partition;
        params.m = 8;
        params.blocks = 3;
        break;
    }
    pool.push_back(random_instance(3000 + seed, params));
  }

  while (triples < 10000) {
    const ParsedInstance& instance = pool[rng() % pool.size()];
    auto bases = enumerate_bases(*instance.matroid);
    const Basis& b1 = bases[rng() % bases.size()];
    const Basis& b2 = bases[rng() % bases.size()];
    for (ElementId e : b1.elements) {
      if (b2.contains(e)) continue;
      ++triples;
      bool found = false;
      for (ElementId f : b2.elements) {
        if (b1.contains(f)) continue;
        std::vector<ElementId> swapped1, swapped2;
        for (ElementId x : b1.elements) {
          if (x != e) swapped1.push_back(x);
        }
        swapped1.insert(std::lower_bound(swapped1.begin(), swapped1.end(), f), f);
        for (ElementId x : b2.elements) {
          if (x != f) swapped2.push_back(x);
        }
        swapped2.insert(std::lower_bound(swapped2.begin(), swapped2.end(), e), e);
        if (instance.matroid->is_independent(swapped1) &&
            instance.matroid->is_independent(swapped2)) {
          found = true;
          break;
        }
      }
      if (!found) ++violations;
      if (triples >= 10000) break;
    }

    // Circuit minimality alongside the exchange checks.
    ElementId f = static_cast<ElementId>(rng() % instance.matroid->ground_size());
    if (!b1.contains(f)) {
      Circuit circuit = instance.matroid->fundamental_circuit(b1, f);
      if (instance.matroid->is_independent(circuit.elements)) ++violations;
      for (ElementId drop : circuit.elements) {
        std::vector<ElementId> sub;
        for (ElementId x : circuit.elements) {
          if (x != drop) sub.push_back(x);
        }
        if (!instance.matroid->is_independent(sub)) ++violations;
      }
    }
  }
  std::cout << "  exchange: " << triples << " triples, " << violations
            << " violations\n";
  return violations == 0;
}

// Criterion 8: repeated CLI solve runs produce byte-identical reports.
bool criterion8() {
  const std::string cli = BMWB_CLI_PATH;
  const std::vector<std::string> fixtures = {"fig1.json", "ex28.json"};
  const std::vector<std::string> solvers = {"global", "adjacency", "tailored",
                                            "dichotomic"};
  for (const auto& fixture : fixtures) {
    for (const auto& solver : solvers) {
      std::vector<std::string> outputs;
      for (int run = 0; run < 2; ++run) {
        std::string out_path = "acceptance_run" + std::to_string(run) + ".json";
        std::string command = "\"" + cli + "\" solve \"" + fixture_path(fixture) +
                              "\" --solver=" + solver + " --out=" + out_path;
        if (std::system(command.c_str()) != 0) return false;
        std::ifstream in(out_path, std::ios::binary);
        std::ostringstream bytes;
        bytes << in.rdbuf();
        outputs.push_back(bytes.str());
        std::remove(out_path.c_str());
      }
      if (outputs[0].empty() || outputs[0] != outputs[1]) return false;
    }
  }
  return true;
}

void print_line(int number, const std::string& name, bool pass, bool* all_pass) {
  std::cout << "criterion " << number << " (" << name << "): "
            << (pass ? "PASS" : "FAIL") << "\n";
  *all_pass &= pass;
}

}  // namespace

int main() {
  bool all_pass = true;

  print_line(1, "bundled frontier and classification", criterion1(), &all_pass);
  print_line(2, "weight decomposition", criterion2(), &all_pass);
  print_line(3, "collinear frontier and connectivity", criterion3(), &all_pass);

  bool c4 = false, c5 = false;
  run_corpus(&c4, &c5);
  print_line(4, "oracle equivalence corpus", c4, &all_pass);
  print_line(5, "sweep and ordering properties", c5, &all_pass);

  print_line(6, "independence-test scaling", criterion6(), &all_pass);
  print_line(7, "strong basis exchange", criterion7(), &all_pass);
  print_line(8, "byte-deterministic reports", criterion8(), &all_pass);

  return all_pass ? 0 : 1;
}
