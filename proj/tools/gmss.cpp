// gmss: maximum segment sum on lists and trees, pruning enumeration, the law
// suite and a small timing harness.

#include <pthread.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gmss/collections.hpp"
#include "gmss/generators.hpp"
#include "gmss/horner.hpp"
#include "gmss/io.hpp"
#include "gmss/laws.hpp"
#include "gmss/pruning.hpp"
#include "gmss/shapes.hpp"

using namespace gmss;
using nlohmann::json;

namespace {

// Keeps warm-up results observable so the work is not optimised away.
volatile Label sink = 0;

struct Config {
  std::string algo = "linear";
  std::string via = "scan";
  std::string shape;
  std::string semiring = "max-plus";
  std::string monad = "bag";
  std::string input;
  std::string file;
  bool has_input = false;
  bool check = false;
  bool count = false;
  bool json = false;
  bool force = false;
  bool assert_ = false;
  std::uint64_t seed = 42;
  std::uint64_t trials = default_trials;
  std::string sizes = "200,400,800";
  std::string algos = "spec,quadratic,linear";
  std::vector<std::string> ids;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_input(const Config& c) {
  if (c.has_input && !c.file.empty()) throw UsageError("give --input or --file, not both");
  if (c.has_input) return c.input;
  if (c.file.empty()) throw UsageError("missing --input or --file");
  std::ifstream in(c.file, std::ios::binary);
  if (!in) throw UsageError("cannot read " + c.file);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Shape need_shape(const Config& c, Shape fallback) {
  if (c.shape.empty()) return fallback;
  if (auto s = parse_shape(c.shape)) return *s;
  throw UsageError("unknown shape '" + c.shape + "'");
}

Kind need_kind(const Config& c) {
  if (auto k = parse_kind(c.monad)) return *k;
  throw UsageError("unknown monad '" + c.monad + "'");
}

Semiring need_semiring(const Config& c) {
  if (auto s = semiring_by_name(c.semiring)) return *s;
  throw UsageError("unknown semiring '" + c.semiring + "'");
}

Term read_tree(const Config& c, Shape shape) {
  Term t = parse_term(read_input(c), shape);
  if (node_count(t) > max_tree_input)
    throw InputTooLarge("tree input larger than " + std::to_string(max_tree_input) + " nodes");
  return t;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, ',');)
    if (!part.empty()) out.push_back(part);
  return out;
}

Label run_list_algo(const std::string& algo, const std::vector<Label>& xs) {
  if (algo == "spec") return mss_spec(xs);
  if (algo == "quadratic") return mss_quadratic(xs);
  if (algo == "linear") return mss_linear(xs);
  if (algo == "prefix") return max_prefix_sum(xs);
  throw UsageError("unknown algorithm '" + algo + "'");
}

int cmd_mss(const Config& c) {
  if (need_shape(c, Shape::list) != Shape::list)
    throw UsageError("mss works on lists; use `tree` for --shape " + c.shape);
  const auto xs = parse_list(read_input(c));
  const Label v = run_list_algo(c.algo, xs);
  if (c.json) std::cout << json(MssReport{c.algo, v, xs.size()}).dump() << "\n";
  else std::cout << v << "\n";
  return status::ok;
}

int cmd_tree(const Config& c) {
  const Shape shape = need_shape(c, Shape::htree);
  const Semiring s = need_semiring(c);
  const Kind kind = need_kind(c);
  if (c.via != "scan" && c.via != "brute") throw UsageError("--via is scan or brute");
  const Term t = read_tree(c, shape);
  const Via via = c.via == "scan" ? Via::scan : Via::brute;
  const MssOptions opts{c.force, {}};
  const Label b = default_b(s);

  TreeReport r{std::string(to_string(shape)), std::string(s.name), std::string(to_string(kind)),
               c.via, b, mss_generic(s, b, t, via, kind, opts), node_count(t), std::nullopt};
  if (c.check) r.check = mss_generic(s, b, t, via == Via::scan ? Via::brute : Via::scan, kind, opts);

  if (c.json) {
    std::cout << json(r).dump() << "\n";
  } else if (r.check) {
    const bool scan_first = via == Via::scan;
    std::cout << "scan: " << (scan_first ? r.value : *r.check) << "\n"
              << "brute: " << (scan_first ? *r.check : r.value) << "\n";
  } else {
    std::cout << r.value << "\n";
  }
  if (r.check && *r.check != r.value) {
    std::cerr << "gmss: scan and brute disagree; the reduction does not distribute\n";
    return status::distributivity;
  }
  return status::ok;
}

int cmd_prune(const Config& c) {
  const Shape shape = need_shape(c, Shape::htree);
  const Kind kind = need_kind(c);
  const Term t = read_tree(c, shape);
  const auto all = prune(t, kind);
  PruneReport r{std::string(to_string(shape)), std::string(to_string(kind)), all.size(), {}};
  if (!c.count)
    for (const Pruned& p : all) r.prunings.push_back(to_sexpr(p));
  if (c.json) std::cout << json(r).dump() << "\n";
  else if (c.count) std::cout << r.count << "\n";
  else std::cout << show(all) << "\n";
  return status::ok;
}

int cmd_laws(const Config& c) {
  std::optional<std::vector<std::string>> only;
  if (!c.ids.empty()) only = c.ids;
  const auto reports = run_all(c.seed, c.trials, only);
  if (c.json) std::cout << json(reports).dump(2) << "\n";
  else std::cout << format_table(reports);
  return all_met(reports) ? status::ok : 1;
}

constexpr int bench_reps = 5;

double time_ms(const std::vector<Label>& xs, const std::string& algo, Label& value) {
  const auto t0 = std::chrono::steady_clock::now();
  value = run_list_algo(algo, xs);
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_bench(const Config& c) {
  std::vector<std::size_t> sizes;
  for (Label n : parse_list(c.sizes)) {
    if (n <= 0) throw UsageError("--sizes must be positive");
    if (!sizes.empty() && static_cast<std::size_t>(n) <= sizes.back())
      throw UsageError("--sizes must be strictly ascending");
    sizes.push_back(static_cast<std::size_t>(n));
  }
  if (sizes.empty()) throw UsageError("--sizes is empty");
  const auto algos = split_csv(c.algos);
  if (algos.empty()) throw UsageError("--algos is empty");
  for (const auto& a : algos) run_list_algo(a, {});  // validates the names

  // The first few hundred milliseconds of work run noticeably slower (clock
  // ramp-up), which skews the small sizes. Burn through that before timing.
  {
    Rng rng(stream_seed(c.seed, "bench/warm-up"));
    std::vector<Label> xs(300);
    for (auto& x : xs) x = rng.between(-100, 100);
    const auto t0 = std::chrono::steady_clock::now();
    while (std::chrono::steady_clock::now() - t0 < std::chrono::milliseconds(300)) sink = mss_spec(xs);
  }

  std::vector<BenchRow> rows;
  std::vector<std::vector<Label>> inputs;
  for (std::size_t n : sizes) {
    Rng rng(stream_seed(c.seed, "bench/" + std::to_string(n)));
    std::vector<Label> xs(n);
    for (auto& x : xs) x = rng.between(-100, 100);
    for (const auto& a : algos) {
      rows.push_back({a, n, 0, 0});
      inputs.push_back(xs);
    }
  }
  // Reps are interleaved across cells: the machine's speed drifts, and a
  // shift between two sizes' blocks of reps would skew their ratio.
  std::vector<std::vector<double>> times(rows.size());
  for (int round = 0; round <= bench_reps; ++round)
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const double ms = time_ms(inputs[i], rows[i].algo, rows[i].value);
      if (round > 0) times[i].push_back(ms);  // round 0 is a warm-up
    }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::sort(times[i].begin(), times[i].end());
    rows[i].median_ms = times[i][bench_reps / 2];
  }

  if (c.json) {
    std::cout << json(rows).dump(2) << "\n";
  } else {
    std::cout << std::left << std::setw(10) << "algo" << std::setw(10) << "n" << "median_ms\n";
    for (const auto& r : rows)
      std::cout << std::left << std::setw(10) << r.algo << std::setw(10) << r.n << std::fixed
                << std::setprecision(3) << r.median_ms << "\n";
  }
  if (!c.assert_) return status::ok;

  auto time_of = [&](const std::string& a, std::size_t n) -> std::optional<double> {
    for (const auto& r : rows)
      if (r.algo == a && r.n == n) return r.median_ms;
    return std::nullopt;
  };
  std::vector<std::string> problems;
  for (std::size_t n : sizes) {
    std::optional<Label> v;
    for (const auto& r : rows)
      if (r.n == n && r.algo != "prefix") {
        if (v && *v != r.value) problems.push_back("algorithms disagree at n=" + std::to_string(n));
        v = r.value;
      }
  }
  for (std::size_t n : sizes) {
    const auto lo = time_of("spec", n), hi = time_of("spec", 2 * n);
    if (!lo || !hi) continue;
    const double ratio = *hi / *lo;
    if (ratio < 6 || ratio > 12) {
      std::ostringstream os;
      os << "spec time ratio " << 2 * n << ":" << n << " is " << ratio << ", outside [6,12]";
      problems.push_back(os.str());
    }
  }
  const std::size_t top = sizes.back();
  const char* order[] = {"spec", "quadratic", "linear"};
  for (int i = 0; i < 2; ++i) {
    const auto slow = time_of(order[i], top), fast = time_of(order[i + 1], top);
    if (slow && fast && !(*slow > *fast))
      problems.push_back(std::string(order[i]) + " is not slower than " + order[i + 1] +
                         " at n=" + std::to_string(top));
  }
  for (const auto& p : problems) std::cerr << "gmss: bench: " << p << "\n";
  return problems.empty() ? status::ok : status::budget;
}

int run(int argc, char** argv) {
  CLI::App app{"Maximum segment sum over lists and trees"};
  app.require_subcommand(1);
  Config c;

  auto add_input = [&c](CLI::App* sub) {
    sub->add_option("--input", c.input, "inline input")->each([&c](const std::string&) { c.has_input = true; });
    sub->add_option("--file", c.file, "read input from a file");
  };
  auto add_shape = [&c](CLI::App* sub) {
    sub->add_option("--shape", c.shape, "list | etree | itree | htree");
  };

  auto* mss = app.add_subcommand("mss", "maximum segment sum of an integer list");
  mss->add_option("--algo", c.algo, "spec | quadratic | linear | prefix");
  add_shape(mss);
  add_input(mss);
  mss->add_flag("--json", c.json);

  auto* tree = app.add_subcommand("tree", "generic maximum segment sum of a term");
  add_shape(tree);
  tree->add_option("--semiring", c.semiring, "max-plus | min-plus | plus-times | bool-or-and");
  tree->add_option("--monad", c.monad, "list | bag | set");
  tree->add_option("--via", c.via, "scan | brute");
  tree->add_flag("--check", c.check, "compute both ways and compare");
  tree->add_flag("--force", c.force, "skip the distributivity gate");
  add_input(tree);
  tree->add_flag("--json", c.json);

  auto* pr = app.add_subcommand("prune", "all prunings of a term");
  add_shape(pr);
  pr->add_option("--monad", c.monad, "list | bag | set");
  pr->add_flag("--count", c.count, "print only the number of prunings");
  add_input(pr);
  pr->add_flag("--json", c.json);

  auto* laws = app.add_subcommand("laws", "run the law suite");
  laws->add_option("--seed", c.seed);
  laws->add_option("--trials", c.trials);
  laws->add_option("--id", c.ids, "run only these laws");
  laws->add_flag("--json", c.json);

  auto* bench = app.add_subcommand("bench", "time the list algorithms");
  bench->add_option("--sizes", c.sizes, "ascending list lengths");
  bench->add_option("--algos", c.algos, "comma-separated algorithms");
  bench->add_option("--seed", c.seed);
  bench->add_flag("--assert", c.assert_, "check growth rates");
  bench->add_flag("--json", c.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? status::ok : status::usage;
  }

  try {
    if (*mss) return cmd_mss(c);
    if (*tree) return cmd_tree(c);
    if (*pr) return cmd_prune(c);
    if (*laws) return cmd_laws(c);
    return cmd_bench(c);
  } catch (const DistributivityViolation& e) {
    std::cerr << "gmss: DistributivityViolation: " << e.what() << "\n";
    return status::distributivity;
  } catch (const PreconditionError& e) {
    std::cerr << "gmss: " << e.what() << "\n";
    return status::distributivity;
  } catch (const OverflowError& e) {
    std::cerr << "gmss: overflow: " << e.what() << "\n";
    return status::overflow;
  } catch (const SizeGuardExceeded& e) {
    std::cerr << "gmss: " << e.what() << "\n";
    return status::size_guard;
  } catch (const Error& e) {
    std::cerr << "gmss: " << e.what() << "\n";
    return status::usage;
  }
}

struct Args {
  int argc;
  char** argv;
  int code;
};

}  // namespace

int main(int argc, char** argv) {
  // Folds over deep lists recurse once per node; give them room.
  Args args{argc, argv, 0};
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, std::size_t{1} << 30);
  pthread_t th;
  auto body = [](void* p) -> void* {
    auto* a = static_cast<Args*>(p);
    a->code = run(a->argc, a->argv);
    return nullptr;
  };
  if (pthread_create(&th, &attr, body, &args) != 0) return run(argc, argv);
  pthread_join(th, nullptr);
  pthread_attr_destroy(&attr);
  std::cout.flush();
  return args.code;
}
