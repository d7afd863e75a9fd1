// pawn: compute tree series, run verification suites and conjecture
// sweeps, and maintain the coefficient cache.
//
// Exit status: 0 on success (including inconclusive sweeps), 1 when a
// check fails, 2 on usage or I/O errors, 3 on a cache hash mismatch.

#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cache.hpp"
#include "pawn/verify.hpp"
#include "render.hpp"

namespace {

using namespace pawn;

constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kHash = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- compute ----------------------------------------------------------------

struct ComputeArgs {
  std::string series;
  std::size_t order = 6;
  std::optional<long> n;
  std::string format = "json";
  unsigned workers = 1;
  std::string cache_dir;
};

template <class R>
void write_series(std::ostream& out, const TreeSeries<R>& s, const ComputeArgs& a, const Json& params) {
  if (a.format == "json") {
    out << series_to_json(s, a.series, params).dump(2) << "\n";
  } else if (a.format == "csv") {
    out << "tree,aut,coefficient\n";
    for (const auto& [t, v] : s.entries())
      out << t.encoding() << "," << aut_order(t).get_str() << "," << render::csv_field(render::plain(v)) << "\n";
  } else {
    out << "% " << a.series;
    for (const auto& [k, v] : params.items()) out << " " << k << "=" << v.dump();
    out << ", order " << s.order() << "\n\\begin{align*}\n";
    for (const auto& [t, v] : s.entries()) {
      const std::string aut = aut_order(t).get_str();
      const std::string tree = "\\texttt{" + t.encoding() + "}";
      out << "  &+ " << render::tex(v) << " \\, " << (aut == "1" ? tree : "\\frac{" + tree + "}{" + aut + "}")
          << " \\\\\n";
    }
    out << "\\end{align*}\n";
  }
}

template <class R>
int compute_series(const ComputeArgs& a, const Json& params, const std::function<TreeSeries<R>()>& solve) {
  const cache::Key key{a.series, params, a.order};
  std::optional<cache::Store> store;
  if (auto dir = cache::resolve_dir(a.cache_dir)) store.emplace(*dir);

  TreeSeries<R> s;
  bool cached = false;
  if (store) {
    if (auto payload = store->load(key)) {
      s = series_from_json<R>(Json::parse(*payload));
      if (cache::sha256_hex(series_to_json(s, a.series, params).dump()) != cache::sha256_hex(*payload))
        throw cache::HashMismatch("cached payload does not re-serialize to its hash");
      cached = true;
    }
  }
  if (!cached) {
    s = solve();
    if (store) store->save(key, series_to_json(s, a.series, params).dump());
  }
  write_series(std::cout, s, a, params);
  return 0;
}

int run_compute(const ComputeArgs& a) {
  if (a.order < 1) throw UsageError("--order must be at least 1");
  if (a.order >= 9)
    std::cerr << "warning: order " << a.order << " needs all " << trees_up_to(a.order).size()
              << " trees; exact bivariate arithmetic at this size takes a long time\n";
  const bool needs_n = a.series == "F" || a.series == "G" || a.series == "pawn_at";
  if (needs_n && !a.n) throw UsageError(a.series + " needs --n");
  if (!needs_n && a.n) throw UsageError(a.series + " takes no --n");
  if ((a.series == "F" || a.series == "G") && *a.n < 0) throw UsageError(a.series + " needs --n >= 0");

  const Json params = needs_n ? Json{{"n", *a.n}} : Json::object();
  const std::size_t order = a.order;
  const unsigned workers = a.workers;
  if (a.series == "pawn")
    return compute_series<XPoly>(a, params, [&] { return solve_pawn(order, workers); });
  if (a.series == "E") return compute_series<QRat>(a, params, [&] { return series_E(order); });
  if (a.series == "F")
    return compute_series<QRat>(a, params, [&] { return coloring_series(order, *a.n, ColoringMode::weak); });
  if (a.series == "G")
    return compute_series<QRat>(a, params, [&] { return coloring_series(order, *a.n, ColoringMode::strict); });
  if (a.series == "omega") return compute_series<QRat>(a, params, [&] { return solve_omega(order, workers); });
  if (a.series == "omega_bar")
    return compute_series<QRat>(a, params, [&] { return solve_omega_bar(order, workers); });
  return compute_series<QRat>(a, params, [&] { return solve_pawn_at(q_integer(*a.n), order); });
}

// ---- verify -----------------------------------------------------------------

std::pair<long, long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("range must look like a..b: " + text);
  try {
    std::size_t used = 0;
    const long lo = std::stol(text.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument(text);
    const std::string tail = text.substr(dots + 2);
    const long hi = std::stol(tail, &used);
    if (used != tail.size() || lo > hi) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("bad range: " + text);
  }
}

std::string format_ms(double ms) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(1) << ms << " ms";
  return ss.str();
}

void print_report(const CheckReport& r, const std::string& format) {
  if (format == "json") {
    std::cout << to_json(r).dump() << "\n";
    return;
  }
  std::string status = to_string(r.status);
  for (auto& c : status) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  std::cout << std::left << std::setw(13) << status << std::setw(28) << r.name << r.params.dump() << "  "
            << format_ms(r.elapsed_ms);
  if (!r.detail.empty()) std::cout << "  " << r.detail;
  std::cout << "\n";
  if (r.status == CheckStatus::fail) std::cout << "  witness: " << r.witness.dump() << "\n";
}

struct VerifyArgs {
  std::string suite = "all";
  std::string format = "text";
  std::string n_range = "2..4";
  CheckOptions opts;
};

int run_verify(VerifyArgs a) {
  std::tie(a.opts.n_lo, a.opts.n_hi) = parse_range(a.n_range);
  if (a.opts.max_order < 1) throw UsageError("--max-order must be at least 1");
  std::vector<Theorem> which;
  if (a.suite == "all") {
    which = all_theorems();
  } else if (auto t = theorem_from_name(a.suite)) {
    which.push_back(*t);
  } else {
    throw UsageError("unknown suite: " + a.suite);
  }
  bool failed = false;
  double total = 0;
  for (Theorem t : which) {
    const CheckReport r = check_theorem(t, a.opts);
    print_report(r, a.format);
    failed = failed || r.status == CheckStatus::fail;
    total += r.elapsed_ms;
  }
  if (a.format == "text")
    std::cout << (failed ? "FAILED" : "OK") << ": " << which.size() << " checks in " << format_ms(total) << "\n";
  return failed ? kFail : 0;
}

// ---- conjecture ---------------------------------------------------------------

std::vector<int> parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("bad partition part: " + item);
    }
  }
  return parts;
}

int finish_conjecture(const CheckReport& r, const std::string& format) {
  print_report(r, format);
  return r.status == CheckStatus::fail ? kFail : 0;
}

Progress stderr_progress(const std::string& name) {
  return [name](std::size_t done, std::size_t total) { std::cerr << "[" << name << "] " << done << "/" << total << "\n"; };
}

// ---- cache --------------------------------------------------------------------

int run_cache(const std::string& action, const std::string& dir_flag) {
  const auto dir = cache::resolve_dir(dir_flag);
  if (!dir) throw UsageError("no cache directory: pass --cache-dir or set PAWN_CACHE_DIR");
  const cache::Store store(*dir);
  if (action == "list") {
    std::cout << std::left << std::setw(18) << "entry" << std::setw(12) << "series" << std::setw(16) << "params"
              << std::setw(7) << "order" << std::setw(9) << "version" << "bytes\n";
    for (const auto& e : store.list()) {
      const std::string series = e.key.is_object() ? e.key.value("series", "?") : "?";
      const std::string params = e.key.is_object() && e.key.contains("params") ? e.key["params"].dump() : "?";
      const std::string order = e.key.is_object() && e.key.contains("order") ? e.key["order"].dump() : "?";
      std::cout << std::setw(18) << e.entry_hash.substr(0, 16) << std::setw(12) << series << std::setw(16) << params
                << std::setw(7) << order << std::setw(9) << e.format_version << e.bytes << "\n";
    }
    return 0;
  }
  if (action == "gc") {
    std::cout << "removed " << store.gc() << " files\n";
    return 0;
  }
  const auto problems = store.verify();
  for (const auto& p : problems) std::cout << p << "\n";
  if (!problems.empty()) return kHash;
  std::cout << "ok: " << store.list().size() << " entries verified\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tree series computations and checks"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Compute a tree series");
  c->add_option("series", compute.series, "Series name")
      ->required()
      ->check(CLI::IsMember({"pawn", "E", "F", "G", "omega", "omega_bar", "pawn_at"}));
  c->add_option("--order", compute.order, "Truncation order")->capture_default_str();
  c->add_option("--n", compute.n, "Coloring bound for F and G, or x = [n]_q for pawn_at");
  c->add_option("--format", compute.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "tex"}))
      ->capture_default_str();
  c->add_option("--workers", compute.workers, "Worker threads")->capture_default_str();
  c->add_option("--cache-dir", compute.cache_dir, "Cache directory (default: $PAWN_CACHE_DIR)");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run theorem sweeps and oracle comparisons");
  std::vector<std::string> suites{"all"};
  for (Theorem t : all_theorems()) suites.emplace_back(theorem_name(t));
  v->add_option("--suite", verify.suite, "Check name or all")->check(CLI::IsMember(suites))->capture_default_str();
  v->add_option("--max-order", verify.opts.max_order, "Largest tree size")->capture_default_str();
  v->add_option("--n-range", verify.n_range, "Range a..b of n for the q-integer evaluations")->capture_default_str();
  v->add_option("--seed", verify.opts.seed, "Seed for random series")->capture_default_str();
  v->add_option("--random-series", verify.opts.random_series, "Number of random draws")->capture_default_str();
  v->add_option("--max-size", verify.opts.max_size, "Tree size bound for the vertex-cover sweep")->capture_default_str();
  v->add_option("--coloring-max-size", verify.opts.bounds.coloring_max_size, "Coloring oracle size bound")
      ->capture_default_str();
  v->add_option("--interpolation-max-size", verify.opts.bounds.interpolation_max_size,
                "Interpolation oracle size bound")
      ->capture_default_str();
  v->add_option("--workers", verify.opts.workers, "Worker threads")->capture_default_str();
  v->add_option("--format", verify.format, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  auto* conj = app.add_subcommand("conjecture", "Sweep a conjecture");
  conj->require_subcommand(1);
  std::string conj_format = "text";
  unsigned conj_workers = 1;
  conj->add_option("--format", conj_format, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  conj->add_option("--workers", conj_workers, "Worker threads")->capture_default_str();
  std::size_t max_n = 12;
  auto* cd = conj->add_subcommand("corolla-denominator", "Denominators of corolla coefficients");
  cd->add_option("--max-n", max_n, "Largest corolla")->capture_default_str();
  std::size_t newton_size = 8;
  std::string newton_tree;
  auto* nw = conj->add_subcommand("newton", "Newton polygon shape");
  nw->add_option("--max-size", newton_size, "Largest tree size")->capture_default_str();
  nw->add_option("--tree", newton_tree, "A single tree, as a parenthesis nesting");
  std::string lambda;
  int k = 3;
  std::size_t cap = 12;
  auto* pt = conj->add_subcommand("partition", "Divisibility of Omega on B+(T_lambda^k)");
  pt->add_option("--lambda", lambda, "Partition parts, comma separated (empty for none)");
  pt->add_option("--k", k, "Number of copies")->capture_default_str();
  pt->add_option("--cap", cap, "Largest tree size attempted")->capture_default_str();

  std::string cache_action, cache_dir;
  auto* ca = app.add_subcommand("cache", "Maintain the coefficient cache");
  ca->add_option("action", cache_action, "list, gc or verify-hashes")
      ->required()
      ->check(CLI::IsMember({"list", "gc", "verify-hashes"}));
  ca->add_option("--cache-dir", cache_dir, "Cache directory (default: $PAWN_CACHE_DIR)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  try {
    if (*c) return run_compute(compute);
    if (*v) return run_verify(verify);
    if (*ca) return run_cache(cache_action, cache_dir);
    if (*cd) return finish_conjecture(check_corolla_denominator(max_n, stderr_progress("corolla-denominator")), conj_format);
    if (*nw) {
      if (!newton_tree.empty()) return finish_conjecture(check_newton(Tree::parse(newton_tree)), conj_format);
      return finish_conjecture(check_newton_sweep(newton_size, conj_workers, stderr_progress("newton")), conj_format);
    }
    const auto parts = parse_partition(lambda);
    try {
      return finish_conjecture(check_partition_conjecture(parts, k, cap), conj_format);
    } catch (const BoundExceeded& e) {
      CheckReport r;
      r.name = "partition";
      r.params = Json{{"lambda", parts}, {"k", k}, {"cap", cap}};
      r.status = CheckStatus::inconclusive;
      r.detail = e.what();
      return finish_conjecture(r, conj_format);
    }
  } catch (const cache::HashMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kHash;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
