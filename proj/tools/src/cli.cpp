#include "mockgauss_cli/cli.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mockgauss/dirichlet.hpp"
#include "mockgauss/error.hpp"
#include "mockgauss/linstat.hpp"
#include "mockgauss/moments.hpp"
#include "mockgauss/partitions.hpp"
#include "mockgauss/rmt.hpp"
#include "mockgauss/smallzero.hpp"
#include "mockgauss/testfn.hpp"
#include "mockgauss/version.hpp"
#include "mockgauss/zeros.hpp"
#include "output.hpp"

namespace mockgauss::cli {
namespace {

struct GlobalOptions {
  std::uint64_t seed = 1;
  int workers = 0;
  std::optional<double> tol;
  std::string cache_dir;
  std::string out;
  std::string format;
  bool no_cache = false;
};

struct RmtArgs {
  int dim = 0;
  std::string fn;
  long long samples = 0;
  int mmax = 4;
  std::string sampler = "verblunsky";
};

struct ExactArgs {
  std::string fn;
  int m = 2;
};

struct ZerosArgs {
  std::uint64_t q = 0;
  double height = 0.0;
  std::vector<std::uint64_t> chars;
  double grid_step = 0.0;
};

struct StatsArgs {
  std::uint64_t q = 0;
  std::string fn;
  double height = 0.0;
  std::string mode = "from-zeros";
  int mmax = 3;
  double max_tail = kDefaultMaxTail;
};

struct SmallZeroArgs {
  std::uint64_t q = 0;
  double beta = 0.7;
  double height = 0.0;
  bool constants = false;
};

struct PartitionArgs {
  int m = 0;
  int r = 0;
};

ordered_json base_config(const std::string& subcommand, const GlobalOptions& g) {
  ordered_json c;
  c["subcommand"] = subcommand;
  c["version"] = kVersion;
  c["seed"] = g.seed;
  if (g.tol) c["tol"] = *g.tol;
  return c;
}

std::optional<ZeroCache> make_cache(const GlobalOptions& g) {
  if (g.no_cache) return std::nullopt;
  if (!g.cache_dir.empty()) return ZeroCache(g.cache_dir);
  return ZeroCache::from_environment();
}

ZeroSearchOptions search_options(const GlobalOptions& g, double grid_step = 0.0) {
  ZeroSearchOptions o;
  if (g.tol) o.bracket_tol = *g.tol;
  o.grid_step = grid_step;
  return o;
}

std::string format_or(const GlobalOptions& g, const std::string& fallback,
                      std::initializer_list<const char*> allowed) {
  std::string f = g.format.empty() ? fallback : g.format;
  for (const char* a : allowed) {
    if (f == a) return f;
  }
  fail(ErrorKind::kParse, "format '" + f + "' is not available for this subcommand");
}

ordered_json optional_number(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

int cmd_rmt(const RmtArgs& a, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  const TestFunction f = parse_test_function(a.fn);
  McOptions opts;
  opts.sampler = parse_sampler(a.sampler);
  opts.workers = g.workers;
  const MomentReport r = mc_moments(a.dim, f, a.samples, g.seed, a.mmax, opts);
  ordered_json config = base_config("rmt-moments", g);
  config["dim"] = a.dim;
  config["fn"] = f.descriptor();
  config["samples"] = a.samples;
  config["mmax"] = a.mmax;
  config["sampler"] = r.sampler;
  config["batches"] = r.batches;

  const std::string format = format_or(g, "json", {"json", "csv"});
  if (format == "json") {
    ordered_json doc;
    doc["config"] = config;
    doc["dimension"] = r.dimension;
    doc["samples"] = r.samples;
    doc["seed"] = r.seed;
    doc["fn"] = r.fn;
    doc["sigma_sq"] = r.sigma_sq;
    doc["finite_n_variance"] = r.finite_n_variance;
    ordered_json ms = ordered_json::array();
    for (const MomentEstimate& m : r.moments) {
      ordered_json e;
      e["m"] = m.m;
      e["estimate"] = m.estimate;
      e["stderr"] = m.std_error;
      e["raw"] = m.raw;
      e["raw_stderr"] = m.raw_std_error;
      e["prediction"] = optional_number(m.prediction);
      e["prediction_source"] = m.prediction_source;
      ms.push_back(e);
    }
    doc["moments"] = ms;
    emit(g.out, dump_json(doc), out);
  } else {
    std::ostringstream os;
    os << csv_header_comment(config) << "m,estimate,stderr,raw,raw_stderr,prediction,prediction_source\n";
    for (const MomentEstimate& m : r.moments) {
      os << m.m << ',' << fmt(m.estimate) << ',' << fmt(m.std_error) << ',' << fmt(m.raw) << ','
         << fmt(m.raw_std_error) << ',' << (m.prediction ? fmt(*m.prediction) : "") << ','
         << m.prediction_source << '\n';
    }
    emit(g.out, os.str(), out);
  }
  const MomentEstimate& var = r.moments.size() >= 2 ? r.moment(2) : r.moment(1);
  err << "rmt-moments: N=" << r.dimension << " samples=" << r.samples << " mean=" << fmt(r.moment(1).estimate)
      << " m" << var.m << "=" << fmt(var.estimate) << " (se " << fmt(var.std_error) << ")\n";
  return kExitOk;
}

int cmd_exact(const ExactArgs& a, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  const TestFunction f = parse_test_function(a.fn);
  const double tol = g.tol.value_or(1e-6);
  require(a.m >= 1 && a.m <= 3, ErrorKind::kUnsupportedOrder, "--m must be 1, 2 or 3");
  ordered_json config = base_config("exact-moments", g);
  config["fn"] = f.descriptor();
  config["m"] = a.m;
  config["tol"] = tol;
  format_or(g, "json", {"json"});

  ordered_json doc;
  doc["config"] = config;
  doc["fn"] = f.descriptor();
  doc["sigma_sq"] = sigma_sq(f);
  ordered_json ms = ordered_json::array();
  std::vector<double> raw;
  for (int m = 1; m <= a.m; ++m) {
    const std::vector<MomentTerm> terms = exact_moment_terms(f, m, tol);
    double value = 0.0;
    double error = 0.0;
    ordered_json ts = ordered_json::array();
    for (const MomentTerm& t : terms) {
      value += t.value.value;
      error += t.value.error;
      ts.push_back({{"labels", t.labels},
                    {"block_sizes", t.block_sizes},
                    {"value", t.value.value},
                    {"error", t.value.error}});
    }
    raw.push_back(value);
    ms.push_back({{"m", m}, {"value", value}, {"error", error}, {"terms", ts}});
  }
  doc["moments"] = ms;
  if (a.m >= 2) doc["variance"] = raw[1] - raw[0] * raw[0];
  if (a.m >= 3) doc["centered_third"] = raw[2] - 3.0 * raw[0] * raw[1] + 2.0 * raw[0] * raw[0] * raw[0];
  emit(g.out, dump_json(doc), out);
  err << "exact-moments: fn=" << f.descriptor() << " M" << a.m << "=" << fmt(raw.back()) << "\n";
  return kExitOk;
}

std::vector<ZeroList> zero_lists(std::uint64_t q, double T, const std::vector<std::uint64_t>& chars,
                                 const ZeroSearchOptions& opts, const GlobalOptions& g) {
  DirichletGroup group(q);
  const std::optional<ZeroCache> cache = make_cache(g);
  const ZeroCache* cp = cache ? &*cache : nullptr;
  if (chars.empty()) return find_zeros_family(group, T, opts, cp, g.workers);
  std::vector<ZeroList> lists;
  for (std::uint64_t k : chars) {
    require(k >= 1 && k + 1 < q, ErrorKind::kOutOfRange, "--char must be in 1..q-2");
    std::optional<ZeroList> z = cp ? cp->load(q, k, T, opts) : std::nullopt;
    if (!z) {
      z = find_zeros(group.character(k), T, opts);
      if (cp) cp->store(*z, opts);
    }
    lists.push_back(std::move(*z));
  }
  return lists;
}

int cmd_zeros(const ZerosArgs& a, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  const ZeroSearchOptions opts = search_options(g, a.grid_step);
  const std::vector<ZeroList> lists = zero_lists(a.q, a.height, a.chars, opts, g);
  ordered_json config = base_config("lfun-zeros", g);
  config["q"] = a.q;
  config["height"] = a.height;
  config["chars"] = a.chars;
  config["grid_step"] = a.grid_step;
  config["bracket_tol"] = opts.bracket_tol;

  std::size_t total = 0;
  const std::string format = format_or(g, "csv", {"csv", "json"});
  if (format == "csv") {
    std::ostringstream os;
    os << csv_header_comment(config) << "q,char_index,parity,j,gamma,x_scaled,residual\n";
    for (const ZeroList& z : lists) {
      for (std::size_t j = 0; j < z.size(); ++j) {
        os << z.q << ',' << z.char_index << ',' << z.parity << ',' << j + 1 << ',' << fmt(z.ordinates[j]) << ','
           << fmt(z.scaled[j]) << ',' << fmt(z.residuals[j]) << '\n';
      }
      total += z.size();
    }
    emit(g.out, os.str(), out);
  } else {
    ordered_json doc;
    doc["config"] = config;
    ordered_json ls = ordered_json::array();
    for (const ZeroList& z : lists) {
      ls.push_back({{"char_index", z.char_index},
                    {"parity", z.parity},
                    {"height", z.height},
                    {"grid_step", z.grid_step},
                    {"expected_count", z.expected_count},
                    {"gamma", z.ordinates},
                    {"x_scaled", z.scaled},
                    {"residual", z.residuals}});
      total += z.size();
    }
    doc["lists"] = ls;
    emit(g.out, dump_json(doc), out);
  }
  err << "lfun-zeros: q=" << a.q << " T=" << fmt(a.height) << " characters=" << lists.size()
      << " zeros=" << total << "\n";
  return kExitOk;
}

ordered_json targets_json(const std::vector<TheoryTarget>& targets) {
  ordered_json ts = ordered_json::array();
  for (const TheoryTarget& t : targets) {
    ts.push_back(
        {{"name", t.name}, {"value", t.value}, {"applicable", t.applicable}, {"condition", t.condition}});
  }
  return ts;
}

int cmd_stats(const StatsArgs& a, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  const TestFunction f = parse_test_function(a.fn);
  const FamilyMode mode = parse_family_mode(a.mode);
  const std::optional<ZeroCache> cache = make_cache(g);
  FamilyOptions opts;
  opts.search = search_options(g);
  opts.cache = cache ? &*cache : nullptr;
  opts.workers = g.workers;
  opts.max_tail = a.max_tail;
  require(mode == FamilyMode::kOscOnly || a.height > 0.0, ErrorKind::kPreconditionViolation,
          "from-zeros mode needs --height");
  const std::string format = format_or(g, "json", {"json", "csv"});
  const FamilyStats st = family_stats(a.q, f, a.height, a.mmax, mode, opts);

  ordered_json config = base_config("lfun-stats", g);
  config["q"] = a.q;
  config["fn"] = f.descriptor();
  config["height"] = a.height;
  config["mode"] = to_string(mode);
  config["mmax"] = a.mmax;
  config["max_tail"] = a.max_tail;

  if (format == "csv") {
    std::ostringstream os;
    os << csv_header_comment(config) << "char_index,parity,value,wf_bar,wf_osc,budget\n";
    for (std::size_t i = 0; i < st.values.size(); ++i) {
      os << st.char_index[i] << ',' << st.parity[i] << ',' << fmt(st.values[i]) << ',' << fmt(st.wf_bar[i]) << ','
         << fmt(st.wf_osc[i]) << ',' << fmt(st.budgets[i]) << '\n';
    }
    emit(g.out, os.str(), out);
  } else {
    ordered_json doc;
    doc["config"] = config;
    doc["q"] = st.q;
    doc["fn"] = st.fn;
    doc["mode"] = to_string(st.mode);
    doc["support_halfwidth"] = f.support_halfwidth();
    doc["fhat0"] = f.fhat(0.0);
    doc["variance_target"] = variance_target(f);
    doc["mean"] = st.mean;
    doc["variance"] = st.variance;
    doc["second_moment"] = st.second_moment;
    ordered_json centered = ordered_json::array();
    for (std::size_t i = 0; i < st.centered.size(); ++i) {
      centered.push_back({{"m", i + 1}, {"value", st.centered[i]}});
    }
    doc["centered_moments"] = centered;
    doc["osc_exact"] = {{"mean", st.osc.mean},
                        {"second_moment", st.osc.second_moment},
                        {"diagonal", st.osc.diagonal},
                        {"congruent", st.osc.congruent},
                        {"inverse_pair", st.osc.inverse_pair},
                        {"remainder", st.osc.remainder}};
    doc["targets"] = targets_json(st.targets);
    ordered_json per = ordered_json::array();
    for (std::size_t i = 0; i < st.values.size(); ++i) {
      per.push_back({{"char_index", st.char_index[i]},
                     {"parity", st.parity[i]},
                     {"value", st.values[i]},
                     {"wf_bar", st.wf_bar[i]},
                     {"wf_osc", st.wf_osc[i]},
                     {"budget", st.budgets[i]}});
    }
    doc["characters"] = per;
    emit(g.out, dump_json(doc), out);
  }
  err << "lfun-stats: q=" << a.q << " mode=" << to_string(mode) << " mean=" << fmt(st.mean)
      << " variance=" << fmt(st.variance) << "\n";
  return kExitOk;
}

int cmd_smallzero_constants(const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  ordered_json config = base_config("smallzero", g);
  config["constants"] = true;
  std::ostringstream os;
  os << csv_header_comment(config) << "quantity,R,beta,value\n";
  for (double R : {0.25, 0.5, 1.0}) {
    os << "B," << fmt(R) << ",," << fmt(b_constant(TestFunction::cosine_window(R))) << '\n';
  }
  os << "beta_star,0.5,," << fmt(threshold_beta()) << '\n';
  os << "bound_limit,0.5,," << fmt(proportion_bound_limit()) << '\n';
  os << "liminf_target,0.5,,0.25\n";
  for (int i = 0; i <= 68; ++i) {
    const double beta = 0.64 + 0.02 * i;
    os << "bound,0.5," << fmt(beta) << ',' << fmt(proportion_bound(beta)) << '\n';
  }
  emit(g.out, os.str(), out);
  err << "smallzero: beta_star=" << fmt(threshold_beta()) << "\n";
  return kExitOk;
}

int cmd_smallzero(const SmallZeroArgs& a, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  if (a.constants) {
    format_or(g, "csv", {"csv"});
    return cmd_smallzero_constants(g, out, err);
  }
  require(a.q > 0, ErrorKind::kPreconditionViolation, "--q is required unless --constants is given");
  require(a.height > 0.0, ErrorKind::kPreconditionViolation, "--height is required");
  const std::string format = format_or(g, "json", {"json", "csv"});
  const ZeroSearchOptions opts = search_options(g);
  const std::vector<ZeroList> lists = zero_lists(a.q, a.height, {}, opts, g);
  const SmallZeroReport r = first_zero_stats(lists, a.beta, 0.5);

  ordered_json config = base_config("smallzero", g);
  config["q"] = a.q;
  config["beta"] = a.beta;
  config["height"] = a.height;
  if (format == "csv") {
    std::ostringstream os;
    os << csv_header_comment(config) << "char_index,x1\n";
    for (std::size_t i = 0; i < r.first_zeros.size(); ++i) {
      os << r.char_index[i] << ',' << fmt(r.first_zeros[i]) << '\n';
    }
    emit(g.out, os.str(), out);
  } else {
    ordered_json doc;
    doc["config"] = config;
    doc["q"] = r.q;
    doc["R"] = r.R;
    doc["beta"] = r.beta;
    doc["B"] = r.B;
    doc["integral_f"] = r.integral_f;
    doc["bound"] = r.bound_applicable ? ordered_json(r.bound) : ordered_json(nullptr);
    doc["bound_applicable"] = r.bound_applicable;
    doc["beta_star"] = r.beta_star;
    doc["liminf_target"] = r.liminf_target;
    doc["height"] = r.height;
    doc["min_first_zero"] = r.min_first_zero;
    doc["argmin_char"] = r.argmin_char;
    doc["fraction_below"] = r.fraction_below;
    ordered_json fz = ordered_json::array();
    for (std::size_t i = 0; i < r.first_zeros.size(); ++i) {
      fz.push_back({{"char_index", r.char_index[i]}, {"x1", r.first_zeros[i]}});
    }
    doc["first_zeros"] = fz;
    emit(g.out, dump_json(doc), out);
  }
  err << "smallzero: q=" << a.q << " min x1=" << fmt(r.min_first_zero) << " fraction(x1<" << fmt(a.beta)
      << ")=" << fmt(r.fraction_below) << "\n";
  return kExitOk;
}

int cmd_partitions(const PartitionArgs& a, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  format_or(g, "jsonl", {"jsonl"});
  require(a.m >= 1 && a.m <= kMaxEnumerationSize, ErrorKind::kOutOfRange, "--m must be in 1..12");
  require(a.r >= 0 && a.r <= a.m, ErrorKind::kOutOfRange, "--r must be in 1..m");
  std::ostringstream os;
  std::size_t count = 0;
  const int r_lo = a.r == 0 ? 1 : a.r;
  const int r_hi = a.r == 0 ? a.m : a.r;
  for (int r = r_lo; r <= r_hi; ++r) {
    for_each_partition(a.m, r, [&](const SetPartition& p) {
      ordered_json line;
      line["m"] = p.m;
      line["r"] = p.r;
      line["labels"] = p.labels;
      line["block_sizes"] = p.block_sizes;
      os << line.dump() << '\n';
      ++count;
    });
  }
  emit(g.out, os.str(), out);
  err << "partitions: m=" << a.m << " count=" << count << " (mockgauss " << kVersion << ")\n";
  return kExitOk;
}

int cmd_selftest(const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<SelftestResult> results = run_selftest();
  std::ostringstream os;
  int failed = 0;
  for (const SelftestResult& r : results) {
    os << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    if (!r.passed) ++failed;
  }
  emit(g.out, os.str(), out);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  err << "selftest: " << results.size() - static_cast<std::size_t>(failed) << "/" << results.size()
      << " passed in " << fmt(std::round(secs * 10.0) / 10.0) << " s\n";
  return failed == 0 ? kExitOk : kExitNumerical;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear statistics of CUE eigenphases and of low-lying zeros of Dirichlet L-functions",
               "mockgauss"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--workers", g.workers, "Worker threads (0 = available parallelism)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--tol", g.tol, "Tolerance: quadrature for exact-moments, root bracketing for zero searches")
      ->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", g.cache_dir, "Zero-list cache directory (default: MOCKGAUSS_CACHE_DIR)");
  app.add_flag("--no-cache", g.no_cache, "Do not read or write the zero-list cache");
  app.add_option("--out", g.out, "Output file (default: standard output)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "jsonl"}));

  std::function<int()> action;

  RmtArgs rmt;
  auto* s_rmt = app.add_subcommand("rmt-moments", "Monte Carlo moments of Z_f over CUE");
  s_rmt->add_option("--dim", rmt.dim, "Matrix dimension N")->required()->check(CLI::Range(2, 4096));
  s_rmt->add_option("--fn", rmt.fn, "Test-function descriptor")->required();
  s_rmt->add_option("--samples", rmt.samples, "Number of matrices")->required();
  s_rmt->add_option("--mmax", rmt.mmax, "Highest moment")->capture_default_str();
  s_rmt->add_option("--sampler", rmt.sampler, "verblunsky or qr")->capture_default_str();
  s_rmt->callback([&] { action = [&] { return cmd_rmt(rmt, g, out, err); }; });

  ExactArgs exact;
  auto* s_exact = app.add_subcommand("exact-moments", "Sine-kernel moments of a linear statistic");
  s_exact->add_option("--fn", exact.fn, "Test-function descriptor")->required();
  s_exact->add_option("--m", exact.m, "Highest moment (1..3)")->capture_default_str();
  s_exact->callback([&] { action = [&] { return cmd_exact(exact, g, out, err); }; });

  ZerosArgs zeros;
  auto* s_zeros = app.add_subcommand("lfun-zeros", "Zeros of Dirichlet L-functions on the critical line");
  s_zeros->add_option("--q", zeros.q, "Prime modulus")->required();
  s_zeros->add_option("--height", zeros.height, "Search height T")->required();
  s_zeros->add_option("--char", zeros.chars, "Character indices (default: all nontrivial)");
  s_zeros->add_option("--grid-step", zeros.grid_step, "Scan step (default: automatic)");
  s_zeros->callback([&] { action = [&] { return cmd_zeros(zeros, g, out, err); }; });

  StatsArgs stats;
  auto* s_stats = app.add_subcommand("lfun-stats", "Family statistics of W_f over characters mod q");
  s_stats->add_option("--q", stats.q, "Prime modulus")->required();
  s_stats->add_option("--fn", stats.fn, "Test-function descriptor")->required();
  s_stats->add_option("--height", stats.height, "Zero search height (from-zeros mode)");
  s_stats->add_option("--mode", stats.mode, "from-zeros or osc-only")->capture_default_str();
  s_stats->add_option("--mmax", stats.mmax, "Highest centered moment")->capture_default_str();
  s_stats->add_option("--max-tail", stats.max_tail, "Largest allowed zero tail bound")->capture_default_str();
  s_stats->callback([&] { action = [&] { return cmd_stats(stats, g, out, err); }; });

  SmallZeroArgs sz;
  auto* s_sz = app.add_subcommand("smallzero", "First-zero statistics and small-zero constants");
  s_sz->add_option("--q", sz.q, "Prime modulus");
  s_sz->add_option("--beta", sz.beta, "Threshold for the first scaled zero")->capture_default_str();
  s_sz->add_option("--height", sz.height, "Zero search height");
  s_sz->add_flag("--constants", sz.constants, "Print B(R), beta* and the bound curve as CSV");
  s_sz->callback([&] { action = [&] { return cmd_smallzero(sz, g, out, err); }; });

  PartitionArgs parts;
  auto* s_parts = app.add_subcommand("partitions", "Set partitions of {1..m} as restricted growth strings");
  s_parts->add_option("--m", parts.m, "Set size")->required();
  s_parts->add_option("--r", parts.r, "Only partitions into r blocks");
  s_parts->callback([&] { action = [&] { return cmd_partitions(parts, g, out, err); }; });

  auto* s_self = app.add_subcommand("selftest", "Fast invariant battery");
  s_self->callback([&] { action = [&] { return cmd_selftest(g, out, err); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitConfig;
  }

  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.is_config_error()) {
      err << '\n' << app.help();
      return kExitConfig;
    }
    err << "budget: attained " << fmt(e.attained()) << ", allowed " << fmt(e.budget()) << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace mockgauss::cli
