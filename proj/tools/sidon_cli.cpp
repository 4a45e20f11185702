// Command-line front end: one subcommand per module.

#include <omp.h>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sidon/bohr.hpp"
#include "sidon/chaos.hpp"
#include "sidon/error.hpp"
#include "sidon/kernel.hpp"
#include "sidon/random_poly.hpp"
#include "sidon/report.hpp"
#include "sidon/sidon_bounds.hpp"
#include "sidon/torus.hpp"
#include "sidon/verify.hpp"

namespace {

using namespace sidon;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string m = "2";
  std::string n = "2";
  double tol = 0.0;
  std::uint64_t seed = 0;
  std::size_t budget = 0;
  std::size_t samples = 0;
  int restarts = 0;
  std::string format;
  std::string input;
  std::string output;
  std::string suite = "all";
  std::string strategy = "min";
  int threads = 0;
  bool search = false;
};

std::int64_t parse_int(const std::string& text, const std::string& flag) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError("--" + flag + ": expected an integer, got '" + text + "'");
  return v;
}

std::int64_t parse_value(const std::string& text, const std::string& flag) {
  if (text.rfind("10^", 0) == 0) {
    const std::int64_t e = parse_int(text.substr(3), flag);
    if (e < 0 || e > 18) throw UsageError("--" + flag + ": exponent out of range in '" + text + "'");
    std::int64_t v = 1;
    for (std::int64_t i = 0; i < e; ++i) v *= 10;
    return v;
  }
  return parse_int(text, flag);
}

// "7", "a..b" (inclusive) or "10^a..10^b" (every power of ten in between).
std::vector<std::int64_t> parse_range(const std::string& text, const std::string& flag) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) return {parse_value(text, flag)};
  const std::string a = text.substr(0, dots);
  const std::string b = text.substr(dots + 2);
  const bool log_grid = a.rfind("10^", 0) == 0;
  if (log_grid != (b.rfind("10^", 0) == 0)) throw UsageError("--" + flag + ": mixed range forms in '" + text + "'");
  const std::int64_t lo = parse_value(a, flag);
  const std::int64_t hi = parse_value(b, flag);
  if (lo > hi) throw UsageError("--" + flag + ": empty range '" + text + "'");
  std::vector<std::int64_t> out;
  if (log_grid) {
    for (std::int64_t v = lo; v <= hi; v *= 10) out.push_back(v);
  } else {
    if (hi - lo > 10000000) throw UsageError("--" + flag + ": range too long");
    for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

int to_int(std::int64_t v, const std::string& flag) {
  if (v < 0 || v > 1000000) throw UsageError("--" + flag + ": value " + std::to_string(v) + " out of range");
  return static_cast<int>(v);
}

std::string read_file(const std::string& path) {
  if (path.empty()) throw UsageError("--input: a polynomial file is required");
  std::ifstream in(path);
  if (!in) throw UsageError("--input: cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool csv(const Config& c, const std::string& fallback) {
  const std::string f = c.format.empty() ? fallback : c.format;
  return f == "csv";
}

SupNormOptions sup_options(const Config& c, double default_tol) {
  SupNormOptions o;
  o.rel_err = c.tol > 0 ? c.tol : default_tol;
  if (c.budget) {
    o.budget = c.budget;
    o.fft_cap = c.budget;
  }
  if (c.restarts) o.restarts = c.restarts;
  o.seed = c.seed;
  return o;
}

std::string phases_json(const TorusPoint& t) {
  std::vector<std::string> v;
  for (double x : t.phases()) v.push_back(format_number(x));
  return json_array(v);
}

int cmd_kappa(const Config& c, std::ostream& out) {
  const Enclosure k = kappa(c.tol > 0 ? c.tol : 1e-6);
  if (csv(c, "json")) {
    out << "lo,hi\n" << format_number(k.lo) << "," << format_number(k.hi) << "\n";
  } else {
    out << JsonObject().number("lo", k.lo).number("hi", k.hi).number("width", k.width()).string("method", k.method).str()
        << "\n";
  }
  return kExitOk;
}

int cmd_bounds(const Config& c, std::ostream& out) {
  const bool as_csv = csv(c, "csv");
  LowerSearchOptions search;
  search.seed = c.seed;
  if (c.restarts) search.candidates = c.restarts;
  if (c.budget) search.sup_budget = c.budget;
  const auto ms = parse_range(c.m, "m");
  const auto ns = parse_range(c.n, "n");
  if (as_csv) out << sidon_csv_header();
  for (std::int64_t m : ms) {
    for (std::int64_t n : ns) {
      const SidonBoundReport r = sidon_report(to_int(m, "m"), n, c.search ? &search : nullptr);
      out << (as_csv ? to_csv(r) : to_json(r) + "\n");
    }
  }
  return kExitOk;
}

int cmd_supnorm(const Config& c, std::ostream& out) {
  const GeneralPoly p = read_poly(read_file(c.input));
  const SupNormResult r = sup_norm(p, sup_options(c, 1e-6));
  if (csv(c, "json")) {
    out << "lo,hi,budget_exhausted,evaluations\n"
        << format_number(r.enclosure.lo) << "," << format_number(r.enclosure.hi) << ","
        << (r.budget_exhausted ? 1 : 0) << "," << r.evaluations << "\n";
  } else {
    out << JsonObject()
               .number("lo", r.enclosure.lo)
               .number("hi", r.enclosure.hi)
               .string("method", r.enclosure.method)
               .raw("argmax", phases_json(r.argmax))
               .boolean("budget_exhausted", r.budget_exhausted)
               .integer("evaluations", static_cast<long long>(r.evaluations))
               .str()
        << "\n";
  }
  return kExitOk;
}

int cmd_sidon_lower(const Config& c, std::ostream& out) {
  LowerSearchOptions o;
  o.seed = c.seed;
  if (c.restarts) o.candidates = c.restarts;
  if (c.budget) o.sup_budget = c.budget;
  if (c.tol > 0) o.rel_err = c.tol;
  const bool as_csv = csv(c, "json");
  const auto ms = parse_range(c.m, "m");
  const auto ns = parse_range(c.n, "n");
  if (as_csv) out << "m,n,certified_ratio,l1,sup_lo,sup_hi,upper_best\n";
  for (std::int64_t m : ms) {
    for (std::int64_t n : ns) {
      const int mi = to_int(m, "m");
      const int ni = to_int(n, "n");
      const LowerSearchResult r = lower_search(mi, ni, o);
      const double upper = upper_best(mi, ni);
      if (as_csv) {
        out << mi << "," << ni << "," << format_number(r.certified_ratio) << "," << format_number(r.l1) << ","
            << format_number(r.sup.lo) << "," << format_number(r.sup.hi) << "," << format_number(upper) << "\n";
      } else {
        out << JsonObject()
                   .integer("m", mi)
                   .integer("n", ni)
                   .number("certified_ratio", r.certified_ratio)
                   .number("l1", r.l1)
                   .raw("sup", to_json(r.sup))
                   .number("upper_best", upper)
                   .integer("candidates", r.candidates_scored)
                   .raw("witness", to_json(GeneralPoly(r.witness)))
                   .str()
            << "\n";
      }
    }
  }
  return kExitOk;
}

int cmd_bohr(const Config& c, std::ostream& out) {
  DegreeStrategy strategy;
  if (c.strategy == "min") {
    strategy = DegreeStrategy::MinSelection;
  } else if (c.strategy == "refined") {
    strategy = DegreeStrategy::RefinedSplit;
  } else {
    throw UsageError("--strategy: expected min or refined, got '" + c.strategy + "'");
  }
  const bool as_csv = csv(c, "json");
  const auto ns = parse_range(c.n, "n");
  if (as_csv) out << bohr_csv_header();
  for (std::int64_t n : ns) {
    const BohrReport r = bohr_lower(n, c.tol > 0 ? c.tol : 1e-10, strategy);
    out << (as_csv ? to_csv(r) : to_json(r) + "\n");
  }
  return kExitOk;
}

int cmd_chaos(const Config& c, std::ostream& out) {
  const std::size_t instances = c.samples ? c.samples : 100;
  const bool as_csv = csv(c, "json");
  const auto ms = parse_range(c.m, "m");
  const auto ns = parse_range(c.n, "n");
  if (as_csv) out << "m,n,instances,min_ratio,max_ratio,bound,violations\n";
  int total_violations = 0;
  for (std::int64_t m : ms) {
    for (std::int64_t n : ns) {
      const int mi = to_int(m, "m");
      const int ni = to_int(n, "n");
      if (mi < 1 || ni < mi) throw UsageError("--m/--n: need 1 <= m <= n");
      double lo = INFINITY;
      double hi = 0.0;
      int violations = 0;
      for (std::size_t i = 0; i < instances; ++i) {
        CounterRng rng(derive_seed(derive_seed(c.seed, static_cast<std::uint64_t>(mi * 1000 + ni)), i));
        const HyperCheck h = hyper_check(random_chaos(ni, mi, rng));
        lo = std::min(lo, h.ratio);
        hi = std::max(hi, h.ratio);
        if (!h.holds || h.ratio < 1.0 - 1e-12) ++violations;
      }
      total_violations += violations;
      const double bound = std::exp(static_cast<double>(mi));
      if (as_csv) {
        out << mi << "," << ni << "," << instances << "," << format_number(lo) << "," << format_number(hi) << ","
            << format_number(bound) << "," << violations << "\n";
      } else {
        out << JsonObject()
                   .integer("m", mi)
                   .integer("n", ni)
                   .integer("instances", static_cast<long long>(instances))
                   .number("min_ratio", lo)
                   .number("max_ratio", hi)
                   .number("bound", bound)
                   .integer("violations", violations)
                   .str()
            << "\n";
      }
    }
  }
  return total_violations ? kExitVerifyFailed : kExitOk;
}

int cmd_project(const Config& c, std::ostream& out) {
  const HomPoly p = read_hom_poly(read_file(c.input));
  CounterRng rng(derive_seed(c.seed, 0x9017));
  const auto z = random_polydisc_point(p.num_vars(), rng);
  const std::size_t samples = c.samples ? c.samples : 100000;
  const MonteCarloEstimate est = project_tetra_mc(p, z, samples, c.seed);
  const Complex exact = evaluate(tetra_split(p).tetrahedral, z);
  const double z_score = est.stderr_ > 0 ? std::abs(est.estimate - exact) / est.stderr_ : 0.0;
  if (csv(c, "json")) {
    out << "estimate_re,estimate_im,stderr,exact_re,exact_im,z_score,samples\n"
        << format_number(est.estimate.real()) << "," << format_number(est.estimate.imag()) << ","
        << format_number(est.stderr_) << "," << format_number(exact.real()) << "," << format_number(exact.imag())
        << "," << format_number(z_score) << "," << est.samples << "\n";
  } else {
    std::vector<std::string> zs;
    for (const auto& v : z) zs.push_back(json_array({format_number(v.real()), format_number(v.imag())}));
    out << JsonObject()
               .raw("z", json_array(zs))
               .raw("estimate", json_array({format_number(est.estimate.real()), format_number(est.estimate.imag())}))
               .number("stderr", est.stderr_)
               .raw("exact", json_array({format_number(exact.real()), format_number(exact.imag())}))
               .number("z_score", z_score)
               .integer("samples", static_cast<long long>(est.samples))
               .str()
        << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Config& c, std::ostream& out) {
  std::vector<CheckResult> results;
  try {
    results = run_suite(c.suite, c.seed);
  } catch (const Error& e) {
    throw UsageError(std::string("--suite: ") + e.what());
  }
  bool all = true;
  if (csv(c, "csv")) {
    out << "suite,check,status,detail\n";
    for (const auto& r : results) {
      out << r.suite << ",\"" << r.check << "\"," << (r.passed ? "pass" : "FAIL") << ",\"" << r.detail << "\"\n";
      all = all && r.passed;
    }
  } else {
    std::vector<std::string> rows;
    for (const auto& r : results) {
      rows.push_back(JsonObject()
                         .string("suite", r.suite)
                         .string("check", r.check)
                         .boolean("passed", r.passed)
                         .string("detail", r.detail)
                         .str());
      all = all && r.passed;
    }
    out << JsonObject().boolean("passed", all).raw("checks", json_array(rows)).str() << "\n";
  }
  return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sidon constants, Bohr radii and certified torus sup norms"};
  app.require_subcommand(1, 1);
  Config c;

  auto add_common = [&c](CLI::App* sub) {
    sub->add_option("--seed", c.seed, "random seed (default 0)");
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", c.output, "write the report to this path instead of stdout");
    sub->add_option("--threads", c.threads, "cap on worker threads")->check(CLI::PositiveNumber);
  };

  auto* kappa_cmd = app.add_subcommand("kappa", "certified enclosure of kappa");
  kappa_cmd->add_option("--tol", c.tol, "enclosure width (default 1e-6)")->check(CLI::PositiveNumber);
  add_common(kappa_cmd);

  auto* bounds_cmd = app.add_subcommand("bounds", "Sidon constant bounds over (m, n) ranges");
  bounds_cmd->add_option("--m", c.m, "degree: k, a..b");
  bounds_cmd->add_option("--n", c.n, "dimension: k, a..b or 10^a..10^b");
  bounds_cmd->add_flag("--search", c.search, "certify lower bounds by witness search");
  bounds_cmd->add_option("--budget", c.budget, "grid evaluations per sup norm");
  bounds_cmd->add_option("--restarts", c.restarts, "search candidates");
  add_common(bounds_cmd);

  auto* sup_cmd = app.add_subcommand("supnorm", "certified sup norm of a polynomial file");
  sup_cmd->add_option("--input", c.input, "polynomial JSON file")->required();
  sup_cmd->add_option("--tol", c.tol, "target relative width (default 1e-6)")->check(CLI::PositiveNumber);
  sup_cmd->add_option("--budget", c.budget, "total grid evaluations");
  sup_cmd->add_option("--restarts", c.restarts, "coarse grids with random offsets");
  add_common(sup_cmd);

  auto* lower_cmd = app.add_subcommand("sidon-lower", "witness search for certified Sidon lower bounds");
  lower_cmd->add_option("--m", c.m, "degree: k or a..b");
  lower_cmd->add_option("--n", c.n, "dimension: k or a..b");
  lower_cmd->add_option("--tol", c.tol, "sup norm relative width (default 1e-4)")->check(CLI::PositiveNumber);
  lower_cmd->add_option("--budget", c.budget, "grid evaluations per sup norm");
  lower_cmd->add_option("--restarts", c.restarts, "random candidates");
  add_common(lower_cmd);

  auto* bohr_cmd = app.add_subcommand("bohr", "certified lower bounds for the Bohr radius");
  bohr_cmd->add_option("--n", c.n, "dimension: k, a..b or 10^a..10^b");
  bohr_cmd->add_option("--tol", c.tol, "relative bisection tolerance (default 1e-10)")->check(CLI::PositiveNumber);
  bohr_cmd->add_option("--strategy", c.strategy, "degree bound selection: min or refined");
  add_common(bohr_cmd);

  auto* chaos_cmd = app.add_subcommand("chaos", "hypercontractivity sweep over random chaoses");
  chaos_cmd->add_option("--m", c.m, "order: k or a..b");
  chaos_cmd->add_option("--n", c.n, "number of signs: k or a..b");
  chaos_cmd->add_option("--samples", c.samples, "instances per (m, n) (default 100)");
  add_common(chaos_cmd);

  auto* project_cmd = app.add_subcommand("project", "Monte Carlo tetrahedral projection at a seeded point");
  project_cmd->add_option("--input", c.input, "homogeneous polynomial JSON file")->required();
  project_cmd->add_option("--samples", c.samples, "Monte Carlo samples (default 100000)");
  add_common(project_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "run invariant suites");
  verify_cmd->add_option("--suite", c.suite, "combinat, polar, kernel, chaos, sidon, bohr or all");
  add_common(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (c.threads > 0) omp_set_num_threads(c.threads);

  std::ofstream file;
  if (!c.output.empty()) {
    file.open(c.output, std::ios::binary);
    if (!file) {
      std::cerr << "error: --output: cannot open '" << c.output << "'\n";
      return kExitUsage;
    }
  }
  std::ostream& out = c.output.empty() ? std::cout : file;

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (name == "kappa") return cmd_kappa(c, out);
    if (name == "bounds") return cmd_bounds(c, out);
    if (name == "supnorm") return cmd_supnorm(c, out);
    if (name == "sidon-lower") return cmd_sidon_lower(c, out);
    if (name == "bohr") return cmd_bohr(c, out);
    if (name == "chaos") return cmd_chaos(c, out);
    if (name == "project") return cmd_project(c, out);
    return cmd_verify(c, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
