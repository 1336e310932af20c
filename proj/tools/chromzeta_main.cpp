// chromzeta: chromatic polynomials, chromatic zeta products and lattice
// visibility simulations from the command line.
//
// Exit codes: 0 success, 2 usage error, 3 budget exceeded, 4 internal
// invariant failure.

#include <cstdlib>
#include <limits>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chromzeta/chromatic.hpp"
#include "chromzeta/euler.hpp"
#include "chromzeta/graph.hpp"
#include "chromzeta/lattice.hpp"
#include "chromzeta/montecarlo.hpp"
#include "chromzeta/report.hpp"
#include "chromzeta/selftest.hpp"

namespace cz = chromzeta;

namespace {

enum ExitCode { kOk = 0, kUsage = 2, kBudget = 3, kInternal = 4 };

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  try {
    return std::stoull(raw);
  } catch (const std::exception&) {
    throw cz::UsageError(std::string("environment variable ") + name + " is not an integer");
  }
}

struct RunConfig {
  std::string command;
  std::string family;
  std::string file;
  std::string given_family;
  std::string given_file;
  int max_k = cz::kDefaultMaxVertices;
  double s_real = 2.0;
  int s = 2;
  std::int64_t n = 0;
  std::string n_list;
  std::uint64_t p = 2;
  std::uint64_t m = 1;
  int cycle_k = 3;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  double confidence = cz::kDefaultConfidence;
  double target_tail = 1e-10;
  std::string tail_mode = "corrected";
  std::uint64_t max_prime = cz::kDefaultPrimeCap;
  std::uint64_t budget = cz::kDefaultEnumerationBudget;
  std::string format = "text";
};

// Resolved configuration echoed at the top of every output.
class Header {
 public:
  void set(const std::string& key, const std::string& value) { text_.emplace_back(key, value); }
  void set_json(const std::string& key, std::string raw) { json_.add_raw(key, std::move(raw)); }
  void add(const std::string& key, const std::string& value) {
    set(key, value);
    json_.add_string(key, value);
  }
  template <class T>
  void add_number(const std::string& key, T value) {
    if constexpr (std::is_floating_point_v<T>) {
      set(key, cz::format_double(value));
      json_.add(key, static_cast<double>(value));
    } else {
      set(key, std::to_string(value));
      json_.add(key, value);
    }
  }

  void print_comments(std::ostream& out) const {
    for (const auto& [k, v] : text_) out << "# " << k << ": " << v << '\n';
  }
  std::string json() const { return json_.str(); }

 private:
  std::vector<std::pair<std::string, std::string>> text_;
  cz::JsonObject json_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cz::UsageError("cannot open graph file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

cz::Graph load_graph(const std::string& family, const std::string& file, int max_k, const char* what) {
  if (family.empty() == file.empty()) {
    throw cz::UsageError(std::string("give exactly one of --") + what + "family or --" + what + "file");
  }
  return family.empty() ? cz::parse_graph(read_file(file), max_k) : cz::family(family, max_k);
}

void describe_graph(Header& h, const RunConfig& cfg, const cz::Graph& g) {
  h.add("graph", cfg.family.empty() ? "file " + cfg.file : "family " + cfg.family);
  h.add_number("k", g.order());
  h.add_number("edges", static_cast<std::uint64_t>(g.size()));
}

cz::EulerOptions euler_options(const RunConfig& cfg) {
  cz::EulerOptions o;
  o.target_tail = cfg.target_tail;
  o.prime_cap = cfg.max_prime;
  o.workers = cfg.workers;
  o.chromatic.max_vertices = cfg.max_k;
  if (cfg.tail_mode == "truncated") {
    o.tail_mode = cz::TailMode::truncated;
  } else if (cfg.tail_mode != "corrected") {
    throw cz::UsageError("--tail-mode must be 'corrected' or 'truncated'");
  }
  return o;
}

void add_euler_config(Header& h, const RunConfig& cfg) {
  h.add_number("target_tail", cfg.target_tail);
  h.add("tail_mode", cfg.tail_mode);
  h.add_number("max_prime", cfg.max_prime);
  h.add_number("workers", cfg.workers);
}

void add_sim_config(Header& h, const RunConfig& cfg) {
  h.add_number("trials", cfg.trials);
  h.add_number("seed", cfg.seed);
  h.add_number("workers", cfg.workers);
  h.add_number("confidence", cfg.confidence);
}

std::string closed_form(const std::string& fam) {
  const auto colon = fam.find(':');
  const std::string name = fam.substr(0, colon);
  const int k = std::stoi(fam.substr(colon + 1));
  const auto power = [](const std::string& base, int e) {
    return e == 1 ? base : base + "^" + std::to_string(e);
  };
  if (name == "empty") return power("x", k);
  if (name == "path" || name == "star") return k == 1 ? "x" : "x" + power("(x-1)", k - 1);
  if (name == "cycle") return power("(x-1)", k) + (k % 2 == 0 ? " + (x-1)" : " - (x-1)");
  if (name == "complete") {
    std::string out = "x";
    for (int i = 1; i < k; ++i) out += "(x-" + std::to_string(i) + ")";
    return out;
  }
  return {};
}

void emit(const RunConfig& cfg, const Header& h, const std::vector<std::pair<std::string, std::string>>& text,
          const std::string& result_json) {
  if (cfg.format == "json") {
    std::cout << cz::JsonObject().add_raw("config", h.json()).add_raw("result", result_json).str() << '\n';
    return;
  }
  h.print_comments(std::cout);
  for (const auto& [k, v] : text) std::cout << k << ": " << v << '\n';
}

std::vector<std::pair<std::string, std::string>> product_lines(const cz::CertifiedProduct& p) {
  return {{"value", cz::format_double(p.value)},
          {"lower", cz::format_double(p.lower)},
          {"upper", cz::format_double(p.upper)},
          {"truncation_prime", std::to_string(p.truncation_prime)},
          {"tail_epsilon", cz::format_double(p.tail_epsilon)},
          {"rounding", cz::format_double(p.rounding)},
          {"exact_zero", p.exact_zero ? "true" : "false"}};
}

std::vector<std::pair<std::string, std::string>> estimate_lines(const cz::Estimate& e, const std::string& prefix = "") {
  return {{prefix + "successes", std::to_string(e.successes)},
          {prefix + "trials", std::to_string(e.trials)},
          {prefix + "point", cz::format_double(e.point)},
          {prefix + "ci_low", cz::format_double(e.ci_low)},
          {prefix + "ci_high", cz::format_double(e.ci_high)}};
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  throw cz::UsageError("--format " + cfg.format + " is not supported by '" + cfg.command + "'");
}

int cmd_poly(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  const cz::Graph g = load_graph(cfg.family, cfg.file, cfg.max_k, "");
  cz::ChromaticLimits limits;
  limits.max_vertices = cfg.max_k;
  const cz::IntPolynomial p = cz::chromatic_polynomial(g, limits);
  if (const auto bad = cz::chromatic_invariant_violations(p, g); !bad.empty()) {
    throw cz::InvariantError("chromatic polynomial invariant failed: " + bad.front());
  }
  Header h;
  h.add("command", "poly");
  describe_graph(h, cfg, g);

  std::vector<std::pair<std::string, std::string>> text = {{"coefficients", p.coefficient_list()},
                                                           {"polynomial", p.to_string()}};
  cz::JsonObject json;
  json.add_raw("coefficients", p.to_json()).add_string("polynomial", p.to_string());
  const auto fam = cfg.family.empty() ? cz::identify_family(g) : std::optional<std::string>(cfg.family);
  if (fam) {
    text.emplace_back("closed_form", closed_form(*fam));
    json.add_string("closed_form", closed_form(*fam));
  }
  emit(cfg, h, text, json.str());
  return kOk;
}

int cmd_zeta(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  const cz::Graph g = load_graph(cfg.family, cfg.file, cfg.max_k, "");
  const cz::EulerOptions opts = euler_options(cfg);
  Header h;
  h.add("command", "zeta");
  describe_graph(h, cfg, g);
  h.add_number("s", cfg.s_real);
  add_euler_config(h, cfg);

  cz::CertifiedProduct result;
  if (!cfg.given_family.empty() || !cfg.given_file.empty()) {
    const cz::Graph sub = load_graph(cfg.given_family, cfg.given_file, cfg.max_k, "given-");
    h.add("given", cfg.given_family.empty() ? "file " + cfg.given_file : "family " + cfg.given_family);
    result = cz::conditional_limit(g, sub, cfg.s_real, opts);
  } else {
    result = cz::zeta_H_inverse(g, cfg.s_real, opts);
  }
  if (!(result.lower <= result.value && result.value <= result.upper)) {
    throw cz::InvariantError("certified product bounds do not enclose the value");
  }
  emit(cfg, h, product_lines(result), cz::to_json(result));
  return kOk;
}

int cmd_closed_form(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  Header h;
  h.add("command", "closed-form");
  h.add_number("cycle_k", cfg.cycle_k);
  h.add_number("s", cfg.s_real);
  add_euler_config(h, cfg);
  const auto result = cz::cycle_limit_closed_form(cfg.cycle_k, cfg.s_real, euler_options(cfg));
  emit(cfg, h, product_lines(result), cz::to_json(result));
  return kOk;
}

int cmd_rearick(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  Header h;
  h.add("command", "rearick");
  h.add_number("m", cfg.m);
  h.add_number("s", cfg.s);
  add_euler_config(h, cfg);
  const auto result = cz::rearick_ratio(cfg.m, cfg.s, euler_options(cfg));
  emit(cfg, h, product_lines(result), cz::to_json(result));
  return kOk;
}

int cmd_simulate(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  const cz::Graph g = load_graph(cfg.family, cfg.file, cfg.max_k, "");
  cz::SimulationOptions sim{cfg.trials, cfg.seed, cfg.workers, cfg.confidence};
  Header h;
  h.add("command", "simulate");
  describe_graph(h, cfg, g);
  h.add_number("n", cfg.n);
  h.add_number("s", cfg.s);
  add_sim_config(h, cfg);

  if (!cfg.given_family.empty() || !cfg.given_file.empty()) {
    const cz::Graph sub = load_graph(cfg.given_family, cfg.given_file, cfg.max_k, "given-");
    h.add("given", cfg.given_family.empty() ? "file " + cfg.given_file : "family " + cfg.given_family);
    const auto c = cz::estimate_conditional(g, sub, cfg.n, cfg.s, sim);
    auto text = estimate_lines(c.conditioning, "given_");
    for (auto& line : estimate_lines(c.conditional, "conditional_")) text.push_back(line);
    text.emplace_back("ratio", cz::format_double(c.ratio));
    emit(cfg, h, text,
         cz::JsonObject()
             .add_raw("conditioning", cz::to_json(c.conditioning))
             .add_raw("conditional", cz::to_json(c.conditional))
             .add("ratio", c.ratio)
             .str());
    return kOk;
  }

  const cz::Estimate e = cz::estimate_probability(g, cfg.n, cfg.s, sim);
  emit(cfg, h, estimate_lines(e), cz::to_json(e));
  return kOk;
}

std::vector<std::int64_t> parse_n_list(const std::string& raw) {
  std::vector<std::int64_t> out;
  std::stringstream ss(raw);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw cz::UsageError("--n: '" + item + "' is not an integer");
    }
  }
  if (out.empty()) throw cz::UsageError("--n: empty list");
  return out;
}

int cmd_sweep(RunConfig cfg) {
  if (cfg.format == "text") cfg.format = "csv";
  require_format(cfg, {"csv", "json"});
  const cz::Graph g = load_graph(cfg.family, cfg.file, cfg.max_k, "");
  const auto n_values = parse_n_list(cfg.n_list);
  cz::SimulationOptions sim{cfg.trials, cfg.seed, cfg.workers, cfg.confidence};
  Header h;
  h.add("command", "sweep");
  describe_graph(h, cfg, g);
  h.add("n", cfg.n_list);
  h.add_number("s", cfg.s);
  add_sim_config(h, cfg);
  h.add_number("target_tail", cfg.target_tail);

  const auto rows = cz::convergence_sweep(g, cfg.s, n_values, sim, euler_options(cfg));
  if (cfg.format == "json") {
    std::string arr = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) arr += (i ? ", " : "") + cz::to_json(rows[i]);
    arr += "]";
    std::cout << cz::JsonObject().add_raw("config", h.json()).add_raw("rows", arr).str() << '\n';
    return kOk;
  }
  h.print_comments(std::cout);
  std::cout << cz::sweep_csv_header() << '\n';
  for (const auto& row : rows) std::cout << cz::to_csv(row) << '\n';
  return kOk;
}

int cmd_enumerate(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  const cz::Graph g = load_graph(cfg.family, cfg.file, cfg.max_k, "");
  Header h;
  h.add("command", "enumerate");
  describe_graph(h, cfg, g);
  h.add_number("n", cfg.n);
  h.add_number("s", cfg.s);
  h.add_number("budget", cfg.budget);
  const cz::ExactFraction f = cz::exact_probability(g, cfg.n, cfg.s, cfg.budget);
  emit(cfg, h, {{"probability", f.str()}, {"value", cz::format_double(f.to_double())}}, cz::to_json(f));
  return kOk;
}

int cmd_residues(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  const cz::Graph g = load_graph(cfg.family, cfg.file, cfg.max_k, "");
  Header h;
  h.add("command", "residues");
  describe_graph(h, cfg, g);
  h.add_number("p", cfg.p);
  h.add_number("s", cfg.s);
  h.add_number("budget", cfg.budget);

  const std::uint64_t count = cz::count_Hp_visible_residue_tuples(g, cfg.p, cfg.s, cfg.budget);
  cz::ChromaticLimits limits;
  limits.max_vertices = cfg.max_k;
  const cz::BigInt q = boost::multiprecision::pow(cz::BigInt(cfg.p), static_cast<unsigned>(cfg.s));
  const cz::BigInt expected = cz::eval_at_prime_power(cz::chromatic_polynomial(g, limits), cfg.p, cfg.s);
  if (expected != count) {
    throw cz::InvariantError("residue count " + std::to_string(count) + " != P_H(" + q.str() + ") = " +
                             expected.str());
  }
  const std::string note = "== P_H(" + q.str() + ")";
  emit(cfg, h, {{"count", std::to_string(count) + " " + note}},
       cz::JsonObject()
           .add("count", count)
           .add_string("chromatic_value", expected.str())
           .add_string("argument", q.str())
           .add("matches", true)
           .str());
  return kOk;
}

int cmd_selftest() {
  const auto summary = cz::run_selftest(std::cout);
  return summary.ok() ? kOk : kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  try {
    cfg.budget = env_u64("CHROMZETA_ENUM_BUDGET", cfg.budget);
    cfg.max_prime = env_u64("CHROMZETA_PRIME_CAP", cfg.max_prime);
  } catch (const cz::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  CLI::App app{"Chromatic zeta functions and lattice visibility"};
  app.require_subcommand(1);

  const auto graph_opts = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "Built-in graph: path:k, cycle:k, complete:k, empty:k, star:k");
    sub->add_option("--file", cfg.file, "Edge-list file");
    sub->add_option("--max-k", cfg.max_k, "Largest accepted vertex count")->check(CLI::Range(1, 64));
  };
  const auto format_opt = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  };
  const auto euler_opts = [&](CLI::App* sub) {
    sub->add_option("--target-tail", cfg.target_tail, "Bound on the log-tail of the Euler product")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tail-mode", cfg.tail_mode, "corrected or truncated")
        ->check(CLI::IsMember({"corrected", "truncated"}));
    sub->add_option("--max-prime", cfg.max_prime, "Prime sieve cap");
    sub->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::Range(1u, 1024u));
  };
  const auto sim_opts = [&](CLI::App* sub) {
    sub->add_option("--trials", cfg.trials, "Monte Carlo trials")->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
    sub->add_option("--seed", cfg.seed, "Run seed");
    sub->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::Range(1u, 1024u));
    sub->add_option("--confidence", cfg.confidence, "Wilson interval level")->check(CLI::Range(0.5, 0.999999));
  };

  auto* poly = app.add_subcommand("poly", "Chromatic polynomial");
  graph_opts(poly);
  format_opt(poly);

  auto* zeta = app.add_subcommand("zeta", "Inverse chromatic zeta function (limiting H-visibility probability)");
  graph_opts(zeta);
  format_opt(zeta);
  euler_opts(zeta);
  zeta->add_option("--s", cfg.s_real, "Exponent s > 1");
  zeta->add_option("--given-family", cfg.given_family, "Condition on this subgraph (family label)");
  zeta->add_option("--given-file", cfg.given_file, "Condition on this subgraph (edge-list file)");

  auto* closed = app.add_subcommand("closed-form", "Cycle limit via the closed-form product");
  format_opt(closed);
  euler_opts(closed);
  closed->add_option("--k", cfg.cycle_k, "Cycle length k >= 3")->required();
  closed->add_option("--s", cfg.s_real, "Exponent s > 1");

  auto* rearick = app.add_subcommand("rearick", "prod_p (1 - m / p^s)");
  format_opt(rearick);
  euler_opts(rearick);
  rearick->add_option("--m", cfg.m, "m >= 1")->required();
  rearick->add_option("--s", cfg.s, "Integer s >= 2");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of the H-visibility probability");
  graph_opts(simulate);
  format_opt(simulate);
  sim_opts(simulate);
  simulate->add_option("--n", cfg.n, "Box side")->required();
  simulate->add_option("--s", cfg.s, "Dimension s >= 2");
  simulate->add_option("--given-family", cfg.given_family, "Condition on this subgraph (family label)");
  simulate->add_option("--given-file", cfg.given_file, "Condition on this subgraph (edge-list file)");

  auto* sweep = app.add_subcommand("sweep", "Monte Carlo estimates over several box sizes");
  graph_opts(sweep);
  format_opt(sweep);
  sim_opts(sweep);
  sweep->add_option("--n", cfg.n_list, "Comma-separated ascending box sides")->required();
  sweep->add_option("--s", cfg.s, "Dimension s >= 2");
  sweep->add_option("--target-tail", cfg.target_tail, "Tail target for the limit")->check(CLI::PositiveNumber);
  sweep->add_option("--max-prime", cfg.max_prime, "Prime sieve cap");

  auto* enumerate = app.add_subcommand("enumerate", "Exact H-visibility probability in [1, n]^s");
  graph_opts(enumerate);
  format_opt(enumerate);
  enumerate->add_option("--n", cfg.n, "Box side")->required();
  enumerate->add_option("--s", cfg.s, "Dimension s >= 1");
  enumerate->add_option("--budget", cfg.budget, "Enumeration budget");

  auto* residues = app.add_subcommand("residues", "Count H_p-visible residue tuples");
  graph_opts(residues);
  format_opt(residues);
  residues->add_option("--p", cfg.p, "Prime p")->required();
  residues->add_option("--s", cfg.s, "Dimension s >= 1");
  residues->add_option("--budget", cfg.budget, "Enumeration budget");

  auto* selftest = app.add_subcommand("selftest", "Run the embedded invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  try {
    if (poly->parsed()) return cmd_poly(cfg);
    if (zeta->parsed()) return cmd_zeta(cfg);
    if (closed->parsed()) return cmd_closed_form(cfg);
    if (rearick->parsed()) return cmd_rearick(cfg);
    if (simulate->parsed()) return cmd_simulate(cfg);
    if (sweep->parsed()) return cmd_sweep(cfg);
    if (enumerate->parsed()) return cmd_enumerate(cfg);
    if (residues->parsed()) return cmd_residues(cfg);
    if (selftest->parsed()) return cmd_selftest();
  } catch (const cz::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const cz::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const cz::InvariantError& e) {
    std::cerr << "invariant failure: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
