#include "hyperlag/cli.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperlag/conjecture_lab.hpp"
#include "hyperlag/hypergraph.hpp"
#include "hyperlag/io.hpp"
#include "hyperlag/lagrangian.hpp"
#include "hyperlag/theorems.hpp"

namespace hyperlag::cli {
namespace {

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string input_path;
  std::vector<std::string> alpha;
  double tol = SolverConfig{}.tol;
  std::uint64_t seed = SolverConfig{}.seed;
  int starts = SolverConfig{}.starts;
  int max_iters = SolverConfig{}.max_iters;
  int threads = 1;
  std::string format = "text";

  std::string types;
  std::int64_t m = 0;
  int n = 0;
  int t = 0;
  int r = 0;
  std::string theorem;
  double check_tol = 1e-7;
  std::uint64_t max_graphs = 1'000'000;
  bool minimize_support = false;
};

AlphaParams parse_alpha(const std::vector<std::string>& specs) {
  AlphaParams alpha;
  for (const std::string& spec : specs) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) throw InputError("--alpha expects r=value, got '" + spec + "'");
    int r = 0;
    const std::string level = spec.substr(0, eq);
    auto [ptr, ec] = std::from_chars(level.data(), level.data() + level.size(), r);
    if (ec != std::errc() || ptr != level.data() + level.size() || r < 1) {
      throw InputError("--alpha level must be a positive integer, got '" + level + "'");
    }
    double value = 0.0;
    try {
      std::size_t used = 0;
      value = std::stod(spec.substr(eq + 1), &used);
      if (used != spec.size() - eq - 1) throw std::invalid_argument("trailing text");
    } catch (const std::exception&) {
      throw InputError("--alpha value for level " + level + " is not a number");
    }
    if (alpha.get(r)) throw InputError("--alpha given twice for level " + level);
    alpha.set(r, value);
  }
  return alpha;
}

SolverConfig solver_config(const RunConfig& cfg) {
  SolverConfig s;
  s.tol = cfg.tol;
  s.seed = cfg.seed;
  s.starts = cfg.starts;
  s.max_iters = cfg.max_iters;
  s.threads = cfg.threads;
  return s;
}

// Every level present in `h` needs a coefficient (base level defaults to 1).
void check_alpha_covers(const Hypergraph& h, const AlphaParams& alpha) {
  for (int r : h.edge_types()) alpha.for_level(h, r);
}

std::string join(const std::vector<int>& values, const char* sep = " ") {
  std::string s;
  for (std::size_t k = 0; k < values.size(); ++k) s += (k ? sep : "") + std::to_string(values[k]);
  return s;
}

std::string join_reals(const std::vector<double>& values) {
  std::string s;
  for (std::size_t k = 0; k < values.size(); ++k) s += (k ? " " : "") + io::format_real(values[k]);
  return s;
}

void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

nlohmann::json graph_json(const Hypergraph& h) {
  return {{"vertices", h.n()}, {"edges", h.edges()}};
}

void print_optimum(std::ostream& out, const Optimum& opt) {
  out << "value " << io::format_real(opt.value) << '\n'
      << "weighting " << join_reals(opt.weighting.values()) << '\n'
      << "support " << join(opt.support) << '\n'
      << "kkt_residual " << io::format_real(opt.kkt_residual) << '\n'
      << "converged " << (opt.converged ? "true" : "false") << '\n';
}

int cmd_lagrangian(const RunConfig& cfg, std::ostream& out) {
  const Hypergraph h = io::load_hypergraph(cfg.input_path);
  const AlphaParams alpha = parse_alpha(cfg.alpha);
  check_alpha_covers(h, alpha);
  const SolverConfig solver = solver_config(cfg);
  Optimum opt = optimize(h, alpha, solver);
  if (cfg.minimize_support) opt = support_minimize(h, alpha, opt, solver);
  if (cfg.format == "json") {
    print_json(out, io::to_json(opt));
  } else {
    print_optimum(out, opt);
  }
  return opt.converged ? kOk : kNotConverged;
}

int cmd_colex(const RunConfig& cfg, std::ostream& out) {
  if (cfg.m < 1) throw InputError("--m must be at least 1");
  const Hypergraph h = colex_first_m(EdgeTypeSet::parse(cfg.types), cfg.m);
  if (cfg.format == "json") {
    print_json(out, graph_json(h));
  } else {
    io::write_hypergraph(out, h);
  }
  return kOk;
}

int cmd_compress(const RunConfig& cfg, std::ostream& out) {
  const Hypergraph h = io::load_hypergraph(cfg.input_path);
  const Hypergraph c = left_compress_fixpoint(h);
  bool unchanged = true;
  std::string counts;
  for (int r : h.edge_types()) {
    unchanged = unchanged && h.edge_count(r) == c.edge_count(r);
    counts += (counts.empty() ? "" : " ") + std::to_string(r) + ":" + std::to_string(c.edge_count(r));
  }
  if (cfg.format == "json") {
    nlohmann::json j = graph_json(c);
    j["level_counts_unchanged"] = unchanged;
    print_json(out, j);
  } else {
    out << "# level edge counts " << counts << (unchanged ? " (unchanged)" : " (CHANGED)") << '\n';
    io::write_hypergraph(out, c);
  }
  return kOk;
}

void print_verdict(std::ostream& out, const TheoremVerdict& v) {
  out << "theorem " << v.theorem_id << '\n'
      << "hypothesis_ok " << (v.hypothesis_ok ? "true" : "false") << '\n'
      << "predicted " << io::format_real(v.predicted) << '\n'
      << "computed " << io::format_real(v.computed) << '\n'
      << "abs_error " << io::format_real(v.abs_error) << '\n';
  if (v.oracle_value) out << "oracle_value " << io::format_real(*v.oracle_value) << '\n';
  for (const std::string& note : v.notes) out << "note " << note << '\n';
  out << "result " << (v.passed() ? "pass" : "fail") << '\n';
}

int verdict_exit(const TheoremVerdict& v) {
  if (v.passed()) return kOk;
  return v.hypothesis_ok ? kNotConverged : kInputError;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const theorems::TheoremId id = theorems::parse_theorem_id(cfg.theorem);
  theorems::TheoremInstance in;
  in.alpha = parse_alpha(cfg.alpha);
  in.cfg = solver_config(cfg);
  in.check_tol = cfg.check_tol;
  if (!cfg.input_path.empty()) in.graph = io::load_hypergraph(cfg.input_path);
  if (!cfg.types.empty()) in.types = EdgeTypeSet::parse(cfg.types);
  if (cfg.t > 0) in.t = cfg.t;
  if (cfg.r > 0) in.r = cfg.r;
  if (cfg.m > 0) in.m = cfg.m;

  TheoremVerdict v;
  if (id == theorems::TheoremId::kConnection && cfg.n > 0) {
    if (!in.types || !in.m) throw InputError("connection scan needs --type and --m");
    ScanOptions opts;
    opts.cfg = in.cfg;
    opts.tol = cfg.check_tol;
    opts.max_graphs = cfg.max_graphs;
    v = verify_connection(*in.types, in.alpha, *in.m, cfg.n, opts);
  } else {
    v = theorems::verify_theorem(id, in);
  }
  if (cfg.format == "json") {
    print_json(out, io::to_json(v));
  } else {
    print_verdict(out, v);
  }
  return verdict_exit(v);
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
  const EdgeTypeSet types = EdgeTypeSet::parse(cfg.types);
  if (cfg.m < 1) throw InputError("--m must be at least 1");
  const int n = cfg.n > 0 ? cfg.n : default_vertex_bound(types, cfg.m);
  ScanOptions opts;
  opts.cfg = solver_config(cfg);
  opts.max_graphs = cfg.max_graphs;
  opts.tol = cfg.check_tol;
  const ScanReport report = scan(types, parse_alpha(cfg.alpha), cfg.m, n, opts);
  if (cfg.format == "json") {
    print_json(out, io::to_json(report));
  } else {
    out << "T " << types.to_string() << '\n'
        << "m " << report.m << '\n'
        << "n " << report.n << '\n'
        << "enumerated_count " << report.enumerated_count << '\n'
        << "complete " << (report.complete ? "true" : "false") << '\n'
        << "extremal_value " << io::format_real(report.extremal_value) << '\n'
        << "colex_value " << io::format_real(report.colex_value) << '\n'
        << "colex_in_family " << (report.colex_in_family ? "true" : "false") << '\n'
        << "conjecture_holds " << (report.conjecture_holds ? "true" : "false") << '\n';
    for (std::size_t k = 0; k < report.witnesses.size(); ++k) {
      out << "# witness " << k + 1 << '\n';
      io::write_hypergraph(out, report.witnesses[k]);
    }
  }
  if (!report.complete) return kIncompleteScan;
  return report.conjecture_holds ? kOk : kNotConverged;
}

void add_solver_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--alpha", cfg.alpha, "Level coefficient r=value (repeatable)");
  sub->add_option("--tol", cfg.tol, "Stationarity tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--seed", cfg.seed, "Seed for random starts");
  sub->add_option("--starts", cfg.starts, "Random starts")->check(CLI::NonNegativeNumber);
  sub->add_option("--max-iters", cfg.max_iters, "Ascent iterations per start")
      ->check(CLI::PositiveNumber);
  sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Lagrangians of non-uniform hypergraphs", "hyperlag"};
  app.require_subcommand(1);

  CLI::App* lagrangian = app.add_subcommand("lagrangian", "Maximize L over the simplex");
  add_solver_flags(lagrangian, cfg);
  lagrangian->add_option("input", cfg.input_path, "Hypergraph file")->required();
  lagrangian->add_flag("--minimize-support", cfg.minimize_support,
                       "Shrink the support of the reported optimum");

  CLI::App* colex = app.add_subcommand("colex", "Print C_{m,T}");
  colex->add_option("--type", cfg.types, "Edge types, e.g. 1,3")->required();
  colex->add_option("--m", cfg.m, "Edge count")->required();
  colex->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* compress = app.add_subcommand("compress", "Left-compress until stable");
  compress->add_option("input", cfg.input_path, "Hypergraph file")->required();
  compress->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* verify = app.add_subcommand("verify", "Check a closed-form value against the solver");
  add_solver_flags(verify, cfg);
  verify->add_option("--theorem", cfg.theorem, "ms, th2, th1r, th123, t12, lemma34, connection")
      ->required();
  verify->add_option("input", cfg.input_path, "Hypergraph file");
  verify->add_option("--type", cfg.types, "Edge types");
  verify->add_option("--t", cfg.t, "Clique order")->check(CLI::PositiveNumber);
  verify->add_option("--r", cfg.r, "Upper level")->check(CLI::PositiveNumber);
  verify->add_option("--m", cfg.m, "Edge count")->check(CLI::PositiveNumber);
  verify->add_option("--n", cfg.n, "Vertex bound (connection scan)")->check(CLI::PositiveNumber);
  verify->add_option("--check-tol", cfg.check_tol, "Pass tolerance on abs_error")
      ->check(CLI::PositiveNumber);
  verify->add_option("--max-graphs", cfg.max_graphs, "Scan guard");

  CLI::App* scan_cmd = app.add_subcommand("scan", "Scan left-compressed graphs against C_{m,T}");
  add_solver_flags(scan_cmd, cfg);
  scan_cmd->add_option("--type", cfg.types, "Edge types")->required();
  scan_cmd->add_option("--m", cfg.m, "Edge count")->required();
  scan_cmd->add_option("--n", cfg.n, "Vertex bound")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--check-tol", cfg.check_tol, "Comparison tolerance")
      ->check(CLI::PositiveNumber);
  scan_cmd->add_option("--max-graphs", cfg.max_graphs, "Enumeration guard");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (lagrangian->parsed()) return cmd_lagrangian(cfg, out);
    if (colex->parsed()) return cmd_colex(cfg, out);
    if (compress->parsed()) return cmd_compress(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (scan_cmd->parsed()) return cmd_scan(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace hyperlag::cli
