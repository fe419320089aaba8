#include "hyperlag/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "combinatorics.hpp"

namespace hyperlag::theorems {
namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Ceiling that ignores rounding noise just above an integer.
int robust_ceil(double v) { return static_cast<int>(std::ceil(v - 1e-12)); }

void require_t(int t) {
  if (t < 1) throw TheoremError("clique order t must be at least 1, got " + std::to_string(t));
}

double required_alpha(const AlphaParams& alpha, int r, const std::string& context) {
  auto v = alpha.get(r);
  if (!v) {
    throw TheoremError(context + " needs a coefficient for level " + std::to_string(r) +
                       " (use --alpha " + std::to_string(r) + "=value)");
  }
  return *v;
}

std::string format_value(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

double ms_value(int t) {
  require_t(t);
  return 0.5 * (1.0 - 1.0 / t);
}

double th2_value(double alpha2, int t) {
  require_t(t);
  return 1.0 + alpha2 / 2.0 - alpha2 / (2.0 * t);
}

bool th2_hypothesis(double alpha2, int t) { return t >= 1 && t >= alpha2; }

double th1r_value(double alpha_r, int r, int t) {
  if (r < 2) throw TheoremError("level r must be at least 2, got " + std::to_string(r));
  require_t(t);
  double product = 1.0;
  for (int i = 1; i <= r - 1; ++i) product *= static_cast<double>(t - i);
  return 1.0 + alpha_r * product / (factorial(r) * std::pow(static_cast<double>(t), r - 1));
}

CliqueThreshold th1r_threshold(double alpha_r, int r) {
  if (r < 2) throw TheoremError("level r must be at least 2, got " + std::to_string(r));
  const double base = factorial(r - 2);
  if (alpha_r <= base) return {1, true};
  const double bound =
      std::pow(alpha_r - base, r - 2) / (base * std::pow(alpha_r, r - 3));
  return {std::max(1, robust_ceil(bound)), false};
}

bool th1r_hypothesis(double alpha_r, int r, int t) {
  return t >= 1 && t >= th1r_threshold(alpha_r, r).min_t;
}

double th123_value(double alpha2, double alpha3, int t) {
  require_t(t);
  const double td = t;
  return 1.0 + alpha2 * (td - 1.0) / (2.0 * td) +
         alpha3 * (td - 1.0) * (td - 2.0) / (6.0 * td * td);
}

int th123_threshold(double alpha2, double alpha3) {
  const double s = alpha2 + alpha3;
  if (s <= 0.0) return 1;
  return std::max(1, robust_ceil((s * s - alpha3) / s));
}

bool th123_hypothesis(double alpha2, double alpha3, int t) {
  return t >= 1 && t >= th123_threshold(alpha2, alpha3);
}

double complete_uniform_value(const EdgeTypeSet& types, const AlphaParams& alpha, int t) {
  require_t(t);
  double total = 0.0;
  for (int r : types) {
    const double coef =
        r == types.min() ? alpha.get(r).value_or(1.0) : required_alpha(alpha, r, "complete value");
    total += coef * static_cast<double>(detail::binomial(t, r)) / std::pow(t, r);
  }
  return total;
}

double level_one_budget(const EdgeTypeSet& types, const AlphaParams& alpha) {
  double total = 0.0;
  for (int r : types) {
    if (r < 2) continue;
    total += required_alpha(alpha, r, "level-1 budget") / factorial(r - 1);
  }
  return total;
}

Level1Reduction reduce_level1(const Hypergraph& h, const AlphaParams& alpha) {
  if (!h.has_level(1)) throw TheoremError("level-1 reduction needs level-1 edges");
  Level1Reduction out;
  out.budget = level_one_budget(EdgeTypeSet(h.edge_types()), alpha);
  out.hypothesis_ok = out.budget <= 1.0 + 1e-12;

  VertexSet v1;
  for (const Edge& e : h.level(1)) v1.push_back(e.front());
  const InducedSubgraph on_v1 = induced(h, v1);
  const VertexSet isolated = isolated_vertices(on_v1.graph);
  VertexSet keep;
  for (Vertex local = 1; local <= on_v1.graph.n(); ++local) {
    if (!std::binary_search(isolated.begin(), isolated.end(), local)) {
      keep.push_back(on_v1.relabel[local - 1]);
    }
  }
  if (keep.empty()) {
    out.unit_value = true;
  } else {
    out.reduced = induced(h, keep);
  }
  return out;
}

MWindow colex_window(const EdgeTypeSet& types, int t) {
  MWindow w;
  for (int r : types) {
    w.lo += detail::binomial(t, r);
    w.hi += detail::binomial(t, r) + detail::binomial(t - 1, r - 1);
  }
  return w;
}

bool colex_range_equal(const EdgeTypeSet& types, int t, std::int64_t m) {
  if (types.contains(1)) throw TheoremError("colex window applies to types without level 1");
  require_t(t);
  const MWindow w = colex_window(types, t);
  if (!w.contains(m)) {
    throw TheoremError("m = " + std::to_string(m) + " lies outside [" + std::to_string(w.lo) +
                       ", " + std::to_string(w.hi) + "] for t = " + std::to_string(t));
  }
  return true;
}

std::int64_t connection_floor(const EdgeTypeSet& q, int t) {
  std::int64_t f = t;
  for (int r : q) f += detail::binomial(t, r);
  return f;
}

int connection_t(const EdgeTypeSet& q, std::int64_t m) {
  if (m < 1) throw TheoremError("edge count m must be positive");
  int t = 0;
  while (connection_floor(q, t + 1) < m) ++t;
  return t;
}

namespace {

EdgeTypeSet split_level_one(const EdgeTypeSet& types) {
  if (!types.contains(1)) throw TheoremError("level-1 connection needs 1 in the type set");
  EdgeTypeSet q = types.without(1);
  if (q.empty()) throw TheoremError("level-1 connection needs a level above 1");
  return q;
}

// Q-part value of the connection; zero when no Q edges remain.
double q_part_value(const EdgeTypeSet& q, const AlphaParams& alpha, std::int64_t m_q,
                    const SolverConfig& cfg) {
  if (m_q <= 0) return 0.0;
  for (int r : q) required_alpha(alpha, r, "level-1 connection");
  return optimize(colex_first_m(q, m_q), alpha, cfg).value;
}

}  // namespace

double connection_compose(const EdgeTypeSet& types, const AlphaParams& alpha, std::int64_t m,
                          int t, const SolverConfig& cfg) {
  const EdgeTypeSet q = split_level_one(types);
  const double budget = level_one_budget(types, alpha);
  if (budget > 1.0 + 1e-12) {
    throw TheoremError("hypothesis failed: sum alpha_r/(r-1)! = " + format_value(budget) +
                       " exceeds 1");
  }
  require_t(t);
  const std::int64_t lo = connection_floor(q, t);
  const std::int64_t hi = connection_floor(q, t + 1);
  if (!(lo < m && m <= hi)) {
    throw TheoremError("hypothesis failed: " + std::to_string(lo) + " < m <= " +
                       std::to_string(hi) + " does not hold for m = " + std::to_string(m));
  }
  return 1.0 + q_part_value(q, alpha, m - t - 1, cfg);
}

TheoremId parse_theorem_id(const std::string& text) {
  static const std::pair<const char*, TheoremId> kIds[] = {
      {"ms", TheoremId::kMotzkinStraus},  {"th2", TheoremId::kTh2},
      {"th1r", TheoremId::kTh1r},         {"th123", TheoremId::kTh123},
      {"t12", TheoremId::kLevel1Reduction}, {"lemma34", TheoremId::kColexWindow},
      {"connection", TheoremId::kConnection}};
  for (const auto& [name, id] : kIds) {
    if (text == name) return id;
  }
  throw TheoremError("unknown theorem id '" + text +
                     "' (expected ms, th2, th1r, th123, t12, lemma34 or connection)");
}

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::kMotzkinStraus: return "ms";
    case TheoremId::kTh2: return "th2";
    case TheoremId::kTh1r: return "th1r";
    case TheoremId::kTh123: return "th123";
    case TheoremId::kLevel1Reduction: return "t12";
    case TheoremId::kColexWindow: return "lemma34";
    case TheoremId::kConnection: return "connection";
  }
  return "unknown";
}

namespace {

struct Evaluation {
  Optimum opt;
  std::optional<double> oracle;
};

Evaluation evaluate_graph(const Hypergraph& h, const AlphaParams& alpha,
                          const TheoremInstance& in) {
  Evaluation ev{optimize(h, alpha, in.cfg), std::nullopt};
  if (h.n() <= in.oracle_max_n) ev.oracle = exact_oracle(h, alpha, in.cfg).value;
  return ev;
}

void finish_verdict(TheoremVerdict& v, const Evaluation& ev, double check_tol) {
  v.computed = ev.opt.value;
  v.witness = ev.opt;
  v.oracle_value = ev.oracle;
  v.abs_error = std::abs(v.predicted - v.computed);
  v.holds = v.abs_error <= check_tol;
  if (ev.oracle && std::abs(*ev.oracle - v.computed) > check_tol) {
    v.holds = false;
    v.notes.push_back("solver and oracle disagree: oracle value " + format_value(*ev.oracle));
  }
  if (!ev.opt.converged) v.notes.push_back("solver did not reach the stationarity tolerance");
}

int require_param(const std::optional<int>& p, const char* name, TheoremId id) {
  if (!p) throw TheoremError(to_string(id) + " needs --" + name);
  return *p;
}

Hypergraph graph_or_complete(const TheoremInstance& in, const EdgeTypeSet& types, TheoremId id) {
  if (in.graph) return *in.graph;
  const int t = require_param(in.t, "t", id);
  std::vector<int> fitting;
  for (int r : types) {
    if (r <= t) fitting.push_back(r);
  }
  if (fitting.empty()) return Hypergraph(t, {});
  return complete(EdgeTypeSet(fitting), t);
}

bool has_types(const Hypergraph& h, const EdgeTypeSet& types) {
  return h.edge_types() == types.values();
}

void check_unit_base(const AlphaParams& alpha, TheoremVerdict& v) {
  if (auto a1 = alpha.get(1); a1 && *a1 != 1.0) {
    v.hypothesis_ok = false;
    v.notes.push_back("level-1 coefficient must be 1");
  }
}

TheoremVerdict verify_ms(const TheoremInstance& in) {
  TheoremVerdict v;
  const Hypergraph h = graph_or_complete(in, {2}, TheoremId::kMotzkinStraus);
  v.hypothesis_ok = h.empty() || has_types(h, {2});
  if (!v.hypothesis_ok) v.notes.push_back("graph is not 2-uniform");
  const int t = h.empty() ? 1 : std::max(1, max_clique_order(h, {2}));
  v.predicted = ms_value(t);
  v.notes.push_back("clique order t = " + std::to_string(t));
  finish_verdict(v, evaluate_graph(h, AlphaParams{}, in), in.check_tol);
  return v;
}

TheoremVerdict verify_th2(const TheoremInstance& in) {
  TheoremVerdict v;
  const double a2 = required_alpha(in.alpha, 2, "th2");
  const Hypergraph h = graph_or_complete(in, {1, 2}, TheoremId::kTh2);
  const int t = max_clique_order(h, {1, 2});
  v.hypothesis_ok = has_types(h, {1, 2}) && th2_hypothesis(a2, t);
  check_unit_base(in.alpha, v);
  v.notes.push_back("clique order t = " + std::to_string(t));
  v.predicted = th2_value(a2, std::max(t, 1));
  finish_verdict(v, evaluate_graph(h, in.alpha, in), in.check_tol);
  return v;
}

TheoremVerdict verify_th1r(const TheoremInstance& in) {
  TheoremVerdict v;
  int r = 0;
  if (in.r) {
    r = *in.r;
  } else if (in.graph && in.graph->edge_types().size() == 2) {
    r = in.graph->edge_types().back();
  } else {
    throw TheoremError("th1r needs --r");
  }
  if (r < 2) throw TheoremError("th1r needs r >= 2");
  const double ar = required_alpha(in.alpha, r, "th1r");
  const Hypergraph h = graph_or_complete(in, {1, r}, TheoremId::kTh1r);
  const int t = max_clique_order(h, {1, r});
  const int t1 = max_clique_order(h, {1});
  const CliqueThreshold th = th1r_threshold(ar, r);
  v.hypothesis_ok = has_types(h, {1, r}) && t == t1 && t >= th.min_t;
  check_unit_base(in.alpha, v);
  v.notes.push_back("clique order t = " + std::to_string(t) + ", threshold " +
                    std::to_string(th.min_t));
  if (th.small_coefficient_regime) {
    v.notes.push_back("coefficient at most (r-2)!: threshold taken as 1");
  }
  if (t != t1) v.notes.push_back("level-1 clique order differs: " + std::to_string(t1));
  v.predicted = th1r_value(ar, r, std::max(t, 1));
  finish_verdict(v, evaluate_graph(h, in.alpha, in), in.check_tol);
  return v;
}

TheoremVerdict verify_th123(const TheoremInstance& in) {
  TheoremVerdict v;
  const double a2 = required_alpha(in.alpha, 2, "th123");
  const double a3 = required_alpha(in.alpha, 3, "th123");
  const Hypergraph h = graph_or_complete(in, {1, 2, 3}, TheoremId::kTh123);
  const int t = max_clique_order(h, {1, 2, 3});
  const int t1 = max_clique_order(h, {1});
  const int threshold = th123_threshold(a2, a3);
  v.hypothesis_ok = has_types(h, {1, 2, 3}) && t == t1 && t >= threshold && a2 + a3 > 0.0;
  check_unit_base(in.alpha, v);
  v.notes.push_back("clique order t = " + std::to_string(t) + ", threshold " +
                    std::to_string(threshold));
  if (t != t1) v.notes.push_back("level-1 clique order differs: " + std::to_string(t1));
  v.predicted = th123_value(a2, a3, std::max(t, 1));
  finish_verdict(v, evaluate_graph(h, in.alpha, in), in.check_tol);
  return v;
}

TheoremVerdict verify_t12(const TheoremInstance& in) {
  if (!in.graph) throw TheoremError("t12 needs an input hypergraph");
  TheoremVerdict v;
  const Level1Reduction red = reduce_level1(*in.graph, in.alpha);
  v.hypothesis_ok = red.hypothesis_ok;
  v.notes.push_back("coefficient budget " + format_value(red.budget));
  if (red.unit_value) {
    v.predicted = 1.0;
    v.notes.push_back("every level-1 vertex is isolated");
  } else {
    const Evaluation reduced = evaluate_graph(red.reduced->graph, in.alpha, in);
    v.predicted = reduced.oracle ? std::max(reduced.opt.value, *reduced.oracle) : reduced.opt.value;
    v.notes.push_back("reduced to " + std::to_string(red.reduced->graph.n()) + " vertices");
  }
  finish_verdict(v, evaluate_graph(*in.graph, in.alpha, in), in.check_tol);
  return v;
}

TheoremVerdict verify_lemma34(const TheoremInstance& in) {
  if (!in.types) throw TheoremError("lemma34 needs --type");
  if (!in.m) throw TheoremError("lemma34 needs --m");
  const EdgeTypeSet& types = *in.types;
  if (types.contains(1)) throw TheoremError("lemma34 applies to types without level 1");
  const int t = require_param(in.t, "t", TheoremId::kColexWindow);
  TheoremVerdict v;
  const MWindow w = colex_window(types, t);
  v.hypothesis_ok = w.contains(*in.m);
  if (!v.hypothesis_ok) {
    v.notes.push_back("m outside [" + std::to_string(w.lo) + ", " + std::to_string(w.hi) + "]");
  }
  v.predicted = complete_uniform_value(types, in.alpha, t);
  finish_verdict(v, evaluate_graph(colex_first_m(types, *in.m), in.alpha, in), in.check_tol);
  return v;
}

TheoremVerdict verify_connection_compose(const TheoremInstance& in) {
  if (!in.types) throw TheoremError("connection needs --type");
  if (!in.m) throw TheoremError("connection needs --m");
  const EdgeTypeSet& types = *in.types;
  const EdgeTypeSet q = split_level_one(types);
  const std::int64_t m = *in.m;
  const int t = in.t ? *in.t : connection_t(q, m);
  TheoremVerdict v;
  const double budget = level_one_budget(types, in.alpha);
  const bool budget_ok = budget <= 1.0 + 1e-12;
  const bool range_ok = t >= 1 && connection_floor(q, t) < m && m <= connection_floor(q, t + 1);
  v.hypothesis_ok = budget_ok && range_ok;
  v.notes.push_back("t = " + std::to_string(t) + ", coefficient budget " + format_value(budget));
  if (!budget_ok) v.notes.push_back("sum alpha_r/(r-1)! exceeds 1");
  if (!range_ok) v.notes.push_back("m outside the range for t");
  v.notes.push_back("coefficients aligned by edge cardinality for the upper levels");
  v.predicted = 1.0 + q_part_value(q, in.alpha, m - t - 1, in.cfg);
  finish_verdict(v, evaluate_graph(colex_first_m(types, m), in.alpha, in), in.check_tol);
  return v;
}

}  // namespace

TheoremVerdict verify_theorem(TheoremId id, const TheoremInstance& instance) {
  TheoremVerdict v;
  switch (id) {
    case TheoremId::kMotzkinStraus: v = verify_ms(instance); break;
    case TheoremId::kTh2: v = verify_th2(instance); break;
    case TheoremId::kTh1r: v = verify_th1r(instance); break;
    case TheoremId::kTh123: v = verify_th123(instance); break;
    case TheoremId::kLevel1Reduction: v = verify_t12(instance); break;
    case TheoremId::kColexWindow: v = verify_lemma34(instance); break;
    case TheoremId::kConnection: v = verify_connection_compose(instance); break;
  }
  v.theorem_id = to_string(id);
  return v;
}

TheoremVerdict verify_theorem(const std::string& id, const TheoremInstance& instance) {
  return verify_theorem(parse_theorem_id(id), instance);
}

}  // namespace hyperlag::theorems
