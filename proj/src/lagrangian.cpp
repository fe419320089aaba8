#include "hyperlag/lagrangian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "objective.hpp"

namespace hyperlag {

// ---------------------------------------------------------------------------
// AlphaParams / Weighting

AlphaParams::AlphaParams(std::initializer_list<std::pair<const int, double>> values) {
  for (const auto& [r, v] : values) set(r, v);
}

void AlphaParams::set(int r, double value) {
  if (r < 1) throw LagrangianError("alpha: level must be positive");
  if (!std::isfinite(value) || value < 0.0) {
    throw LagrangianError("alpha: coefficients must be finite and nonnegative");
  }
  values_[r] = value;
}

std::optional<double> AlphaParams::get(int r) const {
  auto it = values_.find(r);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

double AlphaParams::for_level(const Hypergraph& h, int r) const {
  if (auto v = get(r)) return *v;
  if (!h.empty() && h.levels().begin()->first == r) return 1.0;
  throw LagrangianError("alpha: no coefficient for level " + std::to_string(r));
}

double AlphaParams::level_one_budget(const std::vector<int>& levels) const {
  double total = 0.0;
  for (int r : levels) {
    if (r < 2) continue;
    double factorial = 1.0;
    for (int k = 2; k <= r - 1; ++k) factorial *= k;
    total += get(r).value_or(0.0) / factorial;
  }
  return total;
}

Weighting::Weighting(std::vector<double> x) : x_(std::move(x)) {
  double sum = 0.0;
  for (double v : x_) {
    if (!std::isfinite(v) || v < 0.0) throw LagrangianError("weighting: entries must be >= 0");
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw LagrangianError("weighting: entries must sum to 1");
  }
}

VertexSet Weighting::support(double threshold) const {
  VertexSet out;
  for (std::size_t k = 0; k < x_.size(); ++k) {
    if (x_[k] > threshold) out.push_back(static_cast<Vertex>(k) + 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Objective

namespace detail {

Objective::Objective(const Hypergraph& h, const AlphaParams& alpha)
    : n_(h.n()), together_(static_cast<std::size_t>(h.n()), std::vector<bool>(h.n(), false)) {
  offset_.push_back(0);
  for (const auto& [r, list] : h.levels()) {
    const double c = alpha.for_level(h, r);
    for (const auto& e : list) {
      for (std::size_t a = 0; a < e.size(); ++a) {
        for (std::size_t b = a + 1; b < e.size(); ++b) {
          together_[e[a] - 1][e[b] - 1] = true;
          together_[e[b] - 1][e[a] - 1] = true;
        }
      }
      if (c == 0.0) continue;
      coef_.push_back(c);
      for (Vertex v : e) vars_.push_back(v - 1);
      offset_.push_back(vars_.size());
    }
  }
}

double Objective::value(std::span<const double> x) const {
  double total = 0.0;
  for (std::size_t t = 0; t < coef_.size(); ++t) {
    double p = coef_[t];
    for (std::size_t k = offset_[t]; k < offset_[t + 1]; ++k) p *= x[vars_[k]];
    total += p;
  }
  return total;
}

void Objective::gradient(std::span<const double> x, std::vector<double>& g) const {
  g.assign(static_cast<std::size_t>(n_), 0.0);
  for (std::size_t t = 0; t < coef_.size(); ++t) {
    const std::size_t lo = offset_[t];
    const std::size_t hi = offset_[t + 1];
    for (std::size_t k = lo; k < hi; ++k) {
      double p = coef_[t];
      for (std::size_t s = lo; s < hi; ++s) {
        if (s != k) p *= x[vars_[s]];
      }
      g[vars_[k]] += p;
    }
  }
}

Eigen::MatrixXd Objective::hessian(std::span<const double> x, const std::vector<int>& idx) const {
  std::vector<int> pos(static_cast<std::size_t>(n_), -1);
  for (std::size_t k = 0; k < idx.size(); ++k) pos[idx[k]] = static_cast<int>(k);
  const auto m = static_cast<Eigen::Index>(idx.size());
  Eigen::MatrixXd hess = Eigen::MatrixXd::Zero(m, m);
  for (std::size_t t = 0; t < coef_.size(); ++t) {
    const std::size_t lo = offset_[t];
    const std::size_t hi = offset_[t + 1];
    for (std::size_t a = lo; a < hi; ++a) {
      const int pa = pos[vars_[a]];
      if (pa < 0) continue;
      for (std::size_t b = a + 1; b < hi; ++b) {
        const int pb = pos[vars_[b]];
        if (pb < 0) continue;
        double p = coef_[t];
        for (std::size_t s = lo; s < hi; ++s) {
          if (s != a && s != b) p *= x[vars_[s]];
        }
        hess(pa, pb) += p;
        hess(pb, pa) += p;
      }
    }
  }
  return hess;
}

bool Objective::covers(int a, int b) const { return together_[a][b]; }

void project_active(std::vector<double>& v, const std::vector<bool>& active) {
  std::vector<double> u;
  u.reserve(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (active[k]) u.push_back(v[k]);
  }
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0.0;
  double tau = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    cumulative += u[k];
    const double candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (u[k] - candidate > 0.0) tau = candidate;
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    v[k] = active[k] ? std::max(v[k] - tau, 0.0) : 0.0;
    sum += v[k];
  }
  for (double& value : v) value /= sum;
}

double stationarity_measure(const Objective& f, const std::vector<double>& x,
                            const std::vector<bool>& active) {
  std::vector<double> g;
  f.gradient(x, g);
  std::vector<double> y(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) y[k] = x[k] + g[k];
  project_active(y, active);
  double worst = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) worst = std::max(worst, std::abs(y[k] - x[k]));
  return worst;
}

namespace {

// Projected-gradient ascent with an Armijo backtracking search along the
// projection arc. Returns the final stationarity measure.
double ascend(const Objective& f, std::vector<double>& x, const std::vector<bool>& active,
              double tol, int max_iters) {
  std::vector<double> g;
  std::vector<double> y(x.size());
  std::vector<double> trial(x.size());
  double fx = f.value(x);
  double step = 1.0;
  double measure = 0.0;
  for (int it = 0; it < max_iters; ++it) {
    f.gradient(x, g);
    for (std::size_t k = 0; k < x.size(); ++k) y[k] = x[k] + g[k];
    project_active(y, active);
    measure = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) measure = std::max(measure, std::abs(y[k] - x[k]));
    if (measure <= tol) return measure;

    bool accepted = false;
    double s = step;
    double f_trial = fx;
    for (int ls = 0; ls < 80; ++ls) {
      for (std::size_t k = 0; k < x.size(); ++k) trial[k] = x[k] + s * g[k];
      project_active(trial, active);
      double ascent = 0.0;
      for (std::size_t k = 0; k < x.size(); ++k) ascent += g[k] * (trial[k] - x[k]);
      f_trial = f.value(trial);
      if (ascent > 0.0 && f_trial >= fx + 1e-4 * ascent) {
        accepted = true;
        break;
      }
      s *= 0.5;
    }
    if (!accepted) return measure;
    x.swap(trial);
    fx = f_trial;
    step = std::min(2.0 * s, 1e8);
  }
  return measure;
}

void renormalize(std::vector<double>& x) {
  double sum = 0.0;
  for (double& v : x) {
    v = std::max(v, 0.0);
    sum += v;
  }
  for (double& v : x) v /= sum;
}

}  // namespace

std::vector<double> newton_polish(const Objective& f, std::vector<double> x,
                                  double support_threshold) {
  std::vector<int> idx;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] > support_threshold) {
      idx.push_back(static_cast<int>(k));
    } else {
      x[k] = 0.0;
    }
  }
  renormalize(x);
  const auto m = static_cast<Eigen::Index>(idx.size());
  if (m <= 1) return x;

  std::vector<double> g;
  auto residual = [&](const std::vector<double>& point, double mu, Eigen::VectorXd& out) {
    f.gradient(point, g);
    out.resize(m + 1);
    double sum = 0.0;
    for (Eigen::Index k = 0; k < m; ++k) {
      out(k) = g[idx[k]] - mu;
      sum += point[idx[k]];
    }
    out(m) = sum - 1.0;
    return out.lpNorm<Eigen::Infinity>();
  };

  f.gradient(x, g);
  double mu = 0.0;
  for (int i : idx) mu += x[i] * g[i];
  Eigen::VectorXd res;
  double norm = residual(x, mu, res);
  double fx = f.value(x);
  std::vector<double> trial(x.size());

  for (int it = 0; it < 60 && norm > 1e-16; ++it) {
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(m + 1, m + 1);
    jac.topLeftCorner(m, m) = f.hessian(x, idx);
    jac.block(0, m, m, 1).setConstant(-1.0);
    jac.block(m, 0, 1, m).setConstant(1.0);
    const Eigen::VectorXd delta = jac.completeOrthogonalDecomposition().solve(-res);
    if (!delta.allFinite()) break;

    bool accepted = false;
    double t = 1.0;
    Eigen::VectorXd trial_res;
    for (int ls = 0; ls < 40; ++ls, t *= 0.5) {
      trial = x;
      bool feasible = true;
      for (Eigen::Index k = 0; k < m; ++k) {
        trial[idx[k]] = x[idx[k]] + t * delta(k);
        feasible = feasible && trial[idx[k]] > 0.0;
      }
      if (!feasible) continue;
      const double trial_mu = mu + t * delta(m);
      const double trial_norm = residual(trial, trial_mu, trial_res);
      const double f_trial = f.value(trial);
      if (trial_norm < norm && f_trial >= fx - 1e-14 * (1.0 + std::abs(fx))) {
        x = trial;
        mu = trial_mu;
        norm = trial_norm;
        res = trial_res;
        fx = f_trial;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }
  renormalize(x);
  return x;
}

LocalResult local_solve(const Objective& f, std::vector<double> x0,
                        const std::vector<bool>& active, const SolverConfig& cfg) {
  project_active(x0, active);
  const int budget = std::max(cfg.max_iters, 1);
  const double coarse = std::max(cfg.tol, 1e-8);

  LocalResult best;
  best.x = x0;
  best.value = f.value(x0);

  std::vector<double> x = std::move(x0);
  ascend(f, x, active, coarse, budget);
  for (int round = 0; round < 6; ++round) {
    std::vector<double> polished = newton_polish(f, x, cfg.support_threshold);
    const double f_polished = f.value(polished);
    const double f_raw = f.value(x);
    if (f_polished >= f_raw - 1e-13 * (1.0 + std::abs(f_raw))) x = std::move(polished);
    const double measure = stationarity_measure(f, x, active);
    const double value = f.value(x);
    if (value >= best.value || measure <= cfg.tol) {
      best.x = x;
      best.value = value;
      best.measure = measure;
      best.converged = measure <= cfg.tol;
    }
    if (measure <= cfg.tol) break;
    ascend(f, x, active, cfg.tol, budget);
  }
  return best;
}

bool better_candidate(const LocalResult& a, const LocalResult& b, const SolverConfig& cfg) {
  if (a.value > b.value + cfg.value_tol) return true;
  if (b.value > a.value + cfg.value_tol) return false;
  auto support_size = [&](const std::vector<double>& x) {
    return std::count_if(x.begin(), x.end(), [&](double v) { return v > cfg.support_threshold; });
  };
  const auto sa = support_size(a.x);
  const auto sb = support_size(b.x);
  if (sa != sb) return sa < sb;
  return std::lexicographical_compare(b.x.begin(), b.x.end(), a.x.begin(), a.x.end());
}

Optimum finish(const Hypergraph& h, const AlphaParams& alpha, const LocalResult& best,
               int starts_used, const SolverConfig& cfg) {
  std::vector<double> x = best.x;
  renormalize(x);
  Optimum out;
  out.weighting = Weighting(std::move(x));
  out.value = evaluate(h, alpha, out.weighting);
  out.support = out.weighting.support(cfg.support_threshold);
  out.kkt_residual = kkt_check(h, alpha, out.weighting, cfg.support_threshold).stationarity_residual;
  out.starts_used = starts_used;
  out.converged = best.converged;
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Public operations

double evaluate(const Hypergraph& h, const AlphaParams& alpha, std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(h.n())) {
    throw LagrangianError("evaluate: weighting length does not match vertex count");
  }
  double total = 0.0;
  for (const auto& [r, list] : h.levels()) {
    const double c = alpha.for_level(h, r);
    double level_sum = 0.0;
    for (const auto& e : list) {
      double p = 1.0;
      for (Vertex v : e) p *= x[v - 1];
      level_sum += p;
    }
    total += c * level_sum;
  }
  return total;
}

double evaluate(const Hypergraph& h, const AlphaParams& alpha, const Weighting& x) {
  return evaluate(h, alpha, x.span());
}

std::vector<double> gradient(const Hypergraph& h, const AlphaParams& alpha,
                             std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(h.n())) {
    throw LagrangianError("gradient: weighting length does not match vertex count");
  }
  std::vector<double> g;
  detail::Objective(h, alpha).gradient(x, g);
  return g;
}

std::vector<double> gradient(const Hypergraph& h, const AlphaParams& alpha, const Weighting& x) {
  return gradient(h, alpha, x.span());
}

Weighting project_to_simplex(std::span<const double> v) {
  if (v.empty()) throw LagrangianError("project_to_simplex: empty vector");
  for (double value : v) {
    if (!std::isfinite(value)) throw LagrangianError("project_to_simplex: non-finite entry");
  }
  std::vector<double> x(v.begin(), v.end());
  detail::project_active(x, std::vector<bool>(x.size(), true));
  return Weighting(std::move(x));
}

Weighting characteristic_vector(const VertexSet& u, int n) {
  if (u.empty()) throw LagrangianError("characteristic_vector: empty set");
  std::vector<double> x(static_cast<std::size_t>(n), 0.0);
  for (Vertex v : u) {
    if (v < 1 || v > n) throw LagrangianError("characteristic_vector: vertex outside [1, n]");
    if (x[v - 1] != 0.0) throw LagrangianError("characteristic_vector: repeated vertex");
    x[v - 1] = 1.0 / static_cast<double>(u.size());
  }
  return Weighting(std::move(x));
}

KktReport kkt_check(const Hypergraph& h, const AlphaParams& alpha, const Weighting& x,
                    double support_threshold) {
  if (x.size() != static_cast<std::size_t>(h.n())) {
    throw LagrangianError("kkt_check: weighting length does not match vertex count");
  }
  const detail::Objective f(h, alpha);
  std::vector<double> g;
  f.gradient(x.span(), g);

  KktReport report;
  report.support = x.support(support_threshold);
  if (report.support.empty()) return report;
  double lo = g[report.support.front() - 1];
  double hi = lo;
  for (Vertex v : report.support) {
    lo = std::min(lo, g[v - 1]);
    hi = std::max(hi, g[v - 1]);
  }
  report.stationarity_residual = hi - lo;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (x[k] <= support_threshold) report.outside_excess = std::max(report.outside_excess, g[k] - hi);
  }
  for (std::size_t a = 0; a < report.support.size(); ++a) {
    for (std::size_t b = a + 1; b < report.support.size(); ++b) {
      const Vertex i = report.support[a];
      const Vertex j = report.support[b];
      if (!f.covers(i - 1, j - 1)) report.uncovered_pairs.emplace_back(i, j);
    }
  }
  return report;
}

namespace {

Optimum trivial_optimum(const Hypergraph& h) {
  std::vector<double> x(static_cast<std::size_t>(h.n()), 0.0);
  x[0] = 1.0;
  Optimum out;
  out.weighting = Weighting(std::move(x));
  out.support = {1};
  out.converged = true;
  return out;
}

// Uniform draw in [0, 1) built from the raw 64-bit engine output, so the
// sequence does not depend on the standard library's distributions.
double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<double> dirichlet_draw(std::mt19937_64& rng, int n) {
  std::vector<double> x(static_cast<std::size_t>(n));
  double sum = 0.0;
  for (double& v : x) {
    v = -std::log1p(-unit_draw(rng));
    sum += v;
  }
  for (double& v : x) v /= sum;
  return x;
}

std::vector<double> characteristic(const VertexSet& u, int n) {
  return characteristic_vector(u, n).values();
}

template <class Job>
void run_jobs(std::size_t count, int threads, Job job) {
  const std::size_t workers =
      std::min<std::size_t>(count, static_cast<std::size_t>(std::max(threads, 1)));
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) job(k);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t k = w; k < count; k += workers) job(k);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

Optimum optimize(const Hypergraph& h, const AlphaParams& alpha, const SolverConfig& cfg) {
  if (h.n() < 1) throw LagrangianError("optimize: hypergraph has no vertices");
  if (cfg.tol <= 0.0) throw LagrangianError("optimize: tol must be positive");
  if (h.empty()) return trivial_optimum(h);
  const int n = h.n();
  const detail::Objective f(h, alpha);

  std::vector<std::vector<double>> starts;
  starts.emplace_back(static_cast<std::size_t>(n), 1.0 / n);
  const auto types = h.edge_types();
  std::vector<EdgeTypeSet> clique_types{EdgeTypeSet(types)};
  if (types.size() > 1) {
    for (int r : types) clique_types.push_back(EdgeTypeSet{r});
  }
  for (const auto& q : clique_types) {
    for (const auto& clique : maximal_cliques(h, q, 32)) starts.push_back(characteristic(clique, n));
  }
  std::size_t edge_starts = 0;
  for (const auto& e : h.edges()) {
    if (++edge_starts > 64) break;
    starts.push_back(characteristic(e, n));
  }
  std::sort(starts.begin(), starts.end());
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
  std::mt19937_64 rng(cfg.seed);
  for (int k = 0; k < cfg.starts; ++k) starts.push_back(dirichlet_draw(rng, n));

  const std::vector<bool> all(static_cast<std::size_t>(n), true);
  std::vector<detail::LocalResult> results(starts.size());
  run_jobs(starts.size(), cfg.threads,
           [&](std::size_t k) { results[k] = detail::local_solve(f, starts[k], all, cfg); });

  std::size_t best = 0;
  for (std::size_t k = 1; k < results.size(); ++k) {
    if (detail::better_candidate(results[k], results[best], cfg)) best = k;
  }
  detail::LocalResult chosen = results[best];
  chosen.converged = std::any_of(results.begin(), results.end(),
                                 [](const detail::LocalResult& r) { return r.converged; });
  return detail::finish(h, alpha, chosen, static_cast<int>(starts.size()), cfg);
}

Optimum support_minimize(const Hypergraph& h, const AlphaParams& alpha, const Optimum& opt,
                         const SolverConfig& cfg) {
  if (h.empty()) return opt;
  const detail::Objective f(h, alpha);
  std::vector<double> x = opt.weighting.values();
  double value = f.value(x);
  bool converged = opt.converged;

  for (int guard = 0; guard < h.n(); ++guard) {
    const KktReport report = kkt_check(h, alpha, Weighting(x), cfg.support_threshold);
    if (report.uncovered_pairs.empty()) break;
    const auto [i, j] = report.uncovered_pairs.front();
    std::vector<double> g;
    f.gradient(x, g);
    const int keep = g[i - 1] >= g[j - 1] ? i - 1 : j - 1;
    const int drop = keep == i - 1 ? j - 1 : i - 1;

    std::vector<double> y = x;
    y[keep] += y[drop];
    y[drop] = 0.0;
    std::vector<bool> active(y.size());
    for (std::size_t k = 0; k < y.size(); ++k) active[k] = y[k] > cfg.support_threshold;
    const detail::LocalResult polished = detail::local_solve(f, y, active, cfg);
    if (polished.value < value - cfg.value_tol) break;
    x = polished.x;
    value = polished.value;
    converged = polished.converged;
  }

  detail::LocalResult result;
  result.x = x;
  result.value = value;
  result.converged = converged;
  return detail::finish(h, alpha, result, opt.starts_used, cfg);
}

namespace {

// Best lattice point k/N (sum of k = N) of the simplex, then a pair-move
// hill climb at N/2 and N/4 resolution around it.
std::vector<double> lattice_scan(const detail::Objective& f, int n) {
  int resolution = 32;
  auto count = [n](int big_n) {
    double c = 1.0;
    for (int k = 1; k <= n - 1; ++k) c = c * (big_n + k) / k;
    return c;
  };
  while (resolution > 1 && count(resolution) > 2e5) resolution /= 2;

  std::vector<int> parts(static_cast<std::size_t>(n), 0);
  std::vector<double> point(static_cast<std::size_t>(n), 0.0);
  std::vector<double> best(static_cast<std::size_t>(n), 0.0);
  double best_value = -1.0;

  auto visit = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      parts[pos] = left;
      for (int k = 0; k < n; ++k) point[k] = static_cast<double>(parts[k]) / resolution;
      const double v = f.value(point);
      if (v > best_value) {
        best_value = v;
        best = point;
      }
      return;
    }
    for (int p = 0; p <= left; ++p) {
      parts[pos] = p;
      self(self, pos + 1, left - p);
    }
  };
  visit(visit, 0, resolution);

  double step = 1.0 / resolution;
  for (int refine = 0; refine < 2; ++refine) {
    step *= 0.5;
    bool improved = true;
    while (improved) {
      improved = false;
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (a == b || best[b] < step) continue;
          point = best;
          point[a] += step;
          point[b] -= step;
          const double v = f.value(point);
          if (v > best_value + 1e-15) {
            best_value = v;
            best = point;
            improved = true;
          }
        }
      }
    }
  }
  return best;
}

}  // namespace

Optimum exact_oracle(const Hypergraph& h, const AlphaParams& alpha, const SolverConfig& cfg) {
  if (h.n() < 1) throw LagrangianError("exact_oracle: hypergraph has no vertices");
  if (h.n() > kOracleMaxVertices) {
    throw LagrangianError("exact_oracle: at most " + std::to_string(kOracleMaxVertices) +
                          " vertices");
  }
  if (h.empty()) return trivial_optimum(h);
  const int n = h.n();
  const detail::Objective f(h, alpha);

  detail::LocalResult best;
  bool have = false;
  int runs = 0;
  auto consider = [&](const detail::LocalResult& r) {
    ++runs;
    if (!have || detail::better_candidate(r, best, cfg)) {
      best = r;
      have = true;
    }
  };

  const std::uint32_t faces = std::uint32_t{1} << n;
  std::vector<bool> active(static_cast<std::size_t>(n));
  for (std::uint32_t mask = 1; mask < faces; ++mask) {
    VertexSet w;
    for (int k = 0; k < n; ++k) {
      active[k] = (mask >> k & 1U) != 0;
      if (active[k]) w.push_back(k + 1);
    }
    const std::vector<double> centre = characteristic(w, n);
    consider(detail::local_solve(f, centre, active, cfg));
    if (w.size() < 2) continue;
    for (Vertex v : w) {
      std::vector<double> start = centre;
      for (double& value : start) value *= 0.5;
      start[v - 1] += 0.5;
      consider(detail::local_solve(f, start, active, cfg));
    }
  }

  const std::vector<bool> all(static_cast<std::size_t>(n), true);
  consider(detail::local_solve(f, lattice_scan(f, n), all, cfg));
  return detail::finish(h, alpha, best, runs, cfg);
}

bool compression_monotonicity_check(const Hypergraph& h, const AlphaParams& alpha,
                                    const Weighting& x, Vertex i, Vertex j) {
  if (i >= j) throw LagrangianError("compression check: need i < j");
  if (j > h.n() || i < 1) throw LagrangianError("compression check: vertex outside [1, n]");
  if (x.size() != static_cast<std::size_t>(h.n())) {
    throw LagrangianError("compression check: weighting length does not match vertex count");
  }
  if (x[i - 1] < x[j - 1]) throw LagrangianError("compression check: need x_i >= x_j");
  const Hypergraph compressed = compress_set(h, i, j);
  return evaluate(compressed, alpha, x) >= evaluate(h, alpha, x) - 1e-12;
}

double family_value(const std::vector<VertexSet>& family, double coefficient,
                    std::span<const double> x) {
  double total = 0.0;
  for (const auto& a : family) {
    double p = 1.0;
    for (Vertex v : a) p *= x[v - 1];
    total += p;
  }
  return coefficient * total;
}

}  // namespace hyperlag
