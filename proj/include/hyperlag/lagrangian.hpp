#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hyperlag/hypergraph.hpp"

namespace hyperlag {

class LagrangianError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Per-level coefficients alpha_r of the objective, keyed by edge
/// cardinality. A hypergraph's base level (its smallest edge type) uses
/// coefficient 1 unless a value is given explicitly.
class AlphaParams {
 public:
  AlphaParams() = default;
  AlphaParams(std::initializer_list<std::pair<const int, double>> values);

  void set(int r, double value);
  std::optional<double> get(int r) const;
  const std::map<int, double>& explicit_values() const { return values_; }

  /// Coefficient applied to level r of `h`. Throws when r is not the base
  /// level of `h` and has no explicit value.
  double for_level(const Hypergraph& h, int r) const;

  /// Sum over levels r >= 2 of alpha_r / (r-1)!, the quantity bounded by 1
  /// in the level-1 reduction and the level-1 connection results.
  double level_one_budget(const std::vector<int>& levels) const;

 private:
  std::map<int, double> values_;
};

/// A point of the standard simplex.
class Weighting {
 public:
  static constexpr double kSumTolerance = 1e-12;

  Weighting() = default;
  /// Validates nonnegativity and |sum - 1| <= kSumTolerance.
  explicit Weighting(std::vector<double> x);

  std::size_t size() const { return x_.size(); }
  double operator[](std::size_t k) const { return x_[k]; }
  const std::vector<double>& values() const { return x_; }
  std::span<const double> span() const { return x_; }

  /// Vertices (1-based) with weight above `threshold`.
  VertexSet support(double threshold = 1e-9) const;

  friend bool operator==(const Weighting&, const Weighting&) = default;

 private:
  std::vector<double> x_;
};

struct SolverConfig {
  double tol = 1e-10;                 // projected-gradient stationarity
  int max_iters = 20000;              // ascent iterations per start
  int starts = 16;                    // random Dirichlet starts
  std::uint64_t seed = 1;
  double support_threshold = 1e-9;
  double value_tol = 1e-9;            // equal-value comparisons
  int threads = 1;
};

struct Optimum {
  double value = 0.0;
  Weighting weighting;
  VertexSet support;
  double kkt_residual = 0.0;
  int starts_used = 0;
  bool converged = false;
};

struct KktReport {
  VertexSet support;
  /// Max over support pairs of |dL/dx_i - dL/dx_j|.
  double stationarity_residual = 0.0;
  /// Largest amount by which an off-support partial derivative exceeds the
  /// support's largest partial derivative (0 when none does).
  double outside_excess = 0.0;
  /// Support pairs that share no edge.
  std::vector<std::pair<Vertex, Vertex>> uncovered_pairs;

  bool stationary(double tol) const { return stationarity_residual <= tol; }
};

/// L_alpha(H, x) = sum_r alpha_r sum_{e in E^r} prod_{v in e} x_v.
double evaluate(const Hypergraph& h, const AlphaParams& alpha, const Weighting& x);
/// Same polynomial at an arbitrary point of R^n (no feasibility check).
double evaluate(const Hypergraph& h, const AlphaParams& alpha, std::span<const double> x);

std::vector<double> gradient(const Hypergraph& h, const AlphaParams& alpha, const Weighting& x);
std::vector<double> gradient(const Hypergraph& h, const AlphaParams& alpha,
                             std::span<const double> x);

/// Euclidean projection onto the simplex (sort-based), renormalized.
Weighting project_to_simplex(std::span<const double> v);

Weighting characteristic_vector(const VertexSet& u, int n);

/// Multi-start projected-gradient ascent with a support-restricted Newton
/// polish. Deterministic for fixed inputs and cfg.seed.
Optimum optimize(const Hypergraph& h, const AlphaParams& alpha, const SolverConfig& cfg = {});

KktReport kkt_check(const Hypergraph& h, const AlphaParams& alpha, const Weighting& x,
                    double support_threshold = 1e-9);

/// Shrinks the support of an optimum by merging support pairs that share no
/// edge (weight of one moved onto the other), re-polishing after each merge.
Optimum support_minimize(const Hypergraph& h, const AlphaParams& alpha, const Optimum& opt,
                         const SolverConfig& cfg = {});

/// Brute-force maximizer: polishes from several starts on every face of the
/// simplex and adds a lattice scan. Ground truth for small instances.
inline constexpr int kOracleMaxVertices = 12;
Optimum exact_oracle(const Hypergraph& h, const AlphaParams& alpha, const SolverConfig& cfg = {});

/// L(H, x) <= L(C_{i<-j}(H), x) for x_i >= x_j, checked to 1e-12.
bool compression_monotonicity_check(const Hypergraph& h, const AlphaParams& alpha,
                                    const Weighting& x, Vertex i, Vertex j);

/// L(F, x) for a family of vertex sets at level r, i.e. alpha_r * lambda(F, x)
/// with the empty set contributing 1. Used for the link-family identities.
double family_value(const std::vector<VertexSet>& family, double coefficient,
                    std::span<const double> x);

}  // namespace hyperlag
