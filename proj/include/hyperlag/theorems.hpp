#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperlag/hypergraph.hpp"
#include "hyperlag/lagrangian.hpp"

namespace hyperlag {

/// Outcome of checking one closed-form statement against the solver.
struct TheoremVerdict {
  std::string theorem_id;
  bool hypothesis_ok = false;
  double predicted = 0.0;
  double computed = 0.0;
  double abs_error = 0.0;
  Optimum witness;
  /// Solver/oracle agreement when the oracle was run.
  std::optional<double> oracle_value;
  /// Equality (closed forms) or inequality (scans) held at the check tolerance.
  bool holds = false;
  std::vector<std::string> notes;

  bool passed() const { return hypothesis_ok && holds; }
};

class TheoremError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace theorems {

/// (1/2)(1 - 1/t).
double ms_value(int t);

/// 1 + a/2 - a/(2t), where a is the level-2 coefficient.
double th2_value(double alpha2, int t);
bool th2_hypothesis(double alpha2, int t);

/// 1 + a * prod_{i=1}^{r-1}(t-i) / (r! t^{r-1}), where a is the level-r coefficient.
double th1r_value(double alpha_r, int r, int t);

struct CliqueThreshold {
  int min_t = 1;
  /// True when a <= (r-2)! and the ceiling expression is replaced by 1.
  bool small_coefficient_regime = false;
};
CliqueThreshold th1r_threshold(double alpha_r, int r);
bool th1r_hypothesis(double alpha_r, int r, int t);

/// 1 + a2 (t-1)/(2t) + a3 (t-1)(t-2)/(6t^2), coefficients indexed by level.
double th123_value(double alpha2, double alpha3, int t);
int th123_threshold(double alpha2, double alpha3);
bool th123_hypothesis(double alpha2, double alpha3, int t);

/// sum_{r in T} alpha_r C(t, r) / t^r, the value at the uniform weighting of [t].
double complete_uniform_value(const EdgeTypeSet& types, const AlphaParams& alpha, int t);

/// sum_{r in T, r >= 2} alpha_r / (r-1)!. Every such level needs a coefficient.
double level_one_budget(const EdgeTypeSet& types, const AlphaParams& alpha);

struct Level1Reduction {
  /// level_one_budget(T(H)) <= 1.
  bool hypothesis_ok = false;
  double budget = 0.0;
  /// Set when every level-1 vertex is isolated in H[V(H^1)]; L(H) = 1.
  bool unit_value = false;
  /// H[V(H^1) \ D(H[V(H^1)])] otherwise.
  std::optional<InducedSubgraph> reduced;
};
Level1Reduction reduce_level1(const Hypergraph& h, const AlphaParams& alpha);

/// [sum C(t, r), sum C(t, r) + sum C(t-1, r-1)] over r in T.
struct MWindow {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool contains(std::int64_t m) const { return lo <= m && m <= hi; }
};
MWindow colex_window(const EdgeTypeSet& types, int t);

/// Checks that m lies in the window for t and T (1 not in T); throws
/// TheoremError otherwise. L(C_{m,T}) = L([t]^T) is then predicted.
bool colex_range_equal(const EdgeTypeSet& types, int t, std::int64_t m);

/// f(t) = t + sum_{r in Q} C(t, r); the level-1 connection covers f(t) < m <= f(t+1).
std::int64_t connection_floor(const EdgeTypeSet& q, int t);
/// The unique t >= 0 with f(t) < m <= f(t+1).
int connection_t(const EdgeTypeSet& q, std::int64_t m);

/// 1 + L(C_{m-t-1, Q}) with Q = T \ {1}. Throws TheoremError naming the
/// failed hypothesis (coefficient budget or m range).
double connection_compose(const EdgeTypeSet& types, const AlphaParams& alpha, std::int64_t m,
                          int t, const SolverConfig& cfg = {});

enum class TheoremId { kMotzkinStraus, kTh2, kTh1r, kTh123, kLevel1Reduction, kColexWindow, kConnection };
TheoremId parse_theorem_id(const std::string& text);
std::string to_string(TheoremId id);

struct TheoremInstance {
  std::optional<Hypergraph> graph;
  AlphaParams alpha;
  std::optional<EdgeTypeSet> types;
  std::optional<int> t;
  std::optional<int> r;
  std::optional<std::int64_t> m;
  SolverConfig cfg;
  double check_tol = 1e-7;
  /// The exact oracle cross-checks the solver up to this many vertices.
  int oracle_max_n = 8;
};

TheoremVerdict verify_theorem(TheoremId id, const TheoremInstance& instance);
TheoremVerdict verify_theorem(const std::string& id, const TheoremInstance& instance);

}  // namespace theorems
}  // namespace hyperlag
