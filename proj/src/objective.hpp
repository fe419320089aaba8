#pragma once

// Flattened multilinear polynomial used by the solvers. Not part of the
// public interface.

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "hyperlag/hypergraph.hpp"
#include "hyperlag/lagrangian.hpp"

namespace hyperlag::detail {

class Objective {
 public:
  Objective(const Hypergraph& h, const AlphaParams& alpha);

  int dim() const { return n_; }
  std::size_t term_count() const { return coef_.size(); }

  double value(std::span<const double> x) const;
  /// Writes the gradient into `g` (resized to n).
  void gradient(std::span<const double> x, std::vector<double>& g) const;
  /// Dense Hessian restricted to `idx` (0-based vertex indices).
  Eigen::MatrixXd hessian(std::span<const double> x, const std::vector<int>& idx) const;

  /// True iff some term contains both 0-based vertices a and b.
  bool covers(int a, int b) const;

 private:
  int n_ = 0;
  std::vector<double> coef_;
  std::vector<std::size_t> offset_;  // size term_count()+1
  std::vector<int> vars_;            // 0-based
  std::vector<std::vector<bool>> together_;
};

/// Local solver state for one start.
struct LocalResult {
  std::vector<double> x;
  double value = 0.0;
  double measure = 0.0;  // projected-gradient stationarity
  bool converged = false;
};

/// Projection of v onto the simplex over the coordinates where `active` is
/// true; all other coordinates are set to zero.
void project_active(std::vector<double>& v, const std::vector<bool>& active);

/// ||P(x + g) - x||_inf over the active face.
double stationarity_measure(const Objective& f, const std::vector<double>& x,
                            const std::vector<bool>& active);

/// Ascent + Newton polish from `x0`, restricted to the active face.
LocalResult local_solve(const Objective& f, std::vector<double> x0,
                        const std::vector<bool>& active, const SolverConfig& cfg);

/// Newton on the stationarity system with the support of `x` held fixed.
std::vector<double> newton_polish(const Objective& f, std::vector<double> x,
                                  double support_threshold);

/// Preference order between candidate optima: larger value beyond
/// value_tol wins; within it, smaller support, then lexicographically
/// larger weighting.
bool better_candidate(const LocalResult& a, const LocalResult& b, const SolverConfig& cfg);

Optimum finish(const Hypergraph& h, const AlphaParams& alpha, const LocalResult& best,
               int starts_used, const SolverConfig& cfg);

}  // namespace hyperlag::detail
