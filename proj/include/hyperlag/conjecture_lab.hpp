#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hyperlag/hypergraph.hpp"
#include "hyperlag/lagrangian.hpp"
#include "hyperlag/theorems.hpp"

namespace hyperlag {

class ScanError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ScanOptions {
  SolverConfig cfg;
  /// Enumeration stops (and the report is flagged incomplete) past this many graphs.
  std::uint64_t max_graphs = 1'000'000;
  /// Graphs up to this many vertices are also solved by exact_oracle.
  int oracle_max_n = 8;
  double tol = 1e-7;
  std::size_t max_witnesses = 16;
};

struct ScanReport {
  EdgeTypeSet types;
  AlphaParams alpha;
  std::int64_t m = 0;
  int n = 0;
  /// Largest value over the enumerated family (0 when the family is empty).
  double extremal_value = 0.0;
  double colex_value = 0.0;
  bool conjecture_holds = false;
  /// Graphs within tol of extremal_value, in enumeration order.
  std::vector<Hypergraph> witnesses;
  std::uint64_t enumerated_count = 0;
  bool complete = true;
  /// C_{m,T} has edge type exactly T and fits on n vertices.
  bool colex_in_family = false;
  /// Graphs where optimize and exact_oracle differed by more than tol.
  std::uint64_t oracle_disagreements = 0;
};

/// Called once per graph; returning false stops the enumeration.
using GraphVisitor = std::function<bool(const Hypergraph&)>;

/// Visits every left-compressed hypergraph with edge type exactly T, m edges
/// and vertices in [n]. Each graph is visited once, with its vertex count set
/// to the largest vertex it uses. Returns false when the visitor stopped early.
bool enumerate_left_compressed(const EdgeTypeSet& types, std::int64_t m, int n,
                               const GraphVisitor& visit);

/// Collecting form of enumerate_left_compressed.
std::vector<Hypergraph> left_compressed_family(const EdgeTypeSet& types, std::int64_t m, int n);

/// Maximizes L over the left-compressed family and compares with C_{m,T}.
ScanReport scan(const EdgeTypeSet& types, const AlphaParams& alpha, std::int64_t m, int n,
                const ScanOptions& opts = {});

/// (smallest t with sum_{r in T} C(t, r) >= m) + 1.
int default_vertex_bound(const EdgeTypeSet& types, std::int64_t m);

struct MRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

/// Edge-count windows of the known cases of the conjecture. Variants:
/// "tal" (r = 3), "tpzz" (r = 3) and "tpzz1" (any r >= 3). The lower end is
/// clamped to 1 and fractional upper ends are floored.
MRange talbot_range(int r, int t, const std::string& variant);

/// Scans T-graphs (1 in T) with m edges on at most n vertices and checks
/// L(H) <= L(C_{m,T}), after scanning the upper-level premise on m-t-1 edges.
TheoremVerdict verify_connection(const EdgeTypeSet& types, const AlphaParams& alpha,
                                 std::int64_t m, int n, const ScanOptions& opts = {});

}  // namespace hyperlag
