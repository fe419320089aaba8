#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperlag {

/// Vertices are 1-based dense integers.
using Vertex = int;

/// A strictly increasing list of vertices.
using VertexSet = std::vector<Vertex>;
using Edge = VertexSet;

/// Raised when a hypergraph-level precondition is violated.
class HypergraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Strictly increasing, nonempty set of edge cardinalities r0 < r1 < ... < rl.
class EdgeTypeSet {
 public:
  EdgeTypeSet() = default;
  explicit EdgeTypeSet(std::vector<int> types);
  EdgeTypeSet(std::initializer_list<int> types)
      : EdgeTypeSet(std::vector<int>(types)) {}

  /// Parses "1,3" style lists.
  static EdgeTypeSet parse(const std::string& text);

  const std::vector<int>& values() const { return types_; }
  int min() const { return types_.front(); }
  int max() const { return types_.back(); }
  bool contains(int r) const;
  std::size_t size() const { return types_.size(); }
  bool empty() const { return types_.empty(); }

  /// The set with level `r` removed; may be empty.
  EdgeTypeSet without(int r) const;
  std::string to_string() const;

  auto begin() const { return types_.begin(); }
  auto end() const { return types_.end(); }
  friend bool operator==(const EdgeTypeSet&, const EdgeTypeSet&) = default;

 private:
  std::vector<int> types_;
};

/// True iff max(A xor B) lies in B. Both inputs must be strictly increasing.
/// Throws HypergraphError when A == B.
bool colex_less(const VertexSet& a, const VertexSet& b);

/// Non-throwing strict weak ordering used for sorting (A == B gives false).
struct ColexOrder {
  bool operator()(const VertexSet& a, const VertexSet& b) const;
};

/// Non-uniform hypergraph on vertex set [n]. Edges are grouped by
/// cardinality and kept in colex order inside each level. Empty levels are
/// never stored, so the key set of levels() is exactly T(H).
class Hypergraph {
 public:
  using Levels = std::map<int, std::vector<Edge>>;

  Hypergraph() = default;
  /// Edges may be given in any order and vertex order; they are canonicalized.
  /// Duplicate edges, out-of-range vertices and repeated vertices are errors.
  Hypergraph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  const Levels& levels() const { return levels_; }
  const std::vector<Edge>& level(int r) const;
  bool has_level(int r) const { return levels_.count(r) != 0; }

  /// T(H); empty when there are no edges.
  std::vector<int> edge_types() const;
  std::size_t edge_count() const;
  std::size_t edge_count(int r) const { return level(r).size(); }
  bool empty() const { return levels_.empty(); }

  bool contains(const Edge& e) const;
  /// All edges, levels in increasing r, colex inside each level.
  std::vector<Edge> edges() const;

  /// Same edges on a larger (or equal) vertex range.
  Hypergraph with_vertex_count(int n) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_ = 0;
  Levels levels_;
};

/// C_{m,T}: the first m sets, in colex order, among all finite subsets of
/// N whose cardinality lies in T. n is the largest vertex used.
Hypergraph colex_first_m(const EdgeTypeSet& types, std::int64_t m);

/// K_n^T: every subset of [n] whose cardinality lies in T.
Hypergraph complete(const EdgeTypeSet& types, int n);

struct InducedSubgraph {
  Hypergraph graph;
  /// relabel[k] is the original vertex carried by new vertex k+1.
  std::vector<Vertex> relabel;
};

/// H[W] with vertices relabeled 1..|W| in increasing order.
InducedSubgraph induced(const Hypergraph& h, const VertexSet& w);

/// D(H): level-1 vertices contained in no edge of cardinality >= 2.
VertexSet isolated_vertices(const Hypergraph& h);

/// C_{i<-j}(e). Requires i < j.
Edge compress_edge(const Edge& e, Vertex i, Vertex j);

/// C_{i<-j}(E) applied level by level; preserves every level's edge count.
Hypergraph compress_set(const Hypergraph& h, Vertex i, Vertex j);

/// True iff every level is closed under coordinatewise dominance.
bool is_left_compressed(const Hypergraph& h);

/// Applies compress_set over pairs (i, j) in lexicographic order, restarting
/// after every change, until the result is left-compressed.
Hypergraph left_compress_fixpoint(const Hypergraph& h);

/// Largest t such that some t-subset W has every subset of W with
/// cardinality in `q` present as an edge. Exact branch and bound.
int max_clique_order(const Hypergraph& h, const EdgeTypeSet& q);

/// Maximal cliques (w.r.t. `q`) found by the same search, largest first,
/// capped at `limit` results.
std::vector<VertexSet> maximal_cliques(const Hypergraph& h,
                                       const EdgeTypeSet& q,
                                       std::size_t limit);

/// Link families of a vertex i (and optionally a partner j), per level r:
///   E_i^r      = {A : A + i in E^r}
///   E_ij^r     = {B : B + i + j in E^r}
///   E_{i\j}^r  = E_i^r minus sets that complete j to an edge (and minus
///                sets containing j), i.e. E_i^r intersected with (E_j^r)^c.
struct LinkSets {
  Vertex i = 0;
  std::optional<Vertex> j;
  std::map<int, std::vector<VertexSet>> link_i;
  std::map<int, std::vector<VertexSet>> link_j;
  std::map<int, std::vector<VertexSet>> pair;
  std::map<int, std::vector<VertexSet>> i_minus_j;
  std::map<int, std::vector<VertexSet>> j_minus_i;
};

LinkSets link_sets(const Hypergraph& h, Vertex i, std::optional<Vertex> j = {});

/// Immediate lower covers of `e` in the coordinatewise dominance order:
/// every edge obtained by decreasing one coordinate by one.
std::vector<Edge> dominance_lower_covers(const Edge& e);

}  // namespace hyperlag
