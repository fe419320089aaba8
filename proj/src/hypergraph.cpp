#include "hyperlag/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace hyperlag {

namespace {

void require_increasing(const VertexSet& s, const char* what) {
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (s[k - 1] >= s[k]) {
      throw HypergraphError(std::string(what) + ": vertex list must be strictly increasing");
    }
  }
}

bool sorted_contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

const std::vector<Edge> kNoEdges;

}  // namespace

// ---------------------------------------------------------------------------
// EdgeTypeSet

EdgeTypeSet::EdgeTypeSet(std::vector<int> types) : types_(std::move(types)) {
  if (types_.empty()) throw HypergraphError("edge type set must be nonempty");
  for (std::size_t k = 0; k < types_.size(); ++k) {
    if (types_[k] < 1) throw HypergraphError("edge types must be positive");
    if (k > 0 && types_[k - 1] >= types_[k]) {
      throw HypergraphError("edge types must be strictly increasing");
    }
  }
}

EdgeTypeSet EdgeTypeSet::parse(const std::string& text) {
  std::vector<int> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw HypergraphError("bad edge type list '" + text + "'");
    }
    if (used != item.size()) throw HypergraphError("bad edge type list '" + text + "'");
    values.push_back(v);
  }
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
    throw HypergraphError("repeated edge type in '" + text + "'");
  }
  return EdgeTypeSet(std::move(values));
}

bool EdgeTypeSet::contains(int r) const {
  return std::binary_search(types_.begin(), types_.end(), r);
}

EdgeTypeSet EdgeTypeSet::without(int r) const {
  EdgeTypeSet out;
  for (int t : types_) {
    if (t != r) out.types_.push_back(t);
  }
  return out;
}

std::string EdgeTypeSet::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < types_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(types_[k]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// colex

bool ColexOrder::operator()(const VertexSet& a, const VertexSet& b) const {
  auto ia = a.rbegin();
  auto ib = b.rbegin();
  while (ia != a.rend() && ib != b.rend()) {
    if (*ia == *ib) {
      ++ia;
      ++ib;
    } else {
      return *ia < *ib;
    }
  }
  return ia == a.rend() && ib != b.rend();
}

bool colex_less(const VertexSet& a, const VertexSet& b) {
  require_increasing(a, "colex_less");
  require_increasing(b, "colex_less");
  if (a == b) throw HypergraphError("colex_less: the order is defined on distinct sets");
  return ColexOrder{}(a, b);
}

// ---------------------------------------------------------------------------
// Hypergraph

Hypergraph::Hypergraph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw HypergraphError("vertex count must be nonnegative");
  for (auto& e : edges) {
    if (e.empty()) throw HypergraphError("edges must contain at least one vertex");
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw HypergraphError("edge repeats a vertex");
    }
    if (e.front() < 1 || e.back() > n) {
      throw HypergraphError("edge vertex outside [1, " + std::to_string(n) + "]");
    }
    levels_[static_cast<int>(e.size())].push_back(std::move(e));
  }
  for (auto& [r, list] : levels_) {
    std::sort(list.begin(), list.end(), ColexOrder{});
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw HypergraphError("duplicate edge at level " + std::to_string(r));
    }
  }
}

const std::vector<Edge>& Hypergraph::level(int r) const {
  auto it = levels_.find(r);
  return it == levels_.end() ? kNoEdges : it->second;
}

std::vector<int> Hypergraph::edge_types() const {
  std::vector<int> out;
  for (const auto& [r, list] : levels_) out.push_back(r);
  return out;
}

std::size_t Hypergraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& [r, list] : levels_) total += list.size();
  return total;
}

bool Hypergraph::contains(const Edge& e) const {
  const auto& list = level(static_cast<int>(e.size()));
  return std::binary_search(list.begin(), list.end(), e, ColexOrder{});
}

std::vector<Edge> Hypergraph::edges() const {
  std::vector<Edge> out;
  for (const auto& [r, list] : levels_) out.insert(out.end(), list.begin(), list.end());
  return out;
}

Hypergraph Hypergraph::with_vertex_count(int n) const {
  return Hypergraph(n, edges());
}

// ---------------------------------------------------------------------------
// Constructions

Hypergraph colex_first_m(const EdgeTypeSet& types, std::int64_t m) {
  if (m < 1) throw HypergraphError("colex_first_m: m must be positive");
  if (types.empty()) throw HypergraphError("colex_first_m: empty edge type set");
  // Colex order on finite sets is numeric order of their bitmasks, so each
  // level is generated in order by Gosper's hack and the levels are merged.
  std::vector<std::uint64_t> masks;
  for (int r : types) {
    if (r > 63) throw HypergraphError("colex_first_m: edge type too large");
    std::uint64_t mask = (std::uint64_t{1} << r) - 1;
    for (std::int64_t k = 0; k < m; ++k) {
      masks.push_back(mask);
      const std::uint64_t low = mask & -mask;
      const std::uint64_t ripple = mask + low;
      if (ripple == 0 || (ripple >> 63) != 0) {
        throw HypergraphError("colex_first_m: more than 63 vertices required");
      }
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  std::sort(masks.begin(), masks.end());
  masks.resize(static_cast<std::size_t>(m));

  std::vector<Edge> edges;
  int n = 0;
  for (std::uint64_t mask : masks) {
    Edge e;
    for (int b = 0; b < 64; ++b) {
      if (mask >> b & 1U) e.push_back(b + 1);
    }
    n = std::max(n, e.back());
    edges.push_back(std::move(e));
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph complete(const EdgeTypeSet& types, int n) {
  if (types.empty() || n < types.max()) {
    throw HypergraphError("complete: need n >= max(T)");
  }
  if (n > 30) throw HypergraphError("complete: n too large");
  std::vector<Edge> edges;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    if (!types.contains(std::popcount(mask))) continue;
    Edge e;
    for (int b = 0; b < n; ++b) {
      if (mask >> b & 1U) e.push_back(b + 1);
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph(n, std::move(edges));
}

InducedSubgraph induced(const Hypergraph& h, const VertexSet& w) {
  require_increasing(w, "induced");
  if (!w.empty() && (w.front() < 1 || w.back() > h.n())) {
    throw HypergraphError("induced: W must be a subset of [n]");
  }
  std::vector<int> new_label(static_cast<std::size_t>(h.n()) + 1, 0);
  for (std::size_t k = 0; k < w.size(); ++k) new_label[w[k]] = static_cast<int>(k) + 1;

  std::vector<Edge> edges;
  for (const auto& [r, list] : h.levels()) {
    for (const auto& e : list) {
      Edge mapped;
      mapped.reserve(e.size());
      for (Vertex v : e) {
        if (new_label[v] == 0) break;
        mapped.push_back(new_label[v]);
      }
      if (mapped.size() == e.size()) edges.push_back(std::move(mapped));
    }
  }
  return {Hypergraph(static_cast<int>(w.size()), std::move(edges)), w};
}

VertexSet isolated_vertices(const Hypergraph& h) {
  std::vector<bool> covered(static_cast<std::size_t>(h.n()) + 1, false);
  for (const auto& [r, list] : h.levels()) {
    if (r < 2) continue;
    for (const auto& e : list) {
      for (Vertex v : e) covered[v] = true;
    }
  }
  VertexSet out;
  for (const auto& e : h.level(1)) {
    if (!covered[e.front()]) out.push_back(e.front());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Compression

Edge compress_edge(const Edge& e, Vertex i, Vertex j) {
  if (i >= j) throw HypergraphError("compress: need i < j");
  if (sorted_contains(e, i) || !sorted_contains(e, j)) return e;
  Edge out;
  out.reserve(e.size());
  for (Vertex v : e) {
    if (v != j) out.push_back(v);
  }
  out.insert(std::upper_bound(out.begin(), out.end(), i), i);
  return out;
}

Hypergraph compress_set(const Hypergraph& h, Vertex i, Vertex j) {
  if (i >= j) throw HypergraphError("compress: need i < j");
  if (i < 1 || j > h.n()) throw HypergraphError("compress: need 1 <= i < j <= n");
  std::vector<Edge> edges;
  edges.reserve(h.edge_count());
  for (const auto& [r, list] : h.levels()) {
    for (const auto& e : list) {
      Edge c = compress_edge(e, i, j);
      if (c == e || h.contains(c)) {
        edges.push_back(e);
      } else {
        edges.push_back(std::move(c));
      }
    }
  }
  return Hypergraph(h.n(), std::move(edges));
}

std::vector<Edge> dominance_lower_covers(const Edge& e) {
  std::vector<Edge> out;
  for (std::size_t p = 0; p < e.size(); ++p) {
    const Vertex floor = p == 0 ? 1 : e[p - 1] + 1;
    if (e[p] - 1 >= floor) {
      Edge lower = e;
      --lower[p];
      out.push_back(std::move(lower));
    }
  }
  return out;
}

bool is_left_compressed(const Hypergraph& h) {
  for (const auto& [r, list] : h.levels()) {
    for (const auto& e : list) {
      for (const auto& lower : dominance_lower_covers(e)) {
        if (!h.contains(lower)) return false;
      }
    }
  }
  return true;
}

Hypergraph left_compress_fixpoint(const Hypergraph& h) {
  Hypergraph current = h;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex i = 1; i <= current.n() && !changed; ++i) {
      for (Vertex j = i + 1; j <= current.n() && !changed; ++j) {
        Hypergraph next = compress_set(current, i, j);
        if (!(next == current)) {
          current = std::move(next);
          changed = true;
        }
      }
    }
  }
  return current;
}

// ---------------------------------------------------------------------------
// Cliques

namespace {

class CliqueSearch {
 public:
  CliqueSearch(const Hypergraph& h, const EdgeTypeSet& q) : h_(h), q_(q) {}

  // Can `u` join `clique`? Only subsets containing u need checking; every
  // subset of `clique` itself was verified when it was built.
  bool extends(const VertexSet& clique, Vertex u) const {
    for (int r : q_) {
      if (r - 1 > static_cast<int>(clique.size())) continue;
      if (!all_subsets_with(clique, u, r - 1)) return false;
    }
    return true;
  }

  int best_order() {
    best_ = 0;
    VertexSet clique;
    VertexSet candidates;
    for (Vertex v = 1; v <= h_.n(); ++v) {
      if (extends(clique, v)) candidates.push_back(v);
    }
    branch(clique, candidates);
    return best_ >= q_.min() ? best_ : 0;
  }

  std::vector<VertexSet> maximal(std::size_t limit) {
    found_.clear();
    limit_ = limit;
    VertexSet clique;
    VertexSet candidates;
    for (Vertex v = 1; v <= h_.n(); ++v) {
      if (extends(clique, v)) candidates.push_back(v);
    }
    enumerate(clique, candidates);
    std::stable_sort(found_.begin(), found_.end(),
                     [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
    return found_;
  }

 private:
  bool all_subsets_with(const VertexSet& clique, Vertex u, int k) const {
    Edge probe;
    std::vector<std::size_t> idx(static_cast<std::size_t>(k));
    for (int p = 0; p < k; ++p) idx[p] = static_cast<std::size_t>(p);
    while (true) {
      probe.clear();
      for (std::size_t p : idx) probe.push_back(clique[p]);
      probe.insert(std::upper_bound(probe.begin(), probe.end(), u), u);
      if (!h_.contains(probe)) return false;
      int p = k - 1;
      while (p >= 0 && idx[p] == clique.size() - static_cast<std::size_t>(k - p)) --p;
      if (p < 0) return true;
      ++idx[p];
      for (int s = p + 1; s < k; ++s) idx[s] = idx[s - 1] + 1;
    }
  }

  void branch(VertexSet& clique, const VertexSet& candidates) {
    if (static_cast<int>(clique.size()) > best_) best_ = static_cast<int>(clique.size());
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (static_cast<int>(clique.size() + candidates.size() - k) <= best_) return;
      const Vertex v = candidates[k];
      clique.push_back(v);
      VertexSet next;
      for (std::size_t s = k + 1; s < candidates.size(); ++s) {
        if (extends(clique, candidates[s])) next.push_back(candidates[s]);
      }
      branch(clique, next);
      clique.pop_back();
    }
  }

  void enumerate(VertexSet& clique, const VertexSet& candidates) {
    if (found_.size() >= limit_) return;
    if (candidates.empty()) {
      if (clique.empty()) return;
      for (Vertex v = 1; v <= h_.n(); ++v) {
        if (!sorted_contains(clique, v) && extends(clique, v)) return;
      }
      found_.push_back(clique);
      return;
    }
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const Vertex v = candidates[k];
      clique.push_back(v);
      VertexSet next;
      for (std::size_t s = k + 1; s < candidates.size(); ++s) {
        if (extends(clique, candidates[s])) next.push_back(candidates[s]);
      }
      enumerate(clique, next);
      clique.pop_back();
      if (found_.size() >= limit_) return;
    }
  }

  const Hypergraph& h_;
  const EdgeTypeSet& q_;
  int best_ = 0;
  std::size_t limit_ = 0;
  std::vector<VertexSet> found_;
};

}  // namespace

int max_clique_order(const Hypergraph& h, const EdgeTypeSet& q) {
  if (q.empty()) throw HypergraphError("max_clique_order: empty Q");
  return CliqueSearch(h, q).best_order();
}

std::vector<VertexSet> maximal_cliques(const Hypergraph& h, const EdgeTypeSet& q,
                                       std::size_t limit) {
  if (q.empty()) throw HypergraphError("maximal_cliques: empty Q");
  return CliqueSearch(h, q).maximal(limit);
}

// ---------------------------------------------------------------------------
// Links

namespace {

std::vector<VertexSet> link_of(const std::vector<Edge>& level, const VertexSet& removed) {
  std::vector<VertexSet> out;
  for (const auto& e : level) {
    bool all = true;
    for (Vertex v : removed) all = all && sorted_contains(e, v);
    if (!all) continue;
    VertexSet rest;
    for (Vertex v : e) {
      if (!sorted_contains(removed, v)) rest.push_back(v);
    }
    out.push_back(std::move(rest));
  }
  std::sort(out.begin(), out.end(), ColexOrder{});
  return out;
}

// E_a^r intersected with (E_b^r)^c.
std::vector<VertexSet> link_minus(const Hypergraph& h, const std::vector<VertexSet>& link_a,
                                  Vertex b) {
  std::vector<VertexSet> out;
  for (const auto& a : link_a) {
    if (sorted_contains(a, b)) continue;
    Edge with_b = a;
    with_b.insert(std::upper_bound(with_b.begin(), with_b.end(), b), b);
    if (!h.contains(with_b)) out.push_back(a);
  }
  return out;
}

}  // namespace

LinkSets link_sets(const Hypergraph& h, Vertex i, std::optional<Vertex> j) {
  if (i < 1 || i > h.n()) throw HypergraphError("link_sets: vertex outside [1, n]");
  if (j) {
    if (*j == i) throw HypergraphError("link_sets: need i != j");
    if (*j < 1 || *j > h.n()) throw HypergraphError("link_sets: vertex outside [1, n]");
  }
  LinkSets out;
  out.i = i;
  out.j = j;
  for (const auto& [r, list] : h.levels()) {
    out.link_i[r] = link_of(list, {i});
    if (!j) continue;
    out.link_j[r] = link_of(list, {*j});
    if (r >= 2) {
      out.pair[r] = link_of(list, {std::min(i, *j), std::max(i, *j)});
    } else {
      out.pair[r] = {};
    }
    out.i_minus_j[r] = link_minus(h, out.link_i[r], *j);
    out.j_minus_i[r] = link_minus(h, out.link_j[r], i);
  }
  return out;
}

}  // namespace hyperlag
