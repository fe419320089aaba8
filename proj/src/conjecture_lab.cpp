#include "hyperlag/conjecture_lab.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "combinatorics.hpp"

namespace hyperlag {
namespace {

// Down-sets of size k in the dominance order on the r-subsets of [n].
// Colex order is a linear extension of dominance, so deciding elements in
// colex order means every lower cover is settled before the element itself.
class LevelIdeals {
 public:
  LevelIdeals(int r, int n) {
    const Hypergraph all = complete({r}, n);
    pool_ = all.level(r);
    std::map<Edge, int> index;
    for (int k = 0; k < static_cast<int>(pool_.size()); ++k) index[pool_[k]] = k;
    covers_.resize(pool_.size());
    for (int k = 0; k < static_cast<int>(pool_.size()); ++k) {
      for (const Edge& lower : dominance_lower_covers(pool_[k])) covers_[k].push_back(index.at(lower));
    }
  }

  std::vector<std::vector<Edge>> of_size(int k) const {
    std::vector<std::vector<Edge>> out;
    std::vector<char> chosen(pool_.size(), 0);
    std::vector<int> picked;
    extend(0, k, chosen, picked, out);
    return out;
  }

 private:
  void extend(int at, int k, std::vector<char>& chosen, std::vector<int>& picked,
              std::vector<std::vector<Edge>>& out) const {
    if (static_cast<int>(picked.size()) == k) {
      std::vector<Edge> ideal;
      for (int p : picked) ideal.push_back(pool_[p]);
      out.push_back(std::move(ideal));
      return;
    }
    const int remaining = static_cast<int>(pool_.size()) - at;
    if (remaining < k - static_cast<int>(picked.size())) return;
    const bool allowed = std::all_of(covers_[at].begin(), covers_[at].end(),
                                     [&](int c) { return chosen[c] != 0; });
    if (allowed) {
      chosen[at] = 1;
      picked.push_back(at);
      extend(at + 1, k, chosen, picked, out);
      picked.pop_back();
      chosen[at] = 0;
    }
    extend(at + 1, k, chosen, picked, out);
  }

  std::vector<Edge> pool_;
  std::vector<std::vector<int>> covers_;
};

class FamilyWalker {
 public:
  FamilyWalker(const EdgeTypeSet& types, int n, const GraphVisitor& visit)
      : types_(types.values()), n_(n), visit_(visit) {
    for (int r : types_) levels_.emplace(r, LevelIdeals(r, n));
  }

  bool run(std::int64_t m) {
    sizes_.assign(types_.size(), 0);
    return compose(0, m);
  }

 private:
  // Splits m into per-level sizes, each at least 1 and at most C(n, r).
  bool compose(std::size_t level, std::int64_t left) {
    if (level == types_.size()) return left == 0 ? product() : true;
    const std::int64_t levels_after = static_cast<std::int64_t>(types_.size() - level - 1);
    const std::int64_t cap = std::min(detail::binomial(n_, types_[level]), left - levels_after);
    for (std::int64_t k = 1; k <= cap; ++k) {
      sizes_[level] = static_cast<int>(k);
      if (!compose(level + 1, left - k)) return false;
    }
    return true;
  }

  bool product() {
    std::vector<std::vector<std::vector<Edge>>> choices;
    for (std::size_t l = 0; l < types_.size(); ++l) {
      choices.push_back(ideals(types_[l], sizes_[l]));
      if (choices.back().empty()) return true;
    }
    std::vector<std::size_t> pick(types_.size(), 0);
    while (true) {
      std::vector<Edge> edges;
      int used = 1;
      for (std::size_t l = 0; l < types_.size(); ++l) {
        for (const Edge& e : choices[l][pick[l]]) {
          used = std::max(used, e.back());
          edges.push_back(e);
        }
      }
      if (!visit_(Hypergraph(used, std::move(edges)))) return false;
      std::size_t l = 0;
      while (l < pick.size() && ++pick[l] == choices[l].size()) pick[l++] = 0;
      if (l == pick.size()) return true;
    }
  }

  const std::vector<std::vector<Edge>>& ideals(int r, int k) {
    auto key = std::make_pair(r, k);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, levels_.at(r).of_size(k)).first;
    return it->second;
  }

  std::vector<int> types_;
  int n_;
  const GraphVisitor& visit_;
  std::map<int, LevelIdeals> levels_;
  std::map<std::pair<int, int>, std::vector<std::vector<Edge>>> cache_;
  std::vector<int> sizes_;
};

struct GraphValue {
  double value = 0.0;
  bool disagreement = false;
};

GraphValue best_value(const Hypergraph& h, const AlphaParams& alpha, const ScanOptions& opts) {
  GraphValue out{optimize(h, alpha, opts.cfg).value, false};
  if (h.n() <= opts.oracle_max_n) {
    const double oracle = exact_oracle(h, alpha, opts.cfg).value;
    out.disagreement = std::abs(oracle - out.value) > opts.tol;
    out.value = std::max(out.value, oracle);
  }
  return out;
}

}  // namespace

bool enumerate_left_compressed(const EdgeTypeSet& types, std::int64_t m, int n,
                               const GraphVisitor& visit) {
  if (types.empty()) throw ScanError("edge type set is empty");
  if (m < 1 || n < types.max()) return true;
  FamilyWalker walker(types, n, visit);
  return walker.run(m);
}

std::vector<Hypergraph> left_compressed_family(const EdgeTypeSet& types, std::int64_t m, int n) {
  std::vector<Hypergraph> out;
  enumerate_left_compressed(types, m, n, [&](const Hypergraph& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

ScanReport scan(const EdgeTypeSet& types, const AlphaParams& alpha, std::int64_t m, int n,
                const ScanOptions& opts) {
  if (m < 1) throw ScanError("edge count m must be positive");
  if (n < types.max()) {
    throw ScanError("vertex bound n = " + std::to_string(n) + " is below the largest edge type");
  }
  ScanReport report;
  report.types = types;
  report.alpha = alpha;
  report.m = m;
  report.n = n;

  const Hypergraph colex = colex_first_m(types, m);
  const GraphValue colex_value = best_value(colex, alpha, opts);
  report.colex_value = colex_value.value;
  report.colex_in_family = colex.edge_types() == types.values() && colex.n() <= n;

  std::vector<double> witness_values;
  bool any = false;
  report.complete = enumerate_left_compressed(types, m, n, [&](const Hypergraph& h) {
    if (report.enumerated_count == opts.max_graphs) return false;
    ++report.enumerated_count;
    const GraphValue v = best_value(h, alpha, opts);
    if (v.disagreement) ++report.oracle_disagreements;
    if (!any || v.value > report.extremal_value) {
      report.extremal_value = v.value;
      any = true;
      std::size_t kept = 0;
      for (std::size_t k = 0; k < report.witnesses.size(); ++k) {
        if (witness_values[k] >= v.value - opts.tol) {
          report.witnesses[kept] = std::move(report.witnesses[k]);
          witness_values[kept++] = witness_values[k];
        }
      }
      report.witnesses.resize(kept);
      witness_values.resize(kept);
    }
    if (v.value >= report.extremal_value - opts.tol &&
        report.witnesses.size() < opts.max_witnesses) {
      report.witnesses.push_back(h);
      witness_values.push_back(v.value);
    }
    return true;
  });
  report.conjecture_holds = report.extremal_value <= report.colex_value + opts.tol;
  return report;
}

int default_vertex_bound(const EdgeTypeSet& types, std::int64_t m) {
  int t = 0;
  while (true) {
    std::int64_t total = 0;
    for (int r : types) total += detail::binomial(t, r);
    if (total >= m) return std::max(t, types.max()) + 1;
    ++t;
  }
}

MRange talbot_range(int r, int t, const std::string& variant) {
  if (t < 1) throw ScanError("t must be positive");
  MRange range;
  if (variant == "tal" || variant == "tpzz") {
    if (r != 3) throw ScanError("variant " + variant + " covers r = 3 only");
    const std::int64_t c3 = detail::binomial(t, 3);
    const std::int64_t c2 = detail::binomial(t - 1, 2);
    if (variant == "tal") {
      range = {c3 - 2, c3 + c2 - t};
    } else {
      range = {c3 - 7, c3 + c2 - (t + 1) / 2};
    }
  } else if (variant == "tpzz1") {
    if (r < 3) throw ScanError("variant tpzz1 needs r >= 3");
    const std::int64_t cr = detail::binomial(t, r);
    range = {cr - 4, cr};
  } else {
    throw ScanError("unknown range variant '" + variant + "' (expected tal, tpzz or tpzz1)");
  }
  range.lo = std::max<std::int64_t>(range.lo, 1);
  return range;
}

TheoremVerdict verify_connection(const EdgeTypeSet& types, const AlphaParams& alpha,
                                 std::int64_t m, int n, const ScanOptions& opts) {
  if (!types.contains(1)) throw ScanError("level-1 connection needs 1 in the type set");
  const EdgeTypeSet q = types.without(1);
  if (q.empty()) throw ScanError("level-1 connection needs a level above 1");

  TheoremVerdict v;
  v.theorem_id = "connection-scan";
  const double budget = theorems::level_one_budget(types, alpha);
  const int t = theorems::connection_t(q, m);
  const bool budget_ok = budget <= 1.0 + 1e-12;
  const bool range_ok = t >= 1;
  v.notes.push_back("t = " + std::to_string(t));
  if (!budget_ok) v.notes.push_back("sum alpha_r/(r-1)! exceeds 1");
  if (!range_ok) v.notes.push_back("no positive t brackets m");

  bool premise_ok = true;
  const std::int64_t m_q = m - t - 1;
  if (budget_ok && range_ok && m_q >= 1 && n >= q.max()) {
    const ScanReport premise = scan(q, alpha, m_q, n, opts);
    premise_ok = premise.conjecture_holds && premise.complete;
    if (!premise_ok) {
      v.notes.push_back("premise failed on " + std::to_string(m_q) + " upper-level edges");
    }
  }
  v.hypothesis_ok = budget_ok && range_ok && premise_ok;

  const ScanReport main = scan(types, alpha, m, n, opts);
  v.predicted = main.colex_value;
  v.computed = main.extremal_value;
  v.abs_error = std::abs(v.predicted - v.computed);
  v.holds = main.conjecture_holds && main.complete;
  if (!main.complete) v.notes.push_back("scan incomplete");
  v.notes.push_back("scanned " + std::to_string(main.enumerated_count) + " graphs");
  if (!main.witnesses.empty()) {
    v.witness = optimize(main.witnesses.front(), alpha, opts.cfg);
  }
  return v;
}

}  // namespace hyperlag
