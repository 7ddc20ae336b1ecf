#include "fk/verify.hpp"

#include <algorithm>
#include <sstream>

#include "fk/noncrossing.hpp"
#include "fk/oracle.hpp"
#include "fk/orlik_terao.hpp"
#include "fk/prng.hpp"
#include "fk/rewrite.hpp"
#include "fk/words.hpp"

namespace fk {

bool SuiteReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string SuiteReport::to_jsonl() const {
  std::ostringstream os;
  for (const CheckResult& c : checks) {
    os << "{\"check\":\"" << c.name << "\",\"expected\":" << c.expected << ",\"got\":" << c.got
       << ",\"pass\":" << (c.pass ? "true" : "false") << "}\n";
  }
  return os.str();
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  for (const CheckResult& c : checks) {
    os << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  expected " << c.expected << " got "
       << c.got << "\n";
  }
  os << suite << ": " << (pass() ? "all checks passed" : "FAILURES") << "\n";
  return os.str();
}

Graph random_graph(int n, Prng& rng) {
  std::vector<Edge> es;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (rng.coin()) es.emplace_back(i, j);
  return Graph(n, std::move(es));
}

Graph random_connected_graph(int n, Prng& rng) {
  for (;;) {
    Graph g = random_graph(n, rng);
    if (connected_components(g).blocks().size() == 1) return g;
  }
}

namespace {

void push(SuiteReport& r, const std::string& name, long long expected, long long got) {
  r.checks.push_back(CheckResult{name, expected, got, expected == got});
}

constexpr long long kCatalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};

// All graphs on [k] containing the given spanning-tree mask are connected;
// iterating them covers exactly the (tree, connected graph) pairs.
template <typename Fn>
void for_each_supergraph(int k, uint64_t tree_mask, Fn&& fn) {
  const EdgeTable& tab = EdgeTable::get(k);
  std::vector<int> free_edges;
  for (int idx = 0; idx < tab.m; ++idx)
    if (!(tree_mask & (uint64_t{1} << idx))) free_edges.push_back(idx);
  uint64_t count = uint64_t{1} << free_edges.size();
  for (uint64_t bits = 0; bits < count; ++bits) {
    uint64_t gmask = tree_mask;
    for (size_t t = 0; t < free_edges.size(); ++t)
      if (bits & (uint64_t{1} << t)) gmask |= uint64_t{1} << free_edges[t];
    fn(gmask);
  }
}

std::vector<Graph> all_connected_graphs(int k) {
  const EdgeTable& tab = EdgeTable::get(k);
  std::vector<Graph> out;
  for (uint64_t mask = 0; mask < (uint64_t{1} << tab.m); ++mask) {
    Graph g(k, tab.edges_of(mask));
    if (connected_components(g).blocks().size() == 1) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

SuiteReport verify_catalan(int n) {
  SuiteReport report{"catalan", {}};
  for (int k = 3; k <= std::min(n, 6); ++k) {
    push(report, "reduced-tree-count-k" + std::to_string(k), kCatalan[k - 1],
         basis_dimension(Graph::complete(k)));
  }
  for (int k = 3; k <= std::min(n, 6); ++k) {
    push(report, "oracle-dimension-k" + std::to_string(k), kCatalan[k - 1],
         component_dimension(Graph::complete(k), Permutation::n_cycle(k)));
  }
  return report;
}

SuiteReport verify_confluence(int n, uint64_t seed) {
  if (n > 6) throw limit_error("confluence suite: supported only for n <= 6");
  SuiteReport report{"confluence", {}};
  for (int k = 3; k <= n; ++k) {
    Prng rng(seed + static_cast<uint64_t>(k));
    long long pairs = 0, agreed = 0;
    for (const NoncrossingTree& t : noncrossing_trees(k)) {
      TreeElement unit = TreeElement::unit(t);
      for_each_supergraph(k, t.mask(), [&](uint64_t gmask) {
        Graph g(k, EdgeTable::get(k).edges_of(gmask));
        ++pairs;
        TreeElement lex = reduce(unit, g, ReduceStrategy::lex());
        bool ok = true;
        for (int trial = 0; trial < 20 && ok; ++trial) {
          TreeElement rnd = reduce(unit, g, ReduceStrategy::random(rng.next_u64()));
          ok = rnd == lex;
        }
        if (ok) ++agreed;
      });
    }
    push(report, "strategy-independence-k" + std::to_string(k), pairs, agreed);
  }
  return report;
}

SuiteReport verify_signature(int n, uint64_t seed) {
  if (n > 8) throw limit_error("signature suite: supported only for n <= 8");
  SuiteReport report{"signature", {}};

  // the 8-vertex reference tree and its signature
  {
    NoncrossingTree t(8, {{1, 2}, {1, 6}, {3, 6}, {3, 5}, {4, 5}, {6, 8}, {7, 8}});
    Signature expected{{1, 1, 2, 3, 2, 1, 2, 1}};
    push(report, "reference-signature", 1, tree_signature(t) == expected ? 1 : 0);
  }

  // injectivity on reduced trees: exhaustive through 5 vertices
  for (int k = 2; k <= std::min(n, 5); ++k) {
    const EdgeTable& tab = EdgeTable::get(k);
    long long graphs = 0, injective = 0;
    for (uint64_t mask = 0; mask < (uint64_t{1} << tab.m); ++mask) {
      Graph g(k, tab.edges_of(mask));
      std::vector<Signature> sigs;
      for (const NoncrossingTree& t : g_reduced_trees(g)) sigs.push_back(tree_signature(t));
      std::sort(sigs.begin(), sigs.end(), [](const Signature& a, const Signature& b) {
        return a.s < b.s;
      });
      ++graphs;
      if (std::adjacent_find(sigs.begin(), sigs.end()) == sigs.end()) ++injective;
    }
    push(report, "signature-injectivity-k" + std::to_string(k), graphs, injective);
  }
  // 200 random graphs at 6 and 7 vertices
  for (int k = 6; k <= std::min(n, 7); ++k) {
    Prng rng(seed + static_cast<uint64_t>(k) * 1000003);
    long long injective = 0;
    for (int trial = 0; trial < 200; ++trial) {
      Graph g = random_graph(k, rng);
      std::vector<Signature> sigs;
      for (const NoncrossingTree& t : g_reduced_trees(g)) sigs.push_back(tree_signature(t));
      std::sort(sigs.begin(), sigs.end(), [](const Signature& a, const Signature& b) {
        return a.s < b.s;
      });
      if (std::adjacent_find(sigs.begin(), sigs.end()) == sigs.end()) ++injective;
    }
    push(report, "signature-injectivity-random-k" + std::to_string(k), 200, injective);
  }

  // monotonicity: for every edge (i, k') and i < j < k', s_j >= s_i, and
  // s_j >= s_i + 1 when the tree path from j to k' avoids i
  for (int k = 2; k <= std::min(n, 7); ++k) {
    long long trees = 0, clean = 0;
    for (const NoncrossingTree& t : noncrossing_trees(k)) {
      ++trees;
      Signature sig = tree_signature(t);
      auto adj = std::vector<std::vector<int>>(k + 1);
      for (const Edge& e : t.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
      }
      // path from j to target avoiding blocked: tree walk
      auto path_avoids = [&](int from, int target, int blocked) {
        std::vector<int> stack{from};
        std::vector<bool> seen(k + 1, false);
        seen[from] = true;
        while (!stack.empty()) {
          int cur = stack.back();
          stack.pop_back();
          if (cur == target) return true;
          for (int nx : adj[cur]) {
            if (nx == blocked || seen[nx]) continue;
            seen[nx] = true;
            stack.push_back(nx);
          }
        }
        return false;
      };
      bool ok = true;
      for (const Edge& e : t.edges()) {
        for (int j = e.u + 1; j < e.v && ok; ++j) {
          if (sig.s[j - 1] < sig.s[e.u - 1]) ok = false;
          if (ok && path_avoids(j, e.v, e.u) && sig.s[j - 1] < sig.s[e.u - 1] + 1) ok = false;
        }
        if (!ok) break;
      }
      if (ok) ++clean;
    }
    push(report, "signature-monotonicity-k" + std::to_string(k), trees, clean);
  }

  // at most one reduced tree per graph has the all-ones signature, and its
  // left neighbor at each vertex is the maximal feasible one
  for (int k = 2; k <= std::min(n, 5); ++k) {
    const EdgeTable& tab = EdgeTable::get(k);
    long long graphs = 0, clean = 0;
    for (uint64_t mask = 0; mask < (uint64_t{1} << tab.m); ++mask) {
      Graph g(k, tab.edges_of(mask));
      std::vector<NoncrossingTree> ones;
      for (const NoncrossingTree& t : g_reduced_trees(g)) {
        Signature sig = tree_signature(t);
        if (std::all_of(sig.s.begin(), sig.s.end(), [](int v) { return v == 1; }))
          ones.push_back(t);
      }
      ++graphs;
      bool ok = ones.size() <= 1;
      if (ok && ones.size() == 1) {
        // each vertex i > 1 carries exactly one edge (j, i); j must be the
        // largest choice in g keeping the earlier edges noncrossing
        const NoncrossingTree& t = ones.front();
        std::vector<Edge> prefix;
        for (int i = 2; i <= k && ok; ++i) {
          int j_used = 0;
          for (const Edge& e : t.edges())
            if (e.v == i) j_used = std::max(j_used, e.u);
          for (int j = j_used + 1; j < i && ok; ++j) {
            if (!g.has_edge(j, i)) continue;
            std::vector<Edge> attempt = prefix;
            attempt.emplace_back(j, i);
            if (is_noncrossing(Graph(k, attempt))) ok = false;  // larger j was feasible
          }
          for (const Edge& e : t.edges())
            if (e.v == i) prefix.push_back(e);
        }
      }
      if (ok) ++clean;
    }
    push(report, "all-ones-uniqueness-k" + std::to_string(k), graphs, clean);
  }
  return report;
}

SuiteReport verify_oracle(int n) {
  SuiteReport report{"oracle", {}};
  for (int k = 2; k <= std::min(n, 5); ++k) {
    ComponentOracle oracle(k, Permutation::n_cycle(k), k - 1);
    push(report, "complete-graph-dimension-k" + std::to_string(k),
         basis_dimension(Graph::complete(k)), oracle.dimension(Graph::complete(k)));
    long long graphs = 0, agreed = 0;
    for (const Graph& g : all_connected_graphs(k)) {
      ++graphs;
      if (basis_dimension(g) == oracle.dimension(g)) ++agreed;
    }
    push(report, "basis-oracle-agreement-k" + std::to_string(k), graphs, agreed);
  }
  for (int k = 2; k <= std::min(n, 5); ++k) {
    long long cases = 0, agreed = 0;
    for (const Graph& g : all_connected_graphs(k)) {
      auto counts = nbc_counts_by_size(g, EdgeOrder::lex(g));
      for (int d = 0; d <= k - 1; ++d) {
        ++cases;
        long long nbc = d < static_cast<int>(counts.size()) ? counts[d] : 0;
        if (ab_component_dimension(g, d) == nbc) ++agreed;
      }
    }
    push(report, "abelian-dimension-agreement-k" + std::to_string(k), cases, agreed);
  }
  return report;
}

SuiteReport verify_abelian(int n, uint64_t seed) {
  if (n > 8) throw limit_error("abelian suite: supported only for n <= 8");
  SuiteReport report{"abelian", {}};
  Prng rng(seed);
  std::vector<std::vector<NoncrossingTree>> trees_by_size(n + 1);
  for (int k = 3; k <= n; ++k) trees_by_size[k] = noncrossing_trees(k);
  long long trials = 0, agreed = 0;
  while (trials < 1000) {
    int k = 3 + rng.below_int(std::max(1, n - 2));
    Graph g = random_connected_graph(k, rng);
    uint64_t gmask = EdgeTable::get(k).mask_of(g.edges());
    std::vector<const NoncrossingTree*> trees;
    for (const NoncrossingTree& t : trees_by_size[k])
      if ((t.mask() & ~gmask) == 0) trees.push_back(&t);
    if (trees.empty()) continue;
    TreeElement e(k);
    int terms = 1 + rng.below_int(4);
    for (int t = 0; t < terms; ++t) {
      long long num = static_cast<long long>(rng.below(19)) - 9;
      long long den = 1 + static_cast<long long>(rng.below(3));
      e.add(*trees[rng.below(trees.size())], Rational(num, den));
    }
    if (e.is_zero()) continue;
    ++trials;
    OTElement direct = abelianize(e, g);
    OTElement via_reduce = abelianize(reduce(e, g), g);
    if (direct == via_reduce) ++agreed;
  }
  push(report, "abelianize-commutes-with-reduce", trials, agreed);
  return report;
}

int default_suite_size(const std::string& suite) {
  if (suite == "catalan") return 6;
  if (suite == "confluence") return 6;
  if (suite == "signature") return 7;
  if (suite == "oracle") return 5;
  if (suite == "abelian") return 6;
  throw std::invalid_argument("unknown suite: " + suite);
}

SuiteReport run_suite(const std::string& suite, int n, uint64_t seed) {
  if (suite == "catalan") return verify_catalan(n);
  if (suite == "confluence") return verify_confluence(n, seed);
  if (suite == "signature") return verify_signature(n, seed);
  if (suite == "oracle") return verify_oracle(n);
  if (suite == "abelian") return verify_abelian(n, seed);
  throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace fk
