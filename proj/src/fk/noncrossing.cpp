#include "fk/noncrossing.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "fk/rewrite.hpp"

namespace fk {

uint64_t EdgeTable::mask_of(const std::vector<Edge>& edges) const {
  uint64_t m = 0;
  for (const Edge& e : edges) m |= bit(e);
  return m;
}

std::vector<Edge> EdgeTable::edges_of(uint64_t mask) const {
  std::vector<Edge> out;
  while (mask) {
    int idx = __builtin_ctzll(mask);
    out.push_back(edge_of[idx]);
    mask &= mask - 1;
  }
  return out;
}

const EdgeTable& EdgeTable::get(int n) {
  if (n < 1 || n > 11) throw limit_error("EdgeTable: supported only for 1 <= n <= 11");
  static std::array<EdgeTable, 12> tables;
  static std::array<std::once_flag, 12> flags;
  std::call_once(flags[n], [n] {
    EdgeTable t;
    t.n = n;
    t.index_of.assign(n + 1, std::vector<int>(n + 1, -1));
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) {
        t.index_of[u][v] = t.m;
        t.edge_of.emplace_back(u, v);
        ++t.m;
      }
    t.cross_mask.assign(t.m, 0);
    for (int a = 0; a < t.m; ++a)
      for (int b = 0; b < t.m; ++b) {
        const Edge& e = t.edge_of[a];
        const Edge& f = t.edge_of[b];
        bool crosses = (e.u < f.u && f.u < e.v && e.v < f.v) ||
                       (f.u < e.u && e.u < f.v && f.v < e.v);
        if (crosses) t.cross_mask[a] |= uint64_t{1} << b;
      }
    t.incident_mask.assign(n + 1, 0);
    for (int a = 0; a < t.m; ++a) {
      t.incident_mask[t.edge_of[a].u] |= uint64_t{1} << a;
      t.incident_mask[t.edge_of[a].v] |= uint64_t{1} << a;
    }
    tables[n] = std::move(t);
  });
  return tables[n];
}

namespace {

bool crossing_free(const EdgeTable& tab, uint64_t mask) {
  uint64_t rest = mask;
  while (rest) {
    int idx = __builtin_ctzll(rest);
    if (tab.cross_mask[idx] & mask) return false;
    rest &= rest - 1;
  }
  return true;
}

bool acyclic_connected_spanning(const EdgeTable& tab, uint64_t mask, int n) {
  // n-1 edges with no cycle is a spanning tree
  if (__builtin_popcountll(mask) != n - 1) return false;
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  uint64_t rest = mask;
  while (rest) {
    int idx = __builtin_ctzll(rest);
    rest &= rest - 1;
    int a = find(tab.edge_of[idx].u), b = find(tab.edge_of[idx].v);
    if (a == b) return false;
    parent[b] = a;
  }
  return true;
}

}  // namespace

NoncrossingTree::NoncrossingTree(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw std::invalid_argument("NoncrossingTree: n must be at least 1");
  const EdgeTable& tab = EdgeTable::get(n_);
  std::sort(edges_.begin(), edges_.end());
  for (const Edge& e : edges_) {
    if (e.u < 1 || e.v > n_) throw std::invalid_argument("NoncrossingTree: endpoint out of range");
  }
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("NoncrossingTree: duplicate edge");
  mask_ = tab.mask_of(edges_);
  if (n_ > 1 && !acyclic_connected_spanning(tab, mask_, n_))
    throw std::invalid_argument("NoncrossingTree: not a spanning tree");
  if (n_ == 1 && !edges_.empty())
    throw std::invalid_argument("NoncrossingTree: tree on [1] has no edges");
  if (!crossing_free(tab, mask_))
    throw std::invalid_argument("NoncrossingTree: crossing edges");
}

NoncrossingTree NoncrossingTree::from_mask(int n, uint64_t mask) {
  return NoncrossingTree(n, EdgeTable::get(n).edges_of(mask));
}

bool NoncrossingTree::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::string NoncrossingTree::to_string() const {
  std::string out = "{";
  for (size_t i = 0; i < edges_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(edges_[i].u) + std::to_string(edges_[i].v);
  }
  return out + "}";
}

std::string Signature::to_string() const {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out;
}

bool is_noncrossing(const Graph& g) {
  const auto& es = g.edges();
  for (size_t a = 0; a < es.size(); ++a)
    for (size_t b = a + 1; b < es.size(); ++b) {
      const Edge& e = es[a];
      const Edge& f = es[b];
      if ((e.u < f.u && f.u < e.v && e.v < f.v) || (f.u < e.u && e.u < f.v && f.v < e.v))
        return false;
    }
  return true;
}

std::vector<Edge> clockwise_order(const NoncrossingTree& t, int v) {
  if (v < 1 || v > t.n()) throw std::invalid_argument("clockwise_order: vertex out of range");
  std::vector<int> left, right;
  for (const Edge& e : t.edges()) {
    if (e.v == v) left.push_back(e.u);
    if (e.u == v) right.push_back(e.v);
  }
  std::sort(left.rbegin(), left.rend());
  std::sort(right.rbegin(), right.rend());
  std::vector<Edge> out;
  for (int j : left) out.emplace_back(j, v);
  for (int j : right) out.emplace_back(v, j);
  return out;
}

namespace {

// Last edge in clockwise order at v within the neighbor lists given:
// the smallest right neighbor if any, else the smallest left neighbor.
// Terminal edges are those last at both endpoints.
std::vector<Edge> terminal_edges_of_lists(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<Edge> last(n + 1, Edge());
  std::vector<bool> has(n + 1, false);
  for (int v = 1; v <= n; ++v) {
    int best_right = 0, best_left = 0;
    for (int w : adj[v]) {
      if (w > v && (best_right == 0 || w < best_right)) best_right = w;
      if (w < v && (best_left == 0 || w < best_left)) best_left = w;
    }
    if (best_right) {
      last[v] = Edge(v, best_right);
      has[v] = true;
    } else if (best_left) {
      last[v] = Edge(best_left, v);
      has[v] = true;
    }
  }
  std::vector<Edge> out;
  for (int v = 1; v <= n; ++v) {
    if (!has[v]) continue;
    const Edge& e = last[v];
    if (e.u == v && has[e.v] && last[e.v] == e) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Edge> terminal_edges(const NoncrossingTree& t) {
  std::vector<std::vector<int>> adj(t.n() + 1);
  for (const Edge& e : t.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return terminal_edges_of_lists(t.n(), adj);
}

Signature tree_signature(const NoncrossingTree& t) {
  int n = t.n();
  Signature sig;
  sig.s.assign(n, 0);
  sig.s[0] = 1;
  for (int i = 2; i <= n; ++i) {
    int minj = 0;
    for (const Edge& e : t.edges())
      if (e.v == i && (minj == 0 || e.u < minj)) minj = e.u;
    sig.s[i - 1] = minj ? sig.s[minj - 1] : sig.s[i - 2] + 1;
  }
  return sig;
}

bool is_g_reduced(const NoncrossingTree& t, const Graph& g) {
  return find_sites(t, g).empty();
}

namespace {

void enumerate_trees_masked(int n, uint64_t allowed,
                            const std::function<bool(const NoncrossingTree&)>& visit) {
  if (n < 1 || n > 10) throw limit_error("tree enumeration: supported only for 1 <= n <= 10");
  const EdgeTable& tab = EdgeTable::get(n);
  if (n == 1) {
    visit(NoncrossingTree(1, {}));
    return;
  }
  const int need = n - 1;
  std::vector<int> comp0(n + 1);
  std::iota(comp0.begin(), comp0.end(), 0);

  bool go = true;
  // DFS over edge indices in increasing order emits edge sets in
  // ascending lexicographic order; comp carries component labels by value.
  std::function<void(int, int, uint64_t, uint64_t, const std::vector<int>&)> rec =
      [&](int start, int picked, uint64_t mask, uint64_t banned, const std::vector<int>& comp) {
        if (!go) return;
        if (picked == need) {
          go = visit(NoncrossingTree::from_mask(n, mask));
          return;
        }
        for (int idx = start; idx <= tab.m - (need - picked); ++idx) {
          uint64_t b = uint64_t{1} << idx;
          if (!(allowed & b) || (banned & b)) continue;
          const Edge& e = tab.edge_of[idx];
          if (comp[e.u] == comp[e.v]) continue;
          std::vector<int> next = comp;
          int from = next[e.v], to = next[e.u];
          for (int v = 1; v <= n; ++v)
            if (next[v] == from) next[v] = to;
          rec(idx + 1, picked + 1, mask | b, banned | tab.cross_mask[idx], next);
          if (!go) return;
        }
      };
  rec(0, 0, 0, 0, comp0);
}

}  // namespace

void enumerate_noncrossing_trees(int n, const std::function<bool(const NoncrossingTree&)>& visit) {
  enumerate_trees_masked(n, ~uint64_t{0}, visit);
}

std::vector<NoncrossingTree> noncrossing_trees(int n) {
  std::vector<NoncrossingTree> out;
  enumerate_noncrossing_trees(n, [&](const NoncrossingTree& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

void enumerate_g_reduced(const Graph& g, const std::function<bool(const NoncrossingTree&)>& visit) {
  const EdgeTable& tab = EdgeTable::get(g.n());
  uint64_t allowed = tab.mask_of(g.edges());
  enumerate_trees_masked(g.n(), allowed, [&](const NoncrossingTree& t) {
    if (is_g_reduced(t, g)) return visit(t);
    return true;
  });
}

std::vector<NoncrossingTree> g_reduced_trees(const Graph& g) {
  std::vector<NoncrossingTree> out;
  enumerate_g_reduced(g, [&](const NoncrossingTree& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

}  // namespace fk
