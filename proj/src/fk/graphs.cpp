#include "fk/graphs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fk {

std::string Edge::to_string() const {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("Graph: negative vertex count");
  for (const Edge& e : edges_) {
    if (e.u < 1 || e.v > n_ || e.u >= e.v)
      throw std::invalid_argument("Graph: edge endpoint out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) throw std::invalid_argument("Graph: duplicate edge");
}

Graph Graph::complete(int n) {
  std::vector<Edge> es;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) es.emplace_back(i, j);
  return Graph(n, std::move(es));
}

Graph Graph::path(int n) {
  std::vector<Edge> es;
  for (int i = 1; i < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, std::move(es));
}

bool Graph::has_edge(int i, int j) const {
  Edge e(i, j);
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(n_ + 1);
  for (const Edge& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& v : adj) std::sort(v.begin(), v.end());
  return adj;
}

SetPartition::SetPartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  std::set<int> seen;
  for (const auto& b : blocks_)
    for (int x : b)
      if (!seen.insert(x).second) throw std::invalid_argument("SetPartition: overlapping blocks");
}

std::string SetPartition::to_string() const {
  // single digits are concatenated; larger labels are comma-separated
  bool compact = true;
  for (const auto& b : blocks_)
    for (int x : b)
      if (x > 9) compact = false;
  std::string out;
  for (size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += "|";
    for (size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j && !compact) out += ",";
      out += std::to_string(blocks_[i][j]);
    }
  }
  return out;
}

EdgeOrder EdgeOrder::lex(const Graph& g) { return EdgeOrder(g.edges()); }

EdgeOrder::EdgeOrder(std::vector<Edge> edges_in_order) : order_(std::move(edges_in_order)) {
  std::vector<Edge> check = order_;
  std::sort(check.begin(), check.end());
  if (std::adjacent_find(check.begin(), check.end()) != check.end())
    throw std::invalid_argument("EdgeOrder: repeated edge");
}

int EdgeOrder::rank(const Edge& e) const {
  for (size_t i = 0; i < order_.size(); ++i)
    if (order_[i] == e) return static_cast<int>(i);
  throw std::invalid_argument("EdgeOrder: edge not in order");
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, int k) {
  if (c.is_zero()) return Polynomial();
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[k];
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.coeffs_.size()) c[i] += a.coeffs_[i];
    if (i < b.coeffs_.size()) c[i] += b.coeffs_[i];
  }
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.coeffs_.size()) c[i] += a.coeffs_[i];
    if (i < b.coeffs_.size()) c[i] -= b.coeffs_[i];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    os << coeffs_[k].to_string();
    if (k >= 1) os << "*t";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

SetPartition connected_components(const Graph& g) {
  Dsu dsu(g.n());
  for (const Edge& e : g.edges()) dsu.unite(e.u, e.v);
  std::map<int, std::vector<int>> by_root;
  for (int v = 1; v <= g.n(); ++v) by_root[dsu.find(v)].push_back(v);
  std::vector<std::vector<int>> blocks;
  for (auto& [root, verts] : by_root) blocks.push_back(std::move(verts));
  return SetPartition(std::move(blocks));
}

bool has_cycle(const Graph& g) {
  Dsu dsu(g.n());
  for (const Edge& e : g.edges())
    if (!dsu.unite(e.u, e.v)) return true;
  return false;
}

std::vector<std::vector<int>> simple_cycles(const Graph& g) {
  if (g.n() > 12) throw limit_error("simple_cycles: supported only for n <= 12");
  auto adj = g.adjacency();
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<bool> used(g.n() + 1, false);

  // Canonical form: start at the minimal vertex of the cycle; only visit
  // larger vertices; close the cycle only when the second vertex is smaller
  // than the last, so each cycle is emitted exactly once.
  std::function<void(int, int)> extend = [&](int start, int cur) {
    for (int nxt : adj[cur]) {
      if (nxt == start) {
        if (path.size() >= 3 && path[1] < path.back()) out.push_back(path);
        continue;
      }
      if (nxt < start || used[nxt]) continue;
      used[nxt] = true;
      path.push_back(nxt);
      extend(start, nxt);
      path.pop_back();
      used[nxt] = false;
    }
  };

  for (int s = 1; s <= g.n(); ++s) {
    path = {s};
    used[s] = true;
    extend(s, s);
    used[s] = false;
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

namespace {

// Key for the chromatic memo table: vertex count then the relabeled edge
// list, with vertices ordered by decreasing degree (stable on ties).
std::string canonical_key(int n, const std::vector<Edge>& edges) {
  std::vector<int> deg(n + 1, 0);
  for (const Edge& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  std::vector<int> verts(n);
  std::iota(verts.begin(), verts.end(), 1);
  std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) { return deg[a] > deg[b]; });
  std::vector<int> relabel(n + 1, 0);
  for (int i = 0; i < n; ++i) relabel[verts[i]] = i + 1;
  std::vector<Edge> rel;
  rel.reserve(edges.size());
  for (const Edge& e : edges) rel.emplace_back(relabel[e.u], relabel[e.v]);
  std::sort(rel.begin(), rel.end());
  std::string key;
  key.reserve(2 + 2 * rel.size());
  key.push_back(static_cast<char>(n));
  for (const Edge& e : rel) {
    key.push_back(static_cast<char>(e.u));
    key.push_back(static_cast<char>(e.v));
  }
  return key;
}

using Memo = std::map<std::string, std::vector<Rational>>;

// Chromatic polynomial of a connected edge list on m vertices.
std::vector<Rational> chroma_connected(int m, std::vector<Edge> edges, Memo& memo);

// Splits into connected components (isolated vertices contribute a factor t).
std::vector<Rational> chroma(int m, const std::vector<Edge>& edges, Memo& memo) {
  Dsu dsu(m);
  for (const Edge& e : edges) dsu.unite(e.u, e.v);
  std::map<int, std::vector<int>> comp_verts;
  for (int v = 1; v <= m; ++v) comp_verts[dsu.find(v)].push_back(v);

  Polynomial result(std::vector<Rational>{Rational(1)});
  for (auto& [root, verts] : comp_verts) {
    std::vector<int> relabel(m + 1, 0);
    for (size_t i = 0; i < verts.size(); ++i) relabel[verts[i]] = static_cast<int>(i) + 1;
    std::vector<Edge> sub;
    for (const Edge& e : edges)
      if (relabel[e.u] && relabel[e.v]) sub.emplace_back(relabel[e.u], relabel[e.v]);
    auto part = chroma_connected(static_cast<int>(verts.size()), std::move(sub), memo);
    result = result * Polynomial(std::move(part));
  }
  return result.coeffs();
}

std::vector<Rational> chroma_connected(int m, std::vector<Edge> edges, Memo& memo) {
  if (edges.empty()) {
    std::vector<Rational> t(m + 1);
    t[m] = Rational(1);
    return t;
  }
  std::string key = canonical_key(m, edges);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  // delete-contract on the last edge (touching the highest-indexed vertex)
  Edge e = edges.back();
  std::vector<Edge> deleted(edges.begin(), edges.end() - 1);
  auto del = chroma(m, deleted, memo);

  // contract v into u, relabel vertices above v down by one
  std::set<Edge> contracted;
  for (const Edge& f : deleted) {
    int a = f.u == e.v ? e.u : f.u;
    int b = f.v == e.v ? e.u : f.v;
    if (a == b) continue;
    int a2 = a > e.v ? a - 1 : a;
    int b2 = b > e.v ? b - 1 : b;
    contracted.insert(Edge(a2, b2));
  }
  auto con = chroma(m - 1, std::vector<Edge>(contracted.begin(), contracted.end()), memo);

  Polynomial result = Polynomial(std::move(del)) - Polynomial(std::move(con));
  memo[key] = result.coeffs();
  return result.coeffs();
}

}  // namespace

Polynomial chromatic_polynomial(const Graph& g) {
  Memo memo;
  return Polynomial(chroma(g.n(), g.edges(), memo));
}

Polynomial hilbert_from_chromatic(const Polynomial& chi, int n) {
  if (chi.degree() != n)
    throw std::invalid_argument("hilbert_from_chromatic: degree must equal n");
  // coefficient of t^d in (-t)^n * chi(-1/t) is (-1)^d * [t^(n-d)] chi
  std::vector<Rational> h(n + 1);
  for (int d = 0; d <= n; ++d) {
    Rational c = chi.coeff(n - d);
    if (d % 2 == 1) c = -c;
    if (c.sign() < 0 || !c.is_integer())
      throw std::invalid_argument(
          "hilbert_from_chromatic: transform has a negative or non-integer coefficient");
    h[d] = c;
  }
  return Polynomial(std::move(h));
}

std::vector<std::vector<Edge>> broken_circuits(const Graph& g, const EdgeOrder& order) {
  std::set<std::vector<Edge>> seen;
  for (const auto& cyc : simple_cycles(g)) {
    std::vector<Edge> ce;
    ce.reserve(cyc.size());
    for (size_t i = 0; i < cyc.size(); ++i) ce.emplace_back(cyc[i], cyc[(i + 1) % cyc.size()]);
    auto min_it = std::min_element(ce.begin(), ce.end(), [&](const Edge& a, const Edge& b) {
      return order.less(a, b);
    });
    std::vector<Edge> bc;
    for (const Edge& e : ce)
      if (!(e == *min_it)) bc.push_back(e);
    std::sort(bc.begin(), bc.end());
    seen.insert(std::move(bc));
  }
  return std::vector<std::vector<Edge>>(seen.begin(), seen.end());
}

}  // namespace fk
