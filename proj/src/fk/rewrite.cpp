#include "fk/rewrite.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "fk/prng.hpp"

namespace fk {

TreeElement TreeElement::unit(const NoncrossingTree& t) {
  TreeElement e(t.n());
  e.add(t.mask(), Rational(1));
  return e;
}

void TreeElement::add(uint64_t tree_mask, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(tree_mask);
  if (it == terms_.end()) {
    terms_.emplace(tree_mask, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void TreeElement::add(const NoncrossingTree& t, const Rational& c) {
  if (t.n() != n_) throw std::invalid_argument("TreeElement: vertex count mismatch");
  add(t.mask(), c);
}

Rational TreeElement::coeff(const NoncrossingTree& t) const {
  auto it = terms_.find(t.mask());
  return it == terms_.end() ? Rational(0) : it->second;
}

TreeElement& TreeElement::operator+=(const TreeElement& o) {
  if (o.n_ != n_) throw std::invalid_argument("TreeElement: vertex count mismatch");
  for (const auto& [mask, c] : o.terms_) add(mask, c);
  return *this;
}

TreeElement& TreeElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mask, coeff] : terms_) coeff *= c;
  return *this;
}

bool TreeElement::all_integer() const {
  for (const auto& [mask, c] : terms_)
    if (!c.is_integer()) return false;
  return true;
}

std::string TreeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mask, c] : terms_) {
    if (!first) os << " + ";
    os << c.to_string() << "*x" << NoncrossingTree::from_mask(n_, mask).to_string();
    first = false;
  }
  return os.str();
}

namespace {

// A candidate site of a tree over the complete graph, with the rewrite
// outputs prebuilt: outputs[0] enters with +1, the rest with -1. A site is
// valid inside g exactly when g contains the new edge.
struct CachedSite {
  uint8_t i1, im1, im, m;
  uint8_t new_edge_idx;
  std::vector<uint8_t> vertices;
  std::vector<uint64_t> outputs;
};

std::vector<CachedSite> compute_sites(int n, uint64_t tree_mask) {
  const EdgeTable& tab = EdgeTable::get(n);
  std::vector<std::vector<int>> adj(n + 1);
  {
    uint64_t rest = tree_mask;
    while (rest) {
      int idx = __builtin_ctzll(rest);
      rest &= rest - 1;
      adj[tab.edge_of[idx].u].push_back(tab.edge_of[idx].v);
      adj[tab.edge_of[idx].v].push_back(tab.edge_of[idx].u);
    }
  }
  std::vector<CachedSite> sites;
  std::vector<int> path;

  // Walk increasing paths from the low endpoint of each long edge (a, b);
  // every path end w with the candidate edge (w, b) crossing-free yields
  // a site with cycle a = i_1 < ... < i_{m-1} = w < i_m = b.
  std::function<void(int, int)> walk = [&](int a, int b) {
    int cur = path.back();
    for (int nxt : adj[cur]) {
      if (nxt <= cur || nxt >= b) continue;
      path.push_back(nxt);
      int cand = tab.index(nxt, b);
      if ((tab.cross_mask[cand] & tree_mask) == 0) {
        CachedSite s;
        s.i1 = static_cast<uint8_t>(a);
        s.im1 = static_cast<uint8_t>(nxt);
        s.im = static_cast<uint8_t>(b);
        s.m = static_cast<uint8_t>(path.size() + 1);
        s.new_edge_idx = static_cast<uint8_t>(cand);
        s.vertices.assign(path.begin(), path.end());
        s.vertices.push_back(static_cast<uint8_t>(b));
        uint64_t h = tree_mask | (uint64_t{1} << cand);
        s.outputs.push_back(h & ~tab.bit(Edge(a, b)));
        for (size_t k = 0; k + 1 < path.size(); ++k)
          s.outputs.push_back(h & ~tab.bit(Edge(path[k], path[k + 1])));
        sites.push_back(std::move(s));
      }
      walk(a, b);
      path.pop_back();
    }
  };

  uint64_t rest = tree_mask;
  while (rest) {
    int idx = __builtin_ctzll(rest);
    rest &= rest - 1;
    const Edge& e = tab.edge_of[idx];
    if (e.v - e.u < 2) continue;  // no room for an intermediate vertex
    path = {e.u};
    walk(e.u, e.v);
  }
  std::sort(sites.begin(), sites.end(), [](const CachedSite& x, const CachedSite& y) {
    if (x.im != y.im) return x.im < y.im;
    if (x.im1 != y.im1) return x.im1 < y.im1;
    return x.m < y.m;
  });
  return sites;
}

// Per-thread site cache: entries are computed once per (n, tree) and never
// mutated afterwards, so lookups stay deterministic.
const std::vector<CachedSite>& cached_sites(int n, uint64_t tree_mask) {
  struct KeyHash {
    size_t operator()(const std::pair<int, uint64_t>& k) const {
      return std::hash<uint64_t>()(k.second * 31 + static_cast<uint64_t>(k.first));
    }
  };
  thread_local std::unordered_map<std::pair<int, uint64_t>, std::vector<CachedSite>, KeyHash> map;
  auto key = std::make_pair(n, tree_mask);
  auto it = map.find(key);
  if (it != map.end()) return it->second;
  return map.emplace(key, compute_sites(n, tree_mask)).first->second;
}

uint64_t graph_mask(const Graph& g) {
  return EdgeTable::get(g.n()).mask_of(g.edges());
}

ReductionSite materialize(const EdgeTable& tab, const CachedSite& s) {
  ReductionSite site;
  site.vertices.assign(s.vertices.begin(), s.vertices.end());
  site.tree_edge = Edge(s.i1, s.im);
  for (size_t k = 0; k + 2 < s.vertices.size(); ++k)
    site.path_edges.emplace_back(s.vertices[k], s.vertices[k + 1]);
  site.new_edge = tab.edge_of[s.new_edge_idx];
  return site;
}

}  // namespace

std::vector<ReductionSite> find_sites(const NoncrossingTree& t, const Graph& g) {
  if (t.n() != g.n()) throw std::invalid_argument("find_sites: vertex count mismatch");
  uint64_t gmask = graph_mask(g);
  if ((t.mask() & ~gmask) != 0)
    throw std::invalid_argument("find_sites: tree is not a subgraph of g");
  const EdgeTable& tab = EdgeTable::get(t.n());
  std::vector<ReductionSite> out;
  for (const CachedSite& s : cached_sites(t.n(), t.mask())) {
    if (gmask & (uint64_t{1} << s.new_edge_idx)) out.push_back(materialize(tab, s));
  }
  return out;
}

TreeElement apply_relation(const NoncrossingTree& t, const ReductionSite& site) {
  const EdgeTable& tab = EdgeTable::get(t.n());
  // validate the site against the tree
  if (site.m() < 3) throw std::invalid_argument("apply_relation: site needs m >= 3");
  for (size_t k = 0; k + 1 < site.vertices.size(); ++k)
    if (site.vertices[k] >= site.vertices[k + 1])
      throw std::invalid_argument("apply_relation: vertices must increase");
  const auto& v = site.vertices;
  if (site.tree_edge != Edge(v.front(), v.back()) ||
      site.new_edge != Edge(v[v.size() - 2], v.back()) ||
      site.path_edges.size() + 2 != v.size())
    throw std::invalid_argument("apply_relation: site edges do not match its vertex run");
  for (size_t k = 0; k + 2 < v.size(); ++k)
    if (site.path_edges[k] != Edge(v[k], v[k + 1]))
      throw std::invalid_argument("apply_relation: site edges do not match its vertex run");
  if (!t.contains(site.tree_edge))
    throw std::invalid_argument("apply_relation: long edge not in tree");
  for (const Edge& e : site.path_edges)
    if (!t.contains(e)) throw std::invalid_argument("apply_relation: path edge not in tree");
  if (t.contains(site.new_edge))
    throw std::invalid_argument("apply_relation: new edge already in tree");
  uint64_t h = t.mask() | tab.bit(site.new_edge);
  if (!is_noncrossing(Graph(t.n(), tab.edges_of(h))))
    throw std::invalid_argument("apply_relation: tree plus new edge crosses");

  TreeElement out(t.n());
  // mask order equals descending edge-sequence order, the termination measure
  uint64_t t1 = h & ~tab.bit(site.tree_edge);
  FK_CHECK(t.mask() < t1, "apply_relation: rewrite must increase the edge set");
  out.add(t1, Rational(1));
  for (const Edge& pe : site.path_edges) {
    uint64_t tj = h & ~tab.bit(pe);
    FK_CHECK(t.mask() < tj, "apply_relation: rewrite must increase the edge set");
    out.add(tj, Rational(-1));
  }
  return out;
}

namespace {

using TermMap = std::map<uint64_t, Rational, MaskLexLess>;

// -1 removed, 0 updated, +1 inserted
int add_term(TermMap& terms, uint64_t mask, const Rational& c) {
  auto it = terms.find(mask);
  if (it == terms.end()) {
    if (c.is_zero()) return 0;
    terms.emplace(mask, c);
    return 1;
  }
  it->second += c;
  if (it->second.is_zero()) {
    terms.erase(it);
    return -1;
  }
  return 0;
}

// First g-valid site of a tree, if any.
const CachedSite* first_site(int n, uint64_t mask, uint64_t gmask) {
  for (const CachedSite& s : cached_sites(n, mask))
    if (gmask & (uint64_t{1} << s.new_edge_idx)) return &s;
  return nullptr;
}

// Rewrites the full coefficient of one tree at one site. Mask order equals
// the descending edge-sequence order, so the checks below are the
// termination measure for the whole loop. Returns the +1/0/-1 statuses of
// the produced terms through `on_output`.
template <typename Fn>
void rewrite_at(TermMap& terms, uint64_t tree_mask, const CachedSite& site, Fn&& on_output) {
  Rational coeff = terms.at(tree_mask);
  terms.erase(tree_mask);
  FK_CHECK(site.outputs[0] > tree_mask, "reduce: rewrite must increase the edge set");
  on_output(site.outputs[0], add_term(terms, site.outputs[0], coeff));
  for (size_t k = 1; k < site.outputs.size(); ++k) {
    FK_CHECK(site.outputs[k] > tree_mask, "reduce: rewrite must increase the edge set");
    on_output(site.outputs[k], add_term(terms, site.outputs[k], -coeff));
  }
}

// Lex-first pass: a single forward sweep. Every rewrite inserts only
// strictly larger trees and never changes the sites of other terms, so
// trees already passed stay irreducible.
void reduce_lex(int n, TermMap& terms, uint64_t gmask) {
  auto it = terms.begin();
  while (it != terms.end()) {
    uint64_t mask = it->first;
    const CachedSite* site = first_site(n, mask, gmask);
    if (!site) {
      ++it;
      continue;
    }
    rewrite_at(terms, mask, *site, [](uint64_t, int) {});
    it = terms.lower_bound(mask);
  }
}

// Random pass: keep the set of reducible trees current and rewrite a
// uniformly chosen one at a uniformly chosen site each step.
void reduce_random(int n, TermMap& terms, uint64_t gmask, Prng& rng) {
  std::vector<uint64_t> reducible;
  std::unordered_map<uint64_t, size_t> pos;
  auto track = [&](uint64_t mask) {
    if (pos.count(mask)) return;
    if (first_site(n, mask, gmask)) {
      pos.emplace(mask, reducible.size());
      reducible.push_back(mask);
    }
  };
  auto untrack = [&](uint64_t mask) {
    auto it = pos.find(mask);
    if (it == pos.end()) return;
    size_t idx = it->second;
    pos.erase(it);
    if (idx + 1 != reducible.size()) {
      reducible[idx] = reducible.back();
      pos[reducible[idx]] = idx;
    }
    reducible.pop_back();
  };
  for (const auto& [mask, c] : terms) track(mask);

  while (!reducible.empty()) {
    uint64_t mask = reducible[rng.below(reducible.size())];
    const auto& sites = cached_sites(n, mask);
    std::vector<const CachedSite*> valid;
    for (const CachedSite& s : sites)
      if (gmask & (uint64_t{1} << s.new_edge_idx)) valid.push_back(&s);
    const CachedSite& site = *valid[rng.below(valid.size())];
    untrack(mask);
    rewrite_at(terms, mask, site, [&](uint64_t out, int status) {
      if (status > 0)
        track(out);
      else if (status < 0)
        untrack(out);
    });
  }
}

}  // namespace

TreeElement reduce(const TreeElement& e, const Graph& g, ReduceStrategy strategy) {
  if (e.n() != g.n()) throw std::invalid_argument("reduce: vertex count mismatch");
  uint64_t gmask = graph_mask(g);
  for (const auto& [mask, c] : e.terms())
    if (mask & ~gmask) throw std::invalid_argument("reduce: tree not inside g");

  const bool integral_input = e.all_integer();
  TermMap terms(e.terms().begin(), e.terms().end());
  if (strategy.kind == ReduceStrategy::Kind::LexFirst) {
    reduce_lex(e.n(), terms, gmask);
  } else {
    Prng rng(strategy.seed);
    reduce_random(e.n(), terms, gmask, rng);
  }

  TreeElement out(e.n());
  for (auto& [mask, c] : terms) out.add(mask, c);
  if (integral_input && !out.all_integer())
    throw std::logic_error("reduce: normal form of an integral element must be integral");
  return out;
}

TreeElement expand_complete(const NoncrossingTree& t) {
  return reduce(TreeElement::unit(t), Graph::complete(t.n()));
}

bool signature_prec(const NoncrossingTree& a, const NoncrossingTree& b) {
  Signature sa = tree_signature(a), sb = tree_signature(b);
  if (sa.s != sb.s) return sa.s < sb.s;
  return mask_lex_less(a.mask(), b.mask());
}

std::pair<NoncrossingTree, Rational> leading_term(const TreeElement& e) {
  if (e.is_zero()) throw std::invalid_argument("leading_term: zero element");
  std::optional<NoncrossingTree> best;
  Rational coeff;
  for (const auto& [mask, c] : e.terms()) {
    NoncrossingTree t = NoncrossingTree::from_mask(e.n(), mask);
    if (!best || signature_prec(t, *best)) {
      best = t;
      coeff = c;
    }
  }
  return {*best, coeff};
}

ConfluenceReport confluence_fuzz(const Graph& g, int trials, uint64_t seed) {
  if (g.n() > 8) throw limit_error("confluence_fuzz: supported only for n <= 8");
  ConfluenceReport report;
  std::vector<NoncrossingTree> trees;
  enumerate_noncrossing_trees(g.n(), [&](const NoncrossingTree& t) {
    if ((t.mask() & ~graph_mask(g)) == 0) trees.push_back(t);
    return true;
  });
  if (trees.empty()) return report;  // vacuous: nothing to reduce

  Prng rng(seed);
  for (int k = 0; k < trials; ++k) {
    const NoncrossingTree& t = trees[rng.below(trees.size())];
    uint64_t s1 = rng.next_u64();
    uint64_t s2 = rng.next_u64();
    TreeElement a = reduce(TreeElement::unit(t), g, ReduceStrategy::random(s1));
    TreeElement b = reduce(TreeElement::unit(t), g, ReduceStrategy::random(s2));
    TreeElement c = reduce(TreeElement::unit(t), g, ReduceStrategy::lex());
    ++report.trials;
    if (!(a == b && b == c)) {
      ++report.failures;
      if (report.first_counterexample.empty()) {
        std::ostringstream os;
        os << "tree " << t.to_string() << " seeds " << s1 << "," << s2;
        report.first_counterexample = os.str();
      }
    }
  }
  return report;
}

long long basis_dimension(const Graph& g) {
  long long count = 0;
  enumerate_g_reduced(g, [&](const NoncrossingTree&) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace fk
