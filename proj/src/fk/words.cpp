#include "fk/words.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fk {

Permutation::Permutation(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 1); }

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw std::invalid_argument("Permutation: bad transposition");
  Permutation p(n);
  std::swap(p.img_[i - 1], p.img_[j - 1]);
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation p(n);
  for (const auto& c : cycles) {
    for (size_t k = 0; k < c.size(); ++k) {
      int from = c[k], to = c[(k + 1) % c.size()];
      if (from < 1 || from > n) throw std::invalid_argument("Permutation: cycle out of range");
      p.img_[from - 1] = to;
    }
  }
  // validate bijectivity
  std::vector<bool> seen(n + 1, false);
  for (int v : p.img_) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("Permutation: not a bijection");
    seen[v] = true;
  }
  return p;
}

Permutation Permutation::n_cycle(int n) {
  Permutation p(n);
  for (int i = 1; i <= n; ++i) p.img_[i - 1] = i % n + 1;
  return p;
}

Permutation Permutation::from_images(std::vector<int> images) {
  Permutation p(static_cast<int>(images.size()));
  p.img_ = std::move(images);
  std::vector<bool> seen(p.img_.size() + 1, false);
  for (int v : p.img_) {
    if (v < 1 || v > static_cast<int>(p.img_.size()) || seen[v])
      throw std::invalid_argument("Permutation: not a bijection");
    seen[v] = true;
  }
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p(size());
  for (int i = 1; i <= size(); ++i) p.img_[img_[i - 1] - 1] = i;
  return p;
}

Permutation Permutation::compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Permutation: size mismatch");
  Permutation p(a.size());
  for (int i = 1; i <= a.size(); ++i) p.img_[i - 1] = a.apply(b.apply(i));
  return p;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(size() + 1, false);
  for (int s = 1; s <= size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> cyc;
    int x = s;
    do {
      cyc.push_back(x);
      seen[x] = true;
      x = apply(x);
    } while (x != s);
    out.push_back(std::move(cyc));
  }
  return out;
}

int Permutation::cycle_count() const { return static_cast<int>(cycles().size()); }

std::string Permutation::to_string() const {
  std::string out;
  for (const auto& c : cycles()) {
    if (c.size() == 1) continue;
    out += "(";
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) out += " ";
      out += std::to_string(c[i]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Monomial::Monomial(int n_, std::vector<std::pair<int, int>> letters) : n(n_) {
  for (auto [a, b] : letters) {
    if (a == b || a < 1 || b < 1 || a > n || b > n)
      throw std::invalid_argument("Monomial: bad generator");
    if (a > b) sign = -sign;
    word.emplace_back(a, b);
  }
}

Monomial::Monomial(int n_, std::vector<Edge> normalized_word, int sign_)
    : n(n_), word(std::move(normalized_word)), sign(sign_) {
  for (const Edge& e : word)
    if (e.u < 1 || e.v > n || e.u >= e.v) throw std::invalid_argument("Monomial: bad generator");
  if (sign != 1 && sign != -1) throw std::invalid_argument("Monomial: sign must be +-1");
}

std::string Monomial::to_string() const {
  std::string out = sign < 0 ? "-" : "";
  if (word.empty()) return out + "1";
  for (const Edge& e : word) out += "x" + std::to_string(e.u) + std::to_string(e.v);
  return out;
}

int degree(const Monomial& p) { return static_cast<int>(p.word.size()); }

Permutation sn_degree(const Monomial& p) {
  // rightmost letter acts first: sigma = t_1 o t_2 o ... o t_d
  std::vector<int> img(p.n);
  std::iota(img.begin(), img.end(), 1);
  for (size_t k = p.word.size(); k-- > 0;) {
    // left-compose with the transposition: img[x] <- t(img[x])
    int i = p.word[k].u, j = p.word[k].v;
    for (int x = 0; x < p.n; ++x) {
      if (img[x] == i)
        img[x] = j;
      else if (img[x] == j)
        img[x] = i;
    }
  }
  return Permutation::from_images(std::move(img));
}

Graph support(const Monomial& p) {
  std::set<Edge> es(p.word.begin(), p.word.end());
  return Graph(p.n, std::vector<Edge>(es.begin(), es.end()));
}

SetPartition pi_degree(const Monomial& p) { return connected_components(support(p)); }

bool is_simple(const Monomial& p) {
  std::set<Edge> seen;
  for (const Edge& e : p.word)
    if (!seen.insert(e).second) return false;
  return !has_cycle(support(p));
}

bool respects(const Monomial& p, const NoncrossingTree& t) {
  if (p.n != t.n()) throw std::invalid_argument("respects: size mismatch");
  for (const Edge& e : p.word)
    if (!t.contains(e)) throw std::invalid_argument("respects: support not inside the tree");
  std::set<Edge> present(p.word.begin(), p.word.end());
  for (int v = 1; v <= p.n; ++v) {
    std::vector<Edge> expected;
    for (const Edge& e : clockwise_order(t, v))
      if (present.count(e)) expected.push_back(e);
    std::vector<Edge> got;
    for (const Edge& e : p.word)
      if (e.u == v || e.v == v) got.push_back(e);
    if (got != expected) return false;
  }
  return true;
}

Monomial canonical_monomial(const NoncrossingTree& t) {
  std::vector<std::vector<int>> adj(t.n() + 1);
  for (const Edge& e : t.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  auto erase_from = [](std::vector<int>& v, int x) {
    v.erase(std::find(v.begin(), v.end(), x));
  };

  // see terminal_edges: last at v is the smallest right neighbor if any,
  // else the smallest left neighbor
  auto last_at = [&](int v) -> Edge {
    int best_right = 0, best_left = 0;
    for (int w : adj[v]) {
      if (w > v && (best_right == 0 || w < best_right)) best_right = w;
      if (w < v && (best_left == 0 || w < best_left)) best_left = w;
    }
    if (best_right) return Edge(v, best_right);
    return Edge(best_left, v);
  };

  std::vector<Edge> reversed;
  int remaining = static_cast<int>(t.edges().size());
  while (remaining > 0) {
    Edge pick;
    bool found = false;
    for (int v = 1; v <= t.n() && !found; ++v) {
      if (adj[v].empty()) continue;
      Edge e = last_at(v);
      // lex-least terminal edge: vertices are scanned in increasing order,
      // so the first edge terminal at both ends is lex-least by its u
      if (e.u == v && last_at(e.v) == e) {
        pick = e;
        found = true;
      }
    }
    assert(found && "every noncrossing forest with edges has a terminal edge");
    reversed.push_back(pick);
    erase_from(adj[pick.u], pick.v);
    erase_from(adj[pick.v], pick.u);
    --remaining;
  }
  std::reverse(reversed.begin(), reversed.end());
  return Monomial(t.n(), std::move(reversed), 1);
}

Monomial commutation_normal_form(const Monomial& p) {
  // layer of each occurrence = longest chain of pairwise dependent
  // (index-sharing) letters ending at it
  int d = degree(p);
  std::vector<int> layer(d, 1);
  int max_layer = d == 0 ? 0 : 1;
  for (int k = 0; k < d; ++k) {
    for (int j = 0; j < k; ++j) {
      const Edge& a = p.word[j];
      const Edge& b = p.word[k];
      bool dependent = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
      if (dependent) layer[k] = std::max(layer[k], layer[j] + 1);
    }
    max_layer = std::max(max_layer, layer[k]);
  }
  std::vector<Edge> nf;
  nf.reserve(d);
  for (int l = 1; l <= max_layer; ++l) {
    std::vector<Edge> block;
    for (int k = 0; k < d; ++k)
      if (layer[k] == l) block.push_back(p.word[k]);
    std::sort(block.begin(), block.end());
    nf.insert(nf.end(), block.begin(), block.end());
  }
  return Monomial(p.n, std::move(nf), p.sign);
}

bool commutation_equivalent(const Monomial& p, const Monomial& q) {
  if (p.n != q.n || p.word.size() != q.word.size()) return false;
  return commutation_normal_form(p).word == commutation_normal_form(q).word;
}

std::vector<MonomialComponent> tree_of_simple_monomial(const Monomial& p) {
  if (!is_simple(p)) throw std::invalid_argument("tree_of_simple_monomial: monomial is not simple");
  Permutation sigma = sn_degree(p);
  std::vector<MonomialComponent> out;
  for (const auto& cyc : sigma.cycles()) {
    std::vector<int> relabel(p.n + 1, 0);
    for (size_t k = 0; k < cyc.size(); ++k) relabel[cyc[k]] = static_cast<int>(k) + 1;
    std::vector<Edge> sub;
    for (const Edge& e : p.word)
      if (relabel[e.u] && relabel[e.v]) sub.emplace_back(relabel[e.u], relabel[e.v]);
    std::sort(sub.begin(), sub.end());
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    // the relabeled support must be a noncrossing tree; the constructor
    // throws if not, which would indicate an internal inconsistency
    NoncrossingTree tree(static_cast<int>(cyc.size()), std::move(sub));
    out.push_back(MonomialComponent{cyc, std::move(relabel), std::move(tree)});
  }
  return out;
}

}  // namespace fk
