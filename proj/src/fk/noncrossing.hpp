#ifndef FK_NONCROSSING_HPP
#define FK_NONCROSSING_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fk/graphs.hpp"

namespace fk {

/// Per-n lookup tables for the K_n edge universe: lexicographic edge
/// indexing into bit positions, crossing masks, and incidence masks.
/// Supports n <= 11 (55 edges fit a 64-bit mask).
struct EdgeTable {
  int n = 0;
  int m = 0;                                // n*(n-1)/2
  std::vector<Edge> edge_of;                // index -> edge, lex order
  std::vector<std::vector<int>> index_of;   // [u][v] -> index (u < v)
  std::vector<uint64_t> cross_mask;         // edges crossing each edge
  std::vector<uint64_t> incident_mask;      // per vertex, 1-indexed

  int index(int u, int v) const { return index_of[u][v]; }
  int index(const Edge& e) const { return index_of[e.u][e.v]; }
  uint64_t bit(const Edge& e) const { return uint64_t{1} << index(e); }
  uint64_t mask_of(const std::vector<Edge>& edges) const;
  std::vector<Edge> edges_of(uint64_t mask) const;

  static const EdgeTable& get(int n);
};

/// Compares equal-size edge sets as ascending edge sequences; this is the
/// "lexicographic edge set" order used for canonical output and strategy
/// tie-breaking. Works for sets of any sizes.
inline bool mask_lex_less(uint64_t a, uint64_t b) {
  if (a == b) return false;
  uint64_t diff = a ^ b;
  uint64_t low = diff & (~diff + 1);
  return (a & low) != 0;
}

/// Spanning tree on [n] whose edges, drawn as arcs above the line
/// 1..n, are pairwise noncrossing. Construction validates everything.
class NoncrossingTree {
 public:
  NoncrossingTree(int n, std::vector<Edge> edges);
  static NoncrossingTree from_mask(int n, uint64_t mask);  // trusted path, still checked

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  uint64_t mask() const { return mask_; }
  bool contains(const Edge& e) const;

  friend bool operator==(const NoncrossingTree& a, const NoncrossingTree& b) {
    return a.n_ == b.n_ && a.mask_ == b.mask_;
  }
  friend bool operator<(const NoncrossingTree& a, const NoncrossingTree& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : mask_lex_less(a.mask_, b.mask_);
  }
  std::string to_string() const;

 private:
  int n_;
  std::vector<Edge> edges_;
  uint64_t mask_ = 0;
};

/// Signature sequence (s_1, ..., s_n): s_1 = 1 and s_i never jumps by
/// more than one.
struct Signature {
  std::vector<int> s;
  friend bool operator==(const Signature& a, const Signature& b) { return a.s == b.s; }
  friend bool operator<(const Signature& a, const Signature& b) { return a.s < b.s; }
  std::string to_string() const;  // comma-separated
};

bool is_noncrossing(const Graph& g);

/// Edges at v in clockwise arc order: left neighbors by decreasing index,
/// then right neighbors by decreasing index.
std::vector<Edge> clockwise_order(const NoncrossingTree& t, int v);

/// Edges that are furthest clockwise at both endpoints. Nonempty for
/// n >= 2 and pairwise vertex-disjoint.
std::vector<Edge> terminal_edges(const NoncrossingTree& t);

Signature tree_signature(const NoncrossingTree& t);

/// True iff no relation site exists for t inside g (see fk/rewrite.hpp);
/// requires t to be a subgraph of g.
bool is_g_reduced(const NoncrossingTree& t, const Graph& g);

/// Visits every noncrossing tree on [n] in lexicographic edge-set order;
/// the visitor returns false to stop early. Capped at n <= 10.
void enumerate_noncrossing_trees(int n, const std::function<bool(const NoncrossingTree&)>& visit);
std::vector<NoncrossingTree> noncrossing_trees(int n);

/// Same stream filtered to spanning trees of g that are g-reduced.
void enumerate_g_reduced(const Graph& g, const std::function<bool(const NoncrossingTree&)>& visit);
std::vector<NoncrossingTree> g_reduced_trees(const Graph& g);

}  // namespace fk

#endif
