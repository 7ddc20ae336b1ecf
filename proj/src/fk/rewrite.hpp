#ifndef FK_REWRITE_HPP
#define FK_REWRITE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fk/graphs.hpp"
#include "fk/noncrossing.hpp"
#include "fk/numeric.hpp"

namespace fk {

struct MaskLexLess {
  bool operator()(uint64_t a, uint64_t b) const { return mask_lex_less(a, b); }
};

/// Exact-rational linear combination of noncrossing trees on a shared
/// vertex set [n]. Zero coefficients are never stored, so equality is
/// structural; iteration follows the lexicographic edge-set order.
class TreeElement {
 public:
  explicit TreeElement(int n) : n_(n) {}
  static TreeElement unit(const NoncrossingTree& t);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<uint64_t, Rational, MaskLexLess>& terms() const { return terms_; }

  void add(uint64_t tree_mask, const Rational& c);
  void add(const NoncrossingTree& t, const Rational& c);
  Rational coeff(const NoncrossingTree& t) const;

  TreeElement& operator+=(const TreeElement& o);
  TreeElement& operator*=(const Rational& c);

  bool all_integer() const;
  friend bool operator==(const TreeElement& a, const TreeElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const TreeElement& a, const TreeElement& b) { return !(a == b); }
  std::string to_string() const;

 private:
  int n_;
  std::map<uint64_t, Rational, MaskLexLess> terms_;
};

/// One admissible rewrite of a tree: an increasing vertex run
/// i_1 < ... < i_m with the long edge (i_1, i_m) and the path
/// (i_1, i_2), ..., (i_{m-2}, i_{m-1}) in the tree, a new edge
/// (i_{m-1}, i_m) in the ambient graph, and tree + new edge noncrossing.
struct ReductionSite {
  std::vector<int> vertices;  // i_1 .. i_m
  Edge tree_edge;             // (i_1, i_m)
  std::vector<Edge> path_edges;
  Edge new_edge;              // (i_{m-1}, i_m)
  int m() const { return static_cast<int>(vertices.size()); }
};

/// All sites of t inside g, sorted by (i_m, i_{m-1}, m) ascending.
/// Empty exactly when t is g-reduced.
std::vector<ReductionSite> find_sites(const NoncrossingTree& t, const Graph& g);

/// The tree-level three-or-more-term relation: rewrites x_t into
/// x_{T_1} - x_{T_2} - ... - x_{T_{m-1}} over H = t + new edge.
/// Every output tree contains the new edge and is lexicographically
/// strictly larger than t.
TreeElement apply_relation(const NoncrossingTree& t, const ReductionSite& site);

struct ReduceStrategy {
  enum class Kind { LexFirst, Random } kind = Kind::LexFirst;
  uint64_t seed = 0;
  static ReduceStrategy lex() { return {}; }
  static ReduceStrategy random(uint64_t seed) { return {Kind::Random, seed}; }
};

/// Rewrites until every tree is g-reduced. The result is independent of
/// the strategy; lex-first is the reproducible default.
TreeElement reduce(const TreeElement& e, const Graph& g,
                   ReduceStrategy strategy = ReduceStrategy::lex());

/// Normal form of a single tree over the complete graph on its vertices.
TreeElement expand_complete(const NoncrossingTree& t);

/// Signature order: compare signatures lexicographically, break ties by
/// lexicographic edge set. Returns true if a precedes b.
bool signature_prec(const NoncrossingTree& a, const NoncrossingTree& b);

/// The minimal term under the signature order, with its coefficient.
std::pair<NoncrossingTree, Rational> leading_term(const TreeElement& e);

struct ConfluenceReport {
  int trials = 0;
  int failures = 0;
  std::string first_counterexample;  // empty when clean
  bool pass() const { return failures == 0; }
};

/// Random spanning trees of g reduced under random strategy pairs;
/// disagreements are reported as data, not thrown.
ConfluenceReport confluence_fuzz(const Graph& g, int trials, uint64_t seed);

/// Number of g-reduced noncrossing trees, i.e. the dimension of the
/// graded component indexed by the increasing n-cycle.
long long basis_dimension(const Graph& g);

}  // namespace fk

#endif
