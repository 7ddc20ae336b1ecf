#ifndef FK_WORDS_HPP
#define FK_WORDS_HPP

#include <string>
#include <utility>
#include <vector>

#include "fk/graphs.hpp"
#include "fk/noncrossing.hpp"

namespace fk {

/// Bijection of [n], stored as the image table. Composition applies the
/// right factor first: compose(a, b)(x) = a(b(x)).
class Permutation {
 public:
  explicit Permutation(int n);  // identity
  static Permutation identity(int n) { return Permutation(n); }
  static Permutation transposition(int n, int i, int j);
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  static Permutation n_cycle(int n);  // (1 2 ... n)
  static Permutation from_images(std::vector<int> images);  // 1-indexed

  int size() const { return static_cast<int>(img_.size()); }
  int apply(int x) const { return img_[x - 1]; }
  Permutation inverse() const;
  static Permutation compose(const Permutation& a, const Permutation& b);

  /// Cycles including fixed points; each starts at its minimal element and
  /// follows successive images; cycles sorted by minimal element.
  std::vector<std::vector<int>> cycles() const;
  int cycle_count() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  std::string to_string() const;  // cycle notation

 private:
  std::vector<int> img_;
};

/// Word in the generators x_{ij}. Input pairs with i > j are normalized to
/// i < j with the sign flipped.
struct Monomial {
  int n = 0;
  std::vector<Edge> word;
  int sign = 1;

  Monomial() = default;
  Monomial(int n_, std::vector<std::pair<int, int>> letters);
  Monomial(int n_, std::vector<Edge> normalized_word, int sign_ = 1);
  std::string to_string() const;
};

int degree(const Monomial& p);
Permutation sn_degree(const Monomial& p);
Graph support(const Monomial& p);
SetPartition pi_degree(const Monomial& p);
bool is_simple(const Monomial& p);

/// True iff at every vertex the subsequence of letters through that vertex
/// matches the tree's clockwise edge order. Requires support(p) within t.
bool respects(const Monomial& p, const NoncrossingTree& t);

/// Word with support t respecting t, built right-to-left by peeling the
/// lex-least terminal edge of the shrinking forest.
Monomial canonical_monomial(const NoncrossingTree& t);

/// Foata-style layered normal form for commutation of letters with
/// disjoint index pairs.
Monomial commutation_normal_form(const Monomial& p);
bool commutation_equivalent(const Monomial& p, const Monomial& q);

/// One entry per cycle of the permutation degree: the cycle (minimal
/// element first), the relabeling into [k], and the induced noncrossing
/// tree on [k].
struct MonomialComponent {
  std::vector<int> cycle;
  std::vector<int> relabel;  // relabel[original vertex] = new label, 0 elsewhere
  NoncrossingTree tree;
};
std::vector<MonomialComponent> tree_of_simple_monomial(const Monomial& p);

}  // namespace fk

#endif
