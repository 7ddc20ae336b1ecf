#ifndef FK_GRAPHS_HPP
#define FK_GRAPHS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fk/numeric.hpp"

namespace fk {

/// Size caps and error types shared across modules.
struct limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Always-on internal invariant check (survives release builds).
#define FK_CHECK(cond, msg)                        \
  do {                                             \
    if (!(cond)) throw std::logic_error(msg);      \
  } while (0)

/// Undirected edge on 1-indexed vertices, stored with u < v.
struct Edge {
  int u = 0, v = 0;
  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
  friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
  friend bool operator!=(const Edge& a, const Edge& b) { return !(a == b); }
  friend bool operator<(const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  }
  std::string to_string() const;
};

/// Simple graph on vertex set [n]. Edges are kept sorted lexicographically
/// and duplicate-free; construction validates endpoints.
class Graph {
 public:
  Graph(int n, std::vector<Edge> edges);
  static Graph complete(int n);
  static Graph path(int n);
  static Graph empty(int n) { return Graph(n, {}); }

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool has_edge(int i, int j) const;
  std::vector<std::vector<int>> adjacency() const;  // 1-indexed neighbor lists

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
};

/// Set partition of [n]; blocks are sorted internally and ordered by minimum.
class SetPartition {
 public:
  explicit SetPartition(std::vector<std::vector<int>> blocks);
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::string to_string() const;  // "123|45"
  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  std::vector<std::vector<int>> blocks_;
};

/// Total order on a fixed edge set; the library default is lexicographic
/// on (u, v), shared by the broken-circuit and rewrite machinery.
class EdgeOrder {
 public:
  static EdgeOrder lex(const Graph& g);
  explicit EdgeOrder(std::vector<Edge> edges_in_order);

  int rank(const Edge& e) const;  // throws if e is not in the order
  bool less(const Edge& a, const Edge& b) const { return rank(a) < rank(b); }
  const std::vector<Edge>& edges() const { return order_; }

 private:
  std::vector<Edge> order_;
};

/// Dense univariate polynomial with exact rational coefficients,
/// coefficient of t^k at index k; no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial monomial(const Rational& c, int k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational eval(const Rational& x) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

SetPartition connected_components(const Graph& g);
bool has_cycle(const Graph& g);

/// All simple cycles, each as a vertex list starting at its minimal vertex
/// with the smaller neighbor second; capped at n <= 12.
std::vector<std::vector<int>> simple_cycles(const Graph& g);

/// Chromatic polynomial by deletion-contraction with memoization.
Polynomial chromatic_polynomial(const Graph& g);

/// (-t)^n * chi(-1/t); rejects inputs whose transform has a negative or
/// non-integer coefficient.
Polynomial hilbert_from_chromatic(const Polynomial& chi, int n);

/// Each simple cycle minus its order-minimal edge, deduplicated and sorted.
std::vector<std::vector<Edge>> broken_circuits(const Graph& g, const EdgeOrder& order);

}  // namespace fk

#endif
