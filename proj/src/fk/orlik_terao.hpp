#ifndef FK_ORLIK_TERAO_HPP
#define FK_ORLIK_TERAO_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fk/graphs.hpp"
#include "fk/rewrite.hpp"
#include "fk/words.hpp"

namespace fk {

/// Element of the Orlik-Terao algebra U_G, stored on the no-broken-circuit
/// basis: every key is an NBC edge subset under the module's edge order,
/// no zero coefficients.
class OTElement {
 public:
  explicit OTElement(int n) : n_(n) {}

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<uint64_t, Rational, MaskLexLess>& terms() const { return terms_; }

  void add(uint64_t subset_mask, const Rational& c);
  Rational coeff(const std::vector<Edge>& subset) const;

  OTElement& operator+=(const OTElement& o);
  OTElement& operator*=(const Rational& c);
  friend bool operator==(const OTElement& a, const OTElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const OTElement& a, const OTElement& b) { return !(a == b); }
  std::string to_string() const;

 private:
  int n_;
  std::map<uint64_t, Rational, MaskLexLess> terms_;
};

/// Signed dependence around a cycle: the p-th coefficient is +1 when the
/// cycle traverses edge (i_p, i_{p+1}) from its smaller to its larger
/// endpoint, -1 otherwise, so the signed incidence vectors sum to zero.
struct CircuitDependence {
  std::vector<int> cycle;   // vertices in traversal order
  std::vector<int> coeffs;  // +-1 per traversed edge

  static CircuitDependence from_cycle(const std::vector<int>& cycle_vertices);
  /// Verifies the signed incidence vectors sum to the zero vector.
  bool sums_to_zero(int n) const;
};

/// The m-term relation sum_p c_p * u_{C \ edge_p} = 0, with generators in
/// (smaller, larger) form. Terms are (edge-subset mask, coefficient).
struct OTRelation {
  int n = 0;
  std::vector<std::pair<uint64_t, int>> terms;
};
OTRelation circuit_relation(int n, const CircuitDependence& dep);

struct OTStrategy {
  enum class Kind { LexFirst, Random } kind = Kind::LexFirst;
  uint64_t seed = 0;
  static OTStrategy lex() { return {}; }
  static OTStrategy random(uint64_t seed) { return {Kind::Random, seed}; }
};

/// NBC expansion of the square-free monomial on the given edge subset;
/// zero when the subset has cyclic support. Broken circuits are eliminated
/// smallest-first by default; the result is strategy-independent.
OTElement reduce_monomial(const std::vector<Edge>& subset, const Graph& g,
                          const EdgeOrder& order, OTStrategy strategy = OTStrategy::lex());

/// Commutative product; generators square to zero and cyclic supports die.
OTElement multiply(const OTElement& a, const OTElement& b, const Graph& g);

/// All edge subsets containing no broken circuit, in lexicographic
/// edge-set order (grading by size is by popcount).
void enumerate_nbc(const Graph& g, const EdgeOrder& order,
                   const std::function<bool(const std::vector<Edge>&)>& visit);
std::vector<std::vector<Edge>> nbc_basis(const Graph& g, const EdgeOrder& order);
std::vector<long long> nbc_counts_by_size(const Graph& g, const EdgeOrder& order);

/// x_{ij} -> u_{ij}; words with repeated variables or cyclic support map
/// to zero; the result is NBC-reduced. Linear on tree elements.
OTElement abelianize(const TreeElement& e, const Graph& g);
OTElement abelianize(const Monomial& p, const Graph& g);

/// Hilbert series of U_G computed both from NBC counts and from the
/// chromatic polynomial; throws logic_error if the two disagree.
Polynomial ot_hilbert_series(const Graph& g);

}  // namespace fk

#endif
