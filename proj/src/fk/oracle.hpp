#ifndef FK_ORACLE_HPP
#define FK_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "fk/graphs.hpp"
#include "fk/words.hpp"

namespace fk {

/// All words of a fixed degree and permutation degree over the K_n (or a
/// restricted) generator set, with an index for coordinate lookups.
struct WordSpace {
  int n = 0;
  int d = 0;
  std::vector<int> sigma_images;                 // target permutation
  std::vector<std::vector<uint8_t>> words;       // edge indices, lex order
  std::unordered_map<uint64_t, int> index;       // packed word -> coordinate

  static uint64_t pack(const std::vector<uint8_t>& w);
  std::optional<int> find(const std::vector<uint8_t>& w) const;
};

/// Words enumerated in lexicographic order; caps: d <= 8 and at most 10^6
/// words. `restrict_to` limits the alphabet to that graph's edges.
WordSpace enumerate_words(int n, const Permutation& sigma, int d,
                          const Graph* restrict_to = nullptr);

/// Sparse integer row: (column, coefficient) pairs sorted by column.
struct SparseRow {
  std::vector<std::pair<int, Rational>> entries;
  size_t support() const { return entries.size(); }
};

/// Local relation translates inside the word space: commuting swaps,
/// sign-normalized triangle rewrites, and squares, one row per instance,
/// deduplicated.
std::vector<SparseRow> relation_span(const WordSpace& ws);

/// Incremental exact echelon form (integer rows, fraction-free updates,
/// content-normalized); pivot processing order is the insertion order.
/// Existing pivot rows are never modified, so a later state can be rolled
/// back to an earlier mark cheaply.
class Echelon {
 public:
  explicit Echelon(int cols) : cols_(cols), pivot_of_col_(cols, -1) {}

  /// Reduces the row against current pivots; returns true (and keeps the
  /// reduced row as a new pivot) when it is independent.
  bool insert(SparseRow row);
  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

  size_t mark() const { return rows_.size(); }
  void rollback(size_t mark);

 private:
  int cols_;
  std::vector<SparseRow> rows_;
  std::vector<int> pivot_of_col_;
};

/// Reusable oracle for one graded component: the K_n word space of the
/// given degree and permutation degree plus the echelon of its relation
/// translates, built once. Graph dimensions are rank differences against
/// that base (insert the graph's word units, count new pivots, roll back).
class ComponentOracle {
 public:
  ComponentOracle(int n, const Permutation& sigma, int d);

  long long dimension(const Graph& g) const;
  long long relation_rank() const { return relation_rank_; }
  const WordSpace& words() const { return space_; }

 private:
  WordSpace space_;
  mutable Echelon ech_;  // base pivots are immutable; probes roll back
  long long relation_rank_ = 0;
};

/// dim of the simple component indexed by sigma (an n-cycle) of the
/// subalgebra generated by g's edges, by exact elimination over the full
/// K_n word space.
long long component_dimension(const Graph& g, const Permutation& sigma);

/// Degree-d dimension of the commutative quotient: forests of g with d
/// edges modulo all monomial multiples of the circuit relations.
long long ab_component_dimension(const Graph& g, int d);

}  // namespace fk

#endif
