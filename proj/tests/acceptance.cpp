// Acceptance suite: every criterion below runs at its stated tolerance and
// prints a single pass/fail line. Exact equality throughout; the listed
// time budgets are enforced as hard bounds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "fk/json_io.hpp"
#include "fk/noncrossing.hpp"
#include "fk/oracle.hpp"
#include "fk/orlik_terao.hpp"
#include "fk/prng.hpp"
#include "fk/rewrite.hpp"
#include "fk/verify.hpp"
#include "fk/words.hpp"

using namespace fk;

namespace {

constexpr uint64_t kSeed = 20240817;

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

bool report(const SuiteReport& r, std::string& detail) {
  for (const CheckResult& c : r.checks)
    if (!c.pass) {
      detail = c.name + ": expected " + std::to_string(c.expected) + " got " +
               std::to_string(c.got);
      return false;
    }
  detail = std::to_string(r.checks.size()) + " checks";
  return true;
}

// 1. Catalan dimensions: reduced-tree counts 2, 5, 14, 42 for 3..6 and
//    oracle dimensions 2, 5, 14 (plus 42 from the 1296-word run).
bool criterion_catalan(std::string& detail) {
  const long long expected[] = {2, 5, 14, 42};
  for (int k = 3; k <= 6; ++k)
    if (basis_dimension(Graph::complete(k)) != expected[k - 3]) {
      detail = "reduced-tree count mismatch at " + std::to_string(k);
      return false;
    }
  for (int k = 3; k <= 6; ++k) {
    long long dim = component_dimension(Graph::complete(k), Permutation::n_cycle(k));
    if (dim != expected[k - 3]) {
      detail = "oracle dimension mismatch at " + std::to_string(k) + ": got " +
               std::to_string(dim);
      return false;
    }
  }
  detail = "counts 2,5,14,42 and oracle 2,5,14,42";
  return true;
}

// 2. Hilbert series: NBC counts of K_n equal the coefficients of
//    (1+t)(1+2t)...(1+(n-1)t) with total n!; 50 random connected graphs
//    match the chromatic transform.
bool criterion_hilbert(std::string& detail) {
  for (int n = 3; n <= 6; ++n) {
    Graph kn = Graph::complete(n);
    auto counts = nbc_counts_by_size(kn, EdgeOrder::lex(kn));
    Polynomial expected(std::vector<Rational>{Rational(1)});
    for (int k = 1; k < n; ++k)
      expected = expected * Polynomial(std::vector<Rational>{Rational(1), Rational(k)});
    if (static_cast<int>(counts.size()) != expected.degree() + 1) {
      detail = "size mismatch at n=" + std::to_string(n);
      return false;
    }
    long long total = 0;
    for (size_t d = 0; d < counts.size(); ++d) {
      if (Rational(counts[d]) != expected.coeff(static_cast<int>(d))) {
        detail = "coefficient mismatch at n=" + std::to_string(n);
        return false;
      }
      total += counts[d];
    }
    long long factorial = 1;
    for (int k = 2; k <= n; ++k) factorial *= k;
    if (total != factorial) {
      detail = "total is not n! at n=" + std::to_string(n);
      return false;
    }
  }
  Prng rng(kSeed);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 3 + rng.below_int(4);  // 3..6
    Graph g = random_connected_graph(n, rng);
    auto counts = nbc_counts_by_size(g, EdgeOrder::lex(g));
    Polynomial h = hilbert_from_chromatic(chromatic_polynomial(g), n);
    for (int d = 0; d <= std::max<int>(h.degree(), static_cast<int>(counts.size()) - 1); ++d) {
      long long c = d < static_cast<int>(counts.size()) ? counts[d] : 0;
      if (Rational(c) != h.coeff(d)) {
        detail = "random graph mismatch in trial " + std::to_string(trial);
        return false;
      }
    }
  }
  detail = "K_3..K_6 product formula and 50 random connected graphs";
  return true;
}

// 3. Commutative-quotient dimensions match NBC counts for every connected
//    graph on up to five vertices and every degree.
bool criterion_quotient_dimensions(std::string& detail) {
  long long cases = 0;
  for (int k = 2; k <= 5; ++k) {
    const EdgeTable& tab = EdgeTable::get(k);
    for (uint64_t mask = 0; mask < (uint64_t{1} << tab.m); ++mask) {
      Graph g(k, tab.edges_of(mask));
      if (connected_components(g).blocks().size() != 1) continue;
      auto counts = nbc_counts_by_size(g, EdgeOrder::lex(g));
      for (int d = 0; d <= k; ++d) {  // one past the top degree: both sides vanish
        long long nbc = d < static_cast<int>(counts.size()) ? counts[d] : 0;
        if (ab_component_dimension(g, d) != nbc) {
          detail = "mismatch on a graph with " + std::to_string(k) + " vertices";
          return false;
        }
        ++cases;
      }
    }
  }
  detail = std::to_string(cases) + " (graph, degree) cases";
  return true;
}

// 4. Diamond identity: both first reductions of the star on four vertices
//    normalize to the same four-term element, byte-exact after canonical
//    serialization.
bool criterion_diamond(std::string& detail) {
  NoncrossingTree star(4, {Edge(1, 2), Edge(1, 3), Edge(1, 4)});
  Graph k4 = Graph::complete(4);
  auto sites = find_sites(star, k4);
  if (sites.size() != 2) {
    detail = "expected exactly two first steps";
    return false;
  }
  TreeElement a = reduce(apply_relation(star, sites[0]), k4);
  TreeElement b = reduce(apply_relation(star, sites[1]), k4);
  TreeElement expected(4);
  expected.add(NoncrossingTree(4, {Edge(1, 2), Edge(2, 3), Edge(3, 4)}), Rational(1));
  expected.add(NoncrossingTree(4, {Edge(1, 3), Edge(2, 3), Edge(3, 4)}), Rational(-1));
  expected.add(NoncrossingTree(4, {Edge(1, 2), Edge(2, 4), Edge(3, 4)}), Rational(-1));
  expected.add(NoncrossingTree(4, {Edge(1, 4), Edge(2, 4), Edge(3, 4)}), Rational(1));
  std::string ja = element_to_json(a);
  std::string jb = element_to_json(b);
  std::string je = element_to_json(expected);
  if (ja != jb || ja != je) {
    detail = "serializations differ";
    return false;
  }
  detail = "both orders give the four-term normal form";
  return true;
}

// 5. Confluence: twenty random strategies equal lex-first for every
//    noncrossing tree inside every connected graph on up to six vertices.
bool criterion_confluence(std::string& detail) {
  return report(verify_confluence(6, kSeed), detail);
}

// 6. Leading-term law: minimal term of the complete-graph expansion has
//    coefficient exactly one and the signature of the input tree.
bool criterion_leading_term(std::string& detail) {
  long long trees = 0;
  for (int n = 2; n <= 6; ++n) {
    bool ok = true;
    enumerate_noncrossing_trees(n, [&](const NoncrossingTree& t) {
      auto [lead, coeff] = leading_term(expand_complete(t));
      ++trees;
      ok = coeff == Rational(1) && tree_signature(lead) == tree_signature(t);
      return ok;
    });
    if (!ok) {
      detail = "violated at n=" + std::to_string(n);
      return false;
    }
  }
  detail = std::to_string(trees) + " trees";
  return true;
}

// 7. Signature suite: the 8-vertex reference value, injectivity, and the
//    monotonicity inequalities.
bool criterion_signature(std::string& detail) {
  return report(verify_signature(7, kSeed), detail);
}

// 8. Basis-oracle agreement, exhaustively on connected graphs up to five
//    vertices.
bool criterion_basis_oracle(std::string& detail) {
  long long graphs = 0;
  for (int k = 2; k <= 5; ++k) {
    ComponentOracle oracle(k, Permutation::n_cycle(k), k - 1);
    const EdgeTable& tab = EdgeTable::get(k);
    for (uint64_t mask = 0; mask < (uint64_t{1} << tab.m); ++mask) {
      Graph g(k, tab.edges_of(mask));
      if (connected_components(g).blocks().size() != 1) continue;
      ++graphs;
      if (basis_dimension(g) != oracle.dimension(g)) {
        detail = "disagreement on a graph with " + std::to_string(k) + " vertices";
        return false;
      }
    }
  }
  detail = std::to_string(graphs) + " connected graphs";
  return true;
}

// 9. Abelianization compatibility on a thousand seeded random elements.
bool criterion_abelian(std::string& detail) {
  return report(verify_abelian(6, kSeed), detail);
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "catalan-dimensions", 130.0, criterion_catalan},
      {2, "hilbert-series", 30.0, criterion_hilbert},
      {3, "quotient-dimensions", 120.0, criterion_quotient_dimensions},
      {4, "diamond-identity", 1.0, criterion_diamond},
      {5, "confluence", 300.0, criterion_confluence},
      {6, "leading-term-law", 120.0, criterion_leading_term},
      {7, "signature-suite", 120.0, criterion_signature},
      {8, "basis-oracle-agreement", 300.0, criterion_basis_oracle},
      {9, "abelianization-compatibility", 60.0, criterion_abelian},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = elapsed <= c.budget_seconds;
    bool pass = ok && in_budget;
    if (!pass) ++failures;
    std::printf("%s  %d. %-30s  %8.2fs  %s%s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                elapsed, detail.c_str(),
                ok && !in_budget ? "  [exceeded time budget]" : "");
  }
  if (failures == 0) {
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    return 0;
  }
  std::printf("acceptance: %d of %zu criteria FAILED\n", failures, criteria.size());
  return 1;
}
