#ifndef FK_VERIFY_HPP
#define FK_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fk/graphs.hpp"

namespace fk {

struct CheckResult {
  std::string name;
  long long expected = 0;
  long long got = 0;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass() const;
  /// One JSON object per check: {"check":..., "expected":..., "got":..., "pass":...}
  std::string to_jsonl() const;
  std::string to_text() const;
};

/// Catalan dimensions: counts of complete-graph reduced trees for
/// 3 <= k <= min(n, 6) and oracle dimensions for 3 <= k <= min(n, 6).
SuiteReport verify_catalan(int n);

/// Strategy independence: for every noncrossing tree inside every
/// connected graph on up to n vertices, twenty random-strategy normal
/// forms match the lex-first one.
SuiteReport verify_confluence(int n, uint64_t seed);

/// Signature checks: the 8-vertex reference value, injectivity on reduced
/// trees (exhaustive through 5 vertices, 200 random graphs at 6 and 7),
/// and the monotonicity inequalities through n vertices.
SuiteReport verify_signature(int n, uint64_t seed);

/// Basis-oracle agreement on all connected graphs through n vertices,
/// plus commutative-quotient dimensions against NBC counts.
SuiteReport verify_oracle(int n);

/// abelianize(reduce(e)) == abelianize(e) on 1000 seeded random elements.
SuiteReport verify_abelian(int n, uint64_t seed);

/// Default size for a suite when the caller does not pass one.
int default_suite_size(const std::string& suite);

/// Dispatch by suite name: catalan | confluence | signature | oracle | abelian.
SuiteReport run_suite(const std::string& suite, int n, uint64_t seed);

/// Deterministic random graph on [n] (each edge an independent coin flip);
/// used by the verification suites and tests.
Graph random_graph(int n, class Prng& rng);
Graph random_connected_graph(int n, class Prng& rng);

}  // namespace fk

#endif
