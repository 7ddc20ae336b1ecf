#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fk/prng.hpp"
#include "fk/rewrite.hpp"

using namespace fk;

namespace {

NoncrossingTree tree(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> es;
  for (auto [a, b] : edges) es.emplace_back(a, b);
  return NoncrossingTree(n, std::move(es));
}

Graph make(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> es;
  for (auto [a, b] : edges) es.emplace_back(a, b);
  return Graph(n, std::move(es));
}

TreeElement combination(
    int n, std::initializer_list<std::pair<long long, std::initializer_list<std::pair<int, int>>>>
               terms) {
  TreeElement e(n);
  for (const auto& [coeff, edges] : terms) {
    std::vector<Edge> es;
    for (auto [a, b] : edges) es.emplace_back(a, b);
    e.add(NoncrossingTree(n, std::move(es)), Rational(coeff));
  }
  return e;
}

}  // namespace

TEST_CASE("find_sites on the triangle") {
  Graph k3 = Graph::complete(3);
  auto sites = find_sites(tree(3, {{1, 2}, {1, 3}}), k3);
  REQUIRE(sites.size() == 1);
  CHECK(sites[0].vertices == std::vector<int>{1, 2, 3});
  CHECK(sites[0].tree_edge == Edge(1, 3));
  CHECK(sites[0].path_edges == std::vector<Edge>{Edge(1, 2)});
  CHECK(sites[0].new_edge == Edge(2, 3));

  CHECK(find_sites(tree(3, {{1, 3}, {2, 3}}), k3).empty());
  CHECK_THROWS_AS(find_sites(tree(3, {{1, 2}, {1, 3}}), Graph::path(3)),
                  std::invalid_argument);  // 13 outside the path graph
}

TEST_CASE("find_sites handles a length-four cycle site") {
  // 8-vertex tree whose reduction runs along the vertex run 1 < 4 < 6 < 8
  NoncrossingTree t =
      tree(8, {{1, 2}, {1, 4}, {1, 8}, {3, 4}, {4, 5}, {4, 6}, {7, 8}});
  auto sites = find_sites(t, Graph::complete(8));
  bool found = false;
  for (const auto& s : sites) {
    if (s.vertices == std::vector<int>{1, 4, 6, 8}) {
      found = true;
      CHECK(s.tree_edge == Edge(1, 8));
      CHECK(s.path_edges == std::vector<Edge>{Edge(1, 4), Edge(4, 6)});
      CHECK(s.new_edge == Edge(6, 8));
    }
  }
  CHECK(found);
  // sites are sorted by (i_m, i_{m-1}, m)
  for (size_t i = 0; i + 1 < sites.size(); ++i) {
    auto key = [](const ReductionSite& s) {
      return std::tuple<int, int, int>(s.vertices.back(), s.vertices[s.vertices.size() - 2],
                                       s.m());
    };
    CHECK(key(sites[i]) < key(sites[i + 1]));
  }
}

TEST_CASE("apply_relation on the triangle") {
  auto sites = find_sites(tree(3, {{1, 2}, {1, 3}}), Graph::complete(3));
  REQUIRE(sites.size() == 1);
  TreeElement out = apply_relation(tree(3, {{1, 2}, {1, 3}}), sites[0]);
  CHECK(out == combination(3, {{1, {{1, 2}, {2, 3}}}, {-1, {{1, 3}, {2, 3}}}}));
}

TEST_CASE("apply_relation on the length-four site") {
  NoncrossingTree t =
      tree(8, {{1, 2}, {1, 4}, {1, 8}, {3, 4}, {4, 5}, {4, 6}, {7, 8}});
  auto sites = find_sites(t, Graph::complete(8));
  const ReductionSite* site = nullptr;
  for (const auto& s : sites)
    if (s.vertices == std::vector<int>{1, 4, 6, 8}) site = &s;
  REQUIRE(site != nullptr);
  TreeElement out = apply_relation(t, *site);
  TreeElement expected = combination(
      8, {{1, {{1, 2}, {1, 4}, {3, 4}, {4, 5}, {4, 6}, {6, 8}, {7, 8}}},
          {-1, {{1, 2}, {1, 8}, {3, 4}, {4, 5}, {4, 6}, {6, 8}, {7, 8}}},
          {-1, {{1, 2}, {1, 4}, {1, 8}, {3, 4}, {4, 5}, {6, 8}, {7, 8}}}});
  CHECK(out == expected);
  // every output contains the new edge and is lexicographically larger
  for (const auto& [mask, c] : out.terms()) {
    CHECK((mask & EdgeTable::get(8).bit(Edge(6, 8))) != 0);
    CHECK(mask > t.mask());
    CHECK(mask_lex_less(t.mask(), mask));
  }
}

TEST_CASE("apply_relation validates sites") {
  ReductionSite bogus;
  bogus.vertices = {1, 2, 3};
  bogus.tree_edge = Edge(1, 3);
  bogus.path_edges = {Edge(1, 2)};
  bogus.new_edge = Edge(2, 3);
  CHECK_THROWS_AS(apply_relation(tree(3, {{1, 3}, {2, 3}}), bogus), std::invalid_argument);
}

TEST_CASE("reduce over the triangle") {
  Graph k3 = Graph::complete(3);
  TreeElement start = TreeElement::unit(tree(3, {{1, 2}, {1, 3}}));
  TreeElement nf = reduce(start, k3);
  CHECK(nf == combination(3, {{1, {{1, 2}, {2, 3}}}, {-1, {{1, 3}, {2, 3}}}}));
  // already-reduced elements are fixed points
  CHECK(reduce(nf, k3) == nf);
}

TEST_CASE("reduce the star over four vertices") {
  Graph k4 = Graph::complete(4);
  TreeElement start = TreeElement::unit(tree(4, {{1, 2}, {1, 3}, {1, 4}}));
  TreeElement expected = combination(4, {{1, {{1, 2}, {2, 3}, {3, 4}}},
                                         {-1, {{1, 3}, {2, 3}, {3, 4}}},
                                         {-1, {{1, 2}, {2, 4}, {3, 4}}},
                                         {1, {{1, 4}, {2, 4}, {3, 4}}}});
  CHECK(reduce(start, k4) == expected);
  CHECK(expand_complete(tree(4, {{1, 2}, {1, 3}, {1, 4}})) == expected);
}

TEST_CASE("diamond: both first steps join at the same normal form") {
  NoncrossingTree star = tree(4, {{1, 2}, {1, 3}, {1, 4}});
  Graph k4 = Graph::complete(4);
  auto sites = find_sites(star, k4);
  REQUIRE(sites.size() == 2);
  CHECK(sites[0].vertices == std::vector<int>{1, 2, 3});
  CHECK(sites[1].vertices == std::vector<int>{1, 3, 4});
  TreeElement via_first = reduce(apply_relation(star, sites[0]), k4);
  TreeElement via_second = reduce(apply_relation(star, sites[1]), k4);
  CHECK(via_first == via_second);
  CHECK(via_first == reduce(TreeElement::unit(star), k4));
}

TEST_CASE("reduce is linear and respects scalars") {
  Graph k4 = Graph::complete(4);
  TreeElement a = TreeElement::unit(tree(4, {{1, 2}, {1, 3}, {1, 4}}));
  TreeElement b = TreeElement::unit(tree(4, {{1, 4}, {2, 4}, {3, 4}}));
  TreeElement mix = a;
  mix *= Rational(3, 2);
  mix += b;
  TreeElement nf_mix = reduce(mix, k4);
  TreeElement check = reduce(a, k4);
  check *= Rational(3, 2);
  check += reduce(b, k4);
  CHECK(nf_mix == check);
}

TEST_CASE("expand_complete fixed points") {
  CHECK(expand_complete(tree(4, {{1, 2}, {2, 3}, {3, 4}})) ==
        combination(4, {{1, {{1, 2}, {2, 3}, {3, 4}}}}));
  CHECK(expand_complete(tree(3, {{1, 3}, {2, 3}})) ==
        combination(3, {{1, {{1, 3}, {2, 3}}}}));
}

TEST_CASE("normal forms contain only reduced trees") {
  Graph k5 = Graph::complete(5);
  Prng rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    auto trees = noncrossing_trees(5);
    TreeElement e(5);
    for (int t = 0; t < 3; ++t)
      e.add(trees[rng.below(trees.size())], Rational(1 + rng.below_int(5)));
    TreeElement nf = reduce(e, k5, ReduceStrategy::random(rng.next_u64()));
    for (const auto& [mask, c] : nf.terms())
      CHECK(is_g_reduced(NoncrossingTree::from_mask(5, mask), k5));
  }
}

TEST_CASE("leading term under the signature order") {
  TreeElement star_nf = expand_complete(tree(4, {{1, 2}, {1, 3}, {1, 4}}));
  auto [lead, coeff] = leading_term(star_nf);
  CHECK(lead.edges() == std::vector<Edge>{Edge(1, 2), Edge(2, 3), Edge(3, 4)});
  CHECK(coeff == Rational(1));
  CHECK(tree_signature(lead) == tree_signature(tree(4, {{1, 2}, {1, 3}, {1, 4}})));

  TreeElement single(3);
  single.add(tree(3, {{1, 3}, {2, 3}}), Rational(5));
  auto [t2, c2] = leading_term(single);
  CHECK(c2 == Rational(5));
  CHECK(t2.edges() == std::vector<Edge>{Edge(1, 3), Edge(2, 3)});

  CHECK_THROWS_AS(leading_term(TreeElement(3)), std::invalid_argument);
}

TEST_CASE("leading term law over complete graphs") {
  for (int n = 2; n <= 7; ++n) {
    enumerate_noncrossing_trees(n, [&](const NoncrossingTree& t) {
      auto [lead, coeff] = leading_term(expand_complete(t));
      CHECK(coeff == Rational(1));
      CHECK(tree_signature(lead) == tree_signature(t));
      return true;
    });
  }
}

TEST_CASE("strategy independence on complete graphs") {
  for (int n = 3; n <= 5; ++n) {
    Graph kn = Graph::complete(n);
    Prng rng(1234 + n);
    enumerate_noncrossing_trees(n, [&](const NoncrossingTree& t) {
      TreeElement lex = reduce(TreeElement::unit(t), kn);
      for (int k = 0; k < 5; ++k)
        CHECK(reduce(TreeElement::unit(t), kn, ReduceStrategy::random(rng.next_u64())) == lex);
      return true;
    });
  }
}

TEST_CASE("confluence fuzz") {
  CHECK(confluence_fuzz(Graph::complete(4), 100, 7).pass());
  CHECK(confluence_fuzz(Graph::complete(5), 100, 7).pass());
  auto vacuous = confluence_fuzz(make(4, {{1, 3}, {2, 4}}), 10, 1);
  CHECK(vacuous.pass());
  CHECK(vacuous.trials == 0);
  auto forest = confluence_fuzz(Graph::path(5), 10, 1);
  CHECK(forest.pass());
}

TEST_CASE("dimension by reduced-tree count") {
  CHECK(basis_dimension(Graph::complete(3)) == 2);
  CHECK(basis_dimension(Graph::complete(4)) == 5);
  CHECK(basis_dimension(Graph::complete(5)) == 14);
  CHECK(basis_dimension(Graph::path(6)) == 1);
  CHECK(basis_dimension(make(4, {{1, 3}, {2, 4}})) == 0);
  // connected, but its only spanning tree crosses
  CHECK(basis_dimension(make(4, {{1, 3}, {2, 4}, {1, 4}})) == 0);
}

TEST_CASE("reduce rejects trees outside the graph") {
  TreeElement e = TreeElement::unit(tree(3, {{1, 3}, {2, 3}}));
  CHECK_THROWS_AS(reduce(e, Graph::path(3)), std::invalid_argument);
}

TEST_CASE("fuzz and dimension caps") {
  CHECK_THROWS_AS(confluence_fuzz(Graph::complete(9), 1, 0), limit_error);
  CHECK_THROWS_AS(basis_dimension(Graph::complete(11)), limit_error);
}

namespace {

// reference reducer built from the public primitives: rescan from the start
// every step, rewrite the lex-least reducible tree at its first site
TreeElement naive_reduce(const TreeElement& e, const Graph& g) {
  TreeElement cur = e;
  for (;;) {
    bool rewrote = false;
    for (const auto& [mask, coeff] : cur.terms()) {
      NoncrossingTree t = NoncrossingTree::from_mask(cur.n(), mask);
      auto sites = find_sites(t, g);
      if (sites.empty()) continue;
      TreeElement rhs = apply_relation(t, sites[0]);
      rhs *= coeff;
      cur.add(mask, -coeff);
      cur += rhs;
      rewrote = true;
      break;
    }
    if (!rewrote) return cur;
  }
}

}  // namespace

TEST_CASE("optimized reduce matches the naive reference") {
  Prng rng(1618);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 3 + rng.below_int(3);  // 3..5
    const EdgeTable& tab = EdgeTable::get(n);
    auto trees = noncrossing_trees(n);
    // random supergraph of a random tree keeps the element inside g
    const NoncrossingTree& base = trees[rng.below(trees.size())];
    uint64_t gmask = base.mask();
    for (int idx = 0; idx < tab.m; ++idx)
      if (rng.coin()) gmask |= uint64_t{1} << idx;
    Graph g(n, tab.edges_of(gmask));
    TreeElement e(n);
    e.add(base, Rational(1 + rng.below_int(3)));
    for (const NoncrossingTree& t : trees)
      if ((t.mask() & ~gmask) == 0 && rng.below(4) == 0)
        e.add(t, Rational(static_cast<long long>(rng.below(7)) - 3));
    CHECK(reduce(e, g) == naive_reduce(e, g));
  }
}

TEST_CASE("tree element bookkeeping") {
  TreeElement e(3);
  NoncrossingTree t = tree(3, {{1, 2}, {2, 3}});
  e.add(t, Rational(1, 2));
  e.add(t, Rational(1, 2));
  CHECK(e.coeff(t) == Rational(1));
  e.add(t, Rational(-1));
  CHECK(e.is_zero());
  CHECK(e.all_integer());
  e.add(t, Rational(1, 3));
  CHECK_FALSE(e.all_integer());
  CHECK_THROWS_AS(e.add(tree(4, {{1, 2}, {2, 3}, {3, 4}}), Rational(1)), std::invalid_argument);
}
