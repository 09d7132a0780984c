#include <doctest.h>

#include <random>
#include <set>

#include "proplab/graphs.hpp"
#include "proplab/builtins.hpp"
#include "helpers.hpp"

using namespace proplab;
using namespace proplab::testing;

namespace {

LabeledGraph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  LabeledGraph g(n, 0);
  for (const auto& [a, b] : edges) g = g.with_edge(a, b);
  return g;
}

Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

}  // namespace

TEST_CASE("edge indexing is the lexicographic bijection") {
  CHECK(edge_index(4, 1, 2) == 0);
  CHECK(edge_index(4, 1, 3) == 1);
  CHECK(edge_index(4, 1, 4) == 2);
  CHECK(edge_index(4, 2, 3) == 3);
  CHECK(edge_index(4, 2, 4) == 4);
  CHECK(edge_index(4, 3, 4) == 5);
  CHECK(edge_unindex(4, 5) == VertexPair{3, 4});

  for (int n = 2; n <= 8; ++n)
    for (std::uint32_t c = 0; c < edge_arity(n); ++c) {
      const VertexPair p = edge_unindex(n, c);
      CHECK(edge_index(n, p) == c);
      CHECK(p.a < p.b);
    }

  CHECK_THROWS_AS(edge_index(4, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(edge_index(4, 1, 5), std::out_of_range);
  CHECK_THROWS_AS(edge_unindex(4, 6), std::out_of_range);
}

TEST_CASE("apply_permutation pins the action convention") {
  // triangle {12,13,23} on n=4 under the transposition (3 4)
  const LabeledGraph triangle = from_edges(4, {{1, 2}, {1, 3}, {2, 3}});
  const LabeledGraph image = apply_permutation(triangle, Permutation::transposition(4, 3, 4));
  CHECK(image == from_edges(4, {{1, 2}, {1, 4}, {2, 4}}));

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const LabeledGraph g(5, rng() & ((1u << 10) - 1));
    CHECK(apply_permutation(g, Permutation::identity(5)) == g);

    const Permutation pi = random_permutation(5, rng);
    const Permutation sigma = random_permutation(5, rng);
    // group action law, checked against elementwise pair mapping
    const LabeledGraph lhs = apply_permutation(apply_permutation(g, sigma), pi);
    CHECK(lhs == apply_permutation(g, pi.compose(sigma)));
    LabeledGraph expected(5, 0);
    for (const VertexPair& e : g.edge_list())
      expected = expected.with_edge(pi(sigma(e.a)), pi(sigma(e.b)));
    CHECK(lhs == expected);
  }

  CHECK_THROWS_AS(apply_permutation(LabeledGraph(4, 0), Permutation::identity(5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 1, 3}), std::invalid_argument);
}

TEST_CASE("are_isomorphic") {
  const LabeledGraph path = from_edges(4, {{1, 2}, {2, 3}, {3, 4}});
  const LabeledGraph relabeled = from_edges(4, {{2, 4}, {4, 1}, {1, 3}});
  const LabeledGraph star = from_edges(4, {{1, 2}, {1, 3}, {1, 4}});
  CHECK(are_isomorphic(path, relabeled));
  CHECK_FALSE(are_isomorphic(path, star));
  CHECK_THROWS_AS(are_isomorphic(path, LabeledGraph(5, 0)), std::invalid_argument);

  std::mt19937_64 rng(37);
  for (int n = 3; n <= 6; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      const LabeledGraph g(n, rng() & ((std::uint64_t{1} << edge_arity(n)) - 1));
      CHECK(are_isomorphic(g, apply_permutation(g, random_permutation(n, rng))));
      const LabeledGraph h(n, rng() & ((std::uint64_t{1} << edge_arity(n)) - 1));
      CHECK(are_isomorphic(g, h) == naive_isomorphic(g, h));
    }
  }
}

TEST_CASE("canonical_form is the minimum over all relabelings") {
  // all single-edge graphs on n=3 share one signature
  std::set<std::uint64_t> sigs;
  for (std::uint32_t c = 0; c < 3; ++c)
    sigs.insert(canonical_form(LabeledGraph(3, std::uint64_t{1} << c)).bits);
  CHECK(sigs.size() == 1);

  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const LabeledGraph g(4, mask);
    CHECK(canonical_form(g).bits == naive_canonical_mask(g));
  }
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const LabeledGraph g(6, rng() & ((1u << 15) - 1));
    CHECK(canonical_form(g).bits == naive_canonical_mask(g));
  }

  // invariance under relabeling
  for (int trial = 0; trial < 20; ++trial) {
    const LabeledGraph g(5, rng() & ((1u << 10) - 1));
    CHECK(canonical_form(apply_permutation(g, random_permutation(5, rng))).bits ==
          canonical_form(g).bits);
  }

  CHECK_THROWS_AS(canonical_form(LabeledGraph(10, 0)), std::invalid_argument);
}

TEST_CASE("iso class enumeration") {
  const int expected[] = {0, 1, 2, 4, 11, 34};
  for (int n = 1; n <= 5; ++n)
    CHECK(enumerate_iso_classes(n).size() == static_cast<std::size_t>(expected[n]));

  // n=3 representatives: empty, one edge, two-edge path, triangle
  const auto classes3 = enumerate_iso_classes(3);
  std::vector<int> edge_counts;
  for (const IsoClass& c : classes3) edge_counts.push_back(c.representative.edge_count());
  CHECK(edge_counts == std::vector<int>{0, 1, 2, 3});

  // the representative's own canonical form is itself, and classes cover
  // every graph's canonical form exactly once
  for (int n = 2; n <= 5; ++n) {
    std::set<std::uint64_t> sigs;
    for (const IsoClass& c : enumerate_iso_classes(n)) {
      CHECK(canonical_form(c.representative).bits == c.signature.bits);
      sigs.insert(c.signature.bits);
    }
    CHECK(sigs.size() == enumerate_iso_classes(n).size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edge_arity(n)); ++mask)
      CHECK(sigs.count(iso_class_table(n).canonical_of(mask)) == 1);
  }

  CHECK_THROWS_AS(enumerate_iso_classes(8), std::invalid_argument);
}

TEST_CASE("iso class table agrees with branch-and-bound canonical form") {
  for (int n = 2; n <= 5; ++n) {
    const IsoClassTable& table = iso_class_table(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edge_arity(n)); ++mask)
      CHECK(table.canonical_of(mask) == canonical_form(LabeledGraph(n, mask)).bits);
  }
}

TEST_CASE("property_from_class_set") {
  const CanonicalSignature triangle = canonical_form(from_edges(4, {{1, 2}, {1, 3}, {2, 3}}));
  const PropertyFunction f = property_from_class_set(4, {triangle});
  int ones = 0;
  for (std::uint64_t mask = 0; mask < 64; ++mask) ones += f.evaluate_mask(mask);
  CHECK(ones == 4);  // the labeled triangles on 4 vertices
  CHECK(is_graph_property(f));

  const PropertyFunction empty_set = property_from_class_set(4, {});
  CHECK_FALSE(is_nontrivial(empty_set));
  std::vector<CanonicalSignature> all;
  for (const IsoClass& c : enumerate_iso_classes(4)) all.push_back(c.signature);
  const PropertyFunction full = property_from_class_set(4, all);
  CHECK(full.evaluate_mask(0) == 1);
  CHECK_FALSE(is_nontrivial(full));

  // a non-canonical mask is rejected: the path 1-2-3 is not its class minimum
  const LabeledGraph path = from_edges(4, {{1, 3}, {2, 3}});
  if (canonical_form(path).bits != path.edges)
    CHECK_THROWS_AS(property_from_class_set(4, {CanonicalSignature{4, path.edges}}),
                    std::invalid_argument);
  CHECK_THROWS_AS(property_from_class_set(4, {CanonicalSignature{5, 0}}), std::invalid_argument);
}

TEST_CASE("is_graph_property") {
  CHECK(is_graph_property(builtin_property("edge-parity", 4)));

  TruthTable t(edge_arity(4));
  t.set(1, true);  // indicator of the single labeled graph {1,2}
  CHECK_FALSE(is_graph_property(PropertyFunction::graph_from_table(4, std::move(t))));

  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 5; ++trial)
    CHECK(is_graph_property(property_from_class_set(4, random_class_subset(4, rng))));

  CHECK_THROWS_AS(is_graph_property(PropertyFunction::boolean_from_oracle(
                      6, [](std::uint64_t) { return false; })),
                  std::invalid_argument);
}

TEST_CASE("is_monotone") {
  CHECK(is_monotone(builtin_property("has-edge", 4)));
  CHECK_FALSE(is_monotone(builtin_property("edge-parity", 4)));
  CHECK_FALSE(is_monotone(builtin_property("has-isolated-vertex", 4)));
}
