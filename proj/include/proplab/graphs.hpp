#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "proplab/boolean_function.hpp"

namespace proplab {

// Unordered vertex pair, 1 <= a < b <= n.
struct VertexPair {
  int a = 0;
  int b = 0;
  bool operator==(const VertexPair&) const = default;
};

// Lexicographic bijection between coordinates 0..n(n-1)/2-1 and vertex pairs:
// {1,2} -> 0, {1,3} -> 1, ..., {n-1,n} -> m-1.
std::uint32_t edge_index(int n, int i, int j);
std::uint32_t edge_index(int n, VertexPair p);
VertexPair edge_unindex(int n, std::uint32_t coordinate);
std::uint32_t edge_arity(int n);

// A graph on vertex set {1..n}, encoded as an edge bit mask via edge_index.
struct LabeledGraph {
  int n = 0;
  std::uint64_t edges = 0;

  LabeledGraph() = default;
  LabeledGraph(int n, std::uint64_t edges);

  int edge_count() const { return std::popcount(edges); }
  bool has_edge(int i, int j) const {
    return (edges >> edge_index(n, i, j)) & 1ull;
  }
  LabeledGraph with_edge(int i, int j) const {
    return LabeledGraph(n, edges | (std::uint64_t{1} << edge_index(n, i, j)));
  }
  LabeledGraph without_edge(int i, int j) const {
    return LabeledGraph(n, edges & ~(std::uint64_t{1} << edge_index(n, i, j)));
  }
  int degree(int v) const;
  std::vector<VertexPair> edge_list() const;
  bool is_subgraph_of(const LabeledGraph& other) const {
    return n == other.n && (edges & ~other.edges) == 0;
  }

  bool operator==(const LabeledGraph&) const = default;
};

std::string to_string(const LabeledGraph& g);

// A bijection on {1..n}.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);
  // The cycle (1 2 ... n).
  static Permutation rotation(int n);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int v) const { return images_[static_cast<std::size_t>(v - 1)]; }
  // (p.compose(q))(v) = p(q(v)).
  Permutation compose(const Permutation& inner) const;
  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// Edge {i,j} of the result is {pi(i), pi(j)} for each edge {i,j} of g.
LabeledGraph apply_permutation(const LabeledGraph& g, const Permutation& pi);

// Coordinate map of the edge action: result[old index] = new index.
std::vector<std::uint32_t> edge_index_map(const Permutation& pi);

// Isomorphism-class identifier: the minimum edge bit mask over all vertex
// relabelings. Equal signatures iff isomorphic graphs.
struct CanonicalSignature {
  int n = 0;
  std::uint64_t bits = 0;

  std::string to_hex() const;
  auto operator<=>(const CanonicalSignature&) const = default;
};

// Branch-and-bound over vertex orderings, pruned by comparing the already
// determined high bits against the incumbent. n <= 9.
CanonicalSignature canonical_form(const LabeledGraph& g);

bool are_isomorphic(const LabeledGraph& g, const LabeledGraph& h);

struct IsoClass {
  CanonicalSignature signature;
  LabeledGraph representative;
};

// Canonical form of every graph mask on n vertices, built once per n by a
// sweep in mask order with orbit closure under the S_n generators. The class
// representatives are exactly the orbit minima. n <= 7.
class IsoClassTable {
 public:
  explicit IsoClassTable(int n);

  int n() const { return n_; }
  std::uint64_t canonical_of(std::uint64_t mask) const { return canon_[mask]; }
  // Index of a graph's class in the sorted representative list.
  std::uint32_t class_index_of(std::uint64_t mask) const { return class_index_[mask]; }
  const std::vector<std::uint64_t>& representatives() const { return reps_; }

 private:
  int n_;
  std::vector<std::uint32_t> canon_;
  std::vector<std::uint32_t> class_index_;
  std::vector<std::uint64_t> reps_;
};

// Shared per-n table, built lazily, write-once then read-only.
const IsoClassTable& iso_class_table(int n);

// Sorted, duplicate-free list of isomorphism classes with representatives.
std::vector<IsoClass> enumerate_iso_classes(int n);

// Truth table with f(G) = 1 iff canonical_form(G) is in the given set.
// Rejects signatures that are not canonical forms for this n.
PropertyFunction property_from_class_set(int n, const std::vector<CanonicalSignature>& classes);

// Invariance under the transposition (1 2) and the cycle (1 2 ... n), which
// generate S_n; equivalent to invariance under every relabeling.
bool is_graph_property(const PropertyFunction& f);

// f(x) <= f(y) whenever the edge set of x is contained in that of y.
bool is_monotone(const PropertyFunction& f);

}  // namespace proplab
