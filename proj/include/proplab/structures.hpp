#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "proplab/graphs.hpp"

namespace proplab {

// A natural number or infinity. Infinity orders above every natural; taking
// the value of an infinite count throws rather than saturating.
class CountOrInf {
 public:
  CountOrInf() : finite_(false), value_(0) {}
  static CountOrInf infinity() { return CountOrInf(); }
  static CountOrInf of(std::uint64_t v) {
    CountOrInf c;
    c.finite_ = true;
    c.value_ = v;
    return c;
  }

  bool is_infinite() const { return !finite_; }
  std::uint64_t value() const;
  std::string to_string() const;

  friend bool operator==(const CountOrInf& a, const CountOrInf& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const CountOrInf& a, const CountOrInf& b) {
    if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (!a.finite_) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

 private:
  bool finite_;
  std::uint64_t value_;
};

enum class ComponentKind { IsolatedVertex, Tree, Cyclic };

struct Component {
  std::vector<int> vertices;  // ascending
  int edge_count = 0;
  ComponentKind kind = ComponentKind::IsolatedVertex;
};

struct ComponentReport {
  std::vector<Component> components;  // ordered by smallest vertex

  int count(ComponentKind kind) const;
  // Tree components (at least one edge).
  int tree_component_count() const { return count(ComponentKind::Tree); }
};

// Degree-0 vertices, ascending.
std::vector<int> isolated_vertices(const LabeledGraph& g);

// Partition of {1..n} into connected components. A component is an isolated
// vertex, a tree (edges = vertices - 1 >= 1), or cyclic (edges >= vertices).
ComponentReport classify_components(const LabeledGraph& g);

// Minimum degree over non-isolated vertices; infinity for the empty graph.
CountOrInf positive_min_degree(const LabeledGraph& g);

// The unique maximal subgraph whose positive minimum degree is >= k, obtained
// by repeatedly deleting all edges at vertices of positive degree < k.
LabeledGraph degree_truncation(const LabeledGraph& g, int k);

// Fewest edges over tree components; infinity when there are none.
CountOrInf positive_min_tree_size(const LabeledGraph& g);

// The unique maximal subgraph all of whose tree components have >= k edges:
// g minus the edges of every tree component with 1..k-1 edges.
LabeledGraph tree_truncation(const LabeledGraph& g, int k);

// The minimal graphs of f: 1-inputs all of whose proper subgraphs are
// 0-inputs. Forms an antichain under edge-set inclusion.
struct MinimalGraphSet {
  int n = 0;
  std::vector<LabeledGraph> graphs;  // ascending by edge mask
  CountOrInf min_positive_degree;    // min over members of positive_min_degree
  CountOrInf min_tree_size;          // min over members of positive_min_tree_size

  bool contains(const LabeledGraph& g) const;
};

// Exact computation via one lattice sweep marking every point that has a
// 1-input weakly below it. Requires a truth table, a non-trivial f, and
// f(empty) = 0 (normalize with complement first).
MinimalGraphSet minimal_graphs(const PropertyFunction& f);

// Trees T1..Tk on the shared vertex set: Ti is a tree with i edges, Tk is
// isomorphic to the target, and each step attaches one new leaf.
struct TreeConstructionSequence {
  std::vector<LabeledGraph> trees;
};

// Built by recording a leaf-removal order in reverse. The input must have
// exactly one non-trivial component and it must be a tree.
TreeConstructionSequence tree_construction_sequence(const LabeledGraph& t);

// Checks the three defining conditions of a construction sequence for target
// tree `t`; used by tests and by the extractor's assertions.
bool is_valid_tree_construction_sequence(const TreeConstructionSequence& seq,
                                         const LabeledGraph& t);

}  // namespace proplab
