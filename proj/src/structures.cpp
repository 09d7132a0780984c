#include "proplab/structures.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace proplab {

std::uint64_t CountOrInf::value() const {
  if (!finite_) throw std::domain_error("value of an infinite count");
  return value_;
}

std::string CountOrInf::to_string() const {
  return finite_ ? std::to_string(value_) : "inf";
}

int ComponentReport::count(ComponentKind kind) const {
  int c = 0;
  for (const Component& comp : components) c += comp.kind == kind;
  return c;
}

std::vector<int> isolated_vertices(const LabeledGraph& g) {
  std::vector<int> out;
  for (int v = 1; v <= g.n; ++v)
    if (g.degree(v) == 0) out.push_back(v);
  return out;
}

ComponentReport classify_components(const LabeledGraph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (const VertexPair& e : g.edge_list()) {
    const int ra = find(e.a), rb = find(e.b);
    if (ra != rb) parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
  }

  std::vector<std::vector<int>> members(static_cast<std::size_t>(g.n) + 1);
  for (int v = 1; v <= g.n; ++v) members[static_cast<std::size_t>(find(v))].push_back(v);
  std::vector<int> edge_counts(static_cast<std::size_t>(g.n) + 1, 0);
  for (const VertexPair& e : g.edge_list()) ++edge_counts[static_cast<std::size_t>(find(e.a))];

  ComponentReport report;
  for (int root = 1; root <= g.n; ++root) {
    auto& verts = members[static_cast<std::size_t>(root)];
    if (verts.empty()) continue;
    Component comp;
    comp.vertices = verts;
    comp.edge_count = edge_counts[static_cast<std::size_t>(root)];
    const int v = static_cast<int>(verts.size());
    if (comp.edge_count == 0)
      comp.kind = ComponentKind::IsolatedVertex;
    else if (comp.edge_count == v - 1)
      comp.kind = ComponentKind::Tree;
    else
      comp.kind = ComponentKind::Cyclic;
    report.components.push_back(std::move(comp));
  }
  return report;
}

CountOrInf positive_min_degree(const LabeledGraph& g) {
  CountOrInf best = CountOrInf::infinity();
  for (int v = 1; v <= g.n; ++v) {
    const int d = g.degree(v);
    if (d > 0 && CountOrInf::of(static_cast<std::uint64_t>(d)) < best)
      best = CountOrInf::of(static_cast<std::uint64_t>(d));
  }
  return best;
}

LabeledGraph degree_truncation(const LabeledGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("degree_truncation: k must be >= 1");
  LabeledGraph h = g;
  for (;;) {
    std::uint64_t doomed = 0;
    for (int v = 1; v <= h.n; ++v) {
      const int d = h.degree(v);
      if (d == 0 || d >= k) continue;
      for (int u = 1; u <= h.n; ++u)
        if (u != v && h.has_edge(v, u))
          doomed |= std::uint64_t{1} << edge_index(h.n, v, u);
    }
    if (doomed == 0) return h;
    h = LabeledGraph(h.n, h.edges & ~doomed);
  }
}

CountOrInf positive_min_tree_size(const LabeledGraph& g) {
  CountOrInf best = CountOrInf::infinity();
  for (const Component& comp : classify_components(g).components) {
    if (comp.kind != ComponentKind::Tree) continue;
    const CountOrInf size = CountOrInf::of(static_cast<std::uint64_t>(comp.edge_count));
    if (size < best) best = size;
  }
  return best;
}

LabeledGraph tree_truncation(const LabeledGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("tree_truncation: k must be >= 1");
  std::uint64_t doomed = 0;
  for (const Component& comp : classify_components(g).components) {
    if (comp.kind != ComponentKind::Tree || comp.edge_count >= k) continue;
    for (std::size_t i = 0; i < comp.vertices.size(); ++i)
      for (std::size_t j = i + 1; j < comp.vertices.size(); ++j)
        if (g.has_edge(comp.vertices[i], comp.vertices[j]))
          doomed |= std::uint64_t{1} << edge_index(g.n, comp.vertices[i], comp.vertices[j]);
  }
  return LabeledGraph(g.n, g.edges & ~doomed);
}

bool MinimalGraphSet::contains(const LabeledGraph& g) const {
  if (g.n != n) return false;
  return std::binary_search(graphs.begin(), graphs.end(), g,
                            [](const LabeledGraph& a, const LabeledGraph& b) {
                              return a.edges < b.edges;
                            });
}

MinimalGraphSet minimal_graphs(const PropertyFunction& f) {
  if (!f.has_table()) throw std::invalid_argument("minimal_graphs requires a truth table");
  if (!f.is_graph_function()) throw std::invalid_argument("minimal_graphs: not a graph-shaped function");
  if (!is_nontrivial(f)) throw std::invalid_argument("minimal_graphs: f is constant");
  if (f.evaluate_mask(0))
    throw std::invalid_argument("minimal_graphs: f(empty) = 1; normalize with complement first");

  const std::uint32_t m = f.arity();
  // reach[x] = 1 iff some 1-input lies weakly below x.
  bits::SubsetBitset reach = f.table().words();
  bits::or_subset_closure(reach, m);
  bits::SubsetBitset parents;
  bits::parent_or(reach, m, parents);

  MinimalGraphSet out;
  out.n = f.vertex_count();
  out.min_positive_degree = CountOrInf::infinity();
  out.min_tree_size = CountOrInf::infinity();
  const auto& table = f.table().words();
  for (std::size_t w = 0; w < table.size(); ++w) {
    std::uint64_t v = table[w] & ~parents[w];
    if (w + 1 == table.size()) v &= bits::tail_mask(m);
    while (v) {
      const std::uint32_t bit = static_cast<std::uint32_t>(std::countr_zero(v));
      v &= v - 1;
      const LabeledGraph g(out.n, (static_cast<std::uint64_t>(w) << 6) | bit);
      out.min_positive_degree = std::min(out.min_positive_degree, positive_min_degree(g));
      out.min_tree_size = std::min(out.min_tree_size, positive_min_tree_size(g));
      out.graphs.push_back(g);
    }
  }
  return out;
}

TreeConstructionSequence tree_construction_sequence(const LabeledGraph& t) {
  const ComponentReport report = classify_components(t);
  const Component* tree = nullptr;
  for (const Component& comp : report.components) {
    if (comp.kind == ComponentKind::IsolatedVertex) continue;
    if (comp.kind == ComponentKind::Cyclic || tree != nullptr)
      throw std::invalid_argument(
          "tree_construction_sequence: input must have exactly one non-trivial component, a tree");
    tree = &comp;
  }
  if (tree == nullptr)
    throw std::invalid_argument("tree_construction_sequence: input has no edges");

  TreeConstructionSequence seq;
  LabeledGraph cur = t;
  std::vector<LabeledGraph> reversed{cur};
  // Peel the smallest-index leaf until a single edge remains.
  for (int remaining = tree->edge_count; remaining > 1; --remaining) {
    int leaf = 0, anchor = 0;
    for (int v = 1; v <= cur.n && leaf == 0; ++v) {
      if (cur.degree(v) != 1) continue;
      leaf = v;
      for (int u = 1; u <= cur.n; ++u)
        if (u != v && cur.has_edge(v, u)) anchor = u;
    }
    cur = cur.without_edge(leaf, anchor);
    reversed.push_back(cur);
  }
  seq.trees.assign(reversed.rbegin(), reversed.rend());
  return seq;
}

bool is_valid_tree_construction_sequence(const TreeConstructionSequence& seq,
                                         const LabeledGraph& t) {
  const CountOrInf target_size = positive_min_tree_size(t);
  if (target_size.is_infinite()) return false;
  const int k = static_cast<int>(target_size.value());
  if (static_cast<int>(seq.trees.size()) != k) return false;
  for (int i = 1; i <= k; ++i) {
    const LabeledGraph& g = seq.trees[static_cast<std::size_t>(i - 1)];
    if (g.edge_count() != i) return false;
    const ComponentReport report = classify_components(g);
    int nontrivial = 0;
    for (const Component& comp : report.components) {
      if (comp.kind == ComponentKind::Cyclic) return false;
      if (comp.kind == ComponentKind::Tree) ++nontrivial;
    }
    if (nontrivial != 1) return false;
  }
  if (!are_isomorphic(seq.trees.back(), t)) return false;
  for (int i = 0; i + 1 < k; ++i) {
    const LabeledGraph& a = seq.trees[static_cast<std::size_t>(i)];
    const LabeledGraph& b = seq.trees[static_cast<std::size_t>(i + 1)];
    const std::uint64_t added = b.edges & ~a.edges;
    if ((a.edges & ~b.edges) != 0 || std::popcount(added) != 1) return false;
    const VertexPair e = edge_unindex(a.n, static_cast<std::uint32_t>(std::countr_zero(added)));
    // exactly one endpoint is new, the other already in the tree
    const bool a_in = a.degree(e.a) > 0, b_in = a.degree(e.b) > 0;
    if (a_in == b_in) return false;
  }
  return true;
}

}  // namespace proplab
