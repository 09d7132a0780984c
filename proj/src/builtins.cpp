#include "proplab/builtins.hpp"

#include <bit>
#include <stdexcept>

#include "proplab/structures.hpp"

namespace proplab {

namespace {

bool has_dominating_vertex(const LabeledGraph& g) {
  for (int v = 1; v <= g.n; ++v)
    if (g.degree(v) == g.n - 1) return true;
  return g.n == 1;
}

bool is_connected(const LabeledGraph& g) {
  // stack union-find over the edge bits; called per point in table builds
  int parent[12];
  for (int v = 1; v <= g.n; ++v) parent[v] = v;
  const auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int components = g.n;
  std::uint64_t rest = g.edges;
  while (rest) {
    const std::uint32_t c = static_cast<std::uint32_t>(std::countr_zero(rest));
    rest &= rest - 1;
    const VertexPair e = edge_unindex(g.n, c);
    const int ra = find(e.a), rb = find(e.b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

bool contains_triangle(const LabeledGraph& g) {
  for (int i = 1; i <= g.n; ++i)
    for (int j = i + 1; j <= g.n; ++j) {
      if (!g.has_edge(i, j)) continue;
      for (int k = j + 1; k <= g.n; ++k)
        if (g.has_edge(i, k) && g.has_edge(j, k)) return true;
    }
  return false;
}

bool matching_covers(const LabeledGraph& g, std::uint32_t covered) {
  // lowest uncovered vertex must be matched to an uncovered neighbour
  int v = 0;
  for (int w = 1; w <= g.n; ++w) {
    if (!(covered & (1u << w))) {
      v = w;
      break;
    }
  }
  if (v == 0) return true;
  for (int u = 1; u <= g.n; ++u) {
    if (u == v || (covered & (1u << u)) || !g.has_edge(v, u)) continue;
    if (matching_covers(g, covered | (1u << v) | (1u << u))) return true;
  }
  return false;
}

bool has_perfect_matching(const LabeledGraph& g) {
  if (g.n % 2 != 0) return false;
  return matching_covers(g, 0);
}

bool has_isolated_vertex(const LabeledGraph& g) {
  for (int v = 1; v <= g.n; ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

std::vector<BuiltinProperty> make_registry() {
  std::vector<BuiltinProperty> r;
  r.push_back({"degree-n-minus-1", "some vertex is adjacent to every other vertex", true,
               has_dominating_vertex, [](int n) { return n - 1; }});
  r.push_back({"has-edge", "at least one edge", true,
               [](const LabeledGraph& g) { return g.edges != 0; },
               [](int n) { return n * (n - 1) / 2; }});
  r.push_back({"edge-parity", "odd number of edges", false,
               [](const LabeledGraph& g) { return g.edge_count() % 2 == 1; },
               [](int n) { return n * (n - 1) / 2; }});
  r.push_back({"connected", "single connected component", true, is_connected, nullptr});
  r.push_back({"contains-triangle", "three mutually adjacent vertices", true,
               contains_triangle, nullptr});
  r.push_back({"min-degree-at-least-1", "no isolated vertex", true,
               [](const LabeledGraph& g) { return !has_isolated_vertex(g); }, nullptr});
  r.push_back({"perfect-matching", "a matching covering every vertex", true,
               has_perfect_matching, nullptr});
  r.push_back({"has-isolated-vertex", "some vertex has degree 0", false,
               has_isolated_vertex, nullptr});
  return r;
}

}  // namespace

const std::vector<BuiltinProperty>& builtin_registry() {
  static const std::vector<BuiltinProperty> registry = make_registry();
  return registry;
}

const BuiltinProperty* find_builtin(std::string_view name) {
  for (const BuiltinProperty& b : builtin_registry())
    if (b.name == name) return &b;
  return nullptr;
}

namespace {

PropertyFunction materialize(const BuiltinProperty& b, int n, bool force_oracle) {
  if (n < 1 || n > 11) throw std::invalid_argument("builtin_property: unsupported n");
  if (!force_oracle && n <= 7) {
    TruthTable t(edge_arity(n));
    const std::uint64_t size = t.size();
    for (std::uint64_t mask = 0; mask < size; ++mask)
      if (b.predicate(LabeledGraph(n, mask))) t.set(mask, true);
    return PropertyFunction::graph_from_table(n, std::move(t));
  }
  auto predicate = b.predicate;
  return PropertyFunction::graph_from_oracle(
      n, [n, predicate](std::uint64_t mask) { return predicate(LabeledGraph(n, mask)); });
}

}  // namespace

PropertyFunction builtin_property(std::string_view name, int n) {
  const BuiltinProperty* b = find_builtin(name);
  if (!b) throw std::invalid_argument("unknown builtin property: " + std::string(name));
  return materialize(*b, n, false);
}

PropertyFunction builtin_property_oracle(std::string_view name, int n) {
  const BuiltinProperty* b = find_builtin(name);
  if (!b) throw std::invalid_argument("unknown builtin property: " + std::string(name));
  return materialize(*b, n, true);
}

}  // namespace proplab
