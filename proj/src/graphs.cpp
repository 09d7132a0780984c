#include "proplab/graphs.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace proplab {

namespace {

constexpr int kMaxVertices = 11;  // keeps every edge mask inside 64 bits

void check_vertex_count(int n) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("vertex count out of range [1, 11]");
}

}  // namespace

std::uint32_t edge_arity(int n) {
  check_vertex_count(n);
  return static_cast<std::uint32_t>(n) * (n - 1) / 2;
}

std::uint32_t edge_index(int n, int i, int j) {
  check_vertex_count(n);
  if (i == j) throw std::invalid_argument("edge_index: endpoints coincide");
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n) throw std::out_of_range("edge_index: vertex out of range");
  const std::uint32_t block = static_cast<std::uint32_t>(i - 1) * n -
                              static_cast<std::uint32_t>(i - 1) * i / 2;
  return block + static_cast<std::uint32_t>(j - i - 1);
}

std::uint32_t edge_index(int n, VertexPair p) { return edge_index(n, p.a, p.b); }

VertexPair edge_unindex(int n, std::uint32_t coordinate) {
  if (coordinate >= edge_arity(n)) throw std::out_of_range("edge_unindex: coordinate out of range");
  int i = 1;
  std::uint32_t rest = coordinate;
  while (rest >= static_cast<std::uint32_t>(n - i)) {
    rest -= static_cast<std::uint32_t>(n - i);
    ++i;
  }
  return VertexPair{i, i + 1 + static_cast<int>(rest)};
}

LabeledGraph::LabeledGraph(int n, std::uint64_t edges) : n(n), edges(edges) {
  const std::uint32_t m = edge_arity(n);
  if (m < 64 && (edges >> m) != 0)
    throw std::invalid_argument("edge mask has bits above n(n-1)/2");
}

int LabeledGraph::degree(int v) const {
  if (v < 1 || v > n) throw std::out_of_range("degree: vertex out of range");
  int d = 0;
  for (int u = 1; u <= n; ++u)
    if (u != v && has_edge(v, u)) ++d;
  return d;
}

std::vector<VertexPair> LabeledGraph::edge_list() const {
  std::vector<VertexPair> out;
  std::uint64_t rest = edges;
  while (rest) {
    const std::uint32_t c = static_cast<std::uint32_t>(std::countr_zero(rest));
    rest &= rest - 1;
    out.push_back(edge_unindex(n, c));
  }
  return out;
}

std::string to_string(const LabeledGraph& g) {
  std::ostringstream os;
  os << "n=" << g.n << " {";
  bool first = true;
  for (const VertexPair& e : g.edge_list()) {
    if (!first) os << ",";
    first = false;
    os << "{" << e.a << "," << e.b << "}";
  }
  os << "}";
  return os.str();
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  check_vertex_count(n);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("permutation images are not a bijection on {1..n}");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p = identity(n);
  if (a < 1 || a > n || b < 1 || b > n) throw std::out_of_range("transposition: vertex out of range");
  std::swap(p.images_[static_cast<std::size_t>(a - 1)], p.images_[static_cast<std::size_t>(b - 1)]);
  return p;
}

Permutation Permutation::rotation(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) im[static_cast<std::size_t>(i - 1)] = i % n + 1;
  return Permutation(std::move(im));
}

Permutation Permutation::compose(const Permutation& inner) const {
  if (n() != inner.n()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> im(static_cast<std::size_t>(n()));
  for (int v = 1; v <= n(); ++v) im[static_cast<std::size_t>(v - 1)] = (*this)(inner(v));
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(static_cast<std::size_t>(n()));
  for (int v = 1; v <= n(); ++v) im[static_cast<std::size_t>((*this)(v)-1)] = v;
  return Permutation(std::move(im));
}

LabeledGraph apply_permutation(const LabeledGraph& g, const Permutation& pi) {
  if (g.n != pi.n()) throw std::invalid_argument("apply_permutation: size mismatch");
  std::uint64_t out = 0;
  std::uint64_t rest = g.edges;
  while (rest) {
    const std::uint32_t c = static_cast<std::uint32_t>(std::countr_zero(rest));
    rest &= rest - 1;
    const VertexPair e = edge_unindex(g.n, c);
    out |= std::uint64_t{1} << edge_index(g.n, pi(e.a), pi(e.b));
  }
  return LabeledGraph(g.n, out);
}

std::vector<std::uint32_t> edge_index_map(const Permutation& pi) {
  const int n = pi.n();
  const std::uint32_t m = edge_arity(n);
  std::vector<std::uint32_t> map(m);
  for (std::uint32_t c = 0; c < m; ++c) {
    const VertexPair e = edge_unindex(n, c);
    map[c] = edge_index(n, pi(e.a), pi(e.b));
  }
  return map;
}

std::string CanonicalSignature::to_hex() const {
  std::ostringstream os;
  os << std::hex << bits;
  return os.str();
}

namespace {

// Minimum-mask search. Positions are filled from n down to 1; placing a
// vertex at position k determines exactly the mask bits for pairs {k, j},
// j > k, which are the most significant still-open bits. A branch dies as
// soon as its determined high bits exceed the incumbent's.
struct CanonSearch {
  int n = 0;
  std::uint32_t m = 0;
  std::vector<std::uint64_t> adj;        // adj[v] = neighbour bit set (bit v-1)
  std::vector<int> order;                // candidate vertices, low degree first
  std::vector<std::uint32_t> offset;     // offset[k] = first bit of block k
  std::vector<int> assign;               // assign[k] = vertex placed at position k
  std::uint64_t best = ~0ull;

  void run(int k, std::uint64_t partial, std::uint64_t used) {
    if (k == 0) {
      best = std::min(best, partial);
      return;
    }
    for (const int v : order) {
      if (used & (std::uint64_t{1} << (v - 1))) continue;
      std::uint64_t bits = 0;
      for (int j = k + 1; j <= n; ++j) {
        if (adj[static_cast<std::size_t>(v)] &
            (std::uint64_t{1} << (assign[static_cast<std::size_t>(j)] - 1)))
          bits |= std::uint64_t{1} << (offset[static_cast<std::size_t>(k)] +
                                       static_cast<std::uint32_t>(j - k - 1));
      }
      const std::uint64_t next = partial | bits;
      const std::uint64_t incumbent_high =
          k == n ? 0 : (best >> offset[static_cast<std::size_t>(k)]) << offset[static_cast<std::size_t>(k)];
      if (next > incumbent_high) continue;
      assign[static_cast<std::size_t>(k)] = v;
      run(k - 1, next, used | (std::uint64_t{1} << (v - 1)));
    }
  }
};

std::uint64_t canonical_mask(const LabeledGraph& g) {
  const int n = g.n;
  const std::uint32_t m = edge_arity(n);
  if (g.edges == 0) return 0;
  if (m < 64 && g.edges == (std::uint64_t{1} << m) - 1) return g.edges;

  CanonSearch s;
  s.n = n;
  s.m = m;
  s.adj.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const VertexPair& e : g.edge_list()) {
    s.adj[static_cast<std::size_t>(e.a)] |= std::uint64_t{1} << (e.b - 1);
    s.adj[static_cast<std::size_t>(e.b)] |= std::uint64_t{1} << (e.a - 1);
  }
  s.order.resize(static_cast<std::size_t>(n));
  std::iota(s.order.begin(), s.order.end(), 1);
  std::stable_sort(s.order.begin(), s.order.end(), [&](int a, int b) {
    return std::popcount(s.adj[static_cast<std::size_t>(a)]) <
           std::popcount(s.adj[static_cast<std::size_t>(b)]);
  });
  s.offset.assign(static_cast<std::size_t>(n) + 1, m);
  for (int k = 1; k < n; ++k) s.offset[static_cast<std::size_t>(k)] = edge_index(n, k, k + 1);
  s.assign.assign(static_cast<std::size_t>(n) + 1, 0);

  // Greedy incumbent: low-degree vertices take the high positions.
  {
    std::uint64_t mask = 0;
    std::vector<int> pos(static_cast<std::size_t>(n) + 1);
    for (int k = n, idx = 0; k >= 1; --k, ++idx) pos[static_cast<std::size_t>(k)] = s.order[static_cast<std::size_t>(idx)];
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        if (g.has_edge(pos[static_cast<std::size_t>(a)], pos[static_cast<std::size_t>(b)]))
          mask |= std::uint64_t{1} << edge_index(n, a, b);
    s.best = mask;
  }

  s.run(n, 0, 0);
  return s.best;
}

}  // namespace

CanonicalSignature canonical_form(const LabeledGraph& g) {
  if (g.n > 9) throw std::invalid_argument("canonical_form: n above search bound 9");
  return CanonicalSignature{g.n, canonical_mask(g)};
}

namespace {

std::vector<int> sorted_degrees(const LabeledGraph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.n));
  for (int v = 1; v <= g.n; ++v) d[static_cast<std::size_t>(v - 1)] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

bool are_isomorphic(const LabeledGraph& g, const LabeledGraph& h) {
  if (g.n != h.n) throw std::invalid_argument("are_isomorphic: size mismatch");
  if (g.edges == h.edges) return true;
  if (g.edge_count() != h.edge_count()) return false;
  if (sorted_degrees(g) != sorted_degrees(h)) return false;
  return canonical_form(g).bits == canonical_form(h).bits;
}

IsoClassTable::IsoClassTable(int n) : n_(n) {
  check_vertex_count(n);
  if (n > 7) throw std::invalid_argument("iso class table: n above enumeration bound 7");
  const std::uint32_t m = edge_arity(n);
  const std::uint64_t size = std::uint64_t{1} << m;
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  canon_.assign(size, kUnset);
  class_index_.assign(size, 0);

  std::vector<std::vector<std::uint32_t>> generators;
  if (n >= 2) {
    generators.push_back(edge_index_map(Permutation::transposition(n, 1, 2)));
    if (n >= 3) generators.push_back(edge_index_map(Permutation::rotation(n)));
  }
  auto apply_map = [](std::uint64_t mask, const std::vector<std::uint32_t>& map) {
    std::uint64_t out = 0;
    std::uint64_t rest = mask;
    while (rest) {
      const std::uint32_t c = static_cast<std::uint32_t>(std::countr_zero(rest));
      rest &= rest - 1;
      out |= std::uint64_t{1} << map[c];
    }
    return out;
  };

  std::vector<std::uint64_t> stack;
  for (std::uint64_t mask = 0; mask < size; ++mask) {
    if (canon_[mask] != kUnset) continue;
    // mask is the smallest member of its orbit, hence the canonical form.
    const std::uint32_t rep_index = static_cast<std::uint32_t>(reps_.size());
    reps_.push_back(mask);
    canon_[mask] = static_cast<std::uint32_t>(mask);
    class_index_[mask] = rep_index;
    stack.assign(1, mask);
    while (!stack.empty()) {
      const std::uint64_t cur = stack.back();
      stack.pop_back();
      for (const auto& gen : generators) {
        const std::uint64_t next = apply_map(cur, gen);
        if (canon_[next] == kUnset) {
          canon_[next] = static_cast<std::uint32_t>(mask);
          class_index_[next] = rep_index;
          stack.push_back(next);
        }
      }
    }
  }
}

const IsoClassTable& iso_class_table(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<IsoClassTable>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, std::make_unique<IsoClassTable>(n)).first;
  return *it->second;
}

std::vector<IsoClass> enumerate_iso_classes(int n) {
  const IsoClassTable& table = iso_class_table(n);
  std::vector<IsoClass> out;
  out.reserve(table.representatives().size());
  for (const std::uint64_t rep : table.representatives())
    out.push_back(IsoClass{CanonicalSignature{n, rep}, LabeledGraph(n, rep)});
  return out;
}

PropertyFunction property_from_class_set(int n, const std::vector<CanonicalSignature>& classes) {
  const IsoClassTable& table = iso_class_table(n);
  std::vector<char> selected(table.representatives().size(), 0);
  for (const CanonicalSignature& sig : classes) {
    const std::uint64_t size = std::uint64_t{1} << edge_arity(n);
    if (sig.n != n || sig.bits >= size || table.canonical_of(sig.bits) != sig.bits)
      throw std::invalid_argument("class set contains a foreign signature: " + sig.to_hex());
    selected[table.class_index_of(sig.bits)] = 1;
  }
  TruthTable t(edge_arity(n));
  const std::uint64_t size = t.size();
  for (std::uint64_t mask = 0; mask < size; ++mask)
    if (selected[table.class_index_of(mask)]) t.set(mask, true);
  return PropertyFunction::graph_from_table(n, std::move(t));
}

bool is_graph_property(const PropertyFunction& f) {
  if (!f.has_table()) throw std::invalid_argument("is_graph_property requires a truth table");
  if (!f.is_graph_function()) throw std::invalid_argument("is_graph_property: not a graph-shaped function");
  const int n = f.vertex_count();
  if (n == 1) return true;
  std::vector<std::vector<std::uint32_t>> generators;
  generators.push_back(edge_index_map(Permutation::transposition(n, 1, 2)));
  if (n >= 3) generators.push_back(edge_index_map(Permutation::rotation(n)));
  const std::uint64_t size = f.table().size();
  for (const auto& gen : generators) {
    for (std::uint64_t mask = 0; mask < size; ++mask) {
      std::uint64_t image = 0;
      std::uint64_t rest = mask;
      while (rest) {
        const std::uint32_t c = static_cast<std::uint32_t>(std::countr_zero(rest));
        rest &= rest - 1;
        image |= std::uint64_t{1} << gen[c];
      }
      if (f.evaluate_mask(mask) != f.evaluate_mask(image)) return false;
    }
  }
  return true;
}

bool is_monotone(const PropertyFunction& f) {
  if (!f.has_table()) throw std::invalid_argument("is_monotone requires a truth table");
  const std::uint32_t m = f.arity();
  const std::uint64_t size = f.table().size();
  for (std::uint64_t mask = 0; mask < size; ++mask) {
    if (!f.evaluate_mask(mask)) continue;
    // every one-edge extension of a 1-point must stay 1
    for (std::uint32_t i = 0; i < m; ++i) {
      const std::uint64_t up = mask | (std::uint64_t{1} << i);
      if (up != mask && !f.evaluate_mask(up)) return false;
    }
  }
  return true;
}

}  // namespace proplab
