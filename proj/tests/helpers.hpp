#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "proplab/extractor.hpp"
#include "proplab/graphs.hpp"
#include "proplab/structures.hpp"

namespace proplab::testing {

inline TruthTable random_table(std::uint32_t arity, std::mt19937_64& rng) {
  TruthTable t(arity);
  for (auto& w : t.words()) w = rng();
  t.words().back() &= bits::tail_mask(arity);
  return t;
}

// Independent per-point sensitivity: a plain loop over coordinates.
inline int naive_sensitivity_at(const PropertyFunction& f, std::uint64_t x) {
  const bool base = f.evaluate_mask(x);
  int s = 0;
  for (std::uint32_t i = 0; i < f.arity(); ++i)
    s += f.evaluate_mask(x ^ (std::uint64_t{1} << i)) != base;
  return s;
}

inline int naive_max_sensitivity(const PropertyFunction& f) {
  int best = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << f.arity()); ++x)
    best = std::max(best, naive_sensitivity_at(f, x));
  return best;
}

// Exhaustive disjoint-family search over all sensitive blocks, the oracle
// for block sensitivity at small arity.
inline int naive_block_sensitivity_at(const PropertyFunction& f, std::uint64_t x) {
  const std::uint32_t m = f.arity();
  const bool base = f.evaluate_mask(x);
  std::vector<std::uint32_t> sensitive;
  for (std::uint32_t b = 1; b < (1u << m); ++b)
    if (f.evaluate_mask(x ^ b) != base) sensitive.push_back(b);
  int best = 0;
  // depth-first over blocks in ascending order, keeping pairwise disjointness
  std::vector<std::pair<std::size_t, std::uint32_t>> stack{{0, 0}};
  std::vector<int> depth{0};
  while (!stack.empty()) {
    auto [idx, used] = stack.back();
    const int d = depth.back();
    stack.pop_back();
    depth.pop_back();
    best = std::max(best, d);
    for (std::size_t i = idx; i < sensitive.size(); ++i) {
      if (sensitive[i] & used) continue;
      stack.push_back({i + 1, used | sensitive[i]});
      depth.push_back(d + 1);
    }
  }
  return best;
}

// Exhaustive-permutation isomorphism oracle.
inline bool naive_isomorphic(const LabeledGraph& a, const LabeledGraph& b) {
  std::vector<int> images(static_cast<std::size_t>(a.n));
  std::iota(images.begin(), images.end(), 1);
  do {
    if (apply_permutation(a, Permutation(images)) == b) return true;
  } while (std::next_permutation(images.begin(), images.end()));
  return false;
}

// Canonical form by sheer enumeration of all n! relabelings.
inline std::uint64_t naive_canonical_mask(const LabeledGraph& g) {
  std::vector<int> images(static_cast<std::size_t>(g.n));
  std::iota(images.begin(), images.end(), 1);
  std::uint64_t best = ~0ull;
  do {
    best = std::min(best, apply_permutation(g, Permutation(images)).edges);
  } while (std::next_permutation(images.begin(), images.end()));
  return best;
}

// Maximal subgraph with a given predicate, by brute force over the subsets
// of the edge set: the union of all qualifying subsets, which must itself
// qualify for the maximal subgraph to be well defined.
template <class Pred>
LabeledGraph naive_maximal_subgraph(const LabeledGraph& g, Pred&& pred) {
  std::vector<std::uint32_t> coords;
  std::uint64_t rest = g.edges;
  while (rest) {
    coords.push_back(static_cast<std::uint32_t>(std::countr_zero(rest)));
    rest &= rest - 1;
  }
  std::uint64_t best = 0;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << coords.size()); ++pick) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < coords.size(); ++i)
      if ((pick >> i) & 1) mask |= std::uint64_t{1} << coords[i];
    if (pred(LabeledGraph(g.n, mask))) best |= mask;
  }
  return LabeledGraph(g.n, best);
}

// Replays a trace from scratch: every step's graph must follow from the
// recorded action and every recorded value must match a fresh evaluation.
inline bool replay_trace(const Trace& trace, const PropertyFunction& f) {
  LabeledGraph cur;
  bool anchored = false;
  for (const TraceStep& step : trace.steps) {
    LabeledGraph expect = cur;
    switch (step.action) {
      case TraceAction::Init:
        expect = step.graph_after;
        anchored = true;
        break;
      case TraceAction::AddEdge:
        if (!anchored || !step.edge) return false;
        expect = cur.with_edge(step.edge->a, step.edge->b);
        break;
      case TraceAction::RemoveEdge:
        if (!anchored || !step.edge) return false;
        expect = cur.without_edge(step.edge->a, step.edge->b);
        break;
      case TraceAction::LemmaCheck:
      case TraceAction::Harvest:
        break;
    }
    if (expect != step.graph_after) return false;
    if (f.evaluate_mask(step.graph_after.edges) != step.f_value) return false;
    cur = step.graph_after;
  }
  return true;
}

// Random non-empty proper class subset drawn from the enumerated classes.
inline std::vector<CanonicalSignature> random_class_subset(int n, std::mt19937_64& rng) {
  const auto classes = enumerate_iso_classes(n);
  std::vector<CanonicalSignature> subset;
  while (subset.empty() || subset.size() == classes.size()) {
    subset.clear();
    for (const IsoClass& c : classes)
      if (rng() & 1) subset.push_back(c.signature);
  }
  return subset;
}

}  // namespace proplab::testing
