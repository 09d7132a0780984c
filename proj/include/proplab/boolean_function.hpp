#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "proplab/bits.hpp"

namespace proplab {

// A point of the hypercube {0,1}^arity; coordinate i is bit i of `bits`.
struct Point {
  std::uint32_t arity = 0;
  std::uint64_t bits = 0;

  Point() = default;
  Point(std::uint32_t arity, std::uint64_t bits);

  bool operator==(const Point&) const = default;
};

// Involution: inverts coordinate i.
Point flip(const Point& x, std::uint32_t coordinate);

// Explicit truth table over 2^arity points; index of a point is its bit mask.
class TruthTable {
 public:
  static constexpr std::uint32_t kMaxArity = 28;  // 2^28 bits = 32 MiB

  TruthTable() = default;
  explicit TruthTable(std::uint32_t arity, bool fill = false);

  std::uint32_t arity() const { return arity_; }
  std::uint64_t size() const { return std::uint64_t{1} << arity_; }
  bool get(std::uint64_t mask) const { return bits::get_bit(words_, mask); }
  void set(std::uint64_t mask, bool value) { bits::set_bit(words_, mask, value); }

  const bits::SubsetBitset& words() const { return words_; }
  bits::SubsetBitset& words() { return words_; }

  bool operator==(const TruthTable&) const = default;

 private:
  std::uint32_t arity_ = 0;
  bits::SubsetBitset words_;
};

namespace detail {
class MemoCache;
}

// A boolean function on the edge hypercube, backed either by an explicit
// truth table or by a pure evaluation oracle (optionally memoized). Graph
// functions carry the vertex count n with arity n(n-1)/2; plain boolean
// functions carry n = 0. Instances are immutable values.
class PropertyFunction {
 public:
  using Oracle = std::function<bool(std::uint64_t)>;

  static constexpr std::size_t kDefaultMemoCapacity = std::size_t{1} << 22;

  PropertyFunction() = default;

  static PropertyFunction boolean_from_table(TruthTable table);
  static PropertyFunction boolean_from_oracle(std::uint32_t arity, Oracle oracle,
                                              std::size_t memo_capacity = kDefaultMemoCapacity);
  static PropertyFunction graph_from_table(int vertex_count, TruthTable table);
  static PropertyFunction graph_from_oracle(int vertex_count, Oracle oracle,
                                            std::size_t memo_capacity = kDefaultMemoCapacity);

  int vertex_count() const { return vertex_count_; }
  bool is_graph_function() const { return vertex_count_ > 0; }
  std::uint32_t arity() const { return arity_; }
  bool has_table() const { return table_ != nullptr; }
  bool has_memo() const { return memo_ != nullptr; }
  const TruthTable& table() const;

  bool evaluate(const Point& x) const;
  // Trusted fast path; `mask` must already fit the arity.
  bool evaluate_mask(std::uint64_t mask) const;

  std::size_t memo_entries() const;

 private:
  int vertex_count_ = 0;
  std::uint32_t arity_ = 0;
  std::shared_ptr<const TruthTable> table_;
  Oracle oracle_;
  std::shared_ptr<detail::MemoCache> memo_;
};

struct SensitivityResult {
  int value = 0;
  Point witness;
  std::vector<std::uint32_t> sensitive_coordinates;
};

// Pointwise negation; sensitivity and block sensitivity are preserved.
PropertyFunction complement(const PropertyFunction& f);

// True iff f attains both values. Requires a truth table.
bool is_nontrivial(const PropertyFunction& f);

// s(f, x): number of hypercube neighbours of x on which f differs.
SensitivityResult sensitivity_at(const PropertyFunction& f, const Point& x);

// s(f) over the full table (exact); requires a truth table.
SensitivityResult max_sensitivity(const PropertyFunction& f, int jobs = 0);

// s(f) restricted to an explicit candidate set (the oracle-mode entry point).
SensitivityResult max_sensitivity_over(const PropertyFunction& f,
                                       const std::vector<std::uint64_t>& candidates);

// Exact bs(f, x): minimal sensitive blocks, then a maximum disjoint packing
// found by memoized search. Arity capped at 20.
int block_sensitivity_at(const PropertyFunction& f, const Point& x);

// Exact bs(f) over all points; requires a truth table and arity <= 16.
int max_block_sensitivity(const PropertyFunction& f, int jobs = 0);

}  // namespace proplab
