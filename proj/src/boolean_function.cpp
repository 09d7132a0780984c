#include "proplab/boolean_function.hpp"

#include <algorithm>
#include <bit>
#include <list>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "proplab/parallel.hpp"

namespace proplab {

namespace detail {

// Bounded memo for oracle evaluations, least-recently-used eviction. Shared
// between copies of a PropertyFunction; guarded by a mutex so concurrent
// evaluation stays safe.
class MemoCache {
 public:
  explicit MemoCache(std::size_t capacity) : capacity_(capacity) {}

  bool lookup(std::uint64_t key, bool& value) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    order_.splice(order_.begin(), order_, it->second.second);
    value = it->second.first;
    return true;
  }

  void insert(std::uint64_t key, bool value) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = map_.find(key);
    if (it != map_.end()) {
      order_.splice(order_.begin(), order_, it->second.second);
      return;
    }
    if (map_.size() >= capacity_ && !order_.empty()) {
      map_.erase(order_.back());
      order_.pop_back();
    }
    order_.push_front(key);
    map_.emplace(key, std::make_pair(value, order_.begin()));
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return map_.size();
  }

 private:
  std::size_t capacity_;
  mutable std::mutex mutex_;
  std::list<std::uint64_t> order_;
  std::unordered_map<std::uint64_t, std::pair<bool, std::list<std::uint64_t>::iterator>> map_;
};

}  // namespace detail

Point::Point(std::uint32_t arity, std::uint64_t bits) : arity(arity), bits(bits) {
  if (arity > 63) throw std::invalid_argument("point arity exceeds 63");
  if (arity < 64 && (bits >> arity) != 0)
    throw std::invalid_argument("point has bits above its arity");
}

Point flip(const Point& x, std::uint32_t coordinate) {
  if (coordinate >= x.arity) throw std::out_of_range("flip: coordinate out of range");
  Point y = x;
  y.bits ^= std::uint64_t{1} << coordinate;
  return y;
}

TruthTable::TruthTable(std::uint32_t arity, bool fill) : arity_(arity) {
  if (arity > kMaxArity) throw std::invalid_argument("truth table arity exceeds 28");
  words_.assign(bits::word_count(arity), fill ? ~0ull : 0ull);
  if (fill) words_.back() &= bits::tail_mask(arity);
}

PropertyFunction PropertyFunction::boolean_from_table(TruthTable table) {
  PropertyFunction f;
  f.arity_ = table.arity();
  f.table_ = std::make_shared<const TruthTable>(std::move(table));
  return f;
}

PropertyFunction PropertyFunction::boolean_from_oracle(std::uint32_t arity, Oracle oracle,
                                                       std::size_t memo_capacity) {
  if (arity > 63) throw std::invalid_argument("oracle arity exceeds 63");
  if (!oracle) throw std::invalid_argument("null oracle");
  PropertyFunction f;
  f.arity_ = arity;
  f.oracle_ = std::move(oracle);
  if (memo_capacity > 0) f.memo_ = std::make_shared<detail::MemoCache>(memo_capacity);
  return f;
}

namespace {
std::uint32_t edge_arity_of(int vertex_count) {
  if (vertex_count < 1) throw std::invalid_argument("vertex count must be positive");
  return static_cast<std::uint32_t>(vertex_count) * (vertex_count - 1) / 2;
}
}  // namespace

PropertyFunction PropertyFunction::graph_from_table(int vertex_count, TruthTable table) {
  if (table.arity() != edge_arity_of(vertex_count))
    throw std::invalid_argument("table arity does not match n(n-1)/2");
  PropertyFunction f = boolean_from_table(std::move(table));
  f.vertex_count_ = vertex_count;
  return f;
}

PropertyFunction PropertyFunction::graph_from_oracle(int vertex_count, Oracle oracle,
                                                     std::size_t memo_capacity) {
  PropertyFunction f = boolean_from_oracle(edge_arity_of(vertex_count), std::move(oracle),
                                           memo_capacity);
  f.vertex_count_ = vertex_count;
  return f;
}

const TruthTable& PropertyFunction::table() const {
  if (!table_) throw std::logic_error("function has no truth table");
  return *table_;
}

bool PropertyFunction::evaluate(const Point& x) const {
  if (x.arity != arity_) throw std::invalid_argument("evaluate: arity mismatch");
  return evaluate_mask(x.bits);
}

bool PropertyFunction::evaluate_mask(std::uint64_t mask) const {
  if (table_) return table_->get(mask);
  if (memo_) {
    bool cached = false;
    if (memo_->lookup(mask, cached)) return cached;
    const bool v = oracle_(mask);
    memo_->insert(mask, v);
    return v;
  }
  return oracle_(mask);
}

std::size_t PropertyFunction::memo_entries() const { return memo_ ? memo_->size() : 0; }

PropertyFunction complement(const PropertyFunction& f) {
  if (f.has_table()) {
    TruthTable t = f.table();
    for (auto& w : t.words()) w = ~w;
    t.words().back() &= bits::tail_mask(t.arity());
    return f.is_graph_function() ? PropertyFunction::graph_from_table(f.vertex_count(), std::move(t))
                                 : PropertyFunction::boolean_from_table(std::move(t));
  }
  const PropertyFunction inner = f;
  auto oracle = [inner](std::uint64_t mask) { return !inner.evaluate_mask(mask); };
  return f.is_graph_function()
             ? PropertyFunction::graph_from_oracle(f.vertex_count(), std::move(oracle))
             : PropertyFunction::boolean_from_oracle(f.arity(), std::move(oracle));
}

bool is_nontrivial(const PropertyFunction& f) {
  if (!f.has_table()) throw std::invalid_argument("is_nontrivial requires a truth table");
  const auto& words = f.table().words();
  const std::uint64_t tail = bits::tail_mask(f.arity());
  bool any_one = false, any_zero = false;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::uint64_t valid = (i + 1 == words.size()) ? tail : ~0ull;
    if (words[i] & valid) any_one = true;
    if (~words[i] & valid) any_zero = true;
    if (any_one && any_zero) return true;
  }
  return any_one && any_zero;
}

SensitivityResult sensitivity_at(const PropertyFunction& f, const Point& x) {
  if (x.arity != f.arity()) throw std::invalid_argument("sensitivity_at: arity mismatch");
  SensitivityResult r;
  r.witness = x;
  const bool base = f.evaluate_mask(x.bits);
  for (std::uint32_t i = 0; i < f.arity(); ++i) {
    if (f.evaluate_mask(x.bits ^ (std::uint64_t{1} << i)) != base)
      r.sensitive_coordinates.push_back(i);
  }
  r.value = static_cast<int>(r.sensitive_coordinates.size());
  return r;
}

namespace {

// Scans [begin, end); returns the best (max s, then smallest mask) candidate.
std::pair<int, std::uint64_t> scan_range(const TruthTable& t, std::uint64_t begin,
                                         std::uint64_t end) {
  const std::uint32_t m = t.arity();
  int best = -1;
  std::uint64_t best_mask = 0;
  for (std::uint64_t x = begin; x < end; ++x) {
    const bool base = t.get(x);
    int s = 0;
    for (std::uint32_t i = 0; i < m; ++i)
      s += t.get(x ^ (std::uint64_t{1} << i)) != base;
    if (s > best) {
      best = s;
      best_mask = x;
    }
  }
  return {best, best_mask};
}

}  // namespace

SensitivityResult max_sensitivity(const PropertyFunction& f, int jobs) {
  if (!f.has_table())
    throw std::invalid_argument("max_sensitivity requires a truth table; "
                                "use max_sensitivity_over with an explicit candidate set");
  const TruthTable& t = f.table();
  const std::uint64_t total = t.size();
  const int workers = resolve_worker_count(jobs);
  std::vector<std::pair<int, std::uint64_t>> partial(
      static_cast<std::size_t>(std::max(1, workers)), {-1, 0});
  parallel_ranges(total, workers, [&](std::uint64_t b, std::uint64_t e, int w) {
    partial[static_cast<std::size_t>(w)] = scan_range(t, b, e);
  });
  std::pair<int, std::uint64_t> best{-1, 0};
  for (const auto& p : partial) {
    if (p.first > best.first || (p.first == best.first && p.second < best.second)) best = p;
  }
  return sensitivity_at(f, Point(f.arity(), best.second));
}

SensitivityResult max_sensitivity_over(const PropertyFunction& f,
                                       const std::vector<std::uint64_t>& candidates) {
  if (candidates.empty())
    throw std::invalid_argument("max_sensitivity_over: empty candidate set");
  std::pair<int, std::uint64_t> best{-1, 0};
  for (const std::uint64_t mask : candidates) {
    const SensitivityResult r = sensitivity_at(f, Point(f.arity(), mask));
    if (r.value > best.first || (r.value == best.first && mask < best.second))
      best = {r.value, mask};
  }
  return sensitivity_at(f, Point(f.arity(), best.second));
}

namespace {

struct BlockScratch {
  bits::SubsetBitset sens, reach, notmin;
  std::vector<std::uint32_t> blocks;
  std::vector<std::vector<std::uint32_t>> by_min;
  std::unordered_map<std::uint32_t, int> memo;
};

int pack_dfs(std::uint32_t avail, BlockScratch& s) {
  if (avail == 0) return 0;
  auto it = s.memo.find(avail);
  if (it != s.memo.end()) return it->second;
  const std::uint32_t c = static_cast<std::uint32_t>(std::countr_zero(avail));
  int best = pack_dfs(avail & (avail - 1), s);  // leave coordinate c unused
  for (const std::uint32_t block : s.by_min[c]) {
    if ((block & ~avail) == 0) best = std::max(best, 1 + pack_dfs(avail & ~block, s));
  }
  s.memo.emplace(avail, best);
  return best;
}

// bs(f, x) given scratch buffers; pure function of f and x.
int block_sensitivity_with_scratch(const PropertyFunction& f, std::uint64_t x,
                                   BlockScratch& s) {
  const std::uint32_t m = f.arity();
  const bool base = f.evaluate_mask(x);

  // sens[B] = 1 iff flipping block B changes the value.
  if (f.has_table()) {
    bits::recenter(f.table().words(), x, m, s.sens);
    if (base)
      for (auto& w : s.sens) w = ~w;
  } else {
    s.sens.assign(bits::word_count(m), 0);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b)
      bits::set_bit(s.sens, b, f.evaluate_mask(x ^ b) != base);
  }
  s.sens.back() &= bits::tail_mask(m);
  s.sens[0] &= ~1ull;  // the empty block is never sensitive

  // A block is minimal iff sensitive and no proper sub-block is sensitive.
  s.reach = s.sens;
  bits::or_subset_closure(s.reach, m);
  bits::parent_or(s.reach, m, s.notmin);

  s.blocks.clear();
  for (std::size_t w = 0; w < s.sens.size(); ++w) {
    std::uint64_t v = s.sens[w] & ~s.notmin[w];
    while (v) {
      const std::uint32_t bit = static_cast<std::uint32_t>(std::countr_zero(v));
      v &= v - 1;
      s.blocks.push_back(static_cast<std::uint32_t>((w << 6) | bit));
    }
  }
  if (s.blocks.empty()) return 0;

  if (s.by_min.size() < m) s.by_min.resize(m);
  for (auto& v : s.by_min) v.clear();
  std::uint32_t covered = 0;
  for (const std::uint32_t b : s.blocks) {
    s.by_min[static_cast<std::uint32_t>(std::countr_zero(b))].push_back(b);
    covered |= b;
  }
  s.memo.clear();
  return pack_dfs(covered, s);
}

}  // namespace

int block_sensitivity_at(const PropertyFunction& f, const Point& x) {
  if (x.arity != f.arity()) throw std::invalid_argument("block_sensitivity_at: arity mismatch");
  if (f.arity() > 20)
    throw std::invalid_argument("block_sensitivity_at: arity above exact-search bound 20");
  BlockScratch scratch;
  return block_sensitivity_with_scratch(f, x.bits, scratch);
}

int max_block_sensitivity(const PropertyFunction& f, int jobs) {
  if (!f.has_table()) throw std::invalid_argument("max_block_sensitivity requires a truth table");
  if (f.arity() > 16)
    throw std::invalid_argument("max_block_sensitivity: arity above exact-search bound 16");
  const std::uint64_t total = f.table().size();
  const int workers = resolve_worker_count(jobs);
  std::vector<int> partial(static_cast<std::size_t>(std::max(1, workers)), 0);
  parallel_ranges(total, workers, [&](std::uint64_t b, std::uint64_t e, int w) {
    BlockScratch scratch;
    int best = 0;
    for (std::uint64_t x = b; x < e; ++x)
      best = std::max(best, block_sensitivity_with_scratch(f, x, scratch));
    partial[static_cast<std::size_t>(w)] = best;
  });
  return *std::max_element(partial.begin(), partial.end());
}

}  // namespace proplab
