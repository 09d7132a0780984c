#include "proplab/lab.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

#include "proplab/parallel.hpp"

namespace proplab {

bool VerificationReport::asserted_bound_violated() const {
  for (const BoundCheck& b : bounds)
    if (b.asserted && b.status != "holds") return true;
  return false;
}

namespace {

// Subsets of the class list are held as packed words; class i = bit i.
using SubsetWords = std::vector<std::uint64_t>;

bool subset_bit(const SubsetWords& s, std::uint32_t i) {
  return (s[i >> 6] >> (i & 63)) & 1ull;
}

// s(f) for the class-subset property via the per-graph class index table.
int subset_sensitivity(const IsoClassTable& table, const SubsetWords& subset,
                       std::uint32_t arity) {
  const std::uint64_t size = std::uint64_t{1} << arity;
  int best = 0;
  for (std::uint64_t x = 0; x < size; ++x) {
    const bool base = subset_bit(subset, table.class_index_of(x));
    int s = 0;
    for (std::uint32_t i = 0; i < arity; ++i)
      s += subset_bit(subset, table.class_index_of(x ^ (std::uint64_t{1} << i))) != base;
    best = std::max(best, s);
  }
  return best;
}

ClassSubset to_class_subset(const IsoClassTable& table, const SubsetWords& subset) {
  ClassSubset out;
  out.n = table.n();
  const auto& reps = table.representatives();
  for (std::uint32_t i = 0; i < reps.size(); ++i)
    if (subset_bit(subset, i)) out.class_masks.push_back(reps[i]);
  return out;
}

bool subset_less(const SubsetWords& a, const SubsetWords& b) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

struct SweepPartial {
  int min_s = -1;
  SubsetWords min_subset;
  std::map<int, std::uint64_t> histogram;
};

void merge_partial(SweepPartial& into, const SweepPartial& from) {
  for (const auto& [s, c] : from.histogram) into.histogram[s] += c;
  if (from.min_s < 0) return;
  if (into.min_s < 0 || from.min_s < into.min_s ||
      (from.min_s == into.min_s && subset_less(from.min_subset, into.min_subset))) {
    into.min_s = from.min_s;
    into.min_subset = from.min_subset;
  }
}

void add_bound_checks(VerificationReport& report, const IsoClassTable& table,
                      const SubsetWords& min_subset) {
  const int n = report.n;
  const auto status = [&](int threshold) {
    return report.min_sensitivity >= threshold ? std::string("holds")
                                               : std::string("violated-with-witness");
  };
  const auto witness = [&](int threshold) -> std::optional<ClassSubset> {
    if (report.min_sensitivity >= threshold) return std::nullopt;
    return to_class_subset(table, min_subset);
  };
  report.bounds.push_back({"floor-n-over-4", n / 4, true, status(n / 4), witness(n / 4)});
  report.bounds.push_back({"floor-n-over-2", n / 2, false, status(n / 2), witness(n / 2)});
  report.bounds.push_back({"n-minus-1", n - 1, false, status(n - 1), witness(n - 1)});
}

}  // namespace

VerificationReport verify_exhaustive(int n, int jobs) {
  if (n < 2 || n > 4)
    throw std::invalid_argument("verify_exhaustive: n must be in [2, 4]; larger n need sampling");
  const auto start = std::chrono::steady_clock::now();
  const IsoClassTable& table = iso_class_table(n);
  const std::uint32_t k = static_cast<std::uint32_t>(table.representatives().size());
  const std::uint32_t arity = edge_arity(n);
  const std::uint64_t total = (std::uint64_t{1} << k) - 2;  // skip empty and full

  const int workers = resolve_worker_count(jobs);
  std::vector<SweepPartial> partials(static_cast<std::size_t>(std::max(1, workers)));
  parallel_ranges(total, workers, [&](std::uint64_t b, std::uint64_t e, int w) {
    SweepPartial& p = partials[static_cast<std::size_t>(w)];
    for (std::uint64_t idx = b; idx < e; ++idx) {
      const SubsetWords subset{idx + 1};  // masks 1 .. 2^k - 2
      const int s = subset_sensitivity(table, subset, arity);
      ++p.histogram[s];
      if (p.min_s < 0 || s < p.min_s || (s == p.min_s && subset_less(subset, p.min_subset))) {
        p.min_s = s;
        p.min_subset = subset;
      }
    }
  });
  SweepPartial merged;
  for (const SweepPartial& p : partials) merge_partial(merged, p);

  VerificationReport report;
  report.n = n;
  report.mode = "exhaustive";
  report.properties_examined = total;
  report.min_sensitivity = merged.min_s;
  report.min_attaining = to_class_subset(table, merged.min_subset);
  report.histogram = std::move(merged.histogram);
  report.jobs = workers;
  add_bound_checks(report, table, merged.min_subset);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerificationReport verify_sampled(int n, std::uint64_t seed, std::uint64_t count, int jobs) {
  if (n < 5 || n > 6)
    throw std::invalid_argument("verify_sampled: n must be 5 or 6 (use exhaustive below)");
  if (count == 0) throw std::invalid_argument("verify_sampled: count must be positive");
  const auto start = std::chrono::steady_clock::now();
  const IsoClassTable& table = iso_class_table(n);
  const std::uint32_t k = static_cast<std::uint32_t>(table.representatives().size());
  const std::uint32_t arity = edge_arity(n);
  const std::size_t words = (k + 63) / 64;
  const std::uint64_t top = (k % 64) ? ((1ull << (k % 64)) - 1) : ~0ull;

  // Draw all subsets up front from the seed so the report does not depend on
  // the worker count.
  std::mt19937_64 rng(seed);
  std::vector<SubsetWords> samples;
  samples.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    SubsetWords s(words);
    for (;;) {
      bool all_zero = true, all_one = true;
      for (std::size_t w = 0; w < words; ++w) {
        s[w] = rng();
        if (w + 1 == words) s[w] &= top;
        all_zero &= s[w] == 0;
        all_one &= s[w] == ((w + 1 == words) ? top : ~0ull);
      }
      if (!all_zero && !all_one) break;
    }
    samples.push_back(std::move(s));
  }

  const int workers = resolve_worker_count(jobs);
  std::vector<SweepPartial> partials(static_cast<std::size_t>(std::max(1, workers)));
  parallel_ranges(count, workers, [&](std::uint64_t b, std::uint64_t e, int w) {
    SweepPartial& p = partials[static_cast<std::size_t>(w)];
    for (std::uint64_t idx = b; idx < e; ++idx) {
      const int s = subset_sensitivity(table, samples[idx], arity);
      ++p.histogram[s];
      if (p.min_s < 0 || s < p.min_s ||
          (s == p.min_s && subset_less(samples[idx], p.min_subset))) {
        p.min_s = s;
        p.min_subset = samples[idx];
      }
    }
  });
  SweepPartial merged;
  for (const SweepPartial& p : partials) merge_partial(merged, p);

  VerificationReport report;
  report.n = n;
  report.mode = "sample";
  report.properties_examined = count;
  report.min_sensitivity = merged.min_s;
  report.min_attaining = to_class_subset(table, merged.min_subset);
  report.histogram = std::move(merged.histogram);
  report.seed = seed;
  report.jobs = workers;
  add_bound_checks(report, table, merged.min_subset);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

AnalysisReport analyze_property(const PropertyFunction& f, int jobs) {
  if (!f.has_table()) throw std::invalid_argument("analyze_property requires a truth table");
  AnalysisReport report;
  report.n = f.vertex_count();
  report.arity = f.arity();
  report.nontrivial = is_nontrivial(f);
  report.graph_property = f.is_graph_function() && is_graph_property(f);
  report.monotone = is_monotone(f);
  report.sensitivity = max_sensitivity(f, jobs);
  if (f.arity() <= 16) report.block_sensitivity = max_block_sensitivity(f, jobs);
  if (f.is_graph_function() && report.nontrivial) {
    if (f.evaluate_mask(0)) {
      report.minimal_from_complement = true;
      report.minimal = minimal_graphs(complement(f));
    } else {
      report.minimal = minimal_graphs(f);
    }
  }
  return report;
}

MonotoneCheckReport run_monotone_check(int n, int jobs) {
  if (n < 2 || n > 7)
    throw std::invalid_argument("run_monotone_check: n must be in [2, 7] for truth tables");
  MonotoneCheckReport report;
  report.n = n;
  for (const BuiltinProperty& b : builtin_registry()) {
    const PropertyFunction f = builtin_property(b.name, n);
    MonotoneCheckRow row;
    row.name = b.name;
    row.monotone = is_monotone(f);
    row.nontrivial = is_nontrivial(f);
    row.threshold = n - 1;
    if (row.monotone && row.nontrivial) {
      row.sensitivity = max_sensitivity(f, jobs).value;
      row.checked = true;
      row.passed = row.sensitivity >= row.threshold;
      report.all_passed = report.all_passed && row.passed;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace proplab
