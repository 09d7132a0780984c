#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "proplab/builtins.hpp"
#include "proplab/extractor.hpp"
#include "proplab/structures.hpp"

namespace proplab {

// A graph property given as a subset of isomorphism classes.
struct ClassSubset {
  int n = 0;
  std::vector<std::uint64_t> class_masks;  // canonical signatures, ascending
};

struct BoundCheck {
  std::string name;
  int threshold = 0;
  bool asserted = false;  // asserted bounds make the run fail on violation
  std::string status;     // "holds" or "violated-with-witness"
  std::optional<ClassSubset> violation_witness;
};

struct VerificationReport {
  int schema = 1;
  int n = 0;
  std::string mode;  // "exhaustive" or "sample"
  std::uint64_t properties_examined = 0;
  int min_sensitivity = 0;
  ClassSubset min_attaining;
  std::map<int, std::uint64_t> histogram;  // s value -> property count
  std::vector<BoundCheck> bounds;
  std::uint64_t seed = 0;
  int jobs = 1;
  double wall_seconds = 0.0;

  bool asserted_bound_violated() const;
};

// Sweeps every non-trivial graph property on n vertices (as non-empty proper
// subsets of the isomorphism classes; graph properties are exactly the
// class-constant functions). n <= 4.
VerificationReport verify_exhaustive(int n, int jobs = 0);

// Seeded sample of `count` non-trivial properties on n vertices (n = 5 or 6).
// Identical seeds give identical reports regardless of the worker count.
VerificationReport verify_sampled(int n, std::uint64_t seed, std::uint64_t count, int jobs = 0);

struct AnalysisReport {
  int n = 0;  // 0 for plain boolean functions
  std::uint32_t arity = 0;
  bool nontrivial = false;
  bool graph_property = false;
  bool monotone = false;
  SensitivityResult sensitivity;
  std::optional<int> block_sensitivity;  // arity <= 16 only
  bool minimal_from_complement = false;  // f(empty) = 1, minimal set of the complement
  std::optional<MinimalGraphSet> minimal;
};

AnalysisReport analyze_property(const PropertyFunction& f, int jobs = 0);

struct MonotoneCheckRow {
  std::string name;
  bool monotone = false;
  bool nontrivial = false;
  int sensitivity = 0;
  int threshold = 0;  // n - 1
  bool checked = false;
  bool passed = false;
};

struct MonotoneCheckReport {
  int n = 0;
  std::vector<MonotoneCheckRow> rows;
  bool all_passed = true;
};

// For every monotone, non-trivial builtin at this n, asserts s(f) >= n - 1.
MonotoneCheckReport run_monotone_check(int n, int jobs = 0);

}  // namespace proplab
