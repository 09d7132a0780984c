#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "proplab/structures.hpp"

namespace proplab {

// Case identifiers, also used as harvest method tags.
inline constexpr const char* kCaseMinGraphDirect = "min-graph-direct";
inline constexpr const char* kCasePendantEdge = "pendant-edge";
inline constexpr const char* kCaseMinDegree2 = "case-min-degree-2";
inline constexpr const char* kCaseTreeComponent = "case-tree-component";
inline constexpr const char* kCaseSingleEdge = "case-single-edge";

enum class TraceAction { Init, AddEdge, RemoveEdge, LemmaCheck, Harvest };

// One step of a run. Init re-anchors the working graph; AddEdge/RemoveEdge
// change it by exactly the recorded edge; LemmaCheck and Harvest leave it
// untouched. f_value is always f evaluated at graph_after.
struct TraceStep {
  TraceAction action = TraceAction::Init;
  std::optional<VertexPair> edge;
  LabeledGraph graph_after;
  bool f_value = false;
  std::string note;
};

// A hypercube point together with a verified sensitivity lower bound. The
// claimed coordinates are exactly the isomorphism- or evaluation-derived
// coordinates that were subsequently confirmed sensitive by direct
// evaluation; verified_sensitivity is recomputed, never trusted.
struct WitnessReport {
  LabeledGraph point;
  std::vector<std::uint32_t> claimed_coordinates;
  int verified_sensitivity = 0;
  std::string method;
};

enum class TraceOutcome { WitnessFound, Inconsistency, Inapplicable };

struct Trace {
  std::string case_id;
  std::vector<TraceStep> steps;
  std::vector<WitnessReport> harvested;
  TraceOutcome outcome = TraceOutcome::Inapplicable;
  // Isomorphism-backed claims that failed direct evaluation. Always zero for
  // a genuine graph property; non-zero flags a broken input.
  int false_claims = 0;
};

std::string to_string(TraceAction a);
std::string to_string(TraceOutcome o);

// Degree-one vertex v with unique edge e = {v,u}: either f(G) = f(G \ e),
// or G \ e is sensitive at e and at {u,w} for every isolated w of G, giving
// sensitivity >= |I(G)| + 1.
Trace pendant_edge_lemma(const PropertyFunction& f, const LabeledGraph& g, int v);

// The three constructive runs. Each expects a minimal graph of f with
// f(empty) = 0 and harvests verified witnesses at every point where the
// value of f flips along the construction. An outcome of Inconsistency can
// only be produced by an input that is not a genuine graph property.
//
// case-min-degree-2:    minimal G with positive min degree >= 2.
// case-tree-component:  minimal G with positive min degree 1 and smallest
//                       tree component of >= 2 edges; needs |I(G)| >= c(G)
//                       isolated vertices (otherwise Inapplicable).
// case-single-edge:     minimal G with a single-edge component; runs the
//                       paired edge-addition chains toward two isomorphic
//                       graphs and checks their values agree.
Trace run_case1(const PropertyFunction& f, const LabeledGraph& g);
Trace run_case2(const PropertyFunction& f, const LabeledGraph& g);
Trace run_case3(const PropertyFunction& f, const LabeledGraph& g);

struct ExtractionResult {
  WitnessReport best;
  std::vector<Trace> traces;
  MinimalGraphSet minimal;
  bool complemented = false;  // f(empty) was 1 and the run used the complement
};

// Full pipeline: validates f, normalizes so f(empty) = 0, harvests the
// every-edge-sensitive witness at each minimal graph, then dispatches on
// (min positive degree, min tree size) to the matching constructive run.
// Returns the best verified witness across all harvests.
ExtractionResult extract_witness(const PropertyFunction& f);

// One structural inequality instantiated with exact integers.
struct InequalityCheck {
  std::string id;
  bool holds = false;
  std::vector<std::pair<std::string, long long>> values;
};

// Evaluates the structural inequalities of a minimal graph: edge count vs
// point sensitivity, edge/isolated-vertex covering bounds, the smallest-tree
// pigeonhole, and the two half-n windows that a sub-half-n sensitivity
// assumption would have to satisfy.
std::vector<InequalityCheck> check_structural_inequalities(const PropertyFunction& f,
                                                           const LabeledGraph& g);

}  // namespace proplab
