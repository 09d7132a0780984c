#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "proplab/extractor.hpp"
#include "proplab/lab.hpp"

namespace proplab {

// Truth-table binary format: magic "GPTT", little-endian u32 n, u32 arity,
// then ceil(2^arity / 8) bytes with bit j of byte k = f at point 8k + j.
void write_truth_table(std::ostream& os, const PropertyFunction& f);
void write_truth_table_file(const std::string& path, const PropertyFunction& f);
PropertyFunction read_truth_table(std::istream& is);
PropertyFunction read_truth_table_file(const std::string& path);

// Class-set file: {"n": int, "classes": [lowercase hex signatures]}.
nlohmann::json class_subset_to_json(const ClassSubset& subset);
ClassSubset class_subset_from_json(const nlohmann::json& j);
PropertyFunction read_class_set_file(const std::string& path);

// Sniffs GPTT magic vs JSON; throws std::runtime_error on malformed input.
PropertyFunction read_property_file(const std::string& path);

nlohmann::json trace_to_json(const Trace& trace);
nlohmann::json witness_report_to_json(const WitnessReport& report);
nlohmann::json extraction_to_json(const ExtractionResult& result);
nlohmann::json minimal_graphs_to_json(const MinimalGraphSet& mset);
nlohmann::json verification_to_json(const VerificationReport& report);
nlohmann::json analysis_to_json(const AnalysisReport& report);
nlohmann::json monotone_check_to_json(const MonotoneCheckReport& report);
nlohmann::json inequalities_to_json(const std::vector<InequalityCheck>& checks);

std::string render_verification_text(const VerificationReport& report);
std::string render_analysis_text(const AnalysisReport& report);
std::string render_monotone_check_text(const MonotoneCheckReport& report);

std::string graph_hex(const LabeledGraph& g);

}  // namespace proplab
