// property-lab: sensitivity analysis of boolean functions and graph
// properties, with exhaustive/sampled bound verification and witness
// extraction.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "proplab/io.hpp"
#include "proplab/lab.hpp"

namespace {

using nlohmann::json;
using namespace proplab;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMalformedInput = 2;
constexpr int kExitBoundViolation = 3;

struct Output {
  std::string format = "text";
  std::string path;

  void emit(const json& j, const std::string& text) const {
    const std::string payload = format == "json" ? j.dump(2) + "\n" : text;
    if (path.empty()) {
      std::cout << payload;
      return;
    }
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << payload;
  }
};

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--output", out.path, "Write the report to a file instead of stdout");
}

PropertyFunction load_property(const std::string& builtin_name, const std::string& input, int n) {
  if (builtin_name.empty() == input.empty())
    throw std::invalid_argument("give exactly one of --property or --input");
  if (!builtin_name.empty()) {
    if (n <= 0) throw std::invalid_argument("--n is required with --property");
    return builtin_property(builtin_name, n);
  }
  PropertyFunction f = read_property_file(input);
  if (n > 0 && f.vertex_count() != n)
    throw std::invalid_argument("--n disagrees with the input file");
  return f;
}

std::string render_witness_text(const ExtractionResult& result, const SensitivityResult& s) {
  std::ostringstream os;
  os << "witness point 0x" << graph_hex(result.best.point) << "  "
     << to_string(result.best.point) << "\n";
  os << "verified sensitivity: " << result.best.verified_sensitivity << " (method "
     << result.best.method << ")\n";
  os << "max sensitivity:      " << s.value
     << (result.best.verified_sensitivity == s.value ? "  [attained]" : "") << "\n";
  if (result.complemented) os << "analysis ran on the complement (f(empty) was 1)\n";
  os << "minimal graphs: " << result.minimal.graphs.size()
     << ", min positive degree " << result.minimal.min_positive_degree.to_string()
     << ", min tree size " << result.minimal.min_tree_size.to_string() << "\n";
  for (const Trace& t : result.traces) {
    os << "trace " << t.case_id << ": " << to_string(t.outcome) << ", "
       << t.harvested.size() << " harvest(s), " << t.steps.size() << " step(s)";
    if (t.false_claims > 0) os << ", " << t.false_claims << " FALSE CLAIM(S)";
    os << "\n";
  }
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"sensitivity toolkit for graph properties"};
  app.require_subcommand(1);

  std::string property_name, input_path;
  int n = 0;
  int jobs = 0;
  std::string mode = "exhaustive";
  std::uint64_t seed = 0;
  std::uint64_t count = 100000;

  Output analyze_out, verify_out, witness_out, classes_out, monotone_out;

  CLI::App* analyze = app.add_subcommand("analyze", "sensitivity, block sensitivity, minimal graphs");
  analyze->add_option("--property", property_name, "Builtin property name");
  analyze->add_option("--input", input_path, "Truth-table (GPTT) or class-set (JSON) file");
  analyze->add_option("--n", n, "Vertex count");
  analyze->add_option("--jobs", jobs, "Worker count (default: PROPERTY_LAB_JOBS or all cores)");
  add_output_flags(analyze, analyze_out);

  CLI::App* verify = app.add_subcommand("verify", "sweep properties and check sensitivity bounds");
  verify->add_option("--n", n, "Vertex count")->required();
  verify->add_option("--mode", mode, "exhaustive (n <= 4) or sample (n = 5, 6)")
      ->check(CLI::IsMember({"exhaustive", "sample"}));
  verify->add_option("--seed", seed, "Sample-mode RNG seed");
  verify->add_option("--count", count, "Sample-mode property count");
  verify->add_option("--jobs", jobs, "Worker count");
  add_output_flags(verify, verify_out);

  CLI::App* witness = app.add_subcommand("witness", "extract a verified high-sensitivity point");
  witness->add_option("--property", property_name, "Builtin property name");
  witness->add_option("--input", input_path, "Truth-table (GPTT) or class-set (JSON) file");
  witness->add_option("--n", n, "Vertex count");
  witness->add_option("--jobs", jobs, "Worker count");
  add_output_flags(witness, witness_out);

  CLI::App* classes = app.add_subcommand("classes", "list isomorphism classes with representatives");
  classes->add_option("--n", n, "Vertex count")->required();
  add_output_flags(classes, classes_out);

  CLI::App* monotone = app.add_subcommand("monotone-check",
                                          "assert s(f) >= n-1 for the monotone builtins");
  monotone->add_option("--n", n, "Vertex count")->required();
  monotone->add_option("--jobs", jobs, "Worker count");
  add_output_flags(monotone, monotone_out);

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) {
    const PropertyFunction f = load_property(property_name, input_path, n);
    const AnalysisReport report = analyze_property(f, jobs);
    analyze_out.emit(analysis_to_json(report), render_analysis_text(report));
    return kExitOk;
  }

  if (verify->parsed()) {
    const VerificationReport report = mode == "exhaustive"
                                          ? verify_exhaustive(n, jobs)
                                          : verify_sampled(n, seed, count, jobs);
    verify_out.emit(verification_to_json(report), render_verification_text(report));
    return report.asserted_bound_violated() ? kExitBoundViolation : kExitOk;
  }

  if (witness->parsed()) {
    const PropertyFunction f = load_property(property_name, input_path, n);
    const ExtractionResult result = extract_witness(f);
    const SensitivityResult s = max_sensitivity(f, jobs);
    json j = extraction_to_json(result);
    j["max_sensitivity"] = s.value;
    j["attained"] = result.best.verified_sensitivity == s.value;
    witness_out.emit(j, render_witness_text(result, s));
    return kExitOk;
  }

  if (classes->parsed()) {
    const auto list = enumerate_iso_classes(n);
    json out = json::array();
    std::ostringstream text;
    text << list.size() << " isomorphism classes on " << n << " vertices\n";
    for (const IsoClass& c : list) {
      out.push_back(json{{"signature", c.signature.to_hex()},
                         {"edges", graph_hex(c.representative)},
                         {"edge_list", [&] {
                            json edges = json::array();
                            for (const VertexPair& e : c.representative.edge_list())
                              edges.push_back(json::array({e.a, e.b}));
                            return edges;
                          }()}});
      text << "  0x" << c.signature.to_hex() << "  " << to_string(c.representative) << "\n";
    }
    classes_out.emit(json{{"n", n}, {"count", list.size()}, {"classes", out}}, text.str());
    return kExitOk;
  }

  if (monotone->parsed()) {
    const MonotoneCheckReport report = run_monotone_check(n, jobs);
    monotone_out.emit(monotone_check_to_json(report), render_monotone_check_text(report));
    return report.all_passed ? kExitOk : kExitBoundViolation;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformedInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
}
