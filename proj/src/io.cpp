#include "proplab/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace proplab {

namespace {

using nlohmann::json;

constexpr char kMagic[4] = {'G', 'P', 'T', 'T'};

void write_u32(std::ostream& os, std::uint32_t v) {
  const unsigned char bytes[4] = {
      static_cast<unsigned char>(v & 0xff), static_cast<unsigned char>((v >> 8) & 0xff),
      static_cast<unsigned char>((v >> 16) & 0xff), static_cast<unsigned char>((v >> 24) & 0xff)};
  os.write(reinterpret_cast<const char*>(bytes), 4);
}

std::uint32_t read_u32(std::istream& is) {
  unsigned char bytes[4];
  is.read(reinterpret_cast<char*>(bytes), 4);
  if (!is) throw std::runtime_error("truth table file truncated");
  return static_cast<std::uint32_t>(bytes[0]) | (static_cast<std::uint32_t>(bytes[1]) << 8) |
         (static_cast<std::uint32_t>(bytes[2]) << 16) | (static_cast<std::uint32_t>(bytes[3]) << 24);
}

std::uint64_t hex_to_mask(const std::string& hex) {
  if (hex.empty()) throw std::runtime_error("empty hex mask");
  std::uint64_t v = 0;
  for (const char c : hex) {
    v <<= 4;
    if (c >= '0' && c <= '9') v |= static_cast<std::uint64_t>(c - '0');
    else if (c >= 'a' && c <= 'f') v |= static_cast<std::uint64_t>(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F') v |= static_cast<std::uint64_t>(c - 'A' + 10);
    else throw std::runtime_error("invalid hex mask: " + hex);
  }
  return v;
}

std::string mask_hex(std::uint64_t mask) {
  std::ostringstream os;
  os << std::hex << mask;
  return os.str();
}

}  // namespace

std::string graph_hex(const LabeledGraph& g) { return mask_hex(g.edges); }

void write_truth_table(std::ostream& os, const PropertyFunction& f) {
  if (!f.has_table()) throw std::invalid_argument("write_truth_table requires a truth table");
  os.write(kMagic, 4);
  write_u32(os, static_cast<std::uint32_t>(f.vertex_count()));
  write_u32(os, f.arity());
  const TruthTable& t = f.table();
  const std::uint64_t bytes = (t.size() + 7) / 8;
  for (std::uint64_t k = 0; k < bytes; ++k) {
    unsigned char byte = 0;
    for (int j = 0; j < 8; ++j) {
      const std::uint64_t point = 8 * k + static_cast<std::uint64_t>(j);
      if (point < t.size() && t.get(point)) byte |= static_cast<unsigned char>(1u << j);
    }
    os.write(reinterpret_cast<const char*>(&byte), 1);
  }
}

void write_truth_table_file(const std::string& path, const PropertyFunction& f) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  write_truth_table(os, f);
}

PropertyFunction read_truth_table(std::istream& is) {
  char magic[4];
  is.read(magic, 4);
  if (!is || std::string(magic, 4) != std::string(kMagic, 4))
    throw std::runtime_error("not a truth table file (bad magic)");
  const std::uint32_t n = read_u32(is);
  const std::uint32_t arity = read_u32(is);
  if (arity > TruthTable::kMaxArity) throw std::runtime_error("truth table arity exceeds 28");
  if (n > 0 && arity != static_cast<std::uint32_t>(n) * (n - 1) / 2)
    throw std::runtime_error("truth table arity does not match n(n-1)/2");
  TruthTable t(arity);
  const std::uint64_t bytes = (t.size() + 7) / 8;
  for (std::uint64_t k = 0; k < bytes; ++k) {
    unsigned char byte;
    is.read(reinterpret_cast<char*>(&byte), 1);
    if (!is) throw std::runtime_error("truth table file truncated");
    for (int j = 0; j < 8; ++j) {
      const std::uint64_t point = 8 * k + static_cast<std::uint64_t>(j);
      if (point < t.size() && ((byte >> j) & 1)) t.set(point, true);
    }
  }
  return n > 0 ? PropertyFunction::graph_from_table(static_cast<int>(n), std::move(t))
               : PropertyFunction::boolean_from_table(std::move(t));
}

PropertyFunction read_truth_table_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open: " + path);
  return read_truth_table(is);
}

json class_subset_to_json(const ClassSubset& subset) {
  json classes = json::array();
  for (const std::uint64_t mask : subset.class_masks) classes.push_back(mask_hex(mask));
  return json{{"n", subset.n}, {"classes", classes}};
}

ClassSubset class_subset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("classes"))
    throw std::runtime_error("class set file needs fields \"n\" and \"classes\"");
  ClassSubset out;
  out.n = j.at("n").get<int>();
  for (const auto& item : j.at("classes")) out.class_masks.push_back(hex_to_mask(item.get<std::string>()));
  std::sort(out.class_masks.begin(), out.class_masks.end());
  out.class_masks.erase(std::unique(out.class_masks.begin(), out.class_masks.end()),
                        out.class_masks.end());
  return out;
}

PropertyFunction read_class_set_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open: " + path);
  json j;
  try {
    is >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error("malformed class set file: " + std::string(e.what()));
  }
  const ClassSubset subset = class_subset_from_json(j);
  std::vector<CanonicalSignature> sigs;
  sigs.reserve(subset.class_masks.size());
  for (const std::uint64_t mask : subset.class_masks)
    sigs.push_back(CanonicalSignature{subset.n, mask});
  try {
    return property_from_class_set(subset.n, sigs);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(e.what());
  }
}

PropertyFunction read_property_file(const std::string& path) {
  std::ifstream probe(path, std::ios::binary);
  if (!probe) throw std::runtime_error("cannot open: " + path);
  char magic[4] = {0, 0, 0, 0};
  probe.read(magic, 4);
  probe.close();
  if (std::string(magic, 4) == std::string(kMagic, 4)) return read_truth_table_file(path);
  return read_class_set_file(path);
}

json witness_report_to_json(const WitnessReport& report) {
  return json{{"point", graph_hex(report.point)},
              {"claimed", report.claimed_coordinates},
              {"verified_sensitivity", report.verified_sensitivity},
              {"method", report.method}};
}

json trace_to_json(const Trace& trace) {
  json steps = json::array();
  for (const TraceStep& s : trace.steps) {
    json step{{"action", to_string(s.action)},
              {"graph", graph_hex(s.graph_after)},
              {"f", s.f_value ? 1 : 0},
              {"note", s.note}};
    if (s.edge)
      step["edge"] = json::array({s.edge->a, s.edge->b});
    else
      step["edge"] = nullptr;
    steps.push_back(std::move(step));
  }
  json harvests = json::array();
  for (const WitnessReport& w : trace.harvested) harvests.push_back(witness_report_to_json(w));
  return json{{"case", trace.case_id},
              {"steps", steps},
              {"harvests", harvests},
              {"outcome", to_string(trace.outcome)},
              {"false_claims", trace.false_claims}};
}

json minimal_graphs_to_json(const MinimalGraphSet& mset) {
  json graphs = json::array();
  for (const LabeledGraph& g : mset.graphs) graphs.push_back(graph_hex(g));
  const auto count_or_inf = [](const CountOrInf& c) {
    return c.is_infinite() ? json("inf") : json(c.value());
  };
  return json{{"n", mset.n},
              {"graphs", graphs},
              {"positive_min_degree", count_or_inf(mset.min_positive_degree)},
              {"min_tree_size", count_or_inf(mset.min_tree_size)}};
}

json extraction_to_json(const ExtractionResult& result) {
  json traces = json::array();
  for (const Trace& t : result.traces) traces.push_back(trace_to_json(t));
  return json{{"best", witness_report_to_json(result.best)},
              {"traces", traces},
              {"minimal", minimal_graphs_to_json(result.minimal)},
              {"complemented", result.complemented}};
}

json verification_to_json(const VerificationReport& report) {
  json histogram = json::object();
  for (const auto& [s, count] : report.histogram) histogram[std::to_string(s)] = count;
  json bounds = json::array();
  for (const BoundCheck& b : report.bounds) {
    json check{{"name", b.name},
               {"threshold", b.threshold},
               {"asserted", b.asserted},
               {"status", b.status}};
    if (b.violation_witness) check["violation_witness"] = class_subset_to_json(*b.violation_witness);
    bounds.push_back(std::move(check));
  }
  json j{{"schema", report.schema},
         {"n", report.n},
         {"mode", report.mode},
         {"properties_examined", report.properties_examined},
         {"min_sensitivity", report.min_sensitivity},
         {"min_attaining", class_subset_to_json(report.min_attaining)},
         {"histogram", histogram},
         {"bounds", bounds},
         {"jobs", report.jobs},
         {"wall_seconds", report.wall_seconds}};
  if (report.mode == "sample") j["seed"] = report.seed;
  return j;
}

json analysis_to_json(const AnalysisReport& report) {
  json j{{"n", report.n},
         {"arity", report.arity},
         {"nontrivial", report.nontrivial},
         {"graph_property", report.graph_property},
         {"monotone", report.monotone},
         {"sensitivity", report.sensitivity.value},
         {"sensitivity_witness", mask_hex(report.sensitivity.witness.bits)},
         {"sensitive_coordinates", report.sensitivity.sensitive_coordinates}};
  if (report.block_sensitivity) j["block_sensitivity"] = *report.block_sensitivity;
  if (report.minimal) {
    j["minimal"] = minimal_graphs_to_json(*report.minimal);
    j["minimal_from_complement"] = report.minimal_from_complement;
  }
  return j;
}

json monotone_check_to_json(const MonotoneCheckReport& report) {
  json rows = json::array();
  for (const MonotoneCheckRow& r : report.rows) {
    rows.push_back(json{{"name", r.name},
                        {"monotone", r.monotone},
                        {"nontrivial", r.nontrivial},
                        {"checked", r.checked},
                        {"sensitivity", r.sensitivity},
                        {"threshold", r.threshold},
                        {"passed", r.passed}});
  }
  return json{{"n", report.n}, {"rows", rows}, {"all_passed", report.all_passed}};
}

json inequalities_to_json(const std::vector<InequalityCheck>& checks) {
  json out = json::array();
  for (const InequalityCheck& c : checks) {
    json values = json::object();
    for (const auto& [key, value] : c.values) values[key] = value;
    out.push_back(json{{"id", c.id}, {"holds", c.holds}, {"values", values}});
  }
  return out;
}

std::string render_verification_text(const VerificationReport& report) {
  std::ostringstream os;
  os << "verification  n=" << report.n << "  mode=" << report.mode;
  if (report.mode == "sample") os << "  seed=" << report.seed;
  os << "\nproperties examined: " << report.properties_examined << "\n";
  os << "min sensitivity:     " << report.min_sensitivity << "\n";
  os << "histogram (s -> count):\n";
  for (const auto& [s, count] : report.histogram)
    os << "  " << s << "  " << count << "\n";
  for (const BoundCheck& b : report.bounds) {
    os << (b.asserted ? "asserted " : "observed ") << b.name << " (s >= " << b.threshold
       << "): " << b.status << "\n";
  }
  os << "wall time: " << report.wall_seconds << " s, jobs: " << report.jobs << "\n";
  return os.str();
}

std::string render_analysis_text(const AnalysisReport& report) {
  std::ostringstream os;
  if (report.n > 0)
    os << "graph function on n=" << report.n << " vertices, " << report.arity << " coordinates\n";
  else
    os << "boolean function on " << report.arity << " coordinates\n";
  os << "nontrivial:     " << (report.nontrivial ? "yes" : "no") << "\n";
  if (report.n > 0)
    os << "graph property: " << (report.graph_property ? "yes" : "no") << "\n";
  os << "monotone:       " << (report.monotone ? "yes" : "no") << "\n";
  os << "sensitivity:    " << report.sensitivity.value << " at point 0x"
     << mask_hex(report.sensitivity.witness.bits) << "\n";
  if (report.block_sensitivity)
    os << "block sens.:    " << *report.block_sensitivity << "\n";
  if (report.minimal) {
    os << "minimal graphs: " << report.minimal->graphs.size()
       << (report.minimal_from_complement ? " (of the complement)" : "") << "\n";
    os << "min positive degree: " << report.minimal->min_positive_degree.to_string() << "\n";
    os << "min tree size:       " << report.minimal->min_tree_size.to_string() << "\n";
  }
  return os.str();
}

std::string render_monotone_check_text(const MonotoneCheckReport& report) {
  std::ostringstream os;
  os << "monotone bound check at n=" << report.n << " (threshold s >= " << report.n - 1 << ")\n";
  for (const MonotoneCheckRow& r : report.rows) {
    os << "  " << r.name << ": ";
    if (!r.monotone)
      os << "skipped (not monotone)";
    else if (!r.nontrivial)
      os << "skipped (trivial at this n)";
    else
      os << "s=" << r.sensitivity << " " << (r.passed ? "ok" : "VIOLATED");
    os << "\n";
  }
  os << (report.all_passed ? "all asserted checks passed" : "ASSERTED CHECK FAILED") << "\n";
  return os.str();
}

}  // namespace proplab
