#include "mst/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mst/rational.hpp"

namespace mst {

ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "text") return ReportFormat::Text;
  throw std::invalid_argument("unknown format '" + name + "' (json|csv|text)");
}

std::size_t ViolationReport::unexpected() const {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(), [](const Violation& v) { return !v.expected; }));
}

bool ViolationReport::pass() const { return unexpected() == 0 && missing_exclusions.empty(); }

namespace {

// Shard-local details: counters add, lists concatenate, "min_*" keep the
// smallest exact value ("none" when absent).
void merge_details(nlohmann::ordered_json& into, const nlohmann::ordered_json& from) {
  for (const auto& [key, value] : from.items()) {
    if (!into.contains(key)) {
      into[key] = value;
      continue;
    }
    auto& current = into[key];
    if (current.is_number_unsigned() && value.is_number_unsigned()) {
      current = current.get<std::uint64_t>() + value.get<std::uint64_t>();
    } else if (current.is_array() && value.is_array()) {
      for (const auto& item : value) current.push_back(item);
    } else if (key.starts_with("min_") && current.is_string() && value.is_string()) {
      const auto a = current.get<std::string>();
      const auto b = value.get<std::string>();
      if (a == "none" || (b != "none" && Rational::parse(b) < Rational::parse(a))) current = b;
    } else {
      current = value;
    }
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void ViolationReport::merge(const ViolationReport& other) {
  corpus_size += other.corpus_size;
  cases += other.cases;
  for (const auto& c : other.checks)
    if (std::find(checks.begin(), checks.end(), c) == checks.end()) checks.push_back(c);
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  for (const auto& m : other.missing_exclusions)
    if (std::find(missing_exclusions.begin(), missing_exclusions.end(), m) == missing_exclusions.end())
      missing_exclusions.push_back(m);
  merge_details(details, other.details);
  wall_time_s += other.wall_time_s;
}

nlohmann::ordered_json to_json(const ViolationReport& report, bool include_wall_time) {
  nlohmann::ordered_json out;
  out["pass"] = report.pass();
  out["corpus"] = report.corpus;
  out["scope"] = report.scope;
  out["corpus_size"] = report.corpus_size;
  out["cases"] = report.cases;
  out["checks"] = report.checks;
  out["summary"] = {
      {"violations", report.violations.size()},
      {"unexpected", report.unexpected()},
      {"expected_exclusions", report.violations.size() - report.unexpected()},
  };
  auto violations = nlohmann::ordered_json::array();
  for (const Violation& v : report.violations) {
    nlohmann::ordered_json item;
    item["check"] = v.check;
    item["tree"] = v.tree;
    item["site"] = v.site;
    item["value"] = v.value;
    if (!v.rooted.empty()) item["rooted"] = v.rooted;
    item["expected"] = v.expected;
    violations.push_back(std::move(item));
  }
  out["violations"] = std::move(violations);
  out["missing_exclusions"] = report.missing_exclusions;
  out["details"] = report.details;
  if (include_wall_time) out["wall_time_s"] = report.wall_time_s;
  return out;
}

std::string emit_report(const ViolationReport& report, ReportFormat format, bool include_wall_time) {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::Json:
      out << to_json(report, include_wall_time).dump(2) << '\n';
      break;
    case ReportFormat::Csv:
      out << "check,tree,site,value,expected\n";
      for (const Violation& v : report.violations)
        out << csv_field(v.check) << ',' << csv_field(v.tree) << ',' << csv_field(v.site) << ','
            << csv_field(v.value) << ',' << (v.expected ? "true" : "false") << '\n';
      break;
    case ReportFormat::Text:
      out << (report.pass() ? "PASS" : "FAIL") << "  " << report.corpus << " [" << report.scope << "]\n";
      out << "  trees: " << report.corpus_size << "  cases: " << report.cases << "  checks:";
      for (const auto& c : report.checks) out << ' ' << c;
      out << '\n';
      out << "  violations: " << report.violations.size() << " (" << report.unexpected() << " unexpected)\n";
      for (const Violation& v : report.violations)
        out << "    [" << v.check << "] " << v.tree << "  " << v.site << "  value " << v.value
            << (v.expected ? "  (excluded)" : "") << '\n';
      for (const auto& m : report.missing_exclusions) out << "  missing exclusion: " << m << '\n';
      for (const auto& [key, value] : report.details.items()) out << "  " << key << ": " << value.dump() << '\n';
      if (include_wall_time) out << "  wall time: " << report.wall_time_s << " s\n";
      break;
  }
  return out.str();
}

}  // namespace mst
