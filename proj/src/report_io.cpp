#include <cstdint>
#include <cstdio>
#include <json.hpp>
#include <limits>
#include <sstream>

#include "duval/classifier.hpp"

namespace duval {

namespace {

using nlohmann::ordered_json;

ordered_json coefficient_json(const BigInt& c) {
  if (c <= BigInt(std::numeric_limits<std::int64_t>::max())) return c.convert_to<std::int64_t>();
  return c.str();
}

std::string sci(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.16e", x);
  return buffer;
}

}  // namespace

std::string report_structured(const ClassificationReport& report) {
  ordered_json doc;
  doc["input_label"] = report.input_label;
  doc["dual_graph_summary"] = report.dual_graph_summary;
  ordered_json cycle = ordered_json::array();
  for (const auto& c : report.fundamental_cycle.coefficients()) cycle.push_back(coefficient_json(c));
  doc["fundamental_cycle"] = cycle;
  doc["reduced"] = report.reduced;
  doc["kind"] = report.kind ? std::string(kind_name(*report.kind)) : std::string(kKindNotDetermined);
  doc["kxs_formula"] = report.kxs_formula.empty() ? ordered_json(nullptr) : ordered_json(report.kxs_formula);
  if (report.numerical_evidence) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : report.numerical_evidence->rows) {
      rows.push_back({{"k", row.k},
                      {"value", row.integral.value},
                      {"error_estimate", row.integral.error_estimate},
                      {"truncation_bound", row.integral.truncation_bound},
                      {"subregions_used", row.integral.subregions_used},
                      {"bound", row.bound}});
    }
    doc["numerical_evidence"] = {{"rows", rows}, {"note", report.numerical_evidence->note}};
  } else {
    doc["numerical_evidence"] = nullptr;
  }
  return doc.dump(2) + "\n";
}

std::string report_plain(const ClassificationReport& report) {
  std::ostringstream os;
  os << "input_label: " << report.input_label << '\n';
  os << "dual_graph_summary: " << report.dual_graph_summary << '\n';
  os << "fundamental_cycle: " << report.fundamental_cycle.to_string() << '\n';
  os << "reduced: " << (report.reduced ? "true" : "false") << '\n';
  os << "kind: " << (report.kind ? kind_name(*report.kind) : kKindNotDetermined) << '\n';
  if (!report.kxs_formula.empty()) os << "kxs_formula: K_X^s = " << report.kxs_formula << '\n';
  if (report.numerical_evidence) {
    const auto& ev = report.numerical_evidence.value();
    os << "numerical_evidence:\n";
    if (!ev.rows.empty()) {
      os << "  k  I_k                      error                    bound (4 I_k)\n";
      for (const auto& row : ev.rows) {
        os << "  " << row.k << "  " << sci(row.integral.value) << "  " << sci(row.integral.error_estimate) << "  "
           << sci(row.bound) << '\n';
      }
    }
    os << "  note: " << ev.note << '\n';
  }
  return os.str();
}

}  // namespace duval
