#include "duval/classifier.hpp"

#include <sstream>

#include "duval/cutoff.hpp"

namespace duval {

namespace {

constexpr std::string_view kSecondKindNote =
    "no numeric table for D and E types: the second-kind verdict rests on an obstruction "
    "to a resolution with reduced fundamental cycle, not on an integral estimate";

ClassificationReport assemble(std::string label, const DualGraph& g, bool du_val) {
  Cycle z = fundamental_cycle(g);
  const bool reduced = is_reduced(z);
  ClassificationReport report{std::move(label), dual_graph_summary(g), std::move(z), reduced, std::nullopt, {}, {}};
  if (du_val) {
    report.kind = reduced ? Kind::First : Kind::Second;
    report.kxs_formula = reduced ? kFirstKindFormula : kSecondKindFormula;
  }
  return report;
}

}  // namespace

std::string_view kind_name(Kind kind) { return kind == Kind::First ? "First" : "Second"; }

std::string dual_graph_summary(const DualGraph& g) {
  std::ostringstream os;
  os << g.vertex_count() << (g.vertex_count() == 1 ? " vertex" : " vertices") << ", " << g.edges().size()
     << (g.edges().size() == 1 ? " edge" : " edges") << "; self-intersections";
  for (auto w : g.self_intersections()) os << ' ' << w;
  if (!g.edges().empty()) {
    os << "; edges";
    for (const auto& e : g.edges()) {
      os << ' ' << e.a << '-' << e.b;
      if (e.multiplicity != 1) os << 'x' << e.multiplicity;
    }
  }
  return os.str();
}

ClassificationReport classify(DynkinType type, int n, bool with_numerics, double rel_tol,
                              const QuadratureSettings& settings) {
  check_dynkin_range(type, n);
  const DynkinLabel label{type, n};
  ClassificationReport report = assemble(label.to_string(), build_dynkin(type, n), true);
  if (!with_numerics) return report;

  NumericalEvidence evidence;
  if (type == DynkinType::A) {
    for (int k = 1; k <= kEvidenceLevels; ++k) {
      const QuadratureResult r = integral_Ik(n, k, rel_tol, settings);
      evidence.rows.push_back(EvidenceRow{k, r, kGradientConstant * kGradientConstant * r.value});
    }
    evidence.note = "bound = 4 I_k dominates ||dbar mu_k ^ omega||^2; boundedness in k puts omega in the domain of the strong dbar";
  } else {
    evidence.note = kSecondKindNote;
  }
  report.numerical_evidence = std::move(evidence);
  return report;
}

ClassificationReport classify_graph(const DualGraph& g) {
  const auto label = identify_dynkin(g);
  return assemble(label ? label->to_string() : "graph", g, label.has_value());
}

}  // namespace duval
