#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "duval/dual_graph.hpp"
#include "duval/fundamental_cycle.hpp"
#include "duval/quadrature.hpp"

namespace duval {

/// First: K_X^s = K_X = omega_X.  Second: K_X^s = m K_X, m the maximal ideal.
enum class Kind { First, Second };

std::string_view kind_name(Kind kind);

inline constexpr std::string_view kFirstKindFormula = "π_* K_M";
inline constexpr std::string_view kSecondKindFormula = "π_*(K_M ⊗ O(−Z))";
inline constexpr std::string_view kKindNotDetermined = "not determined: input is not a du Val graph";

struct EvidenceRow {
  int k;
  QuadratureResult integral;
  /// 4 I_k, the bound on ||dbar mu_k ^ omega||^2.
  double bound;

  friend bool operator==(const EvidenceRow&, const EvidenceRow&) = default;
};

struct NumericalEvidence {
  std::vector<EvidenceRow> rows;
  std::string note;

  friend bool operator==(const NumericalEvidence&, const NumericalEvidence&) = default;
};

struct ClassificationReport {
  std::string input_label;
  std::string dual_graph_summary;
  Cycle fundamental_cycle;
  bool reduced;
  /// Empty for graphs that are not du Val.
  std::optional<Kind> kind;
  /// Empty when kind is.
  std::string kxs_formula;
  std::optional<NumericalEvidence> numerical_evidence;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

inline constexpr int kEvidenceLevels = 3;

/// Verdict for the du Val singularity of the given type: the kind follows
/// from reducedness of the fundamental cycle on the minimal resolution.
/// With numerics, A_n reports get the I_k table for k = 1..3 and D/E
/// reports get an explanatory note instead.
/// Throws ParameterError for indices outside the ADE ranges; may throw
/// BudgetExceededError with numerics.
ClassificationReport classify(DynkinType type, int n, bool with_numerics = false, double rel_tol = 1e-4,
                              const QuadratureSettings& settings = {});

/// Same report driven by a user graph. Graphs that are not all-(-2) ADE
/// trees get a cycle and reducedness but no kind. Throws
/// NotNegativeDefiniteError when no fundamental cycle exists.
ClassificationReport classify_graph(const DualGraph& g);

std::string dual_graph_summary(const DualGraph& g);

/// JSON object with the ClassificationReport field names.
std::string report_structured(const ClassificationReport& report);
std::string report_plain(const ClassificationReport& report);

}  // namespace duval
