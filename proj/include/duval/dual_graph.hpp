#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "duval/polynomial.hpp"

namespace duval {

enum class DynkinType { A, D, E };

/// Dynkin label such as A_3 or E_8.
struct DynkinLabel {
  DynkinType type;
  int index;

  std::string to_string() const;
  friend bool operator==(const DynkinLabel&, const DynkinLabel&) = default;
};

/// Throws ParameterError unless (type, index) names an ADE diagram:
/// A: n >= 1, D: n >= 4, E: n in {6, 7, 8}.
void check_dynkin_range(DynkinType type, int index);
/// Parses "A"/"D"/"E" (case-insensitive). Throws ParameterError.
DynkinType parse_dynkin_type(std::string_view letter);
char dynkin_letter(DynkinType type);

struct GraphEdge {
  std::size_t a;
  std::size_t b;
  std::int64_t multiplicity;
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// Resolution dual graph: vertex i is the exceptional curve E_i with
/// self-intersection E_i.E_i, edges carry E_i.E_j for i != j.
///
/// Invariants (checked on construction, GraphError names the first violated one):
///   vertex_count_positive, self_intersection_negative (<= -1), edge_endpoint_in_range,
///   no_self_loops, edge_multiplicity_positive, edges_unique, connected.
/// Edges are stored with a < b, sorted.
class DualGraph {
 public:
  DualGraph(std::vector<std::int64_t> self_intersections, std::vector<GraphEdge> edges);

  std::size_t vertex_count() const noexcept { return self_intersections_.size(); }
  const std::vector<std::int64_t>& self_intersections() const noexcept { return self_intersections_; }
  const std::vector<GraphEdge>& edges() const noexcept { return edges_; }
  std::vector<std::size_t> degrees() const;

  friend bool operator==(const DualGraph&, const DualGraph&) = default;

 private:
  std::vector<std::int64_t> self_intersections_;
  std::vector<GraphEdge> edges_;
};

/// Standard ADE tree with all weights -2. Vertex numbering:
///   A_n: path 0-1-...-(n-1)
///   D_n: path 0-...-(n-3), leaves n-2 and n-1 on vertex n-3
///   E_n: path 0-...-(n-2), leaf n-1 on vertex 2
DualGraph build_dynkin(DynkinType type, int n);

/// Recognizes an all-(-2) ADE tree up to renumbering.
std::optional<DynkinLabel> identify_dynkin(const DualGraph& g);

/// Symmetric integer matrix with entry (i, j) = E_i.E_j.
class IntersectionForm {
 public:
  explicit IntersectionForm(std::size_t size);
  /// Builds from rows; throws ParameterError if not square.
  static IntersectionForm from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t size() const noexcept { return size_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return entries_[i * size_ + j]; }
  bool is_symmetric() const;

  friend bool operator==(const IntersectionForm&, const IntersectionForm&) = default;

 private:
  std::size_t size_;
  std::vector<std::int64_t> entries_;
};

IntersectionForm intersection_form(const DualGraph& g);

/// Leading principal minors M_1..M_k computed exactly by fraction-free
/// (Bareiss) elimination. Stops after the first zero minor.
std::vector<BigInt> leading_principal_minors(const IntersectionForm& form);

/// True iff (-1)^k M_k > 0 for every k.
bool is_negative_definite(const IntersectionForm& form);

/// Exact determinant (Bareiss with row pivoting).
BigInt determinant(const IntersectionForm& form);

}  // namespace duval
