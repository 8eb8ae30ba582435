#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "duval/dual_graph.hpp"

namespace duval {

/// Graph document:
///   { "vertices": [{"id": 0, "self_intersection": -2}, ...],
///     "edges":    [{"a": 0, "b": 1, "multiplicity": 1}, ...] }
///
/// Vertex ids must be exactly 0..N-1 (any order). "multiplicity" defaults to 1.
/// Any problem is reported as GraphError naming the first violated invariant;
/// document-level problems use "document_syntax", "document_schema" and "vertex_ids_contiguous".
DualGraph parse_graph_document(std::string_view text);
DualGraph load_graph_file(const std::filesystem::path& path);

std::string graph_document(const DualGraph& g);

}  // namespace duval
