#include "duval/dual_graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "duval/errors.hpp"

namespace duval {

std::string DynkinLabel::to_string() const {
  return std::string(1, dynkin_letter(type)) + "_" + std::to_string(index);
}

char dynkin_letter(DynkinType type) {
  switch (type) {
    case DynkinType::A: return 'A';
    case DynkinType::D: return 'D';
    case DynkinType::E: return 'E';
  }
  return '?';
}

DynkinType parse_dynkin_type(std::string_view letter) {
  if (letter.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(letter[0]))) {
      case 'A': return DynkinType::A;
      case 'D': return DynkinType::D;
      case 'E': return DynkinType::E;
      default: break;
    }
  }
  throw ParameterError("unknown singularity type '" + std::string(letter) + "' (expected A, D or E)");
}

void check_dynkin_range(DynkinType type, int index) {
  bool ok = false;
  switch (type) {
    case DynkinType::A: ok = index >= 1; break;
    case DynkinType::D: ok = index >= 4; break;
    case DynkinType::E: ok = index >= 6 && index <= 8; break;
  }
  if (!ok) {
    throw ParameterError(std::string(1, dynkin_letter(type)) + "_" + std::to_string(index) +
                         " is not an ADE diagram (A: n>=1, D: n>=4, E: n in {6,7,8})");
  }
}

DualGraph::DualGraph(std::vector<std::int64_t> self_intersections, std::vector<GraphEdge> edges)
    : self_intersections_(std::move(self_intersections)) {
  const std::size_t n = self_intersections_.size();
  if (n == 0) throw GraphError("vertex_count_positive", "graph has no vertices");
  for (std::size_t i = 0; i < n; ++i) {
    if (self_intersections_[i] > -1) {
      throw GraphError("self_intersection_negative",
                       "vertex " + std::to_string(i) + " has self-intersection " +
                           std::to_string(self_intersections_[i]));
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (GraphEdge e : edges) {
    if (e.a >= n || e.b >= n) {
      throw GraphError("edge_endpoint_in_range", "edge (" + std::to_string(e.a) + ", " +
                                                     std::to_string(e.b) + ") refers to a missing vertex");
    }
    if (e.a == e.b) throw GraphError("no_self_loops", "self-loop at vertex " + std::to_string(e.a));
    if (e.multiplicity < 1) {
      throw GraphError("edge_multiplicity_positive",
                       "edge (" + std::to_string(e.a) + ", " + std::to_string(e.b) + ") has multiplicity " +
                           std::to_string(e.multiplicity));
    }
    if (e.a > e.b) std::swap(e.a, e.b);
    if (!seen.emplace(e.a, e.b).second) {
      throw GraphError("edges_unique",
                       "edge (" + std::to_string(e.a) + ", " + std::to_string(e.b) + ") listed twice");
    }
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const GraphEdge& l, const GraphEdge& r) { return std::tie(l.a, l.b) < std::tie(r.a, r.b); });

  // Union-find connectivity.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&parent](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t components = n;
  for (const auto& e : edges_) {
    const std::size_t ra = find(e.a), rb = find(e.b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  if (components != 1) {
    throw GraphError("connected", "graph has " + std::to_string(components) + " components");
  }
}

std::vector<std::size_t> DualGraph::degrees() const {
  std::vector<std::size_t> deg(vertex_count(), 0);
  for (const auto& e : edges_) {
    ++deg[e.a];
    ++deg[e.b];
  }
  return deg;
}

DualGraph build_dynkin(DynkinType type, int n) {
  check_dynkin_range(type, n);
  const auto count = static_cast<std::size_t>(n);
  std::vector<GraphEdge> edges;
  auto path = [&edges](std::size_t length) {
    for (std::size_t i = 0; i + 1 < length; ++i) edges.push_back({i, i + 1, 1});
  };
  switch (type) {
    case DynkinType::A:
      path(count);
      break;
    case DynkinType::D:
      path(count - 2);
      edges.push_back({count - 3, count - 2, 1});
      edges.push_back({count - 3, count - 1, 1});
      break;
    case DynkinType::E:
      path(count - 1);
      edges.push_back({2, count - 1, 1});
      break;
  }
  return DualGraph(std::vector<std::int64_t>(count, -2), std::move(edges));
}

std::optional<DynkinLabel> identify_dynkin(const DualGraph& g) {
  const std::size_t n = g.vertex_count();
  if (std::any_of(g.self_intersections().begin(), g.self_intersections().end(),
                  [](std::int64_t w) { return w != -2; })) {
    return std::nullopt;
  }
  if (g.edges().size() + 1 != n) return std::nullopt;
  for (const auto& e : g.edges()) {
    if (e.multiplicity != 1) return std::nullopt;
  }
  const auto deg = g.degrees();
  std::vector<std::size_t> branch;
  for (std::size_t v = 0; v < n; ++v) {
    if (deg[v] > 3) return std::nullopt;
    if (deg[v] == 3) branch.push_back(v);
  }
  const int index = static_cast<int>(n);
  if (branch.empty()) return DynkinLabel{DynkinType::A, index};
  if (branch.size() > 1) return std::nullopt;

  std::vector<std::vector<std::size_t>> adjacency(n);
  for (const auto& e : g.edges()) {
    adjacency[e.a].push_back(e.b);
    adjacency[e.b].push_back(e.a);
  }
  std::vector<std::size_t> arms;
  for (std::size_t start : adjacency[branch[0]]) {
    std::size_t previous = branch[0], current = start, length = 1;
    while (deg[current] == 2) {
      const std::size_t next = adjacency[current][0] == previous ? adjacency[current][1] : adjacency[current][0];
      previous = current;
      current = next;
      ++length;
    }
    arms.push_back(length);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] != 1) return std::nullopt;
  if (arms[1] == 1) return DynkinLabel{DynkinType::D, index};
  if (arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return DynkinLabel{DynkinType::E, index};
  return std::nullopt;
}

IntersectionForm::IntersectionForm(std::size_t size) : size_(size), entries_(size * size, 0) {}

IntersectionForm IntersectionForm::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  IntersectionForm form(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw ParameterError("intersection form must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) form(i, j) = rows[i][j];
  }
  return form;
}

bool IntersectionForm::is_symmetric() const {
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = i + 1; j < size_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

IntersectionForm intersection_form(const DualGraph& g) {
  IntersectionForm form(g.vertex_count());
  for (std::size_t i = 0; i < g.vertex_count(); ++i) form(i, i) = g.self_intersections()[i];
  for (const auto& e : g.edges()) {
    form(e.a, e.b) = e.multiplicity;
    form(e.b, e.a) = e.multiplicity;
  }
  return form;
}

namespace {

using BigMatrix = std::vector<std::vector<BigInt>>;

BigMatrix to_big(const IntersectionForm& form) {
  BigMatrix m(form.size(), std::vector<BigInt>(form.size()));
  for (std::size_t i = 0; i < form.size(); ++i) {
    for (std::size_t j = 0; j < form.size(); ++j) m[i][j] = form(i, j);
  }
  return m;
}

}  // namespace

std::vector<BigInt> leading_principal_minors(const IntersectionForm& form) {
  // After step k of fraction-free elimination without pivoting, entry (k, k)
  // equals the leading principal minor of order k + 1.
  BigMatrix m = to_big(form);
  const std::size_t n = form.size();
  std::vector<BigInt> minors;
  BigInt previous = 1;
  for (std::size_t k = 0; k < n; ++k) {
    minors.push_back(m[k][k]);
    if (m[k][k] == 0) break;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / previous;
      }
    }
    previous = m[k][k];
  }
  return minors;
}

bool is_negative_definite(const IntersectionForm& form) {
  if (form.size() == 0 || !form.is_symmetric()) return false;
  const auto minors = leading_principal_minors(form);
  if (minors.size() != form.size()) return false;
  for (std::size_t k = 0; k < minors.size(); ++k) {
    // Order k + 1 minor must have sign (-1)^(k+1).
    const bool odd_order = (k % 2) == 0;
    if (odd_order ? !(minors[k] < 0) : !(minors[k] > 0)) return false;
  }
  return true;
}

BigInt determinant(const IntersectionForm& form) {
  BigMatrix m = to_big(form);
  const std::size_t n = form.size();
  if (n == 0) return 1;
  BigInt previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / previous;
      }
    }
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace duval
