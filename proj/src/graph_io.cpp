#include "duval/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "duval/errors.hpp"

namespace duval {

namespace {

using nlohmann::json;

std::int64_t integer_field(const json& object, const char* key, const std::string& where) {
  if (!object.is_object() || !object.contains(key)) {
    throw GraphError("document_schema", where + " is missing \"" + key + "\"");
  }
  const json& value = object.at(key);
  if (!value.is_number_integer()) {
    throw GraphError("document_schema", where + " field \"" + key + "\" must be an integer");
  }
  return value.get<std::int64_t>();
}

}  // namespace

DualGraph parse_graph_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GraphError("document_syntax", e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.at("vertices").is_array()) {
    throw GraphError("document_schema", "expected an object with a \"vertices\" array");
  }
  if (doc.contains("edges") && !doc.at("edges").is_array()) {
    throw GraphError("document_schema", "\"edges\" must be an array");
  }

  const json& vertices = doc.at("vertices");
  std::vector<std::int64_t> weights(vertices.size(), 0);
  std::vector<bool> filled(vertices.size(), false);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    const std::int64_t id = integer_field(vertices[i], "id", where);
    const std::int64_t weight = integer_field(vertices[i], "self_intersection", where);
    if (id < 0 || static_cast<std::size_t>(id) >= vertices.size() || filled[static_cast<std::size_t>(id)]) {
      throw GraphError("vertex_ids_contiguous",
                       where + " has id " + std::to_string(id) + "; ids must be 0..N-1 without repeats");
    }
    filled[static_cast<std::size_t>(id)] = true;
    weights[static_cast<std::size_t>(id)] = weight;
  }

  std::vector<GraphEdge> edges;
  if (doc.contains("edges")) {
    const json& list = doc.at("edges");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string where = "edges[" + std::to_string(i) + "]";
      const std::int64_t a = integer_field(list[i], "a", where);
      const std::int64_t b = integer_field(list[i], "b", where);
      const std::int64_t multiplicity = list[i].contains("multiplicity")
                                            ? integer_field(list[i], "multiplicity", where)
                                            : 1;
      if (a < 0 || b < 0) {
        throw GraphError("edge_endpoint_in_range", where + " has a negative endpoint");
      }
      edges.push_back({static_cast<std::size_t>(a), static_cast<std::size_t>(b), multiplicity});
    }
  }
  return DualGraph(std::move(weights), std::move(edges));
}

DualGraph load_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("document_syntax", "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_document(buffer.str());
}

std::string graph_document(const DualGraph& g) {
  json vertices = json::array();
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    vertices.push_back({{"id", i}, {"self_intersection", g.self_intersections()[i]}});
  }
  json edges = json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({{"a", e.a}, {"b", e.b}, {"multiplicity", e.multiplicity}});
  }
  json doc = {{"vertices", vertices}, {"edges", edges}};
  return doc.dump(2);
}

}  // namespace duval
