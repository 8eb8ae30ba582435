#include <doctest.h>

#include <json.hpp>

#include "../support.hpp"
#include "duval/classifier.hpp"
#include "duval/errors.hpp"
#include "duval/graph_io.hpp"

using namespace duval;

namespace {

Cycle cycle_of(std::initializer_list<int> values) {
  std::vector<BigInt> c;
  for (int v : values) c.emplace_back(v);
  return Cycle(std::move(c));
}

}  // namespace

TEST_CASE("kind verdicts over the ADE ranges") {
  for (int n = 1; n <= 12; ++n) {
    const auto r = classify(DynkinType::A, n);
    CHECK(r.kind == Kind::First);
    CHECK(r.reduced);
    CHECK(r.kxs_formula == kFirstKindFormula);
  }
  for (int n = 4; n <= 10; ++n) CHECK(classify(DynkinType::D, n).kind == Kind::Second);
  for (int n = 6; n <= 8; ++n) {
    const auto r = classify(DynkinType::E, n);
    CHECK(r.kind == Kind::Second);
    CHECK_FALSE(r.reduced);
    CHECK(r.kxs_formula == kSecondKindFormula);
  }
  CHECK_THROWS_AS(classify(DynkinType::E, 9), ParameterError);
  CHECK_THROWS_AS(classify(DynkinType::D, 3), ParameterError);
  CHECK_THROWS_AS(classify(DynkinType::A, 0), ParameterError);
}

TEST_CASE("report examples") {
  const auto a2 = classify(DynkinType::A, 2);
  CHECK(a2.input_label == "A_2");
  CHECK(a2.fundamental_cycle == cycle_of({1, 1}));
  const auto d4 = classify(DynkinType::D, 4);
  CHECK(d4.fundamental_cycle == cycle_of({1, 2, 1, 1}));
  CHECK(d4.dual_graph_summary == "4 vertices, 3 edges; self-intersections -2 -2 -2 -2; edges 0-1 1-2 1-3");
  CHECK_FALSE(d4.numerical_evidence.has_value());
}

TEST_CASE("report invariant: reduced iff first kind") {
  for (const auto& label : testing::ade_labels(12)) {
    const auto r = classify(label.type, label.index);
    REQUIRE(r.kind.has_value());
    CHECK(r.reduced == (*r.kind == Kind::First));
    CHECK(r.kxs_formula == (*r.kind == Kind::First ? kFirstKindFormula : kSecondKindFormula));
  }
}

TEST_CASE("classify_graph matches classify through the file format") {
  for (const auto& label : testing::ade_labels(10)) {
    CAPTURE(label.to_string());
    const DualGraph g = parse_graph_document(graph_document(build_dynkin(label.type, label.index)));
    CHECK(classify_graph(g) == classify(label.type, label.index));
  }
  const auto d6 = classify_graph(build_dynkin(DynkinType::D, 6));
  CHECK(d6.fundamental_cycle == cycle_of({1, 2, 2, 2, 1, 1}));
  CHECK(d6.kind == Kind::Second);
}

TEST_CASE("non du Val graphs get no kind") {
  const DualGraph chain({-2, -3, -2}, {{0, 1, 1}, {1, 2, 1}});
  const auto r = classify_graph(chain);
  CHECK(r.input_label == "graph");
  CHECK(r.fundamental_cycle == cycle_of({1, 1, 1}));
  CHECK(r.reduced);
  CHECK_FALSE(r.kind.has_value());
  CHECK(r.kxs_formula.empty());
  CHECK_FALSE(r.numerical_evidence.has_value());
  const auto doc = nlohmann::json::parse(report_structured(r));
  CHECK(doc["kind"] == std::string(kKindNotDetermined));
  CHECK(doc["kxs_formula"].is_null());

  const DualGraph indefinite({-1, -1}, {{0, 1, 1}});
  CHECK_THROWS_AS(classify_graph(indefinite), NotNegativeDefiniteError);
}

TEST_CASE("numerical evidence") {
  const auto r = classify(DynkinType::A, 1, true, 1e-4);
  REQUIRE(r.numerical_evidence.has_value());
  const auto& rows = r.numerical_evidence->rows;
  REQUIRE(rows.size() == static_cast<std::size_t>(kEvidenceLevels));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].k == static_cast<int>(i) + 1);
    CHECK(rows[i].bound == 4.0 * rows[i].integral.value);
    if (i > 0) CHECK(rows[i].integral.value < rows[i - 1].integral.value);
  }
  CHECK_FALSE(r.numerical_evidence->note.empty());

  const auto e7 = classify(DynkinType::E, 7, true);
  REQUIRE(e7.numerical_evidence.has_value());
  CHECK(e7.numerical_evidence->rows.empty());
  CHECK_FALSE(e7.numerical_evidence->note.empty());
  CHECK_THROWS_AS(classify(DynkinType::A, 1, true, 1e-10), ParameterError);
}

TEST_CASE("structured report fields") {
  const auto doc = nlohmann::json::parse(report_structured(classify(DynkinType::A, 2, true)));
  for (const char* key : {"input_label", "dual_graph_summary", "fundamental_cycle", "reduced", "kind", "kxs_formula",
                          "numerical_evidence"}) {
    CHECK(doc.contains(key));
  }
  CHECK(doc["kind"] == "First");
  CHECK(doc["fundamental_cycle"] == nlohmann::json::array({1, 1}));
  CHECK(doc["numerical_evidence"]["rows"].size() == 3);
  CHECK(doc["numerical_evidence"]["rows"][0]["k"] == 1);

  const std::string plain = report_plain(classify(DynkinType::D, 5));
  CHECK(plain.find("kind: Second") != std::string::npos);
  CHECK(plain.find("reduced: false") != std::string::npos);
}
