#include "doctest.h"
#include "ietilt/error.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace ietilt;

TEST_SUITE("catalog") {
  TEST_CASE("index sets") {
    IndexSet s{0, 3, 5};
    CHECK(s.size() == 3);
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(4));
    CHECK(s.members() == std::vector<std::size_t>{0, 3, 5});
    CHECK((s - IndexSet{3}).size() == 2);
    CHECK(IndexSet{0}.subset_of(s));
    CHECK(IndexSet{} < IndexSet{5});
    CHECK(IndexSet{5} < IndexSet{0, 1});
    CHECK(support_set({1, 1, 4}) == IndexSet{1, 4});
    CHECK(IndexSet::full(64).size() == 64);
  }

  TEST_CASE("interval catalogs") {
    CHECK(interval_catalog(fixtures::nakayama_a3()).size() == 5);
    CHECK(interval_catalog(fixtures::hereditary_a2()).size() == 3);
    CHECK(interval_catalog(fixtures::linear_a3()).size() == 6);
    CHECK(interval_catalog(fixtures::one_vertex()).size() == 1);
    const auto kronecker = make_algebra({"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}}, {}, 2);
    CHECK_THROWS_AS(interval_catalog(kronecker), InvalidInput);
  }

  TEST_CASE("labels and order") {
    const auto cat = interval_catalog(fixtures::nakayama_a3());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < cat.size(); ++i) labels.push_back(cat.label(i));
    CHECK(labels == std::vector<std::string>{"S3", "S2", "S1", "P2", "P1"});
    CHECK(cat.projectives() == fixtures::set(cat, {"S3", "P2", "P1"}));
    CHECK(cat.injectives() == fixtures::set(cat, {"S1", "P1", "P2"}));
    CHECK(cat.support(fixtures::idx(cat, "P1")) == IndexSet{0, 1});
    CHECK(cat.support(fixtures::set(cat, {"S1", "S3"})) == IndexSet{0, 2});
    CHECK(cat.labels(fixtures::multi(cat, {"S1", "S1", "P2"})) == "S1+S1+P2");
    CHECK_FALSE(cat.find("Q9").has_value());
    CHECK_THROWS_AS(cat.index_of("Q9"), InvalidInput);

    const auto h = interval_catalog(fixtures::hereditary_a2());
    std::vector<std::string> hl;
    for (std::size_t i = 0; i < h.size(); ++i) hl.push_back(h.label(i));
    CHECK(hl == std::vector<std::string>{"S2", "S1", "P2"});
  }

  TEST_CASE("hom table matches direct computation") {
    const auto cat = interval_catalog(fixtures::nakayama_a3(3));
    for (std::size_t i = 0; i < cat.size(); ++i)
      for (std::size_t j = 0; j < cat.size(); ++j) CHECK(cat.hom_dim(i, j) == hom_dim(cat.module(i), cat.module(j)));
  }

  TEST_CASE("json round trip") {
    const auto a = fixtures::nakayama_a3();
    const auto cat = interval_catalog(a);
    const auto text = catalog_to_json(cat);
    const auto back = load_catalog(a, text);
    REQUIRE(back.size() == cat.size());
    for (std::size_t i = 0; i < cat.size(); ++i) {
      CHECK(back.label(i) == cat.label(i));
      CHECK(back.module(i) == cat.module(i));
    }
    CHECK(catalog_to_json(back) == text);
  }

  TEST_CASE("load rejects bad catalogs") {
    const auto a = fixtures::nakayama_a3();
    const auto cat = interval_catalog(a);
    auto doc = nlohmann::json::parse(catalog_to_json(cat));
    auto dup = doc;
    dup["entries"].push_back(doc["entries"][0]);
    dup["entries"].back()["label"] = "X";
    CHECK_THROWS_AS(load_catalog(a, dup.dump()), ConsistencyError);

    // S1 + S3 is decomposable.
    auto dec = doc;
    dec["entries"].push_back({{"label", "X"}, {"dims", {1, 0, 1}}, {"action", {{"a", nlohmann::json::array()}, {"b", nlohmann::json::array({nlohmann::json::array()})}}}});
    CHECK_THROWS(load_catalog(a, dec.dump()));

    CHECK_THROWS_AS(load_catalog(a, "{\"entries\": ["), ParseError);
  }

  TEST_CASE("validation") {
    const auto cat = interval_catalog(fixtures::nakayama_a3());
    CHECK(validate_catalog(cat).ok);
    const auto audited = validate_catalog(cat, std::vector<std::size_t>{1, 1, 1});
    CHECK(audited.ok);

    CHECK(audited.warnings.empty());

    // A missing entry only warns; the remaining entries are still valid.
    std::vector<CatalogEntry> fewer(cat.entries().begin(), cat.entries().end() - 1);
    const Catalog partial(cat.algebra(), fewer);
    const auto report = validate_catalog(partial, std::vector<std::size_t>{1, 1, 1});
    CHECK(report.ok);
    CHECK(report.warnings.size() == 1);
  }

  TEST_CASE("brute force search") {
    for (Scalar p : {2u, 3u}) {
      const auto a = fixtures::nakayama_a3(p);
      const auto bf = bruteforce_indecomposables(a, {{1, 1, 1}});
      const auto cat = interval_catalog(a);
      REQUIRE(bf.size() == cat.size());
      for (std::size_t i = 0; i < cat.size(); ++i) CHECK(is_isomorphic(bf.module(i), cat.module(i)));
    }
    const auto h = bruteforce_indecomposables(fixtures::hereditary_a2(), {{1, 1}});
    CHECK(h.size() == 3);
    BruteForceOptions tiny{{2, 2, 2}, 4};
    CHECK_THROWS_AS(bruteforce_indecomposables(fixtures::linear_a3(), tiny), CapExceeded);
  }

  TEST_CASE("decompose") {
    const auto cat = interval_catalog(fixtures::nakayama_a3());
    const auto m = fixtures::multi(cat, {"S1", "P1", "P1", "S3"});
    CHECK(decompose(cat.sum(m), cat) == m);
    CHECK(decompose(Representation::zero(cat.algebra()), cat).empty());
    std::mt19937 rng(3);
    std::uniform_int_distribution<std::size_t> pick(0, cat.size() - 1);
    for (int trial = 0; trial < 25; ++trial) {
      Multiset r;
      const std::size_t n = 1 + trial % 4;
      for (std::size_t k = 0; k < n; ++k) r.push_back(pick(rng));
      std::sort(r.begin(), r.end());
      CHECK(decompose(cat.sum(r), cat) == r);
    }
    // Not in a catalog missing P1.
    std::vector<CatalogEntry> fewer;
    for (const auto& e : cat.entries())
      if (e.label != "P1") fewer.push_back(e);
    const Catalog partial(cat.algebra(), fewer);
    CHECK_THROWS_AS(decompose(fixtures::mod(cat, "P1"), partial), ConsistencyError);
  }
}
