#include "doctest.h"
#include "ietilt/error.hpp"
#include "support.hpp"

using namespace ietilt;

TEST_SUITE("algebra") {
  TEST_CASE("path bases and dimensions") {
    const auto a = fixtures::nakayama_a3();
    CHECK(a->dimension() == 5);
    CHECK(a->paths(0, 2).empty());  // ab = 0
    CHECK(a->paths(0, 1).size() == 1);
    CHECK(a->paths(0, 0).front().arrows.empty());
    CHECK(fixtures::hereditary_a2()->dimension() == 3);
    CHECK(fixtures::one_vertex()->dimension() == 1);
    CHECK(fixtures::linear_a3()->dimension() == 6);
  }

  TEST_CASE("malformed input") {
    CHECK_THROWS_AS(make_algebra({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}}, {{"b", "a"}}), InvalidInput);
    CHECK_THROWS_AS(make_algebra({"1", "1"}, {}, {}), InvalidInput);
    CHECK_THROWS_AS(make_algebra({"1"}, {{"a", "1", "9"}}, {}), InvalidInput);
    CHECK_THROWS_AS(make_algebra({"1", "2"}, {{"a", "1", "2"}, {"a", "2", "1"}}, {}), InvalidInput);
    CHECK_THROWS_AS(make_algebra({"1"}, {{"a", "1", "1"}}, {}), Error);  // loop without relations
    CHECK_NOTHROW(make_algebra({"1"}, {{"a", "1", "1"}}, {{"a", "a"}}));
  }

  TEST_CASE("standard modules") {
    const auto a = fixtures::nakayama_a3();
    CHECK(standard_module(a, ModuleKind::projective, 0).dims() == std::vector<std::size_t>{1, 1, 0});
    CHECK(standard_module(a, ModuleKind::projective, 1).dims() == std::vector<std::size_t>{0, 1, 1});
    CHECK(is_isomorphic(standard_module(a, ModuleKind::projective, 2), standard_module(a, ModuleKind::simple, 2)));
    const auto i3 = standard_module(a, ModuleKind::injective, 2);
    CHECK(i3.dims() == std::vector<std::size_t>{0, 1, 1});
    CHECK(is_isomorphic(i3, standard_module(a, ModuleKind::projective, 1)));
  }

  TEST_CASE("dim equals total dimension of projectives and of injectives") {
    for (const auto& a : {fixtures::nakayama_a3(), fixtures::hereditary_a2(), fixtures::linear_a3(), fixtures::one_vertex()}) {
      std::size_t proj = 0;
      std::size_t inj = 0;
      for (std::size_t v = 0; v < a->vertex_count(); ++v) {
        proj += standard_module(a, ModuleKind::projective, v).total_dim();
        inj += standard_module(a, ModuleKind::injective, v).total_dim();
      }
      CHECK(proj == a->dimension());
      CHECK(inj == a->dimension());
    }
  }

  TEST_CASE("relations act as zero on standard modules") {
    const auto a = fixtures::nakayama_a3();
    const Path ab{0, 2, {0, 1}};
    for (std::size_t v = 0; v < 3; ++v)
      for (auto kind : {ModuleKind::projective, ModuleKind::injective, ModuleKind::simple})
        CHECK(standard_module(a, kind, v).path_action(ab).is_zero());
  }

  TEST_CASE("opposite algebra") {
    const auto a = fixtures::nakayama_a3();
    const auto op = opposite_algebra(a);
    CHECK(op->dimension() == 5);
    const auto& q = op->quiver();
    CHECK(q.arrows[0].source == 1);
    CHECK(q.arrows[0].target == 0);
    REQUIRE(op->relations().size() == 1);
    CHECK(op->relations()[0].arrows == std::vector<std::size_t>{1, 0});
    CHECK(opposite_algebra(op).get() == a.get());
    const auto one = fixtures::one_vertex();
    CHECK(opposite_algebra(one)->same_as(*one));
  }

  TEST_CASE("hash is stable and sensitive to the field") {
    CHECK(fixtures::nakayama_a3()->hash() == fixtures::nakayama_a3()->hash());
    CHECK(fixtures::nakayama_a3(2)->hash() != fixtures::nakayama_a3(3)->hash());
    CHECK(fixtures::nakayama_a3()->hash() != fixtures::linear_a3()->hash());
  }
}
