#include "doctest.h"
#include "ietilt/error.hpp"
#include "support.hpp"

using namespace ietilt;
using fixtures::mod;

namespace {

Representation sum_of(const Catalog& cat, const std::vector<std::string>& labels) {
  return cat.sum(fixtures::multi(cat, labels));
}

}  // namespace

TEST_SUITE("repcore") {
  TEST_CASE("representation validation") {
    const auto a = fixtures::nakayama_a3();
    const Field f(2);
    // 1 -> 2 -> 3 with both maps the identity violates ab = 0.
    CHECK_THROWS_AS(Representation(a, {1, 1, 1}, {Matrix(f, 1, 1, {1}), Matrix(f, 1, 1, {1})}), InvalidInput);
    CHECK_THROWS_AS(Representation(a, {1, 1, 0}, {Matrix(f, 2, 1), Matrix(f, 0, 1)}), InvalidInput);
    CHECK(Representation::zero(a).is_zero());
  }

  TEST_CASE("hom spaces") {
    const auto s = fixtures::session(fixtures::nakayama_a3());
    const auto& cat = *s.catalog;
    CHECK(hom_dim(mod(cat, "P1"), mod(cat, "S1")) == 1);
    CHECK(hom_dim(mod(cat, "P1"), mod(cat, "P2")) == 0);
    for (std::size_t i = 0; i < cat.size(); ++i) CHECK(hom_dim(cat.module(i), cat.module(i)) >= 1);
    for (std::size_t i = 0; i < cat.size(); ++i)
      for (std::size_t j = 0; j < cat.size(); ++j)
        for (const auto& f : hom_basis(cat.module(i), cat.module(j))) CHECK(f.intertwines());
  }

  TEST_CASE("morphism parts") {
    const auto s = fixtures::session(fixtures::nakayama_a3());
    const auto& cat = *s.catalog;
    const auto basis = hom_basis(mod(cat, "P2"), mod(cat, "S2"));
    REQUIRE(basis.size() == 1);
    const auto parts = morphism_parts(basis[0]);
    CHECK(is_isomorphic(parts.kernel.module, mod(cat, "S3")));
    CHECK(parts.cokernel.module.is_zero());

    const auto& x = mod(cat, "P1");
    const auto& y = mod(cat, "P2");
    const auto zero = morphism_parts(zero_morphism(x, y));
    CHECK(zero.kernel.module.dims() == x.dims());
    CHECK(zero.image.module.is_zero());
    CHECK(zero.cokernel.module.dims() == y.dims());
    const auto id = morphism_parts(identity_morphism(x));
    CHECK(id.kernel.module.is_zero());
    CHECK(id.cokernel.module.is_zero());
  }

  TEST_CASE("morphism parts are exact on random maps") {
    const auto s = fixtures::session(fixtures::nakayama_a3(3));
    const auto& cat = *s.catalog;
    std::mt19937 rng(11);
    const auto x = sum_of(cat, {"S1", "P1", "P2", "S2"});
    const auto y = sum_of(cat, {"P1", "P2", "S2", "S3"});
    const auto basis = hom_basis(x, y);
    for (int trial = 0; trial < 30; ++trial) {
      const Vector c = fixtures::random_vector(rng, x.field(), basis.size());
      const Morphism f = linear_combination(basis, c);
      REQUIRE(f.intertwines());
      const auto parts = morphism_parts(f);
      for (std::size_t v = 0; v < 3; ++v) {
        CHECK(x.dim(v) == parts.kernel.module.dim(v) + parts.image.module.dim(v));
        CHECK(y.dim(v) == parts.image.module.dim(v) + parts.cokernel.module.dim(v));
      }
    }
  }

  TEST_CASE("direct sums") {
    const auto a = fixtures::nakayama_a3();
    const auto s = fixtures::session(a);
    const auto& cat = *s.catalog;
    CHECK(sum_of(cat, {"S1", "S3"}).dims() == std::vector<std::size_t>{1, 0, 1});
    CHECK(direct_sum(a, std::vector<Representation>{}).is_zero());
    std::vector<Representation> ps;
    for (std::size_t v = 0; v < 3; ++v) ps.push_back(standard_module(a, ModuleKind::projective, v));
    CHECK(direct_sum(a, ps).dims() == std::vector<std::size_t>{1, 2, 2});
  }

  TEST_CASE("isomorphism") {
    const auto a = fixtures::nakayama_a3();
    const auto s = fixtures::session(a);
    const auto& cat = *s.catalog;
    CHECK(is_isomorphic(mod(cat, "P1"), mod(cat, "P1")));
    CHECK_FALSE(is_isomorphic(mod(cat, "S1"), mod(cat, "S2")));
    CHECK(is_isomorphic(standard_module(a, ModuleKind::projective, 0), standard_module(a, ModuleKind::injective, 1)));
    Limits tiny;
    tiny.iso_search_cap = 2;
    const auto big = sum_of(cat, {"S2", "S2", "S2"});
    CHECK_THROWS_AS(is_isomorphic(big, big, tiny), CapExceeded);
  }

  TEST_CASE("trace and reject") {
    const auto s = fixtures::session(fixtures::nakayama_a3());
    const auto& cat = *s.catalog;
    const auto m_family = cat.modules(fixtures::set(cat, {"S1", "S3", "P1"}));
    const auto n_family = cat.modules(fixtures::set(cat, {"S1", "S3", "P2"}));

    const auto t = trace_of_family(m_family, sum_of(cat, {"S1", "S3", "P2"}));
    CHECK(decompose(t.module, cat) == fixtures::multi(cat, {"S1", "S3", "S3"}));
    const auto r = reject_of_family(n_family, sum_of(cat, {"S1", "S3", "P1"}));
    CHECK(decompose(r.module, cat) == fixtures::multi(cat, {"S2"}));
    CHECK(decompose(quotient_by(sum_of(cat, {"S1", "S3", "P1"}), r).module, cat) == fixtures::multi(cat, {"S1", "S1", "S3"}));

    const auto& p1 = mod(cat, "P1");
    const std::vector<Representation> self{p1};
    CHECK(trace_of_family(self, p1).module.dims() == p1.dims());
    CHECK(reject_of_family(self, p1).module.is_zero());
    const std::vector<Representation> s3{mod(cat, "S3")};
    CHECK(trace_of_family(s3, p1).module.is_zero());
    CHECK(reject_of_family(s3, p1).module.dims() == p1.dims());
  }

  TEST_CASE("trace is generated and reject vanishes exactly on cogenerated modules") {
    const auto s = fixtures::session(fixtures::nakayama_a3());
    const auto& cat = *s.catalog;
    for (std::uint64_t fb = 0; fb < (1u << cat.size()); ++fb) {
      const auto family = cat.modules(IndexSet(fb));
      for (std::size_t x = 0; x < cat.size(); ++x) {
        const auto t = trace_of_family(family, cat.module(x));
        CHECK(trace_of_family(family, t.module).module.dims() == t.module.dims());
        // X embeds into a sum of family members iff its indecomposable socle
        // summand maps injectively; compare against a direct check of the
        // induced map into the product of Hom-basis targets.
        const auto r = reject_of_family(family, cat.module(x));
        bool embeds = false;
        for (const auto& f : family)
          for (const auto& h : hom_basis(cat.module(x), f))
            if (morphism_parts(h).kernel.module.is_zero()) embeds = true;
        CHECK(r.module.is_zero() == embeds);  // catalog entries are uniserial with simple socle
      }
    }
  }

  TEST_CASE("radical and top") {
    const auto s = fixtures::session(fixtures::nakayama_a3());
    const auto& cat = *s.catalog;
    const auto rt = radical_and_top(mod(cat, "P1"));
    CHECK(is_isomorphic(rt.radical.module, mod(cat, "S2")));
    CHECK(is_isomorphic(rt.top.module, mod(cat, "S1")));
    const auto simple = radical_and_top(mod(cat, "S2"));
    CHECK(simple.radical.module.is_zero());
    const auto z = radical_and_top(Representation::zero(cat.algebra()));
    CHECK(z.radical.module.is_zero());
    CHECK(z.top.module.is_zero());
  }

  TEST_CASE("projective covers") {
    const auto s = fixtures::session(fixtures::nakayama_a3());
    const auto& cat = *s.catalog;
    const auto c1 = projective_cover(mod(cat, "S1"));
    CHECK(is_isomorphic(c1.cover.source, mod(cat, "P1")));
    const auto c2 = projective_cover(mod(cat, "P2"));
    CHECK(is_isomorphic(c2.cover.source, mod(cat, "P2")));
    CHECK(morphism_parts(c2.cover).kernel.module.is_zero());
    const auto c3 = projective_cover(sum_of(cat, {"S1", "S1", "S3"}));
    CHECK(c3.tops == std::vector<std::size_t>{0, 0, 2});
    CHECK(decompose(c3.cover.source, cat) == fixtures::multi(cat, {"P1", "P1", "S3"}));
    CHECK(morphism_parts(c3.cover).cokernel.module.is_zero());
    CHECK_THROWS_AS(projective_cover(Representation::zero(cat.algebra())), InvalidInput);
  }

  TEST_CASE("quotients") {
    const auto s = fixtures::session(fixtures::nakayama_a3());
    const auto& cat = *s.catalog;
    const auto& p1 = mod(cat, "P1");
    CHECK(is_isomorphic(quotient_by(p1, radical_and_top(p1).radical).module, mod(cat, "S1")));
    CHECK(quotient_by(p1, zero_submodule(p1)).module.dims() == p1.dims());
    CHECK(quotient_by(p1, whole_submodule(p1)).module.is_zero());
  }

  TEST_CASE("submodule enumeration") {
    const auto s = fixtures::session(fixtures::nakayama_a3());
    const auto& cat = *s.catalog;
    CHECK(submodules_of(mod(cat, "S1")).size() == 2);
    CHECK(submodules_of(mod(cat, "P1")).size() == 3);
    CHECK(submodules_of(sum_of(cat, {"S2", "S2"})).size() == 5);
    Limits small;
    small.submodule_dim_cap = 2;
    CHECK_THROWS_AS(submodules_of(sum_of(cat, {"P1", "P2"}), small), CapExceeded);
    CHECK(all_subspaces(Field(3), 2).size() == 6);  // 1 + 4 + 1
  }

  TEST_CASE("duality") {
    const auto a = fixtures::nakayama_a3();
    const auto s = fixtures::session(a);
    const auto& cat = *s.catalog;
    CHECK(dualize(Representation::zero(a)).is_zero());
    const auto op = opposite_algebra(a);
    for (std::size_t v = 0; v < 3; ++v) {
      const auto d = dualize(standard_module(a, ModuleKind::simple, v));
      CHECK(is_isomorphic(d, standard_module(op, ModuleKind::simple, v)));
      CHECK(is_isomorphic(dualize(standard_module(a, ModuleKind::projective, v)), standard_module(op, ModuleKind::injective, v)));
    }
    for (std::size_t i = 0; i < cat.size(); ++i) {
      CHECK(is_isomorphic(rehome(dualize(dualize(cat.module(i))), a), cat.module(i)));
      for (std::size_t j = 0; j < cat.size(); ++j)
        CHECK(hom_dim(cat.module(i), cat.module(j)) == hom_dim(dualize(cat.module(j)), dualize(cat.module(i))));
    }
  }

  TEST_CASE("duality swaps trace and reject") {
    const auto a = fixtures::nakayama_a3();
    const auto s = fixtures::session(a);
    const auto& cat = *s.catalog;
    const auto y = cat.sum(IndexSet::full(cat.size()));
    for (std::uint64_t fb = 0; fb < (1u << cat.size()); ++fb) {
      const auto family = cat.modules(IndexSet(fb));
      std::vector<Representation> dual_family;
      for (const auto& f : family) dual_family.push_back(dualize(f));
      // D(X / reject_F X) is the trace of DF in DX.
      const auto r = reject_of_family(family, y);
      const auto q = quotient_by(y, r).module;
      const auto t = trace_of_family(dual_family, dualize(y));
      CHECK(t.module.dims() == q.dims());
      CHECK(is_isomorphic(t.module, dualize(q)));
    }
  }
}
