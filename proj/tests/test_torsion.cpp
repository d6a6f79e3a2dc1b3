#include "doctest.h"
#include "ietilt/error.hpp"
#include "support.hpp"

using namespace ietilt;
using fixtures::set;

TEST_SUITE("torsion") {
  TEST_CASE("generation and cogeneration") {
    const auto s = fixtures::session(fixtures::nakayama_a3());
    const auto& cat = *s.catalog;
    const auto& t = *s.torsion;
    CHECK(t.in_fac(set(cat, {"P1"}), fixtures::idx(cat, "S1")));
    CHECK_FALSE(t.in_fac(set(cat, {"P1"}), fixtures::idx(cat, "S2")));
    CHECK(t.in_sub(set(cat, {"P2"}), fixtures::idx(cat, "S3")));
    CHECK_FALSE(t.in_sub(set(cat, {"P2"}), fixtures::idx(cat, "S2")));
    CHECK(t.closure(set(cat, {"P1"}), Closure::fac) == set(cat, {"S1", "P1"}));
    CHECK(t.closure(set(cat, {"P2"}), Closure::sub) == set(cat, {"S3", "P2"}));
    CHECK(t.closure(IndexSet{}, Closure::fac).empty());
    CHECK(t.closure(cat.projectives(), Closure::fac) == cat.all());
    CHECK(t.closure(cat.injectives(), Closure::sub) == cat.all());
  }

  TEST_CASE("class predicates") {
    const auto s = fixtures::session(fixtures::nakayama_a3());
    const auto& cat = *s.catalog;
    const auto& t = *s.torsion;
    CHECK(t.is_torsion_class(set(cat, {"S1", "P1"})));
    // Not closed under extensions: 0 -> S2 -> P1 -> S1 -> 0.
    CHECK_FALSE(t.is_torsion_class(set(cat, {"S1", "S2"})));
    CHECK_FALSE(t.is_torsion_class(set(cat, {"P1"})));
    CHECK(t.is_torsionfree_class(set(cat, {"S3", "P2"})));
    CHECK_FALSE(t.is_torsionfree_class(set(cat, {"P2"})));
    CHECK(t.classes(ClassKind::torsion).size() == 12);
    CHECK(t.classes(ClassKind::torsionfree).size() == 12);
    for (std::uint64_t b = 0; b < (1u << cat.size()); ++b) {
      const IndexSet c(b);
      CHECK(t.is_torsion_class(c) == (t.find_class(c, ClassKind::torsion) != nullptr));
      CHECK(t.is_torsionfree_class(c) == (t.find_class(c, ClassKind::torsionfree) != nullptr));
    }
  }

  TEST_CASE("smallest closures") {
    const auto s = fixtures::session(fixtures::nakayama_a3());
    const auto& cat = *s.catalog;
    const auto& t = *s.torsion;
    CHECK(t.smallest_closure(set(cat, {"S1", "S2"}), ClassKind::torsion).subcat == set(cat, {"S1", "S2", "P1"}));
    CHECK(t.smallest_closure(set(cat, {"S2", "S3"}), ClassKind::torsionfree).subcat == set(cat, {"S2", "S3", "P2"}));
    CHECK(t.smallest_closure(IndexSet{}, ClassKind::torsion).subcat.empty());
    CHECK(t.filt_closure_oracle(set(cat, {"S1", "S2"}), ClassKind::torsion) == set(cat, {"S1", "S2", "P1"}));

    const auto h = fixtures::session(fixtures::hereditary_a2());
    const auto& hc = *h.catalog;
    CHECK(h.torsion->smallest_closure(set(hc, {"P2"}), ClassKind::torsionfree).subcat == set(hc, {"P2", "S1"}));
    CHECK(h.torsion->smallest_closure(set(hc, {"P2"}), ClassKind::torsion).subcat == set(hc, {"P2", "S2"}));
    CHECK(h.torsion->classes(ClassKind::torsion).size() == 5);
  }

  TEST_CASE("lattice meets agree with the extension-closure oracle") {
    for (const auto& alg : {fixtures::nakayama_a3(), fixtures::hereditary_a2(), fixtures::linear_a3()}) {
      const auto s = fixtures::session(alg);
      const auto& t = *s.torsion;
      for (std::uint64_t b = 0; b < (1u << s.catalog->size()); ++b) {
        const IndexSet c(b);
        for (auto kind : {ClassKind::torsion, ClassKind::torsionfree}) {
          const auto& rec = t.smallest_closure(c, kind);
          CHECK(c.subset_of(rec.subcat));
          CHECK(rec.subcat == t.filt_closure_oracle(c, kind));
          CHECK(s.catalog->support(rec.subcat) == s.catalog->support(c));
        }
      }
    }
  }

  TEST_CASE("supports of Fac and Sub") {
    const auto s = fixtures::session(fixtures::nakayama_a3());
    const auto& cat = *s.catalog;
    for (const auto& pair : s.tau->enumerate(Side::plus))
      CHECK(cat.support(s.torsion->closure(pair.module, Closure::fac)) == pair.support);
    for (const auto& pair : s.tau->enumerate(Side::minus))
      CHECK(cat.support(s.torsion->closure(pair.module, Closure::sub)) == pair.support);
  }

  TEST_CASE("torsion radical") {
    const auto s = fixtures::session(fixtures::nakayama_a3());
    const auto& cat = *s.catalog;
    const auto* tc = s.torsion->find_class(set(cat, {"S1", "P1"}), ClassKind::torsion);
    REQUIRE(tc != nullptr);
    CHECK(s.torsion->torsion_radical(*tc, fixtures::mod(cat, "P1")).module.dims() == fixtures::mod(cat, "P1").dims());
    CHECK(s.torsion->torsion_radical(*tc, fixtures::mod(cat, "P2")).module.is_zero());
    const auto y = cat.sum(fixtures::multi(cat, {"S1", "S2", "P1"}));
    CHECK(decompose(s.torsion->torsion_radical(*tc, y).module, cat) == fixtures::multi(cat, {"S1", "P1"}));
  }

  TEST_CASE("canonical sequences") {
    const auto s = fixtures::session(fixtures::nakayama_a3());
    const auto& cat = *s.catalog;
    const auto m = set(cat, {"S1", "S3", "P1"});
    const auto n = set(cat, {"S1", "S3", "P2"});
    const auto for_m = s.torsion->canonical_ses(m, n, CanonicalSES::For::m);
    CHECK(for_m.torsion_summands == fixtures::multi(cat, {"S2"}));
    CHECK(for_m.free_summands == fixtures::multi(cat, {"S1", "S1", "S3"}));
    CHECK(for_m.torsion_part.inclusion.intertwines());
    CHECK(morphism_parts(for_m.free_part.projection).cokernel.module.is_zero());
    const auto for_n = s.torsion->canonical_ses(m, n, CanonicalSES::For::n);
    CHECK(for_n.torsion_summands == fixtures::multi(cat, {"S1", "S3", "S3"}));
    CHECK(for_n.free_summands == fixtures::multi(cat, {"S2"}));
  }

  TEST_CASE("ext-projectives and ext-injectives") {
    const auto s = fixtures::session(fixtures::nakayama_a3());
    const auto& cat = *s.catalog;
    const auto& t = *s.torsion;
    const auto c = set(cat, {"S1", "S3"});
    CHECK(t.ext_extremes(c, ExtSide::projective) == c);
    CHECK(t.progenerator(c, ExtSide::injective) == c);
    const auto all = cat.all();
    CHECK(t.progenerator(all, ExtSide::projective) == cat.projectives());
    CHECK(t.progenerator(all, ExtSide::injective) == cat.injectives());
    // S2 extends S1 inside add{S1, S2, P1}.
    const auto d = set(cat, {"S1", "S2", "P1"});
    CHECK(t.ext_extremes(d, ExtSide::projective) == set(cat, {"S2", "P1"}));
    CHECK(t.ext_extremes(d, ExtSide::injective) == set(cat, {"S1", "P1"}));

    const auto h = fixtures::session(fixtures::hereditary_a2());
    const auto p2 = set(*h.catalog, {"P2"});
    CHECK(h.torsion->progenerator(p2, ExtSide::projective) == p2);
    CHECK(h.torsion->progenerator(p2, ExtSide::injective) == p2);
  }
}
