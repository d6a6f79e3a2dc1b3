#pragma once

// Torsion and torsion-free classes over a complete catalog.
//
// Subcategories are additive closures of catalog subsets (IndexSet). The
// classes themselves come from the support τ-(τ⁻-)tilting enumeration as
// Fac M (resp. Sub N); smallest closures T(C), F(C) are lattice meets over
// those, with a Filt-style fixpoint available as an independent oracle.

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "ietilt/catalog.hpp"
#include "ietilt/tautheory.hpp"

namespace ietilt {

enum class ClassKind { torsion, torsionfree };
enum class Closure { fac, sub };
enum class ExtSide { projective, injective };

struct TorsionClassRecord {
  IndexSet subcat;
  ClassKind kind = ClassKind::torsion;
  STTPair generator;
};

/// 0 -> U_M -> M -> P_M -> 0 (torsion pair (⊥N, Sub N)) or
/// 0 -> I^N -> N -> V^N -> 0 (torsion pair (Fac M, M⊥)).
struct CanonicalSES {
  enum class For { m, n };
  For which = For::m;
  Representation middle;
  Submodule torsion_part;       // U_M or I^N, with its inclusion into the middle term
  QuotientModule free_part;     // P_M or V^N, with the projection from the middle term
  Multiset torsion_summands;
  Multiset free_summands;
};

class TorsionTheory {
 public:
  explicit TorsionTheory(std::shared_ptr<const TauTheory> tau);

  const Catalog& catalog() const { return tau_->catalog(); }
  const TauTheory& tau() const { return *tau_; }

  /// X is generated by M: trace_M(X) = X.
  bool in_fac(IndexSet m, std::size_t x) const;
  /// X is cogenerated by N: reject_N(X) = 0.
  bool in_sub(IndexSet n, std::size_t x) const;
  IndexSet closure(IndexSet m, Closure kind) const;

  /// Closed under quotients (submodules) and extensions, tested on the catalog.
  bool is_torsion_class(IndexSet s) const;
  bool is_torsionfree_class(IndexSet s) const;

  const std::vector<TorsionClassRecord>& classes(ClassKind kind) const {
    return kind == ClassKind::torsion ? torsion_ : torsionfree_;
  }
  /// The class with exactly this subcategory, if it is one.
  const TorsionClassRecord* find_class(IndexSet subcat, ClassKind kind) const;

  /// T(C) or F(C): the meet of all enumerated classes containing C.
  const TorsionClassRecord& smallest_closure(IndexSet c, ClassKind kind) const;
  /// Fixpoint of quotient (submodule) closure and extension closure by
  /// submodule enumeration. Independent of the enumerated lattice.
  IndexSet filt_closure_oracle(IndexSet c, ClassKind kind) const;

  Submodule torsion_radical(const TorsionClassRecord& t, const Representation& x) const;
  CanonicalSES canonical_ses(IndexSet m, IndexSet n, CanonicalSES::For which) const;

  /// Members X of C with Ext¹(X, C) = 0 (projective) or Ext¹(C, X) = 0
  /// (injective; evaluated over the opposite algebra).
  IndexSet ext_extremes(IndexSet c, ExtSide side) const;
  /// ext_extremes, cross-checked against add P_M (resp. add I^N) of the pair
  /// generating T(C) and cogenerating F(C). Throws ConsistencyError on mismatch.
  IndexSet progenerator(IndexSet c, ExtSide side) const;

 private:
  struct Extension {
    IndexSet sub;       // indecomposable summands of a proper submodule A
    IndexSet quotient;  // ... and of X/A
  };
  const std::vector<std::vector<Extension>>& extensions() const;

  std::shared_ptr<const TauTheory> tau_;
  std::vector<TorsionClassRecord> torsion_;
  std::vector<TorsionClassRecord> torsionfree_;
  std::map<IndexSet, std::size_t> torsion_index_;
  std::map<IndexSet, std::size_t> torsionfree_index_;

  mutable std::mutex cache_mutex_;
  mutable std::map<IndexSet, IndexSet> fac_cache_;
  mutable std::map<IndexSet, IndexSet> sub_cache_;
  mutable std::once_flag extensions_once_;
  mutable std::vector<std::vector<Extension>> extensions_;
};

}  // namespace ietilt
