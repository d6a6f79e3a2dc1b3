#pragma once

// IE-closed subcategories (closed under images and extensions) and their two
// parametrizations: canonical twin support τ-tilting pairs (M, N) and
// canonical Ext-pairs (P, I).

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ietilt/torsion.hpp"

namespace ietilt {

struct TwinPair {
  STTPair M;  // side plus
  STTPair N;  // side minus

  friend bool operator==(const TwinPair&, const TwinPair&) = default;
};

struct ExtPair {
  IndexSet P;
  IndexSet I;

  friend bool operator==(const ExtPair&, const ExtPair&) = default;
};

struct IEFlags {
  bool is_torsion = false;
  bool is_torsionfree = false;
  std::optional<bool> is_ice;  // unset until classify runs
  std::optional<bool> is_ike;
};

struct IERecord {
  IndexSet subcat;
  TwinPair twin;
  ExtPair extpair;
  IEFlags flags;
};

/// The pieces of one canonicalization run, kept for display.
struct Canonicalization {
  TwinPair input;
  CanonicalSES for_m;  // 0 -> U_M -> M -> P_M -> 0
  CanonicalSES for_n;  // 0 -> I^N -> N -> V^N -> 0
  IndexSet p_m;
  IndexSet i_n;
  TwinPair output;
};

struct BijectionReport {
  std::size_t ie_count = 0;
  std::size_t twin_count = 0;            // all (M, N) with supp M = supp N
  std::size_t canonical_twin_count = 0;
  std::size_t ext_pair_count = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

struct ClassifyOptions {
  /// Multiplicity of each member of C in the ambient sum Y of the Cok/Ker search.
  std::size_t bound = 2;
  /// Number of C-generated submodules of Y the search may visit.
  std::size_t state_cap = std::size_t{1} << 16;
};

class IEClosed {
 public:
  explicit IEClosed(std::shared_ptr<const TorsionTheory> torsion);

  const TorsionTheory& torsion() const { return *torsion_; }
  const Catalog& catalog() const { return torsion_->catalog(); }

  /// Looks up the support τ-tilting (τ⁻-tilting) pairs with these modules.
  /// Throws InvalidInput when either is not one.
  TwinPair make_twin(IndexSet m, IndexSet n) const;

  /// Fac M ∩ Sub N.
  IndexSet phi(const TwinPair& t) const;
  /// (generator of T(C), cogenerator of F(C)).
  TwinPair psi(IndexSet c) const;
  /// Checks both the definition and the P_M / I^N criterion; throws
  /// ConsistencyError if they disagree.
  bool is_canonical(const TwinPair& t) const;
  TwinPair canonicalize(const TwinPair& t) const;
  Canonicalization canonicalize_traced(const TwinPair& t) const;

  /// Canonicalizes first when needed.
  ExtPair ext_pair(const TwinPair& t) const;
  /// T(P) ∩ F(I).
  IndexSet phi_prime(const ExtPair& e) const;

  /// Every (M, N) with supp M = supp N, ordered by support, then M, then N.
  std::vector<TwinPair> twin_pairs() const;

  /// All T ∩ F, deduplicated and in canonical subcategory order, with round
  /// trips checked. Flags for ICE/IKE are left unset.
  const std::vector<IERecord>& enumerate_ie() const;

  IEFlags classify(const IERecord& rec, const ClassifyOptions& opts = {}) const;

  BijectionReport verify_bijections() const;

 private:
  std::shared_ptr<const TorsionTheory> torsion_;
  mutable std::once_flag ie_once_;
  mutable std::vector<IERecord> ie_;
};

}  // namespace ietilt
