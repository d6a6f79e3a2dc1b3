#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ietilt/catalog.hpp"
#include "ietilt/repcore.hpp"

namespace ietilt {

/// plus: support τ-tilting (complement of projectives); minus: support
/// τ⁻-tilting (complement of injectives).
enum class Side { plus, minus };

struct STTPair {
  IndexSet module;      // basic, so a set of catalog indices
  IndexSet complement;  // vertices v with P_v (plus) or I_v (minus) in the complement
  Side side = Side::plus;
  IndexSet support;     // vertices

  friend bool operator==(const STTPair&, const STTPair&) = default;
};

/// dim coker(Hom(P0, B) -> Hom(K, B)) for a projective cover 0 -> K -> P0 -> A -> 0.
std::size_t ext1_dim(const Representation& a, const Representation& b);

/// Dual of the transpose of a minimal projective presentation; 0 on projectives.
Representation tau(const Representation& x);
/// D ∘ τ ∘ D computed over the opposite algebra; 0 on injectives.
Representation tau_minus(const Representation& x);

/// Vertices where some member is nonzero.
IndexSet supp_of(const Catalog& cat, IndexSet parts);

/// τ-theoretic data for a fixed catalog: τ and τ⁻ of every entry plus the Hom
/// and Ext¹ tables needed by the rigidity tests. Immutable after construction.
class TauTheory {
 public:
  explicit TauTheory(std::shared_ptr<const Catalog> cat);

  const Catalog& catalog() const { return *cat_; }
  const std::shared_ptr<const Catalog>& catalog_ptr() const { return cat_; }

  const Representation& tau_of(std::size_t i) const { return tau_[i]; }
  const Representation& tau_minus_of(std::size_t i) const { return tau_minus_[i]; }
  std::size_t ext1(std::size_t i, std::size_t j) const { return ext1_[i * cat_->size() + j]; }

  /// plus: Hom(X, τY) = 0 for all X, Y in parts; minus: Hom(τ⁻X, Y) = 0.
  bool is_tau_rigid(IndexSet parts, Side side) const;
  /// The pair when `parts` is τ-rigid (per side) with |parts| = |supp parts|.
  std::optional<STTPair> is_support_tau_tilting(IndexSet parts, Side side) const;
  /// All support τ-(τ⁻-)tilting modules ordered by support, then by module.
  const std::vector<STTPair>& enumerate(Side side) const { return side == Side::plus ? plus_ : minus_; }

  IndexSet supp(IndexSet parts) const { return supp_of(*cat_, parts); }

 private:
  bool compatible(std::size_t i, std::size_t j, Side side) const;
  std::vector<STTPair> search(Side side) const;

  std::shared_ptr<const Catalog> cat_;
  std::vector<Representation> tau_;
  std::vector<Representation> tau_minus_;
  std::vector<std::size_t> hom_to_tau_;         // [i][j] = dim Hom(E_i, τE_j)
  std::vector<std::size_t> hom_from_tau_minus_; // [i][j] = dim Hom(τ⁻E_i, E_j)
  std::vector<std::size_t> ext1_;
  std::vector<STTPair> plus_;
  std::vector<STTPair> minus_;
};

bool stt_less(const STTPair& a, const STTPair& b);

}  // namespace ietilt
