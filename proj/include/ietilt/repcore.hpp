#pragma once

// Quiver representations and the exact constructions on them.
//
// Conventions: a representation assigns the column space GF(p)^dims[v] to each
// vertex and, to each arrow a: s -> t, a dims[t] x dims[s] matrix. Paths act by
// composing arrow matrices in traversal order. Submodules are carried as
// per-vertex canonical column bases, so two equal submodules compare equal.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ietilt/algebra.hpp"
#include "ietilt/linalg.hpp"

namespace ietilt {

struct Limits {
  /// is_isomorphic and idempotent searches refuse Hom spaces with more elements.
  std::uint64_t iso_search_cap = std::uint64_t{1} << 16;
  /// submodules_of refuses modules of larger total dimension.
  std::size_t submodule_dim_cap = 8;
};

class Representation {
 public:
  /// Validates matrix shapes and that every relation acts as zero.
  Representation(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> action);

  static Representation zero(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Field& field() const { return algebra_->field(); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(std::size_t v) const { return dims_[v]; }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  const Matrix& action(std::size_t arrow) const { return action_[arrow]; }
  const std::vector<Matrix>& actions() const { return action_; }
  /// dims[target] x dims[source]; the identity for trivial paths.
  Matrix path_action(const Path& path) const;

  /// Vertices with nonzero dimension, ascending.
  std::vector<std::size_t> support() const;

  std::string describe() const;

  friend bool operator==(const Representation& a, const Representation& b);

 private:
  AlgebraPtr algebra_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> action_;
};

struct Morphism {
  Representation source;
  Representation target;
  std::vector<Matrix> components;  // components[v]: target.dim(v) x source.dim(v)

  bool is_zero() const;
  bool intertwines() const;
};

Morphism identity_morphism(const Representation& x);
Morphism zero_morphism(const Representation& x, const Representation& y);
/// g ∘ f.
Morphism compose(const Morphism& g, const Morphism& f);
/// Σ coeffs[k] · basis[k]; all basis elements share source and target.
Morphism linear_combination(std::span<const Morphism> basis, std::span<const Scalar> coeffs);

struct Submodule {
  Representation module;
  Morphism inclusion;
};

struct QuotientModule {
  Representation module;
  Morphism projection;
};

enum class ModuleKind { projective, injective, simple };

/// P_v is spanned by the surviving paths starting at v, I_v dually by those ending at v.
Representation standard_module(const AlgebraPtr& alg, ModuleKind kind, std::size_t vertex);

/// The map P_v -> X sending the trivial path e_v to `x` ∈ X_v.
Morphism map_from_projective(const Representation& x_module, std::size_t vertex, const Vector& x);

/// Basis of the space of intertwiners, in canonical kernel order.
std::vector<Morphism> hom_basis(const Representation& x, const Representation& y);
std::size_t hom_dim(const Representation& x, const Representation& y);

struct MorphismParts {
  Submodule kernel;
  Submodule image;
  QuotientModule cokernel;
};

MorphismParts morphism_parts(const Morphism& f);

Representation direct_sum(const AlgebraPtr& alg, std::span<const Representation> parts);
/// Map out of the direct sum of the sources, one block column per map.
Morphism sum_of_maps(const Representation& sum, std::span<const Morphism> maps);

/// Throws CapExceeded when p^dim Hom(X, Y) exceeds limits.iso_search_cap.
bool is_isomorphic(const Representation& x, const Representation& y, const Limits& limits = {});

/// Submodule spanned by a per-vertex tuple of subspaces (columns of `bases[v]`).
/// Throws InvalidInput if the tuple is not stable under the arrows.
Submodule submodule_from_subspaces(const Representation& x, const std::vector<Matrix>& bases);
/// Per-vertex canonical column bases of a submodule's image in its ambient module.
std::vector<Matrix> subspaces_of(const Submodule& u);

Submodule zero_submodule(const Representation& x);
Submodule whole_submodule(const Representation& x);
Submodule sum_of_submodules(const Submodule& a, const Submodule& b);

Submodule trace_of_family(std::span<const Representation> family, const Representation& x);
Submodule reject_of_family(std::span<const Representation> family, const Representation& x);

struct RadicalTop {
  Submodule radical;
  QuotientModule top;
};

RadicalTop radical_and_top(const Representation& x);

struct ProjectiveCover {
  Morphism cover;                   // P0 -> X, surjective
  std::vector<std::size_t> tops;    // vertex of each indecomposable summand of P0, in block order
};

/// Throws InvalidInput for the zero module.
ProjectiveCover projective_cover(const Representation& x);

QuotientModule quotient_by(const Representation& x, const Submodule& u);

/// All subrepresentations, ordered by total dimension then by subspace key.
/// Throws CapExceeded beyond limits.submodule_dim_cap.
std::vector<Submodule> submodules_of(const Representation& x, const Limits& limits = {});

/// All subspaces of GF(p)^n as canonical column bases.
std::vector<Matrix> all_subspaces(const Field& f, std::size_t n);

/// Vector-space dual, a representation of the opposite algebra.
Representation dualize(const Representation& x);
/// D f : DY -> DX.
Morphism dualize(const Morphism& f);

/// Same data re-attached to a structurally identical algebra object.
Representation rehome(const Representation& x, const AlgebraPtr& alg);

/// Stable key for a tuple of subspaces (used for dedupe).
std::string subspace_key(const std::vector<Matrix>& bases);

}  // namespace ietilt
