#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <string>
#include <vector>

#include "ietilt/linalg.hpp"

namespace ietilt {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  std::size_t vertex_count() const { return vertices.size(); }
  std::optional<std::size_t> find_vertex(const std::string& label) const;
  std::optional<std::size_t> find_arrow(const std::string& name) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;
};

/// A zero relation: the composite of these arrows (in order) vanishes.
struct MonomialRelation {
  std::vector<std::size_t> arrows;

  friend bool operator==(const MonomialRelation&, const MonomialRelation&) = default;
};

/// A path read left to right: `arrows[0]` is traversed first. Trivial paths
/// have no arrows and source == target.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const { return arrows.size(); }
  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

struct BuildOptions {
  std::size_t max_path_length = 64;
};

class BoundQuiverAlgebra;
using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

class BoundQuiverAlgebra {
 public:
  const Quiver& quiver() const { return quiver_; }
  const std::vector<MonomialRelation>& relations() const { return relations_; }
  const Field& field() const { return field_; }

  std::size_t vertex_count() const { return quiver_.vertex_count(); }
  std::size_t arrow_count() const { return quiver_.arrows.size(); }
  const std::string& vertex_label(std::size_t v) const { return quiver_.vertices.at(v); }
  std::size_t vertex_index(const std::string& label) const;

  /// Surviving paths from `i` to `j`, shortest first, then by arrow sequence.
  const std::vector<Path>& paths(std::size_t i, std::size_t j) const { return basis_[i * vertex_count() + j]; }
  /// Position of `path` within paths(source, target), or nullopt if it is zero in the algebra.
  std::optional<std::size_t> path_index(const Path& path) const;
  /// Concatenation `first` then `second`, or nullopt if it vanishes.
  std::optional<Path> compose(const Path& first, const Path& second) const;

  std::size_t dimension() const;
  std::string describe_path(const Path& path) const;

  /// Stable content hash (hex) over vertices, arrows, relations and p.
  std::string hash() const;

  /// Same quiver, relations and field.
  bool same_as(const BoundQuiverAlgebra& other) const;

  friend AlgebraPtr build_algebra(Quiver q, std::vector<MonomialRelation> rels, Field f, BuildOptions opts);
  friend AlgebraPtr opposite_algebra(const AlgebraPtr& alg);

 private:
  BoundQuiverAlgebra() = default;

  Quiver quiver_;
  std::vector<MonomialRelation> relations_;
  Field field_;
  std::vector<std::vector<Path>> basis_;
  std::map<Path, std::size_t> index_;

  // Lazily built opposite. The opposite links back weakly so the pair never
  // forms an ownership cycle.
  mutable std::once_flag opposite_once_;
  mutable AlgebraPtr opposite_strong_;
  mutable std::weak_ptr<const BoundQuiverAlgebra> opposite_weak_;
};

/// Builds the path basis by breadth-first extension, discarding paths that
/// contain a relation. Throws InvalidInput for malformed quivers or relations
/// and Error("algebra appears infinite-dimensional") past the length cap.
AlgebraPtr build_algebra(Quiver q, std::vector<MonomialRelation> rels, Field f, BuildOptions opts = {});

/// Reversed arrows (names kept) and reversed relations. Cached per algebra;
/// opposite_algebra(opposite_algebra(a)) returns `a` itself while `a` is alive.
AlgebraPtr opposite_algebra(const AlgebraPtr& alg);

/// Path in the opposite algebra traversing the same arrows backwards.
Path reverse_path(const Path& p);

/// Convenience constructor from labels: arrows as (name, from, to), relations as arrow-name lists.
AlgebraPtr make_algebra(const std::vector<std::string>& vertices,
                        const std::vector<std::tuple<std::string, std::string, std::string>>& arrows,
                        const std::vector<std::vector<std::string>>& relations, Scalar p = 2,
                        BuildOptions opts = {});

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

}  // namespace ietilt
