#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "ietilt/algebra.hpp"
#include "ietilt/repcore.hpp"

namespace ietilt {

/// A set of catalog indices (at most 64 entries), e.g. the indecomposables of an
/// additive subcategory or of a basic module. Ordered by size, then by members.
class IndexSet {
 public:
  static constexpr std::size_t kCapacity = 64;

  IndexSet() = default;
  explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
  IndexSet(std::initializer_list<std::size_t> members);
  static IndexSet from(const std::vector<std::size_t>& members);
  static IndexSet full(std::size_t n) { return IndexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1); }

  std::uint64_t bits() const { return bits_; }
  bool contains(std::size_t i) const { return i < kCapacity && ((bits_ >> i) & 1U); }
  void insert(std::size_t i);
  void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const { return bits_ == 0; }
  bool subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
  std::vector<std::size_t> members() const;

  IndexSet operator|(IndexSet o) const { return IndexSet(bits_ | o.bits_); }
  IndexSet operator&(IndexSet o) const { return IndexSet(bits_ & o.bits_); }
  IndexSet operator-(IndexSet o) const { return IndexSet(bits_ & ~o.bits_); }

  friend bool operator==(IndexSet a, IndexSet b) { return a.bits_ == b.bits_; }
  friend std::strong_ordering operator<=>(IndexSet a, IndexSet b);

 private:
  std::uint64_t bits_ = 0;
};

/// Catalog indices with repetition, sorted ascending.
using Multiset = std::vector<std::size_t>;

IndexSet support_set(const Multiset& m);

struct CatalogEntry {
  std::string label;
  Representation module;
};

/// The complete, labeled, canonically ordered list of indecomposables.
/// Entries are sorted by (total dimension, dimension vector, label); the
/// constructor caches the Hom-dimension table between entries.
class Catalog {
 public:
  Catalog(AlgebraPtr alg, std::vector<CatalogEntry> entries, Limits limits = {});

  const AlgebraPtr& algebra() const { return algebra_; }
  const Limits& limits() const { return limits_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry& entry(std::size_t i) const { return entries_.at(i); }
  const Representation& module(std::size_t i) const { return entries_.at(i).module; }
  const std::string& label(std::size_t i) const { return entries_.at(i).label; }

  std::optional<std::size_t> find(const std::string& label) const;
  /// Throws InvalidInput for unknown labels.
  std::size_t index_of(const std::string& label) const;

  std::size_t hom_dim(std::size_t i, std::size_t j) const { return hom_[i * size() + j]; }

  /// Catalog index isomorphic to P_v / I_v, when present.
  std::optional<std::size_t> projective_index(std::size_t v) const { return projective_[v]; }
  std::optional<std::size_t> injective_index(std::size_t v) const { return injective_[v]; }

  /// Indices isomorphic to Λ's (resp. DΛ's) indecomposable summands.
  IndexSet projectives() const;
  IndexSet injectives() const;

  IndexSet all() const { return IndexSet::full(size()); }
  std::vector<Representation> modules(IndexSet s) const;
  Representation sum(IndexSet s) const;
  Representation sum(const Multiset& m) const;
  IndexSet support(std::size_t i) const;
  /// Vertex set (as IndexSet over vertices) where some member is nonzero.
  IndexSet support(IndexSet s) const;

  std::string labels(IndexSet s, const std::string& sep = "+") const;
  std::string labels(const Multiset& m, const std::string& sep = "+") const;

 private:
  AlgebraPtr algebra_;
  Limits limits_;
  std::vector<CatalogEntry> entries_;
  std::vector<std::size_t> hom_;
  std::vector<std::optional<std::size_t>> projective_;
  std::vector<std::optional<std::size_t>> injective_;
};

/// S<v> for simples, then P<v>, then I<v> by isomorphism; otherwise `fallback`.
std::string standard_label(const Representation& x, const std::string& fallback, const Limits& limits = {});

/// All interval (uniserial string) modules of a line quiver of any orientation or
/// of an oriented cycle. Throws InvalidInput for other quiver shapes.
Catalog interval_catalog(const AlgebraPtr& alg, const Limits& limits = {});

/// Parses and validates a catalog file. Throws ParseError or ConsistencyError.
Catalog load_catalog(const AlgebraPtr& alg, const std::string& json_text, const Limits& limits = {});
std::string catalog_to_json(const Catalog& cat);

bool is_indecomposable(const Representation& x, const Limits& limits = {});

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
};

/// Checks indecomposability, pairwise non-isomorphism and the relations. With
/// `audit_dims`, also compares against bruteforce_indecomposables up to those dims.
ValidationReport validate_catalog(const Catalog& cat, const std::optional<std::vector<std::size_t>>& audit_dims = {});

struct BruteForceOptions {
  std::vector<std::size_t> max_dims;
  /// Total number of arrow-matrix tuples the search may visit.
  std::uint64_t search_cap = std::uint64_t{1} << 20;
};

Catalog bruteforce_indecomposables(const AlgebraPtr& alg, const BruteForceOptions& opts, const Limits& limits = {});

/// Multiset of catalog entries whose direct sum is isomorphic to `y`. Throws
/// ConsistencyError("not identifiable in catalog") when none matches.
Multiset decompose(const Representation& y, const Catalog& cat);

}  // namespace ietilt
