#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "ietilt/cli.hpp"
#include "ietilt/ieclosed.hpp"
#include "ietilt/io.hpp"

namespace fixtures {

using namespace ietilt;

// 1 -a-> 2 -b-> 3 with ab = 0.
inline AlgebraPtr nakayama_a3(Scalar p = 2) {
  return make_algebra({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}}, {{"a", "b"}}, p);
}

// k(2 -> 1).
inline AlgebraPtr hereditary_a2(Scalar p = 2) { return make_algebra({"1", "2"}, {{"a", "2", "1"}}, {}, p); }

// 1 -> 2 -> 3 without relations.
inline AlgebraPtr linear_a3(Scalar p = 2) {
  return make_algebra({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}}, {}, p);
}

inline AlgebraPtr one_vertex(Scalar p = 2) { return make_algebra({"1"}, {}, {}, p); }

inline cli::Session session(const AlgebraPtr& alg) { return cli::make_session(alg); }

inline std::size_t idx(const Catalog& cat, const std::string& label) { return cat.index_of(label); }

inline IndexSet set(const Catalog& cat, const std::vector<std::string>& labels) {
  IndexSet s;
  for (const auto& l : labels) s.insert(cat.index_of(l));
  return s;
}

inline Multiset multi(const Catalog& cat, const std::vector<std::string>& labels) {
  Multiset m;
  for (const auto& l : labels) m.push_back(cat.index_of(l));
  std::sort(m.begin(), m.end());
  return m;
}

inline const Representation& mod(const Catalog& cat, const std::string& label) { return cat.module(cat.index_of(label)); }

inline Matrix random_matrix(std::mt19937& rng, Field f, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<Scalar> d(0, f.p() - 1);
  std::vector<Vector> r(rows, Vector(cols));
  for (auto& row : r)
    for (auto& x : row) x = d(rng);
  return Matrix::from_rows(f, r, cols);
}

inline Vector random_vector(std::mt19937& rng, Field f, std::size_t n) {
  std::uniform_int_distribution<Scalar> d(0, f.p() - 1);
  Vector v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace fixtures
