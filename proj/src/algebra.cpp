#include "ietilt/algebra.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <set>
#include <sstream>
#include <tuple>

#include "ietilt/error.hpp"

namespace ietilt {

std::optional<std::size_t> Quiver::find_vertex(const std::string& label) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == label) return i;
  return std::nullopt;
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return i;
  return std::nullopt;
}

std::size_t BoundQuiverAlgebra::vertex_index(const std::string& label) const {
  auto v = quiver_.find_vertex(label);
  if (!v) throw InvalidInput("unknown vertex '" + label + "'");
  return *v;
}

std::optional<std::size_t> BoundQuiverAlgebra::path_index(const Path& path) const {
  auto it = index_.find(path);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<Path> BoundQuiverAlgebra::compose(const Path& first, const Path& second) const {
  if (first.target != second.source) return std::nullopt;
  Path p{first.source, second.target, first.arrows};
  p.arrows.insert(p.arrows.end(), second.arrows.begin(), second.arrows.end());
  if (!index_.contains(p)) return std::nullopt;
  return p;
}

std::size_t BoundQuiverAlgebra::dimension() const {
  std::size_t d = 0;
  for (const auto& b : basis_) d += b.size();
  return d;
}

std::string BoundQuiverAlgebra::describe_path(const Path& path) const {
  if (path.arrows.empty()) return "e" + vertex_label(path.source);
  std::string out;
  for (auto a : path.arrows) out += quiver_.arrows[a].name;
  return out;
}

std::string BoundQuiverAlgebra::hash() const {
  std::ostringstream canon;
  canon << "p=" << field_.p() << ";v=";
  for (const auto& v : quiver_.vertices) canon << v.size() << ':' << v << ',';
  canon << ";a=";
  for (const auto& a : quiver_.arrows) canon << a.name.size() << ':' << a.name << '>' << a.source << '>' << a.target << ',';
  canon << ";r=";
  for (const auto& r : relations_) {
    for (auto a : r.arrows) canon << a << '.';
    canon << ',';
  }
  // FNV-1a, 64 bit
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : canon.str()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

bool BoundQuiverAlgebra::same_as(const BoundQuiverAlgebra& other) const {
  return field_ == other.field_ && quiver_ == other.quiver_ && relations_ == other.relations_;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_as(*b);
}

namespace {

void validate_quiver(const Quiver& q) {
  std::set<std::string> seen;
  for (const auto& v : q.vertices) {
    if (!seen.insert(v).second) throw InvalidInput("duplicate vertex label '" + v + "'");
  }
  seen.clear();
  for (const auto& a : q.arrows) {
    if (!seen.insert(a.name).second) throw InvalidInput("duplicate arrow name '" + a.name + "'");
    if (a.source >= q.vertices.size() || a.target >= q.vertices.size()) {
      throw InvalidInput("arrow '" + a.name + "' refers to an undeclared vertex");
    }
  }
}

void validate_relation(const Quiver& q, const MonomialRelation& r) {
  if (r.arrows.size() < 2) throw InvalidInput("relations must have length at least 2");
  for (auto a : r.arrows) {
    if (a >= q.arrows.size()) throw InvalidInput("relation refers to an undeclared arrow");
  }
  for (std::size_t k = 0; k + 1 < r.arrows.size(); ++k) {
    const auto& x = q.arrows[r.arrows[k]];
    const auto& y = q.arrows[r.arrows[k + 1]];
    if (x.target != y.source) {
      throw InvalidInput("relation is not composable: arrow '" + x.name + "' ends at " + q.vertices[x.target] +
                         " but '" + y.name + "' starts at " + q.vertices[y.source]);
    }
  }
}

bool ends_with_relation(const std::vector<std::size_t>& arrows, const std::vector<MonomialRelation>& rels) {
  for (const auto& r : rels) {
    if (r.arrows.size() > arrows.size()) continue;
    if (std::equal(r.arrows.rbegin(), r.arrows.rend(), arrows.rbegin())) return true;
  }
  return false;
}

}  // namespace

AlgebraPtr build_algebra(Quiver q, std::vector<MonomialRelation> rels, Field f, BuildOptions opts) {
  validate_quiver(q);
  for (const auto& r : rels) validate_relation(q, r);

  std::shared_ptr<BoundQuiverAlgebra> alg(new BoundQuiverAlgebra());
  const std::size_t n = q.vertex_count();
  alg->basis_.assign(n * n, {});

  // Every prefix of a surviving path survives, so it is enough to test the
  // newest suffix when extending.
  std::deque<Path> frontier;
  for (std::size_t v = 0; v < n; ++v) frontier.push_back(Path{v, v, {}});
  while (!frontier.empty()) {
    Path p = std::move(frontier.front());
    frontier.pop_front();
    if (p.length() > opts.max_path_length) {
      throw Error("algebra appears infinite-dimensional (surviving path longer than " +
                  std::to_string(opts.max_path_length) + ")");
    }
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
      if (q.arrows[a].source != p.target) continue;
      Path next{p.source, q.arrows[a].target, p.arrows};
      next.arrows.push_back(a);
      if (ends_with_relation(next.arrows, rels)) continue;
      frontier.push_back(std::move(next));
    }
    alg->basis_[p.source * n + p.target].push_back(std::move(p));
  }
  for (auto& bucket : alg->basis_) {
    std::sort(bucket.begin(), bucket.end(), [](const Path& x, const Path& y) {
      if (x.arrows.size() != y.arrows.size()) return x.arrows.size() < y.arrows.size();
      return x.arrows < y.arrows;
    });
    for (std::size_t k = 0; k < bucket.size(); ++k) alg->index_[bucket[k]] = k;
  }
  alg->quiver_ = std::move(q);
  alg->relations_ = std::move(rels);
  alg->field_ = f;
  return alg;
}

Path reverse_path(const Path& p) {
  Path r{p.target, p.source, p.arrows};
  std::reverse(r.arrows.begin(), r.arrows.end());
  return r;
}

AlgebraPtr opposite_algebra(const AlgebraPtr& alg) {
  if (!alg) throw InvalidInput("opposite_algebra: null algebra");
  auto build = [&] {
    Quiver q = alg->quiver_;
    for (auto& a : q.arrows) std::swap(a.source, a.target);
    std::vector<MonomialRelation> rels = alg->relations_;
    for (auto& r : rels) std::reverse(r.arrows.begin(), r.arrows.end());
    return build_algebra(std::move(q), std::move(rels), alg->field_);
  };
  std::call_once(alg->opposite_once_, [&] {
    // An algebra that was itself built as an opposite only links back weakly.
    if (!alg->opposite_weak_.expired()) return;
    auto op = build();
    op->opposite_weak_ = alg;
    alg->opposite_strong_ = op;
  });
  if (alg->opposite_strong_) return alg->opposite_strong_;
  if (auto back = alg->opposite_weak_.lock()) return back;
  return build();
}

AlgebraPtr make_algebra(const std::vector<std::string>& vertices,
                        const std::vector<std::tuple<std::string, std::string, std::string>>& arrows,
                        const std::vector<std::vector<std::string>>& relations, Scalar p, BuildOptions opts) {
  Quiver q;
  q.vertices = vertices;
  for (const auto& [name, from, to] : arrows) {
    auto s = q.find_vertex(from);
    auto t = q.find_vertex(to);
    if (!s || !t) throw InvalidInput("arrow '" + name + "' refers to an undeclared vertex");
    q.arrows.push_back(Arrow{name, *s, *t});
  }
  std::vector<MonomialRelation> rels;
  for (const auto& r : relations) {
    MonomialRelation rel;
    for (const auto& name : r) {
      auto a = q.find_arrow(name);
      if (!a) throw InvalidInput("relation refers to unknown arrow '" + name + "'");
      rel.arrows.push_back(*a);
    }
    rels.push_back(std::move(rel));
  }
  return build_algebra(std::move(q), std::move(rels), Field(p), opts);
}

}  // namespace ietilt
