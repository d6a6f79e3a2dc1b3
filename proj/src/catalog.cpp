#include "ietilt/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "ietilt/error.hpp"
#include "json.hpp"

namespace ietilt {

using nlohmann::json;

IndexSet::IndexSet(std::initializer_list<std::size_t> members) {
  for (auto m : members) insert(m);
}

IndexSet IndexSet::from(const std::vector<std::size_t>& members) {
  IndexSet s;
  for (auto m : members) s.insert(m);
  return s;
}

void IndexSet::insert(std::size_t i) {
  if (i >= kCapacity) throw InvalidInput("index sets hold at most 64 members");
  bits_ |= std::uint64_t{1} << i;
}

std::vector<std::size_t> IndexSet::members() const {
  std::vector<std::size_t> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  return out;
}

std::strong_ordering operator<=>(IndexSet a, IndexSet b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare_three_way(ma.begin(), ma.end(), mb.begin(), mb.end());
}

IndexSet support_set(const Multiset& m) {
  IndexSet s;
  for (auto i : m) s.insert(i);
  return s;
}

namespace {

bool canonical_entry_less(const CatalogEntry& a, const CatalogEntry& b) {
  const auto da = a.module.total_dim();
  const auto db = b.module.total_dim();
  if (da != db) return da < db;
  if (a.module.dims() != b.module.dims()) return a.module.dims() < b.module.dims();
  return a.label < b.label;
}

}  // namespace

Catalog::Catalog(AlgebraPtr alg, std::vector<CatalogEntry> entries, Limits limits)
    : algebra_(std::move(alg)), limits_(limits), entries_(std::move(entries)) {
  if (entries_.size() > IndexSet::kCapacity) throw InvalidInput("catalogs hold at most 64 indecomposables");
  std::set<std::string> labels;
  for (auto& e : entries_) {
    if (!labels.insert(e.label).second) throw InvalidInput("duplicate catalog label '" + e.label + "'");
    if (!same_algebra(e.module.algebra(), algebra_)) throw InvalidInput("catalog entry over a different algebra");
    e.module = rehome(e.module, algebra_);
  }
  std::sort(entries_.begin(), entries_.end(), canonical_entry_less);
  const auto n = entries_.size();
  hom_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) hom_[i * n + j] = ietilt::hom_dim(entries_[i].module, entries_[j].module);

  const auto nv = algebra_->vertex_count();
  projective_.assign(nv, std::nullopt);
  injective_.assign(nv, std::nullopt);
  for (std::size_t v = 0; v < nv; ++v) {
    const auto p = standard_module(algebra_, ModuleKind::projective, v);
    const auto q = standard_module(algebra_, ModuleKind::injective, v);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& m = entries_[i].module;
      if (!projective_[v] && m.dims() == p.dims() && is_isomorphic(m, p, limits_)) projective_[v] = i;
      if (!injective_[v] && m.dims() == q.dims() && is_isomorphic(m, q, limits_)) injective_[v] = i;
    }
  }
}

std::optional<std::size_t> Catalog::find(const std::string& label) const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].label == label) return i;
  return std::nullopt;
}

std::size_t Catalog::index_of(const std::string& label) const {
  auto i = find(label);
  if (!i) throw InvalidInput("unknown module label '" + label + "'");
  return *i;
}

IndexSet Catalog::projectives() const {
  IndexSet s;
  for (const auto& p : projective_)
    if (p) s.insert(*p);
  return s;
}

IndexSet Catalog::injectives() const {
  IndexSet s;
  for (const auto& p : injective_)
    if (p) s.insert(*p);
  return s;
}

std::vector<Representation> Catalog::modules(IndexSet s) const {
  std::vector<Representation> out;
  for (auto i : s.members()) out.push_back(module(i));
  return out;
}

Representation Catalog::sum(IndexSet s) const {
  const auto parts = modules(s);
  return direct_sum(algebra_, parts);
}

Representation Catalog::sum(const Multiset& m) const {
  std::vector<Representation> parts;
  for (auto i : m) parts.push_back(module(i));
  return direct_sum(algebra_, parts);
}

IndexSet Catalog::support(std::size_t i) const { return IndexSet::from(module(i).support()); }

IndexSet Catalog::support(IndexSet s) const {
  IndexSet out;
  for (auto i : s.members()) out = out | support(i);
  return out;
}

std::string Catalog::labels(IndexSet s, const std::string& sep) const {
  if (s.empty()) return "0";
  std::string out;
  for (auto i : s.members()) {
    if (!out.empty()) out += sep;
    out += label(i);
  }
  return out;
}

std::string Catalog::labels(const Multiset& m, const std::string& sep) const {
  if (m.empty()) return "0";
  std::string out;
  for (auto i : m) {
    if (!out.empty()) out += sep;
    out += label(i);
  }
  return out;
}

std::string standard_label(const Representation& x, const std::string& fallback, const Limits& limits) {
  const auto& alg = x.algebra();
  const auto n = alg->vertex_count();
  if (x.total_dim() == 1) return "S" + alg->vertex_label(x.support().front());
  for (std::size_t v = 0; v < n; ++v) {
    const auto p = standard_module(alg, ModuleKind::projective, v);
    if (p.dims() == x.dims() && is_isomorphic(p, x, limits)) return "P" + alg->vertex_label(v);
  }
  for (std::size_t v = 0; v < n; ++v) {
    const auto q = standard_module(alg, ModuleKind::injective, v);
    if (q.dims() == x.dims() && is_isomorphic(q, x, limits)) return "I" + alg->vertex_label(v);
  }
  return fallback;
}

namespace {

// A string module along a walk of vertices: basis vector k sits at walk[k] and
// steps[k] (an arrow joining walk[k] and walk[k+1], either direction) acts by 1.
Representation string_module(const AlgebraPtr& alg, const std::vector<std::size_t>& walk,
                             const std::vector<std::size_t>& steps) {
  const auto& q = alg->quiver();
  const auto n = q.vertex_count();
  std::vector<std::size_t> dims(n, 0);
  std::vector<std::size_t> slot(walk.size());
  for (std::size_t k = 0; k < walk.size(); ++k) slot[k] = dims[walk[k]]++;
  std::vector<Matrix> action;
  for (const auto& arrow : q.arrows) action.emplace_back(alg->field(), dims[arrow.target], dims[arrow.source]);
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const auto a = steps[k];
    const auto& arrow = q.arrows[a];
    if (arrow.source == walk[k] && arrow.target == walk[k + 1]) {
      action[a].set(slot[k + 1], slot[k], 1);
    } else {
      action[a].set(slot[k], slot[k + 1], 1);
    }
  }
  return Representation(alg, std::move(dims), std::move(action));
}

bool relation_inside(const AlgebraPtr& alg, const std::set<std::size_t>& arrows) {
  for (const auto& rel : alg->relations()) {
    if (std::all_of(rel.arrows.begin(), rel.arrows.end(), [&](auto a) { return arrows.contains(a); })) return true;
  }
  return false;
}

std::vector<CatalogEntry> line_intervals(const AlgebraPtr& alg) {
  const auto& q = alg->quiver();
  const auto n = q.vertex_count();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);  // (neighbour, arrow)
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    adj[q.arrows[a].source].push_back({q.arrows[a].target, a});
    adj[q.arrows[a].target].push_back({q.arrows[a].source, a});
  }
  std::size_t start = 0;
  while (start < n && adj[start].size() > 1) ++start;
  std::vector<std::size_t> line{start};
  std::vector<std::size_t> joins;
  std::vector<bool> seen(n, false);
  seen[start] = true;
  while (line.size() < n) {
    bool moved = false;
    for (auto [w, a] : adj[line.back()]) {
      if (seen[w]) continue;
      seen[w] = true;
      line.push_back(w);
      joins.push_back(a);
      moved = true;
      break;
    }
    if (!moved) throw InvalidInput("interval_catalog: quiver is not connected");
  }
  std::vector<CatalogEntry> out;
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t r = l; r < n; ++r) {
      std::vector<std::size_t> walk(line.begin() + static_cast<std::ptrdiff_t>(l),
                                    line.begin() + static_cast<std::ptrdiff_t>(r + 1));
      std::vector<std::size_t> steps(joins.begin() + static_cast<std::ptrdiff_t>(l),
                                     joins.begin() + static_cast<std::ptrdiff_t>(r));
      if (relation_inside(alg, std::set<std::size_t>(steps.begin(), steps.end()))) continue;
      auto m = string_module(alg, walk, steps);
      const auto a = std::min(walk.front(), walk.back());
      const auto b = std::max(walk.front(), walk.back());
      std::string fallback = "M[" + alg->vertex_label(a) + ".." + alg->vertex_label(b) + "]";
      out.push_back({"", std::move(m)});
      out.back().label = std::move(fallback);
    }
  }
  return out;
}

std::vector<CatalogEntry> cycle_uniserials(const AlgebraPtr& alg) {
  const auto& q = alg->quiver();
  const auto n = q.vertex_count();
  std::vector<std::size_t> out_arrow(n);
  for (std::size_t a = 0; a < q.arrows.size(); ++a) out_arrow[q.arrows[a].source] = a;
  std::vector<CatalogEntry> out;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> walk{s};
    std::vector<std::size_t> steps;
    for (;;) {
      auto m = string_module(alg, walk, steps);
      std::string label = "M[" + alg->vertex_label(walk.front()) + ".." + alg->vertex_label(walk.back()) + "]";
      if (walk.size() > n) label += "^" + std::to_string(walk.size());
      out.push_back({std::move(label), std::move(m)});
      const auto a = out_arrow[walk.back()];
      Path p{s, q.arrows[a].target, steps};
      p.arrows.push_back(a);
      if (!alg->path_index(p)) break;
      steps.push_back(a);
      walk.push_back(q.arrows[a].target);
    }
  }
  return out;
}

enum class Shape { point, line, cycle, other };

Shape quiver_shape(const Quiver& q) {
  const auto n = q.vertex_count();
  if (n == 0) return Shape::other;
  if (n == 1 && q.arrows.empty()) return Shape::point;
  std::vector<std::size_t> outdeg(n, 0);
  std::vector<std::size_t> indeg(n, 0);
  std::vector<std::size_t> deg(n, 0);
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& a : q.arrows) {
    ++outdeg[a.source];
    ++indeg[a.target];
    ++deg[a.source];
    ++deg[a.target];
    edges.insert({std::min(a.source, a.target), std::max(a.source, a.target)});
  }
  // connectivity of the underlying graph
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& a : q.arrows) parent[find(a.source)] = find(a.target);
  for (std::size_t i = 0; i < n; ++i)
    if (find(i) != find(0)) return Shape::other;

  if (q.arrows.size() == n - 1 && edges.size() == n - 1 &&
      std::all_of(deg.begin(), deg.end(), [](auto d) { return d <= 2; })) {
    return Shape::line;
  }
  if (q.arrows.size() == n && std::all_of(outdeg.begin(), outdeg.end(), [](auto d) { return d == 1; }) &&
      std::all_of(indeg.begin(), indeg.end(), [](auto d) { return d == 1; })) {
    return Shape::cycle;
  }
  return Shape::other;
}

}  // namespace

Catalog interval_catalog(const AlgebraPtr& alg, const Limits& limits) {
  std::vector<CatalogEntry> raw;
  switch (quiver_shape(alg->quiver())) {
    case Shape::point:
    case Shape::line:
      raw = line_intervals(alg);
      break;
    case Shape::cycle:
      raw = cycle_uniserials(alg);
      break;
    case Shape::other:
      throw InvalidInput("interval_catalog supports line quivers and oriented cycles only; supply a catalog file");
  }
  for (auto& e : raw) e.label = standard_label(e.module, e.label, limits);
  return Catalog(alg, std::move(raw), limits);
}

bool is_indecomposable(const Representation& x, const Limits& limits) {
  if (x.is_zero()) return false;
  const auto basis = hom_basis(x, x);
  if (basis.size() == 1) return true;
  const std::uint64_t p = x.field().p();
  std::uint64_t space = 1;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    space *= p;
    if (space > limits.iso_search_cap) {
      throw CapExceeded("idempotent search space " + std::to_string(p) + "^" + std::to_string(basis.size()) +
                        " exceeds the cap of " + std::to_string(limits.iso_search_cap));
    }
  }
  const Morphism id = identity_morphism(x);
  std::vector<Scalar> coeffs(basis.size(), 0);
  for (;;) {
    std::size_t k = 0;
    while (k < coeffs.size() && ++coeffs[k] == p) coeffs[k++] = 0;
    if (k == coeffs.size()) return true;
    const Morphism e = linear_combination(basis, coeffs);
    bool idempotent = true;
    bool identity = true;
    for (std::size_t v = 0; v < e.components.size(); ++v) {
      const auto& c = e.components[v];
      if (!(c * c == c)) {
        idempotent = false;
        break;
      }
      if (!(c == id.components[v])) identity = false;
    }
    if (idempotent && !identity) return false;
  }
}

namespace {

std::string dims_text(const std::vector<std::size_t>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

}  // namespace

ValidationReport validate_catalog(const Catalog& cat, const std::optional<std::vector<std::size_t>>& audit_dims) {
  ValidationReport report;
  const auto& q = cat.algebra()->quiver();
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const auto& m = cat.module(i);
    for (const auto& rel : cat.algebra()->relations()) {
      Path p{q.arrows[rel.arrows.front()].source, q.arrows[rel.arrows.back()].target, rel.arrows};
      if (!m.path_action(p).is_zero()) report.violations.push_back(cat.label(i) + ": relation does not vanish");
    }
    if (m.is_zero()) {
      report.violations.push_back(cat.label(i) + ": zero module");
    } else if (!is_indecomposable(m, cat.limits())) {
      report.violations.push_back(cat.label(i) + ": decomposable (nontrivial idempotent endomorphism found)");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (is_isomorphic(cat.module(j), m, cat.limits()))
        report.violations.push_back(cat.label(i) + ": isomorphic to " + cat.label(j));
    }
  }
  if (audit_dims) {
    const auto found = bruteforce_indecomposables(cat.algebra(), BruteForceOptions{*audit_dims}, cat.limits());
    for (const auto& e : found.entries()) {
      bool present = false;
      for (std::size_t i = 0; i < cat.size() && !present; ++i) present = is_isomorphic(cat.module(i), e.module, cat.limits());
      if (!present) {
        report.warnings.push_back("catalog appears incomplete: no entry isomorphic to an indecomposable with dims " +
                                  dims_text(e.module.dims()));
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

Catalog bruteforce_indecomposables(const AlgebraPtr& alg, const BruteForceOptions& opts, const Limits& limits) {
  const auto& q = alg->quiver();
  const auto n = q.vertex_count();
  if (opts.max_dims.size() != n) throw InvalidInput("max_dims needs one entry per vertex");
  const std::uint64_t p = alg->field().p();

  // Size the whole search up front.
  std::vector<std::vector<std::size_t>> dim_vectors;
  std::vector<std::size_t> d(n, 0);
  std::uint64_t total = 0;
  for (;;) {
    std::size_t k = 0;
    while (k < n && ++d[k] > opts.max_dims[k]) d[k++] = 0;
    if (k == n) break;
    std::size_t entries = 0;
    for (const auto& a : q.arrows) entries += d[a.source] * d[a.target];
    std::uint64_t count = 1;
    for (std::size_t e = 0; e < entries; ++e) {
      count *= p;
      if (count > opts.search_cap) break;
    }
    total += count;
    if (total > opts.search_cap) {
      throw CapExceeded("brute-force search space exceeds the cap of " + std::to_string(opts.search_cap));
    }
    dim_vectors.push_back(d);
  }

  std::vector<Representation> found;
  for (const auto& dims : dim_vectors) {
    std::vector<std::pair<std::size_t, std::size_t>> shapes;
    std::size_t entries = 0;
    for (const auto& a : q.arrows) {
      shapes.push_back({dims[a.target], dims[a.source]});
      entries += dims[a.target] * dims[a.source];
    }
    std::vector<Scalar> values(entries, 0);
    for (;;) {
      std::vector<Matrix> action;
      std::size_t pos = 0;
      for (auto [r, c] : shapes) {
        std::vector<Scalar> block(values.begin() + static_cast<std::ptrdiff_t>(pos),
                                  values.begin() + static_cast<std::ptrdiff_t>(pos + r * c));
        action.emplace_back(alg->field(), r, c, std::move(block));
        pos += r * c;
      }
      bool relations_hold = true;
      for (const auto& rel : alg->relations()) {
        Matrix m = Matrix::identity(alg->field(), dims[q.arrows[rel.arrows.front()].source]);
        for (auto a : rel.arrows) m = action[a] * m;
        if (!m.is_zero()) {
          relations_hold = false;
          break;
        }
      }
      if (relations_hold) {
        Representation x(alg, dims, std::move(action));
        if (is_indecomposable(x, limits)) {
          bool fresh = true;
          for (const auto& y : found) {
            if (y.dims() == x.dims() && is_isomorphic(x, y, limits)) {
              fresh = false;
              break;
            }
          }
          if (fresh) found.push_back(std::move(x));
        }
      }
      std::size_t k = 0;
      while (k < values.size() && ++values[k] == p) values[k++] = 0;
      if (k == values.size()) break;
    }
  }

  std::vector<CatalogEntry> entries;
  std::map<std::string, int> used;
  std::size_t unnamed = 0;
  for (auto& x : found) {
    std::string fallback;
    const auto support = x.support();
    const bool thin = std::all_of(x.dims().begin(), x.dims().end(), [](auto v) { return v <= 1; });
    if (thin) {
      fallback = "M[" + alg->vertex_label(support.front()) + ".." + alg->vertex_label(support.back()) + "]";
    } else {
      fallback = "X" + std::to_string(++unnamed);
    }
    std::string label = standard_label(x, fallback, limits);
    if (used[label]++ > 0) label += "#" + std::to_string(used[label]);
    entries.push_back({std::move(label), std::move(x)});
  }
  return Catalog(alg, std::move(entries), limits);
}

Multiset decompose(const Representation& y, const Catalog& cat) {
  if (!same_algebra(y.algebra(), cat.algebra())) throw InvalidInput("decompose: module over a different algebra");
  if (y.is_zero()) return {};
  const auto n = cat.size();
  const auto nv = y.dims().size();
  // dim Hom(E, -) is additive, so candidates must reproduce the Hom signature of y.
  std::vector<std::size_t> target(n);
  for (std::size_t e = 0; e < n; ++e) target[e] = hom_dim(cat.module(e), y);

  std::vector<std::size_t> remaining = y.dims();
  std::vector<std::size_t> signature(n, 0);
  Multiset chosen;
  std::optional<Multiset> result;

  auto fits = [&](std::size_t i) {
    const auto& d = cat.module(i).dims();
    for (std::size_t v = 0; v < nv; ++v)
      if (d[v] > remaining[v]) return false;
    for (std::size_t e = 0; e < n; ++e)
      if (signature[e] + cat.hom_dim(e, i) > target[e]) return false;
    return true;
  };
  auto apply = [&](std::size_t i, bool add) {
    const auto& d = cat.module(i).dims();
    for (std::size_t v = 0; v < nv; ++v) remaining[v] = add ? remaining[v] - d[v] : remaining[v] + d[v];
    for (std::size_t e = 0; e < n; ++e) signature[e] = add ? signature[e] + cat.hom_dim(e, i) : signature[e] - cat.hom_dim(e, i);
  };
  auto search = [&](auto&& self, std::size_t from) -> void {
    if (result) return;
    if (std::all_of(remaining.begin(), remaining.end(), [](auto r) { return r == 0; })) {
      if (signature == target && is_isomorphic(cat.sum(chosen), y, cat.limits())) result = chosen;
      return;
    }
    for (std::size_t i = from; i < n && !result; ++i) {
      if (cat.module(i).is_zero() || !fits(i)) continue;
      apply(i, true);
      chosen.push_back(i);
      self(self, i);
      chosen.pop_back();
      apply(i, false);
    }
  };
  search(search, 0);
  if (!result) throw ConsistencyError("module " + y.describe() + " is not identifiable in catalog");
  return *result;
}

std::string catalog_to_json(const Catalog& cat) {
  const auto& q = cat.algebra()->quiver();
  json doc;
  doc["algebra_hash"] = cat.algebra()->hash();
  doc["entries"] = json::array();
  for (const auto& e : cat.entries()) {
    json entry;
    entry["label"] = e.label;
    entry["dims"] = e.module.dims();
    json action = json::object();
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
      const auto& m = e.module.action(a);
      json rows = json::array();
      for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
      action[q.arrows[a].name] = rows;
    }
    entry["action"] = action;
    doc["entries"].push_back(entry);
  }
  return doc.dump(2);
}

Catalog load_catalog(const AlgebraPtr& alg, const std::string& json_text, const Limits& limits) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("catalog file: ") + e.what());
  }
  const auto& q = alg->quiver();
  std::vector<CatalogEntry> entries;
  try {
    if (doc.contains("algebra_hash") && doc["algebra_hash"].get<std::string>() != alg->hash()) {
      throw ParseError("catalog file: algebra_hash " + doc["algebra_hash"].get<std::string>() +
                       " does not match the algebra (" + alg->hash() + ")");
    }
    const auto& list = doc.at("entries");
    for (std::size_t k = 0; k < list.size(); ++k) {
      const auto& item = list[k];
      const std::string where = "catalog file: entries[" + std::to_string(k) + "]";
      const auto label = item.at("label").get<std::string>();
      const auto dims = item.at("dims").get<std::vector<std::size_t>>();
      if (dims.size() != q.vertex_count()) throw ParseError(where + ": dims has the wrong length");
      const auto& action = item.contains("action") ? item.at("action") : json::object();
      std::vector<Matrix> mats;
      for (const auto& arrow : q.arrows) {
        const auto rows = dims[arrow.target];
        const auto cols = dims[arrow.source];
        std::vector<std::vector<std::int64_t>> data;
        if (action.contains(arrow.name)) data = action.at(arrow.name).get<std::vector<std::vector<std::int64_t>>>();
        std::vector<Scalar> flat;
        if (rows * cols > 0 || !data.empty()) {
          if (data.size() != rows) throw ParseError(where + ": arrow '" + arrow.name + "' has the wrong number of rows");
          for (const auto& row : data) {
            if (row.size() != cols) throw ParseError(where + ": arrow '" + arrow.name + "' has a row of the wrong length");
            for (auto x : row) flat.push_back(alg->field().reduce(x));
          }
        }
        mats.emplace_back(alg->field(), rows, cols, std::move(flat));
      }
      try {
        entries.push_back({label, Representation(alg, dims, std::move(mats))});
      } catch (const InvalidInput& e) {
        throw ConsistencyError(where + " (" + label + "): " + e.what());
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("catalog file: ") + e.what());
  }
  Catalog cat(alg, std::move(entries), limits);
  const auto report = validate_catalog(cat);
  if (!report.ok) {
    std::string msg = "catalog validation failed:";
    for (const auto& v : report.violations) msg += "\n  " + v;
    throw ConsistencyError(msg);
  }
  return cat;
}

}  // namespace ietilt
