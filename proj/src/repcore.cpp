#include "ietilt/repcore.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "ietilt/error.hpp"

namespace ietilt {

namespace {

void require_same_algebra(const Representation& x, const Representation& y, const char* what) {
  if (!same_algebra(x.algebra(), y.algebra())) {
    throw InvalidInput(std::string(what) + ": modules live over different algebras");
  }
}

Matrix empty_columns(const Field& f, std::size_t rows) { return Matrix(f, rows, 0); }

}  // namespace

Representation::Representation(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> action)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), action_(std::move(action)) {
  if (!algebra_) throw InvalidInput("representation without an algebra");
  const auto& q = algebra_->quiver();
  if (dims_.size() != q.vertex_count()) {
    throw InvalidInput("dimension vector has " + std::to_string(dims_.size()) + " entries, quiver has " +
                       std::to_string(q.vertex_count()) + " vertices");
  }
  if (action_.size() != q.arrows.size()) throw InvalidInput("one matrix per arrow is required");
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& arrow = q.arrows[a];
    auto& m = action_[a];
    if (m.rows() != dims_[arrow.target] || m.cols() != dims_[arrow.source]) {
      throw InvalidInput("matrix for arrow '" + arrow.name + "' has shape " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected " + std::to_string(dims_[arrow.target]) + "x" +
                         std::to_string(dims_[arrow.source]));
    }
    if (!(m.field() == algebra_->field())) m = Matrix(algebra_->field(), m.rows(), m.cols(), m.entries());
  }
  for (const auto& rel : algebra_->relations()) {
    Path p{q.arrows[rel.arrows.front()].source, q.arrows[rel.arrows.back()].target, rel.arrows};
    if (!path_action(p).is_zero()) {
      std::string name;
      for (auto a : rel.arrows) name += q.arrows[a].name;
      throw InvalidInput("representation does not satisfy the relation " + name + " = 0");
    }
  }
}

Representation Representation::zero(AlgebraPtr algebra) {
  const auto n = algebra->vertex_count();
  std::vector<Matrix> action;
  for (std::size_t a = 0; a < algebra->arrow_count(); ++a) action.emplace_back(algebra->field(), 0, 0);
  return Representation(std::move(algebra), std::vector<std::size_t>(n, 0), std::move(action));
}

std::size_t Representation::total_dim() const {
  std::size_t d = 0;
  for (auto x : dims_) d += x;
  return d;
}

Matrix Representation::path_action(const Path& path) const {
  Matrix m = Matrix::identity(field(), dims_[path.source]);
  for (auto a : path.arrows) m = action_[a] * m;
  return m;
}

std::vector<std::size_t> Representation::support() const {
  std::vector<std::size_t> s;
  for (std::size_t v = 0; v < dims_.size(); ++v)
    if (dims_[v] > 0) s.push_back(v);
  return s;
}

std::string Representation::describe() const {
  std::ostringstream os;
  os << "dims(";
  for (std::size_t v = 0; v < dims_.size(); ++v) os << (v ? "," : "") << dims_[v];
  os << ")";
  const auto& q = algebra_->quiver();
  for (std::size_t a = 0; a < action_.size(); ++a) os << ' ' << q.arrows[a].name << '=' << action_[a].to_string();
  return os.str();
}

bool operator==(const Representation& a, const Representation& b) {
  return same_algebra(a.algebra_, b.algebra_) && a.dims_ == b.dims_ && a.action_ == b.action_;
}

bool Morphism::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const Matrix& m) { return m.is_zero(); });
}

bool Morphism::intertwines() const {
  const auto& q = source.algebra()->quiver();
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& arrow = q.arrows[a];
    if (!(target.action(a) * components[arrow.source] == components[arrow.target] * source.action(a))) return false;
  }
  return true;
}

Morphism identity_morphism(const Representation& x) {
  Morphism f{x, x, {}};
  for (auto d : x.dims()) f.components.push_back(Matrix::identity(x.field(), d));
  return f;
}

Morphism zero_morphism(const Representation& x, const Representation& y) {
  require_same_algebra(x, y, "zero_morphism");
  Morphism f{x, y, {}};
  for (std::size_t v = 0; v < x.dims().size(); ++v) f.components.emplace_back(x.field(), y.dim(v), x.dim(v));
  return f;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!(g.source.dims() == f.target.dims())) throw InvalidInput("compose: codomain/domain mismatch");
  Morphism h{f.source, g.target, {}};
  for (std::size_t v = 0; v < f.components.size(); ++v) h.components.push_back(g.components[v] * f.components[v]);
  return h;
}

Morphism linear_combination(std::span<const Morphism> basis, std::span<const Scalar> coeffs) {
  if (basis.empty()) throw InvalidInput("linear_combination of an empty family");
  Morphism out = zero_morphism(basis.front().source, basis.front().target);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coeffs[k] == 0) continue;
    for (std::size_t v = 0; v < out.components.size(); ++v)
      out.components[v] = out.components[v] + basis[k].components[v].scaled(coeffs[k]);
  }
  return out;
}

Representation standard_module(const AlgebraPtr& alg, ModuleKind kind, std::size_t vertex) {
  const auto n = alg->vertex_count();
  if (vertex >= n) throw InvalidInput("standard_module: unknown vertex");
  const auto& q = alg->quiver();
  const Field& f = alg->field();
  std::vector<std::size_t> dims(n, 0);
  std::vector<Matrix> action;

  switch (kind) {
    case ModuleKind::simple: {
      dims[vertex] = 1;
      for (const auto& arrow : q.arrows) action.emplace_back(f, dims[arrow.target], dims[arrow.source]);
      break;
    }
    case ModuleKind::projective: {
      for (std::size_t j = 0; j < n; ++j) dims[j] = alg->paths(vertex, j).size();
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const auto& arrow = q.arrows[a];
        Matrix m(f, dims[arrow.target], dims[arrow.source]);
        const Path step{arrow.source, arrow.target, {a}};
        const auto& from = alg->paths(vertex, arrow.source);
        for (std::size_t c = 0; c < from.size(); ++c) {
          if (auto ext = alg->compose(from[c], step)) m.set(*alg->path_index(*ext), c, 1);
        }
        action.push_back(std::move(m));
      }
      break;
    }
    case ModuleKind::injective: {
      // Basis at j: duals of paths j -> vertex. An arrow a: j -> k sends (a q')* to q'*.
      for (std::size_t j = 0; j < n; ++j) dims[j] = alg->paths(j, vertex).size();
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const auto& arrow = q.arrows[a];
        Matrix m(f, dims[arrow.target], dims[arrow.source]);
        const auto& from = alg->paths(arrow.source, vertex);
        for (std::size_t c = 0; c < from.size(); ++c) {
          const Path& p = from[c];
          if (p.arrows.empty() || p.arrows.front() != a) continue;
          Path rest{arrow.target, vertex, std::vector<std::size_t>(p.arrows.begin() + 1, p.arrows.end())};
          m.set(*alg->path_index(rest), c, 1);
        }
        action.push_back(std::move(m));
      }
      break;
    }
  }
  return Representation(alg, std::move(dims), std::move(action));
}

Morphism map_from_projective(const Representation& x_module, std::size_t vertex, const Vector& x) {
  const auto& alg = x_module.algebra();
  Representation p = standard_module(alg, ModuleKind::projective, vertex);
  Morphism f{p, x_module, {}};
  for (std::size_t w = 0; w < alg->vertex_count(); ++w) {
    const auto& paths = alg->paths(vertex, w);
    std::vector<Vector> cols;
    for (const auto& path : paths) cols.push_back(x_module.path_action(path) * x);
    f.components.push_back(Matrix::from_columns(x_module.field(), x_module.dim(w), cols));
  }
  return f;
}

namespace {

// Unknowns: entries of every component, vertex by vertex, row-major.
struct HomSystem {
  Matrix constraints;
  std::vector<std::size_t> offsets;
};

HomSystem hom_system(const Representation& x, const Representation& y) {
  require_same_algebra(x, y, "hom");
  const auto& q = x.algebra()->quiver();
  const Field& f = x.field();
  const auto n = q.vertex_count();
  std::vector<std::size_t> offsets(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] = offsets[v] + y.dim(v) * x.dim(v);
  const std::size_t unknowns = offsets[n];

  std::size_t rows = 0;
  for (const auto& arrow : q.arrows) rows += y.dim(arrow.target) * x.dim(arrow.source);
  Matrix sys(f, rows, unknowns);
  std::size_t row = 0;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto s = q.arrows[a].source;
    const auto t = q.arrows[a].target;
    const Matrix& ya = y.action(a);
    const Matrix& xa = x.action(a);
    // (Y_a f_s - f_t X_a)[r][c] = 0
    for (std::size_t r = 0; r < y.dim(t); ++r) {
      for (std::size_t c = 0; c < x.dim(s); ++c, ++row) {
        for (std::size_t k = 0; k < y.dim(s); ++k) {
          const auto col = offsets[s] + k * x.dim(s) + c;
          sys.set(row, col, f.add(sys(row, col), ya(r, k)));
        }
        for (std::size_t k = 0; k < x.dim(t); ++k) {
          const auto col = offsets[t] + r * x.dim(t) + k;
          sys.set(row, col, f.sub(sys(row, col), xa(k, c)));
        }
      }
    }
  }
  return {std::move(sys), std::move(offsets)};
}

}  // namespace

std::vector<Morphism> hom_basis(const Representation& x, const Representation& y) {
  const HomSystem hs = hom_system(x, y);
  const auto n = x.dims().size();
  std::vector<Morphism> out;
  for (const auto& v : kernel_basis(hs.constraints)) {
    Morphism m{x, y, {}};
    for (std::size_t w = 0; w < n; ++w) {
      std::vector<Scalar> entries(v.begin() + static_cast<std::ptrdiff_t>(hs.offsets[w]),
                                  v.begin() + static_cast<std::ptrdiff_t>(hs.offsets[w + 1]));
      m.components.emplace_back(x.field(), y.dim(w), x.dim(w), std::move(entries));
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::size_t hom_dim(const Representation& x, const Representation& y) {
  const HomSystem hs = hom_system(x, y);
  return hs.constraints.cols() - rank(hs.constraints);
}

Submodule submodule_from_subspaces(const Representation& x, const std::vector<Matrix>& bases) {
  const auto& q = x.algebra()->quiver();
  if (bases.size() != q.vertex_count()) throw InvalidInput("subspace tuple has the wrong number of vertices");
  std::vector<Matrix> canon;
  canon.reserve(bases.size());
  for (std::size_t v = 0; v < bases.size(); ++v) {
    if (bases[v].rows() != x.dim(v)) throw InvalidInput("subspace basis has the wrong ambient dimension");
    canon.push_back(canonical_span(bases[v]));
  }
  std::vector<std::size_t> dims;
  for (const auto& b : canon) dims.push_back(b.cols());
  std::vector<Matrix> action;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto s = q.arrows[a].source;
    const auto t = q.arrows[a].target;
    try {
      action.push_back(coordinates(canon[t], x.action(a) * canon[s]));
    } catch (const InvalidInput&) {
      throw InvalidInput("subspace tuple is not stable under arrow '" + q.arrows[a].name + "'");
    }
  }
  Representation u(x.algebra(), std::move(dims), std::move(action));
  Morphism inc{u, x, std::move(canon)};
  return {std::move(u), std::move(inc)};
}

std::vector<Matrix> subspaces_of(const Submodule& u) {
  std::vector<Matrix> out;
  for (const auto& c : u.inclusion.components) out.push_back(canonical_span(c));
  return out;
}

Submodule zero_submodule(const Representation& x) {
  std::vector<Matrix> bases;
  for (auto d : x.dims()) bases.push_back(empty_columns(x.field(), d));
  return submodule_from_subspaces(x, bases);
}

Submodule whole_submodule(const Representation& x) {
  std::vector<Matrix> bases;
  for (auto d : x.dims()) bases.push_back(Matrix::identity(x.field(), d));
  return submodule_from_subspaces(x, bases);
}

Submodule sum_of_submodules(const Submodule& a, const Submodule& b) {
  std::vector<Matrix> bases;
  for (std::size_t v = 0; v < a.inclusion.components.size(); ++v)
    bases.push_back(a.inclusion.components[v].hconcat(b.inclusion.components[v]));
  return submodule_from_subspaces(a.inclusion.target, bases);
}

QuotientModule quotient_by(const Representation& x, const Submodule& u) {
  if (!(u.inclusion.target.dims() == x.dims())) throw InvalidInput("quotient_by: submodule of a different module");
  const auto& q = x.algebra()->quiver();
  const Field& f = x.field();
  const auto n = q.vertex_count();
  std::vector<Matrix> proj;
  std::vector<Matrix> lift;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < n; ++v) {
    const Matrix& b = u.inclusion.components[v];
    // Rows of the projection span the annihilator of the submodule.
    Matrix p = Matrix::from_rows(f, kernel_basis(b.transpose()), x.dim(v));
    lift.push_back(right_inverse(p));
    dims.push_back(p.rows());
    proj.push_back(std::move(p));
  }
  std::vector<Matrix> action;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto s = q.arrows[a].source;
    const auto t = q.arrows[a].target;
    action.push_back(proj[t] * x.action(a) * lift[s]);
  }
  Representation quot(x.algebra(), std::move(dims), std::move(action));
  Morphism pi{x, quot, std::move(proj)};
  if (!pi.intertwines()) throw InvalidInput("quotient_by: the given inclusion is not a submodule");
  return {std::move(quot), std::move(pi)};
}

MorphismParts morphism_parts(const Morphism& f) {
  const auto n = f.components.size();
  std::vector<Matrix> ker;
  std::vector<Matrix> img;
  for (std::size_t v = 0; v < n; ++v) {
    ker.push_back(kernel_matrix(f.components[v]));
    img.push_back(image_matrix(f.components[v]));
  }
  Submodule kernel = submodule_from_subspaces(f.source, ker);
  Submodule image = submodule_from_subspaces(f.target, img);
  QuotientModule cokernel = quotient_by(f.target, image);
  return {std::move(kernel), std::move(image), std::move(cokernel)};
}

Representation direct_sum(const AlgebraPtr& alg, std::span<const Representation> parts) {
  const auto& q = alg->quiver();
  const Field& f = alg->field();
  const auto n = q.vertex_count();
  std::vector<std::size_t> dims(n, 0);
  for (const auto& p : parts) {
    if (!same_algebra(p.algebra(), alg)) throw InvalidInput("direct_sum: summand over a different algebra");
    for (std::size_t v = 0; v < n; ++v) dims[v] += p.dim(v);
  }
  std::vector<Matrix> action;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto s = q.arrows[a].source;
    const auto t = q.arrows[a].target;
    Matrix m(f, dims[t], dims[s]);
    std::size_t ro = 0;
    std::size_t co = 0;
    for (const auto& p : parts) {
      const Matrix& pa = p.action(a);
      for (std::size_t r = 0; r < pa.rows(); ++r)
        for (std::size_t c = 0; c < pa.cols(); ++c) m.set(ro + r, co + c, pa(r, c));
      ro += p.dim(t);
      co += p.dim(s);
    }
    action.push_back(std::move(m));
  }
  return Representation(alg, std::move(dims), std::move(action));
}

Morphism sum_of_maps(const Representation& sum, std::span<const Morphism> maps) {
  if (maps.empty()) throw InvalidInput("sum_of_maps needs at least one map");
  const Representation& target = maps.front().target;
  const auto n = target.dims().size();
  Morphism out{sum, target, {}};
  for (std::size_t v = 0; v < n; ++v) {
    Matrix m(target.field(), target.dim(v), 0);
    for (const auto& g : maps) m = m.hconcat(g.components[v]);
    if (m.cols() != sum.dim(v)) throw InvalidInput("sum_of_maps: block widths do not match the direct sum");
    out.components.push_back(std::move(m));
  }
  return out;
}

bool is_isomorphic(const Representation& x, const Representation& y, const Limits& limits) {
  require_same_algebra(x, y, "is_isomorphic");
  if (x.dims() != y.dims()) return false;
  if (x.is_zero()) return true;
  const auto basis = hom_basis(x, y);
  const auto d = basis.size();
  if (d == 0) return false;
  // Hom(X, Y) ≅ End(X) ≅ End(Y) whenever X ≅ Y.
  if (hom_dim(x, x) != d || hom_dim(y, y) != d) return false;
  const std::uint64_t p = x.field().p();
  std::uint64_t space = 1;
  for (std::size_t k = 0; k < d; ++k) {
    space *= p;
    if (space > limits.iso_search_cap) {
      throw CapExceeded("isomorphism search space " + std::to_string(p) + "^" + std::to_string(d) +
                        " exceeds the cap of " + std::to_string(limits.iso_search_cap));
    }
  }
  std::vector<Scalar> coeffs(d, 0);
  for (;;) {
    // odometer increment; the all-zero vector is skipped
    std::size_t k = 0;
    while (k < d && ++coeffs[k] == p) coeffs[k++] = 0;
    if (k == d) return false;
    const Morphism g = linear_combination(basis, coeffs);
    bool iso = true;
    for (const auto& c : g.components) {
      if (c.rows() > 0 && !is_invertible(c)) {
        iso = false;
        break;
      }
    }
    if (iso) return true;
  }
}

Submodule trace_of_family(std::span<const Representation> family, const Representation& x) {
  std::vector<Matrix> bases;
  for (auto d : x.dims()) bases.push_back(empty_columns(x.field(), d));
  for (const auto& member : family) {
    for (const auto& g : hom_basis(member, x)) {
      for (std::size_t v = 0; v < bases.size(); ++v) bases[v] = bases[v].hconcat(g.components[v]);
    }
  }
  return submodule_from_subspaces(x, bases);
}

Submodule reject_of_family(std::span<const Representation> family, const Representation& x) {
  const auto n = x.dims().size();
  std::vector<Matrix> stacked;
  for (std::size_t v = 0; v < n; ++v) stacked.emplace_back(x.field(), 0, x.dim(v));
  for (const auto& member : family) {
    for (const auto& g : hom_basis(x, member)) {
      for (std::size_t v = 0; v < n; ++v) stacked[v] = stacked[v].vconcat(g.components[v]);
    }
  }
  std::vector<Matrix> bases;
  for (const auto& s : stacked) bases.push_back(kernel_matrix(s));
  return submodule_from_subspaces(x, bases);
}

RadicalTop radical_and_top(const Representation& x) {
  const auto& q = x.algebra()->quiver();
  std::vector<Matrix> bases;
  for (auto d : x.dims()) bases.push_back(empty_columns(x.field(), d));
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto t = q.arrows[a].target;
    bases[t] = bases[t].hconcat(x.action(a));
  }
  Submodule rad = submodule_from_subspaces(x, bases);
  QuotientModule top = quotient_by(x, rad);
  return {std::move(rad), std::move(top)};
}

ProjectiveCover projective_cover(const Representation& x) {
  if (x.is_zero()) throw InvalidInput("projective_cover of the zero module");
  const auto rt = radical_and_top(x);
  std::vector<Morphism> maps;
  std::vector<Representation> summands;
  std::vector<std::size_t> tops;
  for (std::size_t v = 0; v < x.dims().size(); ++v) {
    // Columns of the right inverse lift the standard basis of top_v.
    const Matrix lifts = right_inverse(rt.top.projection.components[v]);
    for (std::size_t c = 0; c < lifts.cols(); ++c) {
      maps.push_back(map_from_projective(x, v, lifts.column(c)));
      summands.push_back(maps.back().source);
      tops.push_back(v);
    }
  }
  Representation p0 = direct_sum(x.algebra(), summands);
  return {sum_of_maps(p0, maps), std::move(tops)};
}

std::vector<Matrix> all_subspaces(const Field& f, std::size_t n) {
  // Enumerate reduced row echelon matrices: choose pivot columns, then the
  // free entries right of each pivot in non-pivot columns.
  std::vector<Matrix> out;
  const Scalar p = f.p();
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::size_t> pivots(k);
    for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
    for (;;) {
      std::vector<std::pair<std::size_t, std::size_t>> free_cells;
      std::vector<bool> is_pivot(n, false);
      for (auto c : pivots) is_pivot[c] = true;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = pivots[r] + 1; c < n; ++c)
          if (!is_pivot[c]) free_cells.emplace_back(r, c);
      std::vector<Scalar> values(free_cells.size(), 0);
      for (;;) {
        Matrix rows(f, k, n);
        for (std::size_t r = 0; r < k; ++r) rows.set(r, pivots[r], 1);
        for (std::size_t i = 0; i < free_cells.size(); ++i) rows.set(free_cells[i].first, free_cells[i].second, values[i]);
        out.push_back(rows.transpose());
        std::size_t i = 0;
        while (i < values.size() && ++values[i] == p) values[i++] = 0;
        if (i == values.size()) break;
      }
      // next pivot combination
      if (k == 0) break;
      std::size_t i = k;
      while (i > 0 && pivots[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++pivots[i - 1];
      for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
  }
  return out;
}

std::string subspace_key(const std::vector<Matrix>& bases) {
  std::string key;
  for (const auto& b : bases) {
    key += std::to_string(b.rows()) + 'x' + std::to_string(b.cols()) + ':';
    for (auto e : b.entries()) {
      key += std::to_string(e);
      key += ',';
    }
    key += '|';
  }
  return key;
}

std::vector<Submodule> submodules_of(const Representation& x, const Limits& limits) {
  if (x.total_dim() > limits.submodule_dim_cap) {
    throw CapExceeded("submodule enumeration: total dimension " + std::to_string(x.total_dim()) +
                      " exceeds the cap of " + std::to_string(limits.submodule_dim_cap));
  }
  const auto& q = x.algebra()->quiver();
  const auto n = q.vertex_count();
  std::vector<std::vector<Matrix>> choices;
  for (std::size_t v = 0; v < n; ++v) choices.push_back(all_subspaces(x.field(), x.dim(v)));

  auto stable = [&](std::size_t a, const std::vector<Matrix>& chosen) {
    const auto s = q.arrows[a].source;
    const auto t = q.arrows[a].target;
    const Matrix img = x.action(a) * chosen[s];
    return rank(chosen[t].hconcat(img)) == chosen[t].cols();
  };

  std::vector<std::vector<Matrix>> found;
  std::vector<Matrix> chosen(n);
  auto recurse = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      found.push_back(chosen);
      return;
    }
    for (const auto& sub : choices[v]) {
      chosen[v] = sub;
      bool ok = true;
      for (std::size_t a = 0; a < q.arrows.size() && ok; ++a) {
        const auto s = q.arrows[a].source;
        const auto t = q.arrows[a].target;
        if (std::max(s, t) == v) ok = stable(a, chosen);
      }
      if (ok) self(self, v + 1);
    }
  };
  recurse(recurse, 0);

  std::vector<std::pair<std::pair<std::size_t, std::string>, std::vector<Matrix>>> keyed;
  for (auto& f : found) {
    std::size_t dim = 0;
    for (const auto& b : f) dim += b.cols();
    keyed.push_back({{dim, subspace_key(f)}, std::move(f)});
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Submodule> out;
  out.reserve(keyed.size());
  for (const auto& [key, bases] : keyed) out.push_back(submodule_from_subspaces(x, bases));
  return out;
}

Representation dualize(const Representation& x) {
  const auto op = opposite_algebra(x.algebra());
  std::vector<Matrix> action;
  for (const auto& m : x.actions()) action.push_back(m.transpose());
  return Representation(op, x.dims(), std::move(action));
}

Morphism dualize(const Morphism& f) {
  Morphism d{dualize(f.target), dualize(f.source), {}};
  for (const auto& c : f.components) d.components.push_back(c.transpose());
  return d;
}

Representation rehome(const Representation& x, const AlgebraPtr& alg) {
  if (!same_algebra(x.algebra(), alg)) throw InvalidInput("rehome: algebras differ");
  return Representation(alg, x.dims(), x.actions());
}

}  // namespace ietilt
