#include "ietilt/tautheory.hpp"

#include <algorithm>

#include "ietilt/error.hpp"

namespace ietilt {

namespace {

std::vector<std::vector<std::size_t>> block_offsets(const BoundQuiverAlgebra& alg, const std::vector<std::size_t>& tops) {
  const auto n = alg.vertex_count();
  std::vector<std::vector<std::size_t>> off(tops.size(), std::vector<std::size_t>(n, 0));
  std::vector<std::size_t> running(n, 0);
  for (std::size_t b = 0; b < tops.size(); ++b) {
    for (std::size_t v = 0; v < n; ++v) {
      off[b][v] = running[v];
      running[v] += alg.paths(tops[b], v).size();
    }
  }
  return off;
}

}  // namespace

std::size_t ext1_dim(const Representation& a, const Representation& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const auto cover = projective_cover(a);
  const auto parts = morphism_parts(cover.cover);
  const Submodule& k = parts.kernel;
  if (k.module.is_zero()) return 0;
  // Restrict each map P0 -> B along K -> P0 and measure the span of the results.
  std::vector<Vector> restricted;
  for (const auto& g : hom_basis(cover.cover.source, b)) {
    const Morphism r = compose(g, k.inclusion);
    Vector flat;
    for (const auto& c : r.components) flat.insert(flat.end(), c.entries().begin(), c.entries().end());
    restricted.push_back(std::move(flat));
  }
  std::size_t image = 0;
  if (!restricted.empty()) image = rank(Matrix::from_rows(a.field(), restricted, restricted.front().size()));
  return hom_dim(k.module, b) - image;
}

Representation tau(const Representation& x) {
  const auto& alg = x.algebra();
  if (x.is_zero()) return Representation::zero(alg);
  const auto op = opposite_algebra(alg);

  // Minimal projective presentation P1 -> P0 -> X -> 0.
  const auto c0 = projective_cover(x);
  const auto parts0 = morphism_parts(c0.cover);
  const Submodule& k = parts0.kernel;
  if (k.module.is_zero()) return Representation::zero(alg);
  const auto c1 = projective_cover(k.module);
  const Morphism d = compose(k.inclusion, c1.cover);

  const auto& tops0 = c0.tops;
  const auto& tops1 = c1.tops;
  const auto off0 = block_offsets(*alg, tops0);
  const auto off1 = block_offsets(*alg, tops1);

  // Component P_{j} -> P_{i} of d is left multiplication by an element of
  // e_i Λ e_j; read it off the image of the trivial path e_j.
  // Applying Hom(-, Λ) turns it into Λe_i -> Λe_j, which over the opposite
  // algebra is the map of projectives P^op_i -> P^op_j sending e_i to the
  // reversed element.
  std::vector<Representation> q1_parts;
  for (auto j : tops1) q1_parts.push_back(standard_module(op, ModuleKind::projective, j));
  const Representation q1 = direct_sum(op, q1_parts);
  std::vector<Representation> q0_parts;
  std::vector<Morphism> maps;
  for (std::size_t a = 0; a < tops0.size(); ++a) {
    const auto i = tops0[a];
    Vector image(q1.dim(i), 0);
    std::size_t op_offset = 0;
    for (std::size_t b = 0; b < tops1.size(); ++b) {
      const auto j = tops1[b];
      const auto& paths = alg->paths(i, j);
      const Vector column = d.components[j].column(off1[b][j]);  // trivial path is first in paths(j, j)
      for (std::size_t w = 0; w < paths.size(); ++w) {
        const Scalar coeff = column[off0[a][j] + w];
        if (coeff == 0) continue;
        const auto rev = op->path_index(reverse_path(paths[w]));
        image[op_offset + *rev] = coeff;
      }
      op_offset += op->paths(j, i).size();
    }
    maps.push_back(map_from_projective(q1, i, image));
    q0_parts.push_back(maps.back().source);
  }
  const Representation q0 = direct_sum(op, q0_parts);
  const Morphism transpose_map = sum_of_maps(q0, maps);
  const Representation tr = morphism_parts(transpose_map).cokernel.module;
  return rehome(dualize(tr), alg);
}

Representation tau_minus(const Representation& x) {
  return rehome(dualize(tau(dualize(x))), x.algebra());
}

IndexSet supp_of(const Catalog& cat, IndexSet parts) { return cat.support(parts); }

TauTheory::TauTheory(std::shared_ptr<const Catalog> cat) : cat_(std::move(cat)) {
  const auto n = cat_->size();
  for (std::size_t i = 0; i < n; ++i) {
    tau_.push_back(tau(cat_->module(i)));
    tau_minus_.push_back(tau_minus(cat_->module(i)));
  }
  hom_to_tau_.assign(n * n, 0);
  hom_from_tau_minus_.assign(n * n, 0);
  ext1_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      hom_to_tau_[i * n + j] = hom_dim(cat_->module(i), tau_[j]);
      hom_from_tau_minus_[i * n + j] = hom_dim(tau_minus_[i], cat_->module(j));
      ext1_[i * n + j] = ext1_dim(cat_->module(i), cat_->module(j));
    }
  }
  plus_ = search(Side::plus);
  minus_ = search(Side::minus);
}

bool TauTheory::compatible(std::size_t i, std::size_t j, Side side) const {
  const auto n = cat_->size();
  if (side == Side::plus) return hom_to_tau_[i * n + j] == 0 && hom_to_tau_[j * n + i] == 0;
  return hom_from_tau_minus_[i * n + j] == 0 && hom_from_tau_minus_[j * n + i] == 0;
}

bool TauTheory::is_tau_rigid(IndexSet parts, Side side) const {
  const auto m = parts.members();
  for (auto i : m)
    for (auto j : m)
      if (!compatible(i, j, side)) return false;
  return true;
}

std::optional<STTPair> TauTheory::is_support_tau_tilting(IndexSet parts, Side side) const {
  if (!is_tau_rigid(parts, side)) return std::nullopt;
  const IndexSet support = supp(parts);
  if (parts.size() != support.size()) return std::nullopt;
  const auto nv = cat_->algebra()->vertex_count();
  return STTPair{parts, IndexSet::full(nv) - support, side, support};
}

bool stt_less(const STTPair& a, const STTPair& b) {
  if (a.support != b.support) return a.support < b.support;
  return a.module < b.module;
}

std::vector<STTPair> TauTheory::search(Side side) const {
  const auto n = cat_->size();
  std::vector<STTPair> out;
  // Cliques of the pairwise-compatibility graph among self-rigid entries.
  std::vector<std::size_t> rigid;
  for (std::size_t i = 0; i < n; ++i)
    if (compatible(i, i, side)) rigid.push_back(i);
  IndexSet current;
  auto grow = [&](auto&& self, std::size_t from) -> void {
    if (auto pair = is_support_tau_tilting(current, side)) out.push_back(*pair);
    for (std::size_t k = from; k < rigid.size(); ++k) {
      const auto i = rigid[k];
      bool ok = true;
      for (auto j : current.members()) {
        if (!compatible(i, j, side)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      current.insert(i);
      self(self, k + 1);
      current.erase(i);
    }
  };
  grow(grow, 0);
  std::sort(out.begin(), out.end(), stt_less);
  return out;
}

}  // namespace ietilt
