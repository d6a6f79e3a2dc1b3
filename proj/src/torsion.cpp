#include "ietilt/torsion.hpp"

#include "ietilt/error.hpp"

namespace ietilt {

TorsionTheory::TorsionTheory(std::shared_ptr<const TauTheory> tau) : tau_(std::move(tau)) {
  const auto& cat = catalog();
  for (const auto& pair : tau_->enumerate(Side::plus)) {
    const IndexSet subcat = closure(pair.module, Closure::fac);
    if (!is_torsion_class(subcat)) {
      throw ConsistencyError("Fac(" + cat.labels(pair.module) + ") fails the torsion-class test; the catalog is incomplete");
    }
    if (torsion_index_.contains(subcat)) {
      throw ConsistencyError("two support tau-tilting modules generate the torsion class " + cat.labels(subcat));
    }
    torsion_index_[subcat] = torsion_.size();
    torsion_.push_back({subcat, ClassKind::torsion, pair});
  }
  for (const auto& pair : tau_->enumerate(Side::minus)) {
    const IndexSet subcat = closure(pair.module, Closure::sub);
    if (!is_torsionfree_class(subcat)) {
      throw ConsistencyError("Sub(" + cat.labels(pair.module) +
                             ") fails the torsion-free-class test; the catalog is incomplete");
    }
    if (torsionfree_index_.contains(subcat)) {
      throw ConsistencyError("two support tau^- -tilting modules cogenerate the torsion-free class " + cat.labels(subcat));
    }
    torsionfree_index_[subcat] = torsionfree_.size();
    torsionfree_.push_back({subcat, ClassKind::torsionfree, pair});
  }
}

bool TorsionTheory::in_fac(IndexSet m, std::size_t x) const {
  const auto& cat = catalog();
  const auto family = cat.modules(m);
  return trace_of_family(family, cat.module(x)).module.total_dim() == cat.module(x).total_dim();
}

bool TorsionTheory::in_sub(IndexSet n, std::size_t x) const {
  const auto& cat = catalog();
  const auto family = cat.modules(n);
  return reject_of_family(family, cat.module(x)).module.is_zero();
}

IndexSet TorsionTheory::closure(IndexSet m, Closure kind) const {
  auto& cache = kind == Closure::fac ? fac_cache_ : sub_cache_;
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  IndexSet out;
  for (std::size_t x = 0; x < catalog().size(); ++x) {
    if (kind == Closure::fac ? in_fac(m, x) : in_sub(m, x)) out.insert(x);
  }
  std::lock_guard lock(cache_mutex_);
  cache[m] = out;
  return out;
}

bool TorsionTheory::is_torsion_class(IndexSet s) const {
  if (closure(s, Closure::fac) != s) return false;
  // Quotient-closed S is extension-closed iff Y / t_S(Y) receives no map from S.
  const auto& cat = catalog();
  const auto family = cat.modules(s);
  for (std::size_t y = 0; y < cat.size(); ++y) {
    const auto t = trace_of_family(family, cat.module(y));
    const auto q = quotient_by(cat.module(y), t);
    for (const auto& member : family)
      if (hom_dim(member, q.module) != 0) return false;
  }
  return true;
}

bool TorsionTheory::is_torsionfree_class(IndexSet s) const {
  if (closure(s, Closure::sub) != s) return false;
  const auto& cat = catalog();
  const auto family = cat.modules(s);
  for (std::size_t y = 0; y < cat.size(); ++y) {
    const auto r = reject_of_family(family, cat.module(y));
    for (const auto& member : family)
      if (hom_dim(r.module, member) != 0) return false;
  }
  return true;
}

const TorsionClassRecord* TorsionTheory::find_class(IndexSet subcat, ClassKind kind) const {
  const auto& index = kind == ClassKind::torsion ? torsion_index_ : torsionfree_index_;
  auto it = index.find(subcat);
  if (it == index.end()) return nullptr;
  return &classes(kind)[it->second];
}

const TorsionClassRecord& TorsionTheory::smallest_closure(IndexSet c, ClassKind kind) const {
  IndexSet meet = catalog().all();
  bool any = false;
  for (const auto& rec : classes(kind)) {
    if (c.subset_of(rec.subcat)) {
      meet = meet & rec.subcat;
      any = true;
    }
  }
  const TorsionClassRecord* rec = any ? find_class(meet, kind) : nullptr;
  if (!rec) {
    throw ConsistencyError("the meet of the classes containing " + catalog().labels(c) +
                           " is not an enumerated class; the catalog is incomplete");
  }
  return *rec;
}

const std::vector<std::vector<TorsionTheory::Extension>>& TorsionTheory::extensions() const {
  std::call_once(extensions_once_, [&] {
    const auto& cat = catalog();
    extensions_.resize(cat.size());
    for (std::size_t x = 0; x < cat.size(); ++x) {
      const auto& module = cat.module(x);
      for (const auto& a : submodules_of(module, cat.limits())) {
        const auto d = a.module.total_dim();
        if (d == 0 || d == module.total_dim()) continue;
        const auto q = quotient_by(module, a);
        extensions_[x].push_back({support_set(decompose(a.module, cat)), support_set(decompose(q.module, cat))});
      }
    }
  });
  return extensions_;
}

IndexSet TorsionTheory::filt_closure_oracle(IndexSet c, ClassKind kind) const {
  const auto& ext = extensions();
  IndexSet current = c;
  for (;;) {
    IndexSet next = closure(current, kind == ClassKind::torsion ? Closure::fac : Closure::sub);
    for (std::size_t x = 0; x < catalog().size(); ++x) {
      if (next.contains(x)) continue;
      for (const auto& e : ext[x]) {
        if (e.sub.subset_of(next) && e.quotient.subset_of(next)) {
          next.insert(x);
          break;
        }
      }
    }
    if (next == current) return current;
    current = next;
  }
}

Submodule TorsionTheory::torsion_radical(const TorsionClassRecord& t, const Representation& x) const {
  if (t.kind != ClassKind::torsion) throw InvalidInput("torsion_radical needs a torsion class");
  const auto family = catalog().modules(t.subcat);
  return trace_of_family(family, x);
}

CanonicalSES TorsionTheory::canonical_ses(IndexSet m, IndexSet n, CanonicalSES::For which) const {
  const auto& cat = catalog();
  Representation middle = which == CanonicalSES::For::m ? cat.sum(m) : cat.sum(n);
  Submodule part = which == CanonicalSES::For::m ? reject_of_family(cat.modules(n), middle)
                                                 : trace_of_family(cat.modules(m), middle);
  QuotientModule rest = quotient_by(middle, part);
  CanonicalSES ses{which, std::move(middle), std::move(part), std::move(rest), {}, {}};
  for (std::size_t v = 0; v < ses.middle.dims().size(); ++v) {
    if (rank(ses.torsion_part.inclusion.components[v]) != ses.torsion_part.module.dim(v) ||
        rank(ses.free_part.projection.components[v]) != ses.free_part.module.dim(v) ||
        ses.torsion_part.module.dim(v) + ses.free_part.module.dim(v) != ses.middle.dim(v)) {
      throw ConsistencyError("canonical sequence is not exact");
    }
  }
  ses.torsion_summands = decompose(ses.torsion_part.module, cat);
  ses.free_summands = decompose(ses.free_part.module, cat);
  return ses;
}

IndexSet TorsionTheory::ext_extremes(IndexSet c, ExtSide side) const {
  const auto members = c.members();
  IndexSet out;
  if (side == ExtSide::projective) {
    for (auto x : members) {
      bool ok = true;
      for (auto y : members) ok = ok && tau_->ext1(x, y) == 0;
      if (ok) out.insert(x);
    }
    return out;
  }
  // Ext¹_Λ(Y, X) = Ext¹_Λop(DX, DY)
  const auto& cat = catalog();
  std::vector<Representation> duals;
  for (auto x : members) duals.push_back(dualize(cat.module(x)));
  for (std::size_t a = 0; a < members.size(); ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < members.size() && ok; ++b) ok = ext1_dim(duals[a], duals[b]) == 0;
    if (ok) out.insert(members[a]);
  }
  return out;
}

IndexSet TorsionTheory::progenerator(IndexSet c, ExtSide side) const {
  const IndexSet direct = ext_extremes(c, side);
  const IndexSet m = smallest_closure(c, ClassKind::torsion).generator.module;
  const IndexSet n = smallest_closure(c, ClassKind::torsionfree).generator.module;
  const bool proj = side == ExtSide::projective;
  const auto ses = canonical_ses(m, n, proj ? CanonicalSES::For::m : CanonicalSES::For::n);
  const IndexSet via_ses = support_set(proj ? ses.free_summands : ses.torsion_summands);
  if (via_ses != direct) {
    const auto& cat = catalog();
    throw ConsistencyError(std::string(proj ? "Ext-progenerator" : "Ext-injective cogenerator") + " of " +
                           cat.labels(c) + ": Ext-vanishing gives " + cat.labels(direct) +
                           " but the canonical sequence gives " + cat.labels(via_ses));
  }
  return direct;
}

}  // namespace ietilt
