#include "ietilt/ieclosed.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "ietilt/error.hpp"

namespace ietilt {

namespace {

const STTPair* find_stt(const TauTheory& tt, IndexSet module, Side side) {
  for (const auto& p : tt.enumerate(side))
    if (p.module == module) return &p;
  return nullptr;
}

bool twin_less(const TwinPair& a, const TwinPair& b) {
  if (a.M.support != b.M.support) return a.M.support < b.M.support;
  if (a.M.module != b.M.module) return a.M.module < b.M.module;
  return a.N.module < b.N.module;
}

// Every quotient Y/U, with Y = family^bound and U generated by the family,
// is cogenerated by `cogen`. Breadth-first over U: each step adds the image
// of one map E -> Y from a family member.
bool cokernels_cogenerated(const AlgebraPtr& alg, const std::vector<Representation>& family,
                           const std::vector<Representation>& cogen, const ClassifyOptions& opts) {
  if (family.empty()) return true;
  std::vector<Representation> parts;
  for (std::size_t k = 0; k < opts.bound; ++k) parts.insert(parts.end(), family.begin(), family.end());
  const Representation y = direct_sum(alg, parts);
  const Field& field = y.field();
  const auto nv = y.dims().size();

  if (!reject_of_family(cogen, y).module.is_zero()) return false;
  std::deque<Submodule> queue{zero_submodule(y)};
  std::unordered_set<std::string> seen{subspace_key(subspaces_of(queue.front()))};
  while (!queue.empty()) {
    const Submodule u = std::move(queue.front());
    queue.pop_front();
    const auto q = quotient_by(y, u);
    if (q.module.is_zero()) continue;
    std::vector<Matrix> lift;
    for (std::size_t v = 0; v < nv; ++v) lift.push_back(right_inverse(q.projection.components[v]));

    for (const auto& e : family) {
      // Only maps E -> Y/U that lift to E -> Y give images of maps into Y.
      std::vector<Morphism> basis;
      std::vector<Vector> flat;
      for (const auto& g : hom_basis(e, y)) {
        Morphism h = compose(q.projection, g);
        Vector row;
        for (const auto& m : h.components) row.insert(row.end(), m.entries().begin(), m.entries().end());
        flat.push_back(row);
        if (rank(Matrix::from_rows(field, flat, row.size())) == basis.size() + 1) {
          basis.push_back(std::move(h));
        } else {
          flat.pop_back();
        }
      }
      const auto d = basis.size();
      if (d == 0) continue;
      // Nonzero coefficient vectors whose first nonzero entry is 1.
      std::vector<Scalar> c(d, 0);
      for (std::size_t lead = 0; lead < d; ++lead) {
        std::fill(c.begin(), c.end(), 0);
        c[lead] = 1;
        for (;;) {
          const Morphism f = linear_combination(basis, c);
          std::vector<Matrix> bases;
          for (std::size_t v = 0; v < nv; ++v) bases.push_back(u.inclusion.components[v].hconcat(lift[v] * f.components[v]));
          Submodule next = submodule_from_subspaces(y, bases);
          if (seen.insert(subspace_key(subspaces_of(next))).second) {
            if (!reject_of_family(cogen, quotient_by(y, next).module).module.is_zero()) return false;
            if (seen.size() > opts.state_cap) {
              throw CapExceeded("cokernel search visited more than " + std::to_string(opts.state_cap) + " submodules");
            }
            queue.push_back(std::move(next));
          }
          std::size_t k = lead + 1;
          while (k < d && c[k] == field.p() - 1) c[k++] = 0;
          if (k == d) break;
          ++c[k];
        }
      }
    }
  }
  return true;
}

}  // namespace

IEClosed::IEClosed(std::shared_ptr<const TorsionTheory> torsion) : torsion_(std::move(torsion)) {}

TwinPair IEClosed::make_twin(IndexSet m, IndexSet n) const {
  const auto& tt = torsion_->tau();
  const auto* pm = find_stt(tt, m, Side::plus);
  if (!pm) throw InvalidInput(catalog().labels(m) + " is not support tau-tilting");
  const auto* pn = find_stt(tt, n, Side::minus);
  if (!pn) throw InvalidInput(catalog().labels(n) + " is not support tau^- -tilting");
  return {*pm, *pn};
}

IndexSet IEClosed::phi(const TwinPair& t) const {
  return torsion_->closure(t.M.module, Closure::fac) & torsion_->closure(t.N.module, Closure::sub);
}

TwinPair IEClosed::psi(IndexSet c) const {
  return {torsion_->smallest_closure(c, ClassKind::torsion).generator,
          torsion_->smallest_closure(c, ClassKind::torsionfree).generator};
}

bool IEClosed::is_canonical(const TwinPair& t) const {
  const IndexSet fac = torsion_->closure(t.M.module, Closure::fac);
  const IndexSet sub = torsion_->closure(t.N.module, Closure::sub);
  const IndexSet c = fac & sub;
  const bool by_definition = fac == torsion_->smallest_closure(c, ClassKind::torsion).subcat &&
                             sub == torsion_->smallest_closure(c, ClassKind::torsionfree).subcat;

  const auto ses_m = torsion_->canonical_ses(t.M.module, t.N.module, CanonicalSES::For::m);
  const auto ses_n = torsion_->canonical_ses(t.M.module, t.N.module, CanonicalSES::For::n);
  const IndexSet p = support_set(ses_m.free_summands);
  const IndexSet i = support_set(ses_n.torsion_summands);
  const bool by_sequences = fac == torsion_->smallest_closure(p, ClassKind::torsion).subcat &&
                            sub == torsion_->smallest_closure(i, ClassKind::torsionfree).subcat;
  if (by_definition != by_sequences) {
    const auto& cat = catalog();
    throw ConsistencyError("canonicality tests disagree on (" + cat.labels(t.M.module) + ", " +
                           cat.labels(t.N.module) + ")");
  }
  return by_definition;
}

Canonicalization IEClosed::canonicalize_traced(const TwinPair& t) const {
  auto ses_m = torsion_->canonical_ses(t.M.module, t.N.module, CanonicalSES::For::m);
  auto ses_n = torsion_->canonical_ses(t.M.module, t.N.module, CanonicalSES::For::n);
  const IndexSet p = support_set(ses_m.free_summands);
  const IndexSet i = support_set(ses_n.torsion_summands);
  TwinPair out{torsion_->smallest_closure(p, ClassKind::torsion).generator,
               torsion_->smallest_closure(i, ClassKind::torsionfree).generator};
  if (phi(out) != phi(t)) {
    const auto& cat = catalog();
    throw ConsistencyError("canonicalization changed Fac M ∩ Sub N from " + cat.labels(phi(t)) + " to " +
                           cat.labels(phi(out)));
  }
  return {t, std::move(ses_m), std::move(ses_n), p, i, std::move(out)};
}

TwinPair IEClosed::canonicalize(const TwinPair& t) const { return canonicalize_traced(t).output; }

ExtPair IEClosed::ext_pair(const TwinPair& t) const {
  const TwinPair canon = is_canonical(t) ? t : canonicalize(t);
  const auto run = canonicalize_traced(canon);
  const ExtPair e{run.p_m, run.i_n};
  const IndexSet c = phi(canon);
  const IndexSet p = torsion_->progenerator(c, ExtSide::projective);
  const IndexSet i = torsion_->progenerator(c, ExtSide::injective);
  if (p != e.P || i != e.I) {
    const auto& cat = catalog();
    throw ConsistencyError("Ext-pair of " + cat.labels(c) + " is (" + cat.labels(e.P) + ", " + cat.labels(e.I) +
                           ") but Ext-vanishing gives (" + cat.labels(p) + ", " + cat.labels(i) + ")");
  }
  return e;
}

IndexSet IEClosed::phi_prime(const ExtPair& e) const {
  return torsion_->smallest_closure(e.P, ClassKind::torsion).subcat &
         torsion_->smallest_closure(e.I, ClassKind::torsionfree).subcat;
}

std::vector<TwinPair> IEClosed::twin_pairs() const {
  const auto& tt = torsion_->tau();
  std::vector<TwinPair> out;
  for (const auto& m : tt.enumerate(Side::plus))
    for (const auto& n : tt.enumerate(Side::minus))
      if (m.support == n.support) out.push_back({m, n});
  std::sort(out.begin(), out.end(), twin_less);
  return out;
}

const std::vector<IERecord>& IEClosed::enumerate_ie() const {
  std::call_once(ie_once_, [&] {
    const auto& cat = catalog();
    std::set<IndexSet> subcats;
    for (const auto& t : torsion_->classes(ClassKind::torsion))
      for (const auto& f : torsion_->classes(ClassKind::torsionfree)) subcats.insert(t.subcat & f.subcat);
    std::vector<IERecord> out;
    for (const IndexSet c : subcats) {
      IERecord rec;
      rec.subcat = c;
      rec.twin = psi(c);
      if (phi(rec.twin) != c) throw ConsistencyError("Φ(Ψ(C)) differs from C = " + cat.labels(c));
      if (!is_canonical(rec.twin)) throw ConsistencyError("Ψ(C) is not canonical for C = " + cat.labels(c));
      rec.extpair = ext_pair(rec.twin);
      if (phi_prime(rec.extpair) != c) throw ConsistencyError("Φ′(Ψ′(C)) differs from C = " + cat.labels(c));
      const IndexSet fac = torsion_->closure(rec.twin.M.module, Closure::fac);
      const IndexSet sub = torsion_->closure(rec.twin.N.module, Closure::sub);
      rec.flags.is_torsion = fac.subset_of(sub);
      rec.flags.is_torsionfree = sub.subset_of(fac);
      out.push_back(std::move(rec));
    }
    ie_ = std::move(out);
  });
  return ie_;
}

IEFlags IEClosed::classify(const IERecord& rec, const ClassifyOptions& opts) const {
  if (opts.bound == 0) throw InvalidInput("classification bound must be at least 1");
  const auto& cat = catalog();
  IEFlags flags;
  const IndexSet fac = torsion_->closure(rec.twin.M.module, Closure::fac);
  const IndexSet sub = torsion_->closure(rec.twin.N.module, Closure::sub);
  flags.is_torsion = fac.subset_of(sub);
  flags.is_torsionfree = sub.subset_of(fac);

  if (flags.is_torsion) {
    flags.is_ice = true;
  } else {
    flags.is_ice = cokernels_cogenerated(cat.algebra(), cat.modules(rec.subcat), cat.modules(rec.twin.N.module), opts);
  }
  if (flags.is_torsionfree) {
    flags.is_ike = true;
  } else {
    // Ker(C) ⊆ Fac M over Λ is Cok(DC) ⊆ Sub(DM) over the opposite algebra.
    std::vector<Representation> family;
    for (const auto& x : cat.modules(rec.subcat)) family.push_back(dualize(x));
    std::vector<Representation> cogen;
    for (const auto& x : cat.modules(rec.twin.M.module)) cogen.push_back(dualize(x));
    flags.is_ike = cokernels_cogenerated(opposite_algebra(cat.algebra()), family, cogen, opts);
  }
  return flags;
}

BijectionReport IEClosed::verify_bijections() const {
  const auto& cat = catalog();
  const auto& tt = torsion_->tau();
  BijectionReport report;
  const auto& records = enumerate_ie();
  report.ie_count = records.size();

  const auto twins = twin_pairs();
  report.twin_count = twins.size();
  std::vector<TwinPair> canonical;
  for (const auto& t : twins) {
    const auto name = "(" + cat.labels(t.M.module) + ", " + cat.labels(t.N.module) + ")";
    if (is_canonical(t)) {
      canonical.push_back(t);
      if (!(psi(phi(t)) == t)) report.violations.push_back("Ψ(Φ(t)) differs from t = " + name);
    } else {
      const auto c = canonicalize(t);
      if (!(psi(phi(t)) == c)) report.violations.push_back("Ψ(Φ(t)) differs from canonicalize(t) for t = " + name);
      if (!(canonicalize(c) == c)) report.violations.push_back("canonicalize is not idempotent at " + name);
    }
  }
  report.canonical_twin_count = canonical.size();

  std::set<std::pair<IndexSet, IndexSet>> ext_pairs;
  for (const auto& rec : records) {
    const auto name = cat.labels(rec.subcat);
    ext_pairs.insert({rec.extpair.P, rec.extpair.I});
    if (std::find(canonical.begin(), canonical.end(), rec.twin) == canonical.end())
      report.violations.push_back("Ψ(C) is not a canonical twin pair for C = " + name);
    if (phi(rec.twin) != rec.subcat) report.violations.push_back("Φ(Ψ(C)) differs from C = " + name);
    if (phi_prime(rec.extpair) != rec.subcat) report.violations.push_back("Φ′(Ψ′(C)) differs from C = " + name);
    if (rec.twin.M.support != rec.twin.N.support) report.violations.push_back("supp M differs from supp N for C = " + name);
    for (const IndexSet side : {rec.extpair.P, rec.extpair.I})
      for (auto a : side.members())
        for (auto b : side.members())
          if (tt.ext1(a, b) != 0) report.violations.push_back("Ext-pair member is not rigid for C = " + name);
  }
  report.ext_pair_count = ext_pairs.size();
  if (report.ie_count != report.canonical_twin_count || report.ie_count != report.ext_pair_count) {
    report.violations.push_back("counts differ: " + std::to_string(report.ie_count) + " IE-closed, " +
                                std::to_string(report.canonical_twin_count) + " canonical twins, " +
                                std::to_string(report.ext_pair_count) + " Ext-pairs");
  }
  return report;
}

}  // namespace ietilt
