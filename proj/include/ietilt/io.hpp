#pragma once

// Algebra files, module expressions and label rendering.

#include <string>
#include <vector>

#include "ietilt/algebra.hpp"
#include "ietilt/catalog.hpp"

namespace ietilt {

/// {"vertices": [...], "arrows": [{"name", "from", "to"}], "relations": [[...]], "field": {"p"}}.
/// Throws ParseError naming the line or field at fault; InvalidInput from the
/// algebra builder is rethrown as ParseError with `source` attached.
AlgebraPtr parse_algebra_json(const std::string& text, const std::string& source = "<input>");
AlgebraPtr parse_algebra_file(const std::string& path);
std::string read_text_file(const std::string& path);

/// Same quiver and relations over GF(p).
AlgebraPtr with_field(const AlgebraPtr& alg, Scalar p);

/// "S1+S3+P1" -> catalog indices, sorted; "0" and "+0" terms are the zero module.
/// Throws InvalidInput for unknown labels or empty terms.
Multiset parse_module_expr(const std::string& expr, const Catalog& cat);

struct LabelStyle {
  /// Concatenate without separators and write Λ / DΛ for the regular and
  /// dual-regular modules.
  bool paper_names = false;
};

/// Reading order: simples, then projectives, then injectives by vertex, then
/// anything else in catalog order.
Multiset display_order(const Catalog& cat, Multiset m);
std::string render(const Catalog& cat, const Multiset& m, LabelStyle style = {});
std::string render(const Catalog& cat, IndexSet s, LabelStyle style = {});
/// add{S1,P1}, or 0 and mod for the extremes.
std::string render_subcat(const Catalog& cat, IndexSet s);

/// Labels in canonical catalog order.
std::vector<std::string> label_list(const Catalog& cat, IndexSet s);
std::vector<std::string> vertex_list(const BoundQuiverAlgebra& alg, IndexSet vertices);

}  // namespace ietilt
