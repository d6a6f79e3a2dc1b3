#include "ietilt/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

#include "ietilt/error.hpp"
#include "json.hpp"

namespace ietilt {

using nlohmann::json;

namespace {

const json& require(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  return obj.at(key);
}

std::string string_at(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + ": expected a string");
  return v.get<std::string>();
}

const json& array_at(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array");
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

AlgebraPtr parse_algebra_json(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports "at line L, column C" inside what().
    throw ParseError(source + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError(source + ": top level must be an object");

  std::vector<std::string> vertices;
  const auto& vs = array_at(require(doc, "vertices", source), source + ": vertices");
  for (std::size_t i = 0; i < vs.size(); ++i) vertices.push_back(string_at(vs[i], source + ": vertices[" + std::to_string(i) + "]"));

  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  const auto& as = array_at(require(doc, "arrows", source), source + ": arrows");
  for (std::size_t i = 0; i < as.size(); ++i) {
    const auto where = source + ": arrows[" + std::to_string(i) + "]";
    arrows.emplace_back(string_at(require(as[i], "name", where), where + ".name"),
                        string_at(require(as[i], "from", where), where + ".from"),
                        string_at(require(as[i], "to", where), where + ".to"));
  }

  std::vector<std::vector<std::string>> relations;
  if (doc.contains("relations")) {
    const auto& rs = array_at(doc.at("relations"), source + ": relations");
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const auto where = source + ": relations[" + std::to_string(i) + "]";
      std::vector<std::string> rel;
      for (const auto& a : array_at(rs[i], where)) rel.push_back(string_at(a, where));
      relations.push_back(std::move(rel));
    }
  }

  Scalar p = 2;
  if (doc.contains("field")) {
    const auto& f = require(doc.at("field"), "p", source + ": field");
    if (!f.is_number_unsigned()) throw ParseError(source + ": field.p: expected a positive integer");
    p = f.get<Scalar>();
  }
  try {
    return make_algebra(vertices, arrows, relations, p);
  } catch (const InvalidInput& e) {
    throw ParseError(source + ": " + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AlgebraPtr parse_algebra_file(const std::string& path) { return parse_algebra_json(read_text_file(path), path); }

AlgebraPtr with_field(const AlgebraPtr& alg, Scalar p) {
  if (alg->field().p() == p) return alg;
  return build_algebra(alg->quiver(), alg->relations(), Field(p));
}

Multiset parse_module_expr(const std::string& expr, const Catalog& cat) {
  Multiset out;
  std::stringstream ss(expr);
  std::string term;
  bool any = false;
  while (std::getline(ss, term, '+')) {
    any = true;
    term = trim(term);
    if (term.empty()) throw InvalidInput("empty summand in module expression '" + expr + "'");
    if (term == "0") continue;
    const auto idx = cat.find(term);
    if (!idx) throw InvalidInput("unknown label '" + term + "' in module expression '" + expr + "'");
    out.push_back(*idx);
  }
  if (!any) throw InvalidInput("empty module expression");
  std::sort(out.begin(), out.end());
  return out;
}

Multiset display_order(const Catalog& cat, Multiset m) {
  const auto& alg = *cat.algebra();
  auto key = [&](std::size_t i) {
    const auto& label = cat.label(i);
    static const std::string kinds = "SPI";
    if (!label.empty()) {
      const auto kind = kinds.find(label[0]);
      if (kind != std::string::npos) {
        if (auto v = alg.quiver().find_vertex(label.substr(1))) return std::tuple{kind, *v, i};
      }
    }
    return std::tuple{kinds.size(), std::size_t{0}, i};
  };
  std::stable_sort(m.begin(), m.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  return m;
}

std::string render(const Catalog& cat, const Multiset& m, LabelStyle style) {
  if (m.empty()) return "0";
  if (style.paper_names) {
    const IndexSet s = IndexSet::from(m);
    if (s.size() == m.size()) {
      if (s == cat.projectives()) return "Λ";
      if (s == cat.injectives()) return "DΛ";
    }
  }
  std::string out;
  for (auto i : display_order(cat, m)) {
    if (!out.empty() && !style.paper_names) out += "+";
    out += cat.label(i);
  }
  return out;
}

std::string render(const Catalog& cat, IndexSet s, LabelStyle style) { return render(cat, s.members(), style); }

std::string render_subcat(const Catalog& cat, IndexSet s) {
  if (s.empty()) return "0";
  if (s == cat.all()) return "mod";
  std::string out = "add{";
  bool first = true;
  for (auto i : display_order(cat, s.members())) {
    if (!first) out += ",";
    out += cat.label(i);
    first = false;
  }
  return out + "}";
}

std::vector<std::string> label_list(const Catalog& cat, IndexSet s) {
  std::vector<std::string> out;
  for (auto i : s.members()) out.push_back(cat.label(i));
  return out;
}

std::vector<std::string> vertex_list(const BoundQuiverAlgebra& alg, IndexSet vertices) {
  std::vector<std::string> out;
  for (auto v : vertices.members()) out.push_back(alg.vertex_label(v));
  return out;
}

}  // namespace ietilt
