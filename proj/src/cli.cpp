#include "ietilt/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "ietilt/error.hpp"
#include "ietilt/io.hpp"
#include "json.hpp"

#ifndef IETILT_DATA_DIR
#define IETILT_DATA_DIR "data"
#endif

namespace ietilt::cli {

using nlohmann::json;
namespace fs = std::filesystem;

Session make_session(AlgebraPtr alg, const std::optional<std::string>& catalog_json) {
  Session s;
  s.algebra = std::move(alg);
  s.catalog = std::make_shared<const Catalog>(catalog_json ? load_catalog(s.algebra, *catalog_json)
                                                           : interval_catalog(s.algebra));
  s.tau = std::make_shared<const TauTheory>(s.catalog);
  s.torsion = std::make_shared<const TorsionTheory>(s.tau);
  s.ie = std::make_shared<const IEClosed>(s.torsion);
  return s;
}

std::string default_data_dir() { return IETILT_DATA_DIR; }

namespace {

enum class Format { table, json, csv };

std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

void print_table(std::ostream& out, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  auto grow = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], display_width(r[c]));
  };
  grow(header);
  for (const auto& r : rows) grow(r);
  auto line = [&](const std::vector<std::string>& r) {
    std::string text;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c > 0) text += " | ";
      text += r[c];
      if (c + 1 < r.size()) text += std::string(width[c] - display_width(r[c]), ' ');
    }
    out << text << "\n";
  };
  line(header);
  std::string rule;
  for (std::size_t c = 0; c < width.size(); ++c) {
    if (c > 0) rule += "-+-";
    rule += std::string(width[c], '-');
  }
  out << rule << "\n";
  for (const auto& r : rows) line(r);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void print_csv(std::ostream& out, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "," : "") << csv_field(r[c]);
    out << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
}

void print_rows(std::ostream& out, Format f, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  if (f == Format::csv) {
    print_csv(out, header, rows);
  } else {
    print_table(out, header, rows);
  }
}

std::string vertex_set_text(const BoundQuiverAlgebra& alg, IndexSet v) {
  std::string out = "{";
  bool first = true;
  for (const auto& label : vertex_list(alg, v)) {
    out += (first ? "" : ",") + label;
    first = false;
  }
  return out + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json flags_json(const IEFlags& f) {
  json j;
  j["is_torsion"] = f.is_torsion;
  j["is_torsionfree"] = f.is_torsionfree;
  if (f.is_ice) j["is_ice"] = *f.is_ice;
  if (f.is_ike) j["is_ike"] = *f.is_ike;
  return j;
}

json record_json(const Catalog& cat, const IERecord& r) {
  json j;
  j["subcat"] = label_list(cat, r.subcat);
  j["twin"] = {{"M", label_list(cat, r.twin.M.module)}, {"N", label_list(cat, r.twin.N.module)}};
  j["ext_pair"] = {{"P", label_list(cat, r.extpair.P)}, {"I", label_list(cat, r.extpair.I)}};
  j["flags"] = flags_json(r.flags);
  return j;
}

// --- verify-paper -----------------------------------------------------------

IndexSet labels_to_set(const Catalog& cat, const json& labels) {
  IndexSet s;
  for (const auto& l : labels) s.insert(cat.index_of(l.get<std::string>()));
  return s;
}

Multiset labels_to_multiset(const Catalog& cat, const json& labels) {
  Multiset m;
  for (const auto& l : labels) m.push_back(cat.index_of(l.get<std::string>()));
  std::sort(m.begin(), m.end());
  return m;
}

IndexSet vertices_to_set(const BoundQuiverAlgebra& alg, const json& labels) {
  IndexSet s;
  for (const auto& l : labels) s.insert(alg.vertex_index(l.get<std::string>()));
  return s;
}

struct Row {
  IndexSet m;
  IndexSet n;
  ExtPair ext;
};

std::string row_text(const Catalog& cat, IndexSet m, IndexSet n, const ExtPair& e) {
  return "(" + render(cat, m) + ", " + render(cat, n) + ") | (" + render(cat, e.P) + ", " + render(cat, e.I) + ")";
}

void check_stt(const Session& s, const json& golden, Side side, const std::string& prefix, std::vector<CheckResult>& out) {
  const auto& cat = *s.catalog;
  std::map<IndexSet, std::set<IndexSet>> want;
  for (const auto& group : golden) {
    auto& bucket = want[vertices_to_set(*s.algebra, group.at("support"))];
    for (const auto& m : group.at("modules")) bucket.insert(labels_to_set(cat, m));
  }
  std::map<IndexSet, std::set<IndexSet>> got;
  std::size_t total = 0;
  for (const auto& p : s.tau->enumerate(side)) {
    got[p.support].insert(p.module);
    ++total;
  }
  CheckResult r{prefix + (side == Side::plus ? "support tau-tilting census" : "support tau^- -tilting census"), true, ""};
  std::set<IndexSet> supports;
  for (const auto& [k, v] : want) supports.insert(k);
  for (const auto& [k, v] : got) supports.insert(k);
  for (const auto& sup : supports) {
    const auto& w = want[sup];
    const auto& g = got[sup];
    if (w == g) continue;
    r.ok = false;
    std::string d = "support " + vertex_set_text(*s.algebra, sup) + ": expected";
    for (auto m : w) d += " " + render(cat, m);
    d += "; got";
    for (auto m : g) d += " " + render(cat, m);
    r.detail += (r.detail.empty() ? "" : "; ") + d;
  }
  if (r.ok) r.detail = std::to_string(total) + " modules in " + std::to_string(got.size()) + " support groups";
  out.push_back(r);
}

void check_ie_rows(const Session& s, const json& golden, bool complete, const std::string& prefix,
                   std::vector<CheckResult>& out) {
  const auto& cat = *s.catalog;
  std::map<IndexSet, Row> want;
  for (const auto& row : golden) {
    const IndexSet c = labels_to_set(cat, row.at("subcat"));
    want[c] = Row{labels_to_set(cat, row.at("twin").at("M")), labels_to_set(cat, row.at("twin").at("N")),
                  ExtPair{labels_to_set(cat, row.at("ext_pair").at("P")), labels_to_set(cat, row.at("ext_pair").at("I"))}};
  }
  std::map<IndexSet, const IERecord*> got;
  for (const auto& rec : s.ie->enumerate_ie()) got[rec.subcat] = &rec;

  CheckResult r{prefix + "IE-closed subcategories with twin pairs and Ext-pairs", true, ""};
  auto fail = [&](const std::string& d) {
    r.ok = false;
    r.detail += (r.detail.empty() ? "" : "; ") + d;
  };
  for (const auto& [c, row] : want) {
    auto it = got.find(c);
    if (it == got.end()) {
      fail("row " + render_subcat(cat, c) + " expected but not produced");
      continue;
    }
    const auto& rec = *it->second;
    if (rec.twin.M.module != row.m || rec.twin.N.module != row.n || !(rec.extpair == row.ext)) {
      fail("row " + render_subcat(cat, c) + ": expected " + row_text(cat, row.m, row.n, row.ext) +
           ", got " + row_text(cat, rec.twin.M.module, rec.twin.N.module, rec.extpair));
    }
  }
  if (complete) {
    for (const auto& [c, rec] : got)
      if (!want.contains(c)) fail("row " + render_subcat(cat, c) + " produced but not expected");
  }
  if (r.ok) r.detail = std::to_string(want.size()) + " rows match";
  out.push_back(r);
}

void check_count(const std::string& name, std::size_t want, std::size_t got, std::vector<CheckResult>& out) {
  out.push_back({name, want == got, "expected " + std::to_string(want) + ", got " + std::to_string(got)});
}

void check_canonicalize(const Session& s, const json& g, const std::string& prefix, std::vector<CheckResult>& out) {
  const auto& cat = *s.catalog;
  CheckResult r{prefix + "canonicalization example", true, ""};
  auto fail = [&](const std::string& d) {
    r.ok = false;
    r.detail += (r.detail.empty() ? "" : "; ") + d;
  };
  const TwinPair input = s.ie->make_twin(labels_to_set(cat, g.at("M")), labels_to_set(cat, g.at("N")));
  if (s.ie->is_canonical(input)) fail("input reported canonical");
  const auto run = s.ie->canonicalize_traced(input);
  auto cmp = [&](const char* key, const Multiset& got) {
    const Multiset want = labels_to_multiset(cat, g.at(key));
    if (want != got) fail(std::string(key) + ": expected " + render(cat, want) + ", got " + render(cat, got));
  };
  cmp("U_M", run.for_m.torsion_summands);
  cmp("P_M", run.for_m.free_summands);
  cmp("I_N", run.for_n.torsion_summands);
  cmp("V_N", run.for_n.free_summands);
  const IndexSet m = labels_to_set(cat, g.at("output").at("M"));
  const IndexSet n = labels_to_set(cat, g.at("output").at("N"));
  if (run.output.M.module != m || run.output.N.module != n) {
    fail("output: expected (" + render(cat, m) + ", " + render(cat, n) + "), got (" + render(cat, run.output.M.module) +
         ", " + render(cat, run.output.N.module) + ")");
  }
  if (r.ok) {
    r.detail = "0 -> " + render(cat, run.for_m.torsion_summands) + " -> M -> " + render(cat, run.for_m.free_summands) +
               " -> 0, 0 -> " + render(cat, run.for_n.torsion_summands) + " -> N -> " +
               render(cat, run.for_n.free_summands) + " -> 0, output (" + render(cat, m) + ", " + render(cat, n) + ")";
  }
  out.push_back(r);
}

void check_golden_file(const fs::path& file, const std::string& data_dir, std::optional<Scalar> p,
                       std::vector<CheckResult>& out) {
  const std::string stem = file.stem().string();
  const std::string prefix = stem + ": ";
  json g;
  try {
    g = json::parse(read_text_file(file.string()));
  } catch (const std::exception& e) {
    out.push_back({prefix + "golden file", false, e.what()});
    return;
  }
  try {
    AlgebraPtr alg = parse_algebra_file((fs::path(data_dir) / g.at("algebra").get<std::string>()).string());
    if (p) alg = with_field(alg, *p);
    const Session s = make_session(alg);
    if (g.contains("stt")) {
      check_stt(s, g.at("stt").at("plus"), Side::plus, prefix, out);
      check_stt(s, g.at("stt").at("minus"), Side::minus, prefix, out);
    }
    if (g.contains("torsion_count")) {
      check_count(prefix + "torsion classes", g.at("torsion_count").get<std::size_t>(),
                  s.torsion->classes(ClassKind::torsion).size(), out);
      check_count(prefix + "torsion-free classes", g.at("torsion_count").get<std::size_t>(),
                  s.torsion->classes(ClassKind::torsionfree).size(), out);
    }
    if (g.contains("twin_count")) {
      check_count(prefix + "twin pairs with equal support", g.at("twin_count").get<std::size_t>(), s.ie->twin_pairs().size(), out);
    }
    if (g.contains("ie_count")) {
      check_count(prefix + "IE-closed subcategories", g.at("ie_count").get<std::size_t>(), s.ie->enumerate_ie().size(), out);
    }
    if (g.contains("ie")) check_ie_rows(s, g.at("ie"), !g.contains("ie_count"), prefix, out);
    if (g.contains("canonicalize")) check_canonicalize(s, g.at("canonicalize"), prefix, out);
    const auto report = s.ie->verify_bijections();
    std::string detail = std::to_string(report.ie_count) + " IE-closed, " + std::to_string(report.canonical_twin_count) +
                         " canonical twins, " + std::to_string(report.ext_pair_count) + " Ext-pairs";
    for (const auto& v : report.violations) detail += "; " + v;
    out.push_back({prefix + "bijections and round trips", report.ok(), detail});
  } catch (const std::exception& e) {
    out.push_back({prefix + "pipeline", false, e.what()});
  }
}

// --- subcommands ------------------------------------------------------------

struct Options {
  std::string algebra_path;
  std::optional<std::string> catalog_path;
  std::optional<Scalar> p;
  Format format = Format::table;
  bool paper_names = false;
  std::size_t bound = 2;
  std::string data_dir;
  std::string golden_dir;
  bool minus = false;
  bool canonical_only = false;
  std::string m_expr;
  std::string n_expr;
};

Session open_session(const Options& o) {
  AlgebraPtr alg = parse_algebra_file(o.algebra_path);
  if (o.p) alg = with_field(alg, *o.p);
  std::optional<std::string> cat;
  if (o.catalog_path) cat = read_text_file(*o.catalog_path);
  return make_session(alg, cat);
}

int cmd_catalog(const Options& o, std::ostream& out) {
  const Session s = open_session(o);
  const auto& cat = *s.catalog;
  if (o.format == Format::json) {
    out << catalog_to_json(cat) << "\n";
    return 0;
  }
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    std::string dims;
    for (auto d : cat.module(i).dims()) dims += (dims.empty() ? "" : ",") + std::to_string(d);
    std::string kind;
    for (std::size_t v = 0; v < s.algebra->vertex_count(); ++v) {
      if (cat.projective_index(v) == i) kind += (kind.empty() ? "" : " ") + ("P" + s.algebra->vertex_label(v));
      if (cat.injective_index(v) == i) kind += (kind.empty() ? "" : " ") + ("I" + s.algebra->vertex_label(v));
    }
    rows.push_back({std::to_string(i), cat.label(i), "(" + dims + ")", vertex_set_text(*s.algebra, cat.support(i)), kind});
  }
  print_rows(out, o.format, {"index", "label", "dims", "support", "projective/injective"}, rows);
  return 0;
}

int cmd_stt(const Options& o, std::ostream& out) {
  const Session s = open_session(o);
  const auto& cat = *s.catalog;
  const Side side = o.minus ? Side::minus : Side::plus;
  const auto& pairs = s.tau->enumerate(side);
  if (o.format == Format::json) {
    json doc;
    doc["algebra"] = s.algebra->hash();
    doc["side"] = o.minus ? "minus" : "plus";
    doc["records"] = json::array();
    for (const auto& p : pairs) {
      doc["records"].push_back({{"support", vertex_list(*s.algebra, p.support)},
                                {"module", label_list(cat, p.module)},
                                {"complement", vertex_list(*s.algebra, p.complement)}});
    }
    out << doc.dump(2) << "\n";
    return 0;
  }
  const LabelStyle style{o.paper_names};
  std::vector<std::vector<std::string>> rows;
  for (const auto& p : pairs) {
    const std::string kind = o.minus ? "I" : "P";
    std::string comp;
    for (const auto& v : vertex_list(*s.algebra, p.complement)) comp += (comp.empty() ? "" : "+") + kind + v;
    rows.push_back({vertex_set_text(*s.algebra, p.support), render(cat, p.module, style), comp.empty() ? "0" : comp});
  }
  print_rows(out, o.format, {"support", o.minus ? "support tau^- -tilting" : "support tau-tilting", "complement"}, rows);
  if (o.format == Format::table) out << pairs.size() << " modules\n";
  return 0;
}

int cmd_twins(const Options& o, std::ostream& out) {
  const Session s = open_session(o);
  const auto& cat = *s.catalog;
  const LabelStyle style{o.paper_names};
  json records = json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& t : s.ie->twin_pairs()) {
    const bool canonical = s.ie->is_canonical(t);
    if (o.canonical_only && !canonical) continue;
    const IndexSet c = s.ie->phi(t);
    records.push_back({{"M", label_list(cat, t.M.module)},
                       {"N", label_list(cat, t.N.module)},
                       {"canonical", canonical},
                       {"subcat", label_list(cat, c)}});
    rows.push_back({vertex_set_text(*s.algebra, t.M.support), render(cat, t.M.module, style), render(cat, t.N.module, style),
                    yes_no(canonical), o.format == Format::csv ? render(cat, c) : render_subcat(cat, c)});
  }
  if (o.format == Format::json) {
    out << json{{"algebra", s.algebra->hash()}, {"records", records}}.dump(2) << "\n";
    return 0;
  }
  print_rows(out, o.format, {"support", "M", "N", "canonical", "Fac M ∩ Sub N"}, rows);
  if (o.format == Format::table) out << rows.size() << " twin pairs\n";
  return 0;
}

int emit_records(const Session& s, const Options& o, const std::vector<IERecord>& recs, bool with_closure_flags,
                 std::ostream& out) {
  const auto& cat = *s.catalog;
  if (o.format == Format::json) {
    json doc;
    doc["algebra"] = s.algebra->hash();
    doc["records"] = json::array();
    for (const auto& r : recs) doc["records"].push_back(record_json(cat, r));
    out << doc.dump(2) << "\n";
    return 0;
  }
  const LabelStyle style{o.paper_names};
  const bool csv = o.format == Format::csv;
  std::vector<std::string> header{"C", "(M, N)", "(P, I)", "torsion", "torsion-free"};
  if (csv) header = {"subcat", "M", "N", "P", "I", "is_torsion", "is_torsionfree"};
  if (with_closure_flags) {
    header.push_back(csv ? "is_ice" : "ICE");
    header.push_back(csv ? "is_ike" : "IKE");
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : recs) {
    std::vector<std::string> row;
    if (csv) {
      row = {render(cat, r.subcat), render(cat, r.twin.M.module, style), render(cat, r.twin.N.module, style),
             render(cat, r.extpair.P, style), render(cat, r.extpair.I, style)};
    } else {
      row = {render_subcat(cat, r.subcat),
             "(" + render(cat, r.twin.M.module, style) + ", " + render(cat, r.twin.N.module, style) + ")",
             "(" + render(cat, r.extpair.P, style) + ", " + render(cat, r.extpair.I, style) + ")"};
    }
    row.push_back(yes_no(r.flags.is_torsion));
    row.push_back(yes_no(r.flags.is_torsionfree));
    if (with_closure_flags) {
      row.push_back(yes_no(r.flags.is_ice.value_or(false)));
      row.push_back(yes_no(r.flags.is_ike.value_or(false)));
    }
    rows.push_back(std::move(row));
  }
  print_rows(out, o.format, header, rows);
  if (!csv) out << rows.size() << " IE-closed subcategories\n";
  return 0;
}

int cmd_ie(const Options& o, std::ostream& out) {
  const Session s = open_session(o);
  return emit_records(s, o, s.ie->enumerate_ie(), false, out);
}

int cmd_classify(const Options& o, std::ostream& out) {
  const Session s = open_session(o);
  std::vector<IERecord> recs = s.ie->enumerate_ie();
  ClassifyOptions opts;
  opts.bound = o.bound;
  for (auto& r : recs) r.flags = s.ie->classify(r, opts);
  return emit_records(s, o, recs, true, out);
}

int cmd_ext_pairs(const Options& o, std::ostream& out) {
  const Session s = open_session(o);
  const auto& cat = *s.catalog;
  const LabelStyle style{o.paper_names};
  json records = json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : s.ie->enumerate_ie()) {
    const IndexSet c = s.ie->phi_prime(r.extpair);
    records.push_back({{"P", label_list(cat, r.extpair.P)}, {"I", label_list(cat, r.extpair.I)}, {"subcat", label_list(cat, c)}});
    rows.push_back({render(cat, r.extpair.P, style), render(cat, r.extpair.I, style),
                    o.format == Format::csv ? render(cat, c) : render_subcat(cat, c)});
  }
  if (o.format == Format::json) {
    out << json{{"algebra", s.algebra->hash()}, {"records", records}}.dump(2) << "\n";
    return 0;
  }
  print_rows(out, o.format, {"P", "I", "T(P) ∩ F(I)"}, rows);
  if (o.format == Format::table) out << rows.size() << " Ext-pairs\n";
  return 0;
}

int cmd_canonicalize(const Options& o, std::ostream& out) {
  const Session s = open_session(o);
  const auto& cat = *s.catalog;
  const LabelStyle style{o.paper_names};
  const IndexSet m = support_set(parse_module_expr(o.m_expr, cat));
  const IndexSet n = support_set(parse_module_expr(o.n_expr, cat));
  const TwinPair input = s.ie->make_twin(m, n);
  const bool canonical = s.ie->is_canonical(input);
  const auto run = s.ie->canonicalize_traced(input);
  const IndexSet c = s.ie->phi(run.output);

  if (o.format == Format::json) {
    auto names = [&](const Multiset& ms) {
      json a = json::array();
      for (auto i : ms) a.push_back(cat.label(i));
      return a;
    };
    auto seq = [&](const CanonicalSES& ses, IndexSet middle) {
      return json{{"sub", names(ses.torsion_summands)},
                  {"middle", label_list(cat, middle)},
                  {"quotient", names(ses.free_summands)}};
    };
    json doc;
    doc["algebra"] = s.algebra->hash();
    doc["input"] = {{"M", label_list(cat, m)}, {"N", label_list(cat, n)}};
    doc["canonical"] = canonical;
    doc["sequences"] = {{"M", seq(run.for_m, m)}, {"N", seq(run.for_n, n)}};
    doc["output"] = {{"M", label_list(cat, run.output.M.module)}, {"N", label_list(cat, run.output.N.module)}};
    doc["subcat"] = label_list(cat, c);
    out << doc.dump(2) << "\n";
    return 0;
  }
  const std::string in_m = render(cat, m, style);
  const std::string in_n = render(cat, n, style);
  const std::string out_m = render(cat, run.output.M.module, style);
  const std::string out_n = render(cat, run.output.N.module, style);
  if (o.format == Format::csv) {
    print_csv(out, {"field", "value"},
              {{"input_M", in_m},
               {"input_N", in_n},
               {"canonical", yes_no(canonical)},
               {"U_M", render(cat, run.for_m.torsion_summands, style)},
               {"P_M", render(cat, run.for_m.free_summands, style)},
               {"I_N", render(cat, run.for_n.torsion_summands, style)},
               {"V_N", render(cat, run.for_n.free_summands, style)},
               {"output_M", out_m},
               {"output_N", out_n},
               {"subcat", render(cat, c)}});
    return 0;
  }
  out << "input      (M, N) = (" << in_m << ", " << in_n << ")\n";
  out << "canonical  " << yes_no(canonical) << "\n";
  out << "for M      0 -> " << render(cat, run.for_m.torsion_summands, style) << " -> " << in_m << " -> "
      << render(cat, run.for_m.free_summands, style) << " -> 0\n";
  out << "for N      0 -> " << render(cat, run.for_n.torsion_summands, style) << " -> " << in_n << " -> "
      << render(cat, run.for_n.free_summands, style) << " -> 0\n";
  out << "output     (M*, N*) = (" << out_m << ", " << out_n << ")\n";
  out << "subcat     " << render_subcat(cat, c) << "\n";
  return 0;
}

int cmd_verify_paper(const Options& o, std::ostream& out) {
  const auto results = verify_paper(o.data_dir, o.golden_dir, o.p);
  bool ok = !results.empty();
  for (const auto& r : results) {
    out << (r.ok ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) out << ": " << r.detail;
    out << "\n";
    ok = ok && r.ok;
  }
  if (results.empty()) out << "FAIL no golden tables found in " << o.golden_dir << "\n";
  return ok ? 0 : 1;
}

}  // namespace

std::vector<CheckResult> verify_paper(const std::string& data_dir, const std::string& golden_dir, std::optional<Scalar> p) {
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(golden_dir, ec))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<CheckResult> out;
  for (const auto& f : files) check_golden_file(f, data_dir, p, out);
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"IE-closed subcategories of bound quiver algebras via twin support tau-tilting modules"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  o.data_dir = default_data_dir();
  o.algebra_path = (fs::path(o.data_dir) / "nakayama_a3.json").string();
  o.golden_dir = (fs::path(o.data_dir) / "golden").string();
  std::string format = "table";
  Scalar p = 0;

  app.add_option("--algebra", o.algebra_path, "algebra JSON file")->capture_default_str();
  auto* catalog_opt = app.add_option("--catalog", "catalog JSON file (default: interval modules)");
  auto* p_opt = app.add_option("--p", p, "override the field characteristic");
  app.add_option("--format", format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_flag("--paper-names", o.paper_names, "concatenated names with Λ and DΛ");

  app.add_subcommand("catalog", "list the indecomposable modules");
  auto* stt = app.add_subcommand("stt", "support tau-tilting modules");
  stt->add_flag("--minus", o.minus, "support tau^- -tilting modules instead");
  auto* twins = app.add_subcommand("twins", "twin pairs (M, N) with supp M = supp N");
  twins->add_flag("--canonical-only", o.canonical_only, "only canonical pairs");
  app.add_subcommand("ie", "IE-closed subcategories with canonical twin pairs and Ext-pairs");
  auto* canon = app.add_subcommand("canonicalize", "canonicalize a twin pair");
  canon->add_option("--m", o.m_expr, "support tau-tilting module, e.g. S1+S3+P1")->required();
  canon->add_option("--n", o.n_expr, "support tau^- -tilting module")->required();
  app.add_subcommand("ext-pairs", "canonical Ext-pairs");
  auto* classify = app.add_subcommand("classify", "torsion, torsion-free, ICE and IKE flags");
  classify->add_option("--bound", o.bound, "multiplicity bound for the cokernel/kernel search")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* verify = app.add_subcommand("verify-paper", "check the bundled golden tables");
  verify->add_option("--golden-dir", o.golden_dir)->capture_default_str();
  verify->add_option("--data-dir", o.data_dir)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (*catalog_opt) o.catalog_path = catalog_opt->as<std::string>();
  if (*p_opt) o.p = p;
  o.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::table;

  try {
    const auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "catalog") return cmd_catalog(o, out);
    if (name == "stt") return cmd_stt(o, out);
    if (name == "twins") return cmd_twins(o, out);
    if (name == "ie") return cmd_ie(o, out);
    if (name == "canonicalize") return cmd_canonicalize(o, out);
    if (name == "ext-pairs") return cmd_ext_pairs(o, out);
    if (name == "classify") return cmd_classify(o, out);
    if (name == "verify-paper") return cmd_verify_paper(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace ietilt::cli
