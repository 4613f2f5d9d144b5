#include "penrose/serialize.hpp"

#include <sstream>

#include "json.hpp"
#include "penrose/names.hpp"

namespace penrose {

namespace {

using nlohmann::json;

std::string space_letter(const FlagSpace& s) {
  switch (s.kind) {
    case SpaceKind::F: return "F";
    case SpaceKind::G: return "G";
    case SpaceKind::M: return "M";
    case SpaceKind::Generic: break;
  }
  throw InvalidArgument("no wire format for generic spaces");
}

json weight_json(const Weight& w) { return json(w); }

Weight weight_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("weight must be a nonempty array");
  Weight w;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError("weight coordinates must be integers");
    w.push_back(v.get<Int>());
  }
  return w;
}

json term_json(const FlagSpace& space, const Weight& label, Int mult) {
  json t;
  t["label"] = weight_json(label);
  t["mult"] = mult;
  t["rank"] = rank(Bundle{space, label});
  if (space.kind == SpaceKind::M) t["name"] = hermitian_name(Bundle{space, label}).text;
  return t;
}

json sum_json(const BundleSum& s) {
  json terms = json::array();
  for (const auto& t : s.terms) terms.push_back(term_json(s.space, t.label, t.mult));
  return terms;
}

BundleSum sum_from_json(const FlagSpace& space, const json& terms) {
  BundleSum s = empty_sum(space);
  for (const auto& t : terms) {
    const Int mult = t.contains("mult") ? t.at("mult").get<Int>() : 1;
    add_term(s, weight_from_json(t.at("label")), mult);
  }
  return s;
}

json cohomology_json(const CohomologyResult& h) {
  json out = json::array();
  for (const auto& e : h)
    out.push_back(json{{"degree", e.degree}, {"label", weight_json(e.weight)}, {"dim", e.dim}});
  return out;
}

CohomologyResult cohomology_from_json(const json& j) {
  CohomologyResult h;
  for (const auto& e : j) {
    CohomologyEntry entry;
    entry.degree = e.at("degree").get<int>();
    entry.weight = weight_from_json(e.at("label"));
    entry.dim = e.at("dim").get<Int>();
    h.push_back(entry);
  }
  return h;
}

FlagSpace space_from_json(const json& j) {
  return parse_space(j.at("space").get<std::string>(), j.at("n").get<int>());
}

int term_index(const BundleSum& col, const Weight& w) {
  for (std::size_t i = 0; i < col.terms.size(); ++i)
    if (col.terms[i].label == w) return static_cast<int>(i);
  throw InvalidArgument("arrow endpoint " + format_weight_parens(w) + " not present in column");
}

const char* type_word(ArrowType t) {
  switch (t) {
    case ArrowType::dbar: return "dbar";
    case ArrowType::d: return "d";
    case ArrowType::mixed: return "mixed";
  }
  return "mixed";
}

std::string arrow_text_symbol(const Arrow& a) {
  std::string word = type_word(a.type);
  if (a.order != 1) word += "^(" + std::to_string(a.order) + ")";
  return word;
}

std::string arrow_latex_symbol(const Arrow& a) {
  switch (a.type) {
    case ArrowType::dbar:
      return a.order == 1 ? "\\bar\\partial" : "\\bar\\partial^{(" + std::to_string(a.order) + ")}";
    case ArrowType::d:
      return a.order == 1 ? "\\partial" : "\\partial^{(" + std::to_string(a.order) + ")}";
    case ArrowType::mixed:
      return a.order == 2 ? "\\partial\\bar\\partial" : "D^{(" + std::to_string(a.order) + ")}";
  }
  return "D";
}

std::string name_text(const FlagSpace& space, const Weight& label, Int mult) {
  std::string s;
  if (mult != 1) s += std::to_string(mult) + "*";
  if (space.kind == SpaceKind::M)
    s += hermitian_name(Bundle{space, label}).text;
  else
    s += format_weight_parens(label);
  return s;
}

std::string names_line(const BundleSum& col) {
  if (col.terms.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < col.terms.size(); ++i) {
    if (i) s += "\u2295";
    s += name_text(col.space, col.terms[i].label, col.terms[i].mult);
  }
  return s;
}

std::string latex_column(const BundleSum& col) {
  if (col.terms.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < col.terms.size(); ++i) {
    if (i) s += " \\oplus ";
    const auto& t = col.terms[i];
    if (t.mult != 1) s += std::to_string(t.mult) + "\\,";
    if (col.space.kind == SpaceKind::M)
      s += hermitian_name(Bundle{col.space, t.label}).latex;
    else
      s += format_weight_parens(t.label);
  }
  return s;
}

std::string latex_document(const std::string& title, const std::string& body) {
  std::string s;
  s += "\\documentclass{article}\n";
  s += "\\usepackage{amsmath,amssymb}\n";
  s += "\\begin{document}\n";
  s += "\\section*{" + title + "}\n";
  s += body;
  s += "\\end{document}\n";
  return s;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "latex") return Format::latex;
  throw ParseError("unknown format '" + name + "' (expected text, json, or latex)");
}

std::string emit_json(const Complex& c) {
  json j;
  j["space"] = space_letter(c.space);
  j["n"] = c.space.n;
  json cols = json::array();
  for (const auto& col : c.columns) cols.push_back(sum_json(col));
  j["columns"] = cols;
  json arrows = json::array();
  for (const auto& a : c.arrows)
    arrows.push_back(json{{"col", a.col},
                          {"from", term_index(c.columns[a.col], a.src)},
                          {"to", term_index(c.columns[a.col + 1], a.dst)},
                          {"order", a.order},
                          {"type", type_word(a.type)}});
  j["arrows"] = arrows;
  j["cohomology"] = cohomology_json(c.cohomology);
  j["cohomology_flagged"] = c.cohomology_flagged;
  j["conjectural"] = c.conjectural;
  if (!c.cancelled.empty()) {
    json cancelled = json::array();
    for (const auto& t : c.cancelled)
      cancelled.push_back(json{{"col", t.col}, {"label", weight_json(t.label)}, {"mult", t.mult}});
    j["cancelled"] = cancelled;
  }
  return j.dump(2) + "\n";
}

Complex parse_complex(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad complex JSON: ") + e.what());
  }
  try {
    Complex c;
    c.space = space_from_json(j);
    for (const auto& col : j.at("columns")) c.columns.push_back(sum_from_json(c.space, col));
    for (const auto& a : j.at("arrows")) {
      Arrow arrow;
      arrow.col = a.at("col").get<int>();
      if (arrow.col < 0 || arrow.col + 1 >= static_cast<int>(c.columns.size()))
        throw ParseError("arrow column out of range");
      arrow.src = c.columns[arrow.col].terms.at(a.at("from").get<std::size_t>()).label;
      arrow.dst = c.columns[arrow.col + 1].terms.at(a.at("to").get<std::size_t>()).label;
      arrow.order = a.at("order").get<int>();
      const Int delta = arrow.dst[0] - arrow.src[0];
      arrow.type = delta == arrow.order    ? ArrowType::dbar
                   : delta == -2 * arrow.order ? ArrowType::d
                                               : ArrowType::mixed;
      c.arrows.push_back(arrow);
    }
    c.cohomology = cohomology_from_json(j.at("cohomology"));
    c.cohomology_flagged = j.value("cohomology_flagged", false);
    c.conjectural = j.value("conjectural", false);
    if (j.contains("cancelled"))
      for (const auto& t : j.at("cancelled"))
        c.cancelled.push_back(CancelledTerm{t.at("col").get<int>(),
                                            weight_from_json(t.at("label")),
                                            t.at("mult").get<Int>()});
    return c;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad complex JSON: ") + e.what());
  }
}

std::string emit_text(const Complex& c) {
  std::ostringstream os;
  os << "complex on " << format_space(c.space);
  if (c.conjectural) os << "  [conjectural]";
  os << "\n";
  os << "columns: ";
  for (std::size_t p = 0; p < c.columns.size(); ++p) {
    if (p) os << " | ";
    os << names_line(c.columns[p]);
  }
  os << "\n";
  os << "labels: ";
  for (std::size_t p = 0; p < c.columns.size(); ++p) {
    if (p) os << " | ";
    os << format_sum(c.columns[p]);
  }
  os << "\n";
  os << "ranks: ";
  for (std::size_t p = 0; p < c.columns.size(); ++p) {
    if (p) os << " | ";
    os << rank(c.columns[p]);
  }
  os << "\n";
  if (!c.arrows.empty()) {
    os << "arrows:\n";
    for (const auto& a : c.arrows)
      os << "  " << a.col << ": " << format_weight_parens(a.src) << " --" << arrow_text_symbol(a)
         << "--> " << format_weight_parens(a.dst) << "\n";
  }
  if (!c.cancelled.empty()) {
    os << "cancelled:\n";
    for (const auto& t : c.cancelled)
      os << "  col " << t.col << ": " << format_weight_parens(t.label) << " x" << t.mult << "\n";
  }
  os << "cohomology:";
  if (c.cohomology.empty()) {
    os << " vanishes\n";
  } else {
    os << "\n";
    for (const auto& e : c.cohomology)
      os << "  H^" << e.degree << " = [" << format_weight(e.weight) << "] (dim " << e.dim << ")\n";
  }
  if (c.cohomology_flagged)
    os << "warning: grades contribute cohomology in overlapping degrees; entries left unmerged\n";
  return os.str();
}

std::string emit_latex(const Complex& c) {
  std::ostringstream body;
  body << "\\[\n";
  for (std::size_t p = 0; p < c.columns.size(); ++p) {
    if (p) body << "\n\\longrightarrow\n";
    body << latex_column(c.columns[p]);
  }
  body << "\n\\]\n";
  if (!c.arrows.empty()) {
    body << "\\begin{gather*}\n";
    for (std::size_t i = 0; i < c.arrows.size(); ++i) {
      const auto& a = c.arrows[i];
      body << format_weight_parens(a.src) << " \\xrightarrow{" << arrow_latex_symbol(a) << "} "
           << format_weight_parens(a.dst);
      if (i + 1 < c.arrows.size()) body << " \\\\";
      body << "\n";
    }
    body << "\\end{gather*}\n";
  }
  if (!c.cohomology.empty()) {
    body << "\\begin{gather*}\n";
    for (std::size_t i = 0; i < c.cohomology.size(); ++i) {
      const auto& e = c.cohomology[i];
      body << "H^{" << e.degree << "} = " << format_weight_parens(e.weight) << ",\\ \\dim "
           << e.dim;
      if (i + 1 < c.cohomology.size()) body << " \\\\";
      body << "\n";
    }
    body << "\\end{gather*}\n";
  }
  std::string title = "Complex on $\\mathbb{CP}_" + std::to_string(c.space.n) + "$";
  if (c.conjectural) title += " (conjectural)";
  return latex_document(title, body.str());
}

std::string emit_json(const E1Page& page) {
  json j;
  j["space"] = space_letter(page.base);
  j["n"] = page.n;
  json cells = json::array();
  for (const auto& [pq, cell] : page.cells)
    cells.push_back(json{{"p", pq.first}, {"q", pq.second}, {"terms", sum_json(cell)}});
  j["cells"] = cells;
  j["cohomology"] = cohomology_json(page.cohomology);
  j["cohomology_flagged"] = page.cohomology_flagged;
  j["conjectural"] = page.conjectural;
  return j.dump(2) + "\n";
}

E1Page parse_page(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad page JSON: ") + e.what());
  }
  try {
    E1Page page;
    page.base = space_from_json(j);
    page.n = page.base.n;
    for (const auto& cell : j.at("cells")) {
      const int p = cell.at("p").get<int>();
      const int q = cell.at("q").get<int>();
      const BundleSum terms = sum_from_json(page.base, cell.at("terms"));
      if (!is_empty(terms)) page.cells.emplace(std::make_pair(p, q), terms);
    }
    page.cohomology = cohomology_from_json(j.at("cohomology"));
    page.cohomology_flagged = j.value("cohomology_flagged", false);
    page.conjectural = j.value("conjectural", false);
    return page;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad page JSON: ") + e.what());
  }
}

std::string emit_text(const E1Page& page) {
  std::ostringstream os;
  os << "E1 page over " << format_space(page.base);
  if (page.conjectural) os << "  [conjectural]";
  os << "\n";
  for (const auto& [pq, cell] : page.cells)
    os << "  (p=" << pq.first << ", q=" << pq.second << "): " << format_sum(cell) << "\n";
  os << "cohomology:";
  if (page.cohomology.empty()) {
    os << " vanishes\n";
  } else {
    os << "\n";
    for (const auto& e : page.cohomology)
      os << "  H^" << e.degree << " = [" << format_weight(e.weight) << "] (dim " << e.dim << ")\n";
  }
  if (page.cohomology_flagged)
    os << "warning: grades contribute cohomology in overlapping degrees; entries left unmerged\n";
  return os.str();
}

std::string emit_latex(const E1Page& page) {
  int max_p = 0, max_q = 0;
  for (const auto& [pq, cell] : page.cells) {
    max_p = std::max(max_p, pq.first);
    max_q = std::max(max_q, pq.second);
  }
  std::ostringstream body;
  body << "\\[\n\\begin{array}{" << std::string(max_p + 2, 'c') << "}\n";
  for (int q = max_q; q >= 0; --q) {
    body << "q{=}" << q;
    for (int p = 0; p <= max_p; ++p) {
      auto it = page.cells.find({p, q});
      body << " & " << (it == page.cells.end() ? std::string("0") : latex_column(it->second));
    }
    body << " \\\\\n";
  }
  body << " ";
  for (int p = 0; p <= max_p; ++p) body << " & p{=}" << p;
  body << "\n\\end{array}\n\\]\n";
  std::string title = "$E_1$ page over $\\mathbb{CP}_" + std::to_string(page.n) + "$";
  if (page.conjectural) title += " (conjectural)";
  return latex_document(title, body.str());
}

std::string emit_text(const CohomologyResult& h) {
  if (h.empty()) return "vanishes\n";
  std::ostringstream os;
  for (const auto& e : h)
    os << "H^" << e.degree << " = [" << format_weight(e.weight) << "] (dim " << e.dim << ")\n";
  return os.str();
}

std::string emit_json_cohomology(const FlagSpace& s, const CohomologyResult& h) {
  json j;
  j["space"] = space_letter(s);
  j["n"] = s.n;
  j["cohomology"] = cohomology_json(h);
  return j.dump(2) + "\n";
}

std::string emit_text(const BundleSum& s) { return format_sum(s) + "\n"; }

std::string emit_json(const BundleSum& s) {
  json j;
  j["space"] = space_letter(s.space);
  j["n"] = s.space.n;
  j["terms"] = sum_json(s);
  return j.dump(2) + "\n";
}

std::string emit_latex(const BundleSum& s) {
  return latex_document("Bundle sum on $" + format_space(s.space) + "$",
                        "\\[\n" + latex_column(s) + "\n\\]\n");
}

}  // namespace penrose
