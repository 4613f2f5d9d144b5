#include "penrose/cli.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "penrose/bbw.hpp"
#include "penrose/character.hpp"
#include "penrose/errors.hpp"
#include "penrose/fixtures.hpp"
#include "penrose/names.hpp"
#include "penrose/relative_forms.hpp"
#include "penrose/serialize.hpp"
#include "penrose/transform.hpp"

namespace penrose {

namespace {

using nlohmann::json;

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

json term_json(const FlagSpace& space, const Weight& label, Int mult) {
  json t;
  t["label"] = json(label);
  t["mult"] = mult;
  t["rank"] = rank(Bundle{space, label});
  if (space.kind == SpaceKind::M) t["name"] = hermitian_name(Bundle{space, label}).text;
  return t;
}

json terms_json(const BundleSum& s) {
  json terms = json::array();
  for (const auto& t : s.terms) terms.push_back(term_json(s.space, t.label, t.mult));
  return terms;
}

void print_sum(const BundleSum& s, Format format, std::ostream& out) {
  switch (format) {
    case Format::text: out << emit_text(s); break;
    case Format::json: out << emit_json(s); break;
    case Format::latex: out << emit_latex(s); break;
  }
}

int run_bbw(const FlagSpace& space, const Weight& weight, Format format, std::ostream& out) {
  const CohomologyResult h = cohomology(make_bundle(space, weight));
  switch (format) {
    case Format::text: out << emit_text(h); break;
    case Format::json: out << emit_json_cohomology(space, h); break;
    case Format::latex: {
      std::string body = "\\[\n";
      if (h.empty()) body += "H^{\\bullet} = 0\n";
      for (const auto& e : h)
        body += "H^{" + std::to_string(e.degree) + "} = " + format_weight_parens(e.weight) +
                ",\\ \\dim " + std::to_string(e.dim) + "\n";
      body += "\\]\n";
      out << latex_document("Cohomology over $" + format_space(space) + "$", body);
      break;
    }
  }
  return 0;
}

int run_pushforward(int n, const Weight& weight, Format format, std::ostream& out) {
  const auto di = direct_images(make_bundle(space_G(n), weight), space_M(n));
  switch (format) {
    case Format::text:
      if (!di)
        out << "vanishes\n";
      else
        out << "q=" << di->degree << ": " << format_weight_parens(di->image.label) << "\n";
      break;
    case Format::json: {
      json j;
      j["space"] = "M";
      j["n"] = n;
      json images = json::array();
      if (di) {
        json img = term_json(di->image.space, di->image.label, 1);
        img.erase("mult");
        img["degree"] = di->degree;
        images.push_back(img);
      }
      j["images"] = images;
      out << j.dump(2) << "\n";
      break;
    }
    case Format::latex: {
      std::string body = "\\[\n";
      if (!di)
        body += "0\n";
      else
        body += "q = " + std::to_string(di->degree) + ":\\ " +
                format_weight_parens(di->image.label) + "\n";
      body += "\\]\n";
      out << latex_document("Direct images on $\\mathbb{CP}_" + std::to_string(n) + "$", body);
      break;
    }
  }
  return 0;
}

int run_pullback(int n, const Weight& weight, Format format, std::ostream& out) {
  const Bundle pulled = pullback(make_bundle(space_F(n), weight));
  switch (format) {
    case Format::text: out << format_bundle(pulled) << "\n"; break;
    case Format::json: {
      json j;
      j["space"] = "G";
      j["n"] = n;
      j["label"] = json(pulled.label);
      j["rank"] = rank(pulled);
      out << j.dump(2) << "\n";
      break;
    }
    case Format::latex:
      out << latex_document("Pullback to $G(" + std::to_string(n) + ")$",
                            "\\[\n" + format_weight_parens(pulled.label) + "\n\\]\n");
      break;
  }
  return 0;
}

int run_relforms(int n, int p, Format format, std::ostream& out) {
  if (p >= 0) {
    print_sum(relative_forms(n, p), format, out);
    return 0;
  }
  switch (format) {
    case Format::text:
      for (int k = 0; k <= n; ++k) out << "p=" << k << ": " << format_sum(relative_forms(n, k)) << "\n";
      break;
    case Format::json: {
      json j;
      j["space"] = "G";
      j["n"] = n;
      json forms = json::array();
      for (int k = 0; k <= n; ++k)
        forms.push_back(json{{"p", k}, {"terms", terms_json(relative_forms(n, k))}});
      j["forms"] = forms;
      out << j.dump(2) << "\n";
      break;
    }
    case Format::latex: {
      std::string body = "\\begin{gather*}\n";
      for (int k = 0; k <= n; ++k) {
        const BundleSum forms = relative_forms(n, k);
        body += "\\Lambda^{" + std::to_string(k) + "}_{\\mu}";
        for (std::size_t i = 0; i < forms.terms.size(); ++i)
          body += (i ? " \\oplus " : " = ") + format_weight_parens(forms.terms[i].label);
        body += (k < n) ? " \\\\\n" : "\n";
      }
      body += "\\end{gather*}\n";
      out << latex_document("Relative forms on $G(" + std::to_string(n) + ")$", body);
      break;
    }
  }
  return 0;
}

int run_tangent(const FlagSpace& space, Format format, std::ostream& out) {
  const std::vector<BundleSum> grades = tangent_series(space);
  switch (format) {
    case Format::text:
      for (std::size_t k = 0; k < grades.size(); ++k)
        out << "grade " << (k + 1) << ": " << format_sum(grades[k]) << "\n";
      break;
    case Format::json: {
      json j;
      j["space"] = (space.kind == SpaceKind::F) ? "F" : (space.kind == SpaceKind::G) ? "G" : "M";
      j["n"] = space.n;
      json gs = json::array();
      for (const auto& g : grades) gs.push_back(terms_json(g));
      j["grades"] = gs;
      out << j.dump(2) << "\n";
      break;
    }
    case Format::latex: {
      std::string body = "\\begin{gather*}\n";
      for (std::size_t k = 0; k < grades.size(); ++k) {
        body += "\\Theta_{" + std::to_string(k + 1) + "}";
        for (std::size_t i = 0; i < grades[k].terms.size(); ++i)
          body += (i ? " \\oplus " : " = ") + format_weight_parens(grades[k].terms[i].label);
        body += (k + 1 < grades.size()) ? " \\\\\n" : "\n";
      }
      body += "\\end{gather*}\n";
      out << latex_document("Graded tangent bundle of $" + format_space(space) + "$", body);
      break;
    }
  }
  return 0;
}

GradedInput parse_graded_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read grades file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  json j;
  try {
    j = json::parse(buffer.str());
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad grades file: ") + e.what());
  }
  try {
    GradedInput input;
    input.n = j.at("n").get<int>();
    input.conjectural = j.value("conjectural", false);
    const FlagSpace f = space_F(input.n);
    for (const auto& grade : j.at("grades")) {
      BundleSum s = empty_sum(f);
      for (const auto& t : grade) {
        Weight label;
        for (const auto& v : t.at("label")) label.push_back(v.get<Int>());
        add_term(s, label, t.contains("mult") ? t.at("mult").get<Int>() : 1);
      }
      input.grades.push_back(s);
    }
    return input;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad grades file: ") + e.what());
  }
}

int run_page(const GradedInput& input, Format format, std::ostream& out) {
  const E1Page page = e1_page(input);
  switch (format) {
    case Format::text: out << emit_text(page); break;
    case Format::json: out << emit_json(page); break;
    case Format::latex: out << emit_latex(page); break;
  }
  return 0;
}

int run_transform(const GradedInput& input, bool raw, Format format, std::ostream& out) {
  const TransformResult result = transform(input, /*with_cancel=*/!raw);
  if (result.complex) {
    switch (format) {
      case Format::text: out << emit_text(*result.complex); break;
      case Format::json: out << emit_json(*result.complex); break;
      case Format::latex: out << emit_latex(*result.complex); break;
    }
    return 0;
  }
  switch (format) {
    case Format::text:
      out << "note: the pushdown page keeps terms above the bottom row; reporting the page\n";
      out << emit_text(*result.page);
      break;
    case Format::json: out << emit_json(*result.page); break;
    case Format::latex: out << emit_latex(*result.page); break;
  }
  return 0;
}

int run_dim(int n, const Weight& weight, Format format, std::ostream& out) {
  const Int d = weyl_dim(n, weight);
  switch (format) {
    case Format::text: out << d << "\n"; break;
    case Format::json: {
      json j;
      j["n"] = n;
      j["weight"] = json(weight);
      j["dim"] = d;
      out << j.dump(2) << "\n";
      break;
    }
    case Format::latex:
      out << latex_document("Weyl dimension",
                            "\\[\n\\dim " + format_weight_parens(weight) + " = " +
                                std::to_string(d) + "\n\\]\n");
      break;
  }
  return 0;
}

int run_verify(const std::string& filter, const std::string& corpus_path, std::ostream& out,
               std::ostream& err) {
  const std::vector<Fixture> corpus =
      corpus_path.empty() ? load_corpus() : load_corpus(corpus_path);

  std::set<std::string> seen;
  for (const auto& f : corpus)
    if (!seen.insert(f.id).second) throw InvalidArgument("duplicate fixture id: " + f.id);

  int ran = 0, failures = 0;
  for (const auto& f : corpus) {
    if (!filter.empty() && f.id.find(filter) == std::string::npos) continue;
    ++ran;
    std::ostringstream sub_out, sub_err;
    const int code = cli_main(f.argv, sub_out, sub_err);
    bool ok = (code == 0);
    std::string detail;
    if (!ok) {
      detail = "exit code " + std::to_string(code);
      const std::string msg = sub_err.str();
      if (!msg.empty()) detail += ": " + msg;
    } else {
      try {
        const json expected = json::parse(f.expected_json);
        const json got = json::parse(sub_out.str());
        if (expected != got) {
          ok = false;
          detail = "diff " + json::diff(expected, got).dump();
        }
      } catch (const json::exception& e) {
        ok = false;
        detail = std::string("output is not valid JSON: ") + e.what();
      }
    }
    if (ok) {
      out << "ok   " << f.id << "\n";
    } else {
      ++failures;
      out << "FAIL " << f.id << "\n";
      out << "     " << detail << "\n";
    }
  }
  out << ran << " fixtures, " << failures << (failures == 1 ? " failure\n" : " failures\n");
  if (ran == 0 && !filter.empty()) {
    err << "error: no fixture id contains '" << filter << "'\n";
    return 1;
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Calculus of homogeneous bundles over the twistor fibration of CP_n"};
  app.require_subcommand(1);

  std::string space_letter = "F", weight_text, left_text, right_text, format_name = "text";
  std::string filter, corpus_path, grades_path;
  int n = 0, p = -1;
  bool theta = false, trivial = false, conjecture = false, raw = false, page = false;

  auto* bbw_cmd = app.add_subcommand("bbw", "Cohomology of an irreducible bundle");
  bbw_cmd->add_option("--space", space_letter, "F, G, or M")->required();
  bbw_cmd->add_option("--n", n, "rank (the space is a flag manifold of SL(n+1))")->required();
  bbw_cmd->add_option("--weight", weight_text, "Dynkin labels a,b,c")->required();
  bbw_cmd->add_option("--format", format_name, "text, json, or latex");

  auto* push_cmd = app.add_subcommand("pushforward", "Direct images along G(n) -> M(n)");
  push_cmd->add_option("--n", n)->required();
  push_cmd->add_option("--weight", weight_text, "label on G(n)")->required();
  push_cmd->add_option("--format", format_name);

  auto* pull_cmd = app.add_subcommand("pullback", "Pullback along F(n) -> G(n)");
  pull_cmd->add_option("--n", n)->required();
  pull_cmd->add_option("--weight", weight_text, "label on F(n)")->required();
  pull_cmd->add_option("--format", format_name);

  auto* rel_cmd = app.add_subcommand("relforms", "Relative p-forms of F(n) -> M(n), on G(n)");
  rel_cmd->add_option("--n", n)->required();
  rel_cmd->add_option("--p", p, "single exterior power (default: all)");
  rel_cmd->add_option("--format", format_name);

  auto* tensor_cmd = app.add_subcommand("tensor", "Tensor product of two irreducible bundles");
  tensor_cmd->add_option("--n", n)->required();
  tensor_cmd->add_option("--space", space_letter)->required();
  tensor_cmd->add_option("--left", left_text)->required();
  tensor_cmd->add_option("--right", right_text)->required();
  tensor_cmd->add_option("--format", format_name);

  auto* tan_cmd = app.add_subcommand("tangent", "Graded tangent bundle of a flag space");
  tan_cmd->add_option("--space", space_letter)->required();
  tan_cmd->add_option("--n", n)->required();
  tan_cmd->add_option("--format", format_name);

  auto* tr_cmd = app.add_subcommand("transform", "Push a graded bundle on F(n) down to M(n)");
  tr_cmd->add_option("--n", n)->required();
  tr_cmd->add_option("--weight", weight_text, "single-grade input label on F(n)");
  tr_cmd->add_flag("--theta", theta, "use the graded tangent bundle of F(n)");
  tr_cmd->add_flag("--trivial", trivial, "use the trivial line bundle");
  tr_cmd->add_flag("--conjecture", conjecture, "use the conjectured two-step module (n=3)");
  tr_cmd->add_option("--grades", grades_path, "JSON file with explicit grades");
  tr_cmd->add_flag("--raw", raw, "skip cancellation; annotate what it would remove");
  tr_cmd->add_flag("--page", page, "emit the pushdown page itself instead of a complex");
  tr_cmd->add_option("--format", format_name);

  auto* dim_cmd = app.add_subcommand("dim", "Weyl dimension of a dominant weight");
  dim_cmd->add_option("--n", n)->required();
  dim_cmd->add_option("--weight", weight_text)->required();
  dim_cmd->add_option("--format", format_name);

  auto* verify_cmd = app.add_subcommand("verify", "Replay the stored fixture corpus");
  verify_cmd->add_option("--filter", filter, "only fixtures whose id contains this substring");
  verify_cmd->add_option("--corpus", corpus_path, "load fixtures from a directory instead");

  std::vector<const char*> argv;
  argv.push_back("penrose");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    const Format format = parse_format(format_name);
    if (bbw_cmd->parsed())
      return run_bbw(parse_space(space_letter, n), parse_weight(weight_text), format, out);
    if (push_cmd->parsed()) return run_pushforward(n, parse_weight(weight_text), format, out);
    if (pull_cmd->parsed()) return run_pullback(n, parse_weight(weight_text), format, out);
    if (rel_cmd->parsed()) return run_relforms(n, p, format, out);
    if (tensor_cmd->parsed()) {
      const FlagSpace space = parse_space(space_letter, n);
      const BundleSum product = tensor(sum_of(make_bundle(space, parse_weight(left_text))),
                                       sum_of(make_bundle(space, parse_weight(right_text))));
      print_sum(product, format, out);
      return 0;
    }
    if (tan_cmd->parsed()) return run_tangent(parse_space(space_letter, n), format, out);
    if (tr_cmd->parsed()) {
      const int selectors = (!weight_text.empty() ? 1 : 0) + (theta ? 1 : 0) + (trivial ? 1 : 0) +
                            (conjecture ? 1 : 0) + (!grades_path.empty() ? 1 : 0);
      if (selectors != 1) {
        err << "transform needs exactly one of --weight, --theta, --trivial, --conjecture, "
               "--grades\n";
        return 2;
      }
      GradedInput input;
      if (!weight_text.empty())
        input = graded_from_bundle(make_bundle(space_F(n), parse_weight(weight_text)));
      else if (theta)
        input = graded_theta(n);
      else if (trivial)
        input = graded_trivial(n);
      else if (conjecture) {
        if (n != 3) throw InvalidArgument("the conjectured module is specific to n = 3");
        input = graded_conjecture();
      } else {
        input = parse_graded_file(grades_path);
        if (input.n != n) throw InvalidArgument("grades file rank does not match --n");
      }
      if (page && raw) {
        err << "transform accepts at most one of --raw and --page\n";
        return 2;
      }
      if (page) return run_page(input, format, out);
      return run_transform(input, raw, format, out);
    }
    if (dim_cmd->parsed()) return run_dim(n, parse_weight(weight_text), format, out);
    if (verify_cmd->parsed()) return run_verify(filter, corpus_path, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 2;
}

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliResult r;
  r.exit_code = cli_main(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace penrose
