#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hopf/hopf.hpp"

using namespace hopf;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

struct Options {
  int characteristic = -1;
  int truncation = -1;
  long long budget = 1000000;
  std::string format = "text";
  bool json() const { return format == "json"; }
};

// A source is a JSON presentation file or gallery:NAME.
PresentationDocument load(const std::string& src, const Options& o) {
  PresentationDocument d;
  const std::string prefix = "gallery:";
  if (src.rfind(prefix, 0) == 0) {
    const std::string name = src.substr(prefix.size());
    const GalleryEntry& e = gallery_entry(name);
    d = gallery_document(name, o.characteristic >= 0 ? o.characteristic : e.default_p,
                         o.truncation >= 0 ? o.truncation : e.default_bound);
  } else {
    d = read_document(src);
    if (o.characteristic >= 0) d.characteristic = o.characteristic;
    if (o.truncation >= 0) d.truncation = o.truncation;
  }
  d.field();
  return d;
}

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.json()) std::cout << j.dump(2) << '\n';
  else std::cout << text;
}

json decomposition_json(const Decomposition& d) {
  json j;
  j["decomposition"] = d.to_string();
  j["summands"] = json::array();
  for (const auto& [s, m] : d.counts())
    j["summands"].push_back({{"n", s.n}, {"j", s.j}, {"at_least", s.at_least}, {"multiplicity", m}});
  return j;
}

std::string decomposition_table(const std::string& title, const std::string& letter, const Decomposition& d) {
  std::string s = title + ": " + d.to_string() + "\n  summand\tmultiplicity\n";
  for (const auto& [sm, m] : d.counts())
    s += "  " + letter + "(" + std::to_string(sm.n) + "," + (sm.at_least ? "≥" : "") + std::to_string(sm.j) + ")\t" +
         std::to_string(m) + "\n";
  return s;
}

// The commutative algebra whose F-module a command looks at.
GradedAlgebra commutative_algebra(const PresentationDocument& d) {
  if (d.kind == DocumentKind::Algebra) return algebra_of(d);
  BialgebraData h = build_document(d);
  if (!h.is_commutative()) throw ValidationError("cli", "this command needs an algebra document or a commutative Hopf algebra");
  return h.algebra();
}

int cmd_classify(const Options& o, const std::string& src) {
  PresentationDocument d = load(src, o);
  json j;
  std::string text;
  if (d.kind == DocumentKind::Algebra) {
    Decomposition dec = classify(frobenius_module(algebra_of(d)));
    j["module"] = "F-module of the augmentation ideal";
    j.update(decomposition_json(dec));
    text = decomposition_table("F-module of the augmentation ideal", "N", dec);
  } else if (d.kind == DocumentKind::Coalgebra) {
    Decomposition dec = classify(verschiebung_module(coalgebra_of(d)));
    j["module"] = "V-module of the coaugmentation coideal";
    j.update(decomposition_json(dec));
    text = decomposition_table("V-module of the coaugmentation coideal", "M", dec);
  } else {
    BialgebraData h = build_document(d);
    auto q = indecomposables_Q(h);
    if (!q.v_module) throw DomainError("cli", "Q carries a V-module only for cocommutative Hopf algebras in characteristic p");
    Decomposition dec = classify(*q.v_module);
    j["module"] = "indecomposables as V-module";
    j.update(decomposition_json(dec));
    text = decomposition_table("indecomposables as V-module", "M", dec);
  }
  emit(o, j, text);
  return kOk;
}

int cmd_product(const Options& o, const std::string& src, const std::string& a, const std::string& b) {
  BialgebraData h = build_document(load(src, o));
  Element r = h.multiply(parse_element(h, a), parse_element(h, b));
  std::string s = format_element(h.basis(), r);
  emit(o, json{{"product", s}}, s + "\n");
  return kOk;
}

int cmd_coproduct(const Options& o, const std::string& src, const std::string& a) {
  BialgebraData h = build_document(load(src, o));
  std::string s = format_tensor(h.basis(), h.coproduct(parse_element(h, a)));
  emit(o, json{{"coproduct", s}}, s + "\n");
  return kOk;
}

int cmd_check(const Options& o, const std::string& src) {
  BialgebraData h = build_document(load(src, o));
  AxiomReport r = check_axioms(h);
  json j{{"ok", r.ok()}, {"checked", r.checked}, {"failures", json::array()}};
  for (const auto& f : r.failures) j["failures"].push_back({{"axiom", f.axiom}, {"degree", f.degree}});
  emit(o, j, r.to_string(h.basis()));
  return r.ok() ? kOk : kFalse;
}

int cmd_iso(const Options& o, const std::string& a, const std::string& b) {
  PresentationDocument da = load(a, o), db = load(b, o);
  IsoVerdict v;
  std::string route;
  if (da.kind == DocumentKind::Algebra && db.kind == DocumentKind::Algebra) {
    v = iso_test_jvee(algebra_of(da), algebra_of(db));
    route = "quasi-shuffle algebras";
  } else if (da.kind == DocumentKind::Coalgebra && db.kind == DocumentKind::Coalgebra) {
    v = iso_test_j(coalgebra_of(da), coalgebra_of(db));
    route = "free Hopf algebras on coalgebras";
  } else {
    v = iso_test_hopf(build_document(da), build_document(db));
    route = "Hopf algebras";
  }
  json j{{"route", route}, {"verdict", to_string(v.verdict)}, {"evidence", v.evidence}};
  if (v.left) j["left"] = v.left->to_string();
  if (v.right) j["right"] = v.right->to_string();
  emit(o, j, "isomorphic (" + route + "): " + to_string(v.verdict) + "\n" + v.evidence + "\n");
  return v.is_true() ? kOk : kFalse;
}

int cmd_split(const Options& o, const std::string& src) {
  BialgebraData h = build_document(load(src, o));
  SplitnessCertificate c = is_split(h);
  json j{{"split", c.split}, {"certificate", c.to_string()}};
  if (!c.split) j["failure_degree"] = c.failure_degree;
  std::string text = c.to_string() + "\n";
  if (c.split && c.section) {
    auto q = indecomposables_Q(h);
    json sec = json::array();
    for (int d = 1; d <= h.bound(); ++d) {
      const int k = q.dim(d);
      for (int i = 0; i < k; ++i) {
        Element rep = q.section(d, i);
        Element img = detail::vector_to_element(h.basis(), d, c.section->block(d).column(i));
        std::string line = "s(" + format_element(h.basis(), rep) + ") = " + format_element(h.basis(), img);
        sec.push_back(line);
        text += "  " + line + "\n";
      }
    }
    j["section"] = sec;
  }
  emit(o, j, text);
  return c.split ? kOk : kFalse;
}

Decomposition parse_summands(const std::string& text, std::uint32_t p, int bound) {
  Decomposition d(p, bound);
  static const std::regex item(R"(\(\s*(\d+)\s*,\s*(≥|>=)?\s*(\d+|inf)\s*\))");
  std::string rest;
  for (char c : text)
    if (c != '{' && c != '}') rest += c;
  auto begin = std::sregex_iterator(rest.begin(), rest.end(), item);
  int found = 0;
  std::string leftover = std::regex_replace(rest, item, "");
  for (char c : leftover)
    if (c != ',' && !std::isspace(static_cast<unsigned char>(c)))
      throw ValidationError("cli", "summand list must look like (1,2),(2,0)");
  for (auto it = begin; it != std::sregex_iterator(); ++it, ++found) {
    const int n = std::stoi((*it)[1]);
    const bool at_least = (*it)[2].matched || (*it)[3] == "inf";
    const int j = (*it)[3] == "inf" ? 0 : std::stoi((*it)[3]);
    d.add(Summand{n, j, at_least});
  }
  if (found == 0) throw ValidationError("cli", "empty summand list");
  return d;
}

int cmd_construct_h(const Options& o, const std::string& list) {
  const int p = o.characteristic >= 0 ? o.characteristic : 2;
  const int bound = o.truncation >= 0 ? o.truncation : 12;
  if (p == 0) throw DomainError("cli", "construct-h needs a prime characteristic");
  const Field f = Field::prime(static_cast<std::uint32_t>(p));
  Decomposition d = parse_summands(list, f.characteristic(), bound);
  BialgebraData h = construct_H(d, bound);
  const WordStructure& ws = *h.words();
  json gens = json::array();
  std::string text = "H(M) for M = " + d.to_string() + "\n";
  for (std::size_t l = 0; l < ws.letter_labels.size(); ++l) {
    const std::string label = "[" + ws.letter_labels[l] + "]";
    std::string delta = format_tensor(h.basis(), h.coproduct(h.e(label)));
    gens.push_back({{"name", ws.letter_labels[l]}, {"degree", ws.letter_degrees[l]}, {"coproduct", delta}});
    text += "  " + ws.letter_labels[l] + " (degree " + std::to_string(ws.letter_degrees[l]) + "): Δ = " + delta + "\n";
  }
  auto q = indecomposables_Q(h);
  std::string qdec = classify(*q.v_module).to_string();
  text += "  Q = " + qdec + "\n";
  emit(o, json{{"module", d.to_string()}, {"generators", gens}, {"Q", qdec}}, text);
  return kOk;
}

int cmd_lift(const Options& o, const std::string& src, const std::string& elem) {
  BialgebraData h = build_document(load(src, o));
  Element x = parse_element(h, elem);
  try {
    Element lift = find_primitive_lift(h, x);
    std::string s = format_element(h.basis(), lift);
    emit(o, json{{"lift", s}, {"primitive", is_primitive(h, lift)}}, "primitive lift: " + s + "\n");
    return kOk;
  } catch (const SearchFailure& e) {
    json j{{"lift", nullptr}, {"reason", e.what()}};
    if (e.degree()) j["degree"] = *e.degree();
    emit(o, j, std::string("no primitive lift: ") + e.what() + "\n");
    return kFalse;
  }
}

int cmd_borel(const Options& o, const std::string& src) {
  PresentationDocument d = load(src, o);
  BialgebraData h = build_document(d);
  if (!h.is_commutative()) throw ValidationError("cli", "Borel decomposition needs a commutative Hopf algebra");
  BorelDecomposition b = borel_decomposition(h);
  json factors = json::array();
  for (const auto& [f, mult] : b.factors) factors.push_back({{"factor", f.to_string()}, {"multiplicity", mult}});
  emit(o, json{{"factors", factors}, {"decomposition", b.to_string()}}, b.to_string() + "\n");
  return kOk;
}

int cmd_poly(const Options& o, const std::string& src, const std::vector<std::uint32_t>& primes) {
  PresentationDocument d = load(src, o);
  std::vector<PolynomialVerdict> verdicts;
  if (!primes.empty()) {
    if (d.kind != DocumentKind::Algebra) throw ValidationError("cli", "--primes needs an algebra document");
    verdicts = polynomial_criterion_integral(algebra_presentation(d), d.truncation, primes);
  } else {
    verdicts.push_back(polynomial_criterion(commutative_algebra(d)));
  }
  json arr = json::array();
  std::string text;
  bool all = true;
  for (const auto& v : verdicts) {
    all = all && v.polynomial;
    json e{{"prime", v.prime}, {"polynomial", v.polynomial}};
    if (!v.polynomial) {
      e["failure_degree"] = v.failure_degree;
      e["reason"] = v.reason;
    }
    arr.push_back(e);
    text += "p = " + std::to_string(v.prime) + ": " +
            (v.polynomial ? std::string("polynomial") : "not polynomial, " + v.reason + " (degree " + std::to_string(v.failure_degree) + ")") +
            "\n";
  }
  emit(o, json{{"verdicts", arr}}, text);
  return all ? kOk : kFalse;
}

json series_rows(const SeriesProfile& s) {
  json j;
  j["total"] = s.total.coefficients();
  j["chi"] = json::array();
  for (const auto& c : s.coker) j["chi"].push_back(c.coefficients());
  j["chi_inf"] = s.torsion_free.coefficients();
  return j;
}

int cmd_poincare(const Options& o, const std::string& src, int jmax) {
  PresentationDocument d = load(src, o);
  FModule m = frobenius_module(commutative_algebra(d));
  SeriesProfile direct = series_profile(m, jmax);
  SeriesProfile tensor = tensor_algebra_profile(m, jmax);
  RecoveredSeries rec = recover_decomposition(tensor);
  IdentityCheck printed = verify_tensor_identity(m);
  IdentityCheck image = verify_image_identity(m);
  std::string text = "F-module " + classify(m).to_string() + "\n\nprofile:\n" + direct.to_string() +
                     "\ntensor algebra profile:\n" + tensor.to_string() + "\nrecovered from the tensor algebra:\n" +
                     rec.to_string() + "\ncokernel identity: " + printed.to_string() + "\nimage identity: " + image.to_string() + "\n";
  json a = json::array();
  for (std::size_t j = 0; j < rec.a.size(); ++j) {
    json row = json::array();
    for (int n = 0; n <= rec.bound; ++n) row.push_back(rec.determined[j][n] ? json(rec.a[j][n]) : json(nullptr));
    a.push_back(row);
  }
  json j{{"module", classify(m).to_string()},
         {"profile", series_rows(direct)},
         {"tensor_profile", series_rows(tensor)},
         {"recovered", {{"a", a}, {"a_inf_within_bound", rec.a_infinite.coefficients()}}},
         {"cokernel_identity", printed.holds},
         {"image_identity", image.holds}};
  emit(o, j, text);
  return kOk;
}

int cmd_gallery_list(const Options& o) {
  json arr = json::array();
  std::string text;
  for (const auto& name : gallery_names()) {
    const GalleryEntry& e = gallery_entry(name);
    arr.push_back({{"name", name}, {"description", e.description}});
    text += name + "\t" + e.description + "\n";
  }
  emit(o, arr, text);
  return kOk;
}

int cmd_gallery_show(const Options& o, const std::string& name) {
  const GalleryEntry& e = gallery_entry(name);
  const int p = o.characteristic >= 0 ? o.characteristic : e.default_p;
  const int bound = o.truncation >= 0 ? o.truncation : e.default_bound;
  GalleryObject g = e.build(p, bound);
  if (!g.hopf) {
    const BialgebraMorphism& m = *g.morphism;
    json j{{"name", name}, {"description", e.description}, {"coalgebra_map", is_coalgebra_morphism(m)},
           {"bijective", is_degreewise_bijective(m)}};
    emit(o, j, name + ": " + e.description + "\n  coalgebra map: " + (is_coalgebra_morphism(m) ? "yes" : "no") +
                   "\n  degreewise bijective: " + (is_degreewise_bijective(m) ? "yes" : "no") + "\n");
    return kOk;
  }
  PresentationDocument d = gallery_document(name, p, bound);
  std::string dims;
  for (int k = 0; k <= bound; ++k) dims += (k ? " " : "") + std::to_string(g.hopf->basis().dim(k));
  json j{{"name", name}, {"description", e.description}, {"document", to_json(d)}, {"dimensions", dims}};
  emit(o, j, name + ": " + e.description + "\n  dimensions: " + dims + "\n" + to_json(d).dump(2) + "\n");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated graded Hopf algebra toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--char", o.characteristic, "characteristic (0 or a prime)");
  app.add_option("--trunc", o.truncation, "truncation degree N");
  app.add_option("--budget", o.budget, "search budget");
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string src, src2, a, b, list, name;
  int jmax = -1;
  std::vector<std::uint32_t> primes;
  int rc = kOk;

  auto* classify_cmd = app.add_subcommand("classify", "classify the F- or V-module of a presentation");
  classify_cmd->add_option("source", src, "file or gallery:NAME")->required();
  classify_cmd->callback([&] { rc = cmd_classify(o, src); });

  auto* product_cmd = app.add_subcommand("product", "multiply two elements");
  product_cmd->add_option("source", src)->required();
  product_cmd->add_option("a", a)->required();
  product_cmd->add_option("b", b)->required();
  product_cmd->callback([&] { rc = cmd_product(o, src, a, b); });

  auto* coproduct_cmd = app.add_subcommand("coproduct", "coproduct of an element");
  coproduct_cmd->add_option("source", src)->required();
  coproduct_cmd->add_option("element", a)->required();
  coproduct_cmd->callback([&] { rc = cmd_coproduct(o, src, a); });

  auto* check_cmd = app.add_subcommand("check", "verify the Hopf algebra axioms");
  check_cmd->add_option("source", src)->required();
  check_cmd->callback([&] { rc = cmd_check(o, src); });

  auto* iso_cmd = app.add_subcommand("iso", "isomorphism test");
  iso_cmd->add_option("a", src)->required();
  iso_cmd->add_option("b", src2)->required();
  iso_cmd->callback([&] { rc = cmd_iso(o, src, src2); });

  auto* split_cmd = app.add_subcommand("split", "look for a V-equivariant section of H → QH");
  split_cmd->add_option("source", src)->required();
  split_cmd->callback([&] { rc = cmd_split(o, src); });

  auto* construct_cmd = app.add_subcommand("construct-h", "build H(M) for a V-module given as summands (n,j)");
  construct_cmd->add_option("summands", list)->required();
  construct_cmd->callback([&] { rc = cmd_construct_h(o, list); });

  auto* lift_cmd = app.add_subcommand("lift", "primitive lift of an element");
  lift_cmd->add_option("source", src)->required();
  lift_cmd->add_option("element", a)->required();
  lift_cmd->callback([&] { rc = cmd_lift(o, src, a); });

  auto* borel_cmd = app.add_subcommand("borel", "monogenic factors of a commutative Hopf algebra");
  borel_cmd->add_option("source", src)->required();
  borel_cmd->callback([&] { rc = cmd_borel(o, src); });

  auto* poly_cmd = app.add_subcommand("poly", "polynomial criterion");
  poly_cmd->add_option("source", src)->required();
  poly_cmd->add_option("--primes", primes, "reduce an integral presentation mod these primes")->delimiter(',');
  poly_cmd->callback([&] { rc = cmd_poly(o, src, primes); });

  auto* poincare_cmd = app.add_subcommand("poincare", "cokernel series of F and their recovery");
  poincare_cmd->add_option("source", src)->required();
  poincare_cmd->add_option("--j", jmax, "largest j");
  poincare_cmd->callback([&] { rc = cmd_poincare(o, src, jmax); });

  auto* gallery_cmd = app.add_subcommand("gallery", "named objects");
  gallery_cmd->require_subcommand(1);
  gallery_cmd->fallthrough();
  gallery_cmd->add_subcommand("list", "list entries")->callback([&] { rc = cmd_gallery_list(o); });
  auto* show = gallery_cmd->add_subcommand("show", "show one entry");
  show->add_option("name", name)->required();
  show->callback([&] { rc = cmd_gallery_show(o, name); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kInternal;
  } catch (const SearchFailure& e) {
    std::cerr << "search failed: " << e.what() << '\n';
    return kFalse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return rc;
}
