#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hopf/errors.hpp"
#include "hopf/free_cofree.hpp"
#include "hopf/gallery.hpp"
#include "hopf/monomial.hpp"
#include "hopf/words.hpp"

namespace hopf {

enum class DocumentKind { Algebra, Coalgebra, FreeHopf };

inline std::string to_string(DocumentKind k) {
  switch (k) {
    case DocumentKind::Algebra: return "algebra";
    case DocumentKind::Coalgebra: return "coalgebra";
    case DocumentKind::FreeHopf: return "free-hopf";
  }
  return "?";
}

/// On-disk presentation, schema 1.
///   algebra:    commutative monomial algebra A, read as J^∨(A)
///   coalgebra:  basis elements with reduced coproducts, read as J(C)
///   free-hopf:  T(generators) with reduced generator coproducts
struct PresentationDocument {
  struct Generator {
    std::string name;
    int degree = 1;
  };

  DocumentKind kind = DocumentKind::FreeHopf;
  int characteristic = 2;
  int truncation = 12;
  std::vector<Generator> generators;
  std::vector<std::string> relations;
  std::vector<std::pair<std::string, std::string>> coproducts;
  bool commutative = true;
  bool cocommutative = true;

  Field field() const {
    if (characteristic < 0 || (characteristic > 0 && !Field::is_prime(static_cast<std::uint32_t>(characteristic))))
      throw ValidationError("cli", "characteristic must be 0 or a prime, got " + std::to_string(characteristic));
    return Field::of_characteristic(static_cast<std::uint32_t>(characteristic));
  }
};

// ---------------------------------------------------------------- combinations

/// One term of a parsed linear combination: coefficient and one or two atoms
/// (two for a tensor u⊗v).
struct ParsedTerm {
  Rational coefficient;
  std::vector<std::string> atoms;
};

namespace detail {

inline bool starts_with_at(const std::string& s, std::size_t i, const std::string& t) { return s.compare(i, t.size(), t) == 0; }

inline void skip_space(const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline std::string read_atom(const std::string& s, std::size_t& i) {
  skip_space(s, i);
  if (i >= s.size()) throw ValidationError("cli", "expected a basis element at the end of \"" + s + "\"");
  std::string out;
  if (s[i] == '[') {
    for (; i < s.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(s[i]))) continue;
      out += s[i];
      if (s[i] == ']') {
        ++i;
        return out;
      }
    }
    throw ValidationError("cli", "unterminated word in \"" + s + "\"");
  }
  while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != '+' && s[i] != '-' &&
         !starts_with_at(s, i, "⊗") && !starts_with_at(s, i, "(x)"))
    out += s[i++];
  if (out.empty()) throw ValidationError("cli", "expected a basis element in \"" + s + "\"");
  return out;
}

}  // namespace detail

/// Parses Σ ±c·atom or Σ ±c·atom⊗atom. Words are written [a|b|c]; ⊗ may be
/// typed as (x); coefficients are integers or fractions n/d.
inline std::vector<ParsedTerm> parse_combination(const std::string& s) {
  std::vector<ParsedTerm> out;
  std::size_t i = 0;
  detail::skip_space(s, i);
  if (s.substr(i) == "0") return out;
  bool first = true;
  while (true) {
    detail::skip_space(s, i);
    if (i >= s.size()) break;
    Rational sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
      detail::skip_space(s, i);
    } else if (!first) {
      throw ValidationError("cli", "expected + or - in \"" + s + "\"");
    }
    Rational c = 1;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t j = i;
      while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
      std::string num = s.substr(i, j - i);
      // A bare "1" is the unit, not a coefficient.
      std::size_t k = j;
      detail::skip_space(s, k);
      const bool is_coefficient = k < s.size() && (s[k] == '[' || s[k] == '*' || std::isalpha(static_cast<unsigned char>(s[k])));
      if (is_coefficient) {
        const auto slash = num.find('/');
        try {
          c = slash == std::string::npos ? Rational(Integer(num))
                                         : Rational(Integer(num.substr(0, slash))) / Rational(Integer(num.substr(slash + 1)));
        } catch (const std::exception&) {
          throw ValidationError("cli", "bad coefficient " + num);
        }
        i = k;
        if (s[i] == '*') ++i;
      }
    }
    ParsedTerm t{sign * c, {detail::read_atom(s, i)}};
    detail::skip_space(s, i);
    if (detail::starts_with_at(s, i, "⊗") || detail::starts_with_at(s, i, "(x)")) {
      i += detail::starts_with_at(s, i, "⊗") ? std::string("⊗").size() : 3;
      t.atoms.push_back(detail::read_atom(s, i));
    }
    out.push_back(std::move(t));
    first = false;
  }
  return out;
}

namespace detail {

inline int lookup_basis(const Basis& b, const std::string& atom) {
  if (b.has_label(atom)) return b.index_of(atom);
  if (atom == "1" && b.has_label("[]")) return b.index_of("[]");
  if (atom == "[]" && b.has_label("1")) return b.index_of("1");
  if (atom.front() != '[' && b.has_label("[" + atom + "]")) return b.index_of("[" + atom + "]");
  if (atom.front() == '[' && atom.back() == ']' && b.has_label(atom.substr(1, atom.size() - 2)))
    return b.index_of(atom.substr(1, atom.size() - 2));
  throw ValidationError("cli", "unknown basis element " + atom);
}

inline Word parse_word(const std::vector<std::string>& letters, const std::string& atom) {
  if (atom == "1" || atom == "[]") return {};
  std::string body = atom;
  if (body.front() == '[') {
    if (body.back() != ']') throw ValidationError("cli", "malformed word " + atom);
    body = body.substr(1, body.size() - 2);
  }
  Word w;
  std::size_t start = 0;
  while (true) {
    const std::size_t bar = body.find('|', start);
    const std::string name = body.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
    auto it = std::find(letters.begin(), letters.end(), name);
    if (it == letters.end()) throw ValidationError("cli", "unknown generator " + name + " in " + atom);
    w.push_back(static_cast<int>(it - letters.begin()));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return w;
}

inline Scalar to_scalar(const Field& f, const Rational& q) { return Scalar::from_rational(f, q); }

}  // namespace detail

/// An element of h from text such as "[y|y] + 2[x]".
inline Element parse_element(const BialgebraData& h, const std::string& text) {
  Element x(h.field());
  for (const auto& t : parse_combination(text)) {
    if (t.atoms.size() != 1) throw ValidationError("cli", "expected an element, got a tensor in \"" + text + "\"");
    x.add(detail::lookup_basis(h.basis(), t.atoms[0]), detail::to_scalar(h.field(), t.coefficient));
  }
  return x;
}

inline WordTensor parse_word_tensor(const Field& f, const std::vector<std::string>& letters, const std::string& text) {
  WordTensor r(f);
  for (const auto& t : parse_combination(text)) {
    if (t.atoms.size() != 2) throw ValidationError("cli", "expected u⊗v terms in \"" + text + "\"");
    r.add({detail::parse_word(letters, t.atoms[0]), detail::parse_word(letters, t.atoms[1])}, detail::to_scalar(f, t.coefficient));
  }
  return r;
}

inline std::string format_word_tensor(const std::vector<std::string>& letters, const WordTensor& t) {
  if (t.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : t) {
    s += detail::coefficient_prefix(c, first) + word_label(letters, k.first) + "⊗" + word_label(letters, k.second);
    first = false;
  }
  return s;
}

// ---------------------------------------------------------------- documents

inline nlohmann::json to_json(const PresentationDocument& d) {
  nlohmann::json j;
  j["schema"] = 1;
  j["kind"] = to_string(d.kind);
  j["characteristic"] = d.characteristic;
  j["truncation"] = d.truncation;
  j["generators"] = nlohmann::json::array();
  for (const auto& g : d.generators) j["generators"].push_back({{"name", g.name}, {"degree", g.degree}});
  if (d.kind == DocumentKind::Algebra) {
    j["relations"] = d.relations;
    j["commutative"] = d.commutative;
  } else {
    j["coproducts"] = nlohmann::json::object();
    for (const auto& [g, t] : d.coproducts) j["coproducts"][g] = t;
    j["cocommutative"] = d.cocommutative;
  }
  return j;
}

inline PresentationDocument document_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw ValidationError("cli", "presentation must be a JSON object");
    if (j.value("schema", 0) != 1) throw ValidationError("cli", "unsupported presentation schema (expected 1)");
    PresentationDocument d;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "algebra") d.kind = DocumentKind::Algebra;
    else if (kind == "coalgebra") d.kind = DocumentKind::Coalgebra;
    else if (kind == "free-hopf") d.kind = DocumentKind::FreeHopf;
    else throw ValidationError("cli", "unknown kind " + kind);
    d.characteristic = j.value("characteristic", 2);
    d.truncation = j.value("truncation", 12);
    if (d.truncation < 0) throw ValidationError("cli", "negative truncation");
    d.field();
    for (const auto& g : j.at("generators")) {
      PresentationDocument::Generator gen{g.at("name").get<std::string>(), g.at("degree").get<int>()};
      if (gen.degree <= 0) throw ValidationError("cli", "generator " + gen.name + " needs a positive degree", gen.degree);
      if (gen.name.empty() || gen.name.find_first_of("[]|+- ") != std::string::npos)
        throw ValidationError("cli", "bad generator name \"" + gen.name + "\"");
      d.generators.push_back(gen);
    }
    if (j.contains("relations")) d.relations = j.at("relations").get<std::vector<std::string>>();
    if (j.contains("coproducts"))
      for (const auto& [k, v] : j.at("coproducts").items()) d.coproducts.emplace_back(k, v.get<std::string>());
    d.commutative = j.value("commutative", true);
    d.cocommutative = j.value("cocommutative", true);
    if (d.kind == DocumentKind::Algebra && !d.coproducts.empty())
      throw ValidationError("cli", "an algebra document takes relations, not coproducts");
    if (d.kind != DocumentKind::Algebra && !d.relations.empty())
      throw ValidationError("cli", d.kind == DocumentKind::Coalgebra ? "a coalgebra document takes coproducts, not relations"
                                                                    : "free-hopf documents take coproducts, not relations");
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("cli", std::string("malformed presentation: ") + e.what());
  }
}

inline PresentationDocument parse_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("cli", std::string("presentation is not JSON: ") + e.what());
  }
  return document_from_json(j);
}

inline PresentationDocument read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cli", "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

namespace detail {

inline std::vector<std::string> generator_names(const PresentationDocument& d) {
  std::vector<std::string> out;
  for (const auto& g : d.generators) out.push_back(g.name);
  return out;
}

inline int generator_degree(const PresentationDocument& d, const std::string& name) {
  for (const auto& g : d.generators)
    if (g.name == name) return g.degree;
  throw ValidationError("cli", "coproduct given for unknown generator " + name);
}

inline void require_kind(const PresentationDocument& d, DocumentKind k) {
  if (d.kind != k) throw ValidationError("cli", "expected a " + to_string(k) + " document, got " + to_string(d.kind));
}

}  // namespace detail

inline FreePresentation free_presentation(const PresentationDocument& d) {
  detail::require_kind(d, DocumentKind::FreeHopf);
  FreePresentation p;
  p.field = d.field();
  for (const auto& g : d.generators) p.add_generator(g.name, g.degree);
  const auto names = detail::generator_names(d);
  for (const auto& [name, text] : d.coproducts) {
    const int g = p.generator(name);
    WordTensor reduced = parse_word_tensor(p.field, names, text);
    for (const auto& [k, c] : reduced) {
      if (k.first.empty() || k.second.empty())
        throw ValidationError("cli", "coproduct of " + name + " must list reduced terms only", p.degrees[g]);
      int deg = 0;
      for (int l : k.first) deg += p.degrees[l];
      for (int l : k.second) deg += p.degrees[l];
      if (deg != p.degrees[g]) throw ValidationError("cli", "coproduct of " + name + " is not homogeneous", deg);
    }
    WordTensor full = primitive_word_tensor(p.field, g);
    full += reduced;
    p.coproducts[g] = full;
  }
  return p;
}

inline MonomialAlgebraPresentation algebra_presentation(const PresentationDocument& d) {
  detail::require_kind(d, DocumentKind::Algebra);
  MonomialAlgebraPresentation p;
  p.field = d.field();
  p.commutative = d.commutative;
  for (const auto& g : d.generators) p.add_generator(g.name, g.degree);
  for (const auto& rel : d.relations) {
    std::string r;
    for (char ch : rel)
      if (!std::isspace(static_cast<unsigned char>(ch))) r += ch;
    const auto star = r.find('*');
    if (star != std::string::npos) {
      const std::string a = r.substr(0, star), b = r.substr(star + 1);
      if (a.find('^') != std::string::npos || b.find('^') != std::string::npos || b.find('*') != std::string::npos)
        throw ValidationError("cli", "relation " + rel + " is not a power or a product of two generators");
      if (a == b) p.add_power(p.generator(a), 2);
      else p.add_pair(p.generator(a), p.generator(b));
      continue;
    }
    const auto caret = r.find('^');
    if (caret == std::string::npos) {
      p.add_power(p.generator(r), 1);
      continue;
    }
    int e = 0;
    try {
      e = std::stoi(r.substr(caret + 1));
    } catch (const std::exception&) {
      throw ValidationError("cli", "bad exponent in relation " + rel);
    }
    p.add_power(p.generator(r.substr(0, caret)), e);
  }
  return p;
}

/// The coalgebra of a coalgebra document, basis 1 followed by the generators
/// in degree order.
inline GradedCoalgebra coalgebra_of(const PresentationDocument& d) {
  detail::require_kind(d, DocumentKind::Coalgebra);
  const Field f = d.field();
  const int bound = d.truncation;
  std::vector<std::vector<std::string>> labels(bound + 1);
  labels[0].push_back("1");
  for (const auto& g : d.generators) {
    if (g.name == "1") throw ValidationError("cli", "the label 1 is reserved for the counit");
    if (g.degree <= bound) labels[g.degree].push_back(g.name);
  }
  Basis b(bound, labels);
  std::vector<Tensor2> delta(b.size(), Tensor2(f));
  delta[0].add({0, 0}, Scalar::one(f));
  for (int i = 1; i < b.size(); ++i) {
    delta[i].add({i, 0}, Scalar::one(f));
    delta[i].add({0, i}, Scalar::one(f));
  }
  for (const auto& [name, text] : d.coproducts) {
    const int deg = detail::generator_degree(d, name);
    if (deg > bound) continue;
    const int i = b.index_of(name);
    for (const auto& t : parse_combination(text)) {
      if (t.atoms.size() != 2) throw ValidationError("cli", "expected u⊗v terms in the coproduct of " + name);
      const int u = detail::lookup_basis(b, t.atoms[0]), v = detail::lookup_basis(b, t.atoms[1]);
      if (u == 0 || v == 0) throw ValidationError("cli", "coproduct of " + name + " must list reduced terms only", deg);
      if (b.degree(u) + b.degree(v) != deg) throw ValidationError("cli", "coproduct of " + name + " is not homogeneous", deg);
      delta[i].add({u, v}, detail::to_scalar(f, t.coefficient));
    }
  }
  return GradedCoalgebra(f, b, std::move(delta), d.cocommutative);
}

inline GradedAlgebra algebra_of(const PresentationDocument& d) { return build_algebra(algebra_presentation(d), d.truncation); }

/// The Hopf algebra a document stands for: J^∨(A), J(C) or T(V).
inline BialgebraData build_document(const PresentationDocument& d) {
  switch (d.kind) {
    case DocumentKind::Algebra: return build_Jvee(algebra_of(d), d.truncation);
    case DocumentKind::Coalgebra: return build_J(coalgebra_of(d), d.truncation);
    case DocumentKind::FreeHopf: return build_bialgebra(free_presentation(d), d.truncation, d.cocommutative);
  }
  throw ValidationError("cli", "unknown document kind");
}

inline PresentationDocument document_from(const FreePresentation& p, int bound, bool cocommutative = true) {
  PresentationDocument d;
  d.kind = DocumentKind::FreeHopf;
  d.characteristic = static_cast<int>(p.field.characteristic());
  d.truncation = bound;
  d.cocommutative = cocommutative;
  for (std::size_t g = 0; g < p.names.size(); ++g) d.generators.push_back({p.names[g], p.degrees[g]});
  for (std::size_t g = 0; g < p.names.size(); ++g) {
    WordTensor reduced(p.field);
    for (const auto& [k, c] : p.coproducts[g])
      if (!k.first.empty() && !k.second.empty()) reduced.add(k, c);
    if (!reduced.is_zero()) d.coproducts.emplace_back(p.names[g], format_word_tensor(p.names, reduced));
  }
  return d;
}

inline PresentationDocument document_from(const MonomialAlgebraPresentation& p, int bound) {
  PresentationDocument d;
  d.kind = DocumentKind::Algebra;
  d.characteristic = static_cast<int>(p.field.characteristic());
  d.truncation = bound;
  d.commutative = p.commutative;
  for (std::size_t g = 0; g < p.names.size(); ++g) d.generators.push_back({p.names[g], p.degrees[g]});
  for (const auto& pw : p.powers) d.relations.push_back(p.names[pw.generator] + "^" + std::to_string(pw.exponent));
  for (const auto& pr : p.pairs) d.relations.push_back(p.names[pr.first] + "*" + p.names[pr.second]);
  return d;
}

inline PresentationDocument document_from(const GradedCoalgebra& c) {
  PresentationDocument d;
  d.kind = DocumentKind::Coalgebra;
  d.characteristic = static_cast<int>(c.field().characteristic());
  d.truncation = c.bound();
  d.cocommutative = c.is_cocommutative();
  const Basis& b = c.basis();
  for (int i = 1; i < b.size(); ++i) d.generators.push_back({b.label(i), b.degree(i)});
  for (int i = 1; i < b.size(); ++i) {
    Tensor2 r = c.reduced(basis_element(c.field(), i));
    if (r.is_zero()) continue;
    std::string s;
    bool first = true;
    for (const auto& [k, v] : r) {
      s += detail::coefficient_prefix(v, first) + "[" + b.label(k.first) + "]⊗[" + b.label(k.second) + "]";
      first = false;
    }
    d.coproducts.emplace_back(b.label(i), s);
  }
  return d;
}

/// The presentation behind a gallery bialgebra. Θ is a map and has none.
inline PresentationDocument gallery_document(const std::string& name, int p, int bound) {
  gallery_entry(name);
  const Field f = gallery_detail::field_of(p);
  auto two = [&]() {
    gallery_detail::require_two(name, p);
    return Field::prime(2);
  };
  auto poly = [&](const std::string& g, int cap) {
    MonomialAlgebraPresentation a;
    a.field = f;
    const int i = a.add_generator(g, 2);
    if (cap >= 0) a.add_power(i, cap + 1);
    return document_from(a, bound);
  };
  if (name == "qsym") return poly("t", -1);
  if (name == "loops-cp2" || name == "qsym-cp2") return poly("y", 2);
  if (name == "nsym") return document_from(divided_power_coalgebra(f, "t", 2, bound));
  if (name == "H1") return document_from(gallery_detail::cautionary(1, two()), bound);
  if (name == "H2") return document_from(gallery_detail::cautionary(2, two()), bound);
  if (name == "H-sub") return document_from(gallery_detail::h_sub(two()), bound);
  if (name == "witt-1-0") return document_from(gallery_detail::witt(0, two()), bound);
  if (name == "witt-1-1") return document_from(gallery_detail::witt(1, two()), bound);
  if (name == "witt-1-2") return document_from(gallery_detail::witt(2, two()), bound);
  if (name == "loops-cp3") return document_from(gallery_detail::loops_cp3(two()), bound);
  if (name == "omega-c") return document_from(gallery_detail::omega_c(two()), bound);
  throw ValidationError("gallery", name + " is a morphism and has no presentation document");
}

}  // namespace hopf
