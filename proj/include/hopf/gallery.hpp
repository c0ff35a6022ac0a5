#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hopf/free_cofree.hpp"
#include "hopf/hopf_ops.hpp"
#include "hopf/monomial.hpp"
#include "hopf/words.hpp"

namespace hopf {

/// A gallery object is a bialgebra, or (for "theta") a map between two.
struct GalleryObject {
  std::string name;
  std::optional<BialgebraData> hopf;
  std::optional<BialgebraMorphism> morphism;

  const BialgebraData& bialgebra() const {
    if (!hopf) throw DomainError("gallery", name + " is a morphism, not a bialgebra");
    return *hopf;
  }
};

struct GalleryEntry {
  std::string name;
  std::string description;
  int default_p = 2;
  int default_bound = 12;
  std::function<GalleryObject(int p, int bound)> build;
};

namespace gallery_detail {

inline Field field_of(int p) {
  if (p < 0) throw ValidationError("gallery", "characteristic must be 0 or a prime");
  return Field::of_characteristic(static_cast<std::uint32_t>(p));
}

inline void require_two(const std::string& name, int p) {
  if (p != 2) throw DomainError("gallery", name + " is defined over F_2 only");
}

// Letters are 0-based; terms are (left word, right word) with coefficient 1.
inline WordTensor coproduct(const Field& f, int letter, std::initializer_list<std::pair<Word, Word>> reduced) {
  WordTensor t = primitive_word_tensor(f, letter);
  for (const auto& [u, v] : reduced) t.add({u, v}, Scalar::one(f));
  return t;
}

inline FreePresentation witt(int j, const Field& f) {
  FreePresentation p;
  p.field = f;
  const int x = p.add_generator("x", 1);
  if (j >= 1) {
    const int y = p.add_generator("y", 2);
    p.coproducts[y] = coproduct(f, y, {{{x}, {x}}});
    if (j >= 2) {
      const int z = p.add_generator("z", 4);
      p.coproducts[z] = coproduct(f, z,
                                  {{{x, y}, {x}}, {{x, x, x}, {x}}, {{y}, {y}}, {{x}, {x, x, x}}, {{x}, {x, y}}});
    }
  }
  return p;
}

// T(x, y, z), |x| = 1, |y| = 2, |z| = 4; which = 1 gives Δz ∋ y⊗y, 2 gives x²⊗x².
inline FreePresentation cautionary(int which, const Field& f) {
  FreePresentation p;
  p.field = f;
  const int x = p.add_generator("x", 1);
  const int y = p.add_generator("y", 2);
  const int z = p.add_generator("z", 4);
  p.coproducts[z] = which == 1 ? coproduct(f, z, {{{y}, {y}}}) : coproduct(f, z, {{{x, x}, {x, x}}});
  return p;
}

inline FreePresentation omega_c(const Field& f) {
  FreePresentation p;
  p.field = f;
  const int x = p.add_generator("x", 1);
  const int z = p.add_generator("z", 4);
  p.coproducts[z] = coproduct(f, z, {{{x, x}, {x, x}}});
  return p;
}

inline FreePresentation loops_cp3(const Field& f) {
  FreePresentation p;
  p.field = f;
  const int y1 = p.add_generator("y1", 2);
  const int y2 = p.add_generator("y2", 4);
  const int y3 = p.add_generator("y3", 6);
  p.coproducts[y2] = coproduct(f, y2, {{{y1}, {y1}}});
  p.coproducts[y3] = coproduct(f, y3, {{{y2}, {y1}}, {{y1}, {y2}}});
  return p;
}

// T(a, y, z) with a standing for x²; Δz carries y⊗y (as in H1).
inline FreePresentation h_sub(const Field& f) {
  FreePresentation p;
  p.field = f;
  p.add_generator("a", 2);
  const int y = p.add_generator("y", 2);
  const int z = p.add_generator("z", 4);
  p.coproducts[z] = coproduct(f, z, {{{y}, {y}}});
  return p;
}

}  // namespace gallery_detail

/// k[t]/(t^{cap+1}) on one generator of the given degree; cap < 0 means no relation.
inline GradedAlgebra truncated_polynomial(const Field& f, const std::string& name, int degree, int cap, int bound) {
  MonomialAlgebraPresentation p;
  p.field = f;
  const int g = p.add_generator(name, degree);
  if (cap >= 0) p.add_power(g, cap + 1);
  return build_algebra(p, bound);
}

/// Divided-power coalgebra: t_k in degree k·degree, Δ(t_k) = Σ_{i+j=k} t_i⊗t_j.
inline GradedCoalgebra divided_power_coalgebra(const Field& f, const std::string& name, int degree, int bound) {
  std::vector<std::vector<std::string>> labels(bound + 1);
  labels[0].push_back("1");
  for (int k = 1; k * degree <= bound; ++k) labels[k * degree].push_back(name + std::to_string(k));
  Basis b(bound, labels);
  std::vector<Tensor2> delta(b.size(), Tensor2(f));
  // Basis index of t_k is k.
  for (int k = 0; k < b.size(); ++k)
    for (int i = 0; i <= k; ++i) delta[k].add({i, k - i}, Scalar::one(f));
  return GradedCoalgebra(f, b, std::move(delta), true);
}

// ---------------------------------------------------------------- Θ

/// One segment x^{2i+ε} y^j z^k of a word in the letters x = 0, y = 1, z = 2.
struct ThetaSegment {
  int x = 0, y = 0, z = 0;
};

/// Splits a word left to right into maximal runs x*, y*, z*; each segment
/// starts a new x-run (possibly empty) after a z-run or a y followed by x.
inline std::vector<ThetaSegment> theta_segments(const Word& w) {
  std::vector<ThetaSegment> out;
  std::size_t i = 0;
  while (i < w.size()) {
    ThetaSegment s;
    while (i < w.size() && w[i] == 0) ++s.x, ++i;
    while (i < w.size() && w[i] == 1) ++s.y, ++i;
    while (i < w.size() && w[i] == 2) ++s.z, ++i;
    if (i < w.size() && w[i] > 2) throw DomainError("gallery", "theta is defined on words in x, y, z");
    out.push_back(s);
  }
  return out;
}

/// Θ(∏ x^{2i+ε} y^j z^k) = ∏ x^{2j+ε} y^i z^k.
inline Word theta_word(const Word& w) {
  Word out;
  for (const auto& s : theta_segments(w)) {
    const int i = s.x / 2, eps = s.x % 2;
    out.insert(out.end(), 2 * s.y + eps, 0);
    out.insert(out.end(), i, 1);
    out.insert(out.end(), s.z, 2);
  }
  return out;
}

inline BialgebraMorphism theta_morphism(int bound) {
  const Field f = Field::prime(2);
  BialgebraMorphism m;
  m.source = build_bialgebra(gallery_detail::cautionary(1, f), bound);
  m.target = build_bialgebra(gallery_detail::cautionary(2, f), bound);
  const WordStructure& sw = *m.source.words();
  const WordStructure& tw = *m.target.words();
  for (const auto& w : sw.words) m.images.push_back(Element::single(f, tw.index_of(theta_word(w))));
  return m;
}

/// The inclusion T(x², y, z) → H1 (which = 1) or → H2 (which = 2), with the
/// sub-Hopf coproduct transported accordingly: in H2 the generator a = x²
/// plays the role y plays in H1.
inline BialgebraMorphism h_sub_inclusion(int which, int bound) {
  const Field f = Field::prime(2);
  BialgebraMorphism m;
  FreePresentation sub = gallery_detail::h_sub(f);
  if (which == 2) {
    const int a = sub.generator("a"), z = sub.generator("z");
    sub.coproducts[z] = gallery_detail::coproduct(f, z, {{{a}, {a}}});
  }
  m.source = build_bialgebra(sub, bound);
  m.target = build_bialgebra(gallery_detail::cautionary(which, f), bound);
  const WordStructure& sw = *m.source.words();
  const WordStructure& tw = *m.target.words();
  for (const auto& w : sw.words) {
    Word image;
    for (int l : w) {
      if (l == 0) image.insert(image.end(), {0, 0});
      else image.push_back(l);
    }
    m.images.push_back(Element::single(f, tw.index_of(image)));
  }
  return m;
}

/// The swap a ↔ y on T(a, y, z), from the H1-flavoured sub-Hopf algebra to
/// the H2-flavoured one.
inline BialgebraMorphism h_sub_swap(int bound) {
  const Field f = Field::prime(2);
  BialgebraMorphism m;
  m.source = h_sub_inclusion(1, bound).source;
  m.target = h_sub_inclusion(2, bound).source;
  const WordStructure& sw = *m.source.words();
  const WordStructure& tw = *m.target.words();
  for (const auto& w : sw.words) {
    Word image = w;
    for (int& l : image) l = l == 0 ? 1 : l == 1 ? 0 : l;
    m.images.push_back(Element::single(f, tw.index_of(image)));
  }
  return m;
}

// ---------------------------------------------------------------- registry

inline const std::vector<GalleryEntry>& gallery_entries() {
  using namespace gallery_detail;
  static const std::vector<GalleryEntry> entries = {
      {"qsym", "quasi-shuffle algebra on k[t], |t| = 2", 2, 12,
       [](int p, int n) {
         const Field f = field_of(p);
         return GalleryObject{"qsym", build_Jvee(truncated_polynomial(f, "t", 2, -1, n), n), std::nullopt};
       }},
      {"nsym", "free algebra on the divided-power coalgebra, |t_k| = 2k", 2, 12,
       [](int p, int n) {
         const Field f = field_of(p);
         return GalleryObject{"nsym", build_J(divided_power_coalgebra(f, "t", 2, n), n), std::nullopt};
       }},
      {"H1", "T(x,y,z), x and y primitive, Δz = z⊗1 + y⊗y + 1⊗z", 2, 12,
       [](int p, int n) {
         require_two("H1", p);
         return GalleryObject{"H1", build_bialgebra(cautionary(1, Field::prime(2)), n), std::nullopt};
       }},
      {"H2", "T(x,y,z), x and y primitive, Δz = z⊗1 + x²⊗x² + 1⊗z", 2, 12,
       [](int p, int n) {
         require_two("H2", p);
         return GalleryObject{"H2", build_bialgebra(cautionary(2, Field::prime(2)), n), std::nullopt};
       }},
      {"theta", "coalgebra isomorphism H1 → H2 on segmented words", 2, 12,
       [](int p, int n) {
         require_two("theta", p);
         return GalleryObject{"theta", std::nullopt, theta_morphism(n)};
       }},
      {"H-sub", "T(a,y,z) with a = x², the sub-Hopf algebra of H1", 2, 12,
       [](int p, int n) {
         require_two("H-sub", p);
         return GalleryObject{"H-sub", build_bialgebra(h_sub(Field::prime(2)), n), std::nullopt};
       }},
      {"witt-1-0", "T(x), x primitive, |x| = 1", 2, 12,
       [](int p, int n) {
         require_two("witt-1-0", p);
         return GalleryObject{"witt-1-0", build_bialgebra(witt(0, Field::prime(2)), n), std::nullopt};
       }},
      {"witt-1-1", "T(x,y), Δy = y⊗1 + x⊗x + 1⊗y", 2, 12,
       [](int p, int n) {
         require_two("witt-1-1", p);
         return GalleryObject{"witt-1-1", build_bialgebra(witt(1, Field::prime(2)), n), std::nullopt};
       }},
      {"witt-1-2", "T(x,y,z) with the length-3 Witt coproduct on z", 2, 12,
       [](int p, int n) {
         require_two("witt-1-2", p);
         return GalleryObject{"witt-1-2", build_bialgebra(witt(2, Field::prime(2)), n), std::nullopt};
       }},
      {"loops-cp2", "quasi-shuffle algebra on k[y]/(y^3), |y| = 2", 2, 12,
       [](int p, int n) {
         const Field f = field_of(p);
         return GalleryObject{"loops-cp2", build_Jvee(truncated_polynomial(f, "y", 2, 2, n), n), std::nullopt};
       }},
      {"qsym-cp2", "alias of loops-cp2", 2, 12,
       [](int p, int n) {
         const Field f = field_of(p);
         return GalleryObject{"qsym-cp2", build_Jvee(truncated_polynomial(f, "y", 2, 2, n), n), std::nullopt};
       }},
      {"loops-cp3", "T(y1,y2,y3), |y_i| = 2i, Δy3 ∋ y2⊗y1 + y1⊗y2", 2, 12,
       [](int p, int n) {
         require_two("loops-cp3", p);
         return GalleryObject{"loops-cp3", build_bialgebra(loops_cp3(Field::prime(2)), n), std::nullopt};
       }},
      {"omega-c", "T(x,z), |x| = 1, Δz = z⊗1 + x²⊗x² + 1⊗z", 2, 12,
       [](int p, int n) {
         require_two("omega-c", p);
         return GalleryObject{"omega-c", build_bialgebra(omega_c(Field::prime(2)), n), std::nullopt};
       }},
  };
  return entries;
}

inline std::vector<std::string> gallery_names() {
  std::vector<std::string> out;
  for (const auto& e : gallery_entries()) out.push_back(e.name);
  return out;
}

inline const GalleryEntry& gallery_entry(const std::string& name) {
  for (const auto& e : gallery_entries())
    if (e.name == name) return e;
  std::string known;
  for (const auto& n : gallery_names()) known += (known.empty() ? "" : ", ") + n;
  throw ValidationError("gallery", "unknown entry " + name + " (available: " + known + ")");
}

inline GalleryObject gallery_build(const std::string& name, int p, int bound) { return gallery_entry(name).build(p, bound); }
inline GalleryObject gallery_build(const std::string& name) {
  const auto& e = gallery_entry(name);
  return e.build(e.default_p, e.default_bound);
}

}  // namespace hopf
