// SPDX-License-Identifier: Apache-2.0

// One PASS/FAIL line per acceptance criterion, with timings. The single
// argument is the path of the property-test executable (criterion 10).

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "xres/cocycle.hpp"
#include "xres/constructions.hpp"
#include "xres/crossed_complex.hpp"
#include "xres/dump.hpp"
#include "xres/error.hpp"
#include "xres/presentation.hpp"
#include "xres/verify.hpp"

namespace {

  using namespace xres;

  struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, std::string const& what) {
      if (!ok) {
        pass = false;
        detail += (detail.empty() ? "" : "; ") + what;
      }
    }
  };

  ComplexPtr share(CrossedComplex c) {
    return std::make_shared<CrossedComplex const>(std::move(c));
  }

  CrossedComplex infinite_cyclic(char const* letter) {
    CrossedComplex c;
    c.add_object("o");
    c.add_arrow(letter, 0, 0);
    c.set_top(2);
    c.set_oracle(make_infinite_cyclic_oracle(c.alphabet(), 0));
    return c;
  }

  Word letter(CrossedComplex const& c, char const* name) {
    return Word::letter(c.alphabet(), *c.find(1, name));
  }

  PeifferSequence cell2(CrossedComplex const& c, char const* name) {
    return PeifferSequence::generator(*c.find(2, name), 0);
  }

  PeifferSequence concat(PeifferSequence a, PeifferSequence const& b) {
    for (auto const& f : b.factors()) {
      a.push(f);
    }
    return a;
  }

  std::string show(Element const& x, CrossedComplex const& c) {
    return format(x, c);
  }

  CrossedComplex standard_of(char const* text, int dim) {
    auto const p = Presentation::parse(text);
    return standard_resolution(build_finite_oracle(p, 100), p.generator_names(), dim);
  }

  // 1 ---------------------------------------------------------------------------------

  Outcome trefoil_amalgam() {
    Outcome o;
    auto const a = share(infinite_cyclic("a"));
    auto const b = share(infinite_cyclic("b"));
    auto const c = share(infinite_cyclic("c"));
    auto const i = lift_morphism(c, a, {power(Word::letter(a->alphabet(), 0), 3)}, 2);
    auto const j = lift_morphism(c, b, {power(Word::letter(b->alphabet(), 0), 2)}, 2);
    AmalgamData const d{a, b, c, std::make_shared<ComplexMorphism const>(i), std::make_shared<ComplexMorphism const>(j)};
    auto const r = retract_to_vertex(amalgam_resolution(d, 4), 0);
    o.require(r.count(2) == 1, "expected one dimension-2 generator");
    for (int n = 3; n <= 4; ++n) {
      o.require(r.count(n) == 0, "generators in dimension " + std::to_string(n));
    }
    if (r.count(2) == 1) {
      Word const w = r.generator(2, 0).boundary.word();
      Word const target = power(letter(r, "a"), 3) * power(letter(r, "b"), -2);
      o.require(cyclically_equivalent(w, target) || cyclically_equivalent(w.inverse(), target),
                "relator " + format(w, r.arrow_names()));
      o.detail = o.pass ? "relator " + format(w, r.arrow_names()) : o.detail;
    }
    return o;
  }

  // 2 ---------------------------------------------------------------------------------

  Outcome klein_bottle() {
    Outcome o;
    auto const z = share(infinite_cyclic("a"));
    Word const a = Word::letter(z->alphabet(), 0);
    auto const k0 = std::make_shared<ComplexMorphism const>(lift_morphism(z, z, {a.inverse()}, 2));
    auto const k1 = std::make_shared<ComplexMorphism const>(lift_morphism(z, z, {a}, 2));
    auto const h = hnn_resolution({z, z, k0, k1}, 4);
    o.require(h.arrow_names() == std::vector<std::string>{"a", "z"}, "dimension-1 generators");
    o.require(h.count(2) == 1, "expected one dimension-2 generator");
    o.require(h.count(3) == 0 && h.count(4) == 0, "generators above dimension 2");
    if (h.count(2) == 1) {
      auto const s = format(h.generator(2, 0).boundary.word(), h.arrow_names());
      o.require(s == "z^-1*a^-1*z*a^-1", "boundary " + s);
      o.detail = o.pass ? "d z#a = " + s : o.detail;
    }
    return o;
  }

  // 3 ---------------------------------------------------------------------------------

  Outcome hnn_of_c3() {
    Outcome o;
    auto const g = share(cyclic_resolution(3, 5));
    Word const a = Word::letter(g->alphabet(), 0);
    auto const k0 = std::make_shared<ComplexMorphism const>(lift_morphism(g, g, {a.inverse()}, 5));
    auto const k1 = std::make_shared<ComplexMorphism const>(lift_morphism(g, g, {a}, 5));
    auto const h = hnn_resolution({g, g, k0, k1}, 5);
    Word const A = letter(h, "a");
    Word const Z = letter(h, "z");

    // lambda_2
    auto const l2 = format(h.generator(2, *h.find(2, "z#a")).boundary.word(), h.arrow_names());
    o.require(l2 == "z^-1*a^-1*z*a^-1", "lambda_2 = " + l2);

    // lambda_3 = (z (x) a^3)^-1 c2^-1 (c2^-1)^z, with z (x) a^3 expanded by the
    // cylinder rule iota (x) bb' = (iota (x) b)^{1 (x) b'} (iota (x) b'). The
    // cell z#a is iota#a rebased along 1 (x) a, so iota (x) a = (z#a)^a.
    auto const t = cell2(h, "z#a").act(A);
    auto const za3 = concat(concat(t.act(power(A, 2)), t.act(A)), t);
    auto const c2 = cell2(h, "c2");
    auto const l3 = concat(concat(za3.inverse(), c2.inverse()), c2.inverse().act(Z));
    auto const& got3 = h.generator(3, *h.find(3, "z#c2")).boundary;
    o.require(got3 == Element(l3), "lambda_3: generated " + show(got3, h) + ", formula " + show(Element(l3), h));

    // lambda_4 = -(z (x) c2 (1 - c)) - c3 - c3^z, literally
    int const zc2 = *h.find(3, "z#c2");
    int const c3 = *h.find(3, "c3");
    Word const one = Word::identity(0);
    ModuleElement literal(3, 0);
    literal.add_term(zc2, one, -1);
    literal.add_term(zc2, A, 1);
    literal.add_term(c3, one, -1);
    literal.add_term(c3, Z, -1);
    auto const& got4 = h.generator(4, *h.find(4, "z#c3")).boundary;
    auto const same = equal_elements(got4, Element(literal), h);
    auto const cycle = equal_elements(boundary(Element(literal), h), Element::identity(2, 0), h);
    o.require(same.equal, "lambda_4: generated " + show(got4, h) + ", literal formula "
                              + show(Element(literal), h) + (cycle.equal ? "" : " is not a cycle (chi_3 of it != 1)"));
    // The same cylinder law with the lifted k0'' in place of inversion.
    ModuleElement corrected(3, 0);
    corrected.add_term(zc2, one, -1);
    corrected.add_term(zc2, A, 1);
    corrected.add_term(c3, one, -1);
    corrected += apply_morphism(*k0, Element(ModuleElement::generator(3, 0, 0))).module().act(Z);
    auto const fixed = equal_elements(got4, Element(corrected), h);
    if (!fixed.equal) {
      o.require(false, "lambda_4 also differs from the law with k0''(c3)");
    } else if (!same.equal) {
      o.detail += "; matches -(z (x) c2(1-c)) - c3 + (k0'' c3)^z with k0''(c3) = "
                  + show(apply_morphism(*k0, Element(ModuleElement::generator(3, 0, 0))), *g);
    }

    auto const r = check_complex_axioms(h, 5);
    o.require(r.ok && r.exact, "axioms: " + r.witness + " " + r.detail);
    return o;
  }

  // 4 ---------------------------------------------------------------------------------

  Outcome standard_resolutions() {
    Outcome o;
    for (auto const* text : {"gp< t | t^2 >", "gp< t | t^3 >"}) {
      auto const c = standard_of(text, 4);
      auto const r = check_complex_axioms(c, 4);
      o.require(r.ok && r.exact, std::string(text) + ": axioms " + r.witness);
      auto const e = check_exactness(to_chain_complex(c, nullptr, 4), 1, 3);
      o.require(e.exact, std::string(text) + ": " + e.detail);
    }
    auto const s3 = standard_of("gp< s, t | s^2, t^3, (s*t)^2 >", 3);
    auto const r = check_complex_axioms(s3, 3);
    o.require(r.ok && r.exact, "S3: axioms " + r.witness);
    if (o.pass) {
      o.detail = "S3 dimension 3 has " + std::to_string(s3.count(3)) + " generators";
    }
    return o;
  }

  // 5 ---------------------------------------------------------------------------------

  Outcome small_cyclic() {
    Outcome o;
    for (int p : {2, 3, 5}) {
      auto const c = cyclic_resolution(p, 6);
      auto const e = check_exactness(to_chain_complex(c, nullptr, 6), 0, 5);
      o.require(e.exact, "C" + std::to_string(p) + ": " + e.detail);
      // H_3 of the group: the coinvariants of the resolution cut after c4
      auto const h = group_homology(to_chain_complex(truncate(c, 4), nullptr, 4), 3, 3);
      o.require(h[0].format() == "C" + std::to_string(p), "C" + std::to_string(p) + ": H3 = " + h[0].format());
    }
    return o;
  }

  // 6 ---------------------------------------------------------------------------------

  Outcome homology_agrees() {
    Outcome o;
    auto const st = group_homology(to_chain_complex(standard_of("gp< a | a^3 >", 4), nullptr, 4), 1, 3);
    auto const sm = group_homology(to_chain_complex(cyclic_resolution(3, 4), nullptr, 4), 1, 3);
    std::string s;
    for (std::size_t n = 0; n < 3; ++n) {
      o.require(st[n] == sm[n], "H" + std::to_string(n + 1) + ": " + st[n].format() + " vs " + sm[n].format());
      s += (n ? ", " : "") + st[n].format();
    }
    o.detail = o.pass ? "H1..H3 = " + s : o.detail;
    return o;
  }

  // 7 ---------------------------------------------------------------------------------

  Outcome trefoil_tensor() {
    Outcome o;
    auto const p = Presentation::parse("gp< a, b | r = a^3*b^-2 >");
    CrossedComplex a = from_presentation(p);
    a.set_oracle(detect_torus_knot(p));
    auto const t = tensor_product(a, a, 4);
    TensorEvaluator th(a, a, t);
    o.require(t.count(1) == 4 && t.count(2) == 6 && t.count(3) == 4 && t.count(4) == 1,
              "inventory " + std::to_string(t.count(1)) + "/" + std::to_string(t.count(2)) + "/"
                  + std::to_string(t.count(3)) + "/" + std::to_string(t.count(4)));
    Element const pt{Point{0}};
    auto const w = [&](int x) { return Element(Word::letter(a.alphabet(), x)); };
    Element const r = PeifferSequence::generator(0, 0);
    Element const dr = a.generator(2, 0).boundary;
    // chi_2(a (x) b) = (o (x) b)^-1 (a (x) o)^-1 (o (x) b) (a (x) o)
    auto const s2 = format(t.generator(2, *t.find(2, "a#b")).boundary, t);
    o.require(s2 == "o#b^-1*a#o^-1*o#b*a#o", "chi_2(a#b) = " + s2);
    for (int x = 0; x < 2; ++x) {
      auto const name = a.arrows()[static_cast<std::size_t>(x)].name;
      Element const rx = compose(compose(negate(th(r, pt)), act(th(r, pt), th(pt, w(x)).word())), th(dr, w(x)));
      o.require(bool(equal_elements(t.generator(3, *t.find(3, "r#" + name)).boundary, rx, t)), "chi_3(r#" + name + ")");
      Element const xs = compose(compose(negate(th(w(x), dr)), negate(th(pt, r))), act(th(pt, r), th(w(x), pt).word()));
      o.require(bool(equal_elements(t.generator(3, *t.find(3, name + "#r")).boundary, xs, t)), "chi_3(" + name + "#r)");
    }
    Element const rs = compose(th(dr, r), th(r, dr));
    o.require(bool(equal_elements(t.generator(4, 0).boundary, rs, t)), "chi_4(r#r)");
    auto const chk = check_complex_axioms(t, 4);
    o.require(chk.ok && chk.exact, "chi chi: " + chk.witness + " " + chk.detail);
    if (o.pass) {
      o.detail = "d3 d4 = 1 decided over the trefoil group squared";
    }
    return o;
  }

  // 8 ---------------------------------------------------------------------------------

  Outcome c2_squared() {
    Outcome o;
    auto const t = tensor_product(cyclic_resolution(2, 4), cyclic_resolution(2, 4), 3);
    auto const h = group_homology(to_chain_complex(t, nullptr, 3), 0, 2);
    o.require(h[0].format() == "Z", "H0 = " + h[0].format());
    o.require(h[1].format() == "C2 + C2", "H1 = " + h[1].format());
    auto const e = check_exactness(to_chain_complex(t, nullptr, 3), 0, 2);
    o.require(e.exact, e.detail);
    o.detail = o.pass ? "H0 = Z, H1 = C2 + C2, H2 = " + h[2].format() : o.detail;
    return o;
  }

  // 9 ---------------------------------------------------------------------------------

  Outcome cocycles() {
    Outcome o;
    auto const kp = Presentation::parse("gp< k | k^3 >");
    auto const m = automorphism_oracle(build_finite_oracle(kp, 10));
    auto const g = cyclic_resolution(2, 3);
    int const inversion = m.aut.order() == 2 ? 1 : 0;
    auto const s3 = build_extension({{inversion}, {0}}, g, m);
    o.require(s3.table && s3.table->order() == 6 && find_isomorphism(*s3.table, FiniteGroup::symmetric(3)),
              "inversion action: " + s3.identified);
    auto const c6 = build_extension({{0}, {0}}, g, m);
    o.require(c6.table && c6.table->order() == 6 && find_isomorphism(*c6.table, FiniteGroup::cyclic(6)),
              "trivial action: " + c6.identified);

    // the trefoil: s in K = S3, c = k1(a), d = k1(b) with d(s) = c^3 d^-2
    auto const a = share(infinite_cyclic("a"));
    auto const b = share(infinite_cyclic("b"));
    auto const c = share(infinite_cyclic("c"));
    auto const i = lift_morphism(c, a, {power(Word::letter(a->alphabet(), 0), 3)}, 2);
    auto const j = lift_morphism(c, b, {power(Word::letter(b->alphabet(), 0), 2)}, 2);
    AmalgamData const d{a, b, c, std::make_shared<ComplexMorphism const>(i), std::make_shared<ComplexMorphism const>(j)};
    auto const f = retract_to_vertex(amalgam_resolution(d, 3), 0);
    auto const sp = Presentation::parse("gp< s, t | s^2, t^3, (s*t)^2 >");
    auto const k = automorphism_oracle(build_finite_oracle(sp, 10));
    int const s = static_cast<int>(k.kernel->index_of(sp.parse_word("s", 0)));
    CocycleData const data{{k.boundary[static_cast<std::size_t>(s)], 0}, {s}};
    auto const r = verify_cocycle(data, f, k);
    o.require(r.ok, "trefoil: " + r.witness + " " + r.detail);
    if (r.ok) {
      auto const e = build_extension(data, f, k);
      o.require(e.presentation.relators().size() > 0, "no presentation");
      o.detail = o.pass ? "trefoil extension " + e.presentation.print() : o.detail;
    }
    return o;
  }

  // 10 --------------------------------------------------------------------------------

  Outcome properties(std::string const& exe) {
    Outcome o;
    if (exe.empty()) {
      o.require(false, "no property-test executable given");
      return o;
    }
    int const rc = std::system(("\"" + exe + "\" --gtest_brief=1 > /dev/null 2>&1").c_str());
    o.require(rc == 0, "property tests exited with status " + std::to_string(rc));
    return o;
  }

}  // namespace

int main(int argc, char** argv) {
  std::string const exe = argc > 1 ? argv[1] : "";
  struct Criterion {
    char const* title;
    double limit_s;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> const criteria{
      {"trefoil amalgam retracts to a^3 b^-2", 1, trefoil_amalgam},
      {"Klein bottle HNN", 1, klein_bottle},
      {"L = *_k C_3 boundaries lambda_2..lambda_4", 5, hnn_of_c3},
      {"standard resolutions of C2, C3, S3", 120, standard_resolutions},
      {"small C_p resolutions exact, H3 = C_p", 60, small_cyclic},
      {"standard and small C3 homology agree", 120, homology_agrees},
      {"trefoil tensor square", 5, trefoil_tensor},
      {"C2 (x) C2 homology", 60, c2_squared},
      {"cocycles and extensions", 10, cocycles},
      {"property suites", 120, [&] { return properties(exe); }},
  };
  int failures = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    auto const& c = criteria[n];
    auto const start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (std::exception const& e) {
      out.pass = false;
      out.detail = std::string("error: ") + e.what();
    }
    double const s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (s > c.limit_s) {
      out.require(false, "over the time limit");
    }
    std::ostringstream line;
    line << (out.pass ? "PASS" : "FAIL") << ' ' << n + 1 << ": " << c.title << " (" << static_cast<int>(s * 1000)
         << " ms)";
    if (!out.detail.empty()) {
      line << " -- " << out.detail;
    }
    std::cout << line.str() << std::endl;
    failures += out.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
