// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "support.hpp"
#include "xres/error.hpp"

namespace xres {
  namespace {

    TEST(Boundary, CyclicOddDimension) {
      auto const c = cyclic_resolution(3, 5);
      auto const& d5 = c.generator(5, 0).boundary;
      EXPECT_EQ(format(d5, c), "c4.[1 - a]");
      EXPECT_EQ(format(c.generator(4, 0).boundary, c), "c3.[1 + a + a^2]");
      EXPECT_EQ(format(c.generator(3, 0).boundary, c), "c2*c2^-1^(a)");  // c2.(1 - a)
    }

    TEST(Boundary, OfIdentities) {
      auto const c = cyclic_resolution(3, 5);
      for (int n = 2; n <= 5; ++n) {
        EXPECT_TRUE(boundary(Element::identity(n, 0), c).is_identity()) << n;
      }
      EXPECT_THROW((void) boundary(Element::identity(1, 0), c), Error);
    }

    TEST(Boundary, RespectsTheAction) {
      auto const c = cyclic_resolution(3, 5);
      Word const a = Word::letter(c.alphabet(), 0);
      for (int n = 3; n <= 5; ++n) {
        auto const x = ModuleElement::generator(n, 0, 0);
        EXPECT_TRUE(equal_elements(boundary(Element(x.act(a)), c), act(boundary(Element(x), c), a), c));
      }
    }

    TEST(Axioms, CyclicToSix) {
      auto const r = check_complex_axioms(cyclic_resolution(3, 6), 6);
      EXPECT_TRUE(r.ok) << r.witness << ": " << r.detail;
      EXPECT_TRUE(r.exact);
    }

    TEST(Axioms, StandardCyclicTwoToFour) {
      auto const p = test::gp("gp< t | t^2 >");
      auto const s = standard_resolution(build_finite_oracle(p, 10), p.generator_names(), 4);
      auto const r = check_complex_axioms(s, 4);
      EXPECT_TRUE(r.ok) << r.witness << ": " << r.detail;
    }

    TEST(Axioms, CorruptedSignIsCaught) {
      auto c = cyclic_resolution(3, 5);
      auto const bad = -c.generator(4, 0).boundary.module() + ModuleElement::generator(3, 0, 0, 2);
      c.set_boundary(4, 0, bad);
      auto const r = check_complex_axioms(c, 5);
      EXPECT_FALSE(r.ok);
      EXPECT_EQ(r.witness, "dim 4: c4");
    }

    TEST(Morphisms, Identity) {
      auto const c = test::share(cyclic_resolution(3, 5));
      auto const id = ComplexMorphism::identity(c);
      EXPECT_TRUE(verify_morphism(id, 5));
      for (int n = 2; n <= 5; ++n) {
        Element const x = n == 2 ? Element(PeifferSequence::generator(0, 0))
                                 : Element(ModuleElement::generator(n, 0, 0));
        EXPECT_EQ(apply_morphism(id, x), x);
      }
    }

    TEST(Morphisms, InversionLiftAndSignFlip) {
      auto const c = test::share(cyclic_resolution(3, 5));
      Word const ainv = Word::letter(c->alphabet(), 0, -1);
      auto const k = lift_morphism(c, c, {ainv}, 5);
      EXPECT_TRUE(verify_morphism(k, 5));
      EXPECT_EQ(apply_morphism(k, Element(Word::letter(c->alphabet(), 0))), Element(ainv));
      // the dimension-2 image must cover a^-3, so c2 itself fails
      ComplexMorphism flipped = k;
      flipped.set_image(2, 0, PeifferSequence::generator(0, 0));
      auto const r = verify_morphism(flipped, 5);
      EXPECT_FALSE(r.ok);
      EXPECT_EQ(r.witness.substr(0, 5), "dim 2");
    }

    TEST(Morphisms, CompositeIsApplicationOfComposites) {
      auto const c = test::share(cyclic_resolution(3, 5));
      auto const k = lift_morphism(c, c, {Word::letter(c->alphabet(), 0, -1)}, 5);
      auto const kk = compose(k, k);
      EXPECT_TRUE(verify_morphism(kk, 5));
      for (int n = 3; n <= 5; ++n) {
        Element const x = ModuleElement::generator(n, 0, 0);
        EXPECT_TRUE(equal_elements(apply_morphism(kk, x), apply_morphism(k, apply_morphism(k, x)), *c));
      }
    }

    TEST(Morphisms, MissingImage) {
      auto const c = test::share(cyclic_resolution(3, 3));
      ComplexMorphism f(c, c);
      try {
        (void) apply_morphism(f, Element(Word::letter(c->alphabet(), 0)));
        FAIL();
      } catch (Error const& e) {
        EXPECT_EQ(e.kind(), ErrorKind::MissingImage);
      }
    }

    TEST(Identities, StandardCyclicTwo) {
      auto const p = test::gp("gp< t | t^2 >");
      auto const s = standard_resolution(build_finite_oracle(p, 10), p.generator_names(), 4);
      auto const ip = identities_presentation(s);
      EXPECT_EQ(ip.generators.size(), 8u);
      EXPECT_EQ(ip.relations.size(), 16u);
      for (auto const& g : ip.generators) {
        EXPECT_TRUE(boundary2(g, s).empty());
      }
    }

    TEST(Identities, TrefoilHasNone) {
      auto const c = test::module_of("gp< a, b | r = a^3*b^-2 >");
      auto const ip = identities_presentation(c);
      EXPECT_TRUE(ip.generators.empty());
      EXPECT_TRUE(ip.relations.empty());
    }

    TEST(Identities, NonIdentityBoundary) {
      CrossedComplex c;
      c.add_object("o");
      c.add_arrow("a", 0, 0);
      c.add_generator(2, "r", 0, Word::letter(c.alphabet(), 0));
      c.add_generator(3, "bad", 0, PeifferSequence::generator(0, 0));
      c.set_top(3);
      try {
        (void) identities_presentation(c);
        FAIL();
      } catch (Error const& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonIdentityBoundary);
      }
    }

    TEST(Dump, RoundTrip) {
      auto const c = cyclic_resolution(3, 5);
      auto const text = print_complex(c);
      auto const back = parse_complex(text);
      EXPECT_EQ(print_complex(back), text);
    }

    TEST(Dump, SyntaxErrorPosition) {
      try {
        (void) parse_complex("objects: o\ndim 1: a : o -> o\ndim 2: r @ o\nd r = a^3 *\n");
        FAIL();
      } catch (SyntaxError const& e) {
        EXPECT_GT(e.position(), 40u);
      }
    }

  }  // namespace
}  // namespace xres
