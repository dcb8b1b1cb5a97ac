// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "support.hpp"
#include "xres/error.hpp"

namespace xres {
  namespace {

    TEST(Parse, Trefoil) {
      auto const p = Presentation::parse("gp< a,b | r = a^3*b^-2 >");
      ASSERT_EQ(p.generator_names(), (std::vector<std::string>{"a", "b"}));
      ASSERT_EQ(p.relators().size(), 1u);
      EXPECT_EQ(p.relators()[0].name, "r");
      EXPECT_EQ(format(p.relators()[0].word, p.generator_names()), "a^3*b^-2");
      EXPECT_TRUE(p.validate().clean());
    }

    TEST(Parse, CyclicThree) {
      auto const p = Presentation::parse("gp< c | r = c^3 >");
      EXPECT_EQ(format(p.relators()[0].word, p.generator_names()), "c^3");
    }

    TEST(Parse, UnknownGeneratorIsASyntaxError) {
      try {
        (void) Presentation::parse("gp< a | r = b >");
        FAIL() << "expected a syntax error";
      } catch (SyntaxError const& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SyntaxError);
        EXPECT_EQ(e.position(), 12u);
      }
    }

    TEST(Parse, PowersParenthesesAndAutoNames) {
      auto const p = Presentation::parse("gp< s, t | s^2, t^3, (s*t)^2 >");
      ASSERT_EQ(p.relators().size(), 3u);
      EXPECT_EQ(p.relators()[2].name, "r3");
      EXPECT_EQ(format(p.relators()[2].word, p.generator_names()), "s*t*s*t");
    }

    TEST(Parse, Groupoid) {
      auto const p = Presentation::parse("obj< 0, 1 > gp< a : 0 -> 0, iota : 0 -> 1, b : 1 -> 1 | "
                                         "r = iota^-1*a^3*iota*b^-2 >");
      EXPECT_EQ(p.objects().size(), 2u);
      EXPECT_EQ(p.relators()[0].word.source(), 1);
    }

    TEST(Parse, NonLoopRelator) {
      try {
        (void) Presentation::parse("obj< p, q > gp< g : p -> q | r = g >");
        FAIL();
      } catch (Error const& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonLoopRelator);
      }
    }

    TEST(Validate, DuplicateImages) {
      auto const p = Presentation::parse("gp< a | r = a^2, s = a^2 >");
      ASSERT_FALSE(p.validate().clean());
    }

    TEST(Validate, EmptyRelator) {
      auto const p = Presentation::parse("gp< a | r = a*a^-1 >");
      EXPECT_FALSE(p.validate().clean());
    }

    TEST(Print, RoundTrip) {
      for (auto const* text : {"gp< a, b | r = a^3*b^-2 >", "gp< s, t | r1 = s^2, r2 = t^3, r3 = s*t*s*t >",
                               "gp< a >"}) {
        auto const p = Presentation::parse(text);
        auto const printed = p.print();
        EXPECT_EQ(Presentation::parse(printed).print(), printed);
        EXPECT_EQ(printed, text);
      }
    }

  }  // namespace
}  // namespace xres
