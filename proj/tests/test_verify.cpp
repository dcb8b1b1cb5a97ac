// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "support.hpp"
#include "xres/error.hpp"
#include "xres/verify.hpp"

namespace xres {
  namespace {

    template <class F>
    ErrorKind kind_of(F&& f) {
      try {
        f();
      } catch (Error const& e) {
        return e.kind();
      }
      ADD_FAILURE() << "no error raised";
      return ErrorKind::Io;
    }

    IntMatrix matrix(std::vector<std::vector<int>> const& rows) {
      IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
      for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
          m(i, j) = rows[i][j];
        }
      }
      return m;
    }

    IntMatrix diagonal(SnfResult const& s, std::size_t rows, std::size_t cols) {
      IntMatrix d(rows, cols);
      for (std::size_t k = 0; k < s.diagonal.size(); ++k) {
        d(k, k) = s.diagonal[k];
      }
      return d;
    }

    // --- Fox calculus -------------------------------------------------------------

    class TrefoilFox : public ::testing::Test {
     protected:
      Presentation p = test::gp("gp< a, b | r = a^3*b^-2 >");
      OraclePtr free = make_free_oracle(p.alphabet());
      Word w = p.relators()[0].word;

      GroupRingElement g(char const* text, int n = 1) const {
        return {*free, p.parse_word(text, 0), n};
      }
    };

    TEST_F(TrefoilFox, LeftDerivatives) {
      EXPECT_EQ(fox_derivative(w, 0, p.alphabet(), *free), g("1") + g("a") + g("a^2"));
      EXPECT_EQ(fox_derivative(w, 1, p.alphabet(), *free), g("a^3*b^-1", -1) + g("a^3*b^-2", -1));
      EXPECT_EQ(format(fox_derivative(w, 0, p.alphabet(), *free), p.generator_names()), "1 + a + a^2");
    }

    TEST_F(TrefoilFox, RightDerivatives) {
      EXPECT_EQ(right_fox_derivative(w, 0, p.alphabet(), *free), g("b^-2") + g("a*b^-2") + g("a^2*b^-2"));
      EXPECT_EQ(right_fox_derivative(w, 1, p.alphabet(), *free), g("b^-2", -1) + g("b^-1", -1));
    }

    TEST_F(TrefoilFox, FundamentalIdentity) {
      // w - 1 = sum (dw/dx)(x - 1)
      GroupRingElement sum;
      for (int x = 0; x < 2; ++x) {
        auto const gx = GroupRingElement(*free, Word::letter(p.alphabet(), x)) - g("1");
        sum += fox_derivative(w, x, p.alphabet(), *free).times(gx, *free);
      }
      EXPECT_EQ(sum, GroupRingElement(*free, w) - g("1"));
    }

    TEST_F(TrefoilFox, UnknownGenerator) {
      EXPECT_EQ(kind_of([&] { (void) fox_derivative(w, 5, p.alphabet(), *free); }), ErrorKind::UnknownGenerator);
    }

    // --- chain complexes ------------------------------------------------------------

    TEST(ChainComplex, RowsOfTheCyclicResolution) {
      auto const c = cyclic_resolution(3, 4);
      auto const cc = to_chain_complex(c, nullptr, 4);
      auto const& o = *cc.oracle;
      auto const& al = c.alphabet();
      GroupRingElement const one = GroupRingElement::one(o);
      GroupRingElement const a(o, Word::letter(al, 0));
      GroupRingElement const a2(o, power(Word::letter(al, 0), 2));
      EXPECT_EQ(cc.ranks, (std::vector<std::size_t>{1, 1, 1, 1, 1}));
      EXPECT_EQ(cc.boundary[1][0][0], a - one);
      EXPECT_EQ(cc.boundary[2][0][0], one + a + a2);
      EXPECT_EQ(cc.boundary[3][0][0], one - a);
      EXPECT_EQ(cc.boundary[4][0][0], one + a + a2);
      EXPECT_EQ(format_matrix(cc, 3, c.arrow_names()), "c3: (1 - a)\n");
    }

    TEST(ChainComplex, Errors) {
      CrossedComplex bare;
      bare.add_object("o");
      bare.add_arrow("a", 0, 0);
      bare.set_top(1);
      EXPECT_EQ(kind_of([&] { (void) to_chain_complex(bare, nullptr, 1); }), ErrorKind::MissingOracle);
      CrossedComplex two;
      two.add_object("p");
      two.add_object("q");
      two.set_top(1);
      auto const o = make_free_oracle(two.alphabet());
      EXPECT_EQ(kind_of([&] { (void) to_chain_complex(two, o, 1); }), ErrorKind::InvalidArgument);
      auto const cc = to_chain_complex(cyclic_resolution(3, 3), nullptr, 3);
      EXPECT_EQ(kind_of([&] { (void) check_exactness(cc, 0, 3); }), ErrorKind::DimensionOutOfRange);
      EXPECT_EQ(kind_of([&] { (void) expand(cc, 4); }), ErrorKind::DimensionOutOfRange);
    }

    TEST(ChainComplex, ExpansionOfOneMinusA) {
      auto const cc = to_chain_complex(cyclic_resolution(3, 3), nullptr, 3);
      auto const m = expand(cc, 3);
      ASSERT_EQ(m.rows(), 3u);
      ASSERT_EQ(m.cols(), 3u);
      for (std::size_t i = 0; i < 3; ++i) {
        Integer row = 0;
        for (std::size_t j = 0; j < 3; ++j) {
          row += m(i, j);
        }
        EXPECT_EQ(row, 0);
        EXPECT_EQ(m(i, i), 1);
      }
      EXPECT_EQ(augmented(cc, 3)(0, 0), 0);
      EXPECT_EQ(augmented(cc, 2)(0, 0), 3);
    }

    TEST(ChainComplex, ConsecutiveMatricesComposeToZero) {
      auto const p = test::gp("gp< t | t^2 >");
      std::vector<std::pair<CrossedComplex, int>> const complexes{
          {cyclic_resolution(5, 6), 6},
          {standard_resolution(build_finite_oracle(p, 10), p.generator_names(), 4), 4},
          {tensor_product(cyclic_resolution(2, 4), cyclic_resolution(3, 4), 4), 4},
          {test::module_of("gp< s, t | s^2, t^3, (s*t)^2 >"), 2}};
      for (auto const& [c, top] : complexes) {
        auto const cc = to_chain_complex(c, nullptr, top);
        for (int n = 1; n < top; ++n) {
          // rows are indexed by the source: d_{n+1} d_n
          EXPECT_TRUE((expand(cc, n + 1) * expand(cc, n)).is_zero()) << n;
        }
      }
    }

    // --- Smith normal form ------------------------------------------------------------

    TEST(Smith, Identity) {
      auto const s = smith_normal_form(IntMatrix::identity(3));
      EXPECT_EQ(s.diagonal, (std::vector<Integer>{1, 1, 1}));
      EXPECT_EQ(s.rank(), 3u);
    }

    TEST(Smith, CoprimeDiagonal) {
      auto const a = matrix({{2, 0}, {0, 3}});
      auto const s = smith_normal_form(a);
      EXPECT_EQ(s.diagonal, (std::vector<Integer>{1, 6}));
      EXPECT_EQ(s.u * a * s.v, diagonal(s, 2, 2));
      EXPECT_EQ(abs(determinant(s.u)), 1);
      EXPECT_EQ(abs(determinant(s.v)), 1);
    }

    TEST(Smith, Zero) {
      auto const s = smith_normal_form(IntMatrix(2, 3));
      EXPECT_EQ(s.diagonal, (std::vector<Integer>{0, 0}));
      EXPECT_EQ(s.rank(), 0u);
    }

    TEST(Smith, Rectangular) {
      auto const a = matrix({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
      auto const s = smith_normal_form(a);
      EXPECT_EQ(s.diagonal, (std::vector<Integer>{2, 6, 12}));
      EXPECT_EQ(s.u * a * s.v, diagonal(s, 3, 3));
      auto const b = matrix({{1, 2, 3}, {2, 4, 6}});
      auto const t = smith_normal_form(b);
      EXPECT_EQ(t.diagonal, (std::vector<Integer>{1, 0}));
      EXPECT_EQ(t.u * b * t.v, diagonal(t, 2, 3));
    }

    TEST(Smith, Determinant) {
      EXPECT_EQ(determinant(matrix({{2, 0}, {0, 3}})), 6);
      EXPECT_EQ(determinant(matrix({{0, 1}, {1, 0}})), -1);
      EXPECT_EQ(determinant(matrix({{1, 2}, {2, 4}})), 0);
    }

    // --- exactness and homology --------------------------------------------------------

    TEST(Exactness, CyclicResolution) {
      auto const cc = to_chain_complex(cyclic_resolution(3, 6), nullptr, 6);
      auto const r = check_exactness(cc, 0, 5);
      EXPECT_TRUE(r.exact) << r.detail;
      ASSERT_EQ(r.homology.size(), 1u);
      EXPECT_EQ(r.homology[0].first, 0);
      EXPECT_EQ(r.homology[0].second.format(), "Z");
    }

    TEST(Exactness, TruncationLeavesTheNormElement) {
      auto c = cyclic_resolution(3, 3);
      c.set_top(4);
      auto const cc = to_chain_complex(c, nullptr, 4);
      auto const r = check_exactness(cc, 1, 3);
      EXPECT_FALSE(r.exact);
      EXPECT_EQ(r.detail, "not exact in dimension 3: H = Z");
      auto const h = group_homology(cc, 1, 3);
      EXPECT_EQ(h[0].format(), "C3");
      EXPECT_EQ(h[1].format(), "0");
      EXPECT_EQ(h[2].format(), "Z");
    }

    TEST(Exactness, StandardResolutionOfC2) {
      auto const p = test::gp("gp< t | t^2 >");
      auto const c = standard_resolution(build_finite_oracle(p, 10), p.generator_names(), 4);
      auto const cc = to_chain_complex(c, nullptr, 4);
      auto const r = check_exactness(cc, 0, 3);
      EXPECT_TRUE(r.exact) << r.detail;
      auto const h = group_homology(cc, 1, 3);
      EXPECT_EQ(h[0].format(), "C2");
      EXPECT_EQ(h[1].format(), "0");
      EXPECT_EQ(h[2].format(), "C2");
    }

    TEST(Homology, CyclicGroups) {
      for (int p : {2, 3, 5, 6}) {
        auto const cc = to_chain_complex(cyclic_resolution(p, 6), nullptr, 6);
        auto const h = group_homology(cc, 0, 5);
        EXPECT_EQ(h[0].format(), "Z");
        for (int n = 1; n <= 5; ++n) {
          EXPECT_EQ(h[static_cast<std::size_t>(n)].format(), n % 2 ? "C" + std::to_string(p) : "0") << p << " " << n;
        }
      }
    }

    TEST(Homology, PresentationComplexOfS3) {
      auto const c = test::module_of("gp< s, t | s^2, t^3, (s*t)^2 >");
      auto const cc = to_chain_complex(c, nullptr, 2);
      auto const r = check_exactness(cc, 0, 1);
      EXPECT_TRUE(r.exact) << r.detail;
      EXPECT_EQ(group_homology(cc, 1, 1)[0].format(), "C2");
    }

    TEST(Homology, KleinBottleIsAspherical) {
      auto const c = from_presentation(test::gp("gp< a, z | z^-1*a^-1*z*a^-1 >"));
      auto const cc = to_chain_complex(c, make_free_oracle(c.alphabet(), false), 2);
      auto const h = group_homology(cc, 0, 1);
      EXPECT_EQ(h[1].format(), "Z + C2");
    }

  }  // namespace
}  // namespace xres
