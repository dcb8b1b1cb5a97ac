// SPDX-License-Identifier: Apache-2.0

// Randomized invariants, each over at least 1000 cases with a fixed seed.

#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "xres/cocycle.hpp"
#include "xres/verify.hpp"

namespace xres {
  namespace {

    constexpr int kCases = 1000;

    PeifferSequence concat(PeifferSequence a, PeifferSequence const& b) {
      for (auto const& f : b.factors()) {
        a.push(f);
      }
      return a;
    }

    PeifferSequence slice(PeifferSequence const& s, std::size_t from, std::size_t to) {
      PeifferSequence out(s.base());
      for (std::size_t k = from; k < to && k < s.factors().size(); ++k) {
        out.push(s.factors()[k]);
      }
      return out;
    }

    ModuleElement random_module(std::mt19937& rng, CrossedComplex const& c, int dim, int max_terms) {
      std::uniform_int_distribution<int> terms(1, max_terms);
      std::uniform_int_distribution<int> gen(0, static_cast<int>(c.count(dim)) - 1);
      std::uniform_int_distribution<int> coeff(-2, 2);
      ModuleElement x(dim, 0);
      for (int n = terms(rng); n > 0; --n) {
        x.add_term(gen(rng), test::random_word(rng, c.alphabet(), static_cast<int>(c.count(1)), 4), coeff(rng));
      }
      return x;
    }

    //! A morphism of crossed modules from the free crossed module of `f`
    //! to K -> Aut(K) for K = C2 x S3: letters go to random elements g_x,
    //! relators r to (omega r evaluated) times z^{e_r} with z central
    //! (e = 1 on the first relator).
    //! Its values are a check on Peiffer equivalence that is independent
    //! of abelianization.
    class CentralTwist {
     public:
      CentralTwist(CrossedComplex const& f, std::mt19937& rng)
          : kp_(test::gp("gp< z, s, t | z^2, s^2, t^3, (s*t)^2, z*s*z^-1*s^-1, z*t*z^-1*t^-1 >")),
            m_(automorphism_oracle(build_finite_oracle(kp_, 100))) {
        std::uniform_int_distribution<int> any(0, static_cast<int>(m_.k.order()) - 1);
        std::uniform_int_distribution<int> bit(0, 1);
        for (std::size_t x = 0; x < f.count(1); ++x) {
          images_.push_back(any(rng));
          data_.k1.push_back(m_.boundary[static_cast<std::size_t>(images_.back())]);
        }
        int const z = static_cast<int>(m_.kernel->index_of(Word::letter(kp_.alphabet(), 0)));
        for (auto const& cell : f.generators(2)) {
          int v = evaluate(cell.boundary.word());
          if (data_.k2.empty() || bit(rng)) {
            v = m_.k.mul(v, z);
          }
          data_.k2.push_back(v);
        }
      }

      [[nodiscard]] bool valid(CrossedComplex const& f) const {
        return verify_cocycle(data_, f, m_).ok;
      }
      [[nodiscard]] int operator()(PeifferSequence const& s) const {
        return evaluate_k2(data_, m_, s);
      }
      [[nodiscard]] CocycleData const& data() const {
        return data_;
      }
      [[nodiscard]] InnerCrossedModule const& module() const {
        return m_;
      }

     private:
      int evaluate(Word const& w) const {
        int v = 0;
        for (auto const& l : w.letters()) {
          int const g = images_[static_cast<std::size_t>(l.gen)];
          v = m_.k.mul(v, l.exp > 0 ? g : m_.k.inverse(g));
        }
        return v;
      }

      Presentation kp_;
      InnerCrossedModule m_;
      std::vector<int> images_;
      CocycleData data_;
    };

    // --- crossed module axioms -------------------------------------------------------

    TEST(Properties, FirstCrossedModuleAxiom) {
      std::mt19937 rng(11);
      auto const c = test::module_of("gp< a, b | r = a^3*b^-2 >");
      for (int k = 0; k < kCases; ++k) {
        auto const s = test::random_sequence(rng, c, 4, 4);
        auto const u = test::random_word(rng, c.alphabet(), 2, 6);
        EXPECT_EQ(boundary2(s.act(u), c), u.inverse() * boundary2(s, c) * u);
      }
    }

    TEST(Properties, SecondCrossedModuleAxiom) {
      std::mt19937 rng(12);
      auto const c = test::module_of("gp< s, t | s^2, t^3, (s*t)^2 >");
      CentralTwist const h(c, rng);
      ASSERT_TRUE(h.valid(c));
      for (int k = 0; k < kCases; ++k) {
        auto const s = test::random_sequence(rng, c, 3, 3);
        auto const t = test::random_sequence(rng, c, 3, 3);
        auto const lhs = s.act(boundary2(t, c));
        auto const rhs = concat(concat(t.inverse(), s), t);
        auto const cmp = equal_elements(lhs, rhs, c);
        EXPECT_TRUE(cmp.equal && cmp.exact);
        EXPECT_EQ(h(lhs), h(rhs));
      }
    }

    TEST(Properties, PeifferInsertionIsInvisible) {
      std::mt19937 rng(13);
      auto const c = test::module_of("gp< s, t | s^2, t^3, (s*t)^2 >");
      CentralTwist const h(c, rng);
      std::uniform_int_distribution<int> coin(0, 1);
      int separated = 0;
      for (int k = 0; k < kCases; ++k) {
        auto const s = test::random_sequence(rng, c, 5, 3);
        std::uniform_int_distribution<std::size_t> at(0, s.factors().size());
        std::size_t const cut = at(rng);
        PeifferSequence inserted(0);
        if (coin(rng)) {
          inserted = peiffer_commutator(test::random_sequence(rng, c, 2, 3), test::random_sequence(rng, c, 2, 3), c);
        } else {
          auto const x = test::random_sequence(rng, c, 2, 3);
          inserted = concat(x, x.inverse());
        }
        auto const t = concat(concat(slice(s, 0, cut), inserted), slice(s, cut, s.factors().size()));
        EXPECT_TRUE(equal_elements(s, t, c));
        EXPECT_EQ(h(s), h(t));
        // a random extra factor is seen by one of the two tests
        auto u = t;
        u.push({0, 1, test::random_word(rng, c.alphabet(), 2, 3)});
        auto const cmp = equal_elements(s, u, c);
        EXPECT_FALSE(cmp.equal);
        separated += h(s) != h(u) ? 1 : 0;
      }
      EXPECT_GT(separated, 0);
    }

    // --- Fox calculus -------------------------------------------------------------------

    TEST(Properties, FundamentalFoxIdentity) {
      std::mt19937 rng(14);
      auto const p = test::gp("gp< a, b, c | >");
      auto const free = make_free_oracle(p.alphabet());
      auto const s3p = test::gp("gp< a, b, c | a^2, b^3, (a*b)^2, c >");
      auto const s3 = build_finite_oracle(s3p, 100);
      for (int k = 0; k < kCases; ++k) {
        auto const w = test::random_word(rng, p.alphabet(), 3, 12);
        for (auto const* o : {free.get(), s3.get()}) {
          GroupRingElement left;
          GroupRingElement right;
          for (int x = 0; x < 3; ++x) {
            auto const gx = GroupRingElement(*o, Word::letter(p.alphabet(), x)) - GroupRingElement::one(*o);
            left += fox_derivative(w, x, p.alphabet(), *o).times(gx, *o);
            right += gx.times(right_fox_derivative(w, x, p.alphabet(), *o), *o);
          }
          auto const expected = GroupRingElement(*o, w) - GroupRingElement::one(*o);
          EXPECT_EQ(left, expected);
          EXPECT_EQ(right, -(GroupRingElement(*o, w.inverse()) - GroupRingElement::one(*o)).times(w, *o));
        }
      }
    }

    // --- chi chi = 1 on constructions ----------------------------------------------------

    void check_double_boundary(CrossedComplex const& c, int top, unsigned seed) {
      std::mt19937 rng(seed);
      for (int k = 0; k < kCases; ++k) {
        int dim = 0;
        do {
          dim = std::uniform_int_distribution<int>(3, top)(rng);
        } while (c.count(dim) == 0);
        Element const x = dim == 3 && c.count(3) == 0 ? Element::identity(3, 0) : Element(random_module(rng, c, dim, 3));
        Element const dd = boundary(boundary(x, c), c);
        auto const cmp = equal_elements(dd, Element::identity(dim - 2, 0), c);
        ASSERT_TRUE(cmp.equal && cmp.exact) << "dim " << dim;
      }
    }

    TEST(Properties, DoubleBoundaryCyclic) {
      check_double_boundary(cyclic_resolution(5, 7), 7, 15);
    }

    TEST(Properties, DoubleBoundaryStandard) {
      auto const p = test::gp("gp< t | t^2 >");
      check_double_boundary(standard_resolution(build_finite_oracle(p, 10), p.generator_names(), 4), 4, 16);
    }

    TEST(Properties, DoubleBoundaryTensor) {
      auto const t = tensor_product(cyclic_resolution(2, 4), cyclic_resolution(3, 4), 5);
      check_double_boundary(t, 5, 17);
    }

    TEST(Properties, DoubleBoundaryTrefoilSquared) {
      auto const a = test::module_of("gp< a, b | r = a^3*b^-2 >");
      check_double_boundary(tensor_product(a, a, 4), 4, 18);
    }

    // --- morphisms ------------------------------------------------------------------------

    TEST(Properties, LiftedMorphismCommutesWithBoundary) {
      std::mt19937 rng(19);
      auto const c = test::share(cyclic_resolution(5, 6));
      Word const a = Word::letter(c->alphabet(), 0);
      auto const f = lift_morphism(c, c, {power(a, 2)}, 6);
      for (int k = 0; k < kCases; ++k) {
        int const dim = std::uniform_int_distribution<int>(3, 6)(rng);
        Element const x = random_module(rng, *c, dim, 3);
        auto const cmp = equal_elements(apply_morphism(f, boundary(x, *c)), boundary(apply_morphism(f, x), *c), *c);
        ASSERT_TRUE(cmp.equal && cmp.exact) << dim;
      }
    }

    TEST(Properties, CocycleOnWordsIsAHomomorphism) {
      std::mt19937 rng(20);
      auto const c = test::module_of("gp< s, t | s^2, t^3, (s*t)^2 >");
      CentralTwist const h(c, rng);
      auto const& m = h.module();
      for (int k = 0; k < kCases; ++k) {
        auto const u = test::random_word(rng, c.alphabet(), 2, 8);
        auto const v = test::random_word(rng, c.alphabet(), 2, 8);
        EXPECT_EQ(evaluate_k1(h.data(), m, u * v), m.aut.mul(evaluate_k1(h.data(), m, u), evaluate_k1(h.data(), m, v)));
        auto const s = test::random_sequence(rng, c, 3, 3);
        auto const t = test::random_sequence(rng, c, 3, 3);
        EXPECT_EQ(h(concat(s, t)), m.k.mul(h(s), h(t)));
      }
    }

    // --- Smith normal form -------------------------------------------------------------------

    TEST(Properties, SmithNormalForm) {
      std::mt19937 rng(21);
      std::uniform_int_distribution<int> size(1, 5);
      std::uniform_int_distribution<int> entry(-6, 6);
      std::uniform_int_distribution<int> sparse(0, 3);
      for (int k = 0; k < kCases; ++k) {
        std::size_t const r = static_cast<std::size_t>(size(rng));
        std::size_t const c = static_cast<std::size_t>(size(rng));
        IntMatrix a(r, c);
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = 0; j < c; ++j) {
            a(i, j) = sparse(rng) == 0 ? 0 : entry(rng);
          }
        }
        auto const s = smith_normal_form(a);
        ASSERT_EQ(s.diagonal.size(), std::min(r, c));
        IntMatrix d(r, c);
        std::size_t nonzero = 0;
        for (std::size_t i = 0; i < s.diagonal.size(); ++i) {
          d(i, i) = s.diagonal[i];
          EXPECT_GE(s.diagonal[i], 0);
          nonzero += s.diagonal[i] != 0 ? 1 : 0;
          if (i + 1 < s.diagonal.size()) {
            if (s.diagonal[i] == 0) {
              EXPECT_EQ(s.diagonal[i + 1], 0);
            } else {
              EXPECT_EQ(s.diagonal[i + 1] % s.diagonal[i], 0);
            }
          }
        }
        EXPECT_EQ(s.rank(), nonzero);
        EXPECT_EQ(s.u * a * s.v, d);
        EXPECT_EQ(abs(determinant(s.u)), 1);
        EXPECT_EQ(abs(determinant(s.v)), 1);
        if (r == c) {
          Integer prod = 1;
          for (auto const& x : s.diagonal) {
            prod *= x;
          }
          EXPECT_EQ(abs(determinant(a)), prod);
        }
      }
    }

  }  // namespace
}  // namespace xres
