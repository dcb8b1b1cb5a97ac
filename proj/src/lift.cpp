// SPDX-License-Identifier: Apache-2.0

// Lifting group morphisms to morphisms of free crossed resolutions.
//
// Dimension 2: the image of a relator must be written as a product of
// conjugates of target relators. A best-first search repeatedly matches a
// piece B of a cyclic rotation B.D of a relator against a subword of the
// remainder V = A.B.C and trades it for one factor:
//
//   A.B.C = (rho^e)^{P A^-1} . A D^-1 C      where rho^e = P.Q, B.D = Q.P
//
// Dimensions >= 3: chi(x) = y is linear over Z[G]; single terms +-g.h are
// tried first, then the expanded integer system is solved through its
// Smith normal form.

#include <algorithm>
#include <queue>
#include <set>

#include "xres/constructions.hpp"
#include "xres/error.hpp"
#include "xres/verify.hpp"

namespace xres {

  namespace {
    constexpr char const* kModule = "constructions";

    [[noreturn]] void not_found(int dim, std::string const& what) {
      throw Error(ErrorKind::LiftNotFound, kModule,
                  "dimension " + std::to_string(dim) + ": " + what);
    }

    std::vector<Letter> inverse_letters(std::span<Letter const> w) {
      std::vector<Letter> out;
      for (std::size_t k = w.size(); k-- > 0;) {
        out.push_back(w[k].inverse());
      }
      return out;
    }

    struct Node {
      Word rest;
      std::vector<PeifferFactor> factors;
    };

    //! A sequence s with phi_2(s) = w in the target, if the search finds one.
    std::optional<PeifferSequence> express(Word const& w, CrossedComplex const& t,
                                           LiftOptions const& options) {
      auto const& alphabet = t.alphabet();
      ObjectId const base = w.source();
      struct Rotation {
        int gen;
        int sign;
        std::vector<Letter> letters;  // Q.P
        std::vector<Letter> p;        // P
      };
      std::vector<Rotation> rotations;
      for (std::size_t r = 0; r < t.count(2); ++r) {
        auto const& cellr = t.generator(2, static_cast<int>(r));
        auto const& rel = cellr.boundary.word();
        if (rel.empty()) {
          continue;
        }
        for (int sign : {1, -1}) {
          auto const full = sign > 0 ? std::vector<Letter>(rel.letters().begin(), rel.letters().end())
                                     : inverse_letters(rel.letters());
          for (std::size_t k = 0; k < full.size(); ++k) {
            Rotation rot{static_cast<int>(r), sign, {}, {}};
            rot.letters.assign(full.begin() + static_cast<long>(k), full.end());
            rot.letters.insert(rot.letters.end(), full.begin(), full.begin() + static_cast<long>(k));
            rot.p.assign(full.begin(), full.begin() + static_cast<long>(k));
            // The conjugate only makes sense when the rotation is a path.
            try {
              (void) reduce(cellr.base, rot.p, alphabet);
            } catch (Error const&) {
              continue;
            }
            rotations.push_back(std::move(rot));
          }
        }
      }

      auto cost = [](Node const& n) { return n.rest.size() * 4 + n.factors.size(); };
      auto worse = [&](Node const& a, Node const& b) { return cost(a) > cost(b); };
      std::priority_queue<Node, std::vector<Node>, decltype(worse)> open(worse);
      std::set<Word> seen;
      open.push({w, {}});
      std::size_t nodes = 0;
      while (!open.empty() && nodes < options.max_nodes) {
        Node cur = open.top();
        open.pop();
        if (cur.rest.empty()) {
          PeifferSequence s(base);
          for (auto& f : cur.factors) {
            s.push(std::move(f));
          }
          return s;
        }
        if (!seen.insert(cur.rest).second || cur.factors.size() >= options.max_factors) {
          continue;
        }
        ++nodes;
        auto const v = cur.rest.letters();
        for (std::size_t i = 0; i < v.size(); ++i) {
          for (auto const& rot : rotations) {
            std::size_t len = 0;
            while (len < rot.letters.size() && i + len < v.size() && v[i + len] == rot.letters[len]) {
              ++len;
            }
            if (len == 0) {
              continue;
            }
            std::vector<Letter> raw(v.begin(), v.begin() + static_cast<long>(i));
            auto const d_inv = inverse_letters(
                std::span<Letter const>(rot.letters).subspan(len));
            raw.insert(raw.end(), d_inv.begin(), d_inv.end());
            raw.insert(raw.end(), v.begin() + static_cast<long>(i + len), v.end());
            Word a = reduce(base, v.first(i), alphabet);
            Word rest;
            Word conj;
            try {
              rest = reduce(base, raw, alphabet);
              conj = reduce(t.generator(2, rot.gen).base, rot.p, alphabet) * a.inverse();
            } catch (Error const&) {
              continue;
            }
            if (seen.contains(rest)) {
              continue;
            }
            Node next{std::move(rest), cur.factors};
            next.factors.push_back({rot.gen, rot.sign, std::move(conj)});
            open.push(std::move(next));
          }
        }
      }
      return std::nullopt;
    }

    //! Integer row vector x with x.D = b, if one exists.
    std::optional<std::vector<Integer>> solve(IntMatrix const& d, std::vector<Integer> const& b) {
      auto const snf = smith_normal_form(d);
      // x U^-1 diag = b V: with z = x U^-1, z_i d_i = (bV)_i.
      std::vector<Integer> bv(d.cols());
      for (std::size_t j = 0; j < d.cols(); ++j) {
        for (std::size_t i = 0; i < d.cols(); ++i) {
          if (b[i] != 0 && snf.v(i, j) != 0) {
            bv[j] += b[i] * snf.v(i, j);
          }
        }
      }
      std::vector<Integer> z(d.rows());
      for (std::size_t j = 0; j < d.cols(); ++j) {
        Integer const di = j < snf.diagonal.size() ? snf.diagonal[j] : Integer(0);
        if (di == 0) {
          if (bv[j] != 0) {
            return std::nullopt;
          }
          continue;
        }
        if (bv[j] % di != 0) {
          return std::nullopt;
        }
        z[j] = bv[j] / di;
      }
      std::vector<Integer> x(d.rows());
      for (std::size_t i = 0; i < d.rows(); ++i) {
        if (z[i] == 0) {
          continue;
        }
        for (std::size_t j = 0; j < d.rows(); ++j) {
          if (snf.u(i, j) != 0) {
            x[j] += z[i] * snf.u(i, j);
          }
        }
      }
      return x;
    }

    std::optional<Element> lift_module(int n, Element const& y, CrossedComplex const& t,
                                       ChainComplex const& cc) {
      auto const& o = *cc.oracle;
      std::size_t const order = o.order();
      auto const coords = n == 3 ? abelianize(y.peiffer(), o) : y.module().coordinates(o);
      std::vector<Integer> b(cc.ranks[static_cast<std::size_t>(n - 1)] * order);
      for (auto const& [g, r] : coords) {
        for (auto const& [h, c] : r.terms()) {
          b[static_cast<std::size_t>(g) * order + o.index_of(h)] += c;
        }
      }
      auto const& elements = o.elements();
      auto accept = [&](ModuleElement const& x) -> std::optional<Element> {
        if (equal_elements(boundary(x, t), y, t)) {
          return Element(x);
        }
        return std::nullopt;
      };
      if (std::all_of(b.begin(), b.end(), [](Integer const& v) { return v == 0; })) {
        if (auto e = accept(ModuleElement(n, y.base()))) {
          return e;
        }
      }
      for (int sign : {1, -1}) {
        for (std::size_t g = 0; g < t.count(n); ++g) {
          for (std::size_t h = 0; h < order; ++h) {
            ModuleElement x(n, y.base());
            x.add_term(static_cast<int>(g), elements[h], sign);
            if (auto e = accept(x)) {
              return e;
            }
          }
        }
      }
      auto const sol = solve(expand(cc, n), b);
      if (!sol) {
        return std::nullopt;
      }
      ModuleElement x(n, y.base());
      for (std::size_t k = 0; k < sol->size(); ++k) {
        if ((*sol)[k] != 0) {
          x.add_term(static_cast<int>(k / order), elements[k % order], (*sol)[k]);
        }
      }
      return accept(x);
    }
  }  // namespace

  ComplexMorphism lift_morphism(ComplexPtr source, ComplexPtr target,
                                std::vector<Word> const& dim1_images, int max_dim,
                                ComplexMorphism const* hints, LiftOptions const& options) {
    if (!source || !target) {
      throw Error(ErrorKind::InvalidArgument, kModule, "lift needs a source and a target");
    }
    ComplexMorphism f(source, target);
    int const top = std::min(max_dim, source->top());
    auto hinted = [&](int dim, int g) { return hints && hints->has_image(dim, g); };

    for (std::size_t g = 0; g < source->count(1); ++g) {
      int const gi = static_cast<int>(g);
      if (!dim1_images.empty()) {
        if (dim1_images.size() != source->count(1)) {
          throw Error(ErrorKind::InvalidArgument, kModule,
                      "expected " + std::to_string(source->count(1)) + " dimension-1 images");
        }
        f.set_image(1, gi, dim1_images[g]);
      } else if (hinted(1, gi)) {
        f.set_image(1, gi, hints->image(1, gi));
      } else {
        auto const& name = source->arrows()[g].name;
        auto const same = target->find(1, name);
        if (!same) {
          throw Error(ErrorKind::AmbiguousWithoutHints, kModule,
                      "no image given for '" + name + "' and no target generator of that name");
        }
        f.set_image(1, gi, Word::letter(target->alphabet(), *same));
      }
    }
    auto const report1 = verify_morphism(f, 1);
    if (!report1.ok) {
      not_found(1, report1.witness + ": " + report1.detail);
    }

    std::optional<ChainComplex> cc;
    for (int n = 2; n <= top; ++n) {
      for (std::size_t g = 0; g < source->count(n); ++g) {
        int const gi = static_cast<int>(g);
        auto const& cellg = source->generator(n, gi);
        if (hinted(n, gi)) {
          f.set_image(n, gi, hints->image(n, gi));
          continue;
        }
        Element const y = apply_morphism(f, cellg.boundary);
        if (n == 2) {
          auto s = express(y.word(), *target, options);
          if (!s) {
            not_found(2, "no product of at most " + std::to_string(options.max_factors)
                             + " relator conjugates has boundary "
                             + format(y.word(), target->arrow_names()) + " (image of d "
                             + cellg.name + ")");
          }
          f.set_image(2, gi, std::move(*s));
          continue;
        }
        if (static_cast<std::size_t>(n) > static_cast<std::size_t>(target->top())
            || target->count(n) == 0) {
          Element const zero = Element::identity(n - 1, y.base());
          if (equal_elements(y, zero, *target)) {
            f.set_image(n, gi, Element::identity(n, y.base()));
            continue;
          }
          not_found(n, "the target has no generators to cover d " + cellg.name);
        }
        if (!cc) {
          if (!target->oracle() || !target->oracle()->is_finite()) {
            not_found(n, "solving above dimension 2 needs a finite coefficient group");
          }
          cc = to_chain_complex(*target, target->oracle(), top);
        }
        auto x = lift_module(n, y, *target, *cc);
        if (!x) {
          not_found(n, "d " + cellg.name + " has no preimage");
        }
        f.set_image(n, gi, std::move(*x));
      }
    }
    auto const report = verify_morphism(f, top);
    if (!report.ok) {
      not_found(top, "the assembled lift fails at " + report.witness);
    }
    return f;
  }

}  // namespace xres
