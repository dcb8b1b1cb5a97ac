// SPDX-License-Identifier: Apache-2.0

// The standard resolution, the small resolution of C_p, and the gluing
// constructions built from cylinders: amalgams, HNN extensions and the
// retraction of a two-object resolution onto one vertex group.

#include <functional>

#include "xres/constructions.hpp"
#include "xres/error.hpp"

namespace xres {

  namespace {
    constexpr char const* kModule = "constructions";

    using MutablePtr = std::shared_ptr<CrossedComplex>;

    std::string element_label(Word const& w, std::span<std::string const> names) {
      if (w.empty()) {
        return "1";
      }
      std::string out;
      for (auto const& l : w.letters()) {
        out += names[static_cast<std::size_t>(l.gen)];
        if (l.exp < 0) {
          out += '\'';
        }
      }
      return out;
    }

    //! Mixed-radix index of a tuple of group elements.
    struct Tuples {
      std::size_t order;
      [[nodiscard]] std::size_t index(std::vector<int> const& t) const {
        std::size_t k = 0;
        for (int x : t) {
          k = k * order + static_cast<std::size_t>(x);
        }
        return k;
      }
      [[nodiscard]] std::vector<int> tuple(std::size_t k, int n) const {
        std::vector<int> t(static_cast<std::size_t>(n));
        for (int i = n; i-- > 0;) {
          t[static_cast<std::size_t>(i)] = static_cast<int>(k % order);
          k /= order;
        }
        return t;
      }
    };

    void require_one_object(CrossedComplex const& c, char const* what) {
      if (c.objects().size() != 1) {
        throw Error(ErrorKind::InvalidArgument, kModule,
                    std::string(what) + " must be a one-object complex");
      }
    }

    void require_lift(ComplexMorphism const& f, int max_dim, char const* what) {
      auto const report = verify_morphism(f, max_dim);
      if (!report.ok) {
        throw Error(ErrorKind::UnverifiedLift, kModule,
                    std::string(what) + " is not a morphism of complexes ("
                        + report.witness + (report.detail.empty() ? "" : ": " + report.detail)
                        + ")");
      }
    }

    //! The cell of dimension dim >= 1 as an element at its own basepoint.
    Element cell(CrossedComplex const& c, int dim, int i) {
      switch (dim) {
        case 1:
          return Word::letter(c.alphabet(), i);
        case 2:
          return PeifferSequence::generator(i, c.generator(2, i).base);
        default:
          return ModuleElement::generator(dim, i, c.generator(dim, i).base);
      }
    }

    //! Copies every generator of `from` into `to` (objects mapped by
    //! `object`), boundaries left trivial, and returns the embedding.
    std::vector<std::vector<int>> copy_generators(CrossedComplex const& from, CrossedComplex& to,
                                                  std::function<ObjectId(ObjectId)> const& object,
                                                  int top) {
      std::vector<std::vector<int>> ids(static_cast<std::size_t>(std::max(top, 1)) + 1);
      for (auto const& a : from.arrows()) {
        ids[1].push_back(to.add_arrow(a.name, object(a.source), object(a.target)));
      }
      for (int dim = 2; dim <= top; ++dim) {
        for (auto const& g : from.generators(dim)) {
          ObjectId const p = object(g.base);
          ids[static_cast<std::size_t>(dim)].push_back(
              to.add_generator(dim, g.name, p, Element::identity(dim - 1, p)));
        }
      }
      return ids;
    }

    ComplexMorphism embedding(std::shared_ptr<CrossedComplex const> from,
                              std::shared_ptr<CrossedComplex const> to,
                              std::vector<std::vector<int>> const& ids, ObjectId object) {
      ComplexMorphism f(from, to);
      for (std::size_t p = 0; p < from->objects().size(); ++p) {
        f.set_object(static_cast<ObjectId>(p), object);
      }
      for (std::size_t dim = 1; dim < ids.size(); ++dim) {
        for (std::size_t i = 0; i < ids[dim].size(); ++i) {
          f.set_image(static_cast<int>(dim), static_cast<int>(i),
                      cell(*to, static_cast<int>(dim), ids[dim][i]));
        }
      }
      return f;
    }

    void copy_boundaries(CrossedComplex const& from, CrossedComplex& to,
                         std::vector<std::vector<int>> const& ids, ComplexMorphism const& f) {
      for (std::size_t dim = 2; dim < ids.size(); ++dim) {
        for (std::size_t i = 0; i < ids[dim].size(); ++i) {
          auto const& g = from.generator(static_cast<int>(dim), static_cast<int>(i));
          to.set_boundary(static_cast<int>(dim), ids[dim][i], apply_morphism(f, g.boundary));
        }
      }
    }
  }  // namespace

  // --- standard resolution -----------------------------------------------------

  CrossedComplex standard_resolution(OraclePtr const& o,
                                     std::span<std::string const> generator_names, int max_dim) {
    if (!o || !o->is_finite()) {
      throw Error(ErrorKind::NotFinite, kModule, "the standard resolution needs a finite group");
    }
    if (max_dim < 1) {
      throw Error(ErrorKind::DimensionOutOfRange, kModule, "max_dim must be at least 1");
    }
    auto const& elements = o->elements();
    std::size_t const order = elements.size();
    double cells = 1;
    for (int n = 0; n < max_dim; ++n) {
      cells *= static_cast<double>(order);
    }
    if (cells > 2e6) {
      throw Error(ErrorKind::TooLarge, kModule,
                  "the standard resolution has " + std::to_string(order) + "^"
                      + std::to_string(max_dim) + " top generators");
    }
    if (o->index_of(Word::identity(0)) != 0) {
      throw Error(ErrorKind::OracleMismatch, kModule, "oracle element 0 is not the identity");
    }
    std::vector<int> table(order * order);
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        table[a * order + b] = static_cast<int>(o->index_of(elements[a] * elements[b]));
      }
    }
    FiniteGroup group(order, std::move(table));
    std::vector<std::string> labels;
    for (auto const& e : elements) {
      labels.push_back(element_label(e, generator_names));
    }
    Tuples const tuples{order};
    auto name = [&](std::vector<int> const& t) {
      std::string out = "[";
      for (std::size_t i = 0; i < t.size(); ++i) {
        out += (i ? "," : "") + labels[static_cast<std::size_t>(t[i])];
      }
      return out + "]";
    };

    CrossedComplex c;
    c.add_object("o");
    for (std::size_t g = 0; g < order; ++g) {
      c.add_arrow(name({static_cast<int>(g)}), 0, 0);
    }
    auto letter = [&](int g, int exp = 1) { return Word::letter(c.alphabet(), g, exp); };

    for (int n = 2; n <= max_dim; ++n) {
      std::size_t count = 1;
      for (int k = 0; k < n; ++k) {
        count *= order;
      }
      for (std::size_t k = 0; k < count; ++k) {
        auto const t = tuples.tuple(k, n);
        Element bd;
        if (n == 2) {
          // omega[a,b] = [a][b][ab]^-1
          bd = letter(t[0]) * letter(t[1]) * letter(group.mul(t[0], t[1]), -1);
        } else if (n == 3) {
          // [a,bc][ab,c]^-1[a,b]^-1[b,c]^{[a]^-1}
          int const a = t[0], b = t[1], cc = t[2];
          auto gen2 = [&](int x, int y) {
            return static_cast<int>(tuples.index({x, y}));
          };
          PeifferSequence s(0);
          s.push({gen2(a, group.mul(b, cc)), 1, Word::identity(0)});
          s.push({gen2(group.mul(a, b), cc), -1, Word::identity(0)});
          s.push({gen2(a, b), -1, Word::identity(0)});
          s.push({gen2(b, cc), 1, letter(a, -1)});
          bd = s;
        } else {
          // [a2..an]^{[a1]^-1} + sum_i (-1)^i [..a_i a_{i+1}..] + (-1)^n [a1..a_{n-1}]
          ModuleElement m(n - 1, 0);
          std::vector<int> face(t.begin() + 1, t.end());
          m.add_term(static_cast<int>(tuples.index(face)), letter(t[0], -1), 1);
          for (int i = 1; i < n; ++i) {
            std::vector<int> merged;
            for (int j = 0; j < n; ++j) {
              if (j == i - 1) {
                merged.push_back(group.mul(t[static_cast<std::size_t>(i - 1)],
                                           t[static_cast<std::size_t>(i)]));
                ++j;
              } else {
                merged.push_back(t[static_cast<std::size_t>(j)]);
              }
            }
            m.add_term(static_cast<int>(tuples.index(merged)), Word::identity(0),
                       i % 2 == 0 ? 1 : -1);
          }
          face.assign(t.begin(), t.end() - 1);
          m.add_term(static_cast<int>(tuples.index(face)), Word::identity(0),
                     n % 2 == 0 ? 1 : -1);
          bd = m;
        }
        c.add_generator(n, name(t), 0, std::move(bd));
      }
    }
    c.set_top(max_dim);
    std::vector<int> images(order);
    for (std::size_t g = 0; g < order; ++g) {
      images[g] = static_cast<int>(g);
    }
    c.set_oracle(make_finite_oracle(c.alphabet(), std::move(group), std::move(images)));
    return c;
  }

  // --- C_p ------------------------------------------------------------------------

  CrossedComplex cyclic_resolution(int p, int max_dim) {
    if (p < 1) {
      throw Error(ErrorKind::InvalidArgument, kModule, "C_p needs p >= 1");
    }
    if (max_dim < 1) {
      throw Error(ErrorKind::DimensionOutOfRange, kModule, "max_dim must be at least 1");
    }
    CrossedComplex c;
    c.add_object("o");
    int const a = c.add_arrow("a", 0, 0);
    Word const letter = Word::letter(c.alphabet(), a);
    for (int n = 2; n <= max_dim; ++n) {
      std::string name = "c" + std::to_string(n);
      if (n == 2) {
        c.add_generator(2, std::move(name), 0, power(letter, p));
      } else if (n == 3) {
        // c2 (1 - a)
        PeifferSequence s(0);
        s.push({0, 1, Word::identity(0)});
        s.push({0, -1, letter});
        c.add_generator(3, std::move(name), 0, s);
      } else {
        ModuleElement m(n - 1, 0);
        if (n % 2 == 1) {
          m.add_term(0, Word::identity(0), 1);
          m.add_term(0, letter, -1);
        } else {
          for (int k = 0; k < p; ++k) {
            m.add_term(0, power(letter, k), 1);
          }
        }
        c.add_generator(n, std::move(name), 0, std::move(m));
      }
    }
    c.set_top(max_dim);
    c.set_oracle(make_finite_oracle(c.alphabet(), FiniteGroup::cyclic(static_cast<std::size_t>(p)),
                                    {p == 1 ? 0 : 1}));
    return c;
  }

  // --- amalgams -------------------------------------------------------------------

  CrossedComplex amalgam_resolution(AmalgamData const& d, int max_dim) {
    if (!d.a || !d.b || !d.c || !d.i || !d.j) {
      throw Error(ErrorKind::InvalidArgument, kModule, "amalgam data is incomplete");
    }
    require_one_object(*d.a, "A");
    require_one_object(*d.b, "B");
    require_one_object(*d.c, "C");
    int const top = std::min(max_dim, std::max({d.a->top(), d.b->top(), d.c->top() + 1, 1}));
    int const lift_top = std::min(top - 1, d.c->top());
    require_lift(*d.i, lift_top, "i''");
    require_lift(*d.j, lift_top, "j''");

    CrossedComplex const i_cx = interval();
    CrossedComplex const cyl = cylinder(*d.c, top);
    TensorEvaluator const th(i_cx, *d.c, cyl);

    auto r = std::make_shared<CrossedComplex>();
    r->add_object("0");
    r->add_object("1");
    auto const a_ids = copy_generators(*d.a, *r, [](ObjectId) { return 0; }, std::min(top, d.a->top()));
    auto const b_ids = copy_generators(*d.b, *r, [](ObjectId) { return 1; }, std::min(top, d.b->top()));
    int const iota = r->add_arrow("iota", 0, 1);
    std::vector<std::vector<int>> cyl_ids(static_cast<std::size_t>(top) + 1);
    for (int n = 2; n <= top; ++n) {
      for (std::size_t y = 0; y < d.c->count(n - 1); ++y) {
        std::string const yname = n - 1 == 1 ? d.c->arrows()[y].name : d.c->names(n - 1)[y];
        cyl_ids[static_cast<std::size_t>(n)].push_back(
            r->add_generator(n, "iota#" + yname, 1, Element::identity(n - 1, 1)));
      }
    }
    r->set_top(top);

    auto const embed_a = embedding(d.a, r, a_ids, 0);
    auto const embed_b = embedding(d.b, r, b_ids, 1);
    auto cyl_ptr = std::make_shared<CrossedComplex const>(cyl);
    ComplexMorphism glue(cyl_ptr, r);
    glue.set_object(0, 0);
    glue.set_object(1, 1);
    glue.set_image(1, *th.generator(1, 0, 0, 0), Word::letter(r->alphabet(), iota));
    for (int n = 1; n <= cyl.top(); ++n) {
      for (std::size_t y = 0; y < d.c->count(n); ++y) {
        int const yi = static_cast<int>(y);
        if (auto g = th.generator(0, 0, n, yi)) {
          glue.set_image(n, *g, apply_morphism(embed_a, d.i->image(n, yi)));
        }
        if (auto g = th.generator(0, 1, n, yi)) {
          glue.set_image(n, *g, apply_morphism(embed_b, d.j->image(n, yi)));
        }
      }
      if (n >= 2) {
        for (std::size_t y = 0; y < d.c->count(n - 1); ++y) {
          int const g = *th.generator(1, 0, n - 1, static_cast<int>(y));
          glue.set_image(n, g, cell(*r, n, cyl_ids[static_cast<std::size_t>(n)][y]));
        }
      }
    }

    copy_boundaries(*d.a, *r, a_ids, embed_a);
    copy_boundaries(*d.b, *r, b_ids, embed_b);
    for (int n = 2; n <= top; ++n) {
      for (std::size_t y = 0; y < d.c->count(n - 1); ++y) {
        int const g = *th.generator(1, 0, n - 1, static_cast<int>(y));
        r->set_boundary(n, cyl_ids[static_cast<std::size_t>(n)][y],
                        apply_morphism(glue, cyl.generator(n, g).boundary));
      }
    }
    return std::move(*r);
  }

  // --- HNN extensions ---------------------------------------------------------------

  namespace {
    //! z^-1 k0(b) z = k1(b) defines an automorphism of the finite vertex
    //! group when the images of k0 and k1 both generate it; returns the
    //! automorphism on element indices, if so.
    std::optional<std::vector<std::size_t>> hnn_twist(GroupOracle const& o, HnnData const& d) {
      auto const view = finite_view(o);
      if (!view) {
        return std::nullopt;
      }
      FiniteGroup const& g = *view->group;
      std::size_t const n = g.order();
      std::vector<std::pair<int, int>> pairs;
      for (std::size_t b = 0; b < d.a->count(1); ++b) {
        int const x = static_cast<int>(o.index_of(d.k0->image(1, static_cast<int>(b)).word()));
        int const y = static_cast<int>(o.index_of(d.k1->image(1, static_cast<int>(b)).word()));
        pairs.emplace_back(x, y);
      }
      std::vector<int> twist(n, -1);
      twist[0] = 0;
      std::vector<int> queue{0};
      for (std::size_t q = 0; q < queue.size(); ++q) {
        int const e = queue[q];
        for (auto const& [x, y] : pairs) {
          for (int sgn : {1, -1}) {
            int const from = g.mul(e, sgn > 0 ? x : g.inverse(x));
            int const to = g.mul(twist[static_cast<std::size_t>(e)], sgn > 0 ? y : g.inverse(y));
            int& slot = twist[static_cast<std::size_t>(from)];
            if (slot < 0) {
              slot = to;
              queue.push_back(from);
            } else if (slot != to) {
              return std::nullopt;
            }
          }
        }
      }
      std::vector<bool> hit(n, false);
      std::vector<std::size_t> out(n);
      for (std::size_t e = 0; e < n; ++e) {
        if (twist[e] < 0 || hit[static_cast<std::size_t>(twist[e])]) {
          return std::nullopt;
        }
        hit[static_cast<std::size_t>(twist[e])] = true;
        out[e] = static_cast<std::size_t>(twist[e]);
      }
      return out;
    }
  }  // namespace

  CrossedComplex hnn_resolution(HnnData const& d, int max_dim) {
    if (!d.g || !d.a || !d.k0 || !d.k1) {
      throw Error(ErrorKind::InvalidArgument, kModule, "HNN data is incomplete");
    }
    require_one_object(*d.g, "G");
    require_one_object(*d.a, "A");
    int const top = std::min(max_dim, std::max({d.g->top(), d.a->top() + 1, 1}));
    int const lift_top = std::min(top - 1, d.a->top());
    require_lift(*d.k0, lift_top, "k0''");
    require_lift(*d.k1, lift_top, "k1''");

    CrossedComplex const i_cx = interval();
    CrossedComplex const cyl = cylinder(*d.a, top);
    TensorEvaluator const th(i_cx, *d.a, cyl);

    auto r = std::make_shared<CrossedComplex>();
    r->add_object(d.g->objects()[0]);
    auto const g_ids = copy_generators(*d.g, *r, [](ObjectId) { return 0; }, std::min(top, d.g->top()));
    int const z = r->add_arrow("z", 0, 0);
    std::vector<std::vector<int>> cyl_ids(static_cast<std::size_t>(top) + 1);
    for (int n = 2; n <= top; ++n) {
      for (std::size_t y = 0; y < d.a->count(n - 1); ++y) {
        std::string const yname = n - 1 == 1 ? d.a->arrows()[y].name : d.a->names(n - 1)[y];
        cyl_ids[static_cast<std::size_t>(n)].push_back(
            r->add_generator(n, "z#" + yname, 0, Element::identity(n - 1, 0)));
      }
    }
    r->set_top(top);

    auto const embed_g = embedding(d.g, r, g_ids, 0);
    auto cyl_ptr = std::make_shared<CrossedComplex const>(cyl);
    ComplexMorphism glue(cyl_ptr, r);
    glue.set_object(0, 0);
    glue.set_object(1, 0);
    glue.set_image(1, *th.generator(1, 0, 0, 0), Word::letter(r->alphabet(), z));
    // k1''(b) for each dimension-1 generator b of A: iota#b = (z#b)^{k1'' b}.
    std::vector<Word> shift;
    for (int n = 1; n <= cyl.top(); ++n) {
      for (std::size_t y = 0; y < d.a->count(n); ++y) {
        int const yi = static_cast<int>(y);
        if (auto g = th.generator(0, 0, n, yi)) {
          glue.set_image(n, *g, apply_morphism(embed_g, d.k0->image(n, yi)));
        }
        if (auto g = th.generator(0, 1, n, yi)) {
          glue.set_image(n, *g, apply_morphism(embed_g, d.k1->image(n, yi)));
        }
        if (n == 1) {
          shift.push_back(apply_morphism(embed_g, d.k1->image(1, yi)).word());
        }
      }
      if (n >= 2) {
        for (std::size_t y = 0; y < d.a->count(n - 1); ++y) {
          int const g = *th.generator(1, 0, n - 1, static_cast<int>(y));
          Element image = cell(*r, n, cyl_ids[static_cast<std::size_t>(n)][y]);
          if (n == 2) {
            image = act(image, shift[y]);
          }
          glue.set_image(n, g, std::move(image));
        }
      }
    }

    copy_boundaries(*d.g, *r, g_ids, embed_g);
    for (int n = 2; n <= top; ++n) {
      for (std::size_t y = 0; y < d.a->count(n - 1); ++y) {
        int const g = *th.generator(1, 0, n - 1, static_cast<int>(y));
        Element bd = apply_morphism(glue, cyl.generator(n, g).boundary);
        if (n == 2) {
          bd = act(bd, shift[y].inverse());
        }
        r->set_boundary(n, cyl_ids[static_cast<std::size_t>(n)][y], std::move(bd));
      }
    }

    if (d.g->oracle()) {
      if (auto twist = hnn_twist(*d.g->oracle(), d)) {
        auto const view = finite_view(*d.g->oracle());
        std::vector<int> images(r->count(1), -1);
        for (std::size_t g = 0; g < d.g->count(1); ++g) {
          images[static_cast<std::size_t>(g_ids[1][g])] = (*view->generator_images)[g];
        }
        auto base = make_finite_oracle(r->alphabet(), *view->group, std::move(images));
        r->set_oracle(make_semidirect_oracle(r->alphabet(), std::move(base), z, std::move(*twist)));
      }
    }
    return std::move(*r);
  }

  // --- retraction ---------------------------------------------------------------

  CrossedComplex retract_to_vertex(CrossedComplex const& c, ObjectId keep) {
    if (c.objects().size() == 1) {
      return c;
    }
    if (c.objects().size() != 2 || keep < 0 || keep > 1) {
      throw Error(ErrorKind::NotTwoObject, kModule,
                  "retraction needs a two-object complex and keep in {0, 1}");
    }
    std::optional<int> edge;
    for (std::size_t g = 0; g < c.count(1); ++g) {
      auto const& a = c.arrows()[g];
      if (a.source != a.target && (!edge || a.name == "iota")) {
        edge = static_cast<int>(g);
      }
    }
    if (!edge) {
      throw Error(ErrorKind::NotTwoObject, kModule, "no arrow joins the two objects");
    }
    auto source = std::make_shared<CrossedComplex const>(c);
    auto r = std::make_shared<CrossedComplex>();
    r->add_object(c.objects()[static_cast<std::size_t>(keep)]);
    ComplexMorphism f(source, r);
    f.set_object(0, 0);
    f.set_object(1, 0);
    for (std::size_t g = 0; g < c.count(1); ++g) {
      if (static_cast<int>(g) == *edge) {
        f.set_image(1, static_cast<int>(g), Word::identity(0));
      } else {
        int const id = r->add_arrow(c.arrows()[g].name, 0, 0);
        f.set_image(1, static_cast<int>(g), Word::letter(r->alphabet(), id));
      }
    }
    for (int n = 2; n <= c.top(); ++n) {
      for (std::size_t g = 0; g < c.count(n); ++g) {
        int const id = r->add_generator(n, c.generators(n)[g].name, 0, Element::identity(n - 1, 0));
        f.set_image(n, static_cast<int>(g), cell(*r, n, id));
      }
    }
    r->set_top(c.top());
    for (int n = 2; n <= c.top(); ++n) {
      for (std::size_t g = 0; g < c.count(n); ++g) {
        r->set_boundary(n, static_cast<int>(g), apply_morphism(f, c.generators(n)[g].boundary));
      }
    }
    return std::move(*r);
  }

}  // namespace xres
