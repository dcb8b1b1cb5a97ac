// SPDX-License-Identifier: Apache-2.0

// Tensor products of free crossed complexes. A generator a (x) b of
// dimension m + n sits at (tau a, tau b); its boundary follows the six-case
// rule, and composite arguments are expanded by the bimorphism laws:
//
//   x (x) (y1...yk)   = sum_i (x (x) y_i)^{tau x (x) y_{i+1}...y_k}      n = 1
//   x (x) y^-1        = -(x (x) y)^{tau x (x) y^-1}                      n = 1
//   (x1...xk) (x) y   = sum_{i=k..1} (x_i (x) y)^{x_{i+1}...x_k (x) tau y} m = 1
//   x^-1 (x) y        = -(x (x) y)^{x^-1 (x) tau y}                      m = 1
//   x (x) sum e_i y_i^{u_i} = sum e_i (x (x) y_i)^{tau x (x) u_i}         n >= 2
//   sum e_i x_i^{u_i} (x) y = sum e_i (x_i (x) y)^{u_i (x) tau y}         m >= 2
//
// Right arguments are expanded before left ones.

#include <functional>

#include "xres/constructions.hpp"
#include "xres/error.hpp"

namespace xres {

  namespace {
    constexpr char const* kModule = "constructions";

    ObjectId tau_cell(CrossedComplex const& c, int dim, int i) {
      if (dim == 0) {
        return i;
      }
      if (dim == 1) {
        return c.arrows().at(static_cast<std::size_t>(i)).target;
      }
      return c.generator(dim, i).base;
    }

    ObjectId tau(Element const& e) {
      switch (e.dim()) {
        case 0:
          return e.point().object;
        case 1:
          return e.word().target();
        default:
          return e.base();
      }
    }

    Element cell(CrossedComplex const& c, int dim, int i) {
      switch (dim) {
        case 0:
          return Point{i};
        case 1:
          return Word::letter(c.alphabet(), i);
        case 2:
          return PeifferSequence::generator(i, c.generator(2, i).base);
        default:
          return ModuleElement::generator(dim, i, c.generator(dim, i).base);
      }
    }

    //! The generator index when e is a single generator at its own
    //! basepoint with exponent / coefficient 1.
    std::optional<int> pure(Element const& e) {
      switch (e.dim()) {
        case 1: {
          auto const& w = e.word();
          if (w.size() == 1 && w.letters()[0].exp > 0) {
            return w.letters()[0].gen;
          }
          return std::nullopt;
        }
        case 2: {
          auto const& f = e.peiffer().factors();
          if (f.size() == 1 && f[0].sign > 0 && f[0].conj.empty()) {
            return f[0].gen;
          }
          return std::nullopt;
        }
        default: {
          if (e.dim() < 1) {
            return std::nullopt;
          }
          auto const& t = e.module().terms();
          if (t.size() == 1 && t.begin()->second == 1 && t.begin()->first.second.empty()) {
            return t.begin()->first.first;
          }
          return std::nullopt;
        }
      }
    }

    Element signed_by(int k, Element const& e) {
      return k % 2 == 0 ? e : negate(e);
    }

    //! Calls f(d, m, i, n, j) for every pair of cells of total dimension
    //! 1..top in the order the generators of the tensor product are made.
    void for_each_pair(CrossedComplex const& a, CrossedComplex const& b, int top,
                       std::function<void(int, int, int, int, int)> const& f) {
      for (int d = 1; d <= top; ++d) {
        for (int m = d; m >= 0; --m) {
          int const n = d - m;
          if (m > a.top() || n > b.top()) {
            continue;
          }
          for (std::size_t i = 0; i < a.count(m); ++i) {
            for (std::size_t j = 0; j < b.count(n); ++j) {
              f(d, m, static_cast<int>(i), n, static_cast<int>(j));
            }
          }
        }
      }
    }

    Word suffix(Word const& w, std::size_t from, Alphabet const& alphabet) {
      auto const letters = w.letters();
      ObjectId start = w.target();
      if (from < letters.size()) {
        auto const& l = letters[from];
        auto const& arrow = alphabet.at(static_cast<std::size_t>(l.gen));
        start = l.exp > 0 ? arrow.source : arrow.target;
      }
      return reduce(start, letters.subspan(std::min(from, letters.size())), alphabet);
    }
  }  // namespace

  TensorEvaluator::TensorEvaluator(CrossedComplex const& a, CrossedComplex const& b,
                                   CrossedComplex const& t)
      : a_(a), b_(b), t_(t), b_objects_(b.objects().size()) {
    std::vector<int> next(static_cast<std::size_t>(std::max(t.top(), 1)) + 1, 0);
    for_each_pair(a, b, t.top(), [&](int d, int m, int i, int n, int j) {
      gens_[{m, i, n, j}] = next[static_cast<std::size_t>(d)]++;
    });
  }

  std::optional<int> TensorEvaluator::generator(int m, int i, int n, int j) const {
    auto it = gens_.find({m, i, n, j});
    if (it == gens_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  ObjectId TensorEvaluator::object(ObjectId p, ObjectId q) const {
    return static_cast<ObjectId>(static_cast<std::size_t>(p) * b_objects_
                                 + static_cast<std::size_t>(q));
  }

  Element TensorEvaluator::operator()(Element const& x, Element const& y) const {
    int const m = x.dim();
    int const n = y.dim();
    auto const& th = *this;
    auto lookup = [&](int mm, int i, int nn, int j) {
      auto g = generator(mm, i, nn, j);
      if (!g) {
        throw Error(ErrorKind::DimensionOverflow, kModule,
                    "tensor generator of dimension " + std::to_string(mm + nn)
                        + " is beyond the top of the product");
      }
      return *g;
    };

    if (m == 0 && n == 0) {
      return Point{object(x.point().object, y.point().object)};
    }

    // Renaming embeddings p (x) - and - (x) q.
    if (m == 0 || n == 0) {
      bool const left_point = m == 0;
      ObjectId const p = left_point ? x.point().object : y.point().object;
      Element const& e = left_point ? y : x;
      int const d = e.dim();
      auto gen = [&](int dim, int g) {
        return left_point ? lookup(0, p, dim, g) : lookup(dim, g, 0, p);
      };
      auto obj = [&](ObjectId q) { return left_point ? object(p, q) : object(q, p); };
      std::function<Word(Word const&)> path = [&](Word const& w) {
        std::vector<Letter> letters;
        for (auto const& l : w.letters()) {
          letters.push_back({gen(1, l.gen), l.exp});
        }
        return reduce(obj(w.source()), letters, t_.alphabet());
      };
      if (d == 1) {
        return path(e.word());
      }
      if (d == 2) {
        PeifferSequence out(obj(e.base()));
        for (auto const& f : e.peiffer().factors()) {
          out.push({gen(2, f.gen), f.sign, path(f.conj)});
        }
        return out;
      }
      ModuleElement out(d, obj(e.base()));
      for (auto const& [key, c] : e.module().terms()) {
        out.add_term(gen(d, key.first), path(key.second), c);
      }
      return out;
    }

    // Right argument composite.
    if (!pure(y)) {
      Point const tx{tau(x)};
      if (n == 1) {
        auto const& w = y.word();
        Element out = Element::identity(m + 1, object(tx.object, w.target()));
        auto const letters = w.letters();
        for (std::size_t k = 0; k < letters.size(); ++k) {
          Element const g = Word::letter(b_.alphabet(), letters[k].gen);
          Element piece = th(x, g);
          if (letters[k].exp < 0) {
            piece = negate(act(piece, th(tx, g.word().inverse()).word()));
          }
          piece = act(piece, th(tx, suffix(w, k + 1, b_.alphabet())).word());
          out = compose(out, piece);
        }
        return out;
      }
      Element out = Element::identity(m + n, object(tx.object, y.base()));
      if (n == 2) {
        for (auto const& f : y.peiffer().factors()) {
          Element piece = act(th(x, cell(b_, 2, f.gen)), th(tx, f.conj).word());
          out = compose(out, f.sign > 0 ? piece : negate(piece));
        }
        return out;
      }
      for (auto const& [key, c] : y.module().terms()) {
        Element piece = act(th(x, cell(b_, n, key.first)), th(tx, key.second).word());
        ModuleElement mpiece = piece.module();
        mpiece *= c;
        out = compose(out, mpiece);
      }
      return out;
    }

    // Left argument composite, right argument a generator.
    if (!pure(x)) {
      Point const ty{tau(y)};
      if (m == 1) {
        auto const& w = x.word();
        Element out = Element::identity(1 + n, object(w.target(), ty.object));
        auto const letters = w.letters();
        for (std::size_t k = letters.size(); k-- > 0;) {
          Element const g = Word::letter(a_.alphabet(), letters[k].gen);
          Element piece = th(g, y);
          if (letters[k].exp < 0) {
            piece = negate(act(piece, th(g.word().inverse(), ty).word()));
          }
          piece = act(piece, th(suffix(w, k + 1, a_.alphabet()), ty).word());
          out = compose(out, piece);
        }
        return out;
      }
      Element out = Element::identity(m + n, object(x.base(), ty.object));
      if (m == 2) {
        for (auto const& f : x.peiffer().factors()) {
          Element piece = act(th(cell(a_, 2, f.gen), y), th(f.conj, ty).word());
          out = compose(out, f.sign > 0 ? piece : negate(piece));
        }
        return out;
      }
      for (auto const& [key, c] : x.module().terms()) {
        Element piece = act(th(cell(a_, m, key.first), y), th(key.second, ty).word());
        ModuleElement mpiece = piece.module();
        mpiece *= c;
        out = compose(out, mpiece);
      }
      return out;
    }

    int const g = lookup(m, *pure(x), n, *pure(y));
    return cell(t_, m + n, g);
  }

  CrossedComplex tensor_product(CrossedComplex const& a, CrossedComplex const& b, int max_dim,
                                TensorOptions options) {
    if (max_dim < 1) {
      throw Error(ErrorKind::DimensionOutOfRange, kModule, "tensor product needs max_dim >= 1");
    }
    int const top = std::min(max_dim, a.top() + b.top());
    bool const a_single = a.objects().size() == 1;
    bool const b_single = b.objects().size() == 1;
    auto cell_name = [](CrossedComplex const& c, int dim, int i) {
      return dim == 0 ? c.objects()[static_cast<std::size_t>(i)] : c.names(dim)[static_cast<std::size_t>(i)];
    };
    auto join = [&](std::string const& l, std::string const& r, bool l_obj, bool r_obj) {
      if (options.short_names) {
        if (l_obj && a_single && !(r_obj && b_single)) {
          return r;
        }
        if (r_obj && b_single && !(l_obj && a_single)) {
          return l;
        }
      }
      return l + "#" + r;
    };

    CrossedComplex t;
    for (std::size_t p = 0; p < a.objects().size(); ++p) {
      for (std::size_t q = 0; q < b.objects().size(); ++q) {
        t.add_object(join(a.objects()[p], b.objects()[q], true, true));
      }
    }
    t.set_top(top);
    auto const nb = b.objects().size();
    auto object = [&](ObjectId p, ObjectId q) {
      return static_cast<ObjectId>(static_cast<std::size_t>(p) * nb + static_cast<std::size_t>(q));
    };

    std::vector<std::vector<std::array<int, 4>>> pending(static_cast<std::size_t>(top) + 1);
    for_each_pair(a, b, top, [&](int d, int m, int i, int n, int j) {
      std::string name = join(cell_name(a, m, i), cell_name(b, n, j), m == 0, n == 0);
      if (d == 1) {
        ObjectId s, e;
        if (m == 1) {
          auto const& arrow = a.arrows()[static_cast<std::size_t>(i)];
          s = object(arrow.source, j);
          e = object(arrow.target, j);
        } else {
          auto const& arrow = b.arrows()[static_cast<std::size_t>(j)];
          s = object(i, arrow.source);
          e = object(i, arrow.target);
        }
        t.add_arrow(std::move(name), s, e);
      } else {
        ObjectId const base = object(tau_cell(a, m, i), tau_cell(b, n, j));
        t.add_generator(d, std::move(name), base, Element::identity(d - 1, base));
        pending[static_cast<std::size_t>(d)].push_back({m, i, n, j});
      }
    });

    TensorEvaluator const th(a, b, t);
    for (int d = 2; d <= top; ++d) {
      auto const& cells = pending[static_cast<std::size_t>(d)];
      for (std::size_t k = 0; k < cells.size(); ++k) {
        auto const [m, i, n, j] = cells[k];
        Element const x = cell(a, m, i);
        Element const y = cell(b, n, j);
        Element bd;
        if (m == 0) {
          bd = th(Point{i}, b.generator(n, j).boundary);
        } else if (n == 0) {
          bd = th(a.generator(m, i).boundary, Point{j});
        } else if (m == 1 && n == 1) {
          auto const& ar = a.arrows()[static_cast<std::size_t>(i)];
          auto const& br = b.arrows()[static_cast<std::size_t>(j)];
          bd = th(Point{ar.target}, y).word().inverse() * th(x, Point{br.source}).word().inverse()
               * th(Point{ar.source}, y).word() * th(x, Point{br.target}).word();
        } else if (m == 1) {
          auto const& ar = a.arrows()[static_cast<std::size_t>(i)];
          Point const tb{b.generator(n, j).base};
          bd = compose(compose(negate(th(x, b.generator(n, j).boundary)),
                               negate(th(Point{ar.target}, y))),
                       act(th(Point{ar.source}, y), th(x, tb).word()));
        } else if (n == 1) {
          auto const& br = b.arrows()[static_cast<std::size_t>(j)];
          Point const ta{a.generator(m, i).base};
          bd = compose(compose(signed_by(m + 1, th(x, Point{br.target})),
                               signed_by(m, act(th(x, Point{br.source}), th(ta, y).word()))),
                       th(a.generator(m, i).boundary, y));
        } else {
          bd = compose(th(a.generator(m, i).boundary, y),
                       signed_by(m, th(x, b.generator(n, j).boundary)));
        }
        t.set_boundary(d, static_cast<int>(k), std::move(bd));
      }
    }

    // pi_1 of a product of one-object complexes is the product of the pi_1s.
    if (a_single && b_single && a.oracle() && b.oracle()) {
      std::vector<int> left(t.count(1), -1), right(t.count(1), -1);
      std::vector<bool> in_left(t.count(1), false);
      for (std::size_t g = 0; g < a.count(1); ++g) {
        auto const id = static_cast<std::size_t>(*th.generator(1, static_cast<int>(g), 0, 0));
        left[id] = static_cast<int>(g);
        in_left[id] = true;
      }
      for (std::size_t g = 0; g < b.count(1); ++g) {
        right[static_cast<std::size_t>(*th.generator(0, 0, 1, static_cast<int>(g)))]
            = static_cast<int>(g);
      }
      t.set_oracle(make_product_oracle(make_relabelled_oracle(a.oracle(), a.count(1), left),
                                       make_relabelled_oracle(b.oracle(), b.count(1), right),
                                       std::move(in_left)));
    }
    return t;
  }

  CrossedComplex interval() {
    CrossedComplex c;
    c.add_object("0");
    c.add_object("1");
    c.add_arrow("iota", 0, 1);
    c.set_top(1);
    return c;
  }

  CrossedComplex cylinder(CrossedComplex const& b, int max_dim) {
    CrossedComplex const i = interval();
    CrossedComplex t = tensor_product(i, b, max_dim, {.short_names = true});
    if (b.objects().size() == 1 && b.oracle()) {
      TensorEvaluator const th(i, b, t);
      std::vector<int> map(t.count(1), -1);
      std::vector<bool> tree_gens(t.count(1), false);
      for (std::size_t g = 0; g < b.count(1); ++g) {
        for (int end : {0, 1}) {
          map[static_cast<std::size_t>(*th.generator(0, end, 1, static_cast<int>(g)))]
              = static_cast<int>(g);
        }
      }
      int const iota = *th.generator(1, 0, 0, 0);
      tree_gens[static_cast<std::size_t>(iota)] = true;
      std::vector<Word> tree{Word::identity(0), Word::letter(t.alphabet(), iota)};
      t.set_oracle(make_groupoid_oracle(
          t.alphabet(), make_relabelled_oracle(b.oracle(), b.count(1), std::move(map), 0),
          std::move(tree), std::move(tree_gens)));
    }
    return t;
  }

}  // namespace xres
