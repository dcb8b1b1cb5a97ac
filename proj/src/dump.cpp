// SPDX-License-Identifier: Apache-2.0

#include "xres/dump.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "xres/detail/cursor.hpp"
#include "xres/error.hpp"
#include "xres/presentation.hpp"

namespace xres {

  namespace {
    constexpr char const* kModule = "crossed_complex";

    std::vector<std::size_t> sorted_indices(std::vector<std::string> const& names) {
      std::vector<std::size_t> idx(names.size());
      std::iota(idx.begin(), idx.end(), std::size_t{0});
      std::stable_sort(idx.begin(), idx.end(),
                       [&](std::size_t a, std::size_t b) { return names[a] < names[b]; });
      return idx;
    }

    std::string const& object_name(CrossedComplex const& c, ObjectId p) {
      return c.objects().at(static_cast<std::size_t>(p));
    }

    // --- parsing ---------------------------------------------------------

    Word parse_path(detail::Cursor& cur, CrossedComplex const& c, ObjectId start) {
      std::size_t const at = cur.position();
      auto const letters = detail::parse_raw_word(cur, c.arrow_names());
      try {
        return reduce(start, letters, c.alphabet());
      } catch (Error const&) {
        cur.fail_at(at, "word is not a path from object " + object_name(c, start));
      }
    }

    int lookup(detail::Cursor& cur, CrossedComplex const& c, int dim) {
      std::size_t const at = cur.position();
      std::string const name = cur.identifier();
      auto g = c.find(dim, name);
      if (!g) {
        cur.fail_at(at, "unknown dimension-" + std::to_string(dim) + " generator '" + name + "'");
      }
      return *g;
    }

    PeifferSequence parse_sequence(detail::Cursor& cur, CrossedComplex const& c, ObjectId base) {
      PeifferSequence out(base);
      cur.skip_space();
      if (cur.at_integer()) {
        std::size_t const at = cur.position();
        if (cur.integer() != 1) {
          cur.fail_at(at, "only '1' may stand for the identity");
        }
        return out;
      }
      do {
        int const gen = lookup(cur, c, 2);
        ObjectId const gbase = c.generator(2, gen).base;
        int sign = 1;
        Word conj = Word::identity(gbase);
        if (cur.accept("^-1")) {
          sign = -1;
        }
        if (cur.accept("^(")) {
          conj = parse_path(cur, c, gbase);
          cur.expect(")");
        }
        if (conj.target() != base) {
          cur.fail("conjugator does not end at object " + object_name(c, base));
        }
        out *= PeifferSequence::generator(gen, gbase, sign).act(conj);
      } while (cur.accept("*"));
      return out;
    }

    // ring := ['-'] rterm (('+'|'-') rterm)*,  rterm := n | [n '*'] word
    void parse_ring(detail::Cursor& cur, CrossedComplex const& c, int dim, int gen,
                    ModuleElement& out) {
      ObjectId const gbase = c.generator(dim, gen).base;
      int sign = cur.accept("-") ? -1 : 1;
      while (true) {
        cur.skip_space();
        Integer n = 1;
        Word u = Word::identity(gbase);
        if (cur.at_integer()) {
          n = cur.integer();
          if (cur.accept("*")) {
            u = parse_path(cur, c, gbase);
          }
        } else {
          u = parse_path(cur, c, gbase);
        }
        if (u.target() != out.base()) {
          cur.fail("coefficient path does not end at object " + object_name(c, out.base()));
        }
        out.add_term(gen, u, sign * n);
        if (cur.accept("+")) {
          sign = 1;
        } else if (cur.accept("-")) {
          sign = -1;
        } else {
          return;
        }
      }
    }

    ModuleElement parse_module(detail::Cursor& cur, CrossedComplex const& c, int dim,
                               ObjectId base) {
      ModuleElement out(dim, base);
      cur.skip_space();
      if (cur.at_integer()) {
        std::size_t const at = cur.position();
        if (cur.integer() != 0) {
          cur.fail_at(at, "only '0' may stand for the zero element");
        }
        return out;
      }
      int sign = cur.accept("-") ? -1 : 1;
      while (true) {
        int const gen = lookup(cur, c, dim);
        if (!cur.accept(".[")) {
          cur.fail("expected '.[' after a module generator");
        }
        ModuleElement term(dim, base);
        parse_ring(cur, c, dim, gen, term);
        cur.expect("]");
        term *= sign;
        out += term;
        if (cur.accept("+")) {
          sign = 1;
        } else if (cur.accept("-")) {
          sign = -1;
        } else {
          return out;
        }
      }
    }

    Element parse_at(detail::Cursor& cur, int dim, ObjectId base, CrossedComplex const& c) {
      switch (dim) {
        case 1:
          return parse_path(cur, c, base);
        case 2:
          return parse_sequence(cur, c, base);
        default:
          if (dim < 1) {
            cur.fail("elements of dimension " + std::to_string(dim) + " have no syntax");
          }
          return parse_module(cur, c, dim, base);
      }
    }
  }  // namespace

  // --- formatting --------------------------------------------------------------

  std::string format(PeifferSequence const& s, CrossedComplex const& c) {
    if (s.empty()) {
      return "1";
    }
    std::string out;
    for (auto const& f : s.factors()) {
      if (!out.empty()) {
        out += '*';
      }
      out += c.generator(2, f.gen).name;
      if (f.sign < 0) {
        out += "^-1";
      }
      if (!f.conj.empty()) {
        out += "^(" + format(f.conj, c.arrow_names()) + ")";
      }
    }
    return out;
  }

  std::string format(ModuleElement const& m, CrossedComplex const& c) {
    if (m.is_zero()) {
      return "0";
    }
    std::map<int, GroupRingElement> coords;
    for (auto const& [key, n] : m.terms()) {
      coords[key.first].add_term(key.second, n);
    }
    std::vector<std::string> gens;
    std::vector<int> ids;
    for (auto const& [g, r] : coords) {
      gens.push_back(c.generator(m.dim(), g).name);
      ids.push_back(g);
    }
    std::string out;
    for (auto i : sorted_indices(gens)) {
      if (!out.empty()) {
        out += " + ";
      }
      out += gens[i] + ".[" + format(coords[ids[i]], c.arrow_names()) + "]";
    }
    return out;
  }

  std::string format(Element const& x, CrossedComplex const& c) {
    switch (x.dim()) {
      case 0:
        return object_name(c, x.point().object);
      case 1:
        return format(x.word(), c.arrow_names());
      case 2:
        return format(x.peiffer(), c);
      default:
        return format(x.module(), c);
    }
  }

  Element parse_element(std::string_view text, int dim, ObjectId base, CrossedComplex const& c) {
    detail::Cursor cur(text, kModule);
    Element e = parse_at(cur, dim, base, c);
    if (!cur.done()) {
      cur.fail("trailing input");
    }
    return e;
  }

  // --- dumps -------------------------------------------------------------------

  std::string print_complex(CrossedComplex const& c) {
    std::ostringstream os;
    os << "objects: ";
    for (std::size_t i = 0; i < c.objects().size(); ++i) {
      os << (i ? ", " : "") << c.objects()[i];
    }
    os << '\n';
    int const top = std::max(c.top(), 1);
    os << "dim 1:";
    {
      auto const names = c.names(1);
      bool first = true;
      for (auto i : sorted_indices(names)) {
        auto const& a = c.arrows()[i];
        os << (first ? " " : ", ") << a.name << " : " << object_name(c, a.source) << " -> "
           << object_name(c, a.target);
        first = false;
      }
    }
    os << '\n';
    for (int dim = 2; dim <= top; ++dim) {
      os << "dim " << dim << ":";
      auto const names = c.names(dim);
      bool first = true;
      for (auto i : sorted_indices(names)) {
        os << (first ? " " : ", ") << names[i] << " @ "
           << object_name(c, c.generators(dim)[i].base);
        first = false;
      }
      os << '\n';
    }
    os << "top: " << c.top() << '\n';
    for (int dim = 2; dim <= top; ++dim) {
      auto const names = c.names(dim);
      for (auto i : sorted_indices(names)) {
        os << "d " << names[i] << " = " << format(c.generators(dim)[i].boundary, c) << '\n';
      }
    }
    return os.str();
  }

  CrossedComplex parse_complex(std::string_view text) {
    CrossedComplex c;
    struct Pending {
      std::size_t line_start;
      std::size_t line_end;
    };
    std::vector<Pending> boundaries;
    std::optional<int> top;
    bool have_objects = false;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      detail::Cursor cur(text.substr(0, end), kModule);
      cur.seek(pos);
      std::size_t const next = end + 1;
      if (cur.done()) {
        pos = next;
        continue;
      }
      if (cur.accept("objects:")) {
        if (have_objects) {
          cur.fail("objects listed twice");
        }
        have_objects = true;
        do {
          std::size_t const at = cur.position();
          std::string name = cur.object_name();
          if (c.object_index(name)) {
            cur.fail_at(at, "duplicate object '" + name + "'");
          }
          c.add_object(std::move(name));
        } while (cur.accept(","));
      } else if (cur.accept("top:")) {
        top = static_cast<int>(cur.integer());
      } else if (cur.accept("dim")) {
        if (!have_objects) {
          cur.fail("generators listed before objects");
        }
        std::size_t const dat = cur.position();
        long const dim = cur.integer();
        cur.expect(":");
        if (dim < 1) {
          cur.fail_at(dat, "dimensions start at 1");
        }
        if (!cur.done()) {
          do {
            std::size_t const at = cur.position();
            std::string name = cur.identifier();
            if (c.find(static_cast<int>(dim), name)) {
              cur.fail_at(at, "duplicate generator '" + name + "'");
            }
            auto object = [&] {
              std::size_t const oat = cur.position();
              auto p = c.object_index(cur.object_name());
              if (!p) {
                cur.fail_at(oat, "unknown object");
              }
              return *p;
            };
            if (dim == 1) {
              cur.expect(":");
              ObjectId const s = object();
              cur.expect("->");
              ObjectId const t = object();
              c.add_arrow(std::move(name), s, t);
            } else {
              cur.expect("@");
              ObjectId const p = object();
              c.add_generator(static_cast<int>(dim), std::move(name), p,
                              Element::identity(static_cast<int>(dim) - 1, p));
            }
          } while (cur.accept(","));
        }
      } else if (cur.accept("d ") || cur.accept("d\t")) {
        boundaries.push_back({pos, end});
        pos = next;
        continue;
      } else {
        cur.fail("expected 'objects:', 'dim n:', 'top:' or 'd <generator> = ...'");
      }
      if (!cur.done()) {
        cur.fail("trailing input");
      }
      pos = next;
    }
    if (!have_objects) {
      throw SyntaxError(kModule, 0, "missing 'objects:' line");
    }
    for (auto const& b : boundaries) {
      detail::Cursor cur(text.substr(0, b.line_end), kModule);
      cur.seek(b.line_start);
      cur.expect("d");
      std::size_t const at = cur.position();
      std::string const name = cur.identifier();
      std::optional<std::pair<int, int>> found;
      for (int dim = 2; dim <= c.top(); ++dim) {
        if (auto g = c.find(dim, name)) {
          if (found) {
            cur.fail_at(at, "generator name '" + name + "' is ambiguous");
          }
          found = {dim, *g};
        }
      }
      if (!found) {
        cur.fail_at(at, "unknown generator '" + name + "'");
      }
      cur.expect("=");
      auto const [dim, gen] = *found;
      ObjectId const base = c.generator(dim, gen).base;
      Element e = parse_at(cur, dim - 1, base, c);
      if (!cur.done()) {
        cur.fail("trailing input");
      }
      if (dim == 2 && !(e.word().is_loop() && e.word().source() == base)) {
        cur.fail_at(at, "boundary of '" + name + "' is not a loop at its basepoint");
      }
      c.set_boundary(dim, gen, std::move(e));
    }
    if (top) {
      c.set_top(std::max(*top, c.top()));
    }
    return c;
  }

}  // namespace xres
