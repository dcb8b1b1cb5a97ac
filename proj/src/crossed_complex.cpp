// SPDX-License-Identifier: Apache-2.0

#include "xres/crossed_complex.hpp"

#include <algorithm>
#include <deque>

#include "xres/error.hpp"

namespace xres {

  namespace {
    constexpr char const* kModule = "crossed_complex";

    std::string describe(CrossedComplex const& c, int dim, int gen) {
      std::string name
          = dim == 1 ? c.arrow_names().at(static_cast<std::size_t>(gen)) : c.generator(dim, gen).name;
      return "dim " + std::to_string(dim) + ": " + name;
    }

    std::vector<CellGenerator> const kNoCells;
  }  // namespace

  // --- CrossedComplex ----------------------------------------------------------

  ObjectId CrossedComplex::add_object(std::string name) {
    if (object_index(name)) {
      throw Error(ErrorKind::InvalidArgument, kModule, "duplicate object " + name);
    }
    objects_.push_back(std::move(name));
    return static_cast<ObjectId>(objects_.size() - 1);
  }

  std::optional<ObjectId> CrossedComplex::object_index(std::string_view name) const {
    auto it = std::find(objects_.begin(), objects_.end(), name);
    if (it == objects_.end()) {
      return std::nullopt;
    }
    return static_cast<ObjectId>(it - objects_.begin());
  }

  int CrossedComplex::add_arrow(std::string name, ObjectId source, ObjectId target) {
    auto const n = static_cast<ObjectId>(objects_.size());
    if (source < 0 || source >= n || target < 0 || target >= n) {
      throw Error(ErrorKind::InvalidArgument, kModule, "arrow " + name + " has unknown endpoints");
    }
    if (find(1, name)) {
      throw Error(ErrorKind::InvalidArgument, kModule, "duplicate dimension-1 generator " + name);
    }
    arrows_.push_back({name, source, target});
    alphabet_.push_back({source, target});
    arrow_names_.push_back(std::move(name));
    return static_cast<int>(arrows_.size() - 1);
  }

  int CrossedComplex::add_generator(int dim, std::string name, ObjectId base, Element boundary) {
    if (dim < 2) {
      throw Error(ErrorKind::DimensionOutOfRange, kModule,
                  "add_generator needs dimension >= 2, use add_arrow for dimension 1");
    }
    if (base < 0 || base >= static_cast<ObjectId>(objects_.size())) {
      throw Error(ErrorKind::InvalidArgument, kModule, "generator " + name + " has unknown basepoint");
    }
    if (find(dim, name)) {
      throw Error(ErrorKind::InvalidArgument, kModule,
                  "duplicate dimension-" + std::to_string(dim) + " generator " + name);
    }
    if (cells_.size() <= static_cast<std::size_t>(dim)) {
      cells_.resize(static_cast<std::size_t>(dim) + 1);
    }
    auto& cells = cells_[static_cast<std::size_t>(dim)];
    cells.push_back({std::move(name), base, Element::identity(dim - 1, base)});
    set_boundary(dim, static_cast<int>(cells.size() - 1), std::move(boundary));
    if (top_ >= 0 && top_ < dim) {
      top_ = dim;
    }
    return static_cast<int>(cells.size() - 1);
  }

  void CrossedComplex::set_boundary(int dim, int gen, Element boundary) {
    auto& g = const_cast<CellGenerator&>(generator(dim, gen));
    if (boundary.is_identity()) {
      boundary = Element::identity(dim - 1, g.base);
    }
    if (boundary.dim() != dim - 1) {
      throw Error(ErrorKind::DimensionOutOfRange, kModule,
                  "boundary of " + g.name + " has dimension " + std::to_string(boundary.dim()));
    }
    bool const at_base
        = dim == 2 ? boundary.word().is_loop() && boundary.word().source() == g.base
                   : boundary.base() == g.base;
    if (!at_base) {
      throw Error(ErrorKind::BasepointMismatch, kModule,
                  "boundary of " + g.name + " is not at its basepoint");
    }
    g.boundary = std::move(boundary);
  }

  std::vector<CellGenerator> const& CrossedComplex::generators(int dim) const {
    if (dim < 2 || static_cast<std::size_t>(dim) >= cells_.size()) {
      return kNoCells;
    }
    return cells_[static_cast<std::size_t>(dim)];
  }

  CellGenerator const& CrossedComplex::generator(int dim, int gen) const {
    auto const& cells = generators(dim);
    if (gen < 0 || static_cast<std::size_t>(gen) >= cells.size()) {
      throw Error(dim == 2 ? ErrorKind::UnknownRelator : ErrorKind::UnknownGenerator, kModule,
                  "no generator " + std::to_string(gen) + " in dimension " + std::to_string(dim));
    }
    return cells[static_cast<std::size_t>(gen)];
  }

  std::size_t CrossedComplex::count(int dim) const {
    if (dim == 0) {
      return objects_.size();
    }
    if (dim == 1) {
      return arrows_.size();
    }
    return generators(dim).size();
  }

  std::optional<int> CrossedComplex::find(int dim, std::string_view name) const {
    if (dim == 1) {
      auto it = std::find(arrow_names_.begin(), arrow_names_.end(), name);
      if (it == arrow_names_.end()) {
        return std::nullopt;
      }
      return static_cast<int>(it - arrow_names_.begin());
    }
    auto const& cells = generators(dim);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].name == name) {
        return static_cast<int>(i);
      }
    }
    return std::nullopt;
  }

  std::vector<std::string> CrossedComplex::names(int dim) const {
    if (dim == 0) {
      return objects_;
    }
    if (dim == 1) {
      return arrow_names_;
    }
    std::vector<std::string> out;
    for (auto const& g : generators(dim)) {
      out.push_back(g.name);
    }
    return out;
  }

  int CrossedComplex::top() const noexcept {
    if (top_ >= 0) {
      return top_;
    }
    for (auto n = static_cast<int>(cells_.size()) - 1; n >= 2; --n) {
      if (!cells_[static_cast<std::size_t>(n)].empty()) {
        return n;
      }
    }
    return arrows_.empty() ? 0 : 1;
  }

  OraclePtr CrossedComplex::coefficient_oracle() const {
    if (oracle_) {
      return oracle_;
    }
    return make_free_oracle(alphabet_, count(2) == 0);
  }

  Presentation CrossedComplex::presentation() const {
    Presentation p(objects_);
    for (auto const& a : arrows_) {
      p.add_generator(a.name, a.source, a.target);
    }
    for (auto const& g : generators(2)) {
      p.add_relator(g.name, g.boundary.word());
    }
    return p;
  }

  CrossedComplex from_presentation(Presentation const& p) {
    CrossedComplex c;
    for (auto const& o : p.objects()) {
      c.add_object(o);
    }
    for (auto const& g : p.generators()) {
      c.add_arrow(g.name, g.source, g.target);
    }
    for (auto const& r : p.relators()) {
      c.add_generator(2, r.name, r.word.source(), r.word);
    }
    c.set_top(2);
    return c;
  }

  OraclePtr fundamental_group_oracle(CrossedComplex const& c, std::size_t bound) {
    auto const n = c.objects().size();
    if (n == 0) {
      throw Error(ErrorKind::InvalidArgument, kModule, "complex has no objects");
    }
    auto const& alphabet = c.alphabet();
    std::vector<std::optional<Word>> tree(n);
    std::vector<bool> tree_gens(alphabet.size(), false);
    tree[0] = Word::identity(0);
    std::deque<ObjectId> queue{0};
    while (!queue.empty()) {
      ObjectId const p = queue.front();
      queue.pop_front();
      for (std::size_t g = 0; g < alphabet.size(); ++g) {
        auto const& a = alphabet[g];
        int const gen = static_cast<int>(g);
        if (a.source == p && !tree[static_cast<std::size_t>(a.target)]) {
          tree[static_cast<std::size_t>(a.target)] = *tree[static_cast<std::size_t>(p)]
                                                     * Word::letter(alphabet, gen, 1);
          tree_gens[g] = true;
          queue.push_back(a.target);
        } else if (a.target == p && !tree[static_cast<std::size_t>(a.source)]) {
          tree[static_cast<std::size_t>(a.source)] = *tree[static_cast<std::size_t>(p)]
                                                     * Word::letter(alphabet, gen, -1);
          tree_gens[g] = true;
          queue.push_back(a.source);
        }
      }
    }
    if (std::any_of(tree.begin(), tree.end(), [](auto const& t) { return !t; })) {
      throw Error(ErrorKind::InvalidArgument, kModule, "complex is not connected");
    }
    if (n == 1) {
      return build_finite_oracle(c.presentation(), bound);
    }
    Presentation vertex;
    for (auto const& name : c.arrow_names()) {
      vertex.add_generator(name);
    }
    for (auto const& g : c.generators(2)) {
      vertex.add_relator(g.name, collapse(g.boundary.word(), tree_gens, 0));
    }
    auto vertex_oracle = build_finite_oracle(vertex, bound);
    std::vector<Word> paths;
    for (auto& t : tree) {
      paths.push_back(std::move(*t));
    }
    return make_groupoid_oracle(alphabet, std::move(vertex_oracle), std::move(paths),
                                std::move(tree_gens));
  }

  CrossedComplex truncate(CrossedComplex const& c, int n) {
    CrossedComplex out;
    for (auto const& o : c.objects()) {
      out.add_object(o);
    }
    if (n >= 1) {
      for (auto const& a : c.arrows()) {
        out.add_arrow(a.name, a.source, a.target);
      }
    }
    for (int d = 2; d <= n; ++d) {
      for (auto const& g : c.generators(d)) {
        out.add_generator(d, g.name, g.base, g.boundary);
      }
    }
    out.set_top(std::min(n, c.top()));
    out.set_oracle(c.oracle());
    return out;
  }

  // --- evaluation --------------------------------------------------------------

  Word boundary2(PeifferSequence const& s, CrossedComplex const& c) {
    Word out = Word::identity(s.base());
    for (auto const& f : s.factors()) {
      Word w = c.generator(2, f.gen).boundary.word();
      if (f.sign < 0) {
        w = w.inverse();
      }
      out *= conjugate(w, f.conj);
    }
    return out;
  }

  Element boundary(Element const& x, CrossedComplex const& c) {
    int const dim = x.dim();
    if (dim < 2) {
      throw Error(ErrorKind::DimensionOutOfRange, kModule,
                  "boundary is defined from dimension 2 up, got dimension " + std::to_string(dim));
    }
    if (dim == 2) {
      return boundary2(x.peiffer(), c);
    }
    auto const& m = x.module();
    if (dim == 3) {
      PeifferSequence out(m.base());
      for (auto const& [key, n] : m.terms()) {
        auto const& s = c.generator(3, key.first).boundary.peiffer().act(key.second);
        auto const piece = n > 0 ? s : s.inverse();
        for (Integer k = 0; k < abs(n); ++k) {
          out *= piece;
        }
      }
      return out;
    }
    ModuleElement out(dim - 1, m.base());
    for (auto const& [key, n] : m.terms()) {
      auto term = c.generator(dim, key.first).boundary.module().act(key.second);
      term *= n;
      out += term;
    }
    return out;
  }

  std::map<int, GroupRingElement> abelianize(PeifferSequence const& s, GroupOracle const& o) {
    std::map<int, GroupRingElement> out;
    for (auto const& f : s.factors()) {
      out[f.gen].add_term(o.normalize(f.conj), f.sign);
    }
    std::erase_if(out, [](auto const& kv) { return kv.second.is_zero(); });
    return out;
  }

  Comparison equal_elements(PeifferSequence const& a, PeifferSequence const& b,
                            CrossedComplex const& c) {
    if (a.base() != b.base()) {
      throw Error(ErrorKind::BasepointMismatch, kModule, "elements at different basepoints");
    }
    if (boundary2(a, c) != boundary2(b, c)) {
      return {false, true};
    }
    auto const o = c.coefficient_oracle();
    bool const equal = abelianize(a, *o) == abelianize(b, *o);
    return {equal, equal || o->exact()};
  }

  Comparison equal_elements(Element const& a, Element const& b, CrossedComplex const& c) {
    if (a.dim() != b.dim()) {
      return {false, true};
    }
    switch (a.dim()) {
      case 0:
      case 1:
        return {a == b, true};
      case 2:
        return equal_elements(a.peiffer(), b.peiffer(), c);
      default: {
        if (a.base() != b.base() && !a.is_identity() && !b.is_identity()) {
          throw Error(ErrorKind::BasepointMismatch, kModule, "elements at different basepoints");
        }
        auto const o = c.coefficient_oracle();
        bool const equal = (a.module() - b.module()).coordinates(*o).empty();
        return {equal, equal || o->exact()};
      }
    }
  }

  PeifferSequence peiffer_commutator(PeifferSequence const& w1, PeifferSequence const& w2,
                                     CrossedComplex const& c) {
    if (w1.base() != w2.base()) {
      throw Error(ErrorKind::BasepointMismatch, kModule,
                  "Peiffer commutator of elements at different basepoints");
    }
    return w1.inverse() * w2.inverse() * w1 * w2.act(boundary2(w1, c));
  }

  // --- checks ------------------------------------------------------------------

  namespace {
    //! Every factor or term refers to an existing generator through a path
    //! from that generator's basepoint to the element's basepoint.
    std::optional<std::string> incoherence(Element const& x, CrossedComplex const& c) {
      auto check = [&](int dim, int gen, Word const& conj) -> std::optional<std::string> {
        auto const& cells = c.generators(dim);
        if (gen < 0 || static_cast<std::size_t>(gen) >= cells.size()) {
          return "unknown generator in dimension " + std::to_string(dim);
        }
        if (conj.source() != cells[static_cast<std::size_t>(gen)].base
            || conj.target() != x.base()) {
          return "conjugator of " + cells[static_cast<std::size_t>(gen)].name
                 + " does not join its basepoint to the element's";
        }
        return std::nullopt;
      };
      if (x.dim() == 2) {
        for (auto const& f : x.peiffer().factors()) {
          if (auto e = check(2, f.gen, f.conj)) {
            return e;
          }
        }
      } else if (x.dim() >= 3) {
        for (auto const& [key, n] : x.module().terms()) {
          if (auto e = check(x.dim(), key.first, key.second)) {
            return e;
          }
        }
      }
      return std::nullopt;
    }

    void fail(CheckReport& r, std::string witness, std::string detail) {
      if (r.ok) {
        r.ok = false;
        r.witness = std::move(witness);
        r.detail = std::move(detail);
      }
    }
  }  // namespace

  CheckReport check_complex_axioms(CrossedComplex const& c, int max_dim) {
    CheckReport r;
    for (int dim = 2; dim <= max_dim; ++dim) {
      auto const& cells = c.generators(dim);
      for (std::size_t i = 0; i < cells.size() && r.ok; ++i) {
        auto const& g = cells[i];
        auto const witness = describe(c, dim, static_cast<int>(i));
        ++r.checked;
        if (auto e = incoherence(g.boundary, c)) {
          fail(r, witness, *e);
          break;
        }
        if (dim == 2) {
          continue;  // a loop at the basepoint, enforced on construction
        }
        Element const dd = boundary(g.boundary, c);
        if (dim == 3) {
          if (!dd.word().empty()) {
            fail(r, witness, "phi_2 of the boundary is " + format(dd.word(), c.arrow_names()));
          }
          continue;
        }
        auto const cmp = equal_elements(dd, Element::identity(dim - 2, g.base), c);
        r.exact = r.exact && cmp.exact;
        if (!cmp.equal) {
          fail(r, witness, "the boundary of the boundary is not trivial");
        }
      }
    }
    return r;
  }

  // --- morphisms ---------------------------------------------------------------

  ComplexMorphism::ComplexMorphism(std::shared_ptr<CrossedComplex const> source,
                                   std::shared_ptr<CrossedComplex const> target)
      : source_(std::move(source)), target_(std::move(target)) {
    for (auto const& o : source_->objects()) {
      objects_.push_back(target_->object_index(o).value_or(0));
    }
    images_.resize(static_cast<std::size_t>(std::max(source_->top(), 1)) + 1);
    for (std::size_t n = 1; n < images_.size(); ++n) {
      images_[n].resize(source_->count(static_cast<int>(n)));
    }
  }

  ComplexMorphism ComplexMorphism::identity(std::shared_ptr<CrossedComplex const> c) {
    ComplexMorphism f(c, c);
    for (std::size_t g = 0; g < c->count(1); ++g) {
      f.set_image(1, static_cast<int>(g), Word::letter(c->alphabet(), static_cast<int>(g)));
    }
    for (int n = 2; n <= c->top(); ++n) {
      auto const& cells = c->generators(n);
      for (std::size_t g = 0; g < cells.size(); ++g) {
        if (n == 2) {
          f.set_image(n, static_cast<int>(g),
                      PeifferSequence::generator(static_cast<int>(g), cells[g].base));
        } else {
          f.set_image(n, static_cast<int>(g),
                      ModuleElement::generator(n, static_cast<int>(g), cells[g].base));
        }
      }
    }
    return f;
  }

  void ComplexMorphism::set_object(ObjectId from, ObjectId to) {
    objects_.at(static_cast<std::size_t>(from)) = to;
  }

  ObjectId ComplexMorphism::object(ObjectId p) const {
    return objects_.at(static_cast<std::size_t>(p));
  }

  void ComplexMorphism::set_image(int dim, int gen, Element image) {
    if (dim < 1 || static_cast<std::size_t>(dim) >= images_.size()
        || gen < 0 || static_cast<std::size_t>(gen) >= images_[static_cast<std::size_t>(dim)].size()) {
      throw Error(ErrorKind::UnknownGenerator, kModule,
                  "no source generator " + std::to_string(gen) + " in dimension "
                      + std::to_string(dim));
    }
    if (image.dim() != dim) {
      throw Error(ErrorKind::DimensionOutOfRange, kModule,
                  "image of a dimension-" + std::to_string(dim) + " generator has dimension "
                      + std::to_string(image.dim()));
    }
    images_[static_cast<std::size_t>(dim)][static_cast<std::size_t>(gen)] = std::move(image);
  }

  bool ComplexMorphism::has_image(int dim, int gen) const {
    return dim >= 1 && static_cast<std::size_t>(dim) < images_.size() && gen >= 0
           && static_cast<std::size_t>(gen) < images_[static_cast<std::size_t>(dim)].size()
           && images_[static_cast<std::size_t>(dim)][static_cast<std::size_t>(gen)].has_value();
  }

  Element const& ComplexMorphism::image(int dim, int gen) const {
    if (!has_image(dim, gen)) {
      std::string name = "#" + std::to_string(gen);
      if (dim >= 1 && static_cast<std::size_t>(gen) < source_->count(dim)) {
        name = describe(*source_, dim, gen);
      }
      throw Error(ErrorKind::MissingImage, kModule, "no image for " + name);
    }
    return *images_[static_cast<std::size_t>(dim)][static_cast<std::size_t>(gen)];
  }

  int ComplexMorphism::complete_through() const {
    int n = 0;
    for (std::size_t d = 1; d < images_.size(); ++d) {
      if (!std::all_of(images_[d].begin(), images_[d].end(),
                       [](auto const& e) { return e.has_value(); })) {
        break;
      }
      n = static_cast<int>(d);
    }
    return n;
  }

  Word apply_morphism(ComplexMorphism const& f, Word const& w) {
    Word out = Word::identity(f.object(w.source()));
    for (auto const& l : w.letters()) {
      Word const& img = f.image(1, l.gen).word();
      out *= l.exp > 0 ? img : img.inverse();
    }
    return out;
  }

  Element apply_morphism(ComplexMorphism const& f, Element const& x) {
    switch (x.dim()) {
      case 0:
        return Point{f.object(x.point().object)};
      case 1:
        return apply_morphism(f, x.word());
      case 2: {
        PeifferSequence out(f.object(x.base()));
        for (auto const& fac : x.peiffer().factors()) {
          auto const& img = f.image(2, fac.gen).peiffer();
          out *= (fac.sign > 0 ? img : img.inverse()).act(apply_morphism(f, fac.conj));
        }
        return out;
      }
      default: {
        ModuleElement out(x.dim(), f.object(x.base()));
        for (auto const& [key, n] : x.module().terms()) {
          auto term = f.image(x.dim(), key.first).module().act(apply_morphism(f, key.second));
          term *= n;
          out += term;
        }
        return out;
      }
    }
  }

  ComplexMorphism compose(ComplexMorphism const& g, ComplexMorphism const& f) {
    ComplexMorphism h(f.source_ptr(), g.target_ptr());
    auto const& src = f.source();
    for (std::size_t p = 0; p < src.objects().size(); ++p) {
      h.set_object(static_cast<ObjectId>(p), g.object(f.object(static_cast<ObjectId>(p))));
    }
    for (int n = 1; n <= std::max(src.top(), 1); ++n) {
      for (std::size_t i = 0; i < src.count(n); ++i) {
        if (f.has_image(n, static_cast<int>(i))) {
          h.set_image(n, static_cast<int>(i), apply_morphism(g, f.image(n, static_cast<int>(i))));
        }
      }
    }
    return h;
  }

  CheckReport verify_morphism(ComplexMorphism const& f, int max_dim) {
    CheckReport r;
    auto const& src = f.source();
    auto const& dst = f.target();
    for (std::size_t i = 0; i < src.count(1); ++i) {
      auto const witness = describe(src, 1, static_cast<int>(i));
      ++r.checked;
      if (!f.has_image(1, static_cast<int>(i))) {
        fail(r, witness, "missing image");
        return r;
      }
      auto const& img = f.image(1, static_cast<int>(i)).word();
      auto const& a = src.arrows()[i];
      if (img.source() != f.object(a.source) || img.target() != f.object(a.target)) {
        fail(r, witness, "image does not join the images of the endpoints");
        return r;
      }
    }
    for (int dim = 2; dim <= max_dim; ++dim) {
      auto const& cells = src.generators(dim);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        auto const witness = describe(src, dim, static_cast<int>(i));
        ++r.checked;
        if (!f.has_image(dim, static_cast<int>(i))) {
          fail(r, witness, "missing image");
          return r;
        }
        auto const& img = f.image(dim, static_cast<int>(i));
        if (img.base() != f.object(cells[i].base) || incoherence(img, dst)) {
          fail(r, witness, "image is not at the image of the basepoint");
          return r;
        }
        auto const cmp
            = equal_elements(apply_morphism(f, cells[i].boundary), boundary(img, dst), dst);
        r.exact = r.exact && cmp.exact;
        if (!cmp.equal) {
          fail(r, witness, "f does not commute with the boundary");
          return r;
        }
      }
    }
    return r;
  }

  IdentitiesPresentation identities_presentation(CrossedComplex const& c) {
    IdentitiesPresentation out;
    for (auto const& g : c.generators(3)) {
      auto const& s = g.boundary.peiffer();
      Word const w = boundary2(s, c);
      if (!w.empty()) {
        throw Error(ErrorKind::NonIdentityBoundary, kModule,
                    "boundary of " + g.name + " maps to " + format(w, c.arrow_names()));
      }
      out.generator_names.push_back(g.name);
      out.generators.push_back(s);
    }
    for (auto const& g : c.generators(4)) {
      out.relation_names.push_back(g.name);
      out.relations.push_back(g.boundary.module());
    }
    return out;
  }

}  // namespace xres
