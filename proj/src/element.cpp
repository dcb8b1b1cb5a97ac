// SPDX-License-Identifier: Apache-2.0

#include "xres/element.hpp"

#include "xres/error.hpp"

namespace xres {

  namespace {
    [[noreturn]] void mismatch(char const* what) {
      throw Error(ErrorKind::BasepointMismatch, "crossed_complex", what);
    }
  }  // namespace

  // --- PeifferSequence ---------------------------------------------------------

  PeifferSequence PeifferSequence::generator(int gen, ObjectId basepoint, int sign) {
    PeifferSequence c(basepoint);
    c.factors_.push_back({gen, sign > 0 ? 1 : -1, Word::identity(basepoint)});
    return c;
  }

  void PeifferSequence::push(PeifferFactor f) {
    if (f.conj.target() != base_) {
      mismatch("factor conjugator does not end at the basepoint");
    }
    if (!factors_.empty()) {
      auto const& last = factors_.back();
      if (last.gen == f.gen && last.sign == -f.sign && last.conj == f.conj) {
        factors_.pop_back();
        return;
      }
    }
    factors_.push_back(std::move(f));
  }

  PeifferSequence& PeifferSequence::operator*=(PeifferSequence const& rhs) {
    if (rhs.base_ != base_) {
      mismatch("product of sequences at different basepoints");
    }
    for (auto const& f : rhs.factors_) {
      push(f);
    }
    return *this;
  }

  PeifferSequence PeifferSequence::inverse() const {
    PeifferSequence out(base_);
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
      out.factors_.push_back({it->gen, -it->sign, it->conj});
    }
    return out;
  }

  PeifferSequence PeifferSequence::act(Word const& u) const {
    if (u.source() != base_) {
      mismatch("acting path does not start at the basepoint");
    }
    PeifferSequence out(u.target());
    for (auto const& f : factors_) {
      out.push({f.gen, f.sign, f.conj * u});
    }
    return out;
  }

  // --- ModuleElement -----------------------------------------------------------

  ModuleElement ModuleElement::generator(int dim, int gen, ObjectId basepoint, Integer n) {
    ModuleElement m(dim, basepoint);
    m.add_term(gen, Word::identity(basepoint), n);
    return m;
  }

  void ModuleElement::add_term(int gen, Word const& conj, Integer const& n) {
    if (n == 0) {
      return;
    }
    if (conj.target() != base_) {
      mismatch("module term does not end at the basepoint");
    }
    auto [it, inserted] = terms_.try_emplace(Key{gen, conj}, n);
    if (!inserted) {
      it->second += n;
      if (it->second == 0) {
        terms_.erase(it);
      }
    }
  }

  ModuleElement& ModuleElement::operator+=(ModuleElement const& rhs) {
    if (rhs.base_ != base_ || rhs.dim_ != dim_) {
      if (rhs.is_zero()) {
        return *this;
      }
      if (is_zero()) {
        return *this = rhs;
      }
      mismatch("sum of module elements at different basepoints or dimensions");
    }
    for (auto const& [k, n] : rhs.terms_) {
      add_term(k.first, k.second, n);
    }
    return *this;
  }

  ModuleElement& ModuleElement::operator-=(ModuleElement const& rhs) {
    return *this += -rhs;
  }

  ModuleElement& ModuleElement::operator*=(Integer const& n) {
    if (n == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) {
      c *= n;
    }
    return *this;
  }

  ModuleElement ModuleElement::operator-() const {
    ModuleElement out = *this;
    out *= -1;
    return out;
  }

  ModuleElement ModuleElement::act(Word const& u) const {
    if (u.source() != base_) {
      mismatch("acting path does not start at the basepoint");
    }
    ModuleElement out(dim_, u.target());
    for (auto const& [k, n] : terms_) {
      out.add_term(k.first, k.second * u, n);
    }
    return out;
  }

  ModuleElement ModuleElement::normalized(GroupOracle const& o) const {
    ModuleElement out(dim_, base_);
    for (auto const& [k, n] : terms_) {
      out.add_term(k.first, o.normalize(k.second), n);
    }
    return out;
  }

  std::map<int, GroupRingElement> ModuleElement::coordinates(GroupOracle const& o) const {
    std::map<int, GroupRingElement> out;
    for (auto const& [k, n] : terms_) {
      out[k.first].add_term(o.normalize(k.second), n);
    }
    std::erase_if(out, [](auto const& kv) { return kv.second.is_zero(); });
    return out;
  }

  // --- Element -----------------------------------------------------------------

  Element Element::identity(int dim, ObjectId base) {
    switch (dim) {
      case 0:
        return Point{base};
      case 1:
        return Word::identity(base);
      case 2:
        return PeifferSequence(base);
      default:
        return ModuleElement(dim, base);
    }
  }

  int Element::dim() const noexcept {
    switch (value_.index()) {
      case 0:
        return 0;
      case 1:
        return 1;
      case 2:
        return 2;
      default:
        return std::get<ModuleElement>(value_).dim();
    }
  }

  ObjectId Element::base() const noexcept {
    switch (value_.index()) {
      case 0:
        return std::get<Point>(value_).object;
      case 1:
        return std::get<Word>(value_).target();
      case 2:
        return std::get<PeifferSequence>(value_).base();
      default:
        return std::get<ModuleElement>(value_).base();
    }
  }

  bool Element::is_identity() const noexcept {
    switch (value_.index()) {
      case 0:
        return true;
      case 1:
        return std::get<Word>(value_).empty();
      case 2:
        return std::get<PeifferSequence>(value_).empty();
      default:
        return std::get<ModuleElement>(value_).is_zero();
    }
  }

  Element compose(Element const& a, Element const& b) {
    if (a.dim() != b.dim()) {
      throw Error(ErrorKind::DimensionOutOfRange, "crossed_complex",
                  "composing elements of dimensions " + std::to_string(a.dim()) + " and "
                      + std::to_string(b.dim()));
    }
    switch (a.value().index()) {
      case 0:
        if (a.point() != b.point()) {
          mismatch("distinct objects");
        }
        return a;
      case 1:
        return a.word() * b.word();
      case 2:
        return a.peiffer() * b.peiffer();
      default:
        return a.module() + b.module();
    }
  }

  Element negate(Element const& a) {
    switch (a.value().index()) {
      case 0:
        return a;
      case 1:
        return a.word().inverse();
      case 2:
        return a.peiffer().inverse();
      default:
        return -a.module();
    }
  }

  Element act(Element const& a, Word const& u) {
    switch (a.value().index()) {
      case 0:
        return Point{u.target()};
      case 1:
        return conjugate(a.word(), u);
      case 2:
        return a.peiffer().act(u);
      default:
        return a.module().act(u);
    }
  }

}  // namespace xres
