// SPDX-License-Identifier: Apache-2.0

// Elements of a free crossed complex, by dimension:
//   0  an object
//   1  a word in the free groupoid on the dimension-1 generators
//   2  a Peiffer sequence: prod (x_i^{e_i})^{u_i} in the free crossed module
//   3+ a module element: sum n_i x_i^{u_i}
// Conjugators u are paths in the dimension-1 free groupoid from the basepoint
// of x_i to the basepoint of the element. Dimensions 1 and 2 are written
// multiplicatively, dimensions 3 and up additively.

#ifndef XRES_ELEMENT_HPP_
#define XRES_ELEMENT_HPP_

#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "xres/group_oracle.hpp"
#include "xres/group_ring.hpp"
#include "xres/integer.hpp"
#include "xres/word.hpp"

namespace xres {

  struct PeifferFactor {
    int gen = 0;
    int sign = 1;
    Word conj;
    auto operator<=>(PeifferFactor const&) const = default;
  };

  class PeifferSequence {
   public:
    PeifferSequence() = default;
    explicit PeifferSequence(ObjectId base) : base_(base) {}

    //! The generator x at its own basepoint, to the power `sign`.
    static PeifferSequence generator(int gen, ObjectId basepoint, int sign = 1);

    [[nodiscard]] ObjectId base() const noexcept {
      return base_;
    }
    [[nodiscard]] std::vector<PeifferFactor> const& factors() const noexcept {
      return factors_;
    }
    [[nodiscard]] bool empty() const noexcept {
      return factors_.empty();
    }

    //! Appends a factor; adjacent inverse factors with equal conjugators
    //! cancel.
    void push(PeifferFactor f);

    PeifferSequence& operator*=(PeifferSequence const& rhs);
    friend PeifferSequence operator*(PeifferSequence lhs, PeifferSequence const& rhs) {
      lhs *= rhs;
      return lhs;
    }
    [[nodiscard]] PeifferSequence inverse() const;
    //! c^u: every conjugator u_i becomes u_i u.
    [[nodiscard]] PeifferSequence act(Word const& u) const;

    bool operator==(PeifferSequence const&) const = default;

   private:
    ObjectId base_ = 0;
    std::vector<PeifferFactor> factors_;
  };

  class ModuleElement {
   public:
    using Key = std::pair<int, Word>;
    using Terms = std::map<Key, Integer>;

    ModuleElement() = default;
    ModuleElement(int dim, ObjectId base) : dim_(dim), base_(base) {}

    static ModuleElement generator(int dim, int gen, ObjectId basepoint, Integer n = 1);

    [[nodiscard]] int dim() const noexcept {
      return dim_;
    }
    [[nodiscard]] ObjectId base() const noexcept {
      return base_;
    }
    [[nodiscard]] Terms const& terms() const noexcept {
      return terms_;
    }
    [[nodiscard]] bool is_zero() const noexcept {
      return terms_.empty();
    }

    void add_term(int gen, Word const& conj, Integer const& n);

    ModuleElement& operator+=(ModuleElement const& rhs);
    ModuleElement& operator-=(ModuleElement const& rhs);
    ModuleElement& operator*=(Integer const& n);
    [[nodiscard]] ModuleElement operator-() const;
    friend ModuleElement operator+(ModuleElement a, ModuleElement const& b) {
      return a += b;
    }
    friend ModuleElement operator-(ModuleElement a, ModuleElement const& b) {
      return a -= b;
    }
    [[nodiscard]] ModuleElement act(Word const& u) const;
    //! Conjugators replaced by oracle normal forms, equal keys merged.
    [[nodiscard]] ModuleElement normalized(GroupOracle const& o) const;
    //! Coefficient of each generator as a group ring element.
    [[nodiscard]] std::map<int, GroupRingElement> coordinates(GroupOracle const& o) const;

    bool operator==(ModuleElement const&) const = default;

   private:
    int dim_ = 3;
    ObjectId base_ = 0;
    Terms terms_;
  };

  struct Point {
    ObjectId object = 0;
    auto operator<=>(Point const&) const = default;
  };

  //! An element of any dimension.
  class Element {
   public:
    using Value = std::variant<Point, Word, PeifferSequence, ModuleElement>;

    Element() : value_(Point{}) {}
    Element(Point p) : value_(p) {}                             // NOLINT
    Element(Word w) : value_(std::move(w)) {}                   // NOLINT
    Element(PeifferSequence c) : value_(std::move(c)) {}        // NOLINT
    Element(ModuleElement m) : value_(std::move(m)) {}          // NOLINT

    //! The identity (or zero) of dimension `dim` at object `base`.
    static Element identity(int dim, ObjectId base);

    [[nodiscard]] int dim() const noexcept;
    //! For dimension 0 the object, for dimension 1 the target, otherwise the
    //! basepoint.
    [[nodiscard]] ObjectId base() const noexcept;
    //! Syntactic identity test (empty word/sequence, zero module element).
    [[nodiscard]] bool is_identity() const noexcept;

    [[nodiscard]] Point const& point() const {
      return std::get<Point>(value_);
    }
    [[nodiscard]] Word const& word() const {
      return std::get<Word>(value_);
    }
    [[nodiscard]] PeifferSequence const& peiffer() const {
      return std::get<PeifferSequence>(value_);
    }
    [[nodiscard]] ModuleElement const& module() const {
      return std::get<ModuleElement>(value_);
    }
    [[nodiscard]] Value const& value() const noexcept {
      return value_;
    }

    bool operator==(Element const&) const = default;

   private:
    Value value_;
  };

  //! The group law of the dimension: path composition, sequence product, or
  //! module sum. Throws BasepointMismatch / NonComposablePath.
  Element compose(Element const& a, Element const& b);
  //! Inverse / negative. Dimension 0 is returned unchanged.
  Element negate(Element const& a);
  //! Action of a dimension-1 path u: conjugation in dimension 1, x^u above.
  Element act(Element const& a, Word const& u);

}  // namespace xres

#endif  // XRES_ELEMENT_HPP_
