// SPDX-License-Identifier: Apache-2.0

#ifndef XRES_GROUP_RING_HPP_
#define XRES_GROUP_RING_HPP_

#include <map>
#include <span>
#include <string>

#include "xres/group_oracle.hpp"
#include "xres/integer.hpp"
#include "xres/word.hpp"

namespace xres {

  //! Integer combination of group elements. Keys are oracle normal forms and
  //! no zero coefficient is ever stored. Arithmetic is only defined between
  //! elements normalized by the same oracle.
  class GroupRingElement {
   public:
    using Terms = std::map<Word, Integer>;

    GroupRingElement() = default;
    //! n * g, normalized by o.
    GroupRingElement(GroupOracle const& o, Word const& g, Integer n = 1);

    static GroupRingElement one(GroupOracle const& o, ObjectId base = 0) {
      return {o, Word::identity(base)};
    }

    [[nodiscard]] Terms const& terms() const noexcept {
      return terms_;
    }
    [[nodiscard]] bool is_zero() const noexcept {
      return terms_.empty();
    }
    [[nodiscard]] Integer coefficient(Word const& normal_form) const;
    //! Sum of the coefficients.
    [[nodiscard]] Integer augmentation() const;

    void add_term(Word const& normal_form, Integer const& n);

    GroupRingElement& operator+=(GroupRingElement const& rhs);
    GroupRingElement& operator-=(GroupRingElement const& rhs);
    GroupRingElement& operator*=(Integer const& n);
    [[nodiscard]] GroupRingElement operator-() const;

    friend GroupRingElement operator+(GroupRingElement a, GroupRingElement const& b) {
      return a += b;
    }
    friend GroupRingElement operator-(GroupRingElement a, GroupRingElement const& b) {
      return a -= b;
    }

    //! Convolution product in Z[G].
    [[nodiscard]] GroupRingElement times(GroupRingElement const& rhs, GroupOracle const& o) const;
    //! x * g for a single group element.
    [[nodiscard]] GroupRingElement times(Word const& g, GroupOracle const& o) const;
    //! Image under g -> g^-1 (the anti-involution).
    [[nodiscard]] GroupRingElement conjugate(GroupOracle const& o) const;

    bool operator==(GroupRingElement const&) const = default;

   private:
    Terms terms_;
  };

  //! "1 + a + a^2", "-a^3*b^-1 - a^3*b^-2", or "0".
  std::string format(GroupRingElement const& x, std::span<std::string const> names);

}  // namespace xres

#endif  // XRES_GROUP_RING_HPP_
