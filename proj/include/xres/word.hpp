// SPDX-License-Identifier: Apache-2.0

// Words in free groupoids on a finite graph of generators.
//
// A generator is an arrow between two objects. A word is a composable
// sequence of letters g^{+1} / g^{-1}; it is always stored freely reduced.
// Groups are the one-object special case.

#ifndef XRES_WORD_HPP_
#define XRES_WORD_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace xres {

  using ObjectId = int;

  //! Source and target of a dimension-1 generator.
  struct Arrow {
    ObjectId source = 0;
    ObjectId target = 0;
    auto operator<=>(Arrow const&) const = default;
  };

  //! The dimension-1 generators of a free groupoid, indexed by generator id.
  using Alphabet = std::vector<Arrow>;

  struct Letter {
    int gen = 0;
    int exp = 1;  // +1 or -1
    auto operator<=>(Letter const&) const = default;

    [[nodiscard]] Letter inverse() const noexcept {
      return {gen, -exp};
    }
  };

  class Word {
   public:
    Word() = default;

    //! The identity arrow at p.
    static Word identity(ObjectId p) {
      Word w;
      w.source_ = w.target_ = p;
      return w;
    }

    //! The single letter g^exp.
    static Word letter(Alphabet const& alphabet, int gen, int exp = 1);

    [[nodiscard]] ObjectId source() const noexcept {
      return source_;
    }
    [[nodiscard]] ObjectId target() const noexcept {
      return target_;
    }
    [[nodiscard]] bool is_loop() const noexcept {
      return source_ == target_;
    }
    [[nodiscard]] bool empty() const noexcept {
      return letters_.empty();
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return letters_.size();
    }
    [[nodiscard]] std::span<Letter const> letters() const noexcept {
      return letters_;
    }

    [[nodiscard]] Word inverse() const;

    //! Path composition; throws NonComposablePath unless target() ==
    //! rhs.source().
    Word& operator*=(Word const& rhs);

    friend Word operator*(Word lhs, Word const& rhs) {
      lhs *= rhs;
      return lhs;
    }

    auto operator<=>(Word const&) const = default;
    bool operator==(Word const&) const = default;

   private:
    friend Word reduce(ObjectId, std::span<Letter const>, Alphabet const&);
    std::vector<Letter> letters_;
    ObjectId source_ = 0;
    ObjectId target_ = 0;
  };

  //! Free reduction of a raw letter sequence starting at object `start`.
  //! Throws NonComposablePath if consecutive letters do not compose.
  Word reduce(ObjectId start, std::span<Letter const> letters, Alphabet const& alphabet);

  //! u^{-1} w u for a loop w at u.source().
  Word conjugate(Word const& w, Word const& u);

  //! w^k for a loop w (k may be negative).
  Word power(Word const& w, long k);

  //! Replaces each letter g^e by images[g]^e. The images must compose.
  Word substitute(Word const& w, std::span<Word const> images, ObjectId start);

  //! Deletes the letters whose generator is flagged, relocating everything
  //! to object `to`.
  Word collapse(Word const& w, std::vector<bool> const& dropped, ObjectId to);

  //! Cyclic reduction and rotation equivalence, used when comparing relators.
  bool cyclically_equivalent(Word const& a, Word const& b);

  //! "a^3*b^-2", or "1" for an identity.
  std::string format(Word const& w, std::span<std::string const> names);

}  // namespace xres

#endif  // XRES_WORD_HPP_
