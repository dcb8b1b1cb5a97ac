// SPDX-License-Identifier: Apache-2.0

#ifndef XRES_PRESENTATION_HPP_
#define XRES_PRESENTATION_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xres/word.hpp"

namespace xres {

  struct GeneratorDecl {
    std::string name;
    ObjectId source = 0;
    ObjectId target = 0;
  };

  //! A named relator: one element x of X_2 together with omega(x).
  struct Relator {
    std::string name;
    Word word;
    bool was_reduced = false;  // the input was not freely reduced
  };

  struct ValidationReport {
    std::vector<std::string> warnings;

    [[nodiscard]] bool clean() const noexcept {
      return warnings.empty();
    }
  };

  //! Group or groupoid presentation <X_1 | omega>, with omega a function from
  //! named relator symbols to loops in the free groupoid on X_1.
  class Presentation {
   public:
    Presentation() : objects_{"o"} {}
    //! An empty presentation over the given objects.
    explicit Presentation(std::vector<std::string> objects) : objects_(std::move(objects)) {}

    //! Grammar:  [obj< p, q >] gp< g1, g2 : p -> q | n1 = w1, w2 >
    //! Words use '*', integer powers '^k' and parentheses; '1' is the
    //! identity. Unnamed relators are called r1, r2, ...
    static Presentation parse(std::string_view text);

    [[nodiscard]] std::string print() const;
    [[nodiscard]] ValidationReport validate() const;

    ObjectId add_object(std::string name);
    int add_generator(std::string name, ObjectId source = 0, ObjectId target = 0);
    //! Throws NonLoopRelator unless w is a loop.
    void add_relator(std::string name, Word w, bool was_reduced = false);

    [[nodiscard]] std::vector<std::string> const& objects() const noexcept {
      return objects_;
    }
    [[nodiscard]] std::vector<GeneratorDecl> const& generators() const noexcept {
      return generators_;
    }
    [[nodiscard]] std::vector<Relator> const& relators() const noexcept {
      return relators_;
    }
    [[nodiscard]] Alphabet alphabet() const;
    [[nodiscard]] std::vector<std::string> generator_names() const;
    [[nodiscard]] std::optional<int> generator_index(std::string_view name) const;
    [[nodiscard]] std::optional<ObjectId> object_index(std::string_view name) const;

    //! Parses a word over this presentation's generators, starting at
    //! object `start` (or at the source of the first letter if omitted).
    [[nodiscard]] Word parse_word(std::string_view text,
                                  std::optional<ObjectId> start = std::nullopt) const;

   private:
    std::vector<std::string> objects_;
    std::vector<GeneratorDecl> generators_;
    std::vector<Relator> relators_;
  };

  namespace detail {
    class Cursor;
    //! Parses `factor ('*' factor)*` from the cursor. `lookup` maps a name
    //! to a generator id or -1. Returns the raw (unreduced) letters.
    std::vector<Letter> parse_raw_word(Cursor& c, std::vector<std::string> const& names);
  }  // namespace detail

}  // namespace xres

#endif  // XRES_PRESENTATION_HPP_
