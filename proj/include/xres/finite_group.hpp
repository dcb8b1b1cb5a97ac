// SPDX-License-Identifier: Apache-2.0

#ifndef XRES_FINITE_GROUP_HPP_
#define XRES_FINITE_GROUP_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "xres/word.hpp"

namespace xres {

  //! A finite group stored as a full multiplication table. Element 0 is the
  //! identity.
  class FiniteGroup {
   public:
    FiniteGroup() : FiniteGroup(1, {0}) {}
    FiniteGroup(std::size_t order, std::vector<int> table);

    static FiniteGroup cyclic(std::size_t n);
    static FiniteGroup dihedral(std::size_t n);  // order 2n
    static FiniteGroup symmetric(std::size_t n);
    static FiniteGroup direct_product(FiniteGroup const& a, FiniteGroup const& b);
    //! The group generated by the given permutations of {0..degree-1}.
    static FiniteGroup from_permutations(std::vector<std::vector<int>> const& gens);

    [[nodiscard]] std::size_t order() const noexcept {
      return order_;
    }
    [[nodiscard]] int mul(int a, int b) const {
      return table_[static_cast<std::size_t>(a) * order_ + static_cast<std::size_t>(b)];
    }
    [[nodiscard]] int inverse(int a) const {
      return inverse_[static_cast<std::size_t>(a)];
    }
    [[nodiscard]] int element_order(int a) const;
    [[nodiscard]] bool is_abelian() const;
    //! Elements of the subgroup generated by `gens`, sorted.
    [[nodiscard]] std::vector<int> generated(std::span<int const> gens) const;
    //! A small generating set chosen greedily.
    [[nodiscard]] std::vector<int> generating_set() const;

   private:
    std::size_t order_;
    std::vector<int> table_;
    std::vector<int> inverse_;
  };

  //! Coset table of the trivial subgroup. Column 2g is g, column 2g+1 is g^-1.
  struct CosetTable {
    std::size_t cosets = 0;
    int gens = 0;
    std::vector<int> table;

    [[nodiscard]] int act(int coset, Letter l) const {
      auto const col = static_cast<std::size_t>(2 * l.gen + (l.exp > 0 ? 0 : 1));
      return table[static_cast<std::size_t>(coset) * 2 * static_cast<std::size_t>(gens) + col];
    }
  };

  //! Hasselgrove-Leech-Trotter coset enumeration over the trivial subgroup.
  //! Throws NotFiniteWithinBound if more than `limit` cosets are ever alive.
  CosetTable enumerate_cosets(int gens, std::vector<std::vector<Letter>> const& relators,
                              std::size_t limit);

  //! The regular representation recovered from a complete coset table,
  //! together with the element represented by each generator.
  struct EnumeratedGroup {
    FiniteGroup group;
    std::vector<int> generator_images;
  };

  EnumeratedGroup group_from_cosets(CosetTable const& ct);

  //! An isomorphism a -> b as an element map, if one exists.
  std::optional<std::vector<int>> find_isomorphism(FiniteGroup const& a, FiniteGroup const& b);

}  // namespace xres

#endif  // XRES_FINITE_GROUP_HPP_
