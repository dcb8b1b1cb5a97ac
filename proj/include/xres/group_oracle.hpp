// SPDX-License-Identifier: Apache-2.0

// Normal-form oracles for the group (or groupoid) a complex's coefficients
// live in. An oracle maps a word to a canonical representative word: two
// words name the same element iff their representatives are identical.

#ifndef XRES_GROUP_ORACLE_HPP_
#define XRES_GROUP_ORACLE_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "xres/finite_group.hpp"
#include "xres/word.hpp"

namespace xres {

  class Presentation;

  class GroupOracle {
   public:
    virtual ~GroupOracle() = default;

    [[nodiscard]] virtual std::string_view kind() const noexcept = 0;
    //! Canonical representative; throws UnknownGenerator for letters the
    //! oracle was not built over.
    [[nodiscard]] virtual Word normalize(Word const& w) const = 0;

    [[nodiscard]] virtual bool is_finite() const noexcept {
      return false;
    }
    //! Whether equality is decided in the true group rather than a free
    //! cover of it (the free fallback for groups without an oracle).
    [[nodiscard]] virtual bool exact() const noexcept {
      return true;
    }

    // The following are only meaningful when is_finite().
    [[nodiscard]] virtual std::size_t order() const;
    [[nodiscard]] virtual std::vector<Word> const& elements() const;
    [[nodiscard]] virtual std::size_t index_of(Word const& w) const;

    [[nodiscard]] bool equal(Word const& a, Word const& b) const {
      return normalize(a) == normalize(b);
    }
  };

  using OraclePtr = std::shared_ptr<GroupOracle const>;

  //! Free group(oid) oracle: normalize is free reduction. `exact` is false
  //! when this is standing in for a non-free group.
  OraclePtr make_free_oracle(Alphabet alphabet, bool exact = true);

  //! Infinite cyclic group on the single generator `gen` of a one-object
  //! alphabet.
  OraclePtr make_infinite_cyclic_oracle(Alphabet alphabet, int gen);

  //! Finite group given by a homomorphism from the free group on `alphabet`
  //! (all loops at `base`) into `group`. Generators with image -1 are unknown.
  //! The oracle covers the subgroup generated by the images.
  OraclePtr make_finite_oracle(Alphabet alphabet, FiniteGroup group,
                               std::vector<int> generator_images, ObjectId base = 0);

  //! Direct product of two oracles over disjoint sets of generators of the
  //! same one-object alphabet.
  OraclePtr make_product_oracle(OraclePtr left, OraclePtr right, std::vector<bool> in_left);

  //! G x| Z for a finite G: elements g z^i with z^-1 g z = twist(g). `twist`
  //! is an automorphism of the finite oracle's group, given on element
  //! indices of `base`.
  OraclePtr make_semidirect_oracle(Alphabet alphabet, OraclePtr base, int stable_gen,
                                   std::vector<std::size_t> twist);

  //! A groupoid oracle from a vertex-group oracle and a spanning tree.
  //! `tree[p]` is a path from the base object to p; `tree_gens` flags
  //! generators collapsed by the vertex oracle.
  OraclePtr make_groupoid_oracle(Alphabet alphabet, OraclePtr vertex, std::vector<Word> tree,
                                 std::vector<bool> tree_gens);

  //! `inner` (one object, `inner_gens` generators) read through a renaming:
  //! outer generator g stands for inner generator map[g], or is unknown
  //! when map[g] < 0. Outer words are loops at `base`; several outer
  //! generators may share an inner one, normal forms use the first.
  OraclePtr make_relabelled_oracle(OraclePtr inner, std::size_t inner_gens, std::vector<int> map,
                                   ObjectId base = 0);

  //! Enumerates the group presented by `p` (one object). Throws
  //! NotFiniteWithinBound if the enumeration closes above `bound` elements
  //! or does not close within its working limit.
  OraclePtr build_finite_oracle(Presentation const& p, std::size_t bound);

  //! <x, y | x^p = y^q> for p, q >= 2 by its normal form z^k s_1 ... s_m,
  //! z = x^p central and the s_i alternating powers x^i (0 < i < p) and
  //! y^j (0 < j < q).
  OraclePtr make_torus_knot_oracle(Alphabet alphabet, int x, int y, int p, int q);
  //! The torus knot oracle when `p` is a one-relator presentation
  //! <x, y | x^p y^-q> up to inversion and cyclic rotation, else null.
  OraclePtr detect_torus_knot(Presentation const& p);

  //! The finite group behind a finite oracle, with the element index of each
  //! generator.
  struct FiniteView {
    FiniteGroup const* group;
    std::vector<int> const* generator_images;
  };
  [[nodiscard]] std::optional<FiniteView> finite_view(GroupOracle const& o);

}  // namespace xres

#endif  // XRES_GROUP_ORACLE_HPP_
