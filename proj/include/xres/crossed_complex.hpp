// SPDX-License-Identifier: Apache-2.0

// Free crossed complexes of groupoids.
//
//   objects          C_0
//   dimension 1      a free groupoid on arrows a : p -> q
//   dimension 2      the free crossed module C(omega) on relators r @ p
//   dimension n >= 3 free modules over pi_1 on generators c @ p
//
// Each generator of dimension n >= 2 carries its boundary, an element of
// dimension n - 1 at its basepoint. Dimensions 1-2 are multiplicative,
// 3 and up additive; actions are on the right.

#ifndef XRES_CROSSED_COMPLEX_HPP_
#define XRES_CROSSED_COMPLEX_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xres/element.hpp"
#include "xres/group_oracle.hpp"
#include "xres/group_ring.hpp"
#include "xres/presentation.hpp"
#include "xres/word.hpp"

namespace xres {

  struct CellGenerator {
    std::string name;
    ObjectId base = 0;
    Element boundary;
  };

  class CrossedComplex {
   public:
    CrossedComplex() = default;

    ObjectId add_object(std::string name);
    int add_arrow(std::string name, ObjectId source, ObjectId target);
    //! Adds a generator of dimension >= 2. The boundary must be an element
    //! of dimension dim - 1 at `base` (a loop at `base` when dim = 2).
    int add_generator(int dim, std::string name, ObjectId base, Element boundary);
    void set_boundary(int dim, int gen, Element boundary);

    [[nodiscard]] std::vector<std::string> const& objects() const noexcept {
      return objects_;
    }
    [[nodiscard]] std::optional<ObjectId> object_index(std::string_view name) const;

    [[nodiscard]] std::vector<GeneratorDecl> const& arrows() const noexcept {
      return arrows_;
    }
    [[nodiscard]] Alphabet const& alphabet() const noexcept {
      return alphabet_;
    }
    [[nodiscard]] std::vector<std::string> const& arrow_names() const noexcept {
      return arrow_names_;
    }

    //! Generators of dimension dim >= 2 (empty past the top).
    [[nodiscard]] std::vector<CellGenerator> const& generators(int dim) const;
    [[nodiscard]] CellGenerator const& generator(int dim, int gen) const;
    //! Number of generators in dimension dim >= 1.
    [[nodiscard]] std::size_t count(int dim) const;
    [[nodiscard]] std::optional<int> find(int dim, std::string_view name) const;
    [[nodiscard]] std::vector<std::string> names(int dim) const;

    //! The dimension through which generators have been enumerated. A
    //! complex built to dimension n may have no generators near the top.
    [[nodiscard]] int top() const noexcept;
    void set_top(int n) {
      top_ = n;
    }

    //! Normal forms for pi_1, used for module coefficients and equality in
    //! dimension 2. Null when unavailable.
    [[nodiscard]] OraclePtr const& oracle() const noexcept {
      return oracle_;
    }
    void set_oracle(OraclePtr o) {
      oracle_ = std::move(o);
    }
    //! The oracle, or the free groupoid on the arrows flagged as inexact.
    [[nodiscard]] OraclePtr coefficient_oracle() const;

    //! The dimension 1-2 part as a presentation.
    [[nodiscard]] Presentation presentation() const;

   private:
    std::vector<std::string> objects_;
    std::vector<GeneratorDecl> arrows_;
    Alphabet alphabet_;
    std::vector<std::string> arrow_names_;
    std::vector<std::vector<CellGenerator>> cells_;  // cells_[n] for n >= 2
    int top_ = -1;
    OraclePtr oracle_;
  };

  //! The free crossed module C(omega) of a presentation, as a complex of
  //! top dimension 2.
  CrossedComplex from_presentation(Presentation const& p);

  //! Oracle for pi_1 of the complex from its dimension 1-2 part, by coset
  //! enumeration after collapsing a spanning tree. Throws
  //! NotFiniteWithinBound.
  OraclePtr fundamental_group_oracle(CrossedComplex const& c, std::size_t bound);

  //! The complex with every generator above dimension n dropped.
  CrossedComplex truncate(CrossedComplex const& c, int n);

  // --- evaluation -------------------------------------------------------------

  //! chi_n x for x of dimension n >= 2. Throws DimensionOutOfRange.
  Element boundary(Element const& x, CrossedComplex const& c);
  //! phi_2 of a Peiffer sequence: prod u_i^-1 (omega x_i)^e_i u_i.
  Word boundary2(PeifferSequence const& s, CrossedComplex const& c);

  //! Coefficient of each dimension-2 generator of s in the free module
  //! on X_2 over pi_1.
  std::map<int, GroupRingElement> abelianize(PeifferSequence const& s, GroupOracle const& o);

  struct Comparison {
    bool equal = false;
    bool exact = true;  // false when decided over a free cover of pi_1
    explicit operator bool() const noexcept {
      return equal;
    }
  };
  //! Equality in the free crossed module: equal phi_2 images and equal
  //! abelianizations.
  Comparison equal_elements(PeifferSequence const& a, PeifferSequence const& b,
                            CrossedComplex const& c);
  //! Equality of elements of any dimension >= 1.
  Comparison equal_elements(Element const& a, Element const& b, CrossedComplex const& c);

  //! <w1, w2> = w1^-1 w2^-1 w1 w2^{phi_2 w1}.
  PeifferSequence peiffer_commutator(PeifferSequence const& w1, PeifferSequence const& w2,
                                     CrossedComplex const& c);

  // --- checks -----------------------------------------------------------------

  struct CheckReport {
    bool ok = true;
    bool exact = true;
    int checked = 0;
    std::string witness;  // "dim n: name" of the first failure
    std::string detail;
    explicit operator bool() const noexcept {
      return ok;
    }
  };

  //! Basepoint coherence and chi chi = 1 on every generator up to max_dim.
  CheckReport check_complex_axioms(CrossedComplex const& c, int max_dim);

  // --- morphisms --------------------------------------------------------------

  class ComplexMorphism {
   public:
    ComplexMorphism(std::shared_ptr<CrossedComplex const> source,
                    std::shared_ptr<CrossedComplex const> target);
    static ComplexMorphism identity(std::shared_ptr<CrossedComplex const> c);

    [[nodiscard]] CrossedComplex const& source() const noexcept {
      return *source_;
    }
    [[nodiscard]] CrossedComplex const& target() const noexcept {
      return *target_;
    }
    [[nodiscard]] std::shared_ptr<CrossedComplex const> const& source_ptr() const noexcept {
      return source_;
    }
    [[nodiscard]] std::shared_ptr<CrossedComplex const> const& target_ptr() const noexcept {
      return target_;
    }

    void set_object(ObjectId from, ObjectId to);
    [[nodiscard]] ObjectId object(ObjectId p) const;
    void set_image(int dim, int gen, Element image);
    [[nodiscard]] bool has_image(int dim, int gen) const;
    //! Throws MissingImage.
    [[nodiscard]] Element const& image(int dim, int gen) const;
    //! Highest dimension with every generator assigned.
    [[nodiscard]] int complete_through() const;

   private:
    std::shared_ptr<CrossedComplex const> source_;
    std::shared_ptr<CrossedComplex const> target_;
    std::vector<ObjectId> objects_;
    std::vector<std::vector<std::optional<Element>>> images_;  // images_[n], n >= 1
  };

  //! Extends the generator images over words, sequences and module sums.
  Element apply_morphism(ComplexMorphism const& f, Element const& x);
  Word apply_morphism(ComplexMorphism const& f, Word const& w);
  //! g after f.
  ComplexMorphism compose(ComplexMorphism const& g, ComplexMorphism const& f);
  //! f chi = chi f on every generator up to max_dim.
  CheckReport verify_morphism(ComplexMorphism const& f, int max_dim);

  // --- identities among relations ---------------------------------------------

  struct IdentitiesPresentation {
    std::vector<std::string> generator_names;
    std::vector<PeifferSequence> generators;  // chi_3 of each dimension-3 generator
    std::vector<std::string> relation_names;
    std::vector<ModuleElement> relations;  // chi_4 of each dimension-4 generator
  };

  //! Throws NonIdentityBoundary if some chi_3 image has nontrivial phi_2.
  IdentitiesPresentation identities_presentation(CrossedComplex const& c);

}  // namespace xres

#endif  // XRES_CROSSED_COMPLEX_HPP_
