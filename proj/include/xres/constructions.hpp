// SPDX-License-Identifier: Apache-2.0

// Builders for free crossed resolutions: the standard resolution, the small
// resolution of a cyclic group, tensor products and cylinders, the double
// mapping cylinder of an amalgam, HNN extensions, retraction onto a vertex
// group, and lifting group morphisms to morphisms of resolutions.

#ifndef XRES_CONSTRUCTIONS_HPP_
#define XRES_CONSTRUCTIONS_HPP_

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xres/crossed_complex.hpp"
#include "xres/group_oracle.hpp"

namespace xres {

  using ComplexPtr = std::shared_ptr<CrossedComplex const>;

  //! Standard (bar-type) free crossed resolution of a finite group through
  //! dimension max_dim: generators [g] in dimension 1, [a,b] in dimension 2
  //! and [a1,...,an] in dimension n. Group elements are named by their
  //! normal forms in the oracle ("1", "t", "st'"). Throws NotFinite.
  CrossedComplex standard_resolution(OraclePtr const& o,
                                     std::span<std::string const> generator_names, int max_dim);

  //! The small resolution of C_p through max_dim: a, c2 with boundary a^p,
  //! c3 -> c2.(1 - a), c4 -> c3.(1 + a + ... + a^{p-1}), alternating.
  CrossedComplex cyclic_resolution(int p, int max_dim);

  //! The interval groupoid: objects 0, 1 and one arrow iota : 0 -> 1.
  CrossedComplex interval();

  struct TensorOptions {
    //! Leave out the name of the object of a one-object factor, so that
    //! 0 (x) o becomes "0" and iota (x) b stays "iota#b".
    bool short_names = false;
  };

  //! A (x) B through total dimension max_dim. Generator a (x) b is named
  //! "a#b", object (p, q) "p#q".
  CrossedComplex tensor_product(CrossedComplex const& a, CrossedComplex const& b, int max_dim,
                                TensorOptions options = {});

  //! Evaluates theta(x, y) = x (x) y in a tensor product built by
  //! tensor_product, expanding composite arguments by the bimorphism laws.
  class TensorEvaluator {
   public:
    TensorEvaluator(CrossedComplex const& a, CrossedComplex const& b, CrossedComplex const& t);
    [[nodiscard]] Element operator()(Element const& x, Element const& y) const;
    //! The tensor generator cell_a (x) cell_b, where dimension 0 cells are
    //! objects.
    [[nodiscard]] std::optional<int> generator(int m, int i, int n, int j) const;
    [[nodiscard]] ObjectId object(ObjectId p, ObjectId q) const;

   private:
    CrossedComplex const& a_;
    CrossedComplex const& b_;
    CrossedComplex const& t_;
    std::map<std::array<int, 4>, int> gens_;
    std::size_t b_objects_;
  };

  //! I (x) B: objects 0 and 1 (B one-object) and generators 0#b, 1#b,
  //! iota#b, with iota in dimension 1.
  CrossedComplex cylinder(CrossedComplex const& b, int max_dim);

  struct AmalgamData {
    ComplexPtr a, b, c;
    std::shared_ptr<ComplexMorphism const> i, j;  // C -> A, C -> B
  };

  //! The double mapping cylinder A u (I (x) C) u B with 0 (x) c glued along i
  //! and 1 (x) c along j. Objects 0 (for A) and 1 (for B); the cylinder arrow
  //! is "iota" and its higher generators "iota#c". Throws UnverifiedLift.
  CrossedComplex amalgam_resolution(AmalgamData const& d, int max_dim);

  struct HnnData {
    ComplexPtr g, a;
    std::shared_ptr<ComplexMorphism const> k0, k1;  // A -> G
  };

  //! Resolution of *_k G: generators of G plus z (stable letter) and z#c
  //! for every generator c of A. The generator z#c is the cylinder cell
  //! iota#c rebased along 1 (x) c so that its boundary starts with z^-1.
  //! Throws UnverifiedLift.
  CrossedComplex hnn_resolution(HnnData const& d, int max_dim);

  //! Collapses the arrow joining the two objects, keeping object `keep`.
  //! One-object complexes are returned unchanged. Throws NotTwoObject.
  CrossedComplex retract_to_vertex(CrossedComplex const& c, ObjectId keep);

  struct LiftOptions {
    std::size_t max_factors = 12;    // dimension-2 search depth
    std::size_t max_nodes = 200000;  // dimension-2 search budget
    std::size_t oracle_bound = 4096;
  };

  //! Lifts a group morphism, given by its dimension-1 images, to a morphism
  //! of resolutions through max_dim. `hints` supplies images that are used
  //! as given. Throws LiftNotFound naming the failing dimension.
  ComplexMorphism lift_morphism(ComplexPtr source, ComplexPtr target,
                                std::vector<Word> const& dim1_images, int max_dim,
                                ComplexMorphism const* hints = nullptr,
                                LiftOptions const& options = {});

}  // namespace xres

#endif  // XRES_CONSTRUCTIONS_HPP_
