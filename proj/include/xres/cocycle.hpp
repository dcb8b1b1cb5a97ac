// SPDX-License-Identifier: Apache-2.0

// Non-abelian 2-cocycles of a group G with coefficients in a finite group
// K, as morphisms (k^2, k^1) from a free crossed resolution of G into the
// inner automorphism crossed module K -> Aut(K), and the extensions of G by
// K they describe.
//
// Aut(K) acts on the right, x^alpha = alpha(x), and alpha.beta means
// "alpha, then beta". The boundary sends s to y -> s^-1 y s.

#ifndef XRES_COCYCLE_HPP_
#define XRES_COCYCLE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "xres/crossed_complex.hpp"
#include "xres/finite_group.hpp"
#include "xres/group_oracle.hpp"
#include "xres/presentation.hpp"

namespace xres {

  struct InnerCrossedModule {
    OraclePtr kernel;
    FiniteGroup k;                              // K on the kernel oracle's element indices
    std::vector<int> generators;                // a generating set of K
    FiniteGroup aut;                            // Aut(K); element 0 is the identity
    std::vector<std::vector<int>> automorphisms;  // aut element -> permutation of K
    std::vector<int> boundary;                  // K -> Aut(K), by conjugation

    [[nodiscard]] int act(int x, int alpha) const {
      return automorphisms[static_cast<std::size_t>(alpha)][static_cast<std::size_t>(x)];
    }
    //! The automorphism with the given images of `generators`, if any.
    [[nodiscard]] std::optional<int> find_automorphism(std::vector<int> const& images) const;
  };

  //! Aut(K) by enumerating images of a generating set. Throws TooLarge
  //! past |K| = 64, NotFinite for an infinite oracle.
  InnerCrossedModule automorphism_oracle(OraclePtr const& o);

  struct CocycleData {
    std::vector<int> k1;  // dimension-1 generator -> element of Aut(K)
    std::vector<int> k2;  // dimension-2 generator -> element of K
  };

  struct CocycleReport {
    bool ok = true;
    std::string witness;  // "dim n: name"
    std::string detail;
    explicit operator bool() const noexcept {
      return ok;
    }
  };

  //! k^1 on a word of the resolution.
  int evaluate_k1(CocycleData const& c, InnerCrossedModule const& m, Word const& w);
  //! k^2 on a Peiffer sequence, acting through k^1.
  int evaluate_k2(CocycleData const& c, InnerCrossedModule const& m, PeifferSequence const& s);

  //! d k^2 = k^1 phi_2 on dimension 2 and k^2 phi_3 = 1 on dimension 3.
  CocycleReport verify_cocycle(CocycleData const& c, CrossedComplex const& f,
                               InnerCrossedModule const& m);

  struct Extension {
    //! The quotient of F(X_1) x| K: generators X_1 and k1..km, relators of
    //! K, the action x^-1 k x = k^{k^1 x}, and phi_2(r) = k^2(r).
    Presentation presentation;
    //! For finite G: the table of E and the projection to G.
    std::optional<FiniteGroup> table;
    std::vector<int> projection;  // E element -> G element index
    bool projection_is_homomorphism = false;
    bool kernel_is_k = false;
    std::string identified;  // name from the small-group library, or empty

    [[nodiscard]] std::string report() const;
  };

  //! Throws UnverifiedCocycle.
  Extension build_extension(CocycleData const& c, CrossedComplex const& f,
                            InnerCrossedModule const& m);

  //! Names a group of order <= 500 from C_n, S_3, S_4, D_n and C_2 x C_2.
  std::optional<std::string> identify_group(FiniteGroup const& g);

}  // namespace xres

#endif  // XRES_COCYCLE_HPP_
