// SPDX-License-Identifier: Apache-2.0

// Certification by linear algebra: the chain complex of free right Z[G]
// modules underlying a one-object free crossed complex, Smith normal forms,
// exactness and homology.
//
//   C_0 = Z[G]            augmentation module, one generator
//   C_1 = free on X_1     d e_x = 1.(x - 1)
//   C_2 = free on X_2     d e_r = sum_x e_x . (right Fox derivative of omega r)
//   C_n, n >= 3           the module boundaries of the complex

#ifndef XRES_VERIFY_HPP_
#define XRES_VERIFY_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "xres/crossed_complex.hpp"
#include "xres/group_oracle.hpp"
#include "xres/group_ring.hpp"
#include "xres/integer.hpp"
#include "xres/word.hpp"

namespace xres {

  // --- integer matrices -------------------------------------------------------

  class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static IntMatrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const noexcept {
      return rows_;
    }
    [[nodiscard]] std::size_t cols() const noexcept {
      return cols_;
    }
    Integer& operator()(std::size_t i, std::size_t j) {
      return a_[i * cols_ + j];
    }
    Integer const& operator()(std::size_t i, std::size_t j) const {
      return a_[i * cols_ + j];
    }
    [[nodiscard]] bool is_zero() const;
    friend IntMatrix operator*(IntMatrix const& x, IntMatrix const& y);
    bool operator==(IntMatrix const&) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> a_;
  };

  //! Determinant of a square matrix by fraction-free elimination.
  Integer determinant(IntMatrix a);

  struct SnfResult {
    //! min(rows, cols) nonnegative entries, d_1 | d_2 | ..., zeros last.
    std::vector<Integer> diagonal;
    IntMatrix u;  // rows x rows, unimodular
    IntMatrix v;  // cols x cols, unimodular
    [[nodiscard]] std::size_t rank() const;
  };

  //! U A V = diag.
  SnfResult smith_normal_form(IntMatrix const& a);

  // --- Fox calculus -------------------------------------------------------------

  //! Left derivative: d(uv)/dx = du/dx + u.dv/dx. Throws UnknownGenerator.
  GroupRingElement fox_derivative(Word const& w, int x, Alphabet const& alphabet,
                                  GroupOracle const& o);
  //! Right derivative: d(uv) = du.v + dv, the convention of right modules.
  GroupRingElement right_fox_derivative(Word const& w, int x, Alphabet const& alphabet,
                                        GroupOracle const& o);

  // --- chain complexes ------------------------------------------------------------

  struct ChainComplex {
    std::vector<std::size_t> ranks;  // ranks[n] for n = 0..top
    //! boundary[n][j][i]: coefficient of e_i (dimension n - 1) in d e_j.
    std::vector<std::vector<std::vector<GroupRingElement>>> boundary;
    std::vector<std::vector<std::string>> names;
    OraclePtr oracle;

    [[nodiscard]] int top() const noexcept {
      return static_cast<int>(ranks.size()) - 1;
    }
  };

  //! Throws MissingOracle if the complex has no pi_1 oracle and
  //! InvalidArgument for more than one object.
  ChainComplex to_chain_complex(CrossedComplex const& c, OraclePtr o, int max_dim);

  //! d_n as an integer matrix over the Z-basis e_i.g, rows indexed by the
  //! source. Throws NotFinite.
  IntMatrix expand(ChainComplex const& cc, int n);
  //! d_n with every coefficient replaced by its augmentation: the chain
  //! complex of coinvariants, whose homology is the homology of G.
  IntMatrix augmented(ChainComplex const& cc, int n);

  struct AbelianGroup {
    std::size_t rank = 0;
    std::vector<Integer> torsion;  // invariant factors > 1
    [[nodiscard]] bool is_trivial() const noexcept {
      return rank == 0 && torsion.empty();
    }
    //! "0", "Z", "Z^2 + C2 + C6".
    [[nodiscard]] std::string format() const;
    bool operator==(AbelianGroup const&) const = default;
  };

  //! Homology at `dim` of the row-convention complex ... -> C_{n+1} -> C_n -> ...
  //! given by d_n = `out` (C_n -> C_{n-1}, empty for n = 0) and
  //! d_{n+1} = `in`.
  AbelianGroup homology_at(IntMatrix const* out, IntMatrix const* in, std::size_t rank);

  struct ExactnessReport {
    bool exact = true;
    std::vector<std::pair<int, AbelianGroup>> homology;  // nonzero groups found
    std::string detail;
    explicit operator bool() const noexcept {
      return exact;
    }
  };

  //! Exactness of the expanded complex of abelian groups at each n in
  //! [from, to] (at 0: H_0 = Z, i.e. a resolution of Z). Needs to < top.
  //! Throws NotFinite, DimensionOutOfRange.
  ExactnessReport check_exactness(ChainComplex const& cc, int from, int to);

  //! H_n(G; Z) for n in [from, to] from the coinvariants; needs to < top.
  std::vector<AbelianGroup> group_homology(ChainComplex const& cc, int from, int to);

  //! "n1*g1 + n2*g2" rows, one per generator.
  std::string format_matrix(ChainComplex const& cc, int n, std::vector<std::string> const& letters);

}  // namespace xres

#endif  // XRES_VERIFY_HPP_
