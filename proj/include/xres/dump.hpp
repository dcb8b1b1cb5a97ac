// SPDX-License-Identifier: Apache-2.0

// Text dumps of crossed complexes:
//
//   objects: o
//   dim 1: a : o -> o
//   dim 2: r @ o
//   dim 3: c3 @ o
//   top: 3
//   d r = a^3
//   d c3 = r^-1*r^(a)
//
// Dimension-1 expressions are words; dimension 2 a product of factors
// name[^-1][^(word)]; dimension 3 and up a sum of terms name.[ring] with
// ring elements n*word + ... . Generators and boundaries are listed in
// (dimension, name) order. Lines starting with '#' are comments.

#ifndef XRES_DUMP_HPP_
#define XRES_DUMP_HPP_

#include <string>
#include <string_view>

#include "xres/crossed_complex.hpp"
#include "xres/element.hpp"

namespace xres {

  std::string print_complex(CrossedComplex const& c);
  //! Throws SyntaxError with the byte offset of the problem.
  CrossedComplex parse_complex(std::string_view text);

  std::string format(Element const& x, CrossedComplex const& c);
  std::string format(PeifferSequence const& s, CrossedComplex const& c);
  std::string format(ModuleElement const& m, CrossedComplex const& c);

  //! Parses an element of dimension `dim` at object `base`, in the syntax
  //! the dumps use.
  Element parse_element(std::string_view text, int dim, ObjectId base, CrossedComplex const& c);

}  // namespace xres

#endif  // XRES_DUMP_HPP_
