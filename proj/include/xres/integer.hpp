// SPDX-License-Identifier: Apache-2.0

#ifndef XRES_INTEGER_HPP_
#define XRES_INTEGER_HPP_

#include <boost/multiprecision/cpp_int.hpp>

namespace xres {

  //! Arbitrary precision integer used for every coefficient and matrix entry.
  using Integer = boost::multiprecision::cpp_int;

}  // namespace xres

#endif  // XRES_INTEGER_HPP_
