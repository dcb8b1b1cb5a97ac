// SPDX-License-Identifier: Apache-2.0

#include <optional>
#include <utility>

#include "xres/verify.hpp"

namespace xres {

  IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  bool IntMatrix::is_zero() const {
    for (auto const& x : a_) {
      if (x != 0) {
        return false;
      }
    }
    return true;
  }

  IntMatrix operator*(IntMatrix const& x, IntMatrix const& y) {
    IntMatrix out(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i) {
      for (std::size_t k = 0; k < x.cols(); ++k) {
        Integer const& xik = x(i, k);
        if (xik == 0) {
          continue;
        }
        for (std::size_t j = 0; j < y.cols(); ++j) {
          if (y(k, j) != 0) {
            out(i, j) += xik * y(k, j);
          }
        }
      }
    }
    return out;
  }

  Integer determinant(IntMatrix a) {
    std::size_t const n = a.rows();
    if (n != a.cols()) {
      return 0;
    }
    if (n == 0) {
      return 1;
    }
    // Bareiss fraction-free elimination.
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a(k, k) == 0) {
        std::size_t p = k + 1;
        while (p < n && a(p, k) == 0) {
          ++p;
        }
        if (p == n) {
          return 0;
        }
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(a(k, j), a(p, j));
        }
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        }
      }
      prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
  }

  std::size_t SnfResult::rank() const {
    std::size_t r = 0;
    for (auto const& d : diagonal) {
      if (d != 0) {
        ++r;
      }
    }
    return r;
  }

  namespace {
    struct Reducer {
      IntMatrix a, u, v;

      void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) {
          return;
        }
        for (std::size_t j = 0; j < a.cols(); ++j) {
          std::swap(a(i, j), a(k, j));
        }
        for (std::size_t j = 0; j < u.cols(); ++j) {
          std::swap(u(i, j), u(k, j));
        }
      }
      void swap_cols(std::size_t i, std::size_t k) {
        if (i == k) {
          return;
        }
        for (std::size_t r = 0; r < a.rows(); ++r) {
          std::swap(a(r, i), a(r, k));
        }
        for (std::size_t r = 0; r < v.rows(); ++r) {
          std::swap(v(r, i), v(r, k));
        }
      }
      // row i += q * row k
      void add_row(std::size_t i, std::size_t k, Integer const& q) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
          if (a(k, j) != 0) {
            a(i, j) += q * a(k, j);
          }
        }
        for (std::size_t j = 0; j < u.cols(); ++j) {
          if (u(k, j) != 0) {
            u(i, j) += q * u(k, j);
          }
        }
      }
      // col i += q * col k
      void add_col(std::size_t i, std::size_t k, Integer const& q) {
        for (std::size_t r = 0; r < a.rows(); ++r) {
          if (a(r, k) != 0) {
            a(r, i) += q * a(r, k);
          }
        }
        for (std::size_t r = 0; r < v.rows(); ++r) {
          if (v(r, k) != 0) {
            v(r, i) += q * v(r, k);
          }
        }
      }
      void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
          a(i, j) = -a(i, j);
        }
        for (std::size_t j = 0; j < u.cols(); ++j) {
          u(i, j) = -u(i, j);
        }
      }

      //! Clears row and column t below/right of the pivot, leaving a pivot
      //! that divides every remaining entry.
      void clear(std::size_t t) {
        std::size_t const rows = a.rows();
        std::size_t const cols = a.cols();
        while (true) {
          bool changed = false;
          for (std::size_t i = t + 1; i < rows; ++i) {
            if (a(i, t) == 0) {
              continue;
            }
            Integer const q = a(i, t) / a(t, t);
            add_row(i, t, -q);
            if (a(i, t) != 0) {
              swap_rows(t, i);
              changed = true;
            }
          }
          for (std::size_t j = t + 1; j < cols; ++j) {
            if (a(t, j) == 0) {
              continue;
            }
            Integer const q = a(t, j) / a(t, t);
            add_col(j, t, -q);
            if (a(t, j) != 0) {
              swap_cols(t, j);
              changed = true;
            }
          }
          if (changed) {
            continue;
          }
          bool divisible = true;
          for (std::size_t i = t + 1; i < rows && divisible; ++i) {
            for (std::size_t j = t + 1; j < cols; ++j) {
              if (a(i, j) % a(t, t) != 0) {
                add_row(t, i, 1);
                divisible = false;
                break;
              }
            }
          }
          if (divisible) {
            return;
          }
        }
      }
    };
  }  // namespace

  SnfResult smith_normal_form(IntMatrix const& m) {
    Reducer r{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    std::size_t const n = std::min(m.rows(), m.cols());
    for (std::size_t t = 0; t < n; ++t) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < m.rows(); ++i) {
        for (std::size_t j = t; j < m.cols(); ++j) {
          Integer const& x = r.a(i, j);
          if (x != 0 && (!best || abs(x) < abs(r.a(best->first, best->second)))) {
            best = {i, j};
            if (abs(x) == 1) {
              break;
            }
          }
        }
      }
      if (!best) {
        break;
      }
      r.swap_rows(t, best->first);
      r.swap_cols(t, best->second);
      r.clear(t);
      if (r.a(t, t) < 0) {
        r.negate_row(t);
      }
    }
    SnfResult out;
    for (std::size_t t = 0; t < n; ++t) {
      out.diagonal.push_back(r.a(t, t));
    }
    out.u = std::move(r.u);
    out.v = std::move(r.v);
    return out;
  }

}  // namespace xres
