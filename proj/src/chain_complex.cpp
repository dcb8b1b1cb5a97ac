// SPDX-License-Identifier: Apache-2.0

#include <optional>
#include <sstream>

#include "xres/error.hpp"
#include "xres/verify.hpp"

namespace xres {

  namespace {
    constexpr char const* kModule = "verify";

    Word prefix(Word const& w, std::size_t k, Alphabet const& alphabet) {
      return reduce(w.source(), w.letters().first(k), alphabet);
    }

    Word suffix(Word const& w, std::size_t k, Alphabet const& alphabet) {
      auto const letters = w.letters();
      if (k >= letters.size()) {
        return Word::identity(w.target());
      }
      auto const& arrow = alphabet.at(static_cast<std::size_t>(letters[k].gen));
      ObjectId const start = letters[k].exp > 0 ? arrow.source : arrow.target;
      return reduce(start, letters.subspan(k), alphabet);
    }

    void check_generator(int x, Alphabet const& alphabet) {
      if (x < 0 || static_cast<std::size_t>(x) >= alphabet.size()) {
        throw Error(ErrorKind::UnknownGenerator, kModule,
                    "no dimension-1 generator with index " + std::to_string(x));
      }
    }

    //! The multiplication table of a finite oracle on element indices.
    std::vector<std::size_t> product_table(GroupOracle const& o) {
      auto const& el = o.elements();
      std::size_t const n = el.size();
      std::vector<std::size_t> t(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          t[a * n + b] = o.index_of(el[a] * el[b]);
        }
      }
      return t;
    }

    void require_range(ChainComplex const& cc, int from, int to) {
      if (from < 0 || to < from || to >= cc.top()) {
        throw Error(ErrorKind::DimensionOutOfRange, kModule,
                    "dimensions " + std::to_string(from) + ".." + std::to_string(to)
                        + " need boundaries through dimension " + std::to_string(to + 1)
                        + " (complex stops at " + std::to_string(cc.top()) + ")");
      }
    }
  }  // namespace

  GroupRingElement fox_derivative(Word const& w, int x, Alphabet const& alphabet,
                                  GroupOracle const& o) {
    check_generator(x, alphabet);
    GroupRingElement out;
    auto const letters = w.letters();
    for (std::size_t k = 0; k < letters.size(); ++k) {
      if (letters[k].gen != x) {
        continue;
      }
      if (letters[k].exp > 0) {
        out += GroupRingElement(o, prefix(w, k, alphabet));
      } else {
        out -= GroupRingElement(o, prefix(w, k + 1, alphabet));
      }
    }
    return out;
  }

  GroupRingElement right_fox_derivative(Word const& w, int x, Alphabet const& alphabet,
                                        GroupOracle const& o) {
    check_generator(x, alphabet);
    GroupRingElement out;
    auto const letters = w.letters();
    for (std::size_t k = 0; k < letters.size(); ++k) {
      if (letters[k].gen != x) {
        continue;
      }
      if (letters[k].exp > 0) {
        out += GroupRingElement(o, suffix(w, k + 1, alphabet));
      } else {
        out -= GroupRingElement(o, suffix(w, k, alphabet));
      }
    }
    return out;
  }

  ChainComplex to_chain_complex(CrossedComplex const& c, OraclePtr o, int max_dim) {
    if (!o) {
      o = c.oracle();
    }
    if (!o) {
      throw Error(ErrorKind::MissingOracle, kModule,
                  "the chain complex needs an oracle for the fundamental group");
    }
    if (c.objects().size() != 1) {
      throw Error(ErrorKind::InvalidArgument, kModule,
                  "chain complexes are built for one-object complexes");
    }
    int const top = std::max(0, std::min(max_dim, std::max(c.top(), 1)));
    ChainComplex cc;
    cc.oracle = o;
    cc.ranks.push_back(1);
    cc.names.push_back({c.objects()[0]});
    cc.boundary.emplace_back();
    auto const& alphabet = c.alphabet();
    for (int n = 1; n <= top; ++n) {
      std::size_t const rank = c.count(n);
      std::size_t const below = cc.ranks.back();
      std::vector<std::vector<GroupRingElement>> rows(rank,
                                                      std::vector<GroupRingElement>(below));
      for (std::size_t j = 0; j < rank; ++j) {
        auto& row = rows[j];
        if (n == 1) {
          row[0] = GroupRingElement(*o, Word::letter(alphabet, static_cast<int>(j)))
                   - GroupRingElement::one(*o);
        } else if (n == 2) {
          Word const& w = c.generator(2, static_cast<int>(j)).boundary.word();
          for (std::size_t x = 0; x < below; ++x) {
            row[x] = right_fox_derivative(w, static_cast<int>(x), alphabet, *o);
          }
        } else {
          Element const& bd = c.generator(n, static_cast<int>(j)).boundary;
          auto const coords
              = n == 3 ? abelianize(bd.peiffer(), *o) : bd.module().coordinates(*o);
          for (auto const& [g, r] : coords) {
            row[static_cast<std::size_t>(g)] = r;
          }
        }
      }
      cc.ranks.push_back(rank);
      cc.names.push_back(c.names(n));
      cc.boundary.push_back(std::move(rows));
    }
    return cc;
  }

  IntMatrix expand(ChainComplex const& cc, int n) {
    auto const& o = *cc.oracle;
    if (!o.is_finite()) {
      throw Error(ErrorKind::NotFinite, kModule, "expansion needs a finite group");
    }
    if (n < 1 || n > cc.top()) {
      throw Error(ErrorKind::DimensionOutOfRange, kModule,
                  "no boundary in dimension " + std::to_string(n));
    }
    std::size_t const order = o.order();
    auto const table = product_table(o);
    auto const& rows = cc.boundary[static_cast<std::size_t>(n)];
    std::size_t const src = cc.ranks[static_cast<std::size_t>(n)];
    std::size_t const dst = cc.ranks[static_cast<std::size_t>(n - 1)];
    IntMatrix m(src * order, dst * order);
    for (std::size_t j = 0; j < src; ++j) {
      for (std::size_t i = 0; i < dst; ++i) {
        for (auto const& [g, c] : rows[j][i].terms()) {
          std::size_t const gi = o.index_of(g);
          for (std::size_t h = 0; h < order; ++h) {
            m(j * order + h, i * order + table[gi * order + h]) += c;
          }
        }
      }
    }
    return m;
  }

  IntMatrix augmented(ChainComplex const& cc, int n) {
    if (n < 1 || n > cc.top()) {
      throw Error(ErrorKind::DimensionOutOfRange, kModule,
                  "no boundary in dimension " + std::to_string(n));
    }
    auto const& rows = cc.boundary[static_cast<std::size_t>(n)];
    std::size_t const src = cc.ranks[static_cast<std::size_t>(n)];
    std::size_t const dst = cc.ranks[static_cast<std::size_t>(n - 1)];
    IntMatrix m(src, dst);
    for (std::size_t j = 0; j < src; ++j) {
      for (std::size_t i = 0; i < dst; ++i) {
        m(j, i) = rows[j][i].augmentation();
      }
    }
    return m;
  }

  std::string AbelianGroup::format() const {
    std::string out;
    if (rank > 0) {
      out = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
    }
    for (auto const& t : torsion) {
      out += (out.empty() ? "" : " + ") + std::string("C") + t.str();
    }
    return out.empty() ? "0" : out;
  }

  AbelianGroup homology_at(IntMatrix const* out, IntMatrix const* in, std::size_t rank) {
    std::size_t const r_out = out ? smith_normal_form(*out).rank() : 0;
    AbelianGroup h;
    std::size_t r_in = 0;
    if (in) {
      auto const snf = smith_normal_form(*in);
      r_in = snf.rank();
      for (auto const& d : snf.diagonal) {
        if (d > 1) {
          h.torsion.push_back(d);
        }
      }
    }
    h.rank = rank - r_out - r_in;
    return h;
  }

  ExactnessReport check_exactness(ChainComplex const& cc, int from, int to) {
    require_range(cc, from, to);
    if (!cc.oracle->is_finite()) {
      throw Error(ErrorKind::NotFinite, kModule, "exactness is checked over finite groups only");
    }
    std::size_t const order = cc.oracle->order();
    ExactnessReport report;
    std::optional<IntMatrix> out;
    if (from >= 1) {
      out = expand(cc, from);
    }
    for (int n = from; n <= to; ++n) {
      IntMatrix in = expand(cc, n + 1);
      AbelianGroup h = homology_at(out ? &*out : nullptr, &in,
                                   cc.ranks[static_cast<std::size_t>(n)] * order);
      bool const expected = n == 0 ? h == AbelianGroup{1, {}} : h.is_trivial();
      if (!h.is_trivial()) {
        report.homology.emplace_back(n, h);
      }
      if (!expected) {
        if (report.exact) {
          report.detail = "not exact in dimension " + std::to_string(n) + ": H = " + h.format();
        }
        report.exact = false;
      }
      out = std::move(in);
    }
    return report;
  }

  std::vector<AbelianGroup> group_homology(ChainComplex const& cc, int from, int to) {
    require_range(cc, from, to);
    std::vector<AbelianGroup> out;
    std::optional<IntMatrix> down;
    if (from >= 1) {
      down = augmented(cc, from);
    }
    for (int n = from; n <= to; ++n) {
      IntMatrix up = augmented(cc, n + 1);
      out.push_back(homology_at(down ? &*down : nullptr, &up, cc.ranks[static_cast<std::size_t>(n)]));
      down = std::move(up);
    }
    return out;
  }

  std::string format_matrix(ChainComplex const& cc, int n, std::vector<std::string> const& letters) {
    std::ostringstream os;
    auto const& rows = cc.boundary.at(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < rows.size(); ++j) {
      os << cc.names[static_cast<std::size_t>(n)][j] << ": (";
      for (std::size_t i = 0; i < rows[j].size(); ++i) {
        os << (i ? ", " : "") << format(rows[j][i], letters);
      }
      os << ")\n";
    }
    return os.str();
  }

}  // namespace xres
