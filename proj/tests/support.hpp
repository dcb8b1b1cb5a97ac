// SPDX-License-Identifier: Apache-2.0

#ifndef XRES_TESTS_SUPPORT_HPP_
#define XRES_TESTS_SUPPORT_HPP_

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "xres/constructions.hpp"
#include "xres/crossed_complex.hpp"
#include "xres/dump.hpp"
#include "xres/presentation.hpp"

namespace xres::test {

  inline Presentation gp(std::string const& text) {
    return Presentation::parse(text);
  }

  //! The free crossed module of a presentation with the oracle the CLI
  //! would attach: a torus knot normal form or a finite enumeration.
  inline CrossedComplex module_of(std::string const& text, std::size_t bound = 4096) {
    auto const p = gp(text);
    CrossedComplex c = from_presentation(p);
    if (auto t = detect_torus_knot(p)) {
      c.set_oracle(t);
    } else if (p.relators().empty()) {
      c.set_oracle(make_free_oracle(p.alphabet()));
    } else {
      c.set_oracle(build_finite_oracle(p, bound));
    }
    return c;
  }

  inline std::shared_ptr<CrossedComplex const> share(CrossedComplex c) {
    return std::make_shared<CrossedComplex const>(std::move(c));
  }

  //! A reduced loop at object 0 over the first `gens` generators.
  inline Word random_word(std::mt19937& rng, Alphabet const& alphabet, int gens, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> gen(0, gens - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<Letter> letters;
    for (int n = len(rng); n > 0; --n) {
      letters.push_back({gen(rng), sign(rng) ? 1 : -1});
    }
    return reduce(0, letters, alphabet);
  }

  inline PeifferSequence random_sequence(std::mt19937& rng, CrossedComplex const& c, int max_factors,
                                         int max_conj) {
    std::uniform_int_distribution<int> len(0, max_factors);
    std::uniform_int_distribution<int> gen(0, static_cast<int>(c.count(2)) - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    PeifferSequence s(0);
    for (int n = len(rng); n > 0; --n) {
      s.push({gen(rng), sign(rng) ? 1 : -1,
              random_word(rng, c.alphabet(), static_cast<int>(c.count(1)), max_conj)});
    }
    return s;
  }

  inline std::string show(Word const& w, CrossedComplex const& c) {
    return format(w, c.arrow_names());
  }

}  // namespace xres::test

#endif  // XRES_TESTS_SUPPORT_HPP_
