// SPDX-License-Identifier: Apache-2.0

#include "xres/word.hpp"

#include <algorithm>
#include <sstream>

#include "xres/error.hpp"

namespace xres {

  namespace {
    [[noreturn]] void non_composable(std::string const& what) {
      throw Error(ErrorKind::NonComposablePath, "words", what);
    }

    ObjectId letter_source(Alphabet const& alphabet, Letter l) {
      auto const& a = alphabet.at(static_cast<std::size_t>(l.gen));
      return l.exp > 0 ? a.source : a.target;
    }

    ObjectId letter_target(Alphabet const& alphabet, Letter l) {
      auto const& a = alphabet.at(static_cast<std::size_t>(l.gen));
      return l.exp > 0 ? a.target : a.source;
    }

    std::vector<Letter> cyclic_core(std::span<Letter const> in) {
      std::vector<Letter> v(in.begin(), in.end());
      std::size_t lo = 0, hi = v.size();
      while (hi - lo >= 2 && v[lo] == v[hi - 1].inverse()) {
        ++lo;
        --hi;
      }
      return {v.begin() + static_cast<long>(lo), v.begin() + static_cast<long>(hi)};
    }
  }  // namespace

  Word Word::letter(Alphabet const& alphabet, int gen, int exp) {
    if (gen < 0 || static_cast<std::size_t>(gen) >= alphabet.size()) {
      throw Error(ErrorKind::UnknownGenerator, "words",
                  "generator id " + std::to_string(gen));
    }
    Letter const l{gen, exp > 0 ? 1 : -1};
    Word w;
    w.letters_.push_back(l);
    w.source_ = letter_source(alphabet, l);
    w.target_ = letter_target(alphabet, l);
    return w;
  }

  Word Word::inverse() const {
    Word w;
    w.source_ = target_;
    w.target_ = source_;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
      w.letters_.push_back(it->inverse());
    }
    return w;
  }

  Word& Word::operator*=(Word const& rhs) {
    if (target_ != rhs.source_) {
      non_composable("target " + std::to_string(target_) + " != source "
                     + std::to_string(rhs.source_));
    }
    for (auto const& l : rhs.letters_) {
      if (!letters_.empty() && letters_.back() == l.inverse()) {
        letters_.pop_back();
      } else {
        letters_.push_back(l);
      }
    }
    target_ = rhs.target_;
    return *this;
  }

  Word reduce(ObjectId start, std::span<Letter const> letters, Alphabet const& alphabet) {
    Word w = Word::identity(start);
    ObjectId at = start;
    for (auto const& raw : letters) {
      if (raw.gen < 0 || static_cast<std::size_t>(raw.gen) >= alphabet.size()) {
        throw Error(ErrorKind::UnknownGenerator, "words",
                    "generator id " + std::to_string(raw.gen));
      }
      Letter const l{raw.gen, raw.exp > 0 ? 1 : -1};
      if (letter_source(alphabet, l) != at) {
        non_composable("letter " + std::to_string(l.gen) + " does not start at object "
                       + std::to_string(at));
      }
      at = letter_target(alphabet, l);
      if (!w.letters_.empty() && w.letters_.back() == l.inverse()) {
        w.letters_.pop_back();
      } else {
        w.letters_.push_back(l);
      }
    }
    w.target_ = at;
    return w;
  }

  Word conjugate(Word const& w, Word const& u) {
    if (!w.is_loop() || w.source() != u.source()) {
      throw Error(ErrorKind::NonComposablePath, "words",
                  "conjugate needs a loop at the source of the conjugator");
    }
    return u.inverse() * w * u;
  }

  Word power(Word const& w, long k) {
    if (!w.is_loop()) {
      throw Error(ErrorKind::NonComposablePath, "words", "power of a non-loop");
    }
    Word base = k < 0 ? w.inverse() : w;
    Word out = Word::identity(w.source());
    for (long i = 0; i < (k < 0 ? -k : k); ++i) {
      out *= base;
    }
    return out;
  }

  Word substitute(Word const& w, std::span<Word const> images, ObjectId start) {
    Word out = Word::identity(start);
    for (auto const& l : w.letters()) {
      if (static_cast<std::size_t>(l.gen) >= images.size()) {
        throw Error(ErrorKind::MissingImage, "words",
                    "no image for generator " + std::to_string(l.gen));
      }
      auto const& img = images[static_cast<std::size_t>(l.gen)];
      out *= (l.exp > 0 ? img : img.inverse());
    }
    return out;
  }

  Word collapse(Word const& w, std::vector<bool> const& dropped, ObjectId to) {
    std::vector<Letter> kept;
    for (auto const& l : w.letters()) {
      if (!dropped.at(static_cast<std::size_t>(l.gen))) {
        kept.push_back(l);
      }
    }
    // every surviving generator is treated as a loop at `to`
    Alphabet loops(dropped.size(), Arrow{to, to});
    return reduce(to, kept, loops);
  }

  bool cyclically_equivalent(Word const& a, Word const& b) {
    auto const x = cyclic_core(a.letters());
    auto const y = cyclic_core(b.letters());
    if (x.size() != y.size()) {
      return false;
    }
    if (x.empty()) {
      return true;
    }
    std::vector<Letter> xx(x);
    xx.insert(xx.end(), x.begin(), x.end());
    return std::search(xx.begin(), xx.end(), y.begin(), y.end()) != xx.end();
  }

  std::string format(Word const& w, std::span<std::string const> names) {
    if (w.empty()) {
      return "1";
    }
    std::ostringstream os;
    auto const letters = w.letters();
    bool first = true;
    for (std::size_t i = 0; i < letters.size();) {
      std::size_t j = i;
      while (j < letters.size() && letters[j] == letters[i]) {
        ++j;
      }
      long const k = static_cast<long>(j - i) * letters[i].exp;
      if (!first) {
        os << '*';
      }
      first = false;
      os << names[static_cast<std::size_t>(letters[i].gen)];
      if (k != 1) {
        os << '^' << k;
      }
      i = j;
    }
    return os.str();
  }

}  // namespace xres
