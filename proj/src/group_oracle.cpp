// SPDX-License-Identifier: Apache-2.0

#include "xres/group_oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>

#include "xres/error.hpp"
#include "xres/presentation.hpp"

namespace xres {

  namespace {
    [[noreturn]] void not_finite() {
      throw Error(ErrorKind::NotFinite, "group_oracle", "oracle is not finite");
    }

    [[noreturn]] void unknown_generator(int gen) {
      throw Error(ErrorKind::UnknownGenerator, "group_oracle",
                  "generator id " + std::to_string(gen) + " is not known to the oracle");
    }

    class FreeOracle final : public GroupOracle {
     public:
      FreeOracle(Alphabet alphabet, bool exact) : alphabet_(std::move(alphabet)), exact_(exact) {}

      std::string_view kind() const noexcept override {
        return "free";
      }
      bool exact() const noexcept override {
        return exact_;
      }
      Word normalize(Word const& w) const override {
        for (auto const& l : w.letters()) {
          if (static_cast<std::size_t>(l.gen) >= alphabet_.size()) {
            unknown_generator(l.gen);
          }
        }
        return w;  // words are kept reduced
      }

     private:
      Alphabet alphabet_;
      bool exact_;
    };

    class CyclicOracle final : public GroupOracle {
     public:
      CyclicOracle(Alphabet alphabet, int gen) : alphabet_(std::move(alphabet)), gen_(gen) {}

      std::string_view kind() const noexcept override {
        return "infinite-cyclic";
      }
      Word normalize(Word const& w) const override {
        long k = 0;
        for (auto const& l : w.letters()) {
          if (l.gen != gen_) {
            unknown_generator(l.gen);
          }
          k += l.exp;
        }
        return power(Word::letter(alphabet_, gen_), k);
      }

     private:
      Alphabet alphabet_;
      int gen_;
    };

    class TorusKnotOracle final : public GroupOracle {
     public:
      TorusKnotOracle(Alphabet alphabet, int x, int y, int p, int q)
          : alphabet_(std::move(alphabet)), gens_{x, y}, orders_{p, q} {}

      std::string_view kind() const noexcept override {
        return "torus-knot";
      }
      Word normalize(Word const& w) const override {
        long k = 0;
        std::vector<std::pair<int, int>> syllables;  // (0 for x | 1 for y, exponent)
        for (auto const& l : w.letters()) {
          int const s = l.gen == gens_[0] ? 0 : l.gen == gens_[1] ? 1 : -1;
          if (s < 0) {
            unknown_generator(l.gen);
          }
          int const n = orders_[static_cast<std::size_t>(s)];
          for (int r = 0; r < std::abs(l.exp); ++r) {
            int e = 1;
            if (l.exp < 0) {  // g^-1 = g^(n-1) z^-1
              e = n - 1;
              --k;
            }
            if (!syllables.empty() && syllables.back().first == s) {
              int& top = syllables.back().second;
              top += e;
              if (top >= n) {
                top -= n;
                ++k;
              }
              if (top == 0) {
                syllables.pop_back();
              }
            } else {
              syllables.emplace_back(s, e);
            }
          }
        }
        Word out = power(Word::letter(alphabet_, gens_[0]), k * orders_[0]);
        for (auto const& [s, e] : syllables) {
          out = out * power(Word::letter(alphabet_, gens_[static_cast<std::size_t>(s)]), e);
        }
        return out;
      }

     private:
      Alphabet alphabet_;
      std::array<int, 2> gens_;
      std::array<int, 2> orders_;
    };

    class FiniteOracle final : public GroupOracle {
     public:
      FiniteOracle(Alphabet alphabet, FiniteGroup const& group, std::vector<int> const& images,
                   ObjectId base)
          : alphabet_(std::move(alphabet)), base_(base) {
        // restrict to the subgroup generated by the images and record the
        // shortlex-first word for each element
        std::vector<int> old_index;
        std::map<int, int> renumber;
        std::vector<std::vector<Letter>> words;
        old_index.push_back(0);
        renumber[0] = 0;
        words.emplace_back();
        for (std::size_t i = 0; i < old_index.size(); ++i) {
          for (std::size_t g = 0; g < images.size(); ++g) {
            if (images[g] < 0) {
              continue;
            }
            for (int e : {1, -1}) {
              int const h = e > 0 ? images[g] : group.inverse(images[g]);
              int const y = group.mul(old_index[i], h);
              if (!renumber.contains(y)) {
                renumber[y] = static_cast<int>(old_index.size());
                old_index.push_back(y);
                auto w = words[i];
                w.push_back({static_cast<int>(g), e});
                words.push_back(std::move(w));
              }
            }
          }
        }
        std::size_t const n = old_index.size();
        std::vector<int> table(n * n);
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            table[a * n + b] = renumber.at(group.mul(old_index[a], old_index[b]));
          }
        }
        group_ = FiniteGroup(n, std::move(table));
        images_.assign(images.size(), -1);
        for (std::size_t g = 0; g < images.size(); ++g) {
          if (images[g] >= 0) {
            images_[g] = renumber.at(images[g]);
          }
        }
        for (auto const& w : words) {
          reps_.push_back(reduce(base_, w, alphabet_));
        }
      }

      std::string_view kind() const noexcept override {
        return "finite-table";
      }
      bool is_finite() const noexcept override {
        return true;
      }
      std::size_t order() const override {
        return group_.order();
      }
      std::vector<Word> const& elements() const override {
        return reps_;
      }
      std::size_t index_of(Word const& w) const override {
        int x = 0;
        for (auto const& l : w.letters()) {
          if (static_cast<std::size_t>(l.gen) >= images_.size()
              || images_[static_cast<std::size_t>(l.gen)] < 0) {
            unknown_generator(l.gen);
          }
          int const h = images_[static_cast<std::size_t>(l.gen)];
          x = group_.mul(x, l.exp > 0 ? h : group_.inverse(h));
        }
        return static_cast<std::size_t>(x);
      }
      Word normalize(Word const& w) const override {
        return reps_[index_of(w)];
      }

      FiniteGroup const& group() const noexcept {
        return group_;
      }
      std::vector<int> const& images() const noexcept {
        return images_;
      }

     private:
      Alphabet alphabet_;
      ObjectId base_;
      FiniteGroup group_;
      std::vector<int> images_;
      std::vector<Word> reps_;
    };

    class ProductOracle final : public GroupOracle {
     public:
      ProductOracle(OraclePtr left, OraclePtr right, std::vector<bool> in_left)
          : left_(std::move(left)), right_(std::move(right)), in_left_(std::move(in_left)) {
        if (is_finite()) {
          for (auto const& a : left_->elements()) {
            for (auto const& b : right_->elements()) {
              elements_.push_back(a * b);
            }
          }
        }
      }

      std::string_view kind() const noexcept override {
        return "direct-product";
      }
      bool is_finite() const noexcept override {
        return left_->is_finite() && right_->is_finite();
      }
      bool exact() const noexcept override {
        return left_->exact() && right_->exact();
      }
      std::size_t order() const override {
        if (!is_finite()) {
          not_finite();
        }
        return left_->order() * right_->order();
      }
      std::vector<Word> const& elements() const override {
        if (!is_finite()) {
          not_finite();
        }
        return elements_;
      }
      std::size_t index_of(Word const& w) const override {
        auto [a, b] = split(w);
        return left_->index_of(a) * right_->order() + right_->index_of(b);
      }
      Word normalize(Word const& w) const override {
        auto [a, b] = split(w);
        return left_->normalize(a) * right_->normalize(b);
      }

     private:
      std::pair<Word, Word> split(Word const& w) const {
        Word a = Word::identity(w.source()), b = Word::identity(w.source());
        Alphabet loops(in_left_.size(), Arrow{w.source(), w.source()});
        for (auto const& l : w.letters()) {
          if (static_cast<std::size_t>(l.gen) >= in_left_.size()) {
            unknown_generator(l.gen);
          }
          (in_left_[static_cast<std::size_t>(l.gen)] ? a : b) *= Word::letter(loops, l.gen, l.exp);
        }
        return {a, b};
      }

      OraclePtr left_, right_;
      std::vector<bool> in_left_;
      std::vector<Word> elements_;
    };

    class SemidirectOracle final : public GroupOracle {
     public:
      SemidirectOracle(Alphabet alphabet, OraclePtr base, int stable, std::vector<std::size_t> twist)
          : alphabet_(std::move(alphabet)), base_(std::move(base)), stable_(stable) {
        if (!base_->is_finite()) {
          throw Error(ErrorKind::InvalidArgument, "group_oracle",
                      "semidirect oracle needs a finite base");
        }
        auto const view = finite_view(*base_);
        if (!view) {
          throw Error(ErrorKind::InvalidArgument, "group_oracle", "base is not a table oracle");
        }
        group_ = view->group;
        // powers of the twist until it returns to the identity map
        std::vector<std::size_t> id(twist.size());
        for (std::size_t i = 0; i < id.size(); ++i) {
          id[i] = i;
        }
        powers_.push_back(id);
        while (true) {
          std::vector<std::size_t> next(twist.size());
          for (std::size_t i = 0; i < twist.size(); ++i) {
            next[i] = twist[powers_.back()[i]];
          }
          if (next == id) {
            break;
          }
          powers_.push_back(std::move(next));
          if (powers_.size() > twist.size() * twist.size() + 2) {
            throw Error(ErrorKind::InvalidArgument, "group_oracle", "twist is not a permutation");
          }
        }
      }

      std::string_view kind() const noexcept override {
        return "semidirect-by-Z";
      }
      Word normalize(Word const& w) const override {
        std::size_t g = 0;
        long i = 0;
        long const m = static_cast<long>(powers_.size());
        for (auto const& l : w.letters()) {
          if (l.gen == stable_) {
            i += l.exp;
            continue;
          }
          Word const single = Word::letter(alphabet_, l.gen, l.exp);
          std::size_t const h = base_->index_of(single);
          // z^i h z^-i = twist^{-i}(h)
          long k = ((-i) % m + m) % m;
          std::size_t const moved = powers_[static_cast<std::size_t>(k)][h];
          g = static_cast<std::size_t>(
              group_->mul(static_cast<int>(g), static_cast<int>(moved)));
        }
        return base_->elements()[g] * power(Word::letter(alphabet_, stable_), i);
      }

     private:
      Alphabet alphabet_;
      OraclePtr base_;
      FiniteGroup const* group_ = nullptr;
      int stable_;
      std::vector<std::vector<std::size_t>> powers_;
    };

    class GroupoidOracle final : public GroupOracle {
     public:
      GroupoidOracle(Alphabet alphabet, OraclePtr vertex, std::vector<Word> tree,
                     std::vector<bool> tree_gens)
          : alphabet_(std::move(alphabet)),
            vertex_(std::move(vertex)),
            tree_(std::move(tree)),
            tree_gens_(std::move(tree_gens)) {}

      std::string_view kind() const noexcept override {
        return "groupoid";
      }
      bool exact() const noexcept override {
        return vertex_->exact();
      }
      Word normalize(Word const& u) const override {
        Word const v = vertex_->normalize(collapse(u, tree_gens_, 0));
        Word loop = Word::identity(base());
        for (auto const& l : v.letters()) {
          auto const& a = alphabet_.at(static_cast<std::size_t>(l.gen));
          Word step = tree_.at(static_cast<std::size_t>(a.source))
                      * Word::letter(alphabet_, l.gen)
                      * tree_.at(static_cast<std::size_t>(a.target)).inverse();
          loop *= (l.exp > 0 ? step : step.inverse());
        }
        return tree_.at(static_cast<std::size_t>(u.source())).inverse() * loop
               * tree_.at(static_cast<std::size_t>(u.target()));
      }

     private:
      ObjectId base() const {
        return tree_.front().source();
      }
      Alphabet alphabet_;
      OraclePtr vertex_;
      std::vector<Word> tree_;
      std::vector<bool> tree_gens_;
    };

    class RelabelledOracle final : public GroupOracle {
     public:
      RelabelledOracle(OraclePtr inner, std::size_t inner_gens, std::vector<int> map, ObjectId base)
          : inner_(std::move(inner)),
            inner_alphabet_(inner_gens, Arrow{0, 0}),
            outer_alphabet_(map.size(), Arrow{base, base}),
            map_(std::move(map)),
            back_(inner_gens, -1),
            base_(base) {
        for (std::size_t g = 0; g < map_.size(); ++g) {
          int const h = map_[g];
          if (h >= 0 && static_cast<std::size_t>(h) < back_.size() && back_[static_cast<std::size_t>(h)] < 0) {
            back_[static_cast<std::size_t>(h)] = static_cast<int>(g);
          }
        }
        if (inner_->is_finite()) {
          for (auto const& e : inner_->elements()) {
            elements_.push_back(outward(e));
          }
        }
      }

      std::string_view kind() const noexcept override {
        return inner_->kind();
      }
      bool is_finite() const noexcept override {
        return inner_->is_finite();
      }
      bool exact() const noexcept override {
        return inner_->exact();
      }
      std::size_t order() const override {
        return inner_->order();
      }
      std::vector<Word> const& elements() const override {
        if (!is_finite()) {
          not_finite();
        }
        return elements_;
      }
      std::size_t index_of(Word const& w) const override {
        return inner_->index_of(inward(w));
      }
      Word normalize(Word const& w) const override {
        return outward(inner_->normalize(inward(w)));
      }

     private:
      Word inward(Word const& w) const {
        std::vector<Letter> letters;
        for (auto const& l : w.letters()) {
          if (static_cast<std::size_t>(l.gen) >= map_.size() || map_[static_cast<std::size_t>(l.gen)] < 0) {
            unknown_generator(l.gen);
          }
          letters.push_back({map_[static_cast<std::size_t>(l.gen)], l.exp});
        }
        return reduce(0, letters, inner_alphabet_);
      }
      Word outward(Word const& w) const {
        std::vector<Letter> letters;
        for (auto const& l : w.letters()) {
          letters.push_back({back_.at(static_cast<std::size_t>(l.gen)), l.exp});
        }
        return reduce(base_, letters, outer_alphabet_);
      }

      OraclePtr inner_;
      Alphabet inner_alphabet_, outer_alphabet_;
      std::vector<int> map_, back_;
      ObjectId base_;
      std::vector<Word> elements_;
    };
  }  // namespace

  std::size_t GroupOracle::order() const {
    not_finite();
  }
  std::vector<Word> const& GroupOracle::elements() const {
    not_finite();
  }
  std::size_t GroupOracle::index_of(Word const&) const {
    not_finite();
  }

  OraclePtr make_free_oracle(Alphabet alphabet, bool exact) {
    return std::make_shared<FreeOracle>(std::move(alphabet), exact);
  }

  OraclePtr make_infinite_cyclic_oracle(Alphabet alphabet, int gen) {
    return std::make_shared<CyclicOracle>(std::move(alphabet), gen);
  }

  OraclePtr make_finite_oracle(Alphabet alphabet, FiniteGroup group,
                               std::vector<int> generator_images, ObjectId base) {
    return std::make_shared<FiniteOracle>(std::move(alphabet), group, generator_images, base);
  }

  OraclePtr make_torus_knot_oracle(Alphabet alphabet, int x, int y, int p, int q) {
    if (p < 2 || q < 2 || x == y) {
      throw Error(ErrorKind::InvalidArgument, "group_oracle", "torus knot groups need p, q >= 2");
    }
    return std::make_shared<TorusKnotOracle>(std::move(alphabet), x, y, p, q);
  }

  OraclePtr detect_torus_knot(Presentation const& p) {
    if (p.objects().size() != 1 || p.generators().size() != 2 || p.relators().size() != 1) {
      return nullptr;
    }
    auto const letters = p.relators()[0].word.letters();
    // syllables of the cyclic word
    std::vector<Letter> syl;
    for (auto const& l : letters) {
      if (!syl.empty() && syl.back().gen == l.gen) {
        syl.back().exp += l.exp;
      } else {
        syl.push_back(l);
      }
    }
    if (syl.size() == 3 && syl.front().gen == syl.back().gen) {
      syl.front().exp += syl.back().exp;
      syl.pop_back();
    }
    if (syl.size() != 2 || (syl[0].exp > 0) == (syl[1].exp > 0)) {
      return nullptr;
    }
    int const p0 = std::abs(syl[0].exp);
    int const q0 = std::abs(syl[1].exp);
    if (p0 < 2 || q0 < 2) {
      return nullptr;
    }
    return make_torus_knot_oracle(p.alphabet(), syl[0].gen, syl[1].gen, p0, q0);
  }

  OraclePtr make_product_oracle(OraclePtr left, OraclePtr right, std::vector<bool> in_left) {
    return std::make_shared<ProductOracle>(std::move(left), std::move(right), std::move(in_left));
  }

  OraclePtr make_semidirect_oracle(Alphabet alphabet, OraclePtr base, int stable_gen,
                                   std::vector<std::size_t> twist) {
    return std::make_shared<SemidirectOracle>(std::move(alphabet), std::move(base), stable_gen,
                                              std::move(twist));
  }

  OraclePtr make_groupoid_oracle(Alphabet alphabet, OraclePtr vertex, std::vector<Word> tree,
                                 std::vector<bool> tree_gens) {
    return std::make_shared<GroupoidOracle>(std::move(alphabet), std::move(vertex),
                                            std::move(tree), std::move(tree_gens));
  }

  OraclePtr make_relabelled_oracle(OraclePtr inner, std::size_t inner_gens, std::vector<int> map,
                                   ObjectId base) {
    return std::make_shared<RelabelledOracle>(std::move(inner), inner_gens, std::move(map), base);
  }

  OraclePtr build_finite_oracle(Presentation const& p, std::size_t bound) {
    if (bound < 1) {
      throw Error(ErrorKind::InvalidArgument, "group_oracle", "bound must be positive");
    }
    if (p.objects().size() != 1) {
      throw Error(ErrorKind::InvalidArgument, "group_oracle",
                  "finite enumeration needs a one-object presentation");
    }
    std::vector<std::vector<Letter>> rels;
    for (auto const& r : p.relators()) {
      rels.emplace_back(r.word.letters().begin(), r.word.letters().end());
    }
    std::size_t const limit = std::max<std::size_t>(20000, 200 * bound);
    auto const ct = enumerate_cosets(static_cast<int>(p.generators().size()), rels, limit);
    if (ct.cosets > bound) {
      throw Error(ErrorKind::NotFiniteWithinBound, "group_oracle",
                  "group has order " + std::to_string(ct.cosets) + " > bound "
                      + std::to_string(bound));
    }
    auto eg = group_from_cosets(ct);
    return make_finite_oracle(p.alphabet(), std::move(eg.group), std::move(eg.generator_images),
                              0);
  }

  std::optional<FiniteView> finite_view(GroupOracle const& o) {
    if (auto const* f = dynamic_cast<FiniteOracle const*>(&o)) {
      return FiniteView{&f->group(), &f->images()};
    }
    return std::nullopt;
  }

}  // namespace xres
