// SPDX-License-Identifier: Apache-2.0

#include "xres/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <queue>

#include "xres/error.hpp"

namespace xres {

  FiniteGroup::FiniteGroup(std::size_t order, std::vector<int> table)
      : order_(order), table_(std::move(table)), inverse_(order, -1) {
    if (table_.size() != order_ * order_) {
      throw Error(ErrorKind::InvalidArgument, "group_oracle", "table size mismatch");
    }
    for (std::size_t a = 0; a < order_; ++a) {
      for (std::size_t b = 0; b < order_; ++b) {
        if (mul(static_cast<int>(a), static_cast<int>(b)) == 0) {
          inverse_[a] = static_cast<int>(b);
          break;
        }
      }
    }
  }

  FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    std::vector<int> t(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        t[a * n + b] = static_cast<int>((a + b) % n);
      }
    }
    return {n, std::move(t)};
  }

  FiniteGroup FiniteGroup::dihedral(std::size_t n) {
    // <r, s | r^n, s^2, (s r)^2>
    std::vector<std::vector<Letter>> rels;
    rels.emplace_back(n, Letter{0, 1});
    rels.push_back({{1, 1}, {1, 1}});
    rels.push_back({{1, 1}, {0, 1}, {1, 1}, {0, 1}});
    return group_from_cosets(enumerate_cosets(2, rels, 100000)).group;
  }

  FiniteGroup FiniteGroup::symmetric(std::size_t n) {
    if (n <= 1) {
      return {};
    }
    std::vector<int> transposition(n), cycle(n);
    std::iota(transposition.begin(), transposition.end(), 0);
    std::swap(transposition[0], transposition[1]);
    for (std::size_t i = 0; i < n; ++i) {
      cycle[i] = static_cast<int>((i + 1) % n);
    }
    return from_permutations({transposition, cycle});
  }

  FiniteGroup FiniteGroup::direct_product(FiniteGroup const& a, FiniteGroup const& b) {
    std::size_t const n = a.order() * b.order();
    std::vector<int> t(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        int const xa = static_cast<int>(x / b.order()), xb = static_cast<int>(x % b.order());
        int const ya = static_cast<int>(y / b.order()), yb = static_cast<int>(y % b.order());
        t[x * n + y] = a.mul(xa, ya) * static_cast<int>(b.order()) + b.mul(xb, yb);
      }
    }
    return {n, std::move(t)};
  }

  FiniteGroup FiniteGroup::from_permutations(std::vector<std::vector<int>> const& gens) {
    std::size_t const degree = gens.empty() ? 0 : gens.front().size();
    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> elements{id};
    std::map<std::vector<int>, int> index{{id, 0}};
    auto compose = [](std::vector<int> const& p, std::vector<int> const& q) {
      // first p, then q
      std::vector<int> r(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) {
        r[i] = q[static_cast<std::size_t>(p[i])];
      }
      return r;
    };
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (auto const& g : gens) {
        auto next = compose(elements[i], g);
        if (!index.contains(next)) {
          index.emplace(next, static_cast<int>(elements.size()));
          elements.push_back(std::move(next));
        }
      }
    }
    std::size_t const n = elements.size();
    std::vector<int> t(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        t[a * n + b] = index.at(compose(elements[a], elements[b]));
      }
    }
    return {n, std::move(t)};
  }

  int FiniteGroup::element_order(int a) const {
    int k = 1;
    for (int x = a; x != 0; x = mul(x, a)) {
      ++k;
    }
    return k;
  }

  bool FiniteGroup::is_abelian() const {
    for (std::size_t a = 0; a < order_; ++a) {
      for (std::size_t b = a + 1; b < order_; ++b) {
        if (mul(static_cast<int>(a), static_cast<int>(b))
            != mul(static_cast<int>(b), static_cast<int>(a))) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<int> FiniteGroup::generated(std::span<int const> gens) const {
    std::vector<bool> seen(order_, false);
    std::vector<int> out{0};
    seen[0] = true;
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (int g : gens) {
        int const y = mul(out[i], g);
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          out.push_back(y);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<int> FiniteGroup::generating_set() const {
    std::vector<int> gens;
    std::vector<int> sub{0};
    // prefer elements of large order: fewer generators, smaller search
    std::vector<int> candidates(order_);
    std::iota(candidates.begin(), candidates.end(), 0);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](int x, int y) { return element_order(x) > element_order(y); });
    for (int x : candidates) {
      if (sub.size() == order_) {
        break;
      }
      if (!std::binary_search(sub.begin(), sub.end(), x)) {
        gens.push_back(x);
        sub = generated(gens);
      }
    }
    return gens;
  }

  // ---------------------------------------------------------------------------
  // Coset enumeration
  // ---------------------------------------------------------------------------

  namespace {
    class Enumerator {
     public:
      Enumerator(int gens, std::size_t limit)
          : cols_(static_cast<std::size_t>(2 * gens)), limit_(limit) {
        new_coset();
      }

      int Col(Letter l) const {
        return 2 * l.gen + (l.exp > 0 ? 0 : 1);
      }
      static int inv(int col) {
        return col ^ 1;
      }
      int& at(int c, int col) {
        return table_[static_cast<std::size_t>(c) * cols_ + static_cast<std::size_t>(col)];
      }
      bool alive(int c) const {
        return parent_[static_cast<std::size_t>(c)] == c;
      }

      int new_coset() {
        if (live_ >= limit_) {
          throw Error(ErrorKind::NotFiniteWithinBound, "group_oracle",
                      "coset enumeration exceeded " + std::to_string(limit_) + " cosets");
        }
        int const c = static_cast<int>(parent_.size());
        parent_.push_back(c);
        table_.resize(table_.size() + cols_, -1);
        ++live_;
        return c;
      }

      void define(int c, int col) {
        int const n = new_coset();
        at(c, col) = n;
        at(n, inv(col)) = c;
      }

      int rep(int c) {
        int r = c;
        while (parent_[static_cast<std::size_t>(r)] != r) {
          r = parent_[static_cast<std::size_t>(r)];
        }
        while (parent_[static_cast<std::size_t>(c)] != r) {
          int const next = parent_[static_cast<std::size_t>(c)];
          parent_[static_cast<std::size_t>(c)] = r;
          c = next;
        }
        return r;
      }

      void merge(int k, int l, std::deque<int>& q) {
        k = rep(k);
        l = rep(l);
        if (k == l) {
          return;
        }
        if (k > l) {
          std::swap(k, l);
        }
        parent_[static_cast<std::size_t>(l)] = k;
        --live_;
        q.push_back(l);
      }

      void coincidence(int a, int b) {
        std::deque<int> q;
        merge(a, b, q);
        while (!q.empty()) {
          int const e = q.front();
          q.pop_front();
          for (int x = 0; x < static_cast<int>(cols_); ++x) {
            int const f = at(e, x);
            if (f < 0) {
              continue;
            }
            if (at(f, inv(x)) == e) {
              at(f, inv(x)) = -1;
            }
            int const e1 = rep(e), f1 = rep(f);
            if (at(e1, x) >= 0) {
              merge(f1, at(e1, x), q);
            } else if (at(f1, inv(x)) >= 0) {
              merge(e1, at(f1, inv(x)), q);
            } else {
              at(e1, x) = f1;
              at(f1, inv(x)) = e1;
            }
          }
        }
      }

      void scan_and_fill(int c, std::vector<int> const& rel) {
        if (rel.empty()) {
          return;
        }
        int f = c, b = c;
        long i = 0, j = static_cast<long>(rel.size()) - 1;
        while (true) {
          while (i <= j && at(f, rel[static_cast<std::size_t>(i)]) >= 0) {
            f = at(f, rel[static_cast<std::size_t>(i)]);
            ++i;
          }
          if (i > j) {
            if (f != b) {
              coincidence(f, b);
            }
            return;
          }
          while (j >= i && at(b, inv(rel[static_cast<std::size_t>(j)])) >= 0) {
            b = at(b, inv(rel[static_cast<std::size_t>(j)]));
            --j;
          }
          if (j < i) {
            coincidence(f, b);
            return;
          }
          if (i == j) {
            at(f, rel[static_cast<std::size_t>(i)]) = b;
            at(b, inv(rel[static_cast<std::size_t>(i)])) = f;
            return;
          }
          define(f, rel[static_cast<std::size_t>(i)]);
        }
      }

      CosetTable run(std::vector<std::vector<Letter>> const& relators, int gens) {
        std::vector<std::vector<int>> rels;
        for (auto const& r : relators) {
          std::vector<int> cols;
          for (auto const& l : r) {
            cols.push_back(Col(l));
          }
          rels.push_back(std::move(cols));
        }
        for (int c = 0; c < static_cast<int>(parent_.size()); ++c) {
          for (auto const& r : rels) {
            if (!alive(c)) {
              break;
            }
            scan_and_fill(c, r);
          }
          for (int x = 0; x < static_cast<int>(cols_) && alive(c); ++x) {
            if (at(c, x) < 0) {
              define(c, x);
            }
          }
        }
        // compact
        std::vector<int> renumber(parent_.size(), -1);
        int n = 0;
        for (std::size_t c = 0; c < parent_.size(); ++c) {
          if (alive(static_cast<int>(c))) {
            renumber[c] = n++;
          }
        }
        CosetTable ct;
        ct.cosets = static_cast<std::size_t>(n);
        ct.gens = gens;
        ct.table.resize(ct.cosets * cols_);
        for (std::size_t c = 0; c < parent_.size(); ++c) {
          if (renumber[c] < 0) {
            continue;
          }
          for (std::size_t x = 0; x < cols_; ++x) {
            int const t = rep(at(static_cast<int>(c), static_cast<int>(x)));
            ct.table[static_cast<std::size_t>(renumber[c]) * cols_ + x]
                = renumber[static_cast<std::size_t>(t)];
          }
        }
        return ct;
      }

     private:
      std::size_t cols_;
      std::size_t limit_;
      std::size_t live_ = 0;
      std::vector<int> table_;
      std::vector<int> parent_;
    };
  }  // namespace

  CosetTable enumerate_cosets(int gens, std::vector<std::vector<Letter>> const& relators,
                              std::size_t limit) {
    if (gens == 0) {
      CosetTable ct;
      ct.cosets = 1;
      return ct;
    }
    Enumerator e(gens, limit);
    return e.run(relators, gens);
  }

  EnumeratedGroup group_from_cosets(CosetTable const& ct) {
    std::size_t const n = ct.cosets;
    // shortest words reaching each coset from the identity coset
    std::vector<std::vector<Letter>> reps(n);
    std::vector<bool> seen(n, false);
    seen[0] = true;
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
      int const c = q.front();
      q.pop();
      for (int g = 0; g < ct.gens; ++g) {
        for (int e : {1, -1}) {
          int const d = ct.act(c, {g, e});
          if (!seen[static_cast<std::size_t>(d)]) {
            seen[static_cast<std::size_t>(d)] = true;
            reps[static_cast<std::size_t>(d)] = reps[static_cast<std::size_t>(c)];
            reps[static_cast<std::size_t>(d)].push_back({g, e});
            q.push(d);
          }
        }
      }
    }
    std::vector<int> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        int c = static_cast<int>(a);
        for (auto const& l : reps[b]) {
          c = ct.act(c, l);
        }
        table[a * n + b] = c;
      }
    }
    EnumeratedGroup out{FiniteGroup(n, std::move(table)), {}};
    for (int g = 0; g < ct.gens; ++g) {
      out.generator_images.push_back(ct.act(0, {g, 1}));
    }
    return out;
  }

  std::optional<std::vector<int>> find_isomorphism(FiniteGroup const& a, FiniteGroup const& b) {
    if (a.order() != b.order() || a.is_abelian() != b.is_abelian()) {
      return std::nullopt;
    }
    std::size_t const n = a.order();
    auto const gens = a.generating_set();
    std::vector<int> images(gens.size(), 0);

    auto extend = [&]() -> std::optional<std::vector<int>> {
      std::vector<int> map(n, -1);
      std::vector<bool> used(n, false);
      map[0] = 0;
      used[0] = true;
      std::vector<int> order{0};
      for (std::size_t i = 0; i < order.size(); ++i) {
        int const x = order[i];
        for (std::size_t k = 0; k < gens.size(); ++k) {
          int const y = a.mul(x, gens[k]);
          int const fy = b.mul(map[static_cast<std::size_t>(x)], images[k]);
          if (map[static_cast<std::size_t>(y)] < 0) {
            if (used[static_cast<std::size_t>(fy)]) {
              return std::nullopt;
            }
            map[static_cast<std::size_t>(y)] = fy;
            used[static_cast<std::size_t>(fy)] = true;
            order.push_back(y);
          } else if (map[static_cast<std::size_t>(y)] != fy) {
            return std::nullopt;
          }
        }
      }
      return map;
    };

    std::function<std::optional<std::vector<int>>(std::size_t)> search
        = [&](std::size_t k) -> std::optional<std::vector<int>> {
      if (k == gens.size()) {
        return extend();
      }
      int const want = a.element_order(gens[k]);
      for (std::size_t y = 0; y < n; ++y) {
        if (b.element_order(static_cast<int>(y)) != want) {
          continue;
        }
        images[k] = static_cast<int>(y);
        if (auto found = search(k + 1)) {
          return found;
        }
      }
      return std::nullopt;
    };
    return search(0);
  }

}  // namespace xres
