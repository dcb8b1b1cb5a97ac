// SPDX-License-Identifier: Apache-2.0

#include "xres/cocycle.hpp"

#include <queue>
#include <sstream>

#include "xres/error.hpp"

namespace xres {

  namespace {
    constexpr char const* kModule = "cocycle";

    FiniteGroup table_of(GroupOracle const& o) {
      auto const& el = o.elements();
      std::size_t const n = el.size();
      std::vector<int> t(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          t[a * n + b] = static_cast<int>(o.index_of(el[a] * el[b]));
        }
      }
      return {n, std::move(t)};
    }

    //! The endomorphism sending gens[i] to images[i], as an element map,
    //! if it is a well-defined bijection.
    std::optional<std::vector<int>> extend(FiniteGroup const& k, std::vector<int> const& gens,
                                           std::vector<int> const& images) {
      std::size_t const n = k.order();
      std::vector<int> map(n, -1);
      map[0] = 0;
      std::vector<int> order{0};
      for (std::size_t i = 0; i < order.size(); ++i) {
        int const x = order[i];
        for (std::size_t g = 0; g < gens.size(); ++g) {
          int const y = k.mul(x, gens[g]);
          int const fy = k.mul(map[static_cast<std::size_t>(x)], images[g]);
          int& slot = map[static_cast<std::size_t>(y)];
          if (slot < 0) {
            slot = fy;
            order.push_back(y);
          } else if (slot != fy) {
            return std::nullopt;
          }
        }
      }
      std::vector<bool> hit(n, false);
      for (int v : map) {
        if (v < 0 || hit[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
        hit[static_cast<std::size_t>(v)] = true;
      }
      return map;
    }

    std::string kname(std::size_t i) {
      return "k" + std::to_string(i + 1);
    }

    //! Shortest words over the generators reaching each element of K.
    std::vector<std::vector<std::pair<int, int>>> spanning_words(FiniteGroup const& k,
                                                                 std::vector<int> const& gens) {
      std::vector<std::vector<std::pair<int, int>>> words(k.order());
      std::vector<bool> seen(k.order(), false);
      seen[0] = true;
      std::queue<int> q;
      q.push(0);
      while (!q.empty()) {
        int const x = q.front();
        q.pop();
        for (std::size_t g = 0; g < gens.size(); ++g) {
          int const y = k.mul(x, gens[g]);
          if (!seen[static_cast<std::size_t>(y)]) {
            seen[static_cast<std::size_t>(y)] = true;
            words[static_cast<std::size_t>(y)] = words[static_cast<std::size_t>(x)];
            words[static_cast<std::size_t>(y)].emplace_back(static_cast<int>(g), 1);
            q.push(y);
          }
        }
      }
      return words;
    }
  }  // namespace

  std::optional<int> InnerCrossedModule::find_automorphism(std::vector<int> const& images) const {
    for (std::size_t a = 0; a < automorphisms.size(); ++a) {
      bool match = true;
      for (std::size_t g = 0; g < generators.size() && match; ++g) {
        match = automorphisms[a][static_cast<std::size_t>(generators[g])] == images[g];
      }
      if (match) {
        return static_cast<int>(a);
      }
    }
    return std::nullopt;
  }

  InnerCrossedModule automorphism_oracle(OraclePtr const& o) {
    if (!o || !o->is_finite()) {
      throw Error(ErrorKind::NotFinite, kModule, "Aut(K) is enumerated for finite K only");
    }
    if (o->order() > 64) {
      throw Error(ErrorKind::TooLarge, kModule,
                  "|K| = " + std::to_string(o->order()) + " is beyond the brute-force limit 64");
    }
    InnerCrossedModule m;
    m.kernel = o;
    m.k = table_of(*o);
    FiniteGroup const& k = m.k;
    std::size_t const n = k.order();
    m.generators = k.generating_set();
    std::size_t const s = m.generators.size();

    // identity first, then every other assignment of generator images
    m.automorphisms.emplace_back(n);
    for (std::size_t x = 0; x < n; ++x) {
      m.automorphisms[0][x] = static_cast<int>(x);
    }
    std::vector<int> images(s, 0);
    while (true) {
      if (auto map = extend(k, m.generators, images); map && *map != m.automorphisms[0]) {
        m.automorphisms.push_back(std::move(*map));
      }
      std::size_t i = 0;
      while (i < s && ++images[i] == static_cast<int>(n)) {
        images[i++] = 0;
      }
      if (i == s) {
        break;
      }
    }

    std::size_t const a = m.automorphisms.size();
    std::vector<int> table(a * a);
    auto index = [&](std::vector<int> const& perm) {
      for (std::size_t i = 0; i < a; ++i) {
        if (m.automorphisms[i] == perm) {
          return static_cast<int>(i);
        }
      }
      throw Error(ErrorKind::InvalidArgument, kModule, "automorphisms are not closed");
    };
    for (std::size_t x = 0; x < a; ++x) {
      for (std::size_t y = 0; y < a; ++y) {
        std::vector<int> perm(n);
        for (std::size_t e = 0; e < n; ++e) {
          perm[e] = m.automorphisms[y][static_cast<std::size_t>(m.automorphisms[x][e])];
        }
        table[x * a + y] = index(perm);
      }
    }
    m.aut = FiniteGroup(a, std::move(table));
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<int> perm(n);
      int const xi = k.inverse(static_cast<int>(x));
      for (std::size_t e = 0; e < n; ++e) {
        perm[e] = k.mul(k.mul(xi, static_cast<int>(e)), static_cast<int>(x));
      }
      m.boundary.push_back(index(perm));
    }
    return m;
  }

  int evaluate_k1(CocycleData const& c, InnerCrossedModule const& m, Word const& w) {
    int acc = 0;
    for (auto const& l : w.letters()) {
      int const a = c.k1.at(static_cast<std::size_t>(l.gen));
      acc = m.aut.mul(acc, l.exp > 0 ? a : m.aut.inverse(a));
    }
    return acc;
  }

  int evaluate_k2(CocycleData const& c, InnerCrossedModule const& m, PeifferSequence const& s) {
    int acc = 0;
    for (auto const& f : s.factors()) {
      int x = c.k2.at(static_cast<std::size_t>(f.gen));
      if (f.sign < 0) {
        x = m.k.inverse(x);
      }
      acc = m.k.mul(acc, m.act(x, evaluate_k1(c, m, f.conj)));
    }
    return acc;
  }

  CocycleReport verify_cocycle(CocycleData const& c, CrossedComplex const& f,
                               InnerCrossedModule const& m) {
    CocycleReport report;
    auto fail = [&](std::string witness, std::string detail) {
      report.ok = false;
      report.witness = std::move(witness);
      report.detail = std::move(detail);
      return report;
    };
    if (c.k1.size() != f.count(1) || c.k2.size() != f.count(2)) {
      return fail("sizes", "k1 needs " + std::to_string(f.count(1)) + " values and k2 "
                               + std::to_string(f.count(2)));
    }
    for (int a : c.k1) {
      if (a < 0 || static_cast<std::size_t>(a) >= m.aut.order()) {
        return fail("dim 1", "k1 value out of range");
      }
    }
    for (int x : c.k2) {
      if (x < 0 || static_cast<std::size_t>(x) >= m.k.order()) {
        return fail("dim 2", "k2 value out of range");
      }
    }
    for (std::size_t r = 0; r < f.count(2); ++r) {
      auto const& cell = f.generator(2, static_cast<int>(r));
      int const lhs = m.boundary[static_cast<std::size_t>(c.k2[r])];
      int const rhs = evaluate_k1(c, m, cell.boundary.word());
      if (lhs != rhs) {
        return fail("dim 2: " + cell.name, "d k2 = aut " + std::to_string(lhs)
                                               + " but k1 phi_2 = aut " + std::to_string(rhs));
      }
    }
    if (f.top() >= 3) {
      for (std::size_t g = 0; g < f.count(3); ++g) {
        auto const& cell = f.generator(3, static_cast<int>(g));
        int const v = evaluate_k2(c, m, cell.boundary.peiffer());
        if (v != 0) {
          return fail("dim 3: " + cell.name,
                      "k2 phi_3 = element " + std::to_string(v) + " of K, not 1");
        }
      }
    }
    return report;
  }

  std::optional<std::string> identify_group(FiniteGroup const& g) {
    std::size_t const n = g.order();
    if (n == 0 || n > 500) {
      return std::nullopt;
    }
    if (find_isomorphism(g, FiniteGroup::cyclic(n))) {
      return "C" + std::to_string(n);
    }
    if (n == 4 && find_isomorphism(g, FiniteGroup::direct_product(FiniteGroup::cyclic(2),
                                                                  FiniteGroup::cyclic(2)))) {
      return "C2 x C2";
    }
    if (n == 6 && find_isomorphism(g, FiniteGroup::symmetric(3))) {
      return "S3";
    }
    if (n == 24 && find_isomorphism(g, FiniteGroup::symmetric(4))) {
      return "S4";
    }
    if (n % 2 == 0 && n >= 8 && find_isomorphism(g, FiniteGroup::dihedral(n / 2))) {
      return "D" + std::to_string(n / 2);
    }
    return std::nullopt;
  }

  Extension build_extension(CocycleData const& c, CrossedComplex const& f,
                            InnerCrossedModule const& m) {
    auto const report = verify_cocycle(c, f, m);
    if (!report.ok) {
      throw Error(ErrorKind::UnverifiedCocycle, kModule,
                  "fails at " + report.witness + ": " + report.detail);
    }
    if (f.objects().size() != 1) {
      throw Error(ErrorKind::InvalidArgument, kModule, "extensions need a one-object resolution");
    }
    Extension e;
    Presentation& p = e.presentation;
    std::size_t const nx = f.count(1);
    for (auto const& a : f.arrows()) {
      p.add_generator(a.name);
    }
    auto const& gens = m.generators;
    for (std::size_t s = 0; s < gens.size(); ++s) {
      p.add_generator(kname(s));
    }
    Alphabet const alphabet = p.alphabet();
    auto const words = spanning_words(m.k, gens);
    auto kword = [&](int x) {
      std::vector<Letter> letters;
      for (auto const& [g, exp] : words[static_cast<std::size_t>(x)]) {
        letters.push_back({static_cast<int>(nx) + g, exp});
      }
      return reduce(0, letters, alphabet);
    };
    auto kletter = [&](std::size_t s) { return Word::letter(alphabet, static_cast<int>(nx + s)); };

    // K: w_x k_s = w_{x k_s}
    int rel = 0;
    auto add = [&](std::string const& prefix, Word w) {
      if (!w.empty()) {
        p.add_relator(prefix + std::to_string(++rel), std::move(w));
      }
    };
    for (std::size_t x = 0; x < m.k.order(); ++x) {
      for (std::size_t s = 0; s < gens.size(); ++s) {
        int const y = m.k.mul(static_cast<int>(x), gens[s]);
        add("K", kword(static_cast<int>(x)) * kletter(s) * kword(y).inverse());
      }
    }
    // action: x^-1 k_s x = k_s^{k1 x}
    for (std::size_t x = 0; x < nx; ++x) {
      Word const xl = Word::letter(alphabet, static_cast<int>(x));
      for (std::size_t s = 0; s < gens.size(); ++s) {
        int const image = m.act(gens[s], c.k1[x]);
        add("A", xl.inverse() * kletter(s) * xl * kword(image).inverse());
      }
    }
    // phi_2(r) = k2(r)
    for (std::size_t r = 0; r < f.count(2); ++r) {
      Word const w = f.generator(2, static_cast<int>(r)).boundary.word();
      std::vector<Letter> letters(w.letters().begin(), w.letters().end());
      add("R", reduce(0, letters, alphabet) * kword(c.k2[r]).inverse());
    }

    auto const& go = f.oracle();
    if (!go || !go->is_finite()) {
      return e;
    }
    std::vector<std::vector<Letter>> rels;
    for (auto const& r : p.relators()) {
      rels.emplace_back(r.word.letters().begin(), r.word.letters().end());
    }
    std::size_t const expected = m.k.order() * go->order();
    auto const ct = enumerate_cosets(static_cast<int>(alphabet.size()), rels,
                                     std::max<std::size_t>(20000, 200 * expected));
    auto eg = group_from_cosets(ct);
    FiniteGroup const& eT = eg.group;

    // the projection E -> G, built along a spanning tree and then checked
    std::vector<int> pi_gen(alphabet.size(), 0);
    for (std::size_t x = 0; x < nx; ++x) {
      pi_gen[x] = static_cast<int>(go->index_of(Word::letter(f.alphabet(), static_cast<int>(x))));
    }
    FiniteGroup const gT = table_of(*go);
    std::vector<int> proj(eT.order(), -1);
    proj[0] = 0;
    std::vector<int> order{0};
    bool hom = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
      int const y = order[i];
      for (std::size_t g = 0; g < alphabet.size(); ++g) {
        int const z = eT.mul(y, eg.generator_images[g]);
        int const pz = gT.mul(proj[static_cast<std::size_t>(y)], pi_gen[g]);
        int& slot = proj[static_cast<std::size_t>(z)];
        if (slot < 0) {
          slot = pz;
          order.push_back(z);
        } else if (slot != pz) {
          hom = false;
        }
      }
    }
    for (std::size_t a = 0; a < eT.order() && hom; ++a) {
      for (std::size_t b = 0; b < eT.order() && hom; ++b) {
        hom = proj[static_cast<std::size_t>(eT.mul(static_cast<int>(a), static_cast<int>(b)))]
              == gT.mul(proj[a], proj[b]);
      }
    }
    e.projection_is_homomorphism = hom;
    std::vector<int> kernel;
    for (std::size_t a = 0; a < eT.order(); ++a) {
      if (proj[a] == 0) {
        kernel.push_back(static_cast<int>(a));
      }
    }
    if (hom && kernel.size() == m.k.order()) {
      std::vector<int> pos(eT.order(), -1);
      for (std::size_t i = 0; i < kernel.size(); ++i) {
        pos[static_cast<std::size_t>(kernel[i])] = static_cast<int>(i);
      }
      std::vector<int> t(kernel.size() * kernel.size());
      bool closed = true;
      for (std::size_t i = 0; i < kernel.size(); ++i) {
        for (std::size_t j = 0; j < kernel.size(); ++j) {
          int const v = pos[static_cast<std::size_t>(eT.mul(kernel[i], kernel[j]))];
          closed = closed && v >= 0;
          t[i * kernel.size() + j] = std::max(v, 0);
        }
      }
      e.kernel_is_k = closed && find_isomorphism(FiniteGroup(kernel.size(), std::move(t)), m.k).has_value();
    }
    e.projection = std::move(proj);
    e.identified = identify_group(eT).value_or("");
    e.table = std::move(eg.group);
    return e;
  }

  std::string Extension::report() const {
    std::ostringstream os;
    if (table) {
      os << "|E| = " << table->order() << '\n';
      os << "type: " << (identified.empty() ? "unidentified" : identified) << '\n';
      os << "projection to G: " << (projection_is_homomorphism ? "homomorphism" : "NOT a homomorphism")
         << ", kernel " << (kernel_is_k ? "isomorphic to K" : "NOT isomorphic to K") << '\n';
    }
    os << "presentation: " << presentation.print() << '\n';
    return os.str();
  }

}  // namespace xres
