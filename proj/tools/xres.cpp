// SPDX-License-Identifier: Apache-2.0

// xres: build and check free crossed resolutions from the command line.
//
// Groups are given as presentation files (.gp), resolution dumps (.xc), or
// the shorthands Z and C<n>. Morphisms are maps "a -> a^-1, b -> b".

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xres/cocycle.hpp"
#include "xres/constructions.hpp"
#include "xres/dump.hpp"
#include "xres/error.hpp"
#include "xres/verify.hpp"

namespace {

  using namespace xres;

  constexpr std::size_t kOracleBound = 4096;

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(ErrorKind::Io, "cli", "cannot read '" + path + "'");
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  bool ends_with(std::string const& s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
  }

  int default_dim() {
    if (char const* env = std::getenv("XRES_MAXDIM")) {
      try {
        return std::stoi(env);
      } catch (std::exception const&) {
        throw Error(ErrorKind::InvalidArgument, "cli", "XRES_MAXDIM must be an integer");
      }
    }
    return 4;
  }

  void attach_oracle(CrossedComplex& c) {
    if (c.oracle() || c.objects().empty()) {
      return;
    }
    if (c.top() <= 2) {
      if (auto t = detect_torus_knot(c.presentation())) {
        c.set_oracle(std::move(t));
        return;
      }
    }
    try {
      c.set_oracle(fundamental_group_oracle(c, kOracleBound));
    } catch (Error const& e) {
      if (e.kind() != ErrorKind::NotFiniteWithinBound) {
        throw;
      }
      if (c.objects().size() == 1 && c.count(2) == 0) {
        c.set_oracle(make_free_oracle(c.alphabet()));
      }
    }
  }

  //! Z, C<n>, a presentation or a dump.
  CrossedComplex load_complex(std::string const& spec, int dim, std::string const& letter = "a") {
    if (spec == "Z") {
      CrossedComplex c;
      c.add_object("o");
      c.add_arrow(letter, 0, 0);
      c.set_top(2);
      c.set_oracle(make_infinite_cyclic_oracle(c.alphabet(), 0));
      return c;
    }
    if (spec.size() > 1 && spec[0] == 'C' && spec.find_first_not_of("0123456789", 1) == std::string::npos) {
      return cyclic_resolution(std::stoi(spec.substr(1)), dim);
    }
    std::string const text = read_file(spec);
    CrossedComplex c;
    if (ends_with(spec, ".xc")) {
      c = parse_complex(text);
    } else {
      auto const p = Presentation::parse(text);
      for (auto const& w : p.validate().warnings) {
        std::cerr << "warning: " << w << '\n';
      }
      c = from_presentation(p);
    }
    attach_oracle(c);
    return c;
  }

  Presentation load_presentation(std::string const& spec) {
    if (spec.size() > 1 && spec[0] == 'C' && spec.find_first_not_of("0123456789", 1) == std::string::npos) {
      return Presentation::parse("gp< k | k^" + spec.substr(1) + " >");
    }
    return Presentation::parse(read_file(spec));
  }

  std::vector<std::pair<std::string, std::string>> split_map(std::string const& text, char sep = ',') {
    std::vector<std::pair<std::string, std::string>> out;
    auto trim = [](std::string s) {
      auto const b = s.find_first_not_of(" \t\n");
      auto const e = s.find_last_not_of(" \t\n");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
      if (trim(item).empty()) {
        continue;
      }
      auto const arrow = item.find("->");
      if (arrow == std::string::npos) {
        throw Error(ErrorKind::InvalidArgument, "cli", "expected 'name -> value' in '" + item + "'");
      }
      out.emplace_back(trim(item.substr(0, arrow)), trim(item.substr(arrow + 2)));
    }
    return out;
  }

  //! Dimension-1 images of `source` in `target`; unnamed generators keep
  //! their names.
  std::vector<Word> parse_images(std::string const& text, CrossedComplex const& source,
                                 CrossedComplex const& target) {
    auto const p = target.presentation();
    std::vector<std::optional<Word>> images(source.count(1));
    for (auto const& [name, value] : split_map(text)) {
      auto const g = source.find(1, name);
      if (!g) {
        throw Error(ErrorKind::UnknownGenerator, "cli", "no generator '" + name + "' in the source");
      }
      images[static_cast<std::size_t>(*g)] = p.parse_word(value, target.objects().size() == 1
                                                                     ? std::optional<ObjectId>(0)
                                                                     : std::nullopt);
    }
    std::vector<Word> out;
    for (std::size_t g = 0; g < images.size(); ++g) {
      if (images[g]) {
        out.push_back(*images[g]);
        continue;
      }
      auto const& name = source.arrows()[g].name;
      auto const same = target.find(1, name);
      if (!same) {
        throw Error(ErrorKind::AmbiguousWithoutHints, "cli", "no image given for '" + name + "'");
      }
      out.push_back(Word::letter(target.alphabet(), *same));
    }
    return out;
  }

  std::shared_ptr<ComplexMorphism const> lift(ComplexPtr const& s, ComplexPtr const& t,
                                              std::string const& map, int dim) {
    return std::make_shared<ComplexMorphism const>(
        lift_morphism(s, t, parse_images(map, *s, *t), dim));
  }

  void emit(std::string const& text, std::string const& out) {
    if (out.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) {
      throw Error(ErrorKind::Io, "cli", "cannot write '" + out + "'");
    }
    f << text;
  }

  std::string describe(CheckReport const& r, CrossedComplex const& c, int dim) {
    if (r.ok) {
      return "ok: " + std::to_string(r.checked) + " generators checked through dimension "
             + std::to_string(std::min(dim, c.top())) + (r.exact ? "" : " (over a free cover of pi_1)")
             + "\n";
    }
    return std::string(r.exact ? "FAILED" : "inconclusive (no finite oracle for pi_1)") + " at "
           + r.witness + ": " + r.detail + "\n";
  }

  int status(CheckReport const& r) {
    return r.ok ? 0 : r.exact ? 1 : 3;
  }

  CocycleData parse_cocycle(std::string const& k1, std::string const& k2, CrossedComplex const& f,
                            Presentation const& kp, InnerCrossedModule const& m) {
    CocycleData c{std::vector<int>(f.count(1), 0), std::vector<int>(f.count(2), 0)};
    auto const& ko = *m.kernel;
    std::size_t const ng = kp.generators().size();
    for (auto const& [name, value] : split_map(k1, ';')) {
      auto const g = f.find(1, name);
      if (!g) {
        throw Error(ErrorKind::UnknownGenerator, "cli", "no dimension-1 generator '" + name + "'");
      }
      // value: "k -> k^-1, l -> l" as images of K's generators
      std::string body = value;
      if (!body.empty() && body.front() == '{' && body.back() == '}') {
        body = body.substr(1, body.size() - 2);
      }
      std::vector<int> images(ng);
      for (std::size_t i = 0; i < ng; ++i) {
        images[i] = static_cast<int>(ko.index_of(Word::letter(kp.alphabet(), static_cast<int>(i))));
      }
      for (auto const& [gen, word] : split_map(body)) {
        auto const gi = kp.generator_index(gen);
        if (!gi) {
          throw Error(ErrorKind::UnknownGenerator, "cli", "no generator '" + gen + "' in K");
        }
        images[static_cast<std::size_t>(*gi)] = static_cast<int>(ko.index_of(kp.parse_word(word, 0)));
      }
      std::optional<int> found;
      for (std::size_t a = 0; a < m.automorphisms.size() && !found; ++a) {
        bool match = true;
        for (std::size_t i = 0; i < ng && match; ++i) {
          int const gi = static_cast<int>(ko.index_of(Word::letter(kp.alphabet(), static_cast<int>(i))));
          match = m.automorphisms[a][static_cast<std::size_t>(gi)] == images[i];
        }
        if (match) {
          found = static_cast<int>(a);
        }
      }
      if (!found) {
        throw Error(ErrorKind::InvalidArgument, "cli", "'" + value + "' is not an automorphism of K");
      }
      c.k1[static_cast<std::size_t>(*g)] = *found;
    }
    for (auto const& [name, value] : split_map(k2, ';')) {
      auto const r = f.find(2, name);
      if (!r) {
        throw Error(ErrorKind::UnknownGenerator, "cli", "no dimension-2 generator '" + name + "'");
      }
      c.k2[static_cast<std::size_t>(*r)] = static_cast<int>(ko.index_of(kp.parse_word(value, 0)));
    }
    return c;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free crossed resolutions: construction and verification"};
  app.require_subcommand(1);
  int dim = 0;
  std::string out;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--dim", dim, "top dimension (default $XRES_MAXDIM or 4)");
    sub->add_option("-o,--out", out, "write the result here instead of stdout");
  };

  std::string group, left, right, input, a_spec, b_spec, c_spec, i_map, j_map, sub_spec, iso, k0_map,
      keep, kernel, k1_text, k2_text;
  int from = 0, to = -1;
  bool exactness = false, matrices = false, verify = false;

  auto* std_cmd = app.add_subcommand("resolve-standard", "standard resolution of a finite group");
  std_cmd->add_option("--group", group, "presentation of G")->required();
  auto* tensor_cmd = app.add_subcommand("tensor", "tensor product of two complexes");
  tensor_cmd->add_option("--left", left)->required();
  tensor_cmd->add_option("--right", right)->required();
  auto* cyl_cmd = app.add_subcommand("cylinder", "I (x) B for a one-object complex B");
  cyl_cmd->add_option("--in", input)->required();
  auto* am_cmd = app.add_subcommand("amalgam", "resolution of A *_C B");
  am_cmd->add_option("--a", a_spec)->required();
  am_cmd->add_option("--b", b_spec)->required();
  am_cmd->add_option("--c", c_spec)->required();
  am_cmd->add_option("--i", i_map, "C -> A on generators")->required();
  am_cmd->add_option("--j", j_map, "C -> B on generators")->required();
  auto* retract_after = am_cmd->add_flag("--retract", "collapse to the vertex group of A");
  auto* hnn_cmd = app.add_subcommand("hnn", "resolution of an HNN extension");
  hnn_cmd->add_option("--group", group)->required();
  hnn_cmd->add_option("--sub", sub_spec, "the subgroup A (default G)");
  hnn_cmd->add_option("--iso", iso, "k0 : A -> G, the twist")->required();
  hnn_cmd->add_option("--k1", k0_map, "k1 : A -> G (default the inclusion by name)");
  auto* ret_cmd = app.add_subcommand("retract", "collapse a two-object complex to a vertex");
  ret_cmd->add_option("--in", input)->required();
  ret_cmd->add_option("--keep", keep, "object to keep (default the first)");
  auto* check_cmd = app.add_subcommand("check", "check the crossed complex axioms");
  check_cmd->add_option("--in", input)->required();
  auto* hom_cmd = app.add_subcommand("homology", "homology of the group, or exactness of the resolution");
  hom_cmd->add_option("--in", input)->required();
  hom_cmd->add_option("--from", from);
  hom_cmd->add_option("--to", to);
  hom_cmd->add_flag("--exactness", exactness, "check exactness over Z[G] instead");
  hom_cmd->add_flag("--matrices", matrices, "print the boundary matrices");
  auto* id_cmd = app.add_subcommand("identities", "identities among relations");
  id_cmd->add_option("--in", input)->required();
  std::vector<CLI::App*> cocycle_cmds;
  for (auto const* name : {"cocycle-verify", "extension"}) {
    auto* cmd = app.add_subcommand(name, std::string(name) == "extension" ? "the extension of a cocycle"
                                                                           : "check a non-abelian 2-cocycle");
    cmd->add_option("--resolution", input)->required();
    cmd->add_option("--kernel", kernel, "presentation of K or C<n>")->required();
    cmd->add_option("--k1", k1_text, "'x -> {k -> k^-1}; ...' (default identity)");
    cmd->add_option("--k2", k2_text, "'r -> k; ...' (default 1)");
    cocycle_cmds.push_back(cmd);
  }
  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) {
    add_common(sub);
  }

  for (auto* sub : {std_cmd, tensor_cmd, cyl_cmd, am_cmd, hnn_cmd, ret_cmd}) {
    sub->add_flag("--verify", verify, "check the axioms of the result (report on stderr)");
  }

  CLI11_PARSE(app, argc, argv);

  auto finish = [&](CrossedComplex const& c) {
    emit(print_complex(c), out);
    if (!verify) {
      return 0;
    }
    auto const report = check_complex_axioms(c, dim);
    std::cerr << describe(report, c, dim);
    return status(report);
  };

  try {
    if (dim <= 0) {
      dim = default_dim();
      if (hom_cmd->parsed() && to >= dim) {
        dim = to + 1;  // homology at n needs the boundary out of n + 1
      }
    }
    if (std_cmd->parsed()) {
      auto const p = Presentation::parse(read_file(group));
      auto const o = build_finite_oracle(p, kOracleBound);
      return finish(standard_resolution(o, p.generator_names(), dim));
    } else if (tensor_cmd->parsed()) {
      auto const l = load_complex(left, dim);
      auto const r = load_complex(right, dim);
      return finish(tensor_product(l, r, dim));
    } else if (cyl_cmd->parsed()) {
      return finish(cylinder(load_complex(input, dim), dim));
    } else if (am_cmd->parsed()) {
      auto const a = std::make_shared<CrossedComplex const>(load_complex(a_spec, dim, "a"));
      auto const b = std::make_shared<CrossedComplex const>(load_complex(b_spec, dim, "b"));
      auto const c = std::make_shared<CrossedComplex const>(load_complex(c_spec, dim, "c"));
      AmalgamData d{a, b, c, lift(c, a, i_map, dim), lift(c, b, j_map, dim)};
      auto r = amalgam_resolution(d, dim);
      return finish(*retract_after ? retract_to_vertex(r, 0) : r);
    } else if (hnn_cmd->parsed()) {
      auto const g = std::make_shared<CrossedComplex const>(load_complex(group, dim));
      auto letter = split_map(iso).empty() ? std::string("a") : split_map(iso).front().first;
      auto const a = sub_spec.empty() ? g
                                      : std::make_shared<CrossedComplex const>(
                                            load_complex(sub_spec, dim, letter));
      HnnData d{g, a, lift(a, g, iso, dim), lift(a, g, k0_map, dim)};
      return finish(hnn_resolution(d, dim));
    } else if (ret_cmd->parsed()) {
      auto const c = load_complex(input, dim);
      ObjectId k = 0;
      if (!keep.empty()) {
        auto const idx = c.object_index(keep);
        if (!idx) {
          throw Error(ErrorKind::InvalidArgument, "cli", "no object '" + keep + "'");
        }
        k = *idx;
      }
      return finish(retract_to_vertex(c, k));
    } else if (check_cmd->parsed()) {
      auto const c = load_complex(input, dim);
      auto const report = check_complex_axioms(c, dim);
      emit(describe(report, c, dim), out);
      return status(report);
    } else if (hom_cmd->parsed()) {
      auto const c = load_complex(input, dim);
      auto const cc = to_chain_complex(c, c.oracle(), dim);
      int const last = to < 0 ? cc.top() - 1 : to;
      std::ostringstream os;
      if (matrices) {
        for (int n = 1; n <= cc.top(); ++n) {
          os << "d" << n << ":\n" << format_matrix(cc, n, c.arrow_names());
        }
      }
      if (exactness) {
        auto const report = check_exactness(cc, from, last);
        os << (report.exact ? "exact" : report.detail) << '\n';
        emit(os.str(), out);
        return report.exact ? 0 : 1;
      }
      auto const h = group_homology(cc, from, last);
      for (std::size_t i = 0; i < h.size(); ++i) {
        os << "H" << from + static_cast<int>(i) << " = " << h[i].format() << '\n';
      }
      emit(os.str(), out);
    } else if (id_cmd->parsed()) {
      auto const c = load_complex(input, dim);
      if (c.top() < 3) {
        std::cerr << "note: the input stops at dimension " << c.top()
                  << "; identities are read from dimension 3 of a resolution\n";
      }
      auto const ip = identities_presentation(c);
      std::ostringstream os;
      for (std::size_t i = 0; i < ip.generators.size(); ++i) {
        os << ip.generator_names[i] << " = " << format(ip.generators[i], c) << '\n';
      }
      for (std::size_t i = 0; i < ip.relations.size(); ++i) {
        os << ip.relation_names[i] << ": " << format(ip.relations[i], c) << " = 0\n";
      }
      emit(os.str(), out);
    } else {
      auto const f = load_complex(input, dim);
      auto const kp = load_presentation(kernel);
      auto const m = automorphism_oracle(build_finite_oracle(kp, 64));
      auto const data = parse_cocycle(k1_text, k2_text, f, kp, m);
      if (cocycle_cmds[0]->parsed()) {
        auto const report = verify_cocycle(data, f, m);
        emit(report.ok ? "ok\n" : "FAILED at " + report.witness + ": " + report.detail + "\n", out);
        return report.ok ? 0 : 1;
      }
      emit(build_extension(data, f, m).report(), out);
    }
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: cli: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
