// SPDX-License-Identifier: Apache-2.0

#include "xres/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "xres/detail/cursor.hpp"
#include "xres/error.hpp"

namespace xres {

  namespace detail {
    namespace {
      std::vector<Letter> parse_factor(Cursor& c, std::vector<std::string> const& names) {
        std::vector<Letter> base;
        c.skip_space();
        if (c.accept("(")) {
          base = parse_raw_word(c, names);
          c.expect(")");
        } else if (c.at_integer()) {
          std::size_t const at = c.position();
          if (c.integer() != 1) {
            c.fail_at(at, "only '1' may stand for a word");
          }
        } else {
          std::size_t const at = c.position();
          std::string const name = c.identifier();
          auto it = std::find(names.begin(), names.end(), name);
          if (it == names.end()) {
            c.fail_at(at, "unknown generator '" + name + "'");
          }
          base.push_back({static_cast<int>(it - names.begin()), 1});
        }
        c.skip_space();
        if (c.peek() == '^' && c.peek(1) != '(') {
          c.get();
          long const k = c.integer();
          std::vector<Letter> out;
          std::vector<Letter> unit = base;
          if (k < 0) {
            std::reverse(unit.begin(), unit.end());
            for (auto& l : unit) {
              l = l.inverse();
            }
          }
          for (long i = 0; i < (k < 0 ? -k : k); ++i) {
            out.insert(out.end(), unit.begin(), unit.end());
          }
          return out;
        }
        return base;
      }
    }  // namespace

    std::vector<Letter> parse_raw_word(Cursor& c, std::vector<std::string> const& names) {
      auto letters = parse_factor(c, names);
      while (true) {
        c.skip_space();
        if (c.peek() != '*') {
          return letters;
        }
        c.get();
        auto more = parse_factor(c, names);
        letters.insert(letters.end(), more.begin(), more.end());
      }
    }
  }  // namespace detail

  namespace {
    ObjectId start_of(std::vector<Letter> const& letters, Alphabet const& alphabet,
                      ObjectId fallback) {
      if (letters.empty()) {
        return fallback;
      }
      auto const& a = alphabet.at(static_cast<std::size_t>(letters.front().gen));
      return letters.front().exp > 0 ? a.source : a.target;
    }

    bool is_reduced(std::vector<Letter> const& letters) {
      for (std::size_t i = 1; i < letters.size(); ++i) {
        if (letters[i] == letters[i - 1].inverse()) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  ObjectId Presentation::add_object(std::string name) {
    if (object_index(name)) {
      throw Error(ErrorKind::InvalidArgument, "presentation", "duplicate object " + name);
    }
    objects_.push_back(std::move(name));
    return static_cast<ObjectId>(objects_.size() - 1);
  }

  int Presentation::add_generator(std::string name, ObjectId source, ObjectId target) {
    if (generator_index(name)) {
      throw Error(ErrorKind::InvalidArgument, "presentation", "duplicate generator " + name);
    }
    generators_.push_back({std::move(name), source, target});
    return static_cast<int>(generators_.size() - 1);
  }

  void Presentation::add_relator(std::string name, Word w, bool was_reduced) {
    if (!w.is_loop()) {
      throw Error(ErrorKind::NonLoopRelator, "presentation", "relator " + name + " is not a loop");
    }
    for (auto const& r : relators_) {
      if (r.name == name) {
        throw Error(ErrorKind::InvalidArgument, "presentation", "duplicate relator " + name);
      }
    }
    relators_.push_back({std::move(name), std::move(w), was_reduced});
  }

  Alphabet Presentation::alphabet() const {
    Alphabet a;
    for (auto const& g : generators_) {
      a.push_back({g.source, g.target});
    }
    return a;
  }

  std::vector<std::string> Presentation::generator_names() const {
    std::vector<std::string> n;
    for (auto const& g : generators_) {
      n.push_back(g.name);
    }
    return n;
  }

  std::optional<int> Presentation::generator_index(std::string_view name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (generators_[i].name == name) {
        return static_cast<int>(i);
      }
    }
    return std::nullopt;
  }

  std::optional<ObjectId> Presentation::object_index(std::string_view name) const {
    for (std::size_t i = 0; i < objects_.size(); ++i) {
      if (objects_[i] == name) {
        return static_cast<ObjectId>(i);
      }
    }
    return std::nullopt;
  }

  Word Presentation::parse_word(std::string_view text, std::optional<ObjectId> start) const {
    detail::Cursor c(text, "presentation");
    auto const letters = detail::parse_raw_word(c, generator_names());
    if (!c.done()) {
      c.fail("trailing input");
    }
    auto const alphabet = this->alphabet();
    return reduce(start.value_or(start_of(letters, alphabet, 0)), letters, alphabet);
  }

  Presentation Presentation::parse(std::string_view text) {
    detail::Cursor c(text, "presentation");
    Presentation p;
    bool groupoid = false;
    if (c.accept("obj<")) {
      groupoid = true;
      p.objects_.clear();
      if (!c.accept(">")) {
        do {
          std::size_t const at = c.position();
          std::string name = c.object_name();
          if (p.object_index(name)) {
            c.fail_at(at, "duplicate object '" + name + "'");
          }
          p.objects_.push_back(std::move(name));
        } while (c.accept(","));
        c.expect(">");
      }
      if (p.objects_.empty()) {
        c.fail("a groupoid needs at least one object");
      }
    }
    c.expect("gp<");
    c.skip_space();
    if (c.peek() != '|' && c.peek() != '>') {
      do {
        std::size_t const at = c.position();
        std::string name = c.identifier();
        if (p.generator_index(name)) {
          c.fail_at(at, "duplicate generator '" + name + "'");
        }
        ObjectId s = 0, t = 0;
        if (c.accept(":")) {
          std::size_t const sat = c.position();
          auto src = p.object_index(c.object_name());
          c.expect("->");
          std::size_t const tat = c.position();
          auto tgt = p.object_index(c.object_name());
          if (!src) {
            c.fail_at(sat, "unknown object");
          }
          if (!tgt) {
            c.fail_at(tat, "unknown object");
          }
          s = *src;
          t = *tgt;
        } else if (groupoid && p.objects_.size() > 1) {
          c.fail("generators of a groupoid need 'name : source -> target'");
        }
        p.generators_.push_back({std::move(name), s, t});
      } while (c.accept(","));
    }
    std::vector<std::pair<std::optional<std::string>, std::pair<std::size_t, std::vector<Letter>>>>
        raw;
    auto const names = p.generator_names();
    if (c.accept("|")) {
      c.skip_space();
      if (c.peek() != '>') {
        do {
          c.skip_space();
          std::size_t const at = c.position();
          std::optional<std::string> rname;
          // "name = word" or a bare word
          if (c.at_identifier()) {
            std::size_t const save = c.position();
            std::string id = c.identifier();
            if (c.accept("=")) {
              rname = std::move(id);
            } else {
              c.seek(save);
            }
          }
          auto letters = detail::parse_raw_word(c, names);
          raw.push_back({rname, {at, std::move(letters)}});
        } while (c.accept(","));
      }
    }
    c.expect(">");
    if (!c.done()) {
      c.fail("trailing input after presentation");
    }
    std::set<std::string> used;
    for (auto const& [n, w] : raw) {
      if (n) {
        if (!used.insert(*n).second) {
          c.fail_at(w.first, "duplicate relator name '" + *n + "'");
        }
      }
    }
    auto const alphabet = p.alphabet();
    int auto_name = 0;
    for (auto& [n, w] : raw) {
      std::string name;
      if (n) {
        name = *n;
      } else {
        do {
          name = "r" + std::to_string(++auto_name);
        } while (used.contains(name));
        used.insert(name);
      }
      auto const& letters = w.second;
      Word word;
      try {
        word = reduce(start_of(letters, alphabet, 0), letters, alphabet);
      } catch (Error const&) {
        throw SyntaxError("presentation", w.first, "relator '" + name + "' is not a path");
      }
      if (!word.is_loop()) {
        throw Error(ErrorKind::NonLoopRelator, "presentation",
                    "relator '" + name + "' is not a loop");
      }
      p.relators_.push_back({std::move(name), std::move(word), !is_reduced(letters)});
    }
    return p;
  }

  std::string Presentation::print() const {
    std::ostringstream os;
    bool const groupoid
        = objects_.size() != 1
          || std::any_of(generators_.begin(), generators_.end(),
                         [](auto const& g) { return g.source != 0 || g.target != 0; })
          || objects_.front() != "o";
    if (groupoid) {
      os << "obj< ";
      for (std::size_t i = 0; i < objects_.size(); ++i) {
        os << (i ? ", " : "") << objects_[i];
      }
      os << " > ";
    }
    os << "gp< ";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      os << (i ? ", " : "") << generators_[i].name;
      if (groupoid) {
        os << " : " << objects_[static_cast<std::size_t>(generators_[i].source)] << " -> "
           << objects_[static_cast<std::size_t>(generators_[i].target)];
      }
    }
    auto const names = generator_names();
    if (!relators_.empty()) {
      os << (generators_.empty() ? "| " : " | ");
      for (std::size_t i = 0; i < relators_.size(); ++i) {
        os << (i ? ", " : "") << relators_[i].name << " = " << format(relators_[i].word, names);
      }
    }
    os << " >";
    return os.str();
  }

  ValidationReport Presentation::validate() const {
    ValidationReport report;
    auto const names = generator_names();
    for (std::size_t i = 0; i < relators_.size(); ++i) {
      auto const& r = relators_[i];
      if (r.word.empty()) {
        report.warnings.push_back("relator " + r.name + " is trivial");
      }
      if (r.was_reduced) {
        report.warnings.push_back("relator " + r.name + " was freely reduced to "
                                  + format(r.word, names));
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (relators_[j].word == r.word) {
          report.warnings.push_back("relators " + relators_[j].name + " and " + r.name
                                    + " have the same value");
        }
      }
    }
    return report;
  }

}  // namespace xres
