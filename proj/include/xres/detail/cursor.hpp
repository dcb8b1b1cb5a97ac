// SPDX-License-Identifier: Apache-2.0

#ifndef XRES_DETAIL_CURSOR_HPP_
#define XRES_DETAIL_CURSOR_HPP_

#include <cctype>
#include <string>
#include <string_view>

#include "xres/error.hpp"

namespace xres::detail {

  //! Character cursor shared by the presentation and dump parsers.
  class Cursor {
   public:
    Cursor(std::string_view text, std::string_view module) : text_(text), module_(module) {}

    void skip_space() {
      while (pos_ < text_.size()) {
        if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        } else if (text_[pos_] == '#' && at_line_start()) {
          while (pos_ < text_.size() && text_[pos_] != '\n') {
            ++pos_;
          }
        } else {
          break;
        }
      }
    }

    // skip spaces and tabs only, stopping at newlines
    void skip_blank() {
      while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) {
        ++pos_;
      }
    }

    [[nodiscard]] bool done() {
      skip_space();
      return pos_ >= text_.size();
    }

    [[nodiscard]] char peek() const {
      return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    [[nodiscard]] char peek(std::size_t ahead) const {
      return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    char get() {
      return pos_ < text_.size() ? text_[pos_++] : '\0';
    }

    bool accept(std::string_view token) {
      skip_space();
      if (text_.substr(pos_, token.size()) == token) {
        pos_ += token.size();
        return true;
      }
      return false;
    }

    void expect(std::string_view token) {
      if (!accept(token)) {
        fail("expected '" + std::string(token) + "'");
      }
    }

    [[nodiscard]] static bool ident_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '#' || c == '\'';
    }

    //! Identifier: letters, digits, '_', '#', '\'' and balanced [...] groups
    //! (which may contain commas). A token made only of digits is not an
    //! identifier.
    std::string identifier() {
      return token(false);
    }

    //! Object names may also be plain numbers ("0", "1").
    std::string object_name() {
      return token(true);
    }

    std::string token(bool digits_ok) {
      skip_space();
      std::size_t const start = pos_;
      while (pos_ < text_.size()) {
        char const c = text_[pos_];
        if (ident_char(c)) {
          ++pos_;
        } else if (c == '[' && (pos_ == start || text_[pos_ - 1] != '.')) {
          int depth = 0;
          do {
            if (text_[pos_] == '[') {
              ++depth;
            } else if (text_[pos_] == ']') {
              --depth;
            }
            ++pos_;
          } while (pos_ < text_.size() && depth > 0);
          if (depth != 0) {
            fail("unbalanced '['");
          }
        } else {
          break;
        }
      }
      std::string id(text_.substr(start, pos_ - start));
      bool all_digits = !id.empty();
      for (char c : id) {
        all_digits = all_digits && std::isdigit(static_cast<unsigned char>(c));
      }
      if (id.empty() || (all_digits && !digits_ok)) {
        pos_ = start;
        fail("expected an identifier");
      }
      return id;
    }

    [[nodiscard]] bool at_identifier() {
      skip_space();
      std::size_t p = pos_;
      bool any_non_digit = false;
      while (p < text_.size() && (ident_char(text_[p]) || text_[p] == '[')) {
        if (!std::isdigit(static_cast<unsigned char>(text_[p]))) {
          any_non_digit = true;
        }
        if (text_[p] == '[') {
          break;
        }
        ++p;
      }
      return any_non_digit || (p < text_.size() && text_[p] == '[' && p == pos_);
    }

    [[nodiscard]] bool at_integer() {
      skip_space();
      std::size_t p = pos_;
      if (p < text_.size() && (text_[p] == '-' || text_[p] == '+')) {
        ++p;
      }
      std::size_t const digits = p;
      while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
        ++p;
      }
      return p > digits && (p >= text_.size() || !ident_char(text_[p]));
    }

    long integer() {
      skip_space();
      std::size_t const start = pos_;
      bool neg = false;
      if (peek() == '-' || peek() == '+') {
        neg = get() == '-';
      }
      std::size_t const digits = pos_;
      long v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = v * 10 + (text_[pos_] - '0');
        ++pos_;
      }
      if (pos_ == digits) {
        pos_ = start;
        fail("expected an integer");
      }
      return neg ? -v : v;
    }

    [[nodiscard]] std::size_t position() const noexcept {
      return pos_;
    }
    void seek(std::size_t p) noexcept {
      pos_ = p;
    }

    [[noreturn]] void fail(std::string const& what) const {
      throw SyntaxError(module_, pos_, what);
    }
    [[noreturn]] void fail_at(std::size_t p, std::string const& what) const {
      throw SyntaxError(module_, p, what);
    }

   private:
    bool at_line_start() const {
      std::size_t p = pos_;
      while (p > 0 && (text_[p - 1] == ' ' || text_[p - 1] == '\t')) {
        --p;
      }
      return p == 0 || text_[p - 1] == '\n';
    }

    std::string_view text_;
    std::string_view module_;
    std::size_t pos_ = 0;
  };

}  // namespace xres::detail

#endif  // XRES_DETAIL_CURSOR_HPP_
