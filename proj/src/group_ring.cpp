// SPDX-License-Identifier: Apache-2.0

#include "xres/group_ring.hpp"

#include <sstream>

namespace xres {

  GroupRingElement::GroupRingElement(GroupOracle const& o, Word const& g, Integer n) {
    add_term(o.normalize(g), n);
  }

  Integer GroupRingElement::coefficient(Word const& normal_form) const {
    auto it = terms_.find(normal_form);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  Integer GroupRingElement::augmentation() const {
    Integer sum = 0;
    for (auto const& [g, n] : terms_) {
      sum += n;
    }
    return sum;
  }

  void GroupRingElement::add_term(Word const& normal_form, Integer const& n) {
    if (n == 0) {
      return;
    }
    auto [it, inserted] = terms_.try_emplace(normal_form, n);
    if (!inserted) {
      it->second += n;
      if (it->second == 0) {
        terms_.erase(it);
      }
    }
  }

  GroupRingElement& GroupRingElement::operator+=(GroupRingElement const& rhs) {
    for (auto const& [g, n] : rhs.terms_) {
      add_term(g, n);
    }
    return *this;
  }

  GroupRingElement& GroupRingElement::operator-=(GroupRingElement const& rhs) {
    for (auto const& [g, n] : rhs.terms_) {
      add_term(g, -n);
    }
    return *this;
  }

  GroupRingElement& GroupRingElement::operator*=(Integer const& n) {
    if (n == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [g, c] : terms_) {
      c *= n;
    }
    return *this;
  }

  GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement out = *this;
    out *= -1;
    return out;
  }

  GroupRingElement GroupRingElement::times(GroupRingElement const& rhs,
                                           GroupOracle const& o) const {
    GroupRingElement out;
    for (auto const& [g, n] : terms_) {
      for (auto const& [h, m] : rhs.terms_) {
        out.add_term(o.normalize(g * h), n * m);
      }
    }
    return out;
  }

  GroupRingElement GroupRingElement::times(Word const& g, GroupOracle const& o) const {
    GroupRingElement out;
    for (auto const& [h, n] : terms_) {
      out.add_term(o.normalize(h * g), n);
    }
    return out;
  }

  GroupRingElement GroupRingElement::conjugate(GroupOracle const& o) const {
    GroupRingElement out;
    for (auto const& [g, n] : terms_) {
      out.add_term(o.normalize(g.inverse()), n);
    }
    return out;
  }

  std::string format(GroupRingElement const& x, std::span<std::string const> names) {
    if (x.is_zero()) {
      return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto const& [g, n] : x.terms()) {
      Integer const mag = n < 0 ? Integer(-n) : n;
      if (first) {
        if (n < 0) {
          os << '-';
        }
      } else {
        os << (n < 0 ? " - " : " + ");
      }
      first = false;
      if (g.empty()) {
        os << mag;
      } else {
        if (mag != 1) {
          os << mag << '*';
        }
        os << format(g, names);
      }
    }
    return os.str();
  }

}  // namespace xres
