#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "strata/error.hpp"

namespace strata {

/// Which kind of differential a signature describes.
enum class DiffKind { Abelian, Quadratic };

/// Connected-component label attached to a signature.  Labels are carried
/// verbatim; no attempt is made to verify that the named component exists.
enum class Component { None, Hyp, NonHyp, Reg, Irr, Odd, Even };

inline const char* component_name(Component c) {
  switch (c) {
    case Component::None: return "";
    case Component::Hyp: return "hyp";
    case Component::NonHyp: return "nonhyp";
    case Component::Reg: return "reg";
    case Component::Irr: return "irr";
    case Component::Odd: return "odd";
    case Component::Even: return "even";
  }
  return "";
}

/// A stratum of abelian (H) or quadratic (Q) differentials, given by the
/// list of singularity orders and an optional component label.
///
/// Validity rules:
///  - quadratic: every order >= -1, order sum divisible by 4 and >= -4;
///    order 0 (a marked point) requires explicit opt-in;
///  - abelian: every order >= 0 (0 is an unflagged marked point), even sum.
class Stratum {
 public:
  /// Reads text like "Q(9,-1)^irr", "H(2,2)^odd" or "Q(3^2,-1^2)".
  /// Exponent shorthand d^r expands to r copies of d.
  static Stratum parse(const std::string& text, bool allow_marked = false) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& msg, std::size_t at) -> ParseError {
      return ParseError(msg + " in \"" + text + "\"", at);
    };
    if (text.empty()) throw fail("empty signature", 0);
    DiffKind kind;
    if (text[0] == 'Q') {
      kind = DiffKind::Quadratic;
    } else if (text[0] == 'H') {
      kind = DiffKind::Abelian;
    } else {
      throw fail("signature must start with Q or H", 0);
    }
    pos = 1;
    if (pos >= text.size() || text[pos] != '(') {
      throw fail("expected '('", pos);
    }
    ++pos;
    std::vector<int> orders;
    for (;;) {
      long long order = read_integer(text, pos);
      int repeat = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        std::size_t repeat_at = pos;
        long long r = read_integer(text, pos);
        if (r < 1) throw fail("repeat count must be at least 1", repeat_at);
        repeat = static_cast<int>(r);
      }
      for (int i = 0; i < repeat; ++i) orders.push_back(static_cast<int>(order));
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    if (pos >= text.size() || text[pos] != ')') {
      throw fail("expected ',' or ')'", pos);
    }
    ++pos;
    Component component = Component::None;
    if (pos < text.size()) {
      if (text[pos] != '^') throw fail("unexpected trailing text", pos);
      std::size_t word_at = pos + 1;
      std::string word = text.substr(word_at);
      component = parse_component(word);
      if (component == Component::None) {
        throw fail("unknown component label '" + word + "'", word_at);
      }
      pos = text.size();
    }
    return make(kind, std::move(orders), component, allow_marked);
  }

  static Stratum quadratic(std::vector<int> orders,
                           Component component = Component::None,
                           bool allow_marked = false) {
    return make(DiffKind::Quadratic, std::move(orders), component, allow_marked);
  }

  static Stratum abelian(std::vector<int> orders,
                         Component component = Component::None) {
    return make(DiffKind::Abelian, std::move(orders), component,
                /*allow_marked=*/true);
  }

  DiffKind kind() const { return kind_; }
  const std::vector<int>& orders() const { return orders_; }
  Component component() const { return component_; }

  /// Genus of the underlying surface: (sum + 4)/4 for quadratic signatures,
  /// (sum + 2)/2 for abelian ones.
  int genus() const {
    long long sum = order_sum();
    return kind_ == DiffKind::Quadratic ? static_cast<int>((sum + 4) / 4)
                                        : static_cast<int>((sum + 2) / 2);
  }

  int odd_count() const {
    int n = 0;
    for (int d : orders_)
      if (d % 2 != 0) ++n;
    return n;
  }

  int pole_count() const {
    int n = 0;
    for (int d : orders_)
      if (d < 0) ++n;
    return n;
  }

  /// k_j = floor((d_j + 1) / 2) per singularity: the number of spectrum
  /// candidates each singularity contributes.
  std::vector<int> k_values() const {
    std::vector<int> k;
    k.reserve(orders_.size());
    for (int d : orders_) k.push_back((d + 1) / 2);
    return k;
  }

  /// Effective genus g - 1 + (#odd orders)/2: the genus carried by the
  /// anti-invariant part of the canonical double cover.
  int g_eff() const { return genus() - 1 + odd_count() / 2; }

  /// Same signature with the orders sorted in descending order.
  Stratum canonical() const {
    std::vector<int> sorted = orders_;
    std::sort(sorted.rbegin(), sorted.rend());
    return Stratum(kind_, std::move(sorted), component_);
  }

  /// True when the other signature has the same kind and the same multiset
  /// of orders; component labels are ignored.
  bool same_multiset(const Stratum& other) const {
    if (kind_ != other.kind_ || orders_.size() != other.orders_.size())
      return false;
    std::vector<int> a = orders_;
    std::vector<int> b = other.orders_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  /// Prints the signature; with collapse=true consecutive repeats group as
  /// d^count ("Q(7,-1^3)").
  std::string str(bool collapse = false) const {
    std::string out(kind_ == DiffKind::Quadratic ? "Q(" : "H(");
    for (std::size_t i = 0; i < orders_.size();) {
      if (i > 0) out += ",";
      std::size_t run = 1;
      if (collapse) {
        while (i + run < orders_.size() && orders_[i + run] == orders_[i]) ++run;
      }
      out += std::to_string(orders_[i]);
      if (run > 1) {
        out += "^";
        out += std::to_string(run);
      }
      i += run;
    }
    out += ")";
    if (component_ != Component::None) {
      out += "^";
      out += component_name(component_);
    }
    return out;
  }

  friend bool operator==(const Stratum& a, const Stratum& b) {
    return a.kind_ == b.kind_ && a.orders_ == b.orders_ &&
           a.component_ == b.component_;
  }
  friend bool operator!=(const Stratum& a, const Stratum& b) {
    return !(a == b);
  }

  friend std::ostream& operator<<(std::ostream& os, const Stratum& s) {
    return os << s.str();
  }

 private:
  Stratum(DiffKind kind, std::vector<int> orders, Component component)
      : kind_(kind), orders_(std::move(orders)), component_(component) {}

  long long order_sum() const {
    return std::accumulate(orders_.begin(), orders_.end(), 0LL);
  }

  static Component parse_component(const std::string& word) {
    if (word == "hyp") return Component::Hyp;
    if (word == "nonhyp" || word == "non-hyp") return Component::NonHyp;
    if (word == "reg") return Component::Reg;
    if (word == "irr") return Component::Irr;
    if (word == "odd") return Component::Odd;
    if (word == "even") return Component::Even;
    return Component::None;
  }

  static long long read_integer(const std::string& text, std::size_t& pos) {
    std::size_t start = pos;
    bool negative = false;
    if (pos < text.size() && text[pos] == '-') {
      negative = true;
      ++pos;
    }
    std::size_t digits = 0;
    long long value = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      value = value * 10 + (text[pos] - '0');
      ++pos;
      ++digits;
    }
    if (digits == 0) {
      throw ParseError("expected an integer in \"" + text + "\"", start);
    }
    return negative ? -value : value;
  }

  static Stratum make(DiffKind kind, std::vector<int> orders,
                      Component component, bool allow_marked) {
    long long sum = std::accumulate(orders.begin(), orders.end(), 0LL);
    if (kind == DiffKind::Quadratic) {
      for (int d : orders) {
        if (d < -1) {
          throw ValidationError("quadratic order " + std::to_string(d) +
                                " is below -1");
        }
        if (d == 0 && !allow_marked) {
          throw ValidationError(
              "order 0 is a marked point; pass allow_marked to accept it");
        }
      }
      if (sum % 4 != 0) {
        throw ValidationError("quadratic order sum " + std::to_string(sum) +
                              " is not divisible by 4");
      }
      if (sum < -4) {
        throw ValidationError("quadratic order sum " + std::to_string(sum) +
                              " is below -4 (genus would be negative)");
      }
    } else {
      for (int m : orders) {
        if (m < 0) {
          throw ValidationError("abelian order " + std::to_string(m) +
                                " is negative");
        }
      }
      if (sum % 2 != 0) {
        throw ValidationError("abelian order sum " + std::to_string(sum) +
                              " is odd");
      }
    }
    return Stratum(kind, std::move(orders), component);
  }

  DiffKind kind_;
  std::vector<int> orders_;
  Component component_;
};

}  // namespace strata
