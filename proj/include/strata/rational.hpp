#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include "strata/error.hpp"

namespace strata {

/// Arbitrary-precision signed integer used wherever intermediate products
/// exceed any fixed width (double factorials, polygon sums over long
/// spectra).
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.  All arithmetic is exact; `approx()` is the only lossy
/// accessor and is never used internally for decisions.
class Rational {
 public:
  Rational() : value_(0) {}

  Rational(long long value) : value_(value) {}  // NOLINT: implicit by design

  Rational(long long numerator, long long denominator)
      : Rational(BigInt(numerator), BigInt(denominator)) {}

  Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) {
      throw ValidationError("rational denominator must be nonzero");
    }
    value_ = Backing(numerator);
    value_ /= Backing(denominator);
  }

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const {
    return boost::multiprecision::denominator(value_);
  }

  /// Lowest-terms text: "p/q", or just "p" when the denominator is 1.
  std::string str() const {
    std::string out = numerator().str();
    if (denominator() != 1) {
      out += "/";
      out += denominator().str();
    }
    return out;
  }

  /// Reads the exact formats produced by `str()` (plus non-lowest-terms
  /// fractions, which are reduced).  Anything else is a ParseError.
  static Rational parse(std::string_view text) {
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
      return Rational(parse_integer(std::string(text), 0), BigInt(1));
    }
    BigInt num = parse_integer(std::string(text.substr(0, slash)), 0);
    std::string den_text(text.substr(slash + 1));
    if (!den_text.empty() && den_text[0] == '-') {
      throw ParseError("denominator must be positive", slash + 1);
    }
    BigInt den = parse_integer(den_text, slash + 1);
    if (den == 0) {
      throw ParseError("denominator must be nonzero", slash + 1);
    }
    return Rational(num, den);
  }

  /// Double-precision approximation; informational only.
  double approx() const { return value_.convert_to<double>(); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.value_ + b.value_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.value_ - b.value_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.value_ * b.value_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.value_ == 0) {
      throw ValidationError("division of rationals by zero");
    }
    return Rational(a.value_ / b.value_);
  }
  Rational operator-() const { return Rational(Backing(-value_)); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.value_ != b.value_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.value_ < b.value_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.value_ <= b.value_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.value_ > b.value_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.value_ >= b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  using Backing = boost::multiprecision::cpp_rational;

  explicit Rational(Backing value) : value_(std::move(value)) {}

  static BigInt parse_integer(const std::string& text, std::size_t offset) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    if (i == text.size()) {
      throw ParseError("expected an integer", offset + i);
    }
    for (std::size_t j = i; j < text.size(); ++j) {
      if (text[j] < '0' || text[j] > '9') {
        throw ParseError("unexpected character in integer", offset + j);
      }
    }
    return BigInt(text);
  }

  Backing value_;
};

}  // namespace strata
