#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "gstab/errors.hpp"

namespace gstab {

/// Exact rational number backed by arbitrary-precision integers.
///
/// Always kept in lowest terms with a positive denominator. Serializes as
/// "num/den" (the denominator is written even when it is 1).
class Rational {
 public:
  using Int = boost::multiprecision::cpp_int;
  using Value = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(std::int64_t n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den) : Rational(Int(num), Int(den)) {}
  Rational(const Int& num, const Int& den) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    v_ = den < 0 ? Value(-num, -den) : Value(num, den);
  }

  Int num() const { return boost::multiprecision::numerator(v_); }
  Int den() const { return boost::multiprecision::denominator(v_); }
  bool is_integer() const { return den() == 1; }

  std::string str() const { return num().str() + "/" + den().str(); }

  /// Accepts "n", "n/d" (d != 0, either sign); result is normalized.
  static Rational parse(std::string_view text) {
    auto bad = [&] {
      return InvalidInput("malformed rational '" + std::string(text) + "'");
    };
    auto parse_int = [&](std::string_view s) -> Int {
      if (s.empty()) throw bad();
      std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
      if (i == s.size()) throw bad();
      for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9') throw bad();
      return Int(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text), Int(1));
    return Rational(parse_int(text.substr(0, slash)),
                    parse_int(text.substr(slash + 1)));
  }

  double to_double() const { return v_.convert_to<double>(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.v_ == 0) throw InvalidInput("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.v_ = -a.v_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (b.v_ < a.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

  const Value& value() const { return v_; }

 private:
  Value v_{0};
};

inline Rational midpoint(const Rational& a, const Rational& b) {
  return (a + b) / Rational(2);
}

}  // namespace gstab
