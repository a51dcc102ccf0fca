#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mosaic {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr double kPi = 3.14159265358979323846;

struct MosaicError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateInput : MosaicError {
  using MosaicError::MosaicError;
};
struct UnknownName : MosaicError {
  using MosaicError::MosaicError;
};
struct DimensionMismatch : MosaicError {
  using MosaicError::MosaicError;
};

inline Rational rat(long long num, long long den = 1) {
  if (den == 0) throw DegenerateInput("rational with zero denominator");
  return Rational(num, den);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline int sign(const Rational& r) { return r.sign(); }

/// Canonical "p" or "p/q" form, q > 0, gcd-reduced.
inline std::string rational_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

namespace detail_rational {
// decimal-only integer parse; cpp_int's string constructor would read a
// leading zero as an octal prefix
inline Int parse_int(std::string s) {
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.erase(s.begin());
  }
  if (s.empty()) throw DegenerateInput("empty integer literal");
  Int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw DegenerateInput("bad digit in integer literal");
    v = v * 10 + (c - '0');
  }
  return neg ? -v : v;
}
}  // namespace detail_rational

inline Rational parse_rational(const std::string& s) {
  using detail_rational::parse_int;
  try {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      Int num = parse_int(s.substr(0, slash));
      Int den = parse_int(s.substr(slash + 1));
      if (den == 0) throw DegenerateInput("zero denominator: " + s);
      return Rational(num, den);
    }
    // plain integers and decimals like "27.07"
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(parse_int(s));
    Int num = parse_int(s.substr(0, dot) + s.substr(dot + 1));
    Int den = 1;
    for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    return Rational(num, den);
  } catch (const DegenerateInput&) {
    throw;
  } catch (const std::exception&) {
    throw DegenerateInput("cannot parse rational: " + s);
  }
}

/// Element of the field Q[sqrt(3)], kept as the exact pair a + b*sqrt(3).
/// Comparisons and equality are exact; no floating point is involved
/// until to_double().
struct Q3 {
  Rational a;  // rational part
  Rational b;  // coefficient of sqrt(3)

  Q3() : a(0), b(0) {}
  Q3(Rational ra) : a(std::move(ra)), b(0) {}
  Q3(long long n) : a(n), b(0) {}
  Q3(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}

  static Q3 sqrt3(Rational coeff = 1) { return Q3(0, std::move(coeff)); }

  bool is_rational() const { return b == 0; }

  Q3 operator+(const Q3& o) const { return Q3(a + o.a, b + o.b); }
  Q3 operator-(const Q3& o) const { return Q3(a - o.a, b - o.b); }
  Q3 operator-() const { return Q3(-a, -b); }
  Q3 operator*(const Q3& o) const {
    return Q3(a * o.a + 3 * b * o.b, a * o.b + b * o.a);
  }
  Q3 operator/(const Q3& o) const {
    // (a+b r)/(c+d r) = (a+b r)(c-d r)/(c^2-3 d^2); denominator nonzero
    // unless o == 0 since sqrt(3) is irrational.
    Rational den = o.a * o.a - 3 * o.b * o.b;
    if (den == 0) throw DegenerateInput("division by zero in Q[sqrt3]");
    Q3 num = (*this) * Q3(o.a, -o.b);
    return Q3(num.a / den, num.b / den);
  }
  Q3& operator+=(const Q3& o) { return *this = *this + o; }
  Q3& operator-=(const Q3& o) { return *this = *this - o; }
  Q3& operator*=(const Q3& o) { return *this = *this * o; }

  // sign of a + b*sqrt(3), exact
  int sgn() const {
    int sa = a.sign(), sb = b.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 vs 3 b^2; result carries the sign of the
    // dominant term
    Rational d = a * a - 3 * b * b;
    int sd = d.sign();
    if (sd == 0) return 0;  // cannot happen for b != 0, kept for safety
    return sd > 0 ? sa : sb;
  }

  bool operator==(const Q3& o) const { return a == o.a && b == o.b; }
  bool operator!=(const Q3& o) const { return !(*this == o); }
  bool operator<(const Q3& o) const { return (*this - o).sgn() < 0; }
  bool operator<=(const Q3& o) const { return (*this - o).sgn() <= 0; }
  bool operator>(const Q3& o) const { return (*this - o).sgn() > 0; }
  bool operator>=(const Q3& o) const { return (*this - o).sgn() >= 0; }
};

inline double to_double(const Q3& q) {
  return to_double(q.a) + to_double(q.b) * 1.7320508075688772935;
}

inline int sign(const Q3& q) { return q.sgn(); }

inline int sign(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

inline double to_double(double x) { return x; }

}  // namespace mosaic
