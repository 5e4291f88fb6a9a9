// Arbitrary-precision rational numbers, canonical form (den > 0, gcd = 1).
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cgsik {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(long num, long den) {
    if (den == 0) throw Error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_), NoCanon{}); }
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  friend Rational operator+(const Rational& x, const Rational& y) {
    return Rational(mpq_class(x.v_ + y.v_), NoCanon{});
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return Rational(mpq_class(x.v_ - y.v_), NoCanon{});
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return Rational(mpq_class(x.v_ * y.v_), NoCanon{});
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.is_zero()) throw Error("Rational: division by zero");
    return Rational(mpq_class(x.v_ / y.v_), NoCanon{});
  }
  Rational& operator+=(const Rational& y) { v_ += y.v_; return *this; }
  Rational& operator-=(const Rational& y) { v_ -= y.v_; return *this; }
  Rational& operator*=(const Rational& y) { v_ *= y.v_; return *this; }
  Rational& operator/=(const Rational& y) {
    if (y.is_zero()) throw Error("Rational: division by zero");
    v_ /= y.v_;
    return *this;
  }

  friend bool operator==(const Rational& x, const Rational& y) { return x.v_ == y.v_; }
  friend bool operator!=(const Rational& x, const Rational& y) { return x.v_ != y.v_; }
  friend bool operator<(const Rational& x, const Rational& y) { return x.v_ < y.v_; }
  friend bool operator<=(const Rational& x, const Rational& y) { return x.v_ <= y.v_; }
  friend bool operator>(const Rational& x, const Rational& y) { return x.v_ > y.v_; }
  friend bool operator>=(const Rational& x, const Rational& y) { return x.v_ >= y.v_; }

  // Codec: `num` when den == 1, else `num/den`. No spaces.
  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  static Rational parse(std::string_view s) {
    std::size_t pos = 0;
    Rational r = parse_prefix(s, pos);
    if (pos != s.size()) throw Error("Rational: trailing characters in '" + std::string(s) + "'");
    return r;
  }

  // Parses a rational starting at s[pos]; advances pos past it.
  static Rational parse_prefix(std::string_view s, std::size_t& pos) {
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t dig0 = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == dig0) throw Error("Rational: expected digits at offset " + std::to_string(start));
    mpz_class num(std::string(s.substr(start, pos - start)), 10);
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      std::size_t den0 = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == den0) throw Error("Rational: expected denominator digits");
      mpz_class den(std::string(s.substr(den0, pos - den0)), 10);
      return Rational(num, den);
    }
    return Rational(num);
  }

 private:
  struct NoCanon {};
  Rational(mpq_class q, NoCanon) : v_(std::move(q)) {}  // arithmetic results are canonical
  mpq_class v_;
};

inline Rational pow(const Rational& base, unsigned e) {
  Rational r(1), b = base;
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

}  // namespace cgsik
