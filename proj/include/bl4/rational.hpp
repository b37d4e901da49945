// Exact rational scalars: the coefficient field of every computation here.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace bl4 {

// Arbitrary-precision fraction, always stored reduced with positive
// denominator. mpq_class does the arithmetic; this wrapper exists to make the
// canonical form a type invariant (raw mpq_class leaves 2/4 unreduced until
// someone remembers to canonicalize) and to pin the "p/q" text format.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}
  Rational(long n) : q_(n) {}
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  explicit Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  // Accepts an optional sign, digits, and an optional "/digits" part.
  static Rational parse(const std::string& text);

  // "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }

  bool is_zero() const { return q_ == 0; }
  int sign() const { return sgn(q_); }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1) / q_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.q_ + b.q_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.q_ - b.q_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.q_ * b.q_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.q_ / b.q_);
  }
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& b) { q_ += b.q_; return *this; }
  Rational& operator-=(const Rational& b) { q_ -= b.q_; return *this; }
  Rational& operator*=(const Rational& b) { q_ *= b.q_; return *this; }
  Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  mpq_class q_;
};

inline Rational Rational::parse(const std::string& text) {
  // mpq_class's own string constructor accepts forms like "0x1f" and
  // whitespace-padded input; the document format is stricter, so validate the
  // shape by hand before handing over the digits.
  auto bad = [&]() -> std::runtime_error {
    return std::runtime_error("Rational: cannot parse \"" + text + "\"");
  };
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t digits0 = i;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
  if (i == digits0) throw bad();
  if (i == text.size()) {
    Rational r;
    r.q_ = mpq_class(text);
    r.q_.canonicalize();
    return r;
  }
  if (text[i] != '/') throw bad();
  std::size_t digits1 = ++i;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
  if (i == digits1 || i != text.size()) throw bad();
  mpz_class den(text.substr(digits1));
  if (den == 0) throw bad();
  Rational r;
  r.q_ = mpq_class(mpz_class(text.substr(0, digits1 - 1)), den);
  r.q_.canonicalize();
  return r;
}

inline std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

// Exact square root when one exists in the rationals. A reduced nonnegative
// p/q is a square iff p and q are both perfect squares.
inline std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  if (!mpz_perfect_square_p(r.num().get_mpz_t()) ||
      !mpz_perfect_square_p(r.den().get_mpz_t()))
    return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), r.num().get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), r.den().get_mpz_t());
  return Rational(sn, sd);
}

}  // namespace bl4
