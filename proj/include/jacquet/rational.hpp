#pragma once

// Exact rational arithmetic. Values are always canonical: reduced fraction,
// positive denominator. Backed by GMP.

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace jacquet {

class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(static_cast<long>(n)) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parse "p" or "p/q" (arbitrary precision).
  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) {
        return Rational(mpq_class(mpz_class(s)));
      }
      mpz_class num(s.substr(0, slash));
      mpz_class den(s.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator");
      mpq_class q;
      q = mpq_class(num) / mpq_class(den);
      return Rational(q);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Exact conversion to long; nullopt if not an integer or out of range.
  std::optional<long> as_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p()) return std::nullopt;
    return v_.get_num().get_si();
  }

  Rational floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return Rational(mpq_class(q));
  }

  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  const mpq_class& raw() const { return v_; }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  mpq_class v_;
};

/// Exact square root; nullopt if the value is not a perfect square.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  const mpz_class num = r.raw().get_num();
  const mpz_class den = r.raw().get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  return Rational(mpq_class(mpq_class(sn) / mpq_class(sd)));
}

}  // namespace jacquet
