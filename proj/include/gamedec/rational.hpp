#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace gamedec {

/// Exact rational number. Stored in canonical form: reduced, denominator > 0.
/// Every constructor canonicalizes; arithmetic preserves canonical form.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
  Rational(int n) : v_(n) {}                             // NOLINT
  Rational(long num, long den);
  explicit Rational(mpq_class v);
  Rational(mpz_class num, mpz_class den);

  const mpq_class& value() const { return v_; }
  mpq_srcptr mpq() const { return v_.get_mpq_t(); }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  mpz_srcptr numerator_raw() const { return mpq_numref(v_.get_mpq_t()); }
  mpz_srcptr denominator_raw() const { return mpq_denref(v_.get_mpq_t()); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return mpz_cmp_ui(denominator_raw(), 1) == 0; }
  int sign() const { return sgn(v_); }

  Rational abs() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.mpq(), b.mpq()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = mpq_cmp(a.mpq(), b.mpq());
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  /// Canonical text form: "p" for integers, "p/q" otherwise, '-' attached to p.
  std::string str() const { return v_.get_str(); }

  /// Strict parse of the entry grammar: optional '-', digits, optional '/' digits.
  /// Rejects zero denominators, stray signs, whitespace, empty digit runs.
  static std::optional<Rational> parse(std::string_view text);

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace gamedec
